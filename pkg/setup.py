"""Build script for the optional compiled lattice core.

The package works without the extension (a pure-Python twin is selected at
import time), so compilation failures only cost speed, not functionality.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the speedup extension if possible; never fail the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler/toolchain missing
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: building soclekit._speedups failed ({exc}); "
              "falling back to the pure-Python kernels")


def extensions():
    if os.environ.get("SOCLEKIT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "soclekit._speedups",
        ["src/soclekit/_speedups.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
