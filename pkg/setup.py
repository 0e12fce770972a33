"""Build script: compiles the optional closure kernel when Cython is available.

The package is fully functional without the extension; mcgtorsion.kernels
falls back to the pure-Python implementation at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Swallow extension build failures so the pure-Python install survives."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"WARNING: extension build skipped ({exc}); using pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: building {ext.name} failed ({exc}); using pure-Python kernels")


def extensions():
    if os.environ.get("MCGTORSION_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not found; building without compiled kernels")
        return []
    return cythonize(
        [Extension("mcgtorsion._speedups", ["src/mcgtorsion/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
