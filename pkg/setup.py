"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the hot
convolution loops.  If the extension cannot be built (no compiler, no
Cython), installation falls back to the pure-Python kernels.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    """Build extensions if possible, otherwise continue without them."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # platform/toolchain problems
            print(f"warning: building compiled kernels failed ({exc}); "
                  "falling back to the pure-Python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} failed to compile ({exc}); "
                  "falling back to the pure-Python backend")


extensions = [Extension("qpart._kernels", ["src/qpart/_kernels.pyx"])]

if cythonize is not None and os.environ.get("QPART_NO_EXT") != "1":
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
else:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
