"""Build script.  The compiled term kernel is optional: if Cython or a C
compiler is missing the package installs anyway and falls back to the pure
Python kernel at import time."""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

_BUILD_ERRORS = (CCompilerError, ExecError, PlatformError, FileNotFoundError)


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except _BUILD_ERRORS as exc:
            print(f"skipping compiled kernel ({exc}); pure Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except _BUILD_ERRORS as exc:
            print(f"skipping {ext.name} ({exc}); pure Python fallback will be used")


ext_modules = []
if os.environ.get("POLYDEGEN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("polydegen._kernels", ["src/polydegen/_kernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
