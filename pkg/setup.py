"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so any failure here downgrades to a pure build
instead of aborting the install.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            sys.stderr.write(f"warning: building enriphi._corekern failed ({exc}); "
                             "installing pure-Python version\n")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(f"warning: {ext.name} failed to compile ({exc}); "
                             "the NumPy fallback will be used\n")


def extensions():
    try:
        from Cython.Build import cythonize
        import numpy
    except ImportError:
        sys.stderr.write("warning: Cython/NumPy not available at build time; "
                         "skipping enriphi._corekern\n")
        return []
    ext = Extension(
        "enriphi._corekern",
        ["src/enriphi/_corekern.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level=3)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
