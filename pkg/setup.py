"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (pure-Python kernel
is selected at import time when ``rsaffine._ckernel`` is absent).
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install because the extension would not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover
            print(f"warning: skipping compiled kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print(f"warning: skipping compiled kernel {ext.name} ({exc})")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("rsaffine._ckernel", ["src/rsaffine/_ckernel.pyx"])],
        language_level=3,
    )
except ImportError:  # pragma: no cover
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
