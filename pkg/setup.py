"""Build hook for the optional compiled kernels.

The package works without the extension (pure-Python fallback); any failure
to cythonize or compile downgrades to a warning instead of breaking install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping {ext.name}: {exc}")


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available, installing pure-Python only")
        return []
    return cythonize(
        [Extension("boolhood._kernels", ["src/boolhood/_kernels.pyx"])],
        compiler_directives={"language_level": 3},
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": _OptionalBuildExt})
