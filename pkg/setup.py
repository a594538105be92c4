"""Build script for the optional compiled sweep kernel.

The package is pure Python apart from ``beamlcp._kernels``, a small Cython
module holding the Gauss-Seidel sweep used by the structured solver.  If
Cython or a C compiler is unavailable the build falls back to the pure-Python
kernel; the package stays fully functional.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - exercised only on minimal hosts
    cythonize = None


class OptionalBuildExt(build_ext):
    """build_ext that degrades to the pure-Python kernel on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001 - any build failure is non-fatal
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        import warnings

        warnings.warn(
            f"compiled kernel build failed ({exc!r}); "
            "falling back to the pure-Python sweep kernel",
            stacklevel=1,
        )


if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "beamlcp._kernels",
                ["src/beamlcp/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:  # pragma: no cover
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
