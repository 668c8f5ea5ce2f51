"""Build hook: compile the Cython arithmetic kernel when possible.

The package is fully functional without the extension (the pure-Python
kernel is selected at import time), so any build failure here downgrades to
a plain install instead of aborting.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("reestau.kernels._speed", ["src/reestau/kernels/_speed.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"reestau: skipping compiled kernel ({exc}); using the pure-Python fallback")

setup(ext_modules=ext_modules)
