"""Builds the optional Cython fixed-point kernels.

The package works without them (pure-Python fallback selected at import);
any build failure here degrades to a plain install instead of aborting.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/circlelog/_fastkernels.pyx",
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # no Cython or no compiler: fall back to pure Python
    print(f"skipping compiled kernels ({exc}); pure-Python backend will be used")
    ext_modules = []

setup(ext_modules=ext_modules)
