import os

from setuptools import Extension, setup

# The compiled witness-search kernel is optional: without it the package
# falls back to the pure-Python twin in lietriple._witness_py.
ext_modules = []
if os.environ.get("LIETRIPLE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "lietriple._speedups",
                    ["src/lietriple/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
