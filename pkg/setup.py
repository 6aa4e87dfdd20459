"""Build the optional compiled kernels; the package falls back to pure Python without them."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # Cython missing: install the pure-Python package only
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "dickson_dyn._ckernels",
                ["src/dickson_dyn/_ckernels.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
