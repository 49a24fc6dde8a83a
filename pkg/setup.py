from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "polaron._kernels",
        ["src/polaron/_kernels.pyx"],
        # no fast-math or FMA contraction: results must match the Python path
        extra_compile_args=["-O2", "-ffp-contract=off"],
        libraries=["m"],
    )
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
