from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # The extension is optional: the package falls back to the pure-Python
    # kernels when the compiled module is unavailable.
    kernels = Extension(
        "dsfusion._kernels",
        ["src/dsfusion/_kernels.pyx"],
        language="c++",
        extra_compile_args=["-O3", "-ffp-contract=off"],
        optional=True,
    )
    ext_modules = cythonize([kernels], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
