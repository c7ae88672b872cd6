from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; the fallback kernels are used
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sl2bi.exactlinalg._kernels_c",
                ["src/sl2bi/exactlinalg/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
