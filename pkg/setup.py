from setuptools import setup, Extension

# The compiled core is optional: without Cython the package falls back to
# the pure-Python kernels in malmsten._pycore.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        Extension(
            "malmsten._ccore",
            ["src/malmsten/_ccore.pyx"],
            extra_compile_args=["-O2"],
        ),
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=ext_modules)
