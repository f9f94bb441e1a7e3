from setuptools import setup, Extension

# The compiled kernel is optional: hexcrc.kernels falls back to the pure
# Python implementation when the extension is absent.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    extensions = [
        Extension(
            "hexcrc._core",
            ["src/hexcrc/_core.pyx"],
            extra_compile_args=["-O3"],
        )
    ]
    ext_modules = cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
