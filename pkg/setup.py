from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "regover._ckernel",
                ["src/regover/_ckernel.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    # pure-Python fallback still works without the compiled kernels
    extensions = []

setup(ext_modules=extensions)
