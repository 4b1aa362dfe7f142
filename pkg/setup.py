from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "netbackbone.kernels._fast",
                ["src/netbackbone/kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )
except ImportError:
    # Without Cython the package still installs; the pure-Python kernel
    # backend is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
