import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BKCRYS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "bkcrys._accel._ckernel",
            ["src/bkcrys/_accel/_ckernel.pyx"],
            extra_compile_args=["-O3"],
        )
        # optional=True: a failed compile falls back to the pure-Python kernel
        ext.optional = True
        ext_modules = cythonize([ext], language_level=3)
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
