import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GAMMA3_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("gamma3._hampath_cy", ["src/gamma3/_hampath_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
