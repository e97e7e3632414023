import os

from setuptools import Extension, setup

# The compiled row-reduction kernel is optional: the package falls back to
# the pure-Python implementation in cmtype._rref_py when the extension is
# missing.  Set CMTYPE_NO_EXTENSION=1 to skip building it.
ext_modules = []
if not os.environ.get("CMTYPE_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cmtype._rref", ["src/cmtype/_rref.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
