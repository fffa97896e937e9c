"""Build the optional compiled kernel extension.

The package works without it (a pure-Python fallback is selected at import
time), so a missing compiler or Cython only costs speed.
"""

from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                name="hibpool._kernels._ckern",
                sources=["src/hibpool/_kernels/_ckern.pyx"],
                include_dirs=[np.get_include()],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
