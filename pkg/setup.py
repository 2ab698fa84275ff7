import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # optional=True: a failed compile falls back to the numpy kernels.
    ext_modules = cythonize(
        [
            Extension(
                "gspcost.kernels._pauli_cy",
                ["src/gspcost/kernels/_pauli_cy.pyx"],
                include_dirs=[np.get_include()],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
