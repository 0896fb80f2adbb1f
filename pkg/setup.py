"""Build script: compiles the Jacobi eigensolver extension when possible.

The compiled kernel is optional.  If Cython or a C compiler is missing the
package installs without it and `nltrace._kernels` falls back to the pure
NumPy implementation at import time.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "nltrace._kernels._jacobi",
                ["src/nltrace/_kernels/_jacobi.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    sys.stderr.write(
        f"nltrace: compiled kernel skipped ({exc!r}); "
        "the pure NumPy fallback will be used.\n"
    )
    ext_modules = []

setup(ext_modules=ext_modules)
