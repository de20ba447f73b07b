"""Build script: compiles the optional Cython kernel lane.

The compiled kernels run on raw GMP integers through gmpy2's C API, so
the extension needs the gmpy2 headers (shipped inside the installed
gmpy2 package) and links against libgmp. The package is fully functional
without the extension (a pure-Python lane is selected at import time),
so a failed compile only costs speed. Set UVCORE_NO_EXT=1 to skip the
extension build entirely.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if not os.environ.get("UVCORE_NO_EXT"):
    try:
        import gmpy2
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        gmpy2_dir = os.path.dirname(gmpy2.__file__)
        ext_modules = cythonize(
            [
                Extension(
                    "uvcore._kernels.ckernels",
                    ["src/uvcore/_kernels/ckernels.pyx"],
                    include_dirs=[gmpy2_dir],
                    libraries=["gmp"],
                )
            ],
            language_level=3,
        )
    except Exception as exc:  # pragma: no cover - build-environment dependent
        sys.stderr.write(
            "uvcore: Cython kernel build skipped (%s); "
            "falling back to pure-Python kernels\n" % exc
        )
        ext_modules = []

setup(ext_modules=ext_modules)
