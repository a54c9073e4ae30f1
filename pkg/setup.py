"""Build script: compiles the tree-sweep kernel when Cython and a C compiler
are available, otherwise the package falls back to the pure-Python kernel at
import time."""

import setuptools
from setuptools import Extension, setup

# setuptools older than 61 ignores [project] metadata and silently installs a
# broken UNKNOWN-0.0.0 distribution; refuse instead. This matters only with
# --no-build-isolation, where the requires list in pyproject.toml is not
# enforced (Ubuntu 22.04 venvs bundle setuptools 59, for example).
_major = int(setuptools.__version__.split(".")[0])
if _major < 61:
    raise SystemExit(
        f"setuptools {setuptools.__version__} cannot read pyproject metadata; "
        "upgrade to setuptools>=61 (pyproject.toml asks for >=68)"
    )

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("pathgraph._sweep", ["src/pathgraph/_sweep.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

try:
    setup(ext_modules=ext_modules)
except SystemExit:
    # No working C toolchain: install pure-Python only.
    setup(ext_modules=[])
