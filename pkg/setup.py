"""Build script: compiles the optional GF(p) row-reduction extension.

The package works without the extension (a pure-Python fallback is
selected at import time), so any failure here downgrades to a plain
build instead of aborting the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/quivercert/_gfcore.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - environment dependent
    print(f"quivercert: building without compiled GF(p) core ({exc})")

setup(ext_modules=ext_modules)
