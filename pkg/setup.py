from setuptools import Extension, setup
from Cython.Build import cythonize

# -fno-builtin-sin/-cos: stops GCC's cse_sincos pass from merging the
# Box-Muller sin/cos pair into one sincos() call, which can differ from the
# separate calls by 1 ulp and would break bit-parity with the pure lane.
# -ffp-contract=off: no FMA contraction, for the same reason.
ext = Extension(
    "pointforge.kernel._native",
    ["src/pointforge/kernel/_native.pyx"],
    extra_compile_args=[
        "-O3",
        "-ffp-contract=off",
        "-fno-builtin-sin",
        "-fno-builtin-cos",
    ],
)

setup(ext_modules=cythonize([ext], language_level=3))
