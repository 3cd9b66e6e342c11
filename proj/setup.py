# Compiles the C++ core and the bindings into photonsub._core. Eigen is
# header-only; point EIGEN3_INCLUDE_DIR at a checkout if it is not in the
# default system location.

import os
from glob import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("MAX_JOBS", default=4).install()

eigen_include = os.environ.get("EIGEN3_INCLUDE_DIR", "/usr/include/eigen3")

ext = Pybind11Extension(
    "photonsub._core",
    sources=sorted(glob("src/*.cpp")) + ["python/module.cpp"],
    include_dirs=["include", "vendor", eigen_include],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
