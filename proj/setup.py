from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

setup(
    packages=["coble"],
    package_dir={"": "python"},
    ext_modules=[
        Pybind11Extension(
            "coble._core",
            sorted(glob("src/*.cpp")) + ["bindings/module.cpp"],
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
