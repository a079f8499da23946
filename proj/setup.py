from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "relosim._core",
    sources=[
        "python/bindings.cpp",
        "src/stochastic.cpp",
        "src/targets.cpp",
        "src/line_transport.cpp",
        "src/plane_transport.cpp",
        "src/experiments.cpp",
        "src/oracles.cpp",
        "src/report.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
