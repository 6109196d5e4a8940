"""CMake-driven build of the transversal_lab extension module."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp) / ext.name
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        cfg = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out_dir}",
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
            "-DTVL_BUILD_TESTS=OFF",
            "-DTVL_BUILD_PYTHON=ON",
        ]
        env_jobs = os.environ.get("CMAKE_BUILD_PARALLEL_LEVEL", "2")
        subprocess.check_call(["cmake", str(source_dir)] + cmake_args, cwd=build_dir)
        subprocess.check_call(
            ["cmake", "--build", ".", "--target", "transversal_lab", "-j", env_jobs],
            cwd=build_dir,
        )


setup(
    ext_modules=[CMakeExtension("transversal_lab")],
    cmdclass={"build_ext": CMakeBuild},
)
