"""CMake-driven extension build: one cmake configure/build/install per wheel.

The cmake install step (SKBUILD mode) lays out qcslab/ inside build_lib with
the compiled _core module next to the pure-python files, so the wheel is just
that tree. For development builds prefer the plain CMake build and point
PYTHONPATH at <build>/python instead of an editable install.
"""

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
        import pybind11

        source_dir = Path(__file__).resolve().parent
        prefix = Path(self.get_ext_fullpath(ext.name)).resolve().parent.parent
        build_temp = Path(self.build_temp).resolve() / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_temp),
                "-DSKBUILD=ON",
                "-DCMAKE_BUILD_TYPE=" + os.environ.get("QCSLAB_BUILD_TYPE", "Release"),
                "-Dpybind11_DIR=" + pybind11.get_cmake_dir(),
                "-DPython_EXECUTABLE=" + sys.executable,
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_temp), "--target", "qcs_bindings"],
            check=True,
        )
        subprocess.run(
            ["cmake", "--install", str(build_temp), "--prefix", str(prefix)],
            check=True,
        )


setup(ext_modules=[CMakeExtension("qcslab._core")], cmdclass={"build_ext": CMakeBuild})
