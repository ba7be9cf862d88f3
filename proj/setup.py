import glob
import shutil
from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

root = Path(__file__).parent

# Ship the fixed-point fixture inside the package; data/ stays the source
# of truth (the file is checksummed, so drift is detected at load time).
pkg_data = root / "python" / "cmrees" / "data"
pkg_data.mkdir(exist_ok=True)
shutil.copyfile(root / "data" / "g4_fixture.txt", pkg_data / "g4_fixture.txt")

ext = Pybind11Extension(
    "cmrees._cmrees",
    sources=sorted(glob.glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
