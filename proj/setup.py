import shutil
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
        source = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        args = [
            "-DCHORDLESS_BUILD_TESTS=OFF",
            "-DCHORDLESS_BUILD_CLI=OFF",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        try:
            import pybind11

            args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass  # fall back to a system-wide pybind11 config

        subprocess.run(["cmake", "-S", str(source), "-B", str(build_dir)] + args,
                       check=True)
        subprocess.run(["cmake", "--build", str(build_dir), "--target", "_chordless",
                        "--parallel"], check=True)

        built = list((build_dir / "python" / "chordless").glob("_chordless.*"))
        if not built:
            raise RuntimeError("cmake did not produce the _chordless module")
        dest = Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], dest)


setup(
    ext_modules=[CMakeExtension("chordless._chordless")],
    cmdclass={"build_ext": CMakeBuild},
)
