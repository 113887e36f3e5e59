import pathlib
from typing import List

from pkg_resources import parse_requirements
from setuptools import find_packages, setup

HERE = pathlib.Path(__file__).parent.resolve()


def read_requirements(name: str) -> List[str]:
    lines = (HERE / name).read_text(encoding="utf-8").splitlines()
    return [str(requirement) for requirement in parse_requirements(lines)]


setup(
    name="nugg",
    description="Non-uniform geometric graphs with hubs and their graph shift operators",
    use_scm_version=True,
    setup_requires=["setuptools_scm"],
    packages=find_packages(include=["nugg", "nugg.*"]),
    install_requires=read_requirements("requirements.txt"),
    package_data={"nugg": ["py.typed"]},
    python_requires=">=3.8",
    long_description_content_type="text/markdown",
    long_description=(HERE / "README.md").read_text(encoding="utf-8"),
    extras_require={
        "dev": read_requirements("requirements-dev.txt"),
    },
    entry_points={"console_scripts": ["nugg=nugg.__main__:main"]},
)
