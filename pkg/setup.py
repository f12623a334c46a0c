from setuptools import find_packages, setup

__version__ = "0.1.0"

with open("README.md", "r") as readme_file:
    long_description = readme_file.read()

setup(
    name="ocsm",
    packages=find_packages(exclude=["tests", "tests.*"]),
    version=__version__,
    description="Top-t overlapping cohesive subgraph mining on link-skein graphs.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=[
        "numpy>1.21",
        "pydantic>=2.8.2",
    ],
    extras_require={
        "progress": ["tqdm>4.0"],
        "wandb": ["wandb>0.15"],
        "test": ["pytest>7.0", "networkx>=3.0"],
    },
    entry_points={"console_scripts": ["ocsm = ocsm.harness.cli:main"]},
    license="Apache 2.0",
    keywords=["graph-mining", "cohesive-subgraph", "k-core", "densest-subgraph", "link-graph"],
)
