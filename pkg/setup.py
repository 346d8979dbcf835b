import os
import re

from setuptools import find_packages, setup

DEV_REQUIREMENTS = [
    # lint
    "flake8<6",
    "isort<6",
    "black>=22.3",
    "flake8-bugbear",
    "mypy",
    # tests
    "pytest>=6",
    "pytest-cov",
    "pytest-xdist",
    # loading test fixture data
    "ruamel.yaml>=0.16.12",
]


def parse_version():
    # single source of truth for package version
    version_string = ""
    version_pattern = re.compile(r'__version__ = "([^"]*)"')
    with open(os.path.join("src", "turnwkb", "version.py")) as f:
        for line in f:
            match = version_pattern.match(line)
            if match:
                version_string = match.group(1)
                break
    if not version_string:
        raise RuntimeError("Failed to parse version information")
    return version_string


def read_readme():
    with open("README.rst") as fp:
        return fp.read()


setup(
    name="turnwkb",
    version=parse_version(),
    packages=find_packages("src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "click>=8.0.0,<9",
        "jmespath>=0.10.0",
        # numerics
        "numpy>=1.20",
        "scipy>=1.7",
        "mpmath>=1.2",
    ],
    extras_require={"development": DEV_REQUIREMENTS},
    entry_points={"console_scripts": ["turnwkb = turnwkb:main"]},
    # descriptive info, non-critical
    description=(
        "Hybrid Airy / parabolic-cylinder and WKB-marching solver for "
        "Schrodinger scattering problems with a turning point"
    ),
    long_description=read_readme(),
    keywords=["wkb", "turning point", "schrodinger", "airy", "semiclassical"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: POSIX",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
