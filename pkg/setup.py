import sys
from pathlib import Path

from setuptools import setup

if sys.version_info[0:2] < (3, 7):
    raise RuntimeError("This package requires Python 3.7+.")

setup(
    name="bigraded-pd",
    use_scm_version={
        "version_scheme": "guess-next-dev",
        "local_scheme": "dirty-tag"
    },
    packages=[
        "bigradedpd",
        "bigradedpd.poset",
        "bigradedpd.complex",
        "bigradedpd.matrix",
        "bigradedpd.sweep",
        "bigradedpd.cli"
    ],
    license="MIT",
    author="Laura Dickinson",
    author_email="l@veriny.tf",
    description="Generalized persistence diagrams of bifiltrations, by a birth-curve sweep",
    long_description=Path(__file__).with_name("README.rst").read_text(encoding="utf-8"),
    setup_requires=[
        "setuptools_scm",
        "pytest-runner"
    ],
    install_requires=[
        "cached_property>=1.3.0",
        "click",
        "tqdm",
        "numpy>=1.17",
        "galois>=0.3",
        "joblib"
    ],
    extras_require={
        "docs": [
            "sphinx>=1.5.0",
            "sphinx-autodoc-typehints>=1.2.1",
            "guzzle_sphinx_theme",
        ]
    },
    tests_require=[
        "pytest",
        "pytest-cov"
    ],
    python_requires=">=3.7",
    entry_points={
        "console_scripts": ["bigraded-pd=bigradedpd.cli.tool:cli"]
    }
)
