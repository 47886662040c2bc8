""" Setup
"""
from setuptools import setup, find_packages
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

exec(open("frobenius_singularities/version.py").read())
setup(
    name="frobenius-singularities",
    version=__version__,
    description="Frobenius singularities of graded rings in characteristic p: F-purity, F-regularity and F-rationality verdicts",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        # How mature is this project? Common values are
        #   3 - Alpha
        #   4 - Beta
        #   5 - Production/Stable
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    # Note that this is a string of words separated by whitespace, not a list.
    keywords="commutative algebra groebner frobenius fedder tight closure characteristic p",
    packages=find_packages(exclude=["tests"]),
    package_data={"frobenius_singularities.cli": ["rings/*.ring"]},
    include_package_data=True,
    install_requires=["numpy", "sympy", "tqdm"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["fsing = frobenius_singularities.cli:main"]},
    python_requires=">=3.8",
    license="Apache 2.0",
)
