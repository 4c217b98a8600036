#!/usr/bin/python3

from setuptools import setup, find_namespace_packages

setup(
    name="Devissage",
    version="0.4.0",
    package_dir={"": "lib"},
    packages=find_namespace_packages(where="lib"),
    package_data={"Devissage.Render": ["templates/*.j2"]},
    python_requires=">=3.8",
    # Dependencies
    install_requires=[
        "commentjson>=0.8.3",
        "jinja2>=3.0",
        "mpmath>=1.2.1",
        "sympy>=1.9",
        "termcolor>=1.1.0",
    ],
    extras_require={"test": ["pytest>=7.0"]},
    # Package Metadata
    description="Torsion covers, local monodromy and Frobenius classes in SU3(F9)",
    keywords="elliptic fibration galois representation frobenius unitary group",
)
