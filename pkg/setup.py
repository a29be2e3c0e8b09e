from setuptools import find_packages, setup

from kellyminors import version

setup(
    name="kellyminors",
    version=version,
    description="Directed minors, Kelly-width and the forbidden minors of partial 1-DAGs",
    license="Apache License",
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    keywords="digraph directed minor kelly-width elimination ordering",
    packages=find_packages(include=["kellyminors", "kellyminors.*"]),
    include_package_data=True,
    install_requires=[
        "networkx>=2.6",
        "numpy>=1.17",
    ],
    extras_require={
        "test": [
            "hypothesis",
            "pytest",
        ],
    },
    entry_points={
        "console_scripts": [
            "kellyminors=kellyminors.cli:main",
        ],
    },
)
