from setuptools import setup, find_packages
with open('README.md') as f:
    long_description = f.read()

setup(
    name="polyvis",
    version="0.1.0",
    author="The polyvis authors",
    description="Visible lattice points along polynomial lines of sight",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="GPLv3+",
    classifiers=[
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Environment :: Console"
    ],
    python_requires=">=3.10",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "Click>=8.0,<9.0",
        "tabulate",
        "PyYaml",
        "click-option-group>=0.5.2",
        "numpy",
        "mpmath",
        "sympy"
    ],
    extras_require={
        "test": [
            "pytest"
        ],
        "docs": [
            "Sphinx",
            "sphinx-click",
            "pydata-sphinx-theme",
            "myst-parser"
        ],
    },
    entry_points="""
        [console_scripts]
        polyvis=polyvis.cli:root
    """,
)
