import re

import setuptools

with open("peerswarm/__init__.py", "r") as fh:
    version = re.search(r'^__version__ = "([^"]+)"', fh.read(),
                        re.MULTILINE).group(1)

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="peerswarm",
    version=version,
    license="MIT License",
    description="Referee recommendation with decaying particle swarms on co-authorship networks",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3"
    ],
    package_data={"peerswarm": ["run-config.xsd"]},
    install_requires=[
        "joblib>=1.0",
        "lxml>=4.4.1",
        "numpy>=1.17",
        "pandas>=0.25",
        "scipy>=1.6",
        "setuptools>=42"
    ],
    extras_require={
        "test": ["pytest>=7"]
    },
    python_requires=">=3.7",
    entry_points={
        "console_scripts": ["peerswarm=peerswarm.peerswarm:main"]
    }
)
