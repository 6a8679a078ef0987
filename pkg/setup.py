from setuptools import setup, find_packages

setup(
    name="lens-alexander",
    version="0.1.0",
    packages=find_packages(include=["lens_alexander", "lens_alexander.*"]),
    entry_points={
        "console_scripts": [
            "lens-alex=lens_alexander.cli.commands:app",
        ],
    },
)
