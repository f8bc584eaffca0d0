# Copyright 2026 The anomalab Authors.

from setuptools import setup, find_packages
from setuptools.command.build_py import build_py
import json
import os
import sys


class _SchemaCheck(build_py):
    """
    Private class that checks the interpreter version and the run
    configuration schema prior to package installation.
    """

    SUPPORTED_PYTHON_VERSIONS = set(['3.9', '3.10', '3.11', '3.12'])

    SCHEMA_FILE = os.path.join('src', 'anomalab', 'schema', 'runconfig.schema.json')

    verbose = False

    # ERROR MESSAGES
    unsupported_python = "{python:s} is not supported. The supported Python versions are {supported:s}."
    schema_not_found = "Schema file not found: {path:s}"
    schema_invalid = "Schema file {path:s} is not valid JSON: {err:s}"
    schema_missing_keys = "Schema file {path:s} does not declare {keys:s}."

    def _print_if_verbose(self, msg):
        if self.verbose:
            print(msg)

    def set_python_version(self):
        """
        Gets Python version and ensures it is supported.
        """
        ver = sys.version_info
        python_ver = f"{ver.major}.{ver.minor}"
        if python_ver not in self.SUPPORTED_PYTHON_VERSIONS:
            supported = ', '.join(sorted(self.SUPPORTED_PYTHON_VERSIONS))
            raise RuntimeError(self.unsupported_python.format(python=python_ver, supported=supported))
        self._print_if_verbose(f'set_python_version found: {python_ver}')

    def verify_schema(self):
        """
        Parses the run configuration schema so that a broken file fails the
        build instead of the first command-line run.
        """
        path = os.path.join(os.getcwd(), self.SCHEMA_FILE)
        if not os.path.isfile(path):
            raise RuntimeError(self.schema_not_found.format(path=path))
        try:
            with open(path, 'r', encoding='utf-8') as f:
                schema = json.load(f)
        except ValueError as err:
            raise RuntimeError(self.schema_invalid.format(path=path, err=str(err)))
        missing = [key for key in ('properties', 'definitions') if key not in schema]
        if missing:
            raise RuntimeError(self.schema_missing_keys.format(path=path, keys=', '.join(missing)))
        self._print_if_verbose(f'verify_schema checked: {path}')

    def run(self):
        """
        Logic that runs prior to installation.
        """
        self.set_python_version()
        self.verify_schema()
        build_py.run(self)


if __name__ == '__main__':
    with open('README.md', 'r', encoding='utf-8') as rm:
        long_description = rm.read()

    setup(
        name="anomalab",
        version="1.0.0",
        description='Anomalous solutions of semilinear hyperbolic equations: exact algebra, regularization and nets',
        author='The anomalab Authors',
        license="LICENSE.txt, located in this repository",
        long_description=long_description,
        long_description_content_type="text/markdown",
        package_dir={'': 'src'},
        packages=find_packages(where="src"),
        cmdclass={'build_py': _SchemaCheck},
        package_data={'anomalab': ['schema/*.json']},
        zip_safe=False,
        install_requires=[
            "numpy>=1.22",
            "scipy>=1.8",
            "sympy>=1.11",
            "jsonschema>=4.0",
        ],
        extras_require={
            "plot": ["matplotlib>=3.5"],
            "test": ["pytest>=7.0"],
        },
        entry_points={
            "console_scripts": ["anomalab=anomalab.cli:main"],
        },
        keywords=[
            "distributions",
            "hyperbolic equations",
            "regularization",
        ],
        classifiers=[
            "Natural Language :: English",
            "Intended Audience :: Science/Research",
            "Topic :: Scientific/Engineering :: Mathematics",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Programming Language :: Python :: 3.11",
            "Programming Language :: Python :: 3.12"
        ],
        python_requires=">=3.9, <3.13"
    )
