#!/usr/bin/env python
from setuptools import find_packages, setup

project = "microcosm-braidreps"
version = "1.0.0"

setup(
    name=project,
    version=version,
    description="Exact braid group representations and their verification",
    long_description="q-Pascal, Tuba-Wenzl, Burau, Lawrence-Krammer and quantum group braid representations "
                     "over Laurent polynomials, with exact relation and irreducibility checks",
    author="Globality Engineering",
    author_email="engineering@globality.com",
    classifiers=[
        'Intended Audience :: Science/Research',
    ],
    keywords=[
        'microcosm',
        'braid group',
        'representation theory',
    ],
    license='Apache v2.0 License',
    platforms='Linux',
    packages=find_packages(exclude=["*.tests", "*.tests.*", "tests.*", "tests"]),
    include_package_data=True,
    zip_safe=False,
    install_requires=[
        "microcosm>=2.1.0",
        "microcosm-logging>=1.0.0",
        "sympy>=1.9",
    ],
    setup_requires=[
        "nose>=1.3.7",
    ],
    dependency_links=[
    ],
    entry_points={
        "console_scripts": [
            "braidreps = microcosm_braidreps.cli:main",
        ],
        "microcosm.factories": [
            "family_registry = microcosm_braidreps.factories:configure_family_registry",
            "braid_verifier = microcosm_braidreps.factories:configure_braid_verifier",
            "irreducibility_checker = microcosm_braidreps.factories:configure_irreducibility_checker",
            "equivalence_checker = microcosm_braidreps.factories:configure_equivalence_checker",
            "spectra_checker = microcosm_braidreps.factories:configure_spectra_checker",
        ],
    },
    tests_require=[
        "coverage>=3.7.1",
        "mock>=2.0.0",
        "PyHamcrest>=1.9.0",
    ],
)
