# -*- coding: UTF-8 -*-

import re
from setuptools import setup, find_packages


with open('permpattern_utils/__init__.py', encoding='utf8') as fdes:
    VERSION = re.search(r'^__version__ = "(.*)"', fdes.read(), re.M).group(1)


setup(
    name='permpattern-utils',
    author="The permpattern-utils developers",
    description="Generalized permutation patterns, their avoidance classes and bijections",
    license="MIT",
    packages=find_packages(exclude=['test']),
    include_package_data=True,
    package_data={
        'permpattern_utils': [
            'permpattern_utils-requirements.txt',
            'config.schema.yaml',
            'example_config.yaml',
            'templates/*.txt',
        ],
    },
    entry_points={"console_scripts": [
        "permpattern-utils = permpattern_utils.cli:main",
    ]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires='>=3.8',
    install_requires=[
        'argh==0.26.*',
        'colorlog>=3.1',
        'tqdm>=4.26',
        'pyyaml>=5.1',
        'jsonschema>=2.6',
        'boltons>=18',
        'networkx>=2.0',
        'pandas>=0.23',
        'jinja2>=2.10',
        'setuptools',
        'regex>=2018.08.29',
    ],
    version=VERSION,
)
