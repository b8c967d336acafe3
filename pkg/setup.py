from setuptools import (find_packages, setup)

import os


here = os.path.abspath(os.path.dirname(__file__))
version = {}
with open(os.path.join(here, '__version__.py')) as f:
    exec(f.read(), version)


def readme():
    with open('README.rst') as f:
        return f.read()


setup(
    name='cylnet',
    version=version['__version__'],
    description='Recurrences of path counts in cylindrical networks',
    license='Apache-2.0',
    keywords='combinatorics lattice paths Lindstrom-Gessel-Viennot plethysm',
    long_description=readme() + '\n\n',
    long_description_content_type='text/x-rst',
    packages=find_packages(exclude=['test', 'test.*', 'examples', 'examples.*']),
    classifiers=[
        'License :: OSI Approved :: Apache Software License',
        'Intended Audience :: Science/Research',
        'programming language :: python :: 3.8',
        'development status :: 4 - Beta',
        'topic :: scientific/engineering :: mathematics'
    ],
    python_requires='>=3.8',
    install_requires=[
        'numpy', 'schema', 'pyyaml>=5.1', 'noodles>=0.3.3', 'pyparsing>=3.0',
        'networkx>=2.8', 'sympy>=1.9'
    ],
    extras_require={
        'test': ['coverage', 'pytest>=3.9', 'pytest-cov'],
        'doc': ['sphinx', 'sphinx-autodoc-typehints', 'sphinx_rtd_theme']
    },
    entry_points={
        'console_scripts': ['cylnet=cylnet.workflows.cli:main']
    },
    scripts=['scripts/cli/cylnet.py']
)
