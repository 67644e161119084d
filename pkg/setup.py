import os

from setuptools import setup, find_packages


def read(*paths):
    """Build a file path from *paths* and return the contents."""
    with open(os.path.join(*paths), 'r', encoding='utf-8') as f:
        return f.read()

setup(
    name='qflag',
    version='0.1',
    description='symbolic verification of Hopf *-algebra computations on the quantum flag manifold',
    long_description=read('README.rst'),
    license='MIT',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=find_packages(exclude=['tests*']),
    package_data={
        'qflag.presentations': ['data/*.qfa'],
        'qflag.dsl': ['data/*.qfa'],
    },
    python_requires='>=3.8',
    install_requires=['sympy>=1.9'],
    entry_points={
        'console_scripts': ['qflag=qflag.cli:main'],
    },
)
