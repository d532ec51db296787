#!/usr/bin/env python3

try:
    # First try to load most advanced setuptools setup.
    from setuptools import setup
except ImportError:
    # Fall back if setuptools is not installed.
    from distutils.core import setup

# Do setup
setup(
    name='infoaging',
    version='0.1.0',
    description='Closed-form remote-estimation error of noisy Gaussian AR(p) sources versus Age of Information.',
    author='infoaging developers',
    url='',
    download_url='',
    license='MIT License',
    platforms='any',
    classifiers=[
        'Development Status :: 4 - Beta',
        'License :: OSI Approved :: MIT License',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Information Analysis',
    ],
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.8',
        'pydantic>=2.0',
    ],
    extras_require={
        'test': ['pytest>=7'],
        'lint': ['pyflakes', 'pycodestyle', 'autopep8'],
    },
    packages=['infoaging'],
    package_dir={
        'infoaging': 'python3/infoaging',
    },
    entry_points={
        'console_scripts': [
            'infoaging=infoaging.cli:main',
        ],
    },
)
