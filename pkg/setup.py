from setuptools import setup, find_packages
from lectl import __version__

setup(
    # mandatory
    name='lectl',
    # mandatory
    version=__version__,
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={},
    python_requires='>=3.7',
    install_requires=['click>=7.0', 'numpy', 'pandas>=1.5', 'scipy'],
    entry_points={
        'console_scripts': ['lectl = lectl.cli:cli']
    }
)
