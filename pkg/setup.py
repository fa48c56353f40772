from setuptools import setup

setup(
    name='aegis',
    version='0.1dev',
    author='the aegis developers',
    license='GPL3',
    description='Optimal filter allocation against distributed denial-of-service floods',
    packages = ['aegis',
                'aegis.analysis',
                'aegis.data_objects',
                'aegis.oracle',
                'aegis.scenarios',
                'aegis.solvers',
                'aegis.tests',
                'aegis.utils'],
    python_requires = '>=3.8',
    install_requires = ['numpy', 'h5py'],
    extras_require = {'mpi': ['mpi4py'],
                      'test': ['pytest', 'hypothesis']},
    entry_points = {'console_scripts': ['aegis = aegis.analysis.cli:main']},
    )
