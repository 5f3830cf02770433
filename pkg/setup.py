import setuptools
import os

with open(os.path.join(os.path.abspath(os.path.dirname(__file__)), 'README.rst'), encoding='utf-8') as f:
    readme = f.read()

with open(os.path.join(os.path.abspath(os.path.dirname(__file__)), 'requirements.txt'), encoding='utf-8') as f:
    requirements = f.read().splitlines()

setuptools.setup(
    name="maglap",
    version="0.1.0",
    description="Eigenvalues of the magnetic Dirichlet Laplacian on disks and unions of disks",
    long_description=readme,
    long_description_content_type="text/x-rst",
    license='MIT License',
    keywords=['magnetic laplacian', 'landau levels', 'kummer function',
              'confluent hypergeometric', 'polya conjecture', 'riesz means'],
    packages=setuptools.find_packages(exclude=['test']),
    package_data={'maglap': ['configs.yaml']},
    install_requires=requirements,
    entry_points={
        'console_scripts': ['maglap=maglap.cli:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "License :: OSI Approved :: MIT License",
    ],
)
