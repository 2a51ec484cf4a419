from setuptools import setup, find_packages

setup(
    name='nmaps',
    version='0.1.0',
    description='Neutrosophic n-matrices, n-graphs, and cognitive and '
                'relational maps.',
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_data={'nmaps': ['data/*.nmap']},
    install_requires=['numpy>=1.10.0', 'networkx>=1.11'],
)
