from setuptools import setup, find_packages

# read the contents of your README file (https://packaging.python.org/en/latest/guides/making-a-pypi-friendly-readme/)
from pathlib import Path
this_directory = Path(__file__).parent
readme = (this_directory / "README.md").read_text()

setup(
    name='entwine',
    version='0.1.0',
    description='Certificates for entwining structures over small linear categories',
    license='BSD',
    packages=find_packages(include=['entwine', 'entwine.*']),
    install_requires=['numpy'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['entwine=entwine.cli:main']},
    long_description=readme,
    long_description_content_type="text/markdown"
)
