from setuptools import setup, find_packages
from pathlib import Path


# Function to read requirements.txt
def read_requirements():
    requirements_file = Path(__file__).parent / "requirements.txt"
    with requirements_file.open(encoding="utf-8") as f:
        return f.read().splitlines()


setup(
    name="dictpin",
    version="0.1.0",
    description="A Python package for measuring the entropy, guesswork"
    " and marginal guessing metrics of PINs derived from dictionary words.",
    long_description=open("README.md", "r", encoding="utf-8").read(),
    long_description_content_type="text/markdown",  # Use Markdown for README
    license="Apache License 2.0",  # License type
    packages=find_packages(exclude=["tests"]),
    python_requires=">=3.10",  # Minimum Python version required
    install_requires=read_requirements(),
    entry_points={
        "console_scripts": [
            "dictpin=dictpin.cli:main",
        ],
    },
    zip_safe=True,
)
