"""
dictpin
=======
A Python package for measuring the security of PINs derived from
dictionary words through a keypad letter to digit mapping.

Modules:
- corpus: Reading, normalising and filtering word frequency lists.
- mapping: Keypad mappings and word to PIN translation.
- strategy: PIN distributions, blacklists, morphing and mixtures.
- metrics: Entropy, guesswork and marginal guessing metrics.
- scenario: Scenario configuration and evaluation pipeline.
- sweeps: Blacklist size sweeps.
- report: Tables, CSV and JSON rendering of the results.
- cli: Command line interface.
- utils: General utilities for paths, configuration files and sums.
- constants: Constants used in the project.
- exceptions: Exceptions raised by the package.

"""

__version__ = "0.1.0"
