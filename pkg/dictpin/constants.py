#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
constants.py

Constants for the dictpin package
Date: 10/26
"""

# Define global constants
CORPUS_ENV_VAR = "DICTPIN_CORPUS_DIR"
SUBTLEXUS_ENV_VAR = "DICTPIN_SUBTLEXUS"  # Used by the reproduction tests
SUBTLEXNL_ENV_VAR = "DICTPIN_SUBTLEXNL"
DEFAULT_CORPORA = {  # File names looked up in the corpus directory
    "subtlexus": "subtlexus.tsv",
    "subtlexnl": "subtlexnl.tsv",
    "opensub": "opensub.tsv",
}

# Scenario defaults
ALPHA = 0.5
BETA = 6
SECONDARY_BETA = 3
TOP_M = 10
MIN_COUNT = 1.0
PIN_LENGTH = 4
MAX_PIN_LENGTH = 9
MIX_WEIGHT = 0.5
SWEEP_MAX = 100
SWEEP_STEP = 1
MC_SAMPLES = 0
MC_SEED = 0
DIGITS = "0123456789"
STRATEGIES = ("basic", "prefix")
BLACKLIST_MODES = ("pin", "word")
OUTPUT_FORMATS = ("table", "csv", "json")

# Numerical tolerances
SUM_TOLERANCE = 1e-9
TOTAL_REL_TOLERANCE = 1e-12

# Keypad layouts, digit -> letters
STANDARD_KEYPAD = {
    "2": "abc",
    "3": "def",
    "4": "ghi",
    "5": "jkl",
    "6": "mno",
    "7": "pqrs",
    "8": "tuv",
    "9": "wxyz",
}
STRETCHED_KEYPAD = {
    "1": "ab",
    "2": "cd",
    "3": "ef",
    "4": "ghi",
    "5": "jkl",
    "6": "mn",
    "7": "opq",
    "8": "rst",
    "9": "uvw",
    "0": "xyz",
}

# Frequency list presets (separator, word column, count column, header)
LIST_FORMATS = {
    "tsv": ("\t", 0, 1, False),
    "csv": (",", 0, 1, False),
    "subtlex": ("\t", 0, 1, True),  # Word, FREQcount, CDcount, ...
}

# Published values, only used for delta reporting in the tables command.
# Metric keys: H1 and the bit conversions in bits, lambda_6 in percent.
PUBLISHED_IDEAL = {  # Uniform over the standard-mapping PIN space
    4: {"entropy_bits": 12.00, "guesswork_bits": 12.00,
        "marginal_guesswork_bits": 12.00, "marginal_success": 0.15},
    5: {"entropy_bits": 15.00, "guesswork_bits": 15.00,
        "marginal_guesswork_bits": 15.00, "marginal_success": 0.02},
}
PUBLISHED_TABLE1 = {  # Straightforward construction, standard mapping
    ("subtlexus", 4): (7.23, 7.18, 5.52, 23.93),
    ("subtlexus", 5): (8.42, 8.63, 6.58, 19.24),
    ("opensub", 4): (7.42, 7.49, 5.64, 22.80),
    ("opensub", 5): (8.88, 9.45, 6.92, 17.34),
}
PUBLISHED_TABLE3 = {  # SUBTLEXus, modified constructions
    ("stretched", 4): (7.28, 7.28, 5.52, 24.04),
    ("stretched", 5): (8.43, 8.67, 6.58, 19.31),
    ("prefix", 4): (9.03, 8.89, 7.56, 11.30),
    ("prefix", 5): (10.36, 10.39, 8.77, 8.01),
    ("morphing", 4): (11.08, 10.73, 9.88, 2.77),
    ("morphing", 5): (12.96, 12.84, 11.53, 2.17),
}
PUBLISHED_TABLE4 = {  # (method, n, blacklist size) -> (H1, lambda_6)
    ("prefix", 4, 0): (9.03, 11.30),
    ("prefix", 4, 10): (9.37, 6.62),
    ("prefix", 4, 20): (9.53, 4.69),
    ("prefix", 5, 0): (10.36, 8.01),
    ("prefix", 5, 10): (10.68, 4.28),
    ("prefix", 5, 20): (10.82, 2.95),
    ("morphing", 4, 0): (11.08, 2.77),
    ("morphing", 4, 10): (11.15, 1.74),
    ("morphing", 4, 20): (11.19, 1.56),
    ("morphing", 5, 0): (12.96, 2.17),
    ("morphing", 5, 10): (13.06, 0.97),
    ("morphing", 5, 20): (13.09, 0.85),
}
PUBLISHED_TABLE5 = {  # SUBTLEXus + SUBTLEXnl, dictionary chosen with p = 1/2
    ("basic", 4): (7.84, 7.72, 6.24, 18.00),
    ("basic", 5): (9.35, 9.41, 7.63, 11.07),
    ("prefix", 4): (9.62, 9.37, 8.27, 7.78),
    ("prefix", 5): (11.21, 11.09, 9.68, 4.37),
    ("prefix-bl10", 4): (9.84, 9.50, 8.55, 4.09),
    ("prefix-bl10", 5): (11.37, 11.17, 9.85, 2.32),
}
# Cited from earlier work, not reproducible from frequency lists
UNIFORM_DICTIONARY = {
    4: (11.28, 10.94, 10.61, 0.85),
    5: (13.37, 13.08, 12.68, 0.33),
}
ROCKYOU_DICTIONARY = {  # H1 and G~ not reported
    4: (None, None, 9.20, 10.81),
    5: (None, None, 10.76, 8.46),
}
COMMON_PINS = {  # PIN length 4
    "rockyou": (10.74, 11.50, 9.11, 12.29),
    "iphone": (11.42, 11.83, 10.37, 12.39),
}
NIST_ENTROPY = {4: 9, 5: 10}
TABLE_METRICS = (
    "entropy_bits",
    "guesswork_bits",
    "marginal_guesswork_bits",
    "marginal_success",
)
