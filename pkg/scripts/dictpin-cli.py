#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
dictpin-cli.py

Computes the security metrics of dictionary-derived PINs
Date: 10/26
"""

import sys

from dictpin import cli

if __name__ == "__main__":
    sys.exit(cli.main())
