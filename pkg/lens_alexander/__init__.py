"""
Lens Alexander Core Module.

This module computes Alexander polynomials of links in lens spaces L(p,q)
from mixed braid words, with two independent computation routes:
1. Burau Route - determinants of a Burau-type representation of the mixed braid group
2. Fox Oracle - Fox free differential calculus on a closed-braid group presentation
"""

__version__ = "0.1.0"
