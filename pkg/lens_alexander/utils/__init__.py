"""
Utilities package for Lens Alexander.
"""
