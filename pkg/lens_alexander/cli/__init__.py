"""
CLI package for Lens Alexander.
"""
