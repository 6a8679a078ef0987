"""
Integration tests for Lens Alexander.
"""
