#!/usr/bin/env python3
"""
Main entry point for Lens Alexander.
"""

from lens_alexander.cli.commands import app
from lens_alexander.utils.logging import configure_logging


def main():
    """Run the Lens Alexander CLI."""
    configure_logging()
    app()


if __name__ == "__main__":
    main()
