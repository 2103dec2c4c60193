"""Command-line interface."""
