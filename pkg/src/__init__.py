"""slpcheck - exact Lefschetz property checks for graded Artinian quotients."""

__version__ = "0.1.0"
