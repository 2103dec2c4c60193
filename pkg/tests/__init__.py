"""Test suite for slpcheck."""
