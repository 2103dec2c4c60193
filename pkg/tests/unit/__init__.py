"""Unit test package for unittest discovery."""

