"""Algebra services: Groebner bases, coinvariant ideals, Lefschetz checks and export."""
