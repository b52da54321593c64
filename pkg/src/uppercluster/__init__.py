"""Finite presentations of upper cluster algebras from seed data."""

__version__ = "0.1.0"
