"""Cutting blocking sets in PG(r,q) and their minimal linear codes.

Exact-arithmetic constructions of four families of cutting blocking sets,
exhaustive verification of the cutting / minimality / blocking / saturating
properties by hyperplane scans, and the derived codes with their weight
distributions.
"""

__version__ = "0.1.0"
