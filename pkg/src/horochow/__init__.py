"""Exact Chow and quantum cohomology rings of the G2 and Spin7 two-orbit varieties."""

__version__ = "0.1.0"
