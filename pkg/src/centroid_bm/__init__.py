"""Exact certification of the centroid Banach-Mazur distance between the square and the triangle."""

__version__ = "0.1.0"
