"""
kolchin - exact computation with differential and differential-difference field extensions
"""

__version__ = "0.1.0"
