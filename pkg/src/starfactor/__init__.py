"""Star-factors of small graphs: uniformity, classification, census, weightings."""

__version__ = "0.1.0"
