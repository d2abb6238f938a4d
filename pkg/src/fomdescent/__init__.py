"""Fields of moduli and Galois descent for hyperelliptic and smooth plane curves."""
__version__ = "0.1.0"
