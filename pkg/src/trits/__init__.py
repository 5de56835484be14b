"""Trit Core - the three-element domain and its pointwise operations"""
from .trit import Trit, TRITS
from .operations import TritOps

__all__ = ["Trit", "TRITS", "TritOps"]
