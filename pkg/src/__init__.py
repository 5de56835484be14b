"""Cubic Logic - Rota-Metropolis algebras, RM-logic and the faces of the n-cube"""
__version__ = "0.1.0"
