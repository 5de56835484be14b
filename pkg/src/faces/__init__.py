"""Faces - the n-cube model: faces as (A0, A1) pairs, their operations and orders"""
from .face import Face, Vertex, all_faces, ones, origin, whole
from .operations import FaceOps, FaceOrder

__all__ = ["Face", "Vertex", "all_faces", "ones", "origin", "whole", "FaceOps", "FaceOrder"]
