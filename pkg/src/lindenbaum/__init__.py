"""Lindenbaum - Mod(T), Lindenbaum algebras and the face correspondences"""
from .models import (
    CongruenceReport,
    LindenbaumAlgebra,
    ModSet,
    class_index,
    congruence_check,
    lind,
    lindenbaum,
    mod_set,
    restriction,
)
from .boolean import BoolTheory, bool_lind, bool_mod, bool_synthesize, boolean_points
from .correspondence import CorrespondenceReport, CorrespondenceRow, table_correspondence_check

__all__ = [
    "CongruenceReport",
    "LindenbaumAlgebra",
    "ModSet",
    "class_index",
    "congruence_check",
    "lind",
    "lindenbaum",
    "mod_set",
    "restriction",
    "BoolTheory",
    "bool_lind",
    "bool_mod",
    "bool_synthesize",
    "boolean_points",
    "CorrespondenceReport",
    "CorrespondenceRow",
    "table_correspondence_check",
]
