"""Supersingular L-packets of pro-p Iwahori-Hecke algebras of SL_n, their
closed-form counts, and the matching projective mod-p Galois classes."""

from .characters import (
    LPacket,
    SupersingularCharacter,
    all_packets,
    enumerate_supersingular,
    is_regular,
    omega_act,
    packet_of,
)
from .counting import g_closed, h_closed
from .errors import BudgetExceeded, TheoremViolation
from .galois import ProjectiveClass, projective_classes
from .gk import r_of, verify_wbij

__all__ = [
    "BudgetExceeded",
    "LPacket",
    "ProjectiveClass",
    "SupersingularCharacter",
    "TheoremViolation",
    "all_packets",
    "enumerate_supersingular",
    "g_closed",
    "h_closed",
    "is_regular",
    "omega_act",
    "packet_of",
    "projective_classes",
    "r_of",
    "verify_wbij",
]
