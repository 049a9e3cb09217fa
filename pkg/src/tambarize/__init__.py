"""Tambarization of semi-Mackey functors on finite groups, with crossed Burnside
rings, string rings and the adjunctions relating them."""
from .errors import (BaseMismatch, GroupTooLarge, LemmaViolated, NontrivialQUnsupported, SpecError,
                     TambarizeError)
from .groups import FiniteGroup, build_group, cyclic, dihedral, symmetric
from .gsets import GMap, GSet, coset_space, dependent_product, iso_over, pullback
from .monoids import GMonoid, MonoidTable, build_monoid, sign_action, trivial_action
from .mackey import (SemiMackeyData, check_axioms, ell_functor, fixed_point_functor,
                     trivial_functor)
from .tambara import BasicClass, RingElt, SemiRingElt, Tambarization, k0
from .crossed import CrossedBurnside, cbr_iso
from .strings import elliott_iso, monoid_ring, string_ring, witt_burnside
from .presentation import RingPresentation, present

__all__ = [
    "FiniteGroup", "build_group", "cyclic", "dihedral", "symmetric",
    "GMap", "GSet", "coset_space", "dependent_product", "iso_over", "pullback",
    "GMonoid", "MonoidTable", "build_monoid", "sign_action", "trivial_action",
    "SemiMackeyData", "check_axioms", "ell_functor", "fixed_point_functor", "trivial_functor",
    "BasicClass", "RingElt", "SemiRingElt", "Tambarization", "k0",
    "CrossedBurnside", "cbr_iso",
    "elliott_iso", "monoid_ring", "string_ring", "witt_burnside",
    "RingPresentation", "present",
    "BaseMismatch", "GroupTooLarge", "LemmaViolated", "NontrivialQUnsupported", "SpecError",
    "TambarizeError",
]
