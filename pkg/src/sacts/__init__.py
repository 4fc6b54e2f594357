"""Finite right acts over finite monoids: congruences, homomorphisms, and
Hopfian-type properties, with a symbolic layer for a few infinite monoids."""

from .core import (FiniteAct, FiniteMonoid, Subact, make_subact, regular_act, trivial_act,
                   trivial_monoid, validate_act, validate_monoid)
from .congruences import (Congruence, diagonal, enumerate_congruences, generated_by, join,
                          kernel, make_congruence, meet, quotient_act, rees, universal)
from .errors import (CapExceeded, ConsistencyError, InputError, ParseError, PreconditionError,
                     SactsError, ValidationError)
from .morphisms import (ActHom, compose, enumerate_endomorphisms, enumerate_homs,
                        find_isomorphism, identity_hom, image, is_isomorphic, make_hom,
                        translation)
from .properties import PROPERTIES, check, stabilization
from .verdict import Status, Verdict

__all__ = [
    "FiniteAct", "FiniteMonoid", "Subact", "make_subact", "regular_act", "trivial_act",
    "trivial_monoid", "validate_act", "validate_monoid",
    "Congruence", "diagonal", "enumerate_congruences", "generated_by", "join", "kernel",
    "make_congruence", "meet", "quotient_act", "rees", "universal",
    "CapExceeded", "ConsistencyError", "InputError", "ParseError", "PreconditionError",
    "SactsError", "ValidationError",
    "ActHom", "compose", "enumerate_endomorphisms", "enumerate_homs", "find_isomorphism",
    "identity_hom", "image", "is_isomorphic", "make_hom", "translation",
    "PROPERTIES", "check", "stabilization", "Status", "Verdict",
]
