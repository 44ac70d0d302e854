"""Finite restriction semigroupoids: axiom checks, graphings, partial-map
representations and the Szendrei expansion."""
from .core import (UNDEFINED, AxiomReport, ElementMapping, RestrictionSemigroupoid, Semigroupoid,
                   Violation, compose, idempotents, opposite, validate)

__all__ = ["UNDEFINED", "AxiomReport", "ElementMapping", "RestrictionSemigroupoid", "Semigroupoid",
           "Violation", "compose", "idempotents", "opposite", "validate"]
