"""Constructive counterexamples for strongly maximal matchings and
strongly minimal covers in infinite hypergraphs.

The package exposes a catalogue of intensional hypergraphs, the edge
gadget used to lift matching counterexamples to cover counterexamples,
finite presentations of matchings/covers/colourings, improvement
oracles over those presentations, and a brute-force finite lab."""

from .catalogue import CONSTRUCTIONS, TardosEdge, hypergraph
from .gadget import Gadget, build_gadget
from .objects import (
    CofiniteSet,
    ColouringByClasses,
    ExplicitFinite,
    GadgetMap,
    ImprovementWitness,
    PresentationError,
    Stream,
    apply_witness,
    delta,
    presentation_from_json,
    presentation_to_json,
    verify_presentation,
    witness_to_json,
)
from .oracles import OracleError, improve

__all__ = [
    "CONSTRUCTIONS",
    "CofiniteSet",
    "ColouringByClasses",
    "ExplicitFinite",
    "Gadget",
    "GadgetMap",
    "ImprovementWitness",
    "OracleError",
    "PresentationError",
    "Stream",
    "TardosEdge",
    "apply_witness",
    "build_gadget",
    "delta",
    "hypergraph",
    "improve",
    "presentation_from_json",
    "presentation_to_json",
    "verify_presentation",
    "witness_to_json",
]

__version__ = "0.1.0"
