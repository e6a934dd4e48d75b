"""Degree-associated edge reconstruction parameters of strong double brooms."""

from edgerecon.errors import Inconclusive, InputError, NotReconstructible, Unsupported
from edgerecon.graph import (
    Graph,
    add_edge,
    canonical_form,
    degree,
    delete_edge,
    edge_degree,
    is_isomorphic,
)
from edgerecon.broom import BroomSpec, VertexRole, build, classify_edge, classify_vertex, parse_spec
from edgerecon.deck import ClassifiedDeck, DaCard, da_ecard, da_edeck, deck_contains, extensions
from edgerecon.reconstruct import (
    ReconReport,
    Verdict,
    adern_brute,
    counterexample,
    dern_brute,
    determines,
)
from edgerecon.formulas import Prediction, adern_formula, dern_formula, proof_table

__version__ = "0.1.0"

__all__ = [
    "BroomSpec",
    "ClassifiedDeck",
    "DaCard",
    "Graph",
    "Inconclusive",
    "InputError",
    "NotReconstructible",
    "Prediction",
    "ReconReport",
    "Unsupported",
    "Verdict",
    "VertexRole",
    "add_edge",
    "adern_brute",
    "adern_formula",
    "build",
    "canonical_form",
    "classify_edge",
    "classify_vertex",
    "counterexample",
    "da_ecard",
    "da_edeck",
    "deck_contains",
    "degree",
    "delete_edge",
    "dern_brute",
    "dern_formula",
    "determines",
    "edge_degree",
    "extensions",
    "is_isomorphic",
    "parse_spec",
    "proof_table",
]
