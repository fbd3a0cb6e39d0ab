"""Finite lattices, their congruences, and colored-chain representations
of principal congruence sets."""

from .order import (
    Chain,
    CycleDetected,
    EmptyUniverse,
    FiniteLattice,
    FinitePoset,
    LatticeError,
    NotALattice,
    UnknownElement,
    birkhoff_lattice,
    dual,
    find_isomorphism,
    glued_sum,
    is_distributive,
    j_plus,
    join_irreducibles,
    lattice_from_covers,
    maximal_chains,
    meet_irreducibles,
    product_lattice,
    sublattice,
    subposet,
)
from .congruence import (
    ConLattice,
    Congruence,
    check_containment_chain,
    con_lattice,
    internal_congruences,
    is_internal,
    ji_congruences,
    principal_congruence,
    restrict,
)
from .coloring import (
    ColoredChain,
    RepresentabilityVerdict,
    colset,
    decide_chain_representable,
    extract_colored_chain,
    rep,
    rep_set,
    verify_necessity,
)
from .construction import (
    Assembly,
    assemble,
    check_compatibility,
    definition_assignment,
    flag_lattice,
    frame_lattice,
    glue_congruences,
    w_lattice,
)
from .io import dump_lattice, export_dot, lattice_to_json, load_lattice
from .pipeline import PipelineReport, regression_known_results, verify_theorem13, verify_theorem15

__version__ = "0.1.0"

__all__ = [
    "dump_lattice",
    "export_dot",
    "lattice_to_json",
    "load_lattice",
    "PipelineReport",
    "regression_known_results",
    "verify_theorem13",
    "verify_theorem15",
    "Chain",
    "CycleDetected",
    "EmptyUniverse",
    "FiniteLattice",
    "FinitePoset",
    "LatticeError",
    "NotALattice",
    "UnknownElement",
    "birkhoff_lattice",
    "dual",
    "find_isomorphism",
    "glued_sum",
    "is_distributive",
    "j_plus",
    "join_irreducibles",
    "lattice_from_covers",
    "maximal_chains",
    "meet_irreducibles",
    "product_lattice",
    "sublattice",
    "subposet",
    "ConLattice",
    "Congruence",
    "check_containment_chain",
    "con_lattice",
    "internal_congruences",
    "is_internal",
    "ji_congruences",
    "principal_congruence",
    "restrict",
    "ColoredChain",
    "RepresentabilityVerdict",
    "colset",
    "decide_chain_representable",
    "extract_colored_chain",
    "rep",
    "rep_set",
    "verify_necessity",
    "Assembly",
    "assemble",
    "check_compatibility",
    "definition_assignment",
    "flag_lattice",
    "frame_lattice",
    "glue_congruences",
    "w_lattice",
]
