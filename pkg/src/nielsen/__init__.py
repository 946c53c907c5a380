"""Nielsen graphs of finitely generated groups: construction, exploration,
and desk-scale verification of their structural properties."""

__version__ = "0.1.0"

from .errors import ResourceCapError, UsageError, VerificationError
from .groups import (
    BurnsideB23,
    FiniteAbelianExp,
    FiniteCayley,
    FreeAbelian,
    FreeGroup,
    Group,
    Heisenberg,
    InfiniteDihedral,
    Integers,
    group_from_json,
)
from .moves import I, L, Move, R, apply_move, eval_word, move_inverse, move_set, parse_move
from .explore import (
    GraphFragment,
    ball,
    components,
    euclid_reduce,
    fragment_from_jsonl,
    growth_profile,
    state_key,
)
from .amenability import (
    IsoReport,
    SpectralEstimate,
    cheeger_search,
    closed_walks,
    iso_ratio,
    spectral_estimate,
)
from .forest import ForestSpec, component_of, edge_status, pattern_spec, verify_forest
from .covering import (
    Epimorphism,
    epimorphism_from_json,
    push,
    verify_star_bijection,
    verify_surjectivity_on_fragment,
)
from .tame import aut_group, tame_subgroup, verify_component_structure

__all__ = [name for name in dir() if not name.startswith("_")]
