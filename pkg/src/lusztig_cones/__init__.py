"""Lusztig cones, chamber diagrams, rectangle diagrams and crystal operators in type A_n."""

__version__ = "0.1.0"

from .cone import (
    ConeMatrix,
    RootMultiset,
    SpanningVector,
    cone_contains,
    cone_matrix,
    multiset_M,
    spanning_vector,
    spanning_vectors,
)
from .errors import CapacityError, DomainError, InputError, InvariantViolation, LusztigConesError
from .quiver import (
    Component,
    PartialQuiver,
    Quiver,
    all_partial_quivers,
    all_quivers,
    chamber_set_of,
    components,
    leq,
    parse_partial_quiver,
    parse_quiver,
    partial_quiver_of,
    sub_partial_quivers,
)
from .rectangle import (
    MonomialWord,
    RectangleDiagram,
    RectangleGrid,
    diagram,
    monomial_word,
    mu,
    rectangle_of,
    s_set,
    v_vector,
)
from .weyl import (
    MinimalPair,
    PositiveRoot,
    ReducedWord,
    RootOrder,
    commutation_classes,
    commutation_equivalent,
    enumerate_reduced_words,
    is_reduced_w0,
    minimal_pairs,
    moves,
    root_order,
    standard_word,
)
from .wiring import (
    Arrangement,
    Chamber,
    ChamberDiagram,
    arrangement,
    chamber_diagram,
    chamber_sets,
    compatible_word,
    is_compatible,
)
