"""Crystal operators, strings and transition maps."""

from .operators import (
    FProfile,
    LusztigData,
    StringData,
    SymbolSequence,
    apply_monomial,
    apply_monomial_batch,
    crossing_out,
    epsilon,
    etilde,
    etilde_by_transport,
    f_profile,
    from_root_set,
    ftilde,
    ftilde_by_transport,
    lusztig_data,
    reduce_symbols,
    standard_index,
    string_extract,
    string_extract_batch,
    zero,
)
from .transition import T2, T3, braid_R, s_map, transition_R, transition_T, weight

__all__ = [
    "FProfile", "LusztigData", "StringData", "SymbolSequence",
    "apply_monomial", "apply_monomial_batch", "crossing_out", "epsilon", "etilde",
    "etilde_by_transport", "f_profile", "from_root_set", "ftilde", "ftilde_by_transport",
    "lusztig_data", "reduce_symbols", "standard_index", "string_extract",
    "string_extract_batch", "zero",
    "T2", "T3", "braid_R", "s_map", "transition_R", "transition_T", "weight",
]
