"""Joint Hilbert-space / graph fractional Fourier transforms."""

from ._hgfrft import (
    Graph,
    HgfrftError,
    OperatorFamily,
    ShiftKind,
    bandpass,
    cartesian_product,
    cycle_graph,
    dft_operator,
    frac_power,
    gft_operator,
    greedy_rows,
    greedy_sample,
    hgfrft,
    inverse_hgfrft,
    path_graph,
    principal_log,
    random_geometric_graph,
    recover,
    shift_matrix,
)

__all__ = [
    "Graph",
    "HgfrftError",
    "OperatorFamily",
    "ShiftKind",
    "bandpass",
    "cartesian_product",
    "cycle_graph",
    "dft_operator",
    "frac_power",
    "gft_operator",
    "greedy_rows",
    "greedy_sample",
    "hgfrft",
    "inverse_hgfrft",
    "path_graph",
    "principal_log",
    "random_geometric_graph",
    "recover",
    "shift_matrix",
]
