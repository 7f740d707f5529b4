"""Exact augmented Zagreb index toolkit: indices, extremal families,
isomorph-free enumeration and exhaustive bound verification."""

__version__ = "0.1.0"

from .arith import rat, to_pq
from .graph import (
    DegreeProfile,
    Graph,
    GraphError,
    complement,
    cyclomatic,
    degree_profile,
    from_edges,
    is_chemical,
    is_connected,
    isomorphic,
    n3_prime,
)
from .indices import (
    DegenerateEdge,
    NgInputs,
    abc,
    azi,
    bicyclic_bounds,
    f_bicyclic,
    huang_upper_bound,
    ng_bounds,
    theta,
    theta_tilde,
    unicyclic_bounds,
    wang_lower_bound,
    wang_pendant_lower_bound,
)
from .canon import canonical_form
from .enumeration import EnumSpec, enumerate_graphs
from .report import BoundCertificate, emit_certificate, from_graph6, to_graph6
