"""Exact experiments with generalized Turan numbers ex(n, H, K_r).

Graph constructions, exact copy counting in blow-ups, density polynomials
with rational coefficients, and a certificate that a K_r-free blow-up of
``K_{r-3} + C_5`` beats every complete (r-1)-partite graph.
"""
from .asymptotics import (
    DensityPolynomial,
    TheoremParams,
    density_polynomial,
    evaluate,
    feasibility,
    minimal_a,
    paper_lower_bound,
    paper_upper_bound,
)
from .counting import (
    CountResult,
    automorphism_count,
    count_copies,
    count_embeddings_naive,
    count_in_blowup,
    count_in_complete_multipartite,
)
from .extremal import (
    CounterexampleReport,
    InfeasibleParameters,
    build_G,
    build_H,
    build_power_path_base,
    build_Q,
    build_S_spec,
    max_partite_density,
    max_partite_exact,
    verify_counterexample,
)
from .graphcore import (
    Graph,
    PatternWithDemands,
    WeightedGraph,
    blowup,
    complete,
    contract_nonadjacent,
    cycle,
    disjoint_union,
    expand,
    join,
    path,
    power,
)
from .props import (
    chromatic_number,
    clique_number,
    count_proper_colorings_as_partitions,
    diameter,
    is_Kr_free_blowup,
)

__all__ = [
    "CountResult",
    "CounterexampleReport",
    "DensityPolynomial",
    "Graph",
    "InfeasibleParameters",
    "PatternWithDemands",
    "TheoremParams",
    "WeightedGraph",
    "automorphism_count",
    "blowup",
    "build_G",
    "build_H",
    "build_Q",
    "build_S_spec",
    "build_power_path_base",
    "chromatic_number",
    "clique_number",
    "complete",
    "contract_nonadjacent",
    "count_copies",
    "count_embeddings_naive",
    "count_in_blowup",
    "count_in_complete_multipartite",
    "count_proper_colorings_as_partitions",
    "cycle",
    "density_polynomial",
    "diameter",
    "disjoint_union",
    "evaluate",
    "expand",
    "feasibility",
    "is_Kr_free_blowup",
    "join",
    "max_partite_density",
    "max_partite_exact",
    "minimal_a",
    "paper_lower_bound",
    "paper_upper_bound",
    "path",
    "power",
    "verify_counterexample",
]

__version__ = "0.1.0"
