"""Co-interest graph construction, Louvain clustering and eigenvector centrality."""

from ._core import (
    ClusteringResult,
    CentralityScores,
    ConvergenceError,
    DomainError,
    Error,
    FormatError,
    FRESH_CLUSTER,
    GammaSearchResult,
    InfeasibleError,
    InterestRecord,
    LookupError,
    Partition,
    ValidationError,
    WeightedGraph,
    __version__,
    build_cointerest_graph,
    delta_move,
    eigenvector_centrality,
    export_graph,
    find_min_gamma,
    louvain,
    modularity,
    move_nodes,
    normalize_weights,
    parse_records,
    parse_records_json,
    read_graph_json,
    read_records_file,
    reduce_clusters,
    report,
    single_partition,
    top_k,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
