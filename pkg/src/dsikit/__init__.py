"""dsikit: distance-based separability index, classical cluster validity
indices, and a rank-based harness for evaluating them against an external
ground truth."""

__version__ = "0.1.0"

from .clustering import kmeans, load_external_labels, ward
from .dataset import (
    LabeledDataset,
    ParseError,
    canonicalize_labels,
    generate_synthetic,
    load_csv,
    save_csv,
    standardize,
)
from .evaluation import (
    EvaluationReport,
    ScoreMatrix,
    ScoreRow,
    aggregate,
    compare_row,
    hit_the_best,
    quantize_to_ranks,
    rank_difference,
    read_score_matrix,
    write_score_matrix,
)
from .indices import (
    INDEX_TABLE,
    IndexDescriptor,
    adjusted_rand_index,
    calinski_harabasz,
    davies_bouldin,
    dunn,
    i_index,
    silhouette,
    wb_index,
)
from .pairwise import (
    DistanceSample,
    bcd_set,
    class_complement_bcd,
    euclidean_distance,
    icd_set,
)
from .separability import DsiResult, dsi, ks_statistic

__all__ = [
    "DistanceSample",
    "DsiResult",
    "EvaluationReport",
    "INDEX_TABLE",
    "IndexDescriptor",
    "LabeledDataset",
    "ParseError",
    "ScoreMatrix",
    "ScoreRow",
    "adjusted_rand_index",
    "aggregate",
    "bcd_set",
    "calinski_harabasz",
    "canonicalize_labels",
    "class_complement_bcd",
    "compare_row",
    "davies_bouldin",
    "dsi",
    "dunn",
    "euclidean_distance",
    "generate_synthetic",
    "hit_the_best",
    "i_index",
    "icd_set",
    "kmeans",
    "ks_statistic",
    "load_csv",
    "load_external_labels",
    "quantize_to_ranks",
    "rank_difference",
    "read_score_matrix",
    "save_csv",
    "silhouette",
    "standardize",
    "wb_index",
    "ward",
    "write_score_matrix",
]
