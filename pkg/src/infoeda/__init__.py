"""Information-theoretic exploratory data analysis toolkit.

Calibrates histograms to a fixed information content, computes similarity
indices, interaction information, and nearest-neighbour class distances over
variable subsets, and serves a parallel-coordinates explorer with
recompute-on-prune support.
"""

from ._version import VERSION as __version__
from .binning import (
    EntropyEstimate,
    Histogram1D,
    bin_width,
    build_histogram,
    cost_scan,
    differential_entropy,
    nn_spacings,
    shimazaki_cost,
)
from .bundle import AnalysisBundle, analyze, bundle_dataset
from .class_distance import (
    CdiResult,
    PointCloud,
    SubsetRanking,
    cdi,
    cdr,
    class_clouds,
    evaluate_subset,
    false_alarm_bound,
    max_information,
    rank_subsets,
)
from .dataset import (
    ClassPartition,
    Dataset,
    DatasetError,
    VariableMeta,
    load_table,
    standardize,
)
from .diagram import VidGraph, VidThresholds, build_vid, export_vid
from .metrics import (
    BinnedVariable,
    ContingencyTable,
    contingency_table,
    discrete_entropy,
    interaction_information,
    joint_entropy,
    mutual_information,
    similarity_index,
)

__all__ = [
    "AnalysisBundle",
    "BinnedVariable",
    "CdiResult",
    "ClassPartition",
    "ContingencyTable",
    "Dataset",
    "DatasetError",
    "EntropyEstimate",
    "Histogram1D",
    "PointCloud",
    "SubsetRanking",
    "VariableMeta",
    "VidGraph",
    "VidThresholds",
    "analyze",
    "bin_width",
    "build_histogram",
    "build_vid",
    "bundle_dataset",
    "cdi",
    "cdr",
    "class_clouds",
    "contingency_table",
    "cost_scan",
    "differential_entropy",
    "discrete_entropy",
    "evaluate_subset",
    "export_vid",
    "false_alarm_bound",
    "interaction_information",
    "joint_entropy",
    "load_table",
    "max_information",
    "mutual_information",
    "nn_spacings",
    "rank_subsets",
    "shimazaki_cost",
    "similarity_index",
    "standardize",
    "__version__",
]
