"""Integrated dual local depth, local depth regions and LDC clustering."""
from .data import Dataset, Grid, as_dataset
from .depth_core import (
    EmpiricalLocality,
    SortedSample,
    ecdf_eval,
    eld_simplicial,
    empirical_width,
    ld_simplicial,
    ld_tukey,
    lemma2_bound,
    neighborhood_width,
)
from .idld import DepthResult, eidld, eidld_self
from .ldc import ClusterModel, LdcConfig, distance, kmeans, ldc_fit
from .metrics import ari, ccr
from .projection import Direction, DirectionSet, ProjectionSpec, project, sample_direction
from .regions import Region, region_proportion, region_threshold

__version__ = "0.1.0"
