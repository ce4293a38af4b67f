"""Exact I-function series for GIT quotient targets.

Everything is computed over Q with fractions; there is no floating point
anywhere in the pipeline.
"""

from .errors import (ConfigError, ValidationError, UnboundedFiberError,
                     PipelineIntegrityError, NonUnitInversionError)
from .gitdata import (GitPresentation, CurveClass, Sector, sector_of,
                      involute, sector_orders, enumerate_candidates,
                      enumerate_fiber, validate, weyl_group)
from .chowring import SectorRing, RingElement, build_ring, chern
from .coeffs import Coeff
from .factors import FactorSpec, c_factor, k_range, is_i_nonnegative
from .ifunction import (IFunctionSeries, SectorClass, SymbolicResidue,
                        BigISeries, assemble, big_i_twist,
                        toric_coefficient, TAG_RESTRICTED, TAG_PUSHFORWARD)
from .presets import (projective_space, weighted_projective, grassmannian,
                      with_bundle, with_equivariant_columns, PRESETS)
from .config import JobConfig, load_config
from .render import (render_plain, render_latex, render_json, parse_json,
                     reserialize, series_to_json_obj)

__all__ = [
    "ConfigError", "ValidationError", "UnboundedFiberError",
    "PipelineIntegrityError", "NonUnitInversionError",
    "GitPresentation", "CurveClass", "Sector", "sector_of", "involute",
    "sector_orders", "enumerate_candidates", "enumerate_fiber", "validate",
    "weyl_group", "SectorRing", "RingElement", "build_ring", "chern",
    "Coeff", "FactorSpec", "c_factor", "k_range", "is_i_nonnegative",
    "IFunctionSeries", "SectorClass", "SymbolicResidue", "BigISeries",
    "assemble", "big_i_twist", "toric_coefficient",
    "TAG_RESTRICTED", "TAG_PUSHFORWARD",
    "projective_space", "weighted_projective", "grassmannian",
    "with_bundle", "with_equivariant_columns", "PRESETS",
    "JobConfig", "load_config",
    "render_plain", "render_latex", "render_json", "parse_json",
    "reserialize", "series_to_json_obj",
]

__version__ = "0.1.0"
