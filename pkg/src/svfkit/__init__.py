"""svfkit: exact desk-scale analysis of set-valued functions of a real variable."""

from .intervals import (EMPTY, Endpoint, GermStatus, Interval, IntervalSet,
                        accumulates_at, bounded_above, closed_interval, combine,
                        complement, full_line, germ_at_infinity, germ_at_point,
                        interval, is_subset, normalize, open_interval, point,
                        ray_above, ray_below)
from .sets import FiniteSet, Universe
from .svf import (Monotonicity, SetValuedFunction, complement_svf, constant_svf,
                  continuous_at, converges_at, converges_at_infinity,
                  delta_trajectory, infimum, intersect_svf, limit_at,
                  limit_at_infinity, limsup_liminf_at_infinity, monotonicity,
                  supremum, svf_at, union_svf)
from .geometry import (RadialFamilyKind, build_svf, closed_disk_mask,
                       open_disk_mask, point_trajectory, radial_trajectory)
from .sequences import (SetSequence, converges_to, delta_sequence,
                        equivalence_suite, limsup_liminf)
from .elementspec import (ParamFamily, PointCloud, affine_family, disk_family,
                          elementwise_add, family_derivative, family_sample,
                          injectivity_check, scaled_direction_family,
                          shift_check, shift_error)
from .randgen import random_svf
from .theorems import ALL_THEOREMS, run_theorem_suite
from .verdicts import SuiteReport, Verdict

__version__ = "0.1.0"
