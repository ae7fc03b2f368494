"""Generators of arithmetic-sequence scales in Z_c and on the circle R/Z."""

__version__ = "0.1.0"

from .errors import (
    BoundTooSmall,
    EmptyScale,
    GenScaleError,
    HypothesisViolated,
    NotInvertible,
    ParseError,
    PreconditionViolated,
    SweepTooLarge,
    TrivialScale,
)
from .numtheory import TotientTable, divisors, gcd, is_totient_number, mod_inverse, totient
from .scale import AffineMap, Scale, apply_affine, complement, format_scale, parse_scale, translate
from .generation import (
    Classification,
    GeneratorReport,
    GenSpec,
    Kind,
    classify,
    enumerate_generators,
    generate,
    geometric_support,
)
from .intervals import (
    IntervalVector,
    cluster_vector,
    difference_group,
    interval_vector,
    is_regular_polygon,
    is_union_of_polygons,
)
from .dft import Spectrum, closed_form_magnitude, dft, recover_generators_via_dft, seminorm
from .chopin import ChopinReport, chopin_check
from .realgen import (
    PSet,
    RationalPoint,
    alpha_stability_interval,
    j_set,
    p_generators_finite,
    p_infinite_generators,
    p_set,
)
