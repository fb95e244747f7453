"""Exact-arithmetic classification of nets of conics over even-order fields.

The geometry: the quadric Veronese surface in PG(5,q), q even, has a nucleus
plane.  Planes of PG(5,q) meeting that nucleus plane fall into 18 orbits
under the induced PGL(3,q) action, and those orbits are in bijection (via a
duality carrying planes to nets) with the projective equivalence classes of
nets of conics containing a double line.  This package builds the orbit
atlas, classifies arbitrary planes and nets into it, and re-verifies the
bookkeeping (orbit sizes, stabilizers, point distributions, cubic invariants,
line-orbit splits) from scratch by exhaustive or sampled computation.
"""

from .atlas import (
    EMPTY_BASE_LABELS,
    EXPECTED_CUBIC_KIND,
    LABELS,
    SCHEMA,
    classify_net,
    classify_plane,
    example_net,
    expected_point_distribution,
    net_base_points,
    net_double_line_count,
    net_of_plane,
    orbit_atlas,
    plane_of_net,
    planes_meeting_nucleus_count,
    representative,
    representative_parameters,
    representative_pattern,
    representatives,
    signature_table,
    verify_distributions,
    verify_double_lines,
    verify_known_net,
    verify_line_orbits,
    verify_partition,
)
from .errors import (
    ClassificationError,
    ConfigurationError,
    OutOfFamilyError,
    ResourceBudgetError,
    VerificationError,
)
from .gf import GF, field
from .invariants import (
    CUBIC_KINDS,
    PlaneSignature,
    cubic_form,
    cubic_points,
    cubic_type,
    line_class_profile,
    nucleus_meet_dim,
    plane_signature,
    point_class_counts,
)
from .projgeom import (
    Subspace,
    enumerate_planes,
    gaussian_binomial,
    join,
    meet,
    pg_points,
    plane_from_pattern,
    span,
    subspace_from_json,
)
from .veronese import (
    POINT_CLASSES,
    census,
    classify_conic,
    classify_hyperplane,
    delta,
    delta_inv,
    expected_census,
    form_eval,
    form_from_str,
    form_to_str,
    nucleus_plane,
    point_class,
    veronese,
)
from .action import (
    k_equivalent,
    orbit,
    orbit_keys,
    pgl_elements,
    pgl_order,
    stabilizer_order,
)

__version__ = "0.1.0"

__all__ = [
    "GF",
    "field",
    "Subspace",
    "span",
    "meet",
    "join",
    "pg_points",
    "enumerate_planes",
    "plane_from_pattern",
    "subspace_from_json",
    "gaussian_binomial",
    "POINT_CLASSES",
    "veronese",
    "point_class",
    "census",
    "expected_census",
    "nucleus_plane",
    "delta",
    "delta_inv",
    "form_eval",
    "form_to_str",
    "form_from_str",
    "classify_conic",
    "classify_hyperplane",
    "CUBIC_KINDS",
    "PlaneSignature",
    "plane_signature",
    "point_class_counts",
    "nucleus_meet_dim",
    "cubic_form",
    "cubic_points",
    "cubic_type",
    "line_class_profile",
    "orbit",
    "orbit_keys",
    "stabilizer_order",
    "k_equivalent",
    "pgl_elements",
    "pgl_order",
    "SCHEMA",
    "LABELS",
    "EMPTY_BASE_LABELS",
    "EXPECTED_CUBIC_KIND",
    "expected_point_distribution",
    "planes_meeting_nucleus_count",
    "representative",
    "representatives",
    "representative_pattern",
    "representative_parameters",
    "signature_table",
    "orbit_atlas",
    "classify_plane",
    "classify_net",
    "net_of_plane",
    "plane_of_net",
    "net_base_points",
    "net_double_line_count",
    "example_net",
    "verify_distributions",
    "verify_double_lines",
    "verify_line_orbits",
    "verify_partition",
    "verify_known_net",
    "OutOfFamilyError",
    "ClassificationError",
    "VerificationError",
    "ConfigurationError",
    "ResourceBudgetError",
    "__version__",
]
