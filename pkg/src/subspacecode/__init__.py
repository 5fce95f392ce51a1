"""List-decodable subspace codes for operator channels.

Library layout:

- ``gf``: finite field contexts GF(q^e), Frobenius maps, normal bases,
  exact nullspaces;
- ``linpoly``: the composition ring of linearized polynomials with
  two-sided division;
- ``subspace``: canonical RREF subspaces with the subspace metric;
- ``channel``: seeded operator-channel simulation (erasures + errors);
- ``codec``: code parameter derivation and the encoders (list-decodable
  construction plus the unique-decodable baseline);
- ``decoder``: interpolation + linearized Roth-Ruckenstein list decoding
  and the baseline unique decoder;
- ``cli``: command-line harness (``subspacecode``).
"""

from .channel import ChannelConfig, count_errors_erasures, transmit
from .codec import (
    AmbientVector,
    CodeParams,
    KKParams,
    admissible,
    derive_kk_params,
    derive_params,
    encode,
    kk_encode,
    kk_radius,
    list_radius,
    message_poly,
    packet_rate,
    symbol_rate,
)
from .decoder import (
    DecodeResult,
    KKDecodeResult,
    MultiQ,
    decode,
    interpolate,
    interpolation_points,
    kk_decode,
    lrr_factor,
    lrr_substitute,
    omega_for,
)
from .gf import (
    FieldCtx,
    InternalDefect,
    field_create,
    find_normal_generator,
    frobenius,
    in_subfield,
    nth_roots_of_unity,
    nullspace_basis,
    nullspace_vector,
)
from .linpoly import (
    LinearizedPoly,
    composition_residual,
    left_divide,
    right_divide,
    root_count_bound_check,
)
from .subspace import Subspace

__version__ = "0.1.0"

__all__ = [
    "AmbientVector",
    "ChannelConfig",
    "CodeParams",
    "DecodeResult",
    "FieldCtx",
    "InternalDefect",
    "KKDecodeResult",
    "KKParams",
    "LinearizedPoly",
    "MultiQ",
    "Subspace",
    "admissible",
    "composition_residual",
    "count_errors_erasures",
    "decode",
    "derive_kk_params",
    "derive_params",
    "encode",
    "field_create",
    "find_normal_generator",
    "frobenius",
    "in_subfield",
    "interpolate",
    "interpolation_points",
    "kk_decode",
    "kk_encode",
    "kk_radius",
    "left_divide",
    "list_radius",
    "lrr_factor",
    "lrr_substitute",
    "message_poly",
    "nth_roots_of_unity",
    "nullspace_basis",
    "nullspace_vector",
    "omega_for",
    "packet_rate",
    "right_divide",
    "root_count_bound_check",
    "symbol_rate",
    "transmit",
]
