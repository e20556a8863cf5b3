"""(theta, Theta)-cyclic codes over F_q x R, R = F_q + uF_q + vF_q + uvF_q."""

from .duality import dual_code, dual_generators, dual_oracle, mixed_inner_product
from .errors import SkewCodecError
from .gf import GF, primitive_moduli
from .gray import LinearCodeFq, big_phi, gray_image_code, lee_weight, min_distance
from .mixedcode import CodeContext, MixedCode, MixedWord, build_mixed_code, code_from_spec, minimal_generating_set
from .qecc import QeccParams, css, dual_containing_mixed, dual_containing_theta
from .reproduce import reproduce
from .ring_r import RingR
from .search import search
from .skewpoly import SkewPoly, SkewRing, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "GF",
    "primitive_moduli",
    "RingR",
    "SkewRing",
    "SkewPoly",
    "parse_poly",
    "format_poly",
    "CodeContext",
    "MixedWord",
    "MixedCode",
    "build_mixed_code",
    "code_from_spec",
    "minimal_generating_set",
    "LinearCodeFq",
    "big_phi",
    "lee_weight",
    "gray_image_code",
    "min_distance",
    "mixed_inner_product",
    "dual_oracle",
    "dual_generators",
    "dual_code",
    "QeccParams",
    "css",
    "dual_containing_theta",
    "dual_containing_mixed",
    "search",
    "reproduce",
    "SkewCodecError",
]
