"""Exact constructions and verification suites for Schur superalgebras.

The heavy lifting lives in the compiled extension ``superschur._core``; this
package adds JSON decoding for the structured results.
"""

import json as _json

try:
    from ._core import (  # noqa: F401
        algebra_json as _algebra_json,
        classify_json as _classify_json,
        gamma_dimension,
        schur_dimension,
        verify_cosalg,
        verify_double_dual,
        verify_pairing,
        verify_sergeev,
        verify_surjectivity,
        weight_decomposition_json as _weight_decomposition_json,
    )
except ImportError:  # extension on sys.path rather than in the package
    from _core import (  # noqa: F401
        algebra_json as _algebra_json,
        classify_json as _classify_json,
        gamma_dimension,
        schur_dimension,
        verify_cosalg,
        verify_double_dual,
        verify_pairing,
        verify_sergeev,
        verify_surjectivity,
        weight_decomposition_json as _weight_decomposition_json,
    )

__all__ = [
    "algebra",
    "classify",
    "gamma_dimension",
    "schur_dimension",
    "verify_cosalg",
    "verify_double_dual",
    "verify_pairing",
    "verify_sergeev",
    "verify_surjectivity",
    "weight_decomposition",
]


def algebra(kind, m=1, n=1, d=1, p=0):
    """Structure constants of S(m|n,d), Q(n,d), W(d) or C(d) as a dict."""
    return _json.loads(_algebra_json(kind, m, n, d, p))


def classify(kind, d, p):
    """Simple-object labels of degree d: dict with count and labels."""
    return _json.loads(_classify_json(kind, d, p))


def weight_decomposition(n, d, p=0):
    """Weight-space dimensions of the n-copy tensor space at degree d."""
    return _json.loads(_weight_decomposition_json(n, d, p))
