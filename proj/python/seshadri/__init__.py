"""Seshadri constants of abelian surfaces from an integer intersection matrix."""

import json
from fractions import Fraction

from . import _core
from ._core import SeshadriError

__all__ = [
    "SeshadriError",
    "build_envelope",
    "emit_plot",
    "eps_elliptic",
    "error_code",
    "pell_fundamental",
    "seshadri_constant",
    "survey",
    "verify_ample_curve",
]


def error_code(exc):
    """The code name carried by a SeshadriError, e.g. "NotNef"."""
    return str(exc).split(":", 1)[0]


def quad_value(v):
    """(q, n) for the exact value q * sqrt(n)."""
    return Fraction(v["q"]), int(v["n"])


def pell_fundamental(N):
    ell, k = _core.pell_fundamental(N)
    return int(ell), int(k)


def seshadri_constant(matrix, L, verify=True, diagnostics=True, max_nodes=20_000_000):
    return json.loads(_core.seshadri_constant(matrix, list(L), verify, diagnostics, max_nodes))


def eps_elliptic(matrix, L, cap=None):
    found = _core.eps_elliptic(matrix, list(L), cap)
    if found is None:
        return None
    degree, classes = found
    return int(degree), [tuple(c) for c in classes]


def verify_ample_curve(matrix, P, max_nodes=20_000_000):
    return _core.verify_ample_curve(matrix, list(P), max_nodes)


def build_envelope(matrix, delta="1/100", grid=16):
    return json.loads(_core.build_envelope(matrix, str(delta), grid))


def emit_plot(matrix, format, delta="1/100", grid=16):
    return _core.emit_plot(matrix, format, str(delta), grid)


def survey(family, ranges, delta="1/50"):
    return _core.survey(family, list(ranges), str(delta))
