"""Dehn filling invariants from Neumann-Zagier potential data."""

import json

from . import _core
from ._core import DehnError, symmetries, validate

__all__ = [
    "DehnError",
    "classify",
    "detect_dependence",
    "invariants",
    "make_symmetric_curve",
    "read_pair_report",
    "run_cli",
    "search",
    "symmetries",
    "validate",
    "verify_relations",
]


def _text(manifold):
    return manifold if isinstance(manifold, str) else json.dumps(manifold)


def make_symmetric_curve(tau, seeds, order=9, precision_bits=256):
    """seeds maps order -> complex (or a (re, im) pair of decimal strings)."""
    norm = {}
    for k, v in seeds.items():
        if isinstance(v, (tuple, list)):
            norm[int(k)] = (str(v[0]), str(v[1]))
        else:
            c = complex(v)
            norm[int(k)] = (repr(c.real), repr(c.imag))
    return json.loads(_core.make_symmetric_curve(tau, norm, order, precision_bits))


def invariants(manifold, slopes, precision_bits=256):
    return json.loads(_core.invariants(_text(manifold), list(slopes), precision_bits))


def search(manifold, min_norm, max_norm, tol=1e-20, threads=1, all_pairs=False):
    return json.loads(_core.search(_text(manifold), min_norm, max_norm, tol, threads, all_pairs))


def classify(taus, slopes, slopes_prime):
    return json.loads(_core.classify(list(taus), list(slopes), list(slopes_prime)))


def detect_dependence(t, exponent_bound=20, precision_bits=256):
    pairs = [(str(x[0]), str(x[1])) if isinstance(x, (tuple, list)) else (repr(complex(x).real), repr(complex(x).imag)) for x in t]
    return json.loads(_core.detect_dependence(pairs, exponent_bound, precision_bits))


def verify_relations(spec):
    return json.loads(_core.verify_relations(_text(spec)))


def read_pair_report(report):
    return json.loads(_core.read_pair_report(_text(report)))


def run_cli(*args):
    """Runs the command-line front end in-process; returns (code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
