"""Order, chain and order-chain polytopes of finite posets, in exact arithmetic."""

from fractions import Fraction

from . import _ocpoly
from ._ocpoly import (
    EdgePartition,
    Error,
    Poset,
    antichain,
    beta as _beta,
    chain,
    equivalent,
    facet_count,
    family_f,
    hrep,
    is_integral,
    minimal_incident_partition,
    parse_poset_file,
    partitions,
    posets_up_to_iso,
    run_cli,
    suite_slugs,
    verify,
    zigzag,
)

__all__ = [
    "EdgePartition",
    "Error",
    "Poset",
    "antichain",
    "beta",
    "chain",
    "equivalent",
    "facet_count",
    "family_f",
    "fingerprint",
    "hrep",
    "is_integral",
    "max_beta",
    "minimal_incident_partition",
    "parse_poset_file",
    "partitions",
    "posets_up_to_iso",
    "run_cli",
    "suite_slugs",
    "verify",
    "vertices",
    "volume",
    "zigzag",
]


def vertices(partition, kind="order-chain"):
    """Vertices as tuples of Fractions, sorted lexicographically."""
    return [tuple(Fraction(x) for x in v) for v in _ocpoly.vertices(partition, kind)]


def volume(partition, kind="order-chain"):
    return Fraction(_ocpoly.volume(partition, kind))


def fingerprint(partition, kind="order-chain", dilations=3):
    f = _ocpoly.fingerprint(partition, kind, dilations)
    f["volume"] = Fraction(f["volume"])
    return f


def beta(n, descent_set):
    """Number of permutations of [n] with the given descent set."""
    return int(_beta(n, list(descent_set)))


def max_beta(n):
    value, argmaxes = _ocpoly.max_beta(n)
    return int(value), argmaxes
