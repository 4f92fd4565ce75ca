"""Exact Frobenius algebras from string topology, backed by the C++ core."""

import json
from fractions import Fraction

from . import _strtop
from ._strtop import (
    Algebra,
    StrtopError,
    builtin_groups,
    dw_algebra,
    lie_algebra,
    lie_profiles,
    parse_algebra,
    sphere_loop_algebra,
    sphere_string_algebra,
)

__all__ = [
    "Algebra",
    "StrtopError",
    "builtin_groups",
    "check",
    "closed_invariant",
    "commuting_tuple_count",
    "dw_algebra",
    "lie_algebra",
    "lie_profiles",
    "parse_algebra",
    "product",
    "run_cli",
    "sector_table",
    "sphere_loop_algebra",
    "sphere_string_algebra",
    "surface_operation",
    "twist_check",
]


def product(algebra, a, b):
    """a ⋆ b as {label: Fraction}."""
    return {label: Fraction(c) for label, c in algebra.product(a, b)}


def check(algebra, names=("all",)):
    """Check reports as a list of dicts."""
    return json.loads(algebra.check(list(names)))


def closed_invariant(algebra, genus):
    return Fraction(_strtop.closed_invariant(algebra, genus))


def commuting_tuple_count(group, genus):
    return Fraction(_strtop.commuting_tuple_count(group, genus))


def surface_operation(algebra, inputs, outputs, genus=0, args=()):
    return json.loads(_strtop.surface_operation(algebra, inputs, outputs, genus, list(args)))


def twist_check(group, weights):
    """Cocycle and associativity reports for the product twisted by `weights`."""
    return json.loads(_strtop.twist_check(group, json.dumps(weights)))


def sector_table(action):
    """action: [(order, [weights...]), ...] -> rows (label, age, dimension, degree offset)."""
    return [(label, Fraction(a), dim, Fraction(off)) for label, a, dim, off in _strtop.sector_table(list(action))]


def run_cli(*args):
    """(status, stdout, stderr) of one CLI invocation, run in process."""
    return _strtop.run_cli([str(a) for a in args])
