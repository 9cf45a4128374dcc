"""Weil representation of finite symplectic groups and perfect Lagrangian relations.

Objects travel as plain dicts in the CLI's JSON schemas; operators come back
as complex numpy arrays indexed lexicographically.
"""

import json

from . import _weilrep
from ._weilrep import ResidualError

__all__ = [
    "ResidualError",
    "random_element",
    "decompose",
    "evaluate_word",
    "heisenberg_op",
    "weil_group",
    "group_cocycle",
    "random_relation",
    "compose_relations",
    "is_perfect_lagrangian",
    "weil_relation",
    "relation_cocycle",
    "gaussian_matrix",
    "gaussian_from_relation",
    "relation_from_gaussian",
    "gauss_sum",
    "verify",
]


def _s(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def random_element(p, n, seed=0):
    return json.loads(_weilrep.random_element(p, n, seed))


def decompose(element):
    return json.loads(_weilrep.decompose(_s(element)))


def evaluate_word(word):
    return json.loads(_weilrep.evaluate_word(_s(word)))


def heisenberg_op(p, n, v):
    return _weilrep.heisenberg_op(p, n, list(v))


def weil_group(element, tol=1e-9):
    return _weilrep.weil_group(_s(element), tol)


def group_cocycle(g1, g2, tol=1e-8):
    return _weilrep.group_cocycle(_s(g1), _s(g2), tol)


def random_relation(p, m, n, seed=0, rank=-1):
    return json.loads(_weilrep.random_relation(p, m, n, seed, rank))


def compose_relations(s, t):
    """ST: first t, then s."""
    return json.loads(_weilrep.compose_relations(_s(s), _s(t)))


def is_perfect_lagrangian(t):
    return _weilrep.is_perfect_lagrangian(_s(t))


def weil_relation(t):
    return _weilrep.weil_relation(_s(t))


def relation_cocycle(s, t, tol=1e-8):
    return _weilrep.relation_cocycle(_s(s), _s(t), tol)


def gaussian_matrix(g):
    return _weilrep.gaussian_matrix(_s(g))


def gaussian_from_relation(t):
    return json.loads(_weilrep.gaussian_from_relation(_s(t)))


def relation_from_gaussian(g):
    return json.loads(_weilrep.relation_from_gaussian(_s(g)))


def gauss_sum(p, dim_x, q):
    return json.loads(_weilrep.gauss_sum(p, dim_x, _s(q)))


def verify(suite="all", p=3, n=1, seed=0, trials=20, tolerance=1e-8, exact_tolerance=1e-9):
    return json.loads(_weilrep.verify(suite, p, n, seed, trials, tolerance, exact_tolerance))
