"""Caporaso-Harris recursion for the Severi degrees of the projective plane

N(d, delta, alpha, beta) counts delta-nodal plane curves of degree d with tangency conditions
along a fixed line: alpha_k fixed points of contact order k and beta_k free ones. The Severi
degree is N(d, delta, 0, d e_1). Used by the tests as an oracle independent of tropical
geometry.
"""

from typing import Iterator, Tuple

import itertools
from functools import lru_cache
from math import comb

Seq = Tuple[int, ...]


def _weight(s: Seq) -> int:
    """I s = sum_k k s_k"""
    return sum((k + 1) * v for k, v in enumerate(s))


def _below(s: Seq) -> Iterator[Seq]:
    return itertools.product(*(range(v + 1) for v in s))


def _above(s: Seq, weight: int) -> Iterator[Seq]:
    """Sequences s' >= s with I s' <= weight"""
    ranges = [range(v, v + weight // (k + 1) + 1) for k, v in enumerate(s)]
    for t in itertools.product(*ranges):
        if _weight(t) <= weight:
            yield t


@lru_cache(maxsize=None)
def _count(d: int, delta: int, alpha: Seq, beta: Seq) -> int:
    if delta < 0 or _weight(alpha) + _weight(beta) != d:
        return 0
    if d == 1:
        return 1 if delta == 0 else 0

    total = 0
    for k, b in enumerate(beta):
        if b:
            a2 = alpha[:k] + (alpha[k] + 1,) + alpha[k + 1 :]
            b2 = beta[:k] + (b - 1,) + beta[k + 1 :]
            total += (k + 1) * _count(d, delta, a2, b2)

    for a1 in _below(alpha):
        rest = d - 1 - _weight(a1)
        if rest < 0:
            continue
        for b1 in _above(beta, rest):
            if _weight(b1) != rest:
                continue
            gained = sum(x - y for x, y in zip(b1, beta))
            delta1 = delta - (d - 1) + gained
            if delta1 < 0:
                continue
            factor = 1
            for k, (x, y) in enumerate(zip(b1, beta)):
                factor *= (k + 1) ** (x - y) * comb(x, y)
            for x, y in zip(alpha, a1):
                factor *= comb(x, y)
            total += factor * _count(d - 1, delta1, a1, b1)

    return total


def severi_degree(d: int, delta: int) -> int:
    """Number of delta-nodal degree-d plane curves through d(d+3)/2 - delta general points"""
    zero = (0,) * d
    return _count(d, delta, zero, (d,) + (0,) * (d - 1))
