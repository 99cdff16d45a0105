"""q-analogue of Kostant's partition function and the definitional Kostka sum."""

from __future__ import annotations

from functools import lru_cache

from .algebra import Weight, act, is_dominant, rho, weyl_group
from .qpoly import QPolynomial

_KOSTANT_MEMO: dict[tuple[int, Weight], QPolynomial] = {}


class PositivityError(RuntimeError):
    """A Kostka polynomial came out with a negative coefficient."""


def positive_roots(n: int) -> list[Weight]:
    """The n^2 positive roots, grouped by their leading coordinate position."""
    roots = []
    for i in range(n, 0, -1):
        for j in range(i - 1, 0, -1):
            r = [0] * n
            r[n - i] = 1
            r[n - j] = -1
            roots.append(tuple(r))
            r2 = [0] * n
            r2[n - i] = 1
            r2[n - j] = 1
            roots.append(tuple(r2))
        r3 = [0] * n
        r3[n - i] = 2
        roots.append(tuple(r3))
    return roots


def in_positive_root_cone(beta: Weight) -> bool:
    """Membership in the monoid spanned by positive roots.

    Equivalent to: every prefix sum of the coordinates is nonnegative and the
    total sum is even (the simple-root coefficients solved in closed form).
    """
    s = 0
    for b in beta:
        s += b
        if s < 0:
            return False
    return s % 2 == 0


def q_kostant(beta: Weight) -> QPolynomial:
    """Number of ways to write beta as a sum of exactly k positive roots, as q^k.

    Bounded dynamic programming over the roots in leading-position order:
    once all roots touching a coordinate have been consumed, that coordinate
    of the remainder must be exactly zero, which prunes hard.  Results are
    memoized per (rank, beta) across calls.
    """
    n = len(beta)
    key = (n, beta)
    cached = _KOSTANT_MEMO.get(key)
    if cached is not None:
        return cached
    if not in_positive_root_cone(beta):
        result = QPolynomial.zero()
        _KOSTANT_MEMO[key] = result
        return result
    roots = positive_roots(n)
    first_support = [next(i for i, x in enumerate(r) if x) for r in roots]
    rhov = rho(n)

    def height(v):
        return sum(r * x for r, x in zip(rhov, v))

    root_heights = [height(r) for r in roots]

    @lru_cache(maxsize=None)
    def count(idx: int, remaining: Weight):
        if idx == len(roots):
            return {0: 1} if not any(remaining) else {}
        fs = first_support[idx]
        if any(remaining[p] for p in range(fs)):
            return {}
        h = height(remaining)
        if h < 0:
            return {}
        a = roots[idx]
        out: dict[int, int] = {}
        for k in range(h // root_heights[idx] + 1):
            sub = count(idx + 1, tuple(x - k * a[i] for i, x in enumerate(remaining)))
            for e, c in sub.items():
                out[e + k] = out.get(e + k, 0) + c
        return out

    result = QPolynomial(count(0, beta))
    count.cache_clear()
    _KOSTANT_MEMO[key] = result
    return result


def kostka_def(lam: Weight, mu: Weight) -> QPolynomial:
    """Alternating Weyl-group sum over the q-Kostant partition function.

    Both arguments must be dominant weights of the same rank.  The result is
    checked for nonnegative coefficients; a violation signals a bug, not a
    property of the inputs.
    """
    n = len(lam)
    if len(mu) != n:
        raise ValueError(f"rank mismatch: {n} vs {len(mu)}")
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if not is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")
    rhov = rho(n)
    lam_rho = tuple(a + b for a, b in zip(lam, rhov))
    mu_rho = tuple(a + b for a, b in zip(mu, rhov))
    total: dict[int, int] = {}
    for sigma, length in weyl_group(n):
        beta = tuple(a - b for a, b in zip(act(sigma, lam_rho), mu_rho))
        if not in_positive_root_cone(beta):
            continue
        sign = -1 if length % 2 else 1
        for e, c in q_kostant(beta).coefficients().items():
            total[e] = total.get(e, 0) + sign * c
    result = QPolynomial(total)
    if not result.is_nonnegative():
        raise PositivityError(f"negative coefficient in K_({lam},{mu}): {result!r}")
    return result
