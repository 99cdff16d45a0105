import itertools
import random

import pytest

from symplectic_kf.algebra import rho
from symplectic_kf.kostant import (
    in_positive_root_cone,
    kostka_def,
    positive_roots,
    q_kostant,
)
from symplectic_kf.qpoly import QPolynomial


def brute_force_counts(beta, n):
    """Independent oracle: enumerate multisets of positive roots summing to beta."""
    roots = positive_roots(n)
    rhov = rho(n)

    def height(v):
        return sum(r * x for r, x in zip(rhov, v))

    counts = {}

    def rec(idx, remaining, used):
        if idx == len(roots):
            if not any(remaining):
                counts[used] = counts.get(used, 0) + 1
            return
        h = height(remaining)
        if h < 0:
            return
        a = roots[idx]
        ha = height(a)
        for k in range(h // ha + 1):
            rec(idx + 1, tuple(x - k * a[i] for i, x in enumerate(remaining)), used + k)

    rec(0, tuple(beta), 0)
    return {k: v for k, v in counts.items() if v}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_root_count_and_leading_signs(n):
    roots = positive_roots(n)
    assert len(roots) == n * n
    assert len(set(roots)) == n * n
    for r in roots:
        first = next(x for x in r if x)
        assert first > 0


def test_root_cone_membership():
    assert in_positive_root_cone((0, 0))
    assert in_positive_root_cone((1, -1))
    assert not in_positive_root_cone((-1, 1))
    assert not in_positive_root_cone((1, 0))  # odd sum


def test_q_kostant_fixtures():
    assert q_kostant((0, 0)) == QPolynomial.one()
    assert q_kostant(()) == QPolynomial.one()
    assert q_kostant((1, -1)) == QPolynomial.q_power(1)
    # three decompositions of (2,0): the doubled root, the two mixed roots,
    # and twice (1,-1) plus (0,2)
    assert q_kostant((2, 0)) == QPolynomial({1: 1, 2: 1, 3: 1})


def test_q_kostant_against_brute_force_exhaustive():
    for n in (1, 2):
        for beta in itertools.product(range(-4, 5), repeat=n):
            assert q_kostant(beta).coefficients() == brute_force_counts(beta, n), beta


def test_q_kostant_against_brute_force_rank3():
    rng = random.Random(7)
    betas = set(itertools.product(range(-2, 3), repeat=3))
    while len(betas) < 160:
        betas.add(tuple(rng.randint(-4, 4) for _ in range(3)))
    for beta in sorted(betas):
        assert q_kostant(beta).coefficients() == brute_force_counts(beta, 3), beta


def test_kostka_def_diagonal_is_one():
    for lam in [(0,), (3,), (2, 1), (3, 2, 0)]:
        assert kostka_def(lam, lam) == QPolynomial.one()


def test_kostka_def_rank1_closed_form():
    for lam in range(7):
        for mu in range(7):
            got = kostka_def((lam,), (mu,))
            if lam >= mu and (lam - mu) % 2 == 0:
                assert got == QPolynomial.q_power((lam - mu) // 2)
            else:
                assert got.is_zero()


def test_kostka_def_worked_fixture():
    assert kostka_def((2, 2, 0), (0, 0, 0)) == QPolynomial({2: 1, 4: 2, 6: 2, 8: 1})


def test_kostka_def_rejects_bad_input():
    with pytest.raises(ValueError):
        kostka_def((1, 2), (0, 0))
    with pytest.raises(ValueError):
        kostka_def((2, 1), (1, 2))
    with pytest.raises(ValueError):
        kostka_def((2, 1), (1,))


def dominant_vectors(n, size):
    for v in itertools.product(range(size + 1), repeat=n):
        if sum(v) <= size and all(v[i] >= v[i + 1] for i in range(n - 1)):
            yield v


def test_stability_under_rank_truncation():
    # equal first parts let the polynomial drop to the previous rank
    for n in (2, 3, 4):
        for lam in dominant_vectors(n, 6):
            for mu in dominant_vectors(n, 6):
                if lam[0] != mu[0]:
                    continue
                full = kostka_def(lam, mu)
                truncated = kostka_def(lam[1:], mu[1:])
                assert full == truncated, (lam, mu)


def test_kostka_def_coefficients_nonnegative():
    for lam in dominant_vectors(3, 5):
        for mu in dominant_vectors(3, 5):
            assert kostka_def(lam, mu).is_nonnegative()
