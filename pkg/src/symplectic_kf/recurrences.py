"""Pieri decomposition, recurrence formulas and the conjecture harness."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Weight, is_dominant
from .cyclage import charge, charge_column
from .kostant import kostka_def
from .qpoly import QPolynomial
from .tableaux import (
    Tableau,
    admissible_columns,
    enumerate_tableaux,
    format_tableau,
    tableau_weight,
)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def pieri(gamma: Weight, r: int, n: int) -> dict[Weight, int]:
    """Multiplicities n_lambda in the product of B(gamma) with the rank-n row crystal.

    Enumerates the tuples (k_1bar..k_nbar, k_1..k_n) summing to r; each
    solution of the three interleaving conditions contributes one copy of the
    weight lambda with lambda_ibar = gamma_ibar - k_i + k_ibar.
    """
    if len(gamma) != n or not is_dominant(gamma):
        raise ValueError(f"{gamma} is not a dominant rank-{n} weight")
    out: dict[Weight, int] = {}
    for ks in _compositions(r, 2 * n):
        kbar, kun = ks[:n], ks[n:]  # k_ibar, k_i indexed by i-1
        lam = [0] * n
        for i in range(1, n + 1):
            lam[n - i] = gamma[n - i] - kun[i - 1] + kbar[i - 1]
        if lam[n - 1] - kbar[0] < 0:
            continue
        if any(lam[n - i] > lam[n - i - 1] - kbar[i] for i in range(1, n)):
            continue
        if any(
            lam[n - i] - kbar[i - 1] < lam[n - i + 1] + kun[i - 2] - kbar[i - 2]
            for i in range(2, n + 1)
        ):
            continue
        key = tuple(lam)
        if is_dominant(key):
            out[key] = out.get(key, 0) + 1
    return out


def _kostka_rank1(lam: Weight, mu: Weight) -> QPolynomial:
    l, m = lam[0], mu[0]
    if l >= m >= 0 and (l - m) % 2 == 0:
        return QPolynomial.q_power((l - m) // 2)
    return QPolynomial.zero()


def kostka_morris(nu: Weight, mu: Weight, n: int) -> QPolynomial:
    """Rank-lowering recurrence over the Pieri decomposition.

    Valid under mu_nbar >= nu_(n-1)bar; the sum runs over r + 2m = l with
    l = nu_nbar - mu_nbar, weighting rank-(n-1) Kostka polynomials by q^(r+m).
    Lower-rank terms recurse while the hypothesis holds and otherwise fall
    back to the definitional sum, so the result is always exact.
    """
    if len(nu) != n or len(mu) != n:
        raise ValueError("rank mismatch")
    if not (is_dominant(nu) and is_dominant(mu)):
        raise ValueError("arguments must be dominant")
    if n == 1:
        return _kostka_rank1(nu, mu)
    if n < 2 or mu[0] < nu[1]:
        raise ValueError(f"hypothesis mu_nbar >= nu_(n-1)bar fails: {mu[0]} < {nu[1]}")
    l = nu[0] - mu[0]
    if l < 0:
        return QPolynomial.zero()
    nu_p, mu_p = nu[1:], mu[1:]
    total = QPolynomial.zero()
    for r in range(l % 2, l + 1, 2):
        m = (l - r) // 2
        inner = QPolynomial.zero()
        for lam, mult in pieri(nu_p, r, n - 1).items():
            if n - 1 == 1:
                k = _kostka_rank1(lam, mu_p)
            elif mu_p[0] >= lam[1]:
                k = kostka_morris(lam, mu_p, n - 1)
            else:
                k = kostka_def(lam, mu_p)
            inner = inner + mult * k
        total = total + inner.shift(r + m)
    return total


def kostka_row(p: int, mu: Weight, n: int) -> QPolynomial:
    """Closed form for a row shape: q^f(mu) * sum of q^theta(L) over the fiber.

    The fiber consists of the letter-count tuples with k_ibar - k_i = mu_ibar
    and total p; f(mu) = sum (n-i) mu_ibar and
    theta(L) = sum (2(n-i)+1)(k_ibar - mu_ibar).
    """
    if len(mu) != n or not is_dominant(mu):
        raise ValueError(f"{mu} is not a dominant rank-{n} weight")
    size = sum(mu)
    if p < size or (p - size) % 2:
        return QPolynomial.zero()
    f = sum((n - i) * mu[n - i] for i in range(1, n + 1))
    free = (p - size) // 2
    out: dict[int, int] = {}
    for extra in _compositions(free, n):
        theta = sum((2 * (n - i) + 1) * extra[i - 1] for i in range(1, n + 1))
        out[f + theta] = out.get(f + theta, 0) + 1
    return QPolynomial(out)


def kostka_column_rec(p: int, n: int) -> QPolynomial:
    """Two-column-height recurrence for K of a height-p column shape at weight 0.

    Evaluates (q-1) K_{gamma^p,0} + q K_{(1^p),0} + q K_{(1^(p-2)),0} at rank
    n-1, with every right-hand side supplied by the definitional sum; terms
    whose shape does not fit in rank n-1 vanish.
    """
    if not 2 <= p <= n:
        raise ValueError(f"need 2 <= p <= n, got p={p}, n={n}")

    def k_at(parts: tuple[int, ...], rank: int) -> QPolynomial:
        parts = tuple(x for x in parts if x)
        if len(parts) > rank:
            return QPolynomial.zero()
        lam = parts + (0,) * (rank - len(parts))
        return kostka_def(lam, (0,) * rank)

    gamma_p = (2,) + (1,) * (p - 2)
    k_gamma = k_at(gamma_p, n - 1)
    k_full = k_at((1,) * p, n - 1)
    k_less = k_at((1,) * (p - 2), n - 1)
    q = QPolynomial.q_power(1)
    return (q - QPolynomial.one()) * k_gamma + q * k_full + q * k_less


def charge_kostka(lam: Weight, mu: Weight, n: int) -> QPolynomial:
    """Sum of q^charge over the symplectic tableaux of shape lam and weight mu."""
    out: dict[int, int] = {}
    for tab in enumerate_tableaux(lam, mu, n):
        c = charge(tab, n)
        if c < 0:
            raise ValueError(
                f"negative charge {c} for {format_tableau(tab)} at rank {n}"
            )
        out[c] = out.get(c, 0) + 1
    return QPolynomial(out)


@dataclass(frozen=True)
class VerificationReport:
    """Side-by-side comparison of the definitional and charge-generated polynomials."""

    lam: Weight
    mu: Weight
    n: int
    k_definitional: QPolynomial
    k_charge: QPolynomial
    tableau_charges: tuple[tuple[Tableau, int], ...]

    @property
    def verdict(self) -> str:
        return "match" if self.k_definitional == self.k_charge else "mismatch"

    def to_text(self) -> str:
        lines = [
            f"lambda: {','.join(map(str, self.lam))}",
            f"mu: {','.join(map(str, self.mu))}",
            f"n: {self.n}",
            f"definitional: {self.k_definitional}",
            f"charge: {self.k_charge}",
        ]
        for tab, c in self.tableau_charges:
            lines.append(f"tableau: {format_tableau(tab)} charge: {c}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)

    def to_record(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "n": self.n,
            "definitional": {str(e): c for e, c in sorted(self.k_definitional.coefficients().items())},
            "charge": {str(e): c for e, c in sorted(self.k_charge.coefficients().items())},
            "tableaux": [
                {"tableau": format_tableau(t), "charge": c}
                for t, c in self.tableau_charges
            ],
            "verdict": self.verdict,
        }


def verify_conjecture(lam: Weight, mu: Weight, n: int) -> VerificationReport:
    """Compare kostka_def with the charge route; a mismatch is a finding, not an error."""
    k_def = kostka_def(lam, mu)
    listing = []
    out: dict[int, int] = {}
    for tab in enumerate_tableaux(lam, mu, n):
        c = charge(tab, n)
        listing.append((tab, c))
        out[c] = out.get(c, 0) + 1
    return VerificationReport(
        tuple(lam), tuple(mu), n, k_def, QPolynomial(out), tuple(listing)
    )


def verify_fundamental_conjecture(p: int, n: int) -> VerificationReport:
    """Check the fundamental-weight case over zero-weight columns of height n-p."""
    if (n - p) % 2:
        raise ValueError(f"zero weight needs an even column height, got n-p = {n - p}")
    lam = (1,) * (n - p) + (0,) * p
    mu = (0,) * n
    k_def = kostka_def(lam, mu)
    listing = []
    out: dict[int, int] = {}
    zero = (0,) * n
    for col in admissible_columns(n - p, n):
        if tableau_weight((col,), n) != zero:
            continue
        c = charge_column(col, n)
        listing.append(((col,), c))
        out[c] = out.get(c, 0) + 1
    return VerificationReport(lam, mu, n, k_def, QPolynomial(out), tuple(listing))
