"""Cocyclage, reduction, charge chains, the charge statistic and cyclage graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import is_dominant
from .crystal import Word
from .tableaux import (
    Column,
    Tableau,
    format_tableau,
    insert_into_tableau,
    insertion_tableau,
    outside_corners,
    reading,
    reverse_insert,
)


class ChainRepetitionError(RuntimeError):
    """A charge chain revisited a tableau, which the theory forbids."""


def cocyclage_shift(w: Word) -> Word:
    """xi: move the first letter to the end."""
    if not w:
        raise ValueError("empty word")
    return w[1:] + (w[0],)


def translate_word(w: Word) -> Word:
    """t applied letter-wise: k -> k+1, kbar -> (k+1)bar."""
    return tuple(x + 1 if x > 0 else x - 1 for x in w)


def translate(tab: Tableau) -> Tableau:
    """t applied to every letter of the tableau."""
    return tuple(tuple(x + 1 if x > 0 else x - 1 for x in col) for col in tab)


def _weight_counts(tab: Tableau) -> dict[int, int]:
    """Nonzero d_kbar values, keyed by k."""
    d: dict[int, int] = {}
    for col in tab:
        for x in col:
            d[abs(x)] = d.get(abs(x), 0) + (1 if x < 0 else -1)
    return {k: v for k, v in d.items() if v}


def weight_support_rank(tab: Tableau) -> int:
    """Largest k with d_kbar nonzero; 0 for weight-zero tableaux."""
    d = _weight_counts(tab)
    return max(d, default=0)


def has_zero_weight(tab: Tableau) -> bool:
    return not _weight_counts(tab)


def has_dominant_weight(tab: Tableau) -> bool:
    d = _weight_counts(tab)
    m = max(d, default=0)
    vec = tuple(d.get(k, 0) for k in range(m, 0, -1))
    return is_dominant(vec)


def is_authorized(tab: Tableau) -> bool:
    """True unless some letter occupies every column with its conjugate absent."""
    if len(tab) <= 1:
        raise ValueError("no cocyclage on columns")
    common = set(tab[0])
    for col in tab[1:]:
        common &= set(col)
    if not common:
        return True
    present = {x for col in tab for x in col}
    return all(-y in present for y in common)


def cocycle(tab: Tableau) -> Tableau:
    """U(T): pop the top box of the last column and insert its letter."""
    if not is_authorized(tab):
        raise ValueError(f"cocyclage not authorized for {format_tableau(tab)}")
    last = tab[-1]
    x = last[0]
    rest = last[1:]
    t_star = tab[:-1] + ((rest,) if rest else ())
    return insert_into_tableau(x, t_star)


def _reduction_step(tab: Tableau) -> Tableau:
    """The $-operation: erase the top-rank barred letters and translate the rest.

    The rank is the largest k with d_kbar nonzero; letters strictly between
    kbar and k move out by one step, letters beyond stay put.
    """
    n = weight_support_rank(tab)
    if n == 0:
        raise ValueError("weight-zero tableau admits no reduction")
    out = []
    for col in tab:
        newcol = []
        for x in col:
            if x == -n:
                continue
            if -n < x < n:
                newcol.append(x + 1 if x > 0 else x - 1)
            else:
                newcol.append(x)
        if newcol:
            out.append(tuple(sorted(newcol)))
    return tuple(out)


def reduce(tab: Tableau, n: int) -> tuple[Tableau, int]:
    """Apply $-operations until the cocyclage is defined or a weight-0 column.

    Requires the weight of ``tab`` to be dominant of rank at most n.  Returns
    the stabilized tableau together with the rank its weight still occupies
    (0 once the weight vanishes).  An already-authorized tableau is returned
    unchanged.
    """
    if not has_dominant_weight(tab):
        raise ValueError(f"weight of {format_tableau(tab)} is not dominant")
    if weight_support_rank(tab) > n:
        raise ValueError(f"weight of {format_tableau(tab)} exceeds rank {n}")
    cur = tab
    while True:
        if len(cur) <= 1:
            if has_zero_weight(cur):
                return cur, 0
        elif is_authorized(cur):
            return cur, weight_support_rank(cur)
        cur = _reduction_step(cur)


@dataclass(frozen=True)
class ChargeChain:
    """Trace of reduce-then-cocycle iterations down to a weight-0 column."""

    start: Tableau
    steps: tuple[tuple[Tableau, str], ...]  # (result, "cocyclage" | "reduction")
    terminal: Column
    p: int  # number of cocyclage steps

    def tableaux(self) -> list[Tableau]:
        return [self.start] + [t for t, _ in self.steps]


def charge_chain(tab: Tableau, n: int) -> ChargeChain:
    """Iterate reduction and cocyclage until a weight-0 column, recording steps.

    The theory guarantees termination without repetition; a repeat raises
    ChainRepetitionError since it can only come from an implementation bug.
    """
    if not has_dominant_weight(tab):
        raise ValueError(f"weight of {format_tableau(tab)} is not dominant")
    if weight_support_rank(tab) > n:
        raise ValueError(f"weight of {format_tableau(tab)} exceeds rank {n}")
    seen = {tab}
    steps: list[tuple[Tableau, str]] = []
    p = 0
    cur = tab

    def record(t: Tableau, kind: str):
        if t in seen:
            raise ChainRepetitionError(
                f"chain from {format_tableau(tab)} revisited {format_tableau(t)}"
            )
        seen.add(t)
        steps.append((t, kind))

    while True:
        while True:
            if len(cur) <= 1:
                if has_zero_weight(cur):
                    terminal = cur[0] if cur else ()
                    return ChargeChain(tab, tuple(steps), terminal, p)
            elif is_authorized(cur):
                break
            cur = _reduction_step(cur)
            record(cur, "reduction")
        cur = cocycle(cur)
        p += 1
        record(cur, "cocyclage")


def charge_column(col: Column, n: int) -> int:
    """2 * sum of (n - i) over unbarred i in the column with i+1 absent.

    Defined for weight-0 columns only; summands may be negative when the
    column uses letters above n.
    """
    counts: dict[int, int] = {}
    for x in col:
        counts[abs(x)] = counts.get(abs(x), 0) + (1 if x < 0 else -1)
    if any(counts.values()):
        raise ValueError(f"column {col} does not have weight zero")
    present = set(col)
    return 2 * sum(n - i for i in present if i > 0 and i + 1 not in present)


def charge(tab: Tableau, n: int) -> int:
    """Charge of the terminal column plus the number of cocyclage steps."""
    chain = charge_chain(tab, n)
    return charge_column(chain.terminal, n) + chain.p


# ----------------------------------------------------------------- the graphs

def predecessors(tab: Tableau) -> list[Tableau]:
    """All symplectic S with an authorized cocyclage and U(S) = tab.

    Reverse-insert at each outside corner; keep the pairs (x, T*) whose word
    x . w(T*) is itself the reading of a symplectic tableau (checked by
    re-inserting) that admits an authorized cocyclage.
    """
    out = []
    for corner in outside_corners(tab):
        try:
            x, t_star = reverse_insert(tab, corner)
        except ValueError:
            continue
        candidate = (x,) + reading(t_star)
        s = insertion_tableau(candidate)
        if reading(s) != candidate or len(s) <= 1:
            continue
        if is_authorized(s):
            out.append(s)
    return out


@dataclass(frozen=True)
class CyclageGraph:
    """Connected component of the cocyclage graph; a tree rooted at its sink."""

    vertices: tuple[Tableau, ...]  # sorted by reading
    edges: tuple[tuple[Tableau, Tableau], ...]  # (T, U(T)) pairs

    @property
    def sink(self) -> Tableau:
        with_out = {a for a, _ in self.edges}
        sinks = [v for v in self.vertices if v not in with_out]
        assert len(sinks) == 1
        return sinks[0]


def component(tab: Tableau) -> CyclageGraph:
    """Close {tab} under authorized cocyclages and their inverses."""
    verts = {tab}
    edges: set[tuple[Tableau, Tableau]] = set()
    queue = [tab]
    while queue:
        t = queue.pop()
        if len(t) > 1 and is_authorized(t):
            u = cocycle(t)
            edges.add((t, u))
            if u not in verts:
                verts.add(u)
                queue.append(u)
        for s in predecessors(t):
            edges.add((s, t))
            if s not in verts:
                verts.add(s)
                queue.append(s)
    ordered = tuple(sorted(verts, key=reading))
    return CyclageGraph(ordered, tuple(sorted(edges, key=lambda e: (reading(e[0]), reading(e[1])))))
