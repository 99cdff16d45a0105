"""Admissible columns, symplectic tableaux and the type-C insertion scheme.

A column is a strictly increasing tuple of letters (top to bottom); a tableau
is a tuple of columns, left to right, with weakly decreasing heights.

Text format shared with the CLI: columns separated by ';', letters within a
column comma-separated top to bottom, barred letters with a leading '-'.
Example: ``-4,-2,2;-3,-2;-2,-1``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .algebra import Weight, is_dominant
from .crystal import Word, word_weight

Column = tuple[int, ...]
Tableau = tuple[Column, ...]


class SearchBudgetExceeded(RuntimeError):
    """A bounded word-rewriting search ran out of budget (indeterminate)."""


# ---------------------------------------------------------------- text format

def parse_tableau(text: str) -> Tableau:
    cols = []
    for part in text.split(";"):
        col = tuple(int(tok) for tok in part.split(","))
        if any(x == 0 for x in col):
            raise ValueError(f"zero letter in column {part!r}")
        if any(col[j] >= col[j + 1] for j in range(len(col) - 1)):
            raise ValueError(f"column {part!r} is not strictly increasing")
        cols.append(col)
    tab = tuple(cols)
    if any(len(tab[i]) < len(tab[i + 1]) for i in range(len(tab) - 1)):
        raise ValueError(f"column heights must weakly decrease: {text!r}")
    return tab


def format_tableau(tab: Tableau) -> str:
    return ";".join(",".join(str(x) for x in col) for col in tab)


# ------------------------------------------------------------- basic geometry

def reading(tab: Tableau) -> Word:
    """Concatenate the columns right to left, each top to bottom."""
    out = []
    for col in reversed(tab):
        out.extend(col)
    return tuple(out)


def column_heights(tab: Tableau) -> tuple[int, ...]:
    return tuple(len(c) for c in tab)


def shape(tab: Tableau) -> tuple[int, ...]:
    """Row lengths of the underlying Young diagram, longest first."""
    if not tab:
        return ()
    return tuple(
        sum(1 for c in tab if len(c) >= j) for j in range(1, len(tab[0]) + 1)
    )


def conjugate_heights(lam) -> list[int]:
    """Column heights of the diagram of a partition, left to right."""
    parts = [x for x in lam if x > 0]
    if not parts:
        return []
    return [sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1)]


def tableau_weight(tab: Tableau, n: int) -> Weight:
    return word_weight(reading(tab), n)


# ---------------------------------------------------------------- columns

def admissible_split(col: Column, n: int) -> tuple[Column, Column] | None:
    """Split an n-admissible column into (lC, rC); None when not admissible.

    For each unbarred z with both z and zbar in the column (ascending), the
    greedy substitute t is the lowest letter above both z and the previous
    substitute such that neither t nor tbar occurs in the column.  rC moves
    the unbarred member of each pair up to t, lC moves the barred member down
    to tbar.  Admissibility fails when a substitute would exceed n.
    """
    letters = set(col)
    pairs = sorted(z for z in letters if z > 0 and -z in letters)
    subs = {}
    prev = 0
    for z in pairs:
        t = max(prev, z) + 1
        while t <= n and (t in letters or -t in letters or t in subs.values()):
            t += 1
        if t > n:
            return None
        subs[z] = t
        prev = t
    if any(abs(x) > n for x in col):
        return None
    r_col = tuple(sorted(subs.get(x, x) for x in col))
    l_col = tuple(sorted(-subs[-x] if (x < 0 and -x in subs) else x for x in col))
    return l_col, r_col


def column_leq(c1: Column, c2: Column) -> bool:
    """c1 <= c2: c1 at least as tall and the rows of c1 c2 weakly increase."""
    if len(c1) < len(c2):
        return False
    return all(c1[j] <= c2[j] for j in range(len(c2)))


def is_symplectic(tab: Tableau, n: int) -> bool:
    """All columns n-admissible and rC_i <= lC_{i+1} for consecutive columns."""
    if any(len(tab[i]) < len(tab[i + 1]) for i in range(len(tab) - 1)):
        return False
    splits = []
    for col in tab:
        if any(col[j] >= col[j + 1] for j in range(len(col) - 1)):
            return False
        s = admissible_split(col, n)
        if s is None:
            return False
        splits.append(s)
    for i in range(len(tab) - 1):
        if not column_leq(splits[i][1], splits[i + 1][0]):
            return False
    return True


def minimal_rank(tab: Tableau) -> int:
    """Smallest n for which the tableau is n-symplectic."""
    n = max((abs(x) for col in tab for x in col), default=1)
    while not is_symplectic(tab, n):
        n += 1
        if n > 4 * sum(len(c) for c in tab) + 4:
            raise ValueError(f"not a symplectic tableau: {format_tableau(tab)}")
    return n


@lru_cache(maxsize=None)
def admissible_columns(height: int, n: int) -> tuple[Column, ...]:
    """All n-admissible columns of the given height, sorted."""
    letters = list(range(-n, 0)) + list(range(1, n + 1))
    return tuple(
        c
        for c in itertools.combinations(letters, height)
        if admissible_split(c, n) is not None
    )


# ---------------------------------------------------------------- insertion

def _bump_two(x: int, a: int, b: int) -> tuple[tuple[int, int], int]:
    """Insert x into the two-letter column (a, b), x <= b.

    The four elementary transformations; exactly one applies:
      1. a < x <= b, b != abar          -> ((a, x), b)
      2. x <= a < b, b != xbar          -> ((x, b), a)
      3. a = bbar, bbar <= x <= b       -> (((b+1)bar, x), b+1)
      4. x = bbar, bbar < a < b         -> (((b-1)bar, b-1), a)
    """
    if a == -b and -b <= x <= b:
        return (-(b + 1), x), b + 1
    if b > 0 and x == -b and -b < a < b:
        return (-(b - 1), b - 1), a
    if a < x <= b and b != -a:
        return (a, x), b
    if x <= a < b and b != -x:
        return (x, b), a
    raise ValueError(f"no transformation applies to {x} -> ({a}, {b})")


def _bump_column(x: int, col: Column) -> tuple[Column, int]:
    """Insert x into a column with x <= max; returns (C', bumped letter)."""
    k = len(col)
    if k == 1:
        return (x,), col[0]
    if k == 2:
        top, y = _bump_two(x, col[0], col[1])
        return top, y
    (delta, d_last), y = _bump_two(x, col[-2], col[-1])
    newcol, z = _bump_column(delta, col[:-2] + (y,))
    return newcol + (d_last,), z


def insert_into_column(x: int, col: Column):
    """Insert a letter into an admissible column.

    Returns the taller column when x exceeds every letter, otherwise the pair
    (C', y) with C' of equal height and y the bumped letter.
    """
    if x > col[-1]:
        return col + (x,)
    return _bump_column(x, col)


def insert_into_tableau(x: int, tab: Tableau) -> Tableau:
    """Contraction-free insertion: bump through columns left to right."""
    if not tab:
        return ((x,),)
    first = tab[0]
    if x > first[-1]:
        return (first + (x,),) + tab[1:]
    newcol, y = _bump_column(x, first)
    return (newcol,) + insert_into_tableau(y, tab[1:])


def insertion_tableau(w: Word) -> Tableau:
    """P(w): left-to-right fold of the insertion."""
    tab: Tableau = ()
    for x in w:
        tab = insert_into_tableau(x, tab)
    return tab


# ---------------------------------------------------------- reverse insertion

def _reverse_two(c: int, d: int, y: int) -> tuple[int, tuple[int, int]]:
    """Invert _bump_two: find (x, (a, b)) with _bump_two(x, a, b) = ((c, d), y)."""
    if y >= 2 and c == -y and -(y - 1) <= d <= y - 1:
        return d, (-(y - 1), y - 1)
    if d >= 1 and c == -d and -(d + 1) < y < d + 1:
        return -(d + 1), (y, d + 1)
    if c < d <= y and y != -c:
        return d, (c, y)
    if c <= y < d and d != -c:
        return c, (y, d)
    raise ValueError(f"no transformation produced (({c}, {d}), {y})")


def _reverse_bump_column(col: Column, z: int) -> tuple[int, Column]:
    """Invert _bump_column on (col, z)."""
    k = len(col)
    if k == 1:
        return col[0], (z,)
    if k == 2:
        x, pair = _reverse_two(col[0], col[1], z)
        return x, pair
    delta, sub = _reverse_bump_column(col[:-1], z)
    x, (a1, a2) = _reverse_two(delta, col[-1], sub[-1])
    return x, sub[:-1] + (a1, a2)


def outside_corners(tab: Tableau) -> list[int]:
    """Column indices whose bottom box has nothing below or to the right.

    Heights weakly decrease, so ascending index order is bottom-row-first.
    """
    out = []
    for j in range(len(tab)):
        nxt = len(tab[j + 1]) if j + 1 < len(tab) else 0
        if len(tab[j]) > nxt:
            out.append(j)
    return out


def reverse_insert(tab: Tableau, corner: int) -> tuple[int, Tableau]:
    """Undo an insertion whose new box landed on the given outside corner.

    Returns the unique (x, T) with insert_into_tableau(x, T) = tab and the
    shape of T equal to tab minus that corner box.
    """
    if corner not in outside_corners(tab):
        raise ValueError(f"column {corner} has no outside corner")
    cols = list(tab)
    y = cols[corner][-1]
    rest = cols[corner][:-1]
    if rest:
        cols[corner] = rest
    else:
        del cols[corner]
    for i in range(corner - 1, -1, -1):
        y, cols[i] = _reverse_bump_column(cols[i], y)
    return y, tuple(cols)


# ---------------------------------------------------------------- contraction

def contract_column(col: Column, n: int) -> Column:
    """Erase the (z, zbar) pair making a non-admissible column n-admissible.

    z is the maximal unbarred letter whose pair occurs in the column with
    card{t in column : |t| >= z} > n - z + 1.
    """
    if admissible_split(col, n) is not None:
        raise ValueError("column is already n-admissible")
    letters = set(col)
    for z in sorted((x for x in letters if x > 0 and -x in letters), reverse=True):
        if sum(1 for t in col if abs(t) >= z) > n - z + 1:
            out = tuple(t for t in col if t not in (z, -z))
            if out and admissible_split(out, n) is None:
                raise ValueError(f"contraction of {col} is not n-admissible")
            return out
    raise ValueError(f"no contractible pair in {col}")


# ------------------------------------------------------------ plactic closure

def _rewrites(w: Word, n: int) -> set[Word]:
    """Words one elementary relation away, staying inside the rank-n alphabet."""
    out = set()
    for p in range(len(w) - 2):
        a, b, x = w[p], w[p + 1], w[p + 2]
        head, tail = w[:p], w[p + 3 :]
        if a < x <= b and b != -a:
            out.add(head + (b, a, x) + tail)
        if b < x <= a and a != -b:  # inverse of relation 1
            out.add(head + (b, a, x) + tail)
        if x <= a < b and b != -x:
            out.add(head + (a, x, b) + tail)
        if b <= a < x and x != -b:  # inverse of relation 2
            out.add(head + (a, x, b) + tail)
        if 0 < b < n and a == -b and -b <= x <= b:
            out.add(head + (b + 1, -(b + 1), x) + tail)
        if a >= 2 and b == -a and -(a - 1) <= x <= a - 1:  # inverse of relation 3
            out.add(head + (-(a - 1), a - 1, x) + tail)
        if b > 0 and x == -b and -b < a < b:
            out.add(head + (a, -(b - 1), b - 1) + tail)
        if 1 <= x < n and b == -x and -(x + 1) < a < x + 1:  # inverse of relation 4
            out.add(head + (a, x + 1, -(x + 1)) + tail)
    return out


def plactic_equivalent(w1: Word, w2: Word, n: int, budget: int = 20000) -> bool:
    """Bounded bidirectional closure under the length-preserving relations.

    Raises SearchBudgetExceeded when the search explores more than ``budget``
    words without deciding; that outcome is indeterminate, not False.
    """
    if len(w1) != len(w2):
        raise ValueError("the contraction-free congruence preserves length")
    if w1 == w2:
        return True
    if word_weight(w1, n) != word_weight(w2, n):
        return False
    seen1, seen2 = {w1}, {w2}
    frontier1, frontier2 = {w1}, {w2}
    explored = 0
    while frontier1 or frontier2:
        # expand the smaller frontier
        if frontier1 and (not frontier2 or len(frontier1) <= len(frontier2)):
            frontier, seen, other = frontier1, seen1, seen2
            which = 1
        else:
            frontier, seen, other = frontier2, seen2, seen1
            which = 2
        nxt = set()
        for w in frontier:
            for v in _rewrites(w, n):
                if v in other:
                    return True
                if v not in seen:
                    seen.add(v)
                    nxt.add(v)
                    explored += 1
                    if explored > budget:
                        raise SearchBudgetExceeded(
                            f"plactic search exceeded {budget} states"
                        )
        if which == 1:
            frontier1 = nxt
        else:
            frontier2 = nxt
    return False


# ---------------------------------------------------------------- enumeration

def enumerate_tableaux(lam, mu: Weight, n: int) -> list[Tableau]:
    """All n-symplectic tableaux of shape lam whose reading has weight mu.

    Column-by-column backtracking with the split compatibility test; the
    result is sorted lexicographically by reading.
    """
    if not is_dominant(tuple(lam)):
        raise ValueError(f"{lam} is not dominant")
    heights = conjugate_heights(lam)
    mu = tuple(mu)
    if not heights:
        return [()] if not any(mu) else []
    pool = {h: admissible_columns(h, n) for h in set(heights)}
    boxes_after = [sum(heights[i:]) for i in range(len(heights) + 1)]
    results = []

    def recurse(idx, cols, diff):
        if idx == len(heights):
            if not any(diff):
                results.append(tuple(cols))
            return
        # each remaining box changes one weight entry by +-1
        if sum(abs(d) for d in diff) > boxes_after[idx]:
            return
        prev_r = admissible_split(cols[-1], n)[1] if cols else None
        for col in pool[heights[idx]]:
            if prev_r is not None and not column_leq(prev_r, admissible_split(col, n)[0]):
                continue
            newdiff = list(diff)
            for x in col:
                newdiff[n - abs(x)] -= 1 if x < 0 else -1
            cols.append(col)
            recurse(idx + 1, cols, newdiff)
            cols.pop()

    recurse(0, [], list(mu))
    return sorted(results, key=reading)
