"""Row-insertion RSK on permutations and its signed-alphabet (BRKV) variant.

In the signed variant an incoming negative symbol bumps the leftmost entry
``>= s`` (so it may bump a copy of itself) while a positive symbol bumps the
leftmost entry ``> s``.  On permutations both rules coincide with ordinary
RSK.
"""
from __future__ import annotations

import json
from itertools import product
from fractions import Fraction
from typing import Iterable, Sequence

from .combinatorics import (
    Partition,
    Permutation,
    descent_stats,
    inverse,
    q_binomial,
)
from .errors import InvalidPair, ZeroSymbol

Tableau = tuple[tuple, ...]


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def _bumps(incoming, entry) -> bool:
    if incoming < 0:
        return entry >= incoming
    return entry > incoming


def _insert(rows: list[list], value) -> int:
    """Insert ``value`` into ``rows`` in place; return the row that grew."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([value])
            return r
        row = rows[r]
        for j, entry in enumerate(row):
            if _bumps(value, entry):
                row[j], value = value, entry
                break
        else:
            row.append(value)
            return r
        r += 1


def _freeze(rows: list[list]) -> Tableau:
    return tuple(tuple(row) for row in rows)


def brkv_insert(word: Sequence) -> tuple[Tableau, Tableau]:
    """Insertion and recording tableaux of a zero-free signed word.

    Symbols need only be comparable and have a sign, so auxiliary positive
    values (e.g. Fractions in (0, 1) standing in for mixed zeros) are fine.
    """
    p_rows: list[list] = []
    q_rows: list[list] = []
    for step, s in enumerate(word, start=1):
        if s == 0:
            raise ZeroSymbol("resolve zeros to auxiliary positive symbols before inserting")
        r = _insert(p_rows, s)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(step)
    return _freeze(p_rows), _freeze(q_rows)


def resolve_zeros(word: Sequence[int], zero_order: Sequence[int]) -> list:
    """Replace the zeros of ``word`` by distinct symbols strictly between 0 and 1.

    ``zero_order`` ranks the zeros left to right exactly as in
    :func:`shufflesym.shuffles.word_to_permutation`, so the recording
    tableau of the result equals that of the permutation.
    """
    r = len(zero_order)
    it = iter(zero_order)
    return [Fraction(next(it) + 1, r + 1) if s == 0 else s for s in word]


def rsk(pi: Permutation) -> tuple[Tableau, Tableau]:
    return brkv_insert(pi)


def rsk_shape(pi: Permutation) -> Partition:
    return shape(rsk(pi)[0])


def _is_standard(q: Tableau) -> bool:
    n = sum(len(row) for row in q)
    flat = sorted(v for row in q for v in row)
    if flat != list(range(1, n + 1)):
        return False
    return _rows_cols_ok(q, lambda a, b: a < b, lambda a, b: a < b)


def _rows_cols_ok(t: Tableau, row_ok, col_ok) -> bool:
    for i, row in enumerate(t):
        if any(not row_ok(a, b) for a, b in zip(row, row[1:])):
            return False
        if i > 0:
            above = t[i - 1]
            if len(row) > len(above):
                return False
            if any(not col_ok(above[j], row[j]) for j in range(len(row))):
                return False
    return True


def is_brkv_pair(p: Tableau, q: Tableau) -> bool:
    """Whether ``(p, q)`` meets the four conditions characterising the image of insertion."""
    if shape(p) != shape(q) or any(len(row) == 0 for row in p):
        return False
    if any(v == 0 for row in p for v in row):
        return False
    # weakly increasing rows/columns; a positive symbol never repeats down a
    # column, a negative symbol never repeats along a row
    row_ok = lambda a, b: a < b or (a == b and a > 0)
    col_ok = lambda a, b: a < b or (a == b and a < 0)
    return _rows_cols_ok(p, row_ok, col_ok) and _is_standard(q)


def brkv_inverse(p: Tableau, q: Tableau) -> tuple:
    """Recover the word whose insertion gives ``(p, q)`` by reverse bumping."""
    if not is_brkv_pair(p, q):
        raise InvalidPair(f"not an insertion pair: P={p}, Q={q}")
    p_rows = [list(row) for row in p]
    q_rows = [list(row) for row in q]
    n = sum(len(row) for row in q_rows)
    word = [None] * n
    for step in range(n, 0, -1):
        r = next(i for i, row in enumerate(q_rows) if row and row[-1] == step)
        q_rows[r].pop()
        value = p_rows[r].pop()
        if not q_rows[r]:
            q_rows.pop(r)
            p_rows.pop(r)
        for i in range(r - 1, -1, -1):
            row = p_rows[i]
            # rightmost entry that would have bumped ``value`` forward
            j = max(k for k, x in enumerate(row) if x < value or (x == value and x < 0))
            row[j], value = value, row[j]
        word[step - 1] = value
    return tuple(word)


def standard_tableaux(lam: Partition) -> Iterable[Tableau]:
    """All standard Young tableaux of shape ``lam``, by placing ``n`` in a corner."""
    n = sum(lam)
    if n == 0:
        yield ()
        return
    for r in range(len(lam)):
        if lam[r] > (lam[r + 1] if r + 1 < len(lam) else 0):
            smaller = list(lam)
            smaller[r] -= 1
            smaller_t = tuple(x for x in smaller if x)
            for t in standard_tableaux(smaller_t):
                rows = [list(row) for row in t]
                if r == len(rows):
                    rows.append([])
                rows[r].append(n)
                yield _freeze(rows)


def signed_tableaux(lam: Partition, alphabet: Sequence[int]) -> Iterable[Tableau]:
    """Every filling of ``lam`` from ``alphabet`` that can be an insertion tableau."""
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    letters = sorted(set(alphabet))
    for filling in product(letters, repeat=len(cells)):
        rows = [list(filling[sum(lam[:i]):sum(lam[:i + 1])]) for i in range(len(lam))]
        t = _freeze(rows)
        if _rows_cols_ok(t, lambda a, b: a < b or (a == b and a > 0),
                         lambda a, b: a < b or (a == b and a < 0)):
            yield t


def tableau_descents(q: Tableau) -> frozenset[int]:
    """``i`` such that ``i + 1`` lies in a strictly lower row than ``i``."""
    row_of = {v: i for i, row in enumerate(q) for v in row}
    n = len(row_of)
    return frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def maj_measure(pi: Permutation, p, q, k: int, l: int) -> Fraction:
    """Unnormalised weight ``p^maj(pi^-1) q^maj(pi) [k-d(pi^-1)+n-1, n]_p [l-d(pi)+n-1, n]_q``.

    Its pushforward under RSK shape is proportional to
    ``s_lam(1, 1/p, ..., 1/p^(k-1)) s_lam(1, 1/q, ..., 1/q^(l-1))``.
    """
    n = len(pi)
    p, q = Fraction(p), Fraction(q)
    fwd = descent_stats(pi)
    inv = descent_stats(inverse(pi))
    return (p**inv.maj * q**fwd.maj
            * q_binomial(k - inv.d + n - 1, n, p)
            * q_binomial(l - fwd.d + n - 1, n, q))


def tableau_to_json(t: Tableau) -> str:
    return json.dumps([[str(v) if isinstance(v, Fraction) else v for v in row] for row in t])


def tableau_from_json(text: str) -> Tableau:
    return _freeze([[Fraction(v) if isinstance(v, str) else v for v in row] for row in json.loads(text)])


def pretty(t: Tableau) -> str:
    """Rows left-justified in the English convention, as in the figures of the literature."""
    if not t:
        return "(empty)"
    width = max(len(str(v)) for row in t for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in t)
