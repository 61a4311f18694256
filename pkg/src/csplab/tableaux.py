"""Partitions, Young tableaux, promotion, evacuation, and row insertion.

Tableaux are tuples of row tuples in English notation, addressed (row,
column) 1-based.  A standard tableau of shape lam holds 1..n with rows and
columns strictly increasing; a semistandard one weakly increases along rows
and strictly down columns.
"""
from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, InternalInvariantError, PreconditionError
from .qpoly import IntPolynomial, exact_divide, q_factorial, q_int

__all__ = [
    "Tableau", "shape", "is_standard", "is_semistandard", "content",
    "tableau_label", "hooklengths", "count_syt", "q_count_syt",
    "enumerate_syt", "promote", "promote_inverse", "evacuate",
    "transpose_tableau", "pon_wang_iota", "rsk_word", "rsk_word_inverse",
    "rsk_matrix", "rsk_matrix_inverse", "ballot_sequence",
    "tableau_from_ballot", "tableau_to_matching", "matching_to_tableau",
    "SYT_CELL_CAP",
]

Tableau = tuple[tuple[int, ...], ...]

SYT_CELL_CAP = 12  # default bound on cells for single-shape enumeration


def _check_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise PreconditionError(f"{lam} is not a partition")
    return lam


def shape(T: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in T)


def is_standard(T: Tableau) -> bool:
    n = sum(len(row) for row in T)
    entries = sorted(x for row in T for x in row)
    if entries != list(range(1, n + 1)):
        return False
    return is_semistandard(T) and all(
        row[j] < row[j + 1] for row in T for j in range(len(row) - 1)
    )


def is_semistandard(T: Tableau) -> bool:
    lam = shape(T)
    if lam and tuple(sorted(lam, reverse=True)) != lam:
        return False
    for row in T:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(len(T) - 1):
        for j in range(len(T[i + 1])):
            if T[i][j] >= T[i + 1][j]:
                return False
    return True


def content(T: Tableau) -> tuple[int, ...]:
    """Multiplicity vector: entry k appears content(T)[k-1] times."""
    entries = [x for row in T for x in row]
    if not entries:
        return ()
    out = [0] * max(entries)
    for x in entries:
        out[x - 1] += 1
    return tuple(out)


def tableau_label(T: Tableau) -> str:
    """Rows joined by '/'; digit strings while entries fit in one digit."""
    if all(x <= 9 for row in T for x in row):
        return "/".join("".join(str(x) for x in row) for row in T)
    return "/".join(",".join(str(x) for x in row) for row in T)


# ---------------------------------------------------------------------------
# hooklengths and counts


def hooklengths(lam: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Hooklength of each cell: arm + leg + 1."""
    lam = _check_partition(lam)
    cols = [sum(1 for p in lam if p >= j + 1) for j in range(lam[0] if lam else 0)]
    return tuple(
        tuple(lam[i] - (j + 1) + cols[j] - (i + 1) + 1 for j in range(lam[i]))
        for i in range(len(lam))
    )


def count_syt(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape lam: n! over the hook product."""
    lam = _check_partition(lam)
    n = sum(lam)
    hooks = math.prod(h for row in hooklengths(lam) for h in row)
    count, rem = divmod(math.factorial(n), hooks)
    if rem:
        raise InternalInvariantError(f"hook product does not divide {n}!")
    return count


def q_count_syt(lam: Sequence[int]) -> IntPolynomial:
    """q-analogue of count_syt: [n]_q! divided exactly by the product of
    the q-analogues of the hooklengths."""
    lam = _check_partition(lam)
    n = sum(lam)
    den = IntPolynomial((1,))
    for row in hooklengths(lam):
        for h in row:
            den = den * q_int(h)
    return exact_divide(q_factorial(n), den)


def enumerate_syt(lam: Sequence[int], cap: int = SYT_CELL_CAP) -> tuple[Tableau, ...]:
    """All standard tableaux of shape lam, by filling 1..n row-wise under
    the usual column constraint."""
    lam = _check_partition(lam)
    n = sum(lam)
    if n > cap:
        raise CapExceeded(f"shape has {n} cells, over the cap of {cap}")
    rows: list[list[int]] = [[] for _ in lam]

    def fill(m: int) -> Iterator[Tableau]:
        if m > n:
            yield tuple(tuple(row) for row in rows)
            return
        for r in range(len(lam)):
            if len(rows[r]) < lam[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(m)
                yield from fill(m + 1)
                rows[r].pop()

    return tuple(fill(1))


# ---------------------------------------------------------------------------
# promotion and evacuation


def promote(T: Tableau) -> Tableau:
    """Promotion: remove the 1, slide the hole to a corner by always
    exchanging with the smaller of the neighbors below and to the right,
    then decrement everything and write n in the freed corner."""
    rows = [list(row) for row in T]
    n = sum(len(r) for r in rows)
    if n == 0:
        return T
    i = j = 0
    while True:
        below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        if below is None and right is None:
            break
        if right is None or (below is not None and below < right):
            rows[i][j] = below
            i += 1
        else:
            rows[i][j] = right
            j += 1
    out = [[x - 1 for x in row] for row in rows]
    out[i][j] = n
    return tuple(tuple(row) for row in out)


def promote_inverse(T: Tableau) -> Tableau:
    """Inverse promotion: remove n, slide the hole back to (1,1) exchanging
    with the larger of the neighbors above and to the left, increment, and
    write 1 at the origin."""
    rows = [list(row) for row in T]
    n = sum(len(r) for r in rows)
    if n == 0:
        return T
    i, j = next(
        (r, c) for r, row in enumerate(rows) for c, x in enumerate(row) if x == n
    )
    while (i, j) != (0, 0):
        above = rows[i - 1][j] if i > 0 else None
        left = rows[i][j - 1] if j > 0 else None
        if left is None or (above is not None and above > left):
            rows[i][j] = above
            i -= 1
        else:
            rows[i][j] = left
            j -= 1
    out = [[x + 1 for x in row] for row in rows]
    out[0][0] = 1
    return tuple(tuple(row) for row in out)


def evacuate(T: Tableau) -> Tableau:
    """Evacuation: n truncated promotions.  After the i-th slide the freed
    cell receives n-i+1 and freezes; frozen cells block later slides.
    An involution on standard tableaux."""
    rows = [list(row) for row in T]
    n = sum(len(r) for r in rows)
    frozen = [[False] * len(row) for row in rows]

    def movable(r: int, c: int) -> int | None:
        if r < len(rows) and c < len(rows[r]) and not frozen[r][c]:
            return rows[r][c]
        return None

    for step in range(n):
        i = j = 0
        while True:
            below = movable(i + 1, j)
            right = movable(i, j + 1)
            if below is None and right is None:
                break
            if right is None or (below is not None and below < right):
                rows[i][j] = below
                i += 1
            else:
                rows[i][j] = right
                j += 1
        for r, row in enumerate(rows):
            for c in range(len(row)):
                if not frozen[r][c]:
                    row[c] -= 1
        rows[i][j] = n - step
        frozen[i][j] = True
    return tuple(tuple(row) for row in rows)


def transpose_tableau(T: Tableau) -> Tableau:
    """Reflect through the main diagonal: cell (i,j) goes to (j,i)."""
    if not T:
        return T
    return tuple(
        tuple(T[i][j] for i in range(len(T)) if j < len(T[i]))
        for j in range(len(T[0]))
    )


def pon_wang_iota(T: Tableau) -> Tableau:
    """Embed a staircase tableau of shape (n, n-1, ..., 1) into a rectangle
    of shape (n^(n+1)): evacuate, complement entries through n(n+1)+1,
    reflect in the anti-diagonal, and paste below/right of the original.
    Commutes with promotion."""
    lam = shape(T)
    n = len(lam)
    if lam != tuple(range(n, 0, -1)) or not is_standard(T):
        raise PreconditionError("input must be a standard staircase tableau")
    total = n * (n + 1)
    comp = tuple(
        tuple(total + 1 - x for x in row) for row in evacuate(T)
    )
    out = []
    for r in range(1, n + 2):
        row = []
        for c in range(1, n + 1):
            if r <= n and c <= lam[r - 1]:
                row.append(T[r - 1][c - 1])
            else:
                row.append(comp[n - c][n + 1 - r])
        out.append(tuple(row))
    result = tuple(out)
    if not is_standard(result):
        raise InternalInvariantError("pasted tableau is not standard")
    return result


# ---------------------------------------------------------------------------
# row insertion


def _insert(rows: list[list[int]], record: list[list[int]], x: int, mark: int) -> None:
    """Insert x by bumping; write mark into the recording rows at the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            record.append([mark])
            return
        row = rows[r]
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(row):
            row.append(x)
            record[r].append(mark)
            return
        row[lo], x = x, row[lo]
        r += 1


def rsk_word(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insert w(1), ..., w(n); P is the insertion tableau and Q records
    the growth, giving the classical bijection with same-shape pairs."""
    rows: list[list[int]] = []
    record: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        _insert(rows, record, x, step)
    P = tuple(tuple(r) for r in rows)
    Q = tuple(tuple(r) for r in record)
    return P, Q


def _reverse_bump(rows: list[list[int]], r: int, c: int) -> int:
    """Undo an insertion that ended at cell (r, c); return the inserted value."""
    x = rows[r].pop(c)
    if not rows[r]:
        rows.pop(r)
    for rr in range(r - 1, -1, -1):
        row = rows[rr]
        # rightmost entry strictly less than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        row[lo - 1], x = x, row[lo - 1]
    return x


def rsk_word_inverse(P: Tableau, Q: Tableau) -> tuple[int, ...]:
    """Recover the word from its insertion/recording pair."""
    if shape(P) != shape(Q) or not is_standard(Q):
        raise PreconditionError("need standard Q with the shape of P")
    rows = [list(r) for r in P]
    n = sum(len(r) for r in P)
    positions = {Q[r][c]: (r, c) for r in range(len(Q)) for c in range(len(Q[r]))}
    out = []
    for step in range(n, 0, -1):
        r, c = positions[step]
        out.append(_reverse_bump(rows, r, c))
    return tuple(reversed(out))


def rsk_matrix(M: Sequence[Sequence[int]]) -> tuple[Tableau, Tableau]:
    """Knuth's generalization: expand M into the lexicographic two-line
    array with column (i over j) repeated M[i][j] times, insert the bottom
    row, and record the top row."""
    if any(len(row) != len(M[0]) for row in M):
        raise PreconditionError("matrix rows must have equal length")
    if any(x < 0 for row in M for x in row):
        raise PreconditionError("matrix entries must be nonnegative")
    rows: list[list[int]] = []
    record: list[list[int]] = []
    for i, row in enumerate(M, start=1):
        for j, mult in enumerate(row, start=1):
            for _ in range(mult):
                _insert(rows, record, j, i)
    P = tuple(tuple(r) for r in rows)
    Q = tuple(tuple(r) for r in record)
    return P, Q


def rsk_matrix_inverse(
    P: Tableau, Q: Tableau, nrows: int = 0, ncols: int = 0
) -> tuple[tuple[int, ...], ...]:
    """Recover the nonnegative matrix from a same-shape semistandard pair.

    Equal recording entries were created left to right, so they are removed
    right to left (within one value the filled cells form a horizontal
    strip, making the rightmost column unambiguous).
    """
    if shape(P) != shape(Q) or not is_semistandard(P) or not is_semistandard(Q):
        raise PreconditionError("need same-shape semistandard P and Q")
    rows = [list(r) for r in P]
    qrows = [list(r) for r in Q]
    pairs = []
    remaining = sum(len(r) for r in qrows)
    while remaining:
        top = max(x for row in qrows for x in row)
        r, c = max(
            ((rr, len(row) - 1) for rr, row in enumerate(qrows) if row and row[-1] == top),
            key=lambda rc: rc[1],
        )
        qrows[r].pop()
        if not qrows[r]:
            qrows.pop(r)
        pairs.append((top, _reverse_bump(rows, r, c)))
        remaining -= 1
    pairs.reverse()
    nrows = max(nrows, max((i for i, _ in pairs), default=0))
    ncols = max(ncols, max((j for _, j in pairs), default=0))
    M = [[0] * ncols for _ in range(nrows)]
    for i, j in pairs:
        M[i - 1][j - 1] += 1
    return tuple(tuple(row) for row in M)


# ---------------------------------------------------------------------------
# ballot words and matchings


def ballot_sequence(T: Tableau) -> tuple[int, ...]:
    """b_m is the row containing m; standardness makes every prefix have at
    least as many i's as (i+1)'s, which is re-checked here."""
    if not is_standard(T):
        raise PreconditionError("ballot sequences are read off standard tableaux")
    n = sum(len(r) for r in T)
    b = [0] * n
    for r, row in enumerate(T, start=1):
        for x in row:
            b[x - 1] = r
    counts = [0] * (len(T) + 1)
    for x in b:
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            raise InternalInvariantError("prefix condition failed")
    return tuple(b)


def tableau_from_ballot(b: Sequence[int]) -> Tableau:
    """Inverse of ballot_sequence: put m into row b[m-1]."""
    rows: list[list[int]] = []
    for m, r in enumerate(b, start=1):
        while len(rows) < r:
            rows.append([])
        rows[r - 1].append(m)
    T = tuple(tuple(row) for row in rows)
    if not is_standard(T):
        raise PreconditionError(f"{b} is not a ballot sequence")
    return T


def tableau_to_matching(T: Tableau) -> tuple[tuple[int, int], ...]:
    """Two-row rectangular tableaux to noncrossing perfect matchings: read
    the ballot word as parentheses (row 1 opens, row 2 closes) and match
    them.  Promotion corresponds to rotating vertex i to i-1 (mod 2n)."""
    lam = shape(T)
    if len(lam) != 2 or lam[0] != lam[1]:
        raise PreconditionError("need a tableau of shape (n, n)")
    stack: list[int] = []
    edges = []
    for pos, r in enumerate(ballot_sequence(T), start=1):
        if r == 1:
            stack.append(pos)
        else:
            edges.append((stack.pop(), pos))
    return tuple(sorted(edges))


def matching_to_tableau(edges: Iterable[tuple[int, int]]) -> Tableau:
    """Inverse: openers (smaller endpoints) go to row 1, closers to row 2."""
    edges = [tuple(sorted(e)) for e in edges]
    verts = sorted(v for e in edges for v in e)
    if verts != list(range(1, 2 * len(edges) + 1)):
        raise PreconditionError("edges must perfectly match 1..2n")
    b = [0] * len(verts)
    for a, z in edges:
        b[a - 1] = 1
        b[z - 1] = 2
    return tableau_from_ballot(b)
