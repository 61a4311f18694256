"""Tableau combinatorics: hooklengths, promotion, evacuation, insertion."""

import itertools
import math

import pytest

from csplab import tableaux as tb
from csplab.errors import CapExceeded, PreconditionError
from csplab.qpoly import IntPolynomial, q_catalan


def _partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def test_hooklengths():
    assert tb.hooklengths((5, 4, 4, 2)) == (
        (8, 7, 5, 4, 1),
        (6, 5, 3, 2),
        (5, 4, 2, 1),
        (2, 1),
    )
    assert tb.hooklengths((5, 4, 4, 2))[1][1] == 5
    assert tb.hooklengths((3, 2)) == ((4, 3, 1), (2, 1))
    assert tb.hooklengths((1,)) == ((1,),)


def test_count_syt():
    assert tb.count_syt((3, 2)) == 5
    assert tb.count_syt((3, 3)) == 5
    assert tb.count_syt((7,)) == 1
    assert tb.count_syt((2, 2)) == 2


def test_q_count_syt():
    assert tb.q_count_syt((3, 2)) == IntPolynomial([1, 1, 1, 1, 1])
    assert tb.q_count_syt((6,)) == IntPolynomial([1])
    assert tb.q_count_syt((3, 3)) == IntPolynomial([1, 0, 1, 1, 1, 0, 1])
    assert tb.q_count_syt((3, 3)) == q_catalan(3)


@pytest.mark.parametrize("n", range(9))
def test_enumerate_matches_count(n):
    for lam in _partitions(n):
        tabs = tb.enumerate_syt(lam, cap=8)
        assert len(tabs) == tb.count_syt(lam)
        assert len(set(tabs)) == len(tabs)
        assert all(tb.is_standard(T) for T in tabs)
        assert tb.q_count_syt(lam)(1) == len(tabs)


def test_enumerate_syt_golden():
    assert tb.enumerate_syt((3, 2)) == (
        ((1, 2, 3), (4, 5)),
        ((1, 2, 4), (3, 5)),
        ((1, 2, 5), (3, 4)),
        ((1, 3, 4), (2, 5)),
        ((1, 3, 5), (2, 4)),
    )
    assert tb.enumerate_syt((1, 1, 1)) == (((1,), (2,), (3,)),)
    assert len(tb.enumerate_syt((2, 2))) == 2
    with pytest.raises(CapExceeded):
        tb.enumerate_syt((8, 8))


def test_promote_golden():
    assert tb.promote(((1, 3, 5), (2, 4, 6), (7,))) == ((1, 2, 4), (3, 5, 7), (6,))
    row = ((1, 2, 3, 4, 5),)
    assert tb.promote(row) == row
    cycle_a = [((1, 2, 3), (4, 5, 6)), ((1, 2, 5), (3, 4, 6)), ((1, 3, 4), (2, 5, 6))]
    cycle_b = [((1, 2, 4), (3, 5, 6)), ((1, 3, 5), (2, 4, 6))]
    for cyc in (cycle_a, cycle_b):
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert tb.promote(a) == b


@pytest.mark.parametrize("n", range(1, 8))
def test_promote_bijection(n):
    for lam in _partitions(n):
        tabs = tb.enumerate_syt(lam, cap=7)
        images = {tb.promote(T) for T in tabs}
        assert images == set(tabs)
        for T in tabs:
            assert tb.promote_inverse(tb.promote(T)) == T
            assert tb.promote(tb.promote_inverse(T)) == T


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)])
def test_promotion_order_on_rectangles(m, n):
    lam = (n,) * m
    for T in tb.enumerate_syt(lam, cap=m * n):
        S = T
        for _ in range(m * n):
            S = tb.promote(S)
        assert S == T


def test_evacuate_golden():
    assert tb.evacuate(((1, 3, 6), (2, 4), (5,))) == ((1, 2, 5), (3, 6), (4,))
    assert tb.evacuate(((1,),)) == ((1,),)


@pytest.mark.parametrize("n", range(1, 8))
def test_evacuate_involution(n):
    for lam in _partitions(n):
        for T in tb.enumerate_syt(lam, cap=7):
            assert tb.evacuate(tb.evacuate(T)) == T


def _staircase(n):
    return tuple(range(n, 0, -1))


def test_iota_golden():
    assert tb.pon_wang_iota(((1, 3, 6), (2, 4), (5,))) == (
        (1, 3, 6),
        (2, 4, 8),
        (5, 7, 11),
        (9, 10, 12),
    )
    assert tb.pon_wang_iota(((1,),)) == ((1,), (2,))
    with pytest.raises(PreconditionError):
        tb.pon_wang_iota(((1, 2), (3, 4)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_iota_commutes_with_promotion(n):
    for T in tb.enumerate_syt(_staircase(n), cap=12):
        assert tb.promote(tb.pon_wang_iota(T)) == tb.pon_wang_iota(tb.promote(T))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_staircase_promotion_power_is_transpose(n):
    N = n * (n + 1) // 2
    for T in tb.enumerate_syt(_staircase(n), cap=N):
        S = T
        for _ in range(N):
            S = tb.promote(S)
        assert S == tb.transpose_tableau(T)


def test_rsk_word_golden():
    P, Q = tb.rsk_word((3, 1, 4, 5, 2))
    assert P == ((1, 2, 5), (3, 4))
    assert Q == ((1, 3, 4), (2, 5))
    assert tb.rsk_word_inverse(P, Q) == (3, 1, 4, 5, 2)
    P, Q = tb.rsk_word((1, 2, 3, 4))
    assert P == Q == ((1, 2, 3, 4),)


@pytest.mark.parametrize("n", range(7))
def test_rsk_bijection_and_square_sum(n):
    shapes = {}
    for w in itertools.permutations(range(1, n + 1)):
        P, Q = tb.rsk_word(w)
        assert tb.shape(P) == tb.shape(Q)
        assert tb.is_standard(P) and tb.is_standard(Q)
        if n <= 6:
            assert tb.rsk_word_inverse(P, Q) == w
        shapes[tb.shape(P)] = shapes.get(tb.shape(P), 0) + 1
    assert sum(shapes.values()) == math.factorial(n)
    assert sum(tb.count_syt(lam) ** 2 for lam in _partitions(n)) == math.factorial(n)
    for lam, cnt in shapes.items():
        assert cnt == tb.count_syt(lam) ** 2


def test_rsk_matrix_golden():
    P, Q = tb.rsk_matrix([[1, 2, 0], [1, 0, 1]])
    assert P == ((1, 1, 2, 3), (2,))
    assert Q == ((1, 1, 1, 2), (2,))
    assert tb.rsk_matrix_inverse(P, Q) == ((1, 2, 0), (1, 0, 1))
    assert tb.rsk_matrix([[0, 0], [0, 0]]) == ((), ())


def test_rsk_matrix_permutation_case():
    w = (3, 1, 4, 5, 2)
    M = [[1 if w[i] == j + 1 else 0 for j in range(5)] for i in range(5)]
    assert tb.rsk_matrix(M) == tb.rsk_word(w)


def _matrices(nrows, ncols, total):
    cells = nrows * ncols
    for entries in itertools.product(range(total + 1), repeat=cells):
        if sum(entries) <= total:
            yield tuple(
                tuple(entries[r * ncols : (r + 1) * ncols]) for r in range(nrows)
            )


@pytest.mark.parametrize("nrows,ncols,total", [(2, 2, 4), (2, 3, 4), (3, 3, 3)])
def test_rsk_matrix_roundtrip(nrows, ncols, total):
    def strip(seq):
        out = list(seq)
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    for M in _matrices(nrows, ncols, total):
        P, Q = tb.rsk_matrix(M)
        assert tb.is_semistandard(P) and tb.is_semistandard(Q)
        assert tb.shape(P) == tb.shape(Q)
        # content of P is the column sums, content of Q the row sums
        assert tb.content(P) == strip(sum(col) for col in zip(*M))
        assert tb.content(Q) == strip(sum(row) for row in M)
        assert tb.rsk_matrix_inverse(P, Q, nrows, ncols) == M


def test_ballot():
    assert tb.ballot_sequence(((1, 3, 5), (2, 4, 6), (7,))) == (1, 2, 1, 2, 1, 2, 3)
    assert tb.ballot_sequence(((1, 2, 3),)) == (1, 1, 1)
    assert tb.ballot_sequence(((1, 2), (3, 4))) == (1, 1, 2, 2)
    assert tb.tableau_from_ballot((1, 2, 1, 2, 1, 2, 3)) == (
        (1, 3, 5),
        (2, 4, 6),
        (7,),
    )
    with pytest.raises(PreconditionError):
        tb.tableau_from_ballot((2, 1))


def test_tableau_to_matching_golden():
    assert tb.tableau_to_matching(((1, 2, 4, 5), (3, 6, 7, 8))) == (
        (1, 8),
        (2, 3),
        (4, 7),
        (5, 6),
    )
    assert tb.tableau_to_matching(((1, 2), (3, 4))) == ((1, 4), (2, 3))
    with pytest.raises(PreconditionError):
        tb.tableau_to_matching(((1, 2, 3), (4, 5)))


@pytest.mark.parametrize("n", range(1, 7))
def test_tableau_matching_bijection(n):
    tabs = tb.enumerate_syt((n, n), cap=2 * n)
    images = {tb.tableau_to_matching(T) for T in tabs}
    assert len(images) == len(tabs)
    for T in tabs:
        assert tb.matching_to_tableau(tb.tableau_to_matching(T)) == T


def test_content_and_labels():
    assert tb.content(((1, 1, 2), (2,))) == (2, 2)
    assert tb.tableau_label(((1, 2, 5), (3, 4))) == "125/34"
    assert tb.tableau_label(((1, 2, 10), (3, 11))) == "1,2,10/3,11"
