from fractions import Fraction

import pytest

from wordseen.core import BinaryWord
from wordseen.exactprob import exact_seen_probability
from wordseen.recursions import (
    AlphaBeta,
    char_poly,
    delta_operator,
    pq_polynomials,
    sigma_closed_form,
    sigma_generating_identity,
    sigma_oracle,
    u_table,
    verify_suffix_bounds_m2,
    vn_pair_recursion,
    vn_single_recursion,
)


def test_alpha_beta():
    ab = AlphaBeta.for_window(2)
    assert (ab.alpha, ab.beta) == (Fraction(3, 4), Fraction(1, 4))
    assert AlphaBeta.for_window(5).beta == Fraction(1, 32)
    with pytest.raises(ValueError):
        AlphaBeta.for_window(0)


def test_pair_recursion_first_values():
    t = vn_pair_recursion(2, 6)
    assert t.v[:4] == (1, Fraction(3, 4), Fraction(5, 8), Fraction(17, 32))
    assert t.vprime[1:4] == (Fraction(1, 4), Fraction(1, 4), Fraction(7, 32))
    assert t.v[6] == Fraction(169, 512)


@pytest.mark.parametrize("M", [2, 3, 4, 5, 6])
def test_single_equals_pair(M):
    N = 60
    single = vn_single_recursion(M, N)
    pair = vn_pair_recursion(M, N)
    assert tuple(single) == pair.v


@pytest.mark.parametrize("M", [2, 3])
def test_by_start_rows(M):
    """v_{n,k} over start positions k sums to v_n; the k = 1 share is the
    automaton value with the first hit pinned to position 1."""
    t = vn_pair_recursion(M, 5)
    for n in range(1, 6):
        assert sum(t.by_start[n]) == t.v[n]
        w = BinaryWord.alternating(1, n)
        assert t.by_start[n][0] == exact_seen_probability(w, M, first_gap=1)


def test_recursion_matches_engine():
    for M in (2, 3, 4):
        t = vn_pair_recursion(M, 6)
        for n in range(7):
            w = BinaryWord.alternating(1, n)
            assert exact_seen_probability(w, M) == t.v[n]


def test_char_poly_roots():
    cp2 = char_poly(2)
    assert abs(cp2.root_small - 0.14644660940672624) < 1e-10
    assert abs(cp2.root_large - 0.8535533905932737) < 1e-10
    assert abs(char_poly(5).root_large - 0.99784) < 5e-6
    # f(1) = 2 beta^2 exactly
    for M in (2, 3, 4, 5):
        cp = char_poly(M)
        beta = AlphaBeta.for_window(M).beta
        assert cp.eval(Fraction(1)) == 2 * beta ** 2


def test_ratio_converges_to_larger_root():
    t = vn_pair_recursion(2, 40)
    assert abs(float(t.ratio(39)) - char_poly(2).root_large) < 1e-12


# ---------------------------------------------------------------------------
# two-block machinery
# ---------------------------------------------------------------------------

def test_sigma_hand_values():
    assert sigma_closed_form(2, 1, 1) == Fraction(1, 2)
    assert sigma_closed_form(2, 1, 2) == Fraction(3, 4)
    got, comp = sigma_oracle(2, 1, 1)
    assert got == Fraction(1, 2)
    # the two events partition the all-spacings-small event
    assert got + comp == AlphaBeta.for_window(2).alpha


@pytest.mark.parametrize("M", [2, 3, 4])
def test_sigma_closed_form_vs_oracle(M):
    for p in range(1, 5):
        for j in range(0, 5 - p + 1):
            assert sigma_closed_form(M, p, j) == sigma_oracle(M, p, j)[0]


def test_u_table_sandwich_small():
    t = u_table(2, 4, 4)
    vs = vn_single_recursion(2, 8)
    for p in range(5):
        for q in range(5):
            assert 0 <= t.delta[p][q] == vs[p + q] - t.u[p][q]
            if p + q:
                word = BinaryWord.two_block(p, q)
                assert exact_seen_probability(word, 2) <= t.u[p][q]
    # hand value: alpha^4 + beta*(alpha*5/16 + 1/16) = 100/256
    assert t.u[2][2] == Fraction(25, 64)


def test_u_oracle_crosscheck():
    u_table(3, 4, 4, check_oracle_upto=5)


def test_delta_operator_kills_alpha_powers():
    for M in (2, 3, 5):
        alpha = AlphaBeta.for_window(M).alpha
        grid = [[alpha ** p] * 6 for p in range(6)]
        for p in range(4):
            for q in range(4):
                assert delta_operator(M, grid, p, q) == 0


def test_pq_polynomials_window_two():
    poly = pq_polynomials(2)
    assert poly.p_coeffs == (0, 0, Fraction(1, 2), Fraction(-1, 2))
    assert poly.q_coeffs == (0, 0, Fraction(1, 2))


def test_pq_polynomials_structure():
    for M in (3, 7, 12):
        poly = pq_polynomials(M)
        assert poly.p_coeffs[0] == poly.p_coeffs[1] == 0
        assert sum(poly.p_coeffs) == 0           # P(1) = 0
        assert all(c >= 0 for c in poly.q_coeffs)
        assert poly.q_coeffs[M] == 1 - Fraction(2, 2 ** M)


@pytest.mark.parametrize("M,p", [(2, 0), (2, 3), (3, 2), (4, 1)])
def test_generating_identity(M, p):
    assert sigma_generating_identity(M, p, order=12)


# ---------------------------------------------------------------------------
# start-position bounds at window 2
# ---------------------------------------------------------------------------

def test_suffix_bounds_alternating():
    report = verify_suffix_bounds_m2(BinaryWord.alternating(1, 6))
    assert report.ok
    first = report.rows[0]
    assert (first.w_m, first.w_m1, first.w_m2) == (
        Fraction(3, 4), Fraction(1, 2), Fraction(1, 4))


def test_suffix_bounds_every_short_word():
    import itertools
    for n in range(1, 5):
        for letters in itertools.product((0, 1), repeat=n):
            assert verify_suffix_bounds_m2(BinaryWord(letters)).ok
