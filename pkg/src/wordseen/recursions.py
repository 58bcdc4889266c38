"""Exact recursions and certificates for alternating-word and two-block probabilities.

Notation fixed throughout: alpha = 1 - 2^-M, beta = 2^-M; v_n is the exact
probability that the alternating word of length n is M-seen, v_n' the
probability that its leftmost embedding needs the full window on the first
step (equivalently, starts at position M).  sigma_{p,j} and the u/w/delta
grids support the sandwich P(two-block seen) <= u_{p,q} <= v_{p+q}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import BinaryWord
from .exactprob import exact_seen_probability


@dataclass(frozen=True)
class AlphaBeta:
    """The pair alpha = 1 - 2^-M, beta = 2^-M for a window size."""

    M: int
    alpha: Fraction
    beta: Fraction

    @classmethod
    def for_window(cls, M: int) -> "AlphaBeta":
        if M < 1:
            raise ValueError(f"window M must be >= 1, got {M}")
        beta = Fraction(1, 2 ** M)
        return cls(M, 1 - beta, beta)

    def require_two_plus(self) -> "AlphaBeta":
        # alpha - M*beta > 0 from here on; everything in this module needs it
        if self.M < 2:
            raise ValueError(f"window M must be >= 2, got {self.M}")
        assert self.alpha - self.M * self.beta > 0
        return self


def _check_n(N: int) -> None:
    if N < 0:
        raise ValueError(f"table size must be >= 0, got {N}")


@dataclass(frozen=True)
class VnTable:
    """v_n, v_n' and the split by starting position, n = 0..N.

    by_start[n][k-1] is the probability that the alternating word of length
    n is seen with leftmost embedding starting at position k (1 <= k <= M);
    rows exist for n >= 1 and sum to v_n, with v_n' = the k = M entry.
    """

    M: int
    v: tuple[Fraction, ...]
    vprime: tuple[Fraction, ...]
    by_start: tuple[tuple[Fraction, ...], ...]

    @property
    def N(self) -> int:
        return len(self.v) - 1

    def ratio(self, n: int) -> Fraction:
        """v_{n+1} / v_n."""
        return self.v[n + 1] / self.v[n]


def vn_pair_recursion(M: int, N: int) -> VnTable:
    """Fill v/v' by the coupled two-term recursion, plus the per-start split.

    v_n = alpha*v_{n-1} + (alpha - M*beta)*v'_{n-1}
    v'_n = beta*v_{n-1} + (M-1)*beta*v'_{n-1}
    start k: v_{n,k} = 2^-k * v_{n-1} + (k-1)*2^-k * v'_{n-1}
    """
    ab = AlphaBeta.for_window(M).require_two_plus()
    _check_n(N)
    alpha, beta = ab.alpha, ab.beta
    v = [Fraction(1)]
    vprime = [Fraction(0)]
    rows: list[tuple[Fraction, ...]] = [()]  # empty word has no start
    for n in range(1, N + 1):
        prev_v, prev_p = v[-1], vprime[-1]
        row = tuple(
            Fraction(1, 2 ** k) * prev_v + Fraction(k - 1, 2 ** k) * prev_p
            for k in range(1, M + 1))
        rows.append(row)
        v.append(alpha * prev_v + (alpha - M * beta) * prev_p)
        vprime.append(beta * prev_v + (M - 1) * beta * prev_p)
    return VnTable(M, tuple(v), tuple(vprime), tuple(rows))


def vn_single_recursion(M: int, N: int) -> list[Fraction]:
    """Same v_n by the uncoupled second-order recursion
    v_{n+1} = (alpha + (M-1)*beta)*v_n - beta*(M - 2*alpha)*v_{n-1}."""
    ab = AlphaBeta.for_window(M).require_two_plus()
    _check_n(N)
    alpha, beta = ab.alpha, ab.beta
    v = [Fraction(1), alpha]
    while len(v) < N + 1:
        v.append((alpha + (M - 1) * beta) * v[-1] - beta * (M - 2 * alpha) * v[-2])
    return v[:N + 1]


@dataclass(frozen=True)
class CharPoly:
    """lambda^2 + b*lambda + c annihilating the v_n recursion, with its two
    real roots isolated in (0, M*beta) and (alpha, 1)."""

    M: int
    b: Fraction
    c: Fraction
    root_small: float
    root_large: float

    def eval(self, x: Fraction) -> Fraction:
        return x * x + self.b * x + self.c


def _bisect_root(b: Fraction, c: Fraction, lo: Fraction, hi: Fraction,
                 tol: float = 1e-12) -> float:
    f = lambda x: x * x + b * x + c
    flo = f(lo)
    assert flo != 0 and f(hi) != 0 and (flo > 0) != (f(hi) > 0)
    while float(hi - lo) > tol:
        mid = (lo + hi) / 2
        if (f(mid) > 0) == (flo > 0):
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def char_poly(M: int) -> CharPoly:
    """Characteristic polynomial of the single recursion; the sign pattern
    f(0) > 0 > f(M*beta), f(alpha) < 0 < f(1) = 2*beta^2 pins one root below
    M*beta and one in (alpha, 1)."""
    ab = AlphaBeta.for_window(M).require_two_plus()
    alpha, beta = ab.alpha, ab.beta
    b = -(alpha + (M - 1) * beta)
    c = beta * (M - 2 * alpha)
    f = lambda x: x * x + b * x + c
    assert f(Fraction(0)) > 0
    assert f(M * beta) < 0
    assert f(alpha) < 0
    assert f(Fraction(1)) == 2 * beta ** 2 > 0
    small = _bisect_root(b, c, Fraction(0), M * beta)
    large = _bisect_root(b, c, alpha, Fraction(1))
    return CharPoly(M, b, c, small, large)


# ---------------------------------------------------------------------------
# two-block machinery: sigma, u, w, delta
# ---------------------------------------------------------------------------

def sigma_closed_form(M: int, p: int, j: int) -> Fraction:
    """P(first p spacings all <= M and T_{p+j} > p*M), in closed form:
    beta^p * sum_i sum_l (-1)^(p-i) C(p,i) C(i*M, l), l < p + j."""
    AlphaBeta.for_window(M).require_two_plus()
    if p < 0 or j < 0:
        raise ValueError(f"indices must be >= 0, got ({p}, {j})")
    beta = Fraction(1, 2 ** M)
    total = 0
    for i in range(p + 1):
        inner = sum(comb(i * M, l) for l in range(p + j))
        total += (-1) ** (p - i) * comb(p, i) * inner
    return beta ** p * total


def sigma_oracle(M: int, p: int, j: int) -> tuple[Fraction, Fraction]:
    """(sigma, sigma') by exact dynamic programming over the spacing chain.

    Walks T_1..T_{p+j} with iid geometric(1/2) spacings; the first p steps
    are conditioned on spacing <= M by dropping violating mass, later steps
    keep an overflow bucket for T > p*M.  Independent of the closed form.
    """
    AlphaBeta.for_window(M).require_two_plus()
    if p < 0 or j < 0:
        raise ValueError(f"indices must be >= 0, got ({p}, {j})")
    horizon = p * M
    half = Fraction(1, 2)
    dist = {0: Fraction(1)}
    overflow = Fraction(0)
    for step in range(1, p + j + 1):
        nxt: dict[int, Fraction] = {}
        if step <= p:
            for t_val, mass in dist.items():
                for tau in range(1, M + 1):
                    new = t_val + tau
                    # tau <= M keeps T within p*M here, no overflow possible
                    nxt[new] = nxt.get(new, Fraction(0)) + mass * half ** tau
        else:
            for t_val, mass in dist.items():
                for tau in range(1, horizon - t_val + 1):
                    new = t_val + tau
                    nxt[new] = nxt.get(new, Fraction(0)) + mass * half ** tau
                overflow += mass * half ** (horizon - t_val)
        dist = nxt
    sigma = overflow
    sigma_prime = sum(dist.values(), Fraction(0))
    return sigma, sigma_prime


@dataclass(frozen=True)
class TwoBlockTable:
    """Grids sigma, sigma', u, w, delta for p <= P, j (or q) <= Q.

    u[p][q] bounds the seen probability of the word with p ones then q zeros
    from above; delta[p][q] = v_{p+q} - u[p][q] is its distance below the
    alternating-word value.
    """

    M: int
    P: int
    Q: int
    sigma: tuple[tuple[Fraction, ...], ...]
    sigma_prime: tuple[tuple[Fraction, ...], ...]
    u: tuple[tuple[Fraction, ...], ...]
    w: tuple[tuple[Fraction, ...], ...]
    delta: tuple[tuple[Fraction, ...], ...]


def u_table(M: int, P: int, Q: int, check_oracle_upto: int | None = None) -> TwoBlockTable:
    """Build the two-block grids from the sigma closed form.

    sigma' is the exact complement alpha^p - sigma; u is computed through
    both of its series expressions (one in sigma', one in sigma) and the two
    must agree entry by entry.  With check_oracle_upto set, sigma and
    sigma' are additionally recomputed by the spacing-chain oracle for all
    p + j up to that bound.
    """
    ab = AlphaBeta.for_window(M).require_two_plus()
    if P < 0 or Q < 0:
        raise ValueError(f"grid bounds must be >= 0, got ({P}, {Q})")
    if max(P, Q) > 40:
        raise ValueError(f"grid bound {max(P, Q)} exceeds the desk-scale budget")
    alpha, beta = ab.alpha, ab.beta

    sigma = [[sigma_closed_form(M, p, j) for j in range(Q + 1)] for p in range(P + 1)]
    sigma_prime = [[alpha ** p - sigma[p][j] for j in range(Q + 1)] for p in range(P + 1)]
    if check_oracle_upto is not None:
        for p in range(P + 1):
            for j in range(Q + 1):
                if p + j <= check_oracle_upto:
                    got = sigma_oracle(M, p, j)
                    if got != (sigma[p][j], sigma_prime[p][j]):
                        raise AssertionError(
                            f"sigma oracle disagrees with closed form at "
                            f"M={M}, p={p}, j={j}: {got} vs "
                            f"({sigma[p][j]}, {sigma_prime[p][j]})")

    u: list[list[Fraction]] = []
    w: list[list[Fraction]] = []
    for p in range(P + 1):
        u_row, w_row = [], []
        for q in range(Q + 1):
            from_prime = alpha ** (p + q) + beta * sum(
                (alpha ** (q - j) * sigma_prime[p][j] for j in range(1, q + 1)),
                Fraction(0))
            w_val = sum((alpha ** (q - j) * sigma[p][j] for j in range(1, q + 1)),
                        Fraction(0))
            from_sigma = alpha ** p - beta * w_val
            if from_prime != from_sigma:
                raise AssertionError(
                    f"u expressions disagree at M={M}, p={p}, q={q}")
            u_row.append(from_sigma)
            w_row.append(w_val)
        u.append(u_row)
        w.append(w_row)

    v = vn_single_recursion(M, P + Q)
    delta = [[v[p + q] - u[p][q] for q in range(Q + 1)] for p in range(P + 1)]
    freeze = lambda grid: tuple(tuple(row) for row in grid)
    return TwoBlockTable(M, P, Q, freeze(sigma), freeze(sigma_prime),
                         freeze(u), freeze(w), freeze(delta))


def delta_operator(M: int, grid, p: int, q: int) -> Fraction:
    """The mixed difference f_{p+1,q+1} - M*beta*f_{p,q+1}
    - (alpha-beta)*f_{p+1,q} + beta*(M-2*alpha)*f_{p,q} on any grid."""
    ab = AlphaBeta.for_window(M).require_two_plus()
    alpha, beta = ab.alpha, ab.beta
    if p < 0 or q < 0 or p + 1 >= len(grid) or q + 1 >= len(grid[p + 1]):
        raise ValueError(f"grid too small for the difference at ({p}, {q})")
    return (grid[p + 1][q + 1] - M * beta * grid[p][q + 1]
            - (alpha - beta) * grid[p + 1][q] + beta * (M - 2 * alpha) * grid[p][q])


@dataclass(frozen=True)
class PolyPQ:
    """Certificate pair: P with P(1) = 0 and vanishing low-order terms, and
    Q = P / (1 - x) whose coefficients are the partial sums of P's."""

    M: int
    p_coeffs: tuple[Fraction, ...]
    q_coeffs: tuple[Fraction, ...]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def pq_polynomials(M: int) -> PolyPQ:
    """P(x) = (1+x)^M [1-(alpha-beta)x] - 1 - (M+beta-alpha)x + x^2(M-2alpha)
    and its cofactor Q, with the structural identities asserted."""
    ab = AlphaBeta.for_window(M).require_two_plus()
    alpha, beta = ab.alpha, ab.beta
    binom = [Fraction(comb(M, k)) for k in range(M + 1)]
    p_coeffs = _poly_mul(binom, [Fraction(1), -(alpha - beta)])
    p_coeffs[0] -= 1
    p_coeffs[1] -= M + beta - alpha
    p_coeffs[2] += M - 2 * alpha

    assert sum(p_coeffs) == 0  # P(1) = 2^M (1 - alpha + beta) - 2 = 0
    assert p_coeffs[0] == 0 and p_coeffs[1] == 0
    assert p_coeffs[2] == comb(M, 2) - 2 * (alpha - M * beta)
    for k in range(3, M + 2):
        expect = Fraction(comb(M, k)) - (alpha - beta) * comb(M, k - 1)
        assert p_coeffs[k] == expect

    q_coeffs = []
    running = Fraction(0)
    for coeff in p_coeffs[:-1]:
        running += coeff
        q_coeffs.append(running)
    assert running + p_coeffs[-1] == 0  # exact division by (1 - x)
    # partial-sum identity: for 2 <= l <= M the coefficient of x^l in Q is
    # C(M,l) - 2*beta*sum_{k=l}^M C(M,k), equal to 1 - 2*beta at l = M
    for l in range(2, M + 1):
        expect = Fraction(comb(M, l)) - 2 * beta * sum(comb(M, k) for k in range(l, M + 1))
        assert q_coeffs[l] == expect
    assert q_coeffs[M] == 1 - 2 * beta
    return PolyPQ(M, tuple(p_coeffs), tuple(q_coeffs))


def sigma_generating_identity(M: int, p: int, order: int) -> bool:
    """Compare (1-x) * sum_j sigma_{p,j} x^(j-1) with
    beta^p x^-p [(1+x)^M - 1]^p coefficient by coefficient up to the order."""
    AlphaBeta.for_window(M).require_two_plus()
    if p < 0 or order < 0:
        raise ValueError(f"indices must be >= 0, got p={p}, order={order}")
    beta = Fraction(1, 2 ** M)

    base = [Fraction(comb(M, k)) for k in range(M + 1)]
    base[0] -= 1  # (1+x)^M - 1
    power = [Fraction(1)]
    for _ in range(p):
        power = _poly_mul(power, base)
    assert all(c == 0 for c in power[:p])  # divisible by x^p
    rhs = [beta ** p * c for c in power[p:]]

    sig = [sigma_closed_form(M, p, j) for j in range(order + 2)]
    for t in range(order + 1):
        lhs = sig[1] if t == 0 else sig[t + 1] - sig[t]
        rhs_t = rhs[t] if t < len(rhs) else Fraction(0)
        if lhs != rhs_t:
            return False
    return True


# ---------------------------------------------------------------------------
# window-2 suffix bounds behind the exact maximality proof
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuffixBoundRow:
    m: int
    w_m: Fraction       # P(last-m suffix is 2-seen)
    w_m1: Fraction      # ... with leftmost embedding starting at 1
    w_m2: Fraction      # ... starting at 2
    halving_exact: bool  # w_{m,1} = w_{m-1} / 2
    quarter_bound: bool  # w_{m,2} <= w_{m-1,2}/4 + w_{m-1}/4
    quarter_strict: bool
    below_vm: bool      # w_m <= v_m


@dataclass(frozen=True)
class SuffixBoundReport:
    word: BinaryWord
    rows: tuple[SuffixBoundRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.halving_exact and r.quarter_bound and r.below_vm
                   for r in self.rows)


def verify_suffix_bounds_m2(word: BinaryWord | str) -> SuffixBoundReport:
    """Exact suffix bookkeeping for window 2.

    For each suffix length m, split the seen probability by where the
    leftmost embedding starts: w_{m,1} halves exactly (the first letter
    either matches at position 1 or it does not), while w_{m,2} only obeys
    the one-sided quarter bound; together these force w_m <= v_m.
    """
    from .core import as_word
    M = 2
    w = as_word(word)
    n = w.n
    if n == 0:
        return SuffixBoundReport(w, ())
    vtab = vn_pair_recursion(M, n)

    w_m: list[Fraction] = [Fraction(1)]   # m = 0: empty suffix
    w_m1: list[Fraction] = [Fraction(0)]
    w_m2: list[Fraction] = [Fraction(0)]
    for m in range(1, n + 1):
        suf = w.suffix(m)
        start1 = exact_seen_probability(suf, M, first_gap=1)
        total = exact_seen_probability(suf, M)
        w_m1.append(start1)
        w_m2.append(total - start1)
        w_m.append(total)

    rows = []
    for m in range(1, n + 1):
        halving = w_m1[m] == w_m[m - 1] / 2
        if m == 1:
            quarter = w_m2[1] == Fraction(1, 4)
            strict = False
        else:
            bound = w_m2[m - 1] / 4 + w_m[m - 1] / 4
            quarter = w_m2[m] <= bound
            strict = w_m2[m] < bound
        rows.append(SuffixBoundRow(m, w_m[m], w_m1[m], w_m2[m], halving,
                                   quarter, strict, w_m[m] <= vtab.v[m]))
    return SuffixBoundReport(w, tuple(rows))
