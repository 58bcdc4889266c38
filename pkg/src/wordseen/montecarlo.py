"""Seeded simulation: seen-probability estimates, red grids, and couplings.

All randomness flows through RngConfig so identical configurations replay
identical sample streams.  Estimation batches trials into numpy bit
matrices and runs the reachability recursion across all trials at once;
row i of a batch is trial i, so per-trial draws stay addressable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .core import (
    BinaryWord,
    SequencePrefix,
    WordLike,
    _check_window,
    as_prefix,
    as_word,
    seen_within,
)

_GENERATORS = ("pcg64",)


@dataclass(frozen=True)
class RngConfig:
    """Root seed plus generator family; substreams fork off by integer keys."""

    seed: int
    generator: str = "pcg64"

    def __post_init__(self) -> None:
        if self.generator not in _GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}, "
                             f"expected one of {_GENERATORS}")

    def stream(self, *key: int) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=tuple(key))
        return np.random.Generator(np.random.PCG64(ss))


def _check_p(p: float, name: str = "p") -> float:
    p = float(p)
    if not 0 < p < 1:
        raise ValueError(f"{name} must be strictly between 0 and 1, got {p}")
    return p


def sample_sequence(p: float, length: int, gen: np.random.Generator) -> SequencePrefix:
    """One iid 0/1 prefix with P(letter = 1) = p."""
    _check_p(p)
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    bits = (gen.random(length) < p).astype(np.uint8)
    return SequencePrefix(tuple(int(b) for b in bits))


def batch_seen(words: np.ndarray, ys: np.ndarray, M: int) -> np.ndarray:
    """Vectorized reachability over rows: words (R, n) against ys (R, L)."""
    R, L = ys.shape
    n = words.shape[1]
    reach = np.zeros((R, L + 1), dtype=bool)
    reach[:, 0] = True
    alive = np.ones(R, dtype=bool)
    for k in range(n):
        spread = np.zeros((R, L + 1), dtype=bool)
        for g in range(1, M + 1):
            spread[:, g:] |= reach[:, :-g]
        match = ys == words[:, k:k + 1]
        reach[:, :] = False
        reach[:, 1:] = spread[:, 1:] & match
        alive &= reach.any(axis=1)
        if not alive.any():
            break
    return reach.any(axis=1)


@dataclass(frozen=True)
class SeenEstimate:
    """Monte Carlo estimate with its binomial standard error."""

    word: str
    M: int
    p: float
    trials: int
    estimate: float
    stderr: float
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "word": self.word, "M": self.M, "p": self.p, "trials": self.trials,
            "estimate": self.estimate, "stderr": self.stderr, "seed": self.seed,
        }


def estimate_seen_probability(word: WordLike, M: int, p: float, trials: int,
                              rng: RngConfig) -> SeenEstimate:
    """Estimate P(word is M-seen) from `trials` independent prefixes."""
    w = as_word(word)
    _check_window(M)
    _check_p(p)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    gen = rng.stream(0)
    if w.n == 0:
        hits = trials
    else:
        L = w.n * M
        ys = (gen.random((trials, L)) < p).astype(np.uint8)
        words = np.tile(np.array(w.letters, dtype=np.uint8), (trials, 1))
        hits = int(batch_seen(words, ys, M).sum())
    est = hits / trials
    stderr = math.sqrt(est * (1 - est) / trials)
    return SeenEstimate(str(w), M, float(p), trials, est, stderr, rng.seed)


@dataclass(frozen=True)
class CrossEstimate:
    M: int
    p_x: float
    p_y: float
    n: int
    trials: int
    estimate: float
    stderr: float
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "M": self.M, "p_x": self.p_x, "p_y": self.p_y, "n": self.n,
            "trials": self.trials, "estimate": self.estimate,
            "stderr": self.stderr, "seed": self.seed,
        }


def estimate_x_seen_in_y(M: int, p_x: float, p_y: float, n: int, trials: int,
                         rng: RngConfig) -> CrossEstimate:
    """Estimate P(a random length-n word drawn at p_x is M-seen in an
    independent sequence drawn at p_y)."""
    _check_window(M)
    _check_p(p_x, "p_x")
    _check_p(p_y, "p_y")
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    gen_x = rng.stream(1)
    gen_y = rng.stream(2)
    if n == 0:
        hits = trials
    else:
        words = (gen_x.random((trials, n)) < p_x).astype(np.uint8)
        ys = (gen_y.random((trials, n * M)) < p_y).astype(np.uint8)
        hits = int(batch_seen(words, ys, M).sum())
    est = hits / trials
    stderr = math.sqrt(est * (1 - est) / trials)
    return CrossEstimate(M, float(p_x), float(p_y), n, trials, est, stderr, rng.seed)


# ---------------------------------------------------------------------------
# red grids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RedGrid:
    """Match grid: red[i, j] iff X_i = Y_j (row 0 / column 0 hold only the
    red origin).  Treat the array as read-only."""

    red: np.ndarray = field(repr=False)

    @property
    def rows(self) -> int:
        return self.red.shape[0]

    @property
    def cols(self) -> int:
        return self.red.shape[1]

    def to_pbm(self) -> str:
        lines = ["P1", f"{self.cols} {self.rows}"]
        for row in self.red:
            lines.append(" ".join("1" if cell else "0" for cell in row))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = ["i,j,red"]
        for i in range(self.rows):
            for j in range(self.cols):
                lines.append(f"{i},{j},{int(self.red[i, j])}")
        return "\n".join(lines) + "\n"


def red_grid(x: WordLike, y: Union[SequencePrefix, str, Sequence[int]]) -> RedGrid:
    """Color (i, j) red when word letter i matches sequence letter j."""
    w = as_word(x)
    seq = as_prefix(y)
    n, L = w.n, len(seq)
    red = np.zeros((n + 1, L + 1), dtype=bool)
    red[0, 0] = True
    if n and L:
        wv = np.array(w.letters, dtype=np.uint8)[:, None]
        yv = np.array(seq.bits, dtype=np.uint8)[None, :]
        red[1:, 1:] = wv == yv
    return RedGrid(red)


def admissible_path_exists(grid: RedGrid, M: int) -> bool:
    """Is there a red path (0,0), (1,m_1), ..., (n,m_n) with column gaps in
    [1, M]?  Equivalent to the word being M-seen in the sequence when the
    grid is wide enough to decide it."""
    _check_window(M)
    n = grid.rows - 1
    L = grid.cols - 1
    reach = np.zeros(L + 1, dtype=bool)
    reach[0] = True
    for i in range(1, n + 1):
        spread = np.zeros(L + 1, dtype=bool)
        for g in range(1, M + 1):
            spread[g:] |= reach[:-g or None]
        reach = spread & grid.red[i]
        if not reach.any():
            return False
    return bool(reach.any())


# ---------------------------------------------------------------------------
# couplings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CouplingStage:
    """One block-merge stage: input density p_in, mixed-block win chance p1,
    output density p_out = p_in^2 + 2 p_in (1 - p_in) p1."""

    p_in: float
    p1: float
    p_out: float

    def __post_init__(self) -> None:
        lo = self.p_in ** 2
        hi = 1 - (1 - self.p_in) ** 2
        if not lo - 1e-12 <= self.p_out <= hi + 1e-12:
            raise ValueError(f"p_out={self.p_out} outside attainable "
                             f"[{lo}, {hi}] for p_in={self.p_in}")


def coupling_F(x: Union[SequencePrefix, str, Sequence[int]],
               p1: float, gen: np.random.Generator) -> SequencePrefix:
    """Merge consecutive letter pairs: 00 -> 0, 11 -> 1, and a mixed pair
    flips a p1-coin for 1.  Every output letter equals one of its two source
    letters, so the output is always 3-seen in the input."""
    seq = as_prefix(x)
    if len(seq) % 2:
        raise ValueError(f"input length must be even, got {len(seq)}")
    if not 0 <= p1 <= 1:
        raise ValueError(f"p1 must be in [0, 1], got {p1}")
    arr = np.array(seq.bits, dtype=np.uint8).reshape(-1, 2)
    sums = arr.sum(axis=1)
    out = (sums == 2).astype(np.uint8)
    mixed = sums == 1
    if mixed.any():
        out[mixed] = (gen.random(int(mixed.sum())) < p1).astype(np.uint8)
    return SequencePrefix(tuple(int(b) for b in out))


def coupling_witness(x: Union[SequencePrefix, str, Sequence[int]],
                     out: Union[SequencePrefix, str, Sequence[int]]) -> tuple[int, ...]:
    """Positions m_k in {2k-1, 2k} with x_{m_k} = out_k; the gaps are then
    automatically in {1, 2, 3}.  Raises if some output letter matches
    neither source letter of its block."""
    xs = as_prefix(x)
    os = as_prefix(out)
    if len(xs) != 2 * len(os):
        raise ValueError(f"length mismatch: {len(xs)} input letters for "
                         f"{len(os)} output letters")
    positions = []
    for k, letter in enumerate(os.bits, start=1):
        if xs.bits[2 * k - 2] == letter:
            positions.append(2 * k - 1)
        elif xs.bits[2 * k - 1] == letter:
            positions.append(2 * k)
        else:
            raise ValueError(f"output letter {k} matches neither source letter")
    return tuple(positions)


def plan_parameter_path(p: float, p_target: float,
                        max_stages: int = 64) -> list[CouplingStage]:
    """Greedy stage plan from density p to p_target.

    Each stage reaches [p^2, 1 - (1-p)^2]; while the target lies outside,
    jump to the nearest endpoint, then finish with one exact stage.  The
    word window after k stages is 3^k.
    """
    _check_p(p)
    _check_p(p_target, "p_target")
    stages: list[CouplingStage] = []
    cur = p
    for _ in range(max_stages):
        if math.isclose(cur, p_target, rel_tol=0, abs_tol=1e-15):
            return stages
        lo, hi = cur ** 2, 1 - (1 - cur) ** 2
        nxt = min(max(p_target, lo), hi)
        p1 = (nxt - lo) / (2 * cur * (1 - cur))
        p1 = min(max(p1, 0.0), 1.0)
        stages.append(CouplingStage(cur, p1, nxt))
        cur = nxt
    raise RuntimeError(f"no stage plan from {p} to {p_target} within "
                       f"{max_stages} stages")


@dataclass(frozen=True)
class ChainDemoReport:
    """Seeded end-to-end run of a stage plan with per-sample certificates."""

    p: float
    p_target: float
    stages: tuple[CouplingStage, ...]
    window: int          # 3^k
    length: int          # letters in the final sequence
    samples: int
    witness_failures: int
    empirical: float     # mean letter of the final sequences
    tolerance: float     # 4 sigma band around p_target
    seed: int

    @property
    def ok(self) -> bool:
        return (self.witness_failures == 0
                and abs(self.empirical - self.p_target) <= self.tolerance)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p, "p_target": self.p_target,
            "stages": [[s.p_in, s.p1, s.p_out] for s in self.stages],
            "window": self.window, "length": self.length,
            "samples": self.samples, "witness_failures": self.witness_failures,
            "empirical": self.empirical, "tolerance": self.tolerance,
            "seed": self.seed, "ok": self.ok,
        }


def coupling_chain_demo(p: float, p_target: float, length: int, samples: int,
                        rng: RngConfig) -> ChainDemoReport:
    """Run the full chain on seeded samples and certify every step.

    Each sample draws an iid input at density p of length length * 2^k,
    pushes it through the k stages, checks the per-stage positional witness
    and that the final word sits 3^k-seen inside the original input, and
    pools the final letters for the density check.
    """
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    stages = plan_parameter_path(p, p_target)
    k = len(stages)
    window = 3 ** k
    failures = 0
    total = 0
    for i in range(samples):
        gen = rng.stream(3, i)
        seq = sample_sequence(p, length * 2 ** k, gen)
        cur = seq
        ok = True
        for stage in stages:
            nxt = coupling_F(cur, stage.p1, gen)
            try:
                coupling_witness(cur, nxt)
            except ValueError:
                ok = False
                break
            cur = nxt
        if ok and k and not seen_within(BinaryWord(cur.bits), seq, window):
            ok = False
        if not ok:
            failures += 1
        total += sum(cur.bits)
    letters = samples * length
    empirical = total / letters
    tolerance = 4 * math.sqrt(p_target * (1 - p_target) / letters)
    return ChainDemoReport(float(p), float(p_target), tuple(stages), window,
                           length, samples, failures, empirical, tolerance,
                           rng.seed)
