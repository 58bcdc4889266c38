"""Exact seen probabilities via a determinized reachability automaton.

The streaming frontier of core (sets of (prefix-length, age) pairs) takes
finitely many values, so the seen event is a finite automaton over sequence
letters.  Subset states are discovered by worklist search, ACCEPT and DEAD
absorb, and the probability is read off by evolving an exact distribution
over states for n*M steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Union

from .core import BinaryWord, WordLike, _advance, _check_window, as_word, seen_packed

Rational = Union[Fraction, int, str]

ACCEPT = "ACCEPT"
DEAD = "DEAD"


class StateCapExceeded(RuntimeError):
    """Raised when subset-state discovery outgrows the configured cap."""


def as_rational(p: Rational) -> Fraction:
    return p if isinstance(p, Fraction) else Fraction(p)


def _check_prob(p: Fraction) -> Fraction:
    if not 0 < p < 1:
        raise ValueError(f"letter probability must be strictly between 0 and 1, got {p}")
    return p


def _normalize(members: frozenset[tuple[int, int]], n: int):
    if any(k == n for k, _ in members):
        return ACCEPT
    if not members:
        return DEAD
    return members


@dataclass(frozen=True)
class ProbAutomaton:
    """Determinized seen automaton for one word and window.

    states[i] is either a frozenset of (k, age) pairs or one of the
    absorbing sentinels ACCEPT / DEAD; transitions[i] = (on0, on1) as state
    indices.  State 0 is the start state.
    """

    word: BinaryWord
    M: int
    states: tuple
    transitions: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.states)

    def accept_index(self) -> int | None:
        return self.states.index(ACCEPT) if ACCEPT in self.states else None

    def seen_probability(self, p: Rational) -> Fraction:
        prob1 = _check_prob(as_rational(p))
        prob0 = 1 - prob1
        steps = self.word.n * self.M
        dist = [Fraction(0)] * self.size
        dist[0] = Fraction(1)
        for _ in range(steps):
            nxt = [Fraction(0)] * self.size
            for i, mass in enumerate(dist):
                if not mass:
                    continue
                on0, on1 = self.transitions[i]
                nxt[on0] += mass * prob0
                nxt[on1] += mass * prob1
            dist = nxt
        acc = self.accept_index()
        return dist[acc] if acc is not None else Fraction(0)

    def dump_lines(self) -> list[str]:
        """One line per state: ``id | members | on0→id | on1→id``."""
        lines = []
        for i, state in enumerate(self.states):
            if state in (ACCEPT, DEAD):
                body = state
            else:
                pairs = ",".join(f"({k},{d})" for k, d in sorted(state))
                body = "{" + pairs + "}"
            on0, on1 = self.transitions[i]
            lines.append(f"{i} | {body} | on0→{on0} | on1→{on1}")
        return lines


def build_automaton(word: WordLike, M: int, state_cap: int = 10 ** 6,
                    first_gap: int | None = None) -> ProbAutomaton:
    """Worklist subset construction from the initial frontier {(0, 0)}.

    first_gap, if given, caps the first embedding position at that value
    instead of M (used to split on where the leftmost embedding starts).
    """
    w = as_word(word)
    _check_window(M)
    origin_cap = M if first_gap is None else first_gap
    if not 1 <= origin_cap <= M:
        raise ValueError(f"first gap cap must be in [1, {M}], got {origin_cap}")
    n = w.n
    start = _normalize(frozenset({(0, 0)}), n)
    states = [start]
    index = {start: 0}
    transitions: list[tuple[int, int] | None] = [None]
    queue = [0]
    while queue:
        i = queue.pop()
        state = states[i]
        if state in (ACCEPT, DEAD):
            transitions[i] = (i, i)
            continue
        row = []
        for letter in (0, 1):
            nxt = _normalize(_advance(state, letter, w.letters, M, origin_cap), n)
            j = index.get(nxt)
            if j is None:
                j = len(states)
                if j >= state_cap:
                    raise StateCapExceeded(
                        f"automaton for word of length {n}, M={M} exceeded "
                        f"{state_cap} states")
                index[nxt] = j
                states.append(nxt)
                transitions.append(None)
                queue.append(j)
            row.append(j)
        transitions[i] = (row[0], row[1])
    return ProbAutomaton(w, M, tuple(states), tuple(transitions))  # type: ignore[arg-type]


def exact_seen_probability(word: WordLike, M: int, p: Rational = Fraction(1, 2),
                           state_cap: int = 10 ** 6,
                           first_gap: int | None = None) -> Fraction:
    """P(word is M-seen) for iid letters with P(letter = 1) = p, exactly."""
    w = as_word(word)
    automaton = build_automaton(w, M, state_cap=state_cap, first_gap=first_gap)
    return automaton.seen_probability(p)


def exhaustive_seen_probability(word: WordLike, M: int, max_bits: int = 24) -> Fraction:
    """Brute-force oracle: average the seen indicator over all 2^(n*M)
    equally likely prefixes.  Fair letters only."""
    w = as_word(word)
    _check_window(M)
    L = w.n * M
    if L > max_bits:
        raise ValueError(f"exhaustive sweep over 2^{L} prefixes exceeds the "
                         f"{max_bits}-bit budget")
    hits = sum(1 for y in range(1 << L) if seen_packed(w.letters, y, L, M))
    return Fraction(hits, 1 << L)


def word_probability_sweep(n: int, M: int, p: Rational = Fraction(1, 2),
                           state_cap: int = 10 ** 6) -> Iterator[tuple[BinaryWord, Fraction]]:
    """(word, exact seen probability) for every word of length n, lex order."""
    if n < 0:
        raise ValueError(f"word length must be >= 0, got {n}")
    if n > 20:
        raise ValueError(f"sweep over 2^{n} words exceeds the enumeration budget")
    prob = as_rational(p)
    for letters in product((0, 1), repeat=n):
        w = BinaryWord(letters)
        yield w, exact_seen_probability(w, M, prob, state_cap=state_cap)


@dataclass(frozen=True)
class MaxWordResult:
    """All maximizing words (lex order) and the shared maximum probability."""

    words: tuple[BinaryWord, ...]
    probability: Fraction


def max_word_probability(n: int, M: int, p: Rational = Fraction(1, 2)) -> MaxWordResult:
    """Maximize the exact seen probability over all words of length n.

    Ties are real (complementation preserves the probability at p = 1/2),
    so every maximizer is reported.
    """
    best: Fraction | None = None
    winners: list[BinaryWord] = []
    for w, value in word_probability_sweep(n, M, p):
        if best is None or value > best:
            best = value
            winners = [w]
        elif value == best:
            winners.append(w)
    assert best is not None
    return MaxWordResult(tuple(winners), best)
