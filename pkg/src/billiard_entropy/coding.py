"""Symbolic coding of orbits and the associated shift of finite type.

Cap collisions carry the symbol 0.  A run of j wall collisions between two
cap collisions is written 1, 2, ..., j when it starts on the bottom wall and
-1, -2, ..., -j when it starts on the top wall.  Runs longer than the
alphabet bound N are forbidden.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BlockTooLong, DomainError, UntrackedCollision
from .geometry import CAP_IDS, PhasePoint, Table


@dataclass(frozen=True)
class SymbolWord:
    """A finite word over the alphabet {-N, ..., -1, 0, 1, ..., N}."""

    symbols: tuple
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("alphabet bound N must be at least 1")
        for s in self.symbols:
            if abs(s) > self.N:
                raise DomainError(f"symbol {s} outside alphabet bound {self.N}")

    def __len__(self):
        return len(self.symbols)


class TransitionTable:
    """Allowed symbol transitions: 0 -> {0, 1, -1}, i -> {i+1, 0}, N -> {0}."""

    def __init__(self, N: int):
        if N < 1:
            raise DomainError("alphabet bound N must be at least 1")
        self.N = N

    def states(self):
        return [0] + list(range(1, self.N + 1)) + \
            [-i for i in range(1, self.N + 1)]

    def successors(self, state: int):
        N = self.N
        if abs(state) > N:
            raise DomainError(f"state {state} outside alphabet bound {N}")
        if state == 0:
            return (0, 1, -1)
        if state == N or state == -N:
            return (0,)
        step = state + 1 if state > 0 else state - 1
        return (step, 0)

    def allows(self, a: int, b: int) -> bool:
        return b in self.successors(a)


def is_admissible(word: SymbolWord) -> bool:
    table = TransitionTable(word.N)
    return all(table.allows(a, b)
               for a, b in zip(word.symbols, word.symbols[1:]))


def enumerate_words(N: int, n: int):
    """All admissible words of length n, by brute-force filtering."""
    table = TransitionTable(N)
    states = table.states()
    for seq in itertools.product(states, repeat=n):
        if all(table.allows(a, b) for a, b in zip(seq, seq[1:])):
            yield SymbolWord(tuple(seq), N)


def _mat_mul(A, B):
    n = len(A)
    m = len(B[0])
    k = len(B)
    return [[sum(A[i][p] * B[p][j] for p in range(k)) for j in range(m)]
            for i in range(n)]


def _mat_pow(A, e):
    n = len(A)
    R = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    P = A
    while e > 0:
        if e & 1:
            R = _mat_mul(R, P)
        P = _mat_mul(P, P)
        e >>= 1
    return R


def adjacency_int(N: int):
    """Exact integer adjacency matrix, states ordered (0, 1..N, -1..-N)."""
    table = TransitionTable(N)
    states = table.states()
    index = {s: i for i, s in enumerate(states)}
    A = [[0] * len(states) for _ in states]
    for s in states:
        for t in table.successors(s):
            A[index[s]][index[t]] = 1
    return A


def count_words(N: int, n: int) -> int:
    """Exact number of admissible words of length n (big-integer arithmetic)."""
    if N < 1 or n < 1:
        raise DomainError("need N >= 1 and n >= 1")
    if n == 1:
        return 2 * N + 1
    P = _mat_pow(adjacency_int(N), n - 1)
    return sum(sum(row) for row in P)


def encode(table: Table, orbit, N: int) -> SymbolWord:
    """Code a collision sequence into a symbol word.

    Cap collisions must land on the tracked subarcs; wall runs longer than
    N raise BlockTooLong.
    """
    symbols = []
    run = 0
    run_sign = 0
    for p in orbit:
        if not isinstance(p, PhasePoint):
            raise DomainError("orbit must consist of PhasePoints")
        if p.arc in CAP_IDS:
            if not table.on_tracked_cap(p):
                raise UntrackedCollision(
                    f"cap collision at r={p.r} outside the tracked subarc")
            symbols.append(0)
            run = 0
            run_sign = 0
        elif p.arc in ("bottom", "top"):
            if run == 0:
                run_sign = 1 if p.arc == "bottom" else -1
            run += 1
            if run > N:
                raise BlockTooLong(
                    f"{run} consecutive wall collisions exceeds N={N}")
            symbols.append(run_sign * run)
        else:
            raise UntrackedCollision(f"collision on untracked arc {p.arc!r}")
    return SymbolWord(tuple(symbols), N)


def complete_word(word: SymbolWord) -> tuple:
    """Extend a word so it starts and ends with 0, preserving admissibility.

    Returns (completed symbols, offset of the original word inside them).
    """
    if not is_admissible(word):
        raise DomainError("word is not admissible")
    symbols = list(word.symbols)
    if not symbols:
        raise DomainError("empty word")
    prefix = []
    first = symbols[0]
    if first != 0:
        step = 1 if first > 0 else -1
        prefix = [step * i for i in range(abs(first))]  # 0, +-1, ..., first-step
    suffix = [] if symbols[-1] == 0 else [0]
    return tuple(prefix + symbols + suffix), len(prefix)


def word_to_level_diffs(symbols) -> tuple:
    """Level differences of the cap-to-cap blocks of a 0-delimited word."""
    if not symbols or symbols[0] != 0 or symbols[-1] != 0:
        raise DomainError("word must start and end with the cap symbol 0")
    diffs = []
    block = []
    for s in symbols[1:]:
        if s == 0:
            if not block:
                diffs.append(0)
            else:
                j = len(block)
                expect = [block[0] // abs(block[0]) * i for i in range(1, j + 1)]
                if block != expect:
                    raise DomainError(f"invalid wall block {block}")
                diffs.append(block[-1])
            block = []
        else:
            block.append(s)
    if block:
        raise DomainError("trailing wall block without closing cap symbol")
    return tuple(diffs)


def level_diffs_to_word(diffs, N: int) -> SymbolWord:
    """The 0-delimited word whose cap-to-cap blocks have these differences."""
    symbols = [0]
    for j in diffs:
        if abs(j) > N:
            raise DomainError(f"level difference {j} exceeds N={N}")
        sign = 1 if j > 0 else -1
        symbols.extend(sign * i for i in range(1, abs(j) + 1))
        symbols.append(0)
    return SymbolWord(tuple(symbols), N)


def growth_rate(N: int, n: int) -> float:
    """(1/n) log of the number of admissible words of length n."""
    return math.log(count_words(N, n)) / n
