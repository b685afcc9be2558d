"""Stratified factor languages extracted from sequence prefixes."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

import numpy as np

from .automaton import SuffixAutomaton
from .errors import OutOfRange, SaturationFailed
from .words import Alphabet, ExplicitPrefix, SequenceSpec, expand_prefix

PREFIX_CAP = 1 << 22


@dataclass(frozen=True, eq=False)
class FactorLanguage:
    """Factors of length ``0..k_max`` of a sequence.

    Strata are materialized on demand from a suffix automaton of the scanned
    prefix; ``stratum(k)`` is sorted in the alphabet's letter order.
    """

    alphabet: Alphabet
    k_max: int
    source: str
    certified: bool
    prefix_len: int
    _automaton: SuffixAutomaton = field(repr=False)

    @cached_property
    def text(self) -> str:
        return "".join(self._automaton.text)

    @cached_property
    def _state_arrays(self):
        sam = self._automaton
        length = np.asarray(sam.length, dtype=np.int64)
        low = np.asarray([sam.length[l] if l >= 0 else -1 for l in sam.link], dtype=np.int64)
        end = np.asarray(sam.first_end, dtype=np.int64)
        return length[1:], low[1:], end[1:]

    @cached_property
    def _counts(self) -> np.ndarray:
        return self._automaton.counts(self.k_max)

    def _check(self, k):
        if not 0 <= k <= self.k_max:
            raise OutOfRange(f"length {k} outside 0..{self.k_max}")

    def complexity(self, k: int) -> int:
        self._check(k)
        return int(self._counts[k])

    def stratum(self, k: int) -> tuple[str, ...]:
        self._check(k)
        if k == 0:
            return ("",)
        length, low, end = self._state_arrays
        ends = end[(low < k) & (k <= length)] + 1
        text = self.text
        return tuple(sorted((text[e - k:e] for e in ends.tolist()), key=self.alphabet.sort_key))

    @property
    def strata(self) -> list[tuple[str, ...]]:
        """Every stratum ``F_0 .. F_k_max``; materializes all of them."""
        return [self.stratum(k) for k in range(self.k_max + 1)]

    def __iter__(self) -> Iterator[str]:
        for k in range(self.k_max + 1):
            yield from self.stratum(k)

    def contains(self, u: str) -> bool:
        if len(u) > self.k_max:
            raise OutOfRange(f"|u| = {len(u)} exceeds k_max = {self.k_max}")
        return self._automaton.walk(u) != -1

    __contains__ = contains

    def to_text(self) -> str:
        return strata_to_text(self.stratum(k) for k in range(self.k_max + 1))


def strata_to_text(groups) -> str:
    """Render groups of equal-length words, one word per line under ``# k=.. count=..`` headers."""
    lines = []
    for words in groups:
        words = list(words)
        if not words:
            continue
        lines.append(f"# k={len(words[0])} count={len(words)}")
        lines.extend(words)
    return "\n".join(lines) + "\n"


def extract_factors(spec: SequenceSpec, k_max: int, cap: int = PREFIX_CAP) -> FactorLanguage:
    """Extract the factors of length at most ``k_max`` of ``spec``.

    The prefix length starts at ``max(64, 8 * k_max)`` and doubles until the
    factor counts of every length ``<= k_max`` agree between consecutive
    prefixes (the language is then ``certified``). Explicit prefixes are
    scanned whole and never certified.
    """
    if k_max < 1:
        raise ValueError("k_max must be positive")
    alphabet = spec.alphabet
    if isinstance(spec, ExplicitPrefix):
        word = spec.word
        alphabet.check(word)
        sam = SuffixAutomaton(alphabet.letters, word)
        return FactorLanguage(alphabet, k_max, spec.name, False, len(word), sam)

    n = min(max(64, 8 * k_max), cap)
    sam = SuffixAutomaton(alphabet.letters, expand_prefix(spec, n))
    counts = sam.counts(k_max)
    while True:
        if 2 * n > cap:
            warnings.warn(f"{spec.name}: strata unstable at prefix cap {cap}", SaturationFailed,
                          stacklevel=2)
            return FactorLanguage(alphabet, k_max, spec.name, False, n, sam)
        # morphic expansion is prefix-consistent, so extend the automaton in place
        sam.extend(expand_prefix(spec, 2 * n)[n:])
        n *= 2
        new_counts = sam.counts(k_max)
        if np.array_equal(counts, new_counts):
            return FactorLanguage(alphabet, k_max, spec.name, True, n, sam)
        counts = new_counts


def complexity(fl: FactorLanguage, k: int) -> int:
    return fl.complexity(k)


def contains(fl: FactorLanguage, u: str) -> bool:
    return fl.contains(u)
