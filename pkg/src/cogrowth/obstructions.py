"""Minimal forbidden words (obstructions) and the cogrowth function."""

from __future__ import annotations

import csv
import io
import math
import warnings
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Optional

from .errors import InsufficientStrata, OutOfRange, TooLarge, UncertifiedInput
from .factors import FactorLanguage, extract_factors, strata_to_text
from .words import Alphabet, SequenceSpec

LOG3 = math.log(3)
LOG_PHI = math.log((1 + math.sqrt(5)) / 2)


@dataclass(frozen=True)
class ObstructionSet:
    """Obstructions of length ``1..n_max``, sorted by (length, letter order)."""

    words: tuple[str, ...]
    n_max: int
    alphabet: Alphabet
    source: Optional[FactorLanguage] = field(default=None, compare=False, repr=False)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, u):
        return u in self._set

    @cached_property
    def _set(self):
        return frozenset(self.words)

    def of_length(self, n: int) -> tuple[str, ...]:
        return tuple(w for w in self.words if len(w) == n)

    def cogrowth(self, n: int) -> int:
        """Number of obstructions of length at most ``n``."""
        if n > self.n_max:
            raise OutOfRange(f"n = {n} exceeds n_max = {self.n_max}")
        return bisect_right([len(w) for w in self.words], n)

    def to_text(self) -> str:
        groups = {}
        for w in self.words:
            groups.setdefault(len(w), []).append(w)
        return strata_to_text(groups[k] for k in sorted(groups))


def _sorted(words, alphabet):
    return tuple(sorted(set(words), key=alphabet.length_lex_key))


def minimal_forbidden(fl: FactorLanguage, n_max: int) -> ObstructionSet:
    """Obstructions of ``fl`` with length ``<= n_max``.

    A word of length at least 2 is an obstruction iff it reads ``x w y`` with
    ``x w`` and ``w y`` factors and ``x w y`` not. Over the suffix automaton:
    the shortest word of a state ``s`` is ``x w`` with ``w`` the longest word
    of its suffix-link state, and ``x w y`` is an obstruction exactly when
    ``s`` lacks a ``y`` transition the link state has.
    """
    if fl.k_max < n_max:
        raise InsufficientStrata(f"strata cover lengths <= {fl.k_max}, need {n_max}")
    if not fl.certified:
        warnings.warn(f"{fl.source}: factor language is not certified", UncertifiedInput,
                      stacklevel=2)
    sam = fl._automaton
    text = fl.text
    letters = fl.alphabet.letters
    found = [x for i, x in enumerate(letters) if sam.trans[0][i] == -1]
    length, link, trans, first_end = sam.length, sam.link, sam.trans, sam.first_end
    for s in range(1, len(sam)):
        t = link[s]
        # obstruction length is len(w) + 2
        if length[t] + 2 > n_max:
            continue
        row, link_row = trans[s], trans[t]
        for i, y in enumerate(letters):
            if row[i] == -1 and link_row[i] != -1:
                end = first_end[s] + 1
                found.append(text[end - length[t] - 1:end] + y)
    return ObstructionSet(_sorted(found, fl.alphabet), n_max, fl.alphabet, fl)


def brute_force_minimal_forbidden(spec: SequenceSpec, n_max: int,
                                  fl: Optional[FactorLanguage] = None) -> ObstructionSet:
    """Obstructions by exhaustive enumeration of all words of length ``<= n_max``.

    Factor-hood is tested against plain sets of substrings of the certified
    prefix, and every proper subword is checked literally.
    """
    if n_max > 16:
        raise TooLarge(f"n_max = {n_max} > 16")
    if fl is None:
        fl = extract_factors(spec, max(n_max, 1))
    text = fl.text
    letters = spec.alphabet.letters
    factor_sets = [{text[i:i + k] for i in range(len(text) - k + 1)} for k in range(n_max + 1)]

    def is_factor(u):
        return u in factor_sets[len(u)]

    found = []
    for k in range(1, n_max + 1):
        for tup in product(letters, repeat=k):
            u = "".join(tup)
            if is_factor(u):
                continue
            proper = (u[i:j] for i in range(k) for j in range(i, k + 1) if j - i < k)
            if all(is_factor(v) for v in proper):
                found.append(u)
    return ObstructionSet(_sorted(found, spec.alphabet), n_max, spec.alphabet, fl)


def cogrowth(obs: ObstructionSet, n: int) -> int:
    return obs.cogrowth(n)


@dataclass(frozen=True)
class ProfileRow:
    n: int
    cogrowth: int
    log3n: float
    ratio: float
    running_max: float


def cogrowth_profile(spec: SequenceSpec, n_max: int,
                     obs: Optional[ObstructionSet] = None) -> list[ProfileRow]:
    """Rows ``(n, O(n), log_3 n, O(n) / log_3 n, running max of the ratio)`` for ``n = 2..n_max``."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if obs is None:
        obs = minimal_forbidden(extract_factors(spec, n_max), n_max)
    rows = []
    best = 0.0
    for n in range(2, n_max + 1):
        o = obs.cogrowth(n)
        log3n = math.log(n) / LOG3
        ratio = o / log3n
        best = max(best, ratio)
        rows.append(ProfileRow(n, o, log3n, ratio, best))
    return rows


def profile_to_csv(rows, header_comment: Optional[str] = None) -> str:
    buf = io.StringIO()
    if header_comment:
        buf.write(f"# {header_comment}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "cogrowth", "log3n", "ratio", "running_max"])
    for r in rows:
        writer.writerow([r.n, r.cogrowth, f"{r.log3n:.6f}", f"{r.ratio:.6f}", f"{r.running_max:.6f}"])
    return buf.getvalue()
