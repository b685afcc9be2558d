"""Finite descriptions of infinite words and their prefix expansion.

Words are plain ``str`` values. The binary alphabet is written ``"ab"`` in
all text I/O (``a`` standing for alpha, ``b`` for beta).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Union

import numpy as np

from .automaton import SuffixAutomaton
from .errors import CogrowthError, EmptyPeriod, NonProlongable, PrefixTooShort


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if len(letters) < 2:
            raise ValueError("an alphabet needs at least two letters")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letters in {letters!r}")
        if any(len(x) != 1 for x in letters):
            raise ValueError("letters must be single characters")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, letter):
        return letter in self.letters

    def index(self, letter: str) -> int:
        return self.letters.index(letter)

    def sort_key(self, word: str) -> tuple[int, ...]:
        """Key ordering words lexicographically by this alphabet's letter order."""
        order = {x: i for i, x in enumerate(self.letters)}
        return tuple(order[x] for x in word)

    def length_lex_key(self, word: str) -> tuple:
        return (len(word), self.sort_key(word))

    def check(self, word: str) -> None:
        bad = set(word) - set(self.letters)
        if bad:
            raise ValueError(f"letters {sorted(bad)} not in alphabet {self.letters}")


BINARY = Alphabet(("a", "b"))


@dataclass(frozen=True)
class Morphism:
    """A letter-to-word substitution over a fixed alphabet."""

    images: Mapping[str, str]
    alphabet: Alphabet = BINARY

    def __post_init__(self):
        images = dict(self.images)
        if set(images) != set(self.alphabet.letters):
            raise ValueError("a morphism needs exactly one image per letter")
        for letter, image in images.items():
            if not image:
                raise ValueError(f"image of {letter!r} is empty")
            self.alphabet.check(image)
        object.__setattr__(self, "images", images)

    def __hash__(self):
        return hash((tuple(sorted(self.images.items())), self.alphabet))

    def __call__(self, word: str) -> str:
        return "".join(self.images[x] for x in word)

    def is_prolongable(self, seed: str) -> bool:
        return self.images[seed].startswith(seed)

    def incidence_matrix(self) -> np.ndarray:
        """Matrix M with M[i, j] = occurrences of letter i in the image of letter j."""
        letters = self.alphabet.letters
        m = np.zeros((len(letters), len(letters)), dtype=np.int64)
        for j, x in enumerate(letters):
            for y in self.images[x]:
                m[letters.index(y), j] += 1
        return m


def is_primitive(m: Morphism) -> bool:
    """True iff some power (up to ``d**2`` for ``d`` letters) of the incidence matrix is positive."""
    a = m.incidence_matrix() > 0
    d = len(m.alphabet)
    power = a.copy()
    for _ in range(d * d):
        if power.all():
            return True
        power = (power.astype(np.int64) @ a.astype(np.int64)) > 0
    return False


@dataclass(frozen=True)
class SequenceSpec:
    name: str
    alphabet: Alphabet = field(default=BINARY, kw_only=True)


@dataclass(frozen=True)
class MorphicFixedPoint(SequenceSpec):
    morphism: Morphism = None
    seed: str = "a"

    def __post_init__(self):
        if self.morphism is None:
            raise ValueError("MorphicFixedPoint needs a morphism")
        if self.morphism.alphabet != self.alphabet:
            object.__setattr__(self, "alphabet", self.morphism.alphabet)


@dataclass(frozen=True)
class Periodic(SequenceSpec):
    word: str = ""


@dataclass(frozen=True)
class ExplicitPrefix(SequenceSpec):
    word: str = ""


def expand_prefix(spec: SequenceSpec, n: int) -> str:
    """Return the first ``n`` letters of the infinite word described by ``spec``."""
    if n < 1:
        raise ValueError("n must be positive")
    if isinstance(spec, MorphicFixedPoint):
        m, seed = spec.morphism, spec.seed
        if not m.is_prolongable(seed):
            raise NonProlongable(f"{seed!r} does not begin its image {m.images[seed]!r}")
        w = seed
        while len(w) < n:
            nxt = m(w)
            if len(nxt) == len(w):
                # seed image is the seed itself: the fixed point is finite
                raise NonProlongable(f"iterating from {seed!r} never grows")
            w = nxt
        return w[:n]
    if isinstance(spec, Periodic):
        if not spec.word:
            raise EmptyPeriod(f"{spec.name}: empty period")
        reps = -(-n // len(spec.word))
        return (spec.word * reps)[:n]
    if isinstance(spec, ExplicitPrefix):
        if len(spec.word) < n:
            raise PrefixTooShort(f"{spec.name}: have {len(spec.word)} letters, need {n}")
        return spec.word[:n]
    raise TypeError(f"unknown sequence spec {spec!r}")


def is_eventually_periodic_prefix(w: str) -> Optional[int]:
    """Smallest period ``p <= len(w) / 2`` of ``w``, or ``None``.

    ``w`` has period ``p`` when it is a prefix of ``v * infinity`` with ``len(v) == p``.
    """
    for p in range(1, len(w) // 2 + 1):
        if w[p:] == w[:-p]:
            return p
    return None


FIBONACCI = MorphicFixedPoint("fibonacci", Morphism({"a": "ab", "b": "a"}), "a")
THUE_MORSE = MorphicFixedPoint("thue-morse", Morphism({"a": "ab", "b": "ba"}), "a")
PERIOD_DOUBLING = MorphicFixedPoint("period-doubling", Morphism({"a": "ab", "b": "aa"}), "a")

BUILTIN_SPECS = {s.name: s for s in (FIBONACCI, THUE_MORSE, PERIOD_DOUBLING)}


def builtin_spec(name: str) -> SequenceSpec:
    """Look up ``fibonacci``, ``thue-morse``, ``period-doubling`` or ``periodic:<word>``."""
    if name.startswith("periodic:"):
        word = name.split(":", 1)[1]
        BINARY.check(word)
        return Periodic(name, word=word)
    try:
        return BUILTIN_SPECS[name]
    except KeyError:
        raise KeyError(f"unknown built-in spec {name!r}") from None


def spec_from_dict(doc: Mapping) -> SequenceSpec:
    """Build a spec from its JSON document form.

    >>> spec_from_dict({"name": "pd", "variant": "morphic",
    ...                 "images": {"a": "ab", "b": "aa"}, "seed": "a"}).name
    'pd'
    """
    name = doc.get("name", "unnamed")
    variant = doc.get("variant")
    if variant == "morphic":
        images = doc["images"]
        alphabet = Alphabet(tuple(sorted(images))) if set(images) != set(BINARY.letters) else BINARY
        return MorphicFixedPoint(name, Morphism(images, alphabet), doc.get("seed", alphabet.letters[0]))
    if variant == "periodic":
        BINARY.check(doc["word"])
        return Periodic(name, word=doc["word"])
    if variant == "explicit":
        BINARY.check(doc["word"])
        return ExplicitPrefix(name, word=doc["word"])
    raise CogrowthError(f"unknown variant {variant!r}")


def spec_to_dict(spec: SequenceSpec) -> dict:
    if isinstance(spec, MorphicFixedPoint):
        return {"name": spec.name, "variant": "morphic",
                "images": dict(sorted(spec.morphism.images.items())), "seed": spec.seed}
    variant = "periodic" if isinstance(spec, Periodic) else "explicit"
    return {"name": spec.name, "variant": variant, "word": spec.word}


def load_spec(path: Union[str, Path]) -> SequenceSpec:
    with open(path) as fh:
        return spec_from_dict(json.load(fh))


def resolve_spec(source: str) -> SequenceSpec:
    """Resolve a built-in spec name, falling back to a JSON file path."""
    if source in BUILTIN_SPECS or source.startswith("periodic:"):
        return builtin_spec(source)
    return load_spec(source)


def satisfies_theorem_hypothesis(spec: SequenceSpec, probe: int = 4096, k_probe: int = 64) -> bool:
    """Whether ``spec`` is known to be uniformly recurrent and non-periodic.

    Only primitive morphic fixed points qualify. Non-periodicity uses the
    Morse-Hedlund criterion on a prefix: a periodic word has at most ``k``
    factors of some length ``k``, so periods above ``k_probe`` go unnoticed.
    """
    if not isinstance(spec, MorphicFixedPoint) or not is_primitive(spec.morphism):
        return False
    counts = SuffixAutomaton(spec.alphabet.letters, expand_prefix(spec, probe)).counts(k_probe)
    return all(counts[k] > k for k in range(1, k_probe + 1))
