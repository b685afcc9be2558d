"""Online suffix automaton over a small alphabet.

States are integers; ``length[s]`` is the longest word in the class of ``s``,
``link[s]`` its suffix link, ``first_end[s]`` the end position of the first
occurrence. Each distinct factor of the text belongs to exactly one state,
and a state ``s`` holds one factor of every length in
``(length[link[s]], length[s]]``.
"""

from __future__ import annotations

import numpy as np


class SuffixAutomaton:
    def __init__(self, letters, text=""):
        self.letters = tuple(letters)
        self._code = {x: i for i, x in enumerate(self.letters)}
        self.text = []
        self.length = [0]
        self.link = [-1]
        self.first_end = [-1]
        self.trans = [[-1] * len(self.letters)]
        self.last = 0
        self.extend(text)

    def __len__(self):
        return len(self.length)

    def extend(self, text):
        for ch in text:
            self._add(ch)

    def _new_state(self, length, link, first_end, trans):
        self.length.append(length)
        self.link.append(link)
        self.first_end.append(first_end)
        self.trans.append(trans)
        return len(self.length) - 1

    def _add(self, ch):
        c = self._code[ch]
        pos = len(self.text)
        self.text.append(ch)
        length, link, trans = self.length, self.link, self.trans
        cur = self._new_state(length[self.last] + 1, -1, pos, [-1] * len(self.letters))
        p = self.last
        while p != -1 and trans[p][c] == -1:
            trans[p][c] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = trans[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = self._new_state(length[p] + 1, link[q], self.first_end[q], list(trans[q]))
                while p != -1 and trans[p][c] == q:
                    trans[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        self.last = cur

    def walk(self, word):
        """State reached by reading ``word`` from the root, or -1."""
        s = 0
        trans, code = self.trans, self._code
        for ch in word:
            c = code.get(ch)
            if c is None:
                return -1
            s = trans[s][c]
            if s == -1:
                return -1
        return s

    def counts(self, k_max):
        """Array ``out`` with ``out[k]`` = number of distinct factors of length ``k``."""
        lengths = np.asarray(self.length[1:], dtype=np.int64)
        lows = np.asarray([self.length[l] for l in self.link[1:]], dtype=np.int64) + 1
        diff = np.zeros(k_max + 2, dtype=np.int64)
        lo = np.minimum(lows, k_max + 1)
        hi = np.minimum(lengths, k_max) + 1
        ok = lo < hi
        np.add.at(diff, lo[ok], 1)
        np.add.at(diff, hi[ok], -1)
        out = np.cumsum(diff)[: k_max + 1]
        out[0] = 1
        return out

    def factors(self, k):
        """All distinct factors of length ``k`` (unordered)."""
        if k == 0:
            return [""]
        text = "".join(self.text)
        out = []
        length, link, first_end = self.length, self.link, self.first_end
        for s in range(1, len(length)):
            if length[link[s]] < k <= length[s]:
                end = first_end[s] + 1
                out.append(text[end - k:end])
        return out
