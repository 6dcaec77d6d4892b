"""Concrete reflection groups: symmetric groups and dihedral groups.

Type A_r is realized as the symmetric group S_{r+1} on tuples (one-line
notation, 0-based internally), with simple reflections the adjacent
transpositions and reflections all transpositions.  Dihedral I_2(m) elements
are pairs (flip, shift) acting on Z/m by x -> shift + (-1)^flip * x.  Word
lengths and absolute lengths are computed by breadth-first search from the
identity, which is all the generality the supported ranks need.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import UphoError

SUPPORTED_A_RANKS = (1, 2, 3, 4)


@dataclass(frozen=True)
class CoxeterType:
    """Either ("A", r) with 1 <= r <= 4 or ("I2", m) with m >= 3."""

    family: str
    param: int

    @staticmethod
    def parse(token: str, m: int | None = None) -> "CoxeterType":
        token = token.strip().upper()
        if token.startswith("A") and token[1:].isdigit():
            return CoxeterType("A", int(token[1:]))
        if token == "A" and m is not None:
            return CoxeterType("A", m)
        if token in ("I2", "I_2", "I"):
            if m is None:
                raise UphoError("dihedral type I2 needs the parameter m")
            return CoxeterType("I2", m)
        if token.startswith("I2(") and token.endswith(")"):
            return CoxeterType("I2", int(token[3:-1]))
        raise UphoError(f"unsupported Coxeter type {token!r}")

    def validate(self):
        if self.family == "A":
            if self.param not in SUPPORTED_A_RANKS:
                raise UphoError(f"type A rank must be in {SUPPORTED_A_RANKS}")
        elif self.family == "I2":
            if self.param < 3:
                raise UphoError("dihedral parameter m must be at least 3")
        else:
            raise UphoError(f"unsupported Coxeter family {self.family!r}")


class Realization:
    """A finite group with named simple reflections and reflections.

    Subclasses provide ``elements`` (a deterministic tuple), ``identity``,
    ``mul``, ``inv``, ``simples``, ``reflections`` and display labels.
    """

    def _bfs_lengths(self, generators) -> dict:
        dist = {self.identity: 0}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for g in generators:
                    u = self.mul(w, g)
                    if u not in dist:
                        dist[u] = dist[w] + 1
                        nxt.append(u)
            frontier = nxt
        return dist

    def length(self, w) -> int:
        if not hasattr(self, "_len"):
            self._len = self._bfs_lengths(self.simples)
        return self._len[w]

    def absolute_length(self, w) -> int:
        if not hasattr(self, "_abslen"):
            self._abslen = self._bfs_lengths(self.reflections)
        return self._abslen[w]

    def absolute_leq(self, u, w) -> bool:
        return self.absolute_length(u) + self.absolute_length(self.mul(self.inv(u), w)) == self.absolute_length(w)

    def coxeter_element(self):
        c = self.identity
        for s in self.simples:
            c = self.mul(c, s)
        return c


class SymmetricGroup(Realization):
    def __init__(self, n: int):
        self.n = n
        self.identity = tuple(range(n))
        self.elements = tuple(sorted(permutations(range(n))))
        self.simples = tuple(
            self._transposition(i, i + 1) for i in range(n - 1)
        )
        self.reflections = tuple(
            self._transposition(i, j) for i in range(n) for j in range(i + 1, n)
        )

    def _transposition(self, i, j):
        t = list(range(self.n))
        t[i], t[j] = t[j], t[i]
        return tuple(t)

    def mul(self, a, b):
        # composition a after b, so right-multiplying by a simple reflection
        # swaps two adjacent positions of the one-line word
        return tuple(a[b[k]] for k in range(self.n))

    def inv(self, a):
        out = [0] * self.n
        for i, v in enumerate(a):
            out[v] = i
        return tuple(out)

    def length(self, w) -> int:
        return sum(
            1
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if w[i] > w[j]
        )

    def absolute_length(self, w) -> int:
        seen = [False] * self.n
        cycles = 0
        for i in range(self.n):
            if not seen[i]:
                cycles += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = w[j]
        return self.n - cycles

    def label(self, w) -> str:
        return "".join(str(v + 1) for v in w)

    def cycle_label(self, w) -> str:
        seen = [False] * self.n
        cycles = []
        for i in range(self.n):
            if not seen[i]:
                cyc = []
                j = i
                while not seen[j]:
                    seen[j] = True
                    cyc.append(j + 1)
                    j = w[j]
                if len(cyc) > 1:
                    cycles.append("(" + ",".join(map(str, cyc)) + ")")
        return "".join(cycles) if cycles else "e"


class DihedralGroup(Realization):
    def __init__(self, m: int):
        self.m = m
        self.identity = (0, 0)
        self.elements = tuple((f, a) for f in (0, 1) for a in range(m))
        # s1 s2 is the rotation x -> x + 1
        self.simples = ((1, 0), (1, m - 1))
        self.reflections = tuple((1, a) for a in range(m))

    def mul(self, e1, e2):
        f1, a1 = e1
        f2, a2 = e2
        return ((f1 + f2) % 2, (a1 + a2) % self.m if f1 == 0 else (a1 - a2) % self.m)

    def inv(self, e):
        f, a = e
        return e if f else (0, (-a) % self.m)

    def label(self, e) -> str:
        f, a = e
        if f == 0:
            return "e" if a == 0 else f"r{a}"
        return "f" if a == 0 else f"fr{a}"


def realization(ctype: CoxeterType) -> Realization:
    ctype.validate()
    if ctype.family == "A":
        return SymmetricGroup(ctype.param + 1)
    return DihedralGroup(ctype.param)
