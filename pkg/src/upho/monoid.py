"""Homogeneous monoid presentations and their left-divisibility posets.

Elements of length L are equivalence classes of length-L words under
single-relation rewrites at any position; since every relation is
homogeneous, lengths never mix and the closure can be taken level by level
with a union-find over the dense word set.  The canonical representative of
a class is its lexicographically least word, and all labels and ordering key
off it.  This is transparently correct and oracle-checkable, at the price of
an exponential word budget that restricts the truncation length N.

Cover relations of the poset are exactly class(w) < class(w g) for
generators g, so the rank of a class is its word length.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product

from .coxeter import CoxeterType, SymmetricGroup, realization
from .errors import BudgetExceeded, InhomogeneousRelation, UphoError
from .poset import GradedPoset, build_poset

DEFAULT_WORD_BUDGET = 2_000_000
ALPHABET = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class MonoidPresentation:
    """Finite generating set plus homogeneous relations (pairs of words)."""

    generators: tuple[str, ...]
    relations: tuple[tuple[str, str], ...]

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise UphoError("duplicate generators")
        if any(len(g) != 1 for g in self.generators):
            raise UphoError("generators must be single symbols")
        for u, v in self.relations:
            if len(u) != len(v):
                raise InhomogeneousRelation(f"relation {u} = {v} mixes lengths")
            if not set(u) <= gens or not set(v) <= gens:
                raise UphoError(f"relation {u} = {v} uses unknown symbols")

    def text(self) -> str:
        lines = ["gens: " + " ".join(self.generators)]
        lines += [f"rel: {u} = {v}" for u, v in self.relations]
        return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> MonoidPresentation:
    """Parse the `gens: a b` / `rel: aba = bab` line format."""
    gens: list[str] = []
    rels: list[tuple[str, str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            gens = line[len("gens:"):].split()
        elif line.startswith("rel:"):
            body = line[len("rel:"):]
            if "=" not in body:
                raise UphoError(f"malformed relation line: {raw!r}")
            u, v = body.split("=", 1)
            rels.append((u.strip(), v.strip()))
        else:
            raise UphoError(f"unrecognized presentation line: {raw!r}")
    if not gens:
        raise UphoError("presentation has no generators")
    return MonoidPresentation(tuple(gens), tuple(rels))


def word_budget() -> int:
    env = os.environ.get("UPHO_BUDGET")
    return int(env) if env else DEFAULT_WORD_BUDGET


@dataclass
class MonoidPoset:
    """Length-graded left-divisibility poset of a presented monoid, truncated
    at word length N."""

    presentation: MonoidPresentation
    N: int
    poset: GradedPoset
    reps: tuple[str, ...]
    class_of_word: dict[str, int] = field(repr=False)

    def class_of(self, word: str) -> int:
        try:
            return self.class_of_word[word]
        except KeyError:
            raise UphoError(f"word {word!r} beyond truncation length {self.N}") from None

    def product(self, x: int, y: int) -> int:
        """Class of the product, defined whenever the lengths fit under N."""
        return self.class_of(self.reps[x] + self.reps[y])


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller index as root so roots are lex-least words
            if ra > rb:
                ra, rb = rb, ra
            self.parent[rb] = ra


def enumerate_elements(
    pres: MonoidPresentation, N: int, budget: int | None = None
) -> MonoidPoset:
    """Classes of all words of length <= N with their cover relations."""
    if N < 0:
        raise UphoError("truncation length must be nonnegative")
    budget = word_budget() if budget is None else budget
    r = len(pres.generators)
    total = sum(r**l for l in range(N + 1))
    if total > budget:
        raise BudgetExceeded(
            f"enumerating {total} words exceeds the budget of {budget}"
        )

    gens = sorted(pres.generators)
    class_of_word: dict[str, int] = {}
    reps: list[str] = []
    ranks: list[int] = []
    covers: set[tuple[int, int]] = set()

    for length in range(N + 1):
        words = ["".join(w) for w in product(gens, repeat=length)]
        index = {w: i for i, w in enumerate(words)}
        uf = _UnionFind(len(words))
        for i, w in enumerate(words):
            for u, v in pres.relations:
                start = w.find(u)
                while start != -1:
                    uf.union(i, index[w[:start] + v + w[start + len(u):]])
                    start = w.find(u, start + 1)
                start = w.find(v)
                while start != -1:
                    uf.union(i, index[w[:start] + u + w[start + len(v):]])
                    start = w.find(v, start + 1)
        roots = sorted({uf.find(i) for i in range(len(words))})
        # root index -> global class id, in lex order of representatives
        local: dict[int, int] = {}
        for root in roots:
            local[root] = len(reps)
            reps.append(words[root])
            ranks.append(length)
        for i, w in enumerate(words):
            class_of_word[w] = local[uf.find(i)]
        if length:
            for w in words:
                covers.add((class_of_word[w[:-1]], class_of_word[w]))

    labels = [w if w else "1" for w in reps]
    poset = build_poset(sorted(covers), ranks, labels)
    return MonoidPoset(pres, N, poset, tuple(reps), class_of_word)


# -- bounded verification -------------------------------------------------------


@dataclass(frozen=True)
class CancellativityVerdict:
    ok: bool
    verified_to: int
    witness: tuple[str, str, str] | None = None

    def describe(self) -> str:
        if self.ok:
            return f"left cancellative for all products of length <= {self.verified_to}"
        x, b, c = self.witness
        return f"not left cancellative: {x!r}*{b!r} = {x!r}*{c!r} but {b!r} != {c!r}"


def left_cancellative_check(m: MonoidPoset) -> CancellativityVerdict:
    """Verify x*b = x*c implies b = c for all classes with the product length
    inside the truncation; bounded evidence only."""
    by_len: dict[int, list[int]] = {}
    for cid, rep in enumerate(m.reps):
        by_len.setdefault(len(rep), []).append(cid)
    for lx in range(1, m.N):
        for lb in range(1, m.N - lx + 1):
            for x in by_len.get(lx, ()):
                seen: dict[int, int] = {}
                for b in by_len.get(lb, ()):
                    prod = m.product(x, b)
                    other = seen.get(prod)
                    if other is not None:
                        return CancellativityVerdict(
                            False, m.N, (m.reps[x], m.reps[other], m.reps[b])
                        )
                    seen[prod] = b
    return CancellativityVerdict(True, m.N)


@dataclass(frozen=True)
class LcmVerdict:
    ok: bool
    verified_to: int
    witness: tuple[str, str, tuple[str, ...]] | None = None
    unbounded_pairs: int = 0

    def describe(self) -> str:
        if not self.ok:
            x, y, bounds = self.witness
            return (
                f"pair {x!r}, {y!r} has minimal common upper bounds {bounds}; "
                "no least common right multiple exists"
            )
        note = f"unique minimal common right multiples up to rank {self.verified_to}"
        if self.unbounded_pairs:
            note += f"; {self.unbounded_pairs} pairs have no bound within the truncation"
        return note


def right_lcm_check(m: MonoidPoset) -> LcmVerdict:
    """Within the truncation, every pair with a common upper bound must have a
    unique minimal one.  Two incomparable minimal bounds refute the lcm
    property outright; pairs with no bound inside the truncation are counted
    as indeterminate rather than guessed."""
    p = m.poset
    unbounded = 0
    for x in range(p.n):
        for y in range(x + 1, p.n):
            ub = p.upsets[x] & p.upsets[y]
            if ub == 0:
                unbounded += 1
                continue
            mins = p._minimal_of(ub)
            if len(mins) > 1:
                return LcmVerdict(
                    False,
                    m.N,
                    (m.reps[x], m.reps[y], tuple(m.reps[z] for z in mins)),
                    unbounded,
                )
    return LcmVerdict(True, m.N, None, unbounded)


# -- named presentations --------------------------------------------------------


def rank_two_presentation(r: int) -> MonoidPresentation:
    """Generators x1..xr with xi x1 = x1^2 for i >= 2; the lattice of left
    divisors of x1^2 is the rank-two lattice with r atoms."""
    return chains_presentation(r, 2)


def chains_presentation(r: int, n: int) -> MonoidPresentation:
    """Generators x1..xr with xi x1^(n-1) = x1^n for i >= 2."""
    if r < 2 or n < 2:
        raise UphoError("chain-core presentation needs r >= 2 and n >= 2")
    if r > len(ALPHABET):
        raise UphoError("too many generators to name")
    g = ALPHABET[:r]
    rhs = g[0] * n
    rels = tuple((g[i] + g[0] * (n - 1), rhs) for i in range(1, r))
    return MonoidPresentation(tuple(g), rels)


def classical_braid_presentation(ctype: CoxeterType) -> MonoidPresentation:
    """One generator per simple reflection; braid relations sts... = tst...
    with the word length given by the Coxeter parameter of the pair."""
    ctype.validate()
    if ctype.family == "A":
        rank = ctype.param
        gens = ALPHABET[:rank]
        rels = []
        for i in range(rank):
            for j in range(i + 1, rank):
                mij = 3 if j == i + 1 else 2
                lhs = "".join(gens[i] if t % 2 == 0 else gens[j] for t in range(mij))
                rhs = "".join(gens[j] if t % 2 == 0 else gens[i] for t in range(mij))
                rels.append((lhs, rhs))
        return MonoidPresentation(tuple(gens), tuple(rels))
    m = ctype.param
    lhs = "".join("ab"[t % 2] for t in range(m))
    rhs = "".join("ba"[t % 2] for t in range(m))
    return MonoidPresentation(("a", "b"), ((lhs, rhs),))


def dual_braid_presentation(ctype: CoxeterType) -> MonoidPresentation:
    """One generator per reflection; relations t s = s t^s, imposed for the
    ordered pairs whose product lies below the Coxeter element in absolute
    order, then deduplicated after canonicalization.

    The side condition is what makes the relation closure identify exactly
    the reduced reflection factorizations of each rank-two noncrossing
    element; without it, extra pairs (already at rank two) collapse and the
    class counts stop matching the noncrossing partition lattice.
    """
    ctype.validate()
    real = realization(ctype)
    refl = list(real.reflections)
    if isinstance(real, SymmetricGroup):
        refl.sort(key=real.cycle_label)
    if len(refl) > len(ALPHABET):
        raise UphoError("too many reflections to name")
    letter = {t: ALPHABET[i] for i, t in enumerate(refl)}
    c = real.coxeter_element()
    rels = set()
    for t in refl:
        for s in refl:
            if s == t:
                continue
            if not real.absolute_leq(real.mul(t, s), c):
                continue
            conj = real.mul(real.mul(real.inv(s), t), s)
            lhs = letter[t] + letter[s]
            rhs = letter[s] + letter[conj]
            if lhs != rhs:
                rels.add(tuple(sorted((lhs, rhs))))
    return MonoidPresentation(tuple(ALPHABET[: len(refl)]), tuple(sorted(rels)))


def core_with_noncore_dual_presentation() -> MonoidPresentation:
    """Three generators with aa = bb and ba = ca.

    Left cancellative with least common right multiples, so its divisibility
    order is a self-similar lattice.  Its core is an 8-element lattice whose
    characteristic polynomial, 1 - 3x + 2x^2, matches the 7-element
    asymmetric-core example; the rewrite chain aab ~ bbb ~ baa ~ caa ~ cbb
    puts the extra element cb below the join of the atoms.
    """
    return MonoidPresentation(("a", "b", "c"), (("aa", "bb"), ("ba", "ca")))


def core_with_noncore_dual_exact_presentation() -> MonoidPresentation:
    """Three generators with aa = bb and ba = cc; the divisors of the join of
    the atoms form exactly the 7-element asymmetric-core lattice."""
    return MonoidPresentation(("a", "b", "c"), (("aa", "bb"), ("ba", "cc")))


PRESETS = {
    "rank-two": lambda r=2, **kw: rank_two_presentation(r),
    "chains": lambda r=2, n=3, **kw: chains_presentation(r, n),
    "braid-classical": lambda ctype=None, **kw: classical_braid_presentation(ctype),
    "braid-dual": lambda ctype=None, **kw: dual_braid_presentation(ctype),
    "core-with-noncore-dual": lambda **kw: core_with_noncore_dual_presentation(),
    "core-with-noncore-dual-exact": lambda **kw: core_with_noncore_dual_exact_presentation(),
    "free": lambda r=2, **kw: MonoidPresentation(tuple(ALPHABET[:r]), ()),
}
