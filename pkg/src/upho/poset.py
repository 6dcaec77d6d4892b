"""Finite graded posets and their standard invariants.

Storage is rank-stratified: elements are dense integer indices, ``rank[i]``
is the rank of element i, and ``covers`` is the Hasse diagram as (lower,
upper) pairs.  The full order relation is materialized lazily as one upset
bitmask per element (a Python int with bit j set when i <= j); bitmask AND /
OR against these masks is what every lattice operation and search below runs
on.

All values are immutable after construction.  The Moebius memo table is an
internal cache of a pure function, so posets may be shared freely across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    ChainNotMaximal,
    ChainNotModular,
    CycleDetected,
    DualNotGraded,
    JoinOfAtomsMissing,
    NoJoin,
    NoMeet,
    NoMinimum,
    NotComparable,
    NotReduced,
    RankMismatch,
)
from .intpoly import IntPolynomial


def iter_bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GradedPoset:
    """Finite graded poset with explicit ranks and cover relations.

    Use :func:`build_poset` to construct with validation; the raw constructor
    trusts its arguments.
    """

    def __init__(self, ranks, covers, labels=None, bounded_below=True):
        self.n = len(ranks)
        self.rank = tuple(int(r) for r in ranks)
        self.covers = tuple((int(a), int(b)) for a, b in covers)
        self.labels = None if labels is None else tuple(str(s) for s in labels)
        self.bounded_below = bounded_below
        self._mobius_cache: dict[tuple[int, int], int] = {}

    # -- basic structure ----------------------------------------------------

    @cached_property
    def up(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for a, b in self.covers:
            adj[a].append(b)
        return tuple(tuple(sorted(xs)) for xs in adj)

    @cached_property
    def down(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for a, b in self.covers:
            adj[b].append(a)
        return tuple(tuple(sorted(xs)) for xs in adj)

    @cached_property
    def max_rank(self) -> int:
        return max(self.rank) if self.n else 0

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        """Element indices grouped by rank."""
        lv = [[] for _ in range(self.max_rank + 1)]
        for i, r in enumerate(self.rank):
            lv[r].append(i)
        return tuple(tuple(xs) for xs in lv)

    @cached_property
    def by_rank_order(self) -> tuple[int, ...]:
        return tuple(i for level in self.levels for i in level)

    @cached_property
    def upsets(self) -> tuple[int, ...]:
        """upsets[i] has bit j set iff i <= j."""
        ups = [0] * self.n
        for i in reversed(self.by_rank_order):
            m = 1 << i
            for j in self.up[i]:
                m |= ups[j]
            ups[i] = m
        return tuple(ups)

    @cached_property
    def downsets(self) -> tuple[int, ...]:
        dns = [0] * self.n
        for i in self.by_rank_order:
            m = 1 << i
            for j in self.down[i]:
                m |= dns[j]
            dns[i] = m
        return tuple(dns)

    @cached_property
    def level_masks(self) -> tuple[int, ...]:
        masks = [0] * (self.max_rank + 1)
        for i, r in enumerate(self.rank):
            masks[r] |= 1 << i
        return tuple(masks)

    def leq(self, x: int, y: int) -> bool:
        return bool((self.upsets[x] >> y) & 1)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def zero(self) -> int:
        """The unique minimum."""
        if not self.bounded_below or not self.levels[0]:
            raise NoMinimum("poset has no unique minimum")
        return self.levels[0][0]

    def maximum(self) -> int | None:
        """The unique maximum, or None."""
        tops = [i for i in range(self.n) if not self.up[i]]
        return tops[0] if len(tops) == 1 else None

    def atoms(self) -> tuple[int, ...]:
        return self.up[self.zero()]

    def rank_counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def __repr__(self):
        return f"GradedPoset(n={self.n}, ranks 0..{self.max_rank})"

    # -- Moebius function and generating polynomials ------------------------

    def mobius(self, x: int, y: int) -> int:
        """mu(x, y), memoized per ordered pair."""
        if not self.leq(x, y):
            raise NotComparable(f"{x} is not below {y}")
        cache = self._mobius_cache
        got = cache.get((x, y))
        if got is not None:
            return got
        members = self.upsets[x] & self.downsets[y]
        for z in sorted(iter_bits(members), key=lambda i: self.rank[i]):
            if (x, z) in cache:
                continue
            if z == x:
                cache[(x, z)] = 1
                continue
            s = 0
            for w in iter_bits(self.upsets[x] & self.downsets[z] & ~(1 << z)):
                s += cache[(x, w)]
            cache[(x, z)] = -s
        return cache[(x, y)]

    def mobius_row(self, x: int) -> dict[int, int]:
        """mu(x, y) for every y >= x, in one bottom-up pass."""
        cache = self._mobius_cache
        row = {}
        for z in self.by_rank_order:
            if not self.leq(x, z):
                continue
            got = cache.get((x, z))
            if got is None:
                if z == x:
                    got = 1
                else:
                    got = -sum(
                        row[w]
                        for w in iter_bits(self.upsets[x] & self.downsets[z] & ~(1 << z))
                    )
                cache[(x, z)] = got
            row[z] = got
        return row

    def rank_gen_poly(self) -> IntPolynomial:
        """Counts elements by rank."""
        return IntPolynomial.of(self.rank_counts())

    def reciprocal_char_poly(self) -> IntPolynomial:
        """Sum of mu(0, p) x^rank(p); exponents record rank, not corank."""
        z = self.zero()
        out = [0] * (self.max_rank + 1)
        for p, mu in self.mobius_row(z).items():
            out[self.rank[p]] += mu
        return IntPolynomial.of(out)

    # -- joins, meets, lattice verdicts --------------------------------------

    def _minimal_of(self, mask: int) -> list[int]:
        return [z for z in iter_bits(mask) if self.downsets[z] & mask == 1 << z]

    def _maximal_of(self, mask: int) -> list[int]:
        return [z for z in iter_bits(mask) if self.upsets[z] & mask == 1 << z]

    def join(self, x: int, y: int) -> int:
        ub = self.upsets[x] & self.upsets[y]
        mins = self._minimal_of(ub)
        if len(mins) != 1:
            raise NoJoin(x, y, mins)
        return mins[0]

    def meet(self, x: int, y: int) -> int:
        lb = self.downsets[x] & self.downsets[y]
        maxs = self._maximal_of(lb)
        if len(maxs) != 1:
            raise NoMeet(x, y, maxs)
        return maxs[0]

    def join_all(self, elements) -> int:
        elements = list(elements)
        if not elements:
            return self.zero()
        acc = elements[0]
        for e in elements[1:]:
            acc = self.join(acc, e)
        return acc

    def lattice_check(self) -> "LatticeVerdict":
        """Confirm every pair has a join and a meet, or return a witness."""
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if self.leq(x, y) or self.leq(y, x):
                    continue
                try:
                    self.join(x, y)
                except NoJoin as e:
                    return LatticeVerdict(False, (x, y), "join", e.certificate)
                try:
                    self.meet(x, y)
                except NoMeet as e:
                    return LatticeVerdict(False, (x, y), "meet", e.certificate)
        return LatticeVerdict(True, None, None, ())

    def join_of_atoms(self) -> int:
        """Join of all atoms; raises when it is not present (rank too small)."""
        try:
            return self.join_all(self.atoms())
        except NoJoin as e:
            raise JoinOfAtomsMissing(
                "join of atoms does not exist within this poset; "
                f"minimal upper bounds {e.certificate}"
            ) from e

    # -- subposets -----------------------------------------------------------

    def convex_subposet(self, mask: int) -> "GradedPoset":
        """Induced subposet on a convex element set (bit mask).

        Convexity (x < z < y with x, y kept implies z kept) guarantees the
        Hasse diagram restricts, so no transitive re-reduction is needed.
        Ranks are shifted so the lowest retained rank becomes 0.
        """
        elems = list(iter_bits(mask))
        old_to_new = {e: i for i, e in enumerate(elems)}
        offset = min(self.rank[e] for e in elems)
        ranks = [self.rank[e] - offset for e in elems]
        covers = [
            (old_to_new[a], old_to_new[b])
            for a, b in self.covers
            if (mask >> a) & 1 and (mask >> b) & 1
        ]
        labels = None
        if self.labels is not None:
            labels = [self.labels[e] for e in elems]
        n_min = sum(1 for e in elems if self.downsets[e] & mask == 1 << e)
        return GradedPoset(ranks, covers, labels, bounded_below=n_min == 1)

    def interval(self, x: int, y: int) -> "GradedPoset":
        """Induced subposet on [x, y], re-ranked so x has rank 0."""
        if not self.leq(x, y):
            raise NotComparable(f"{x} is not below {y}")
        return self.convex_subposet(self.upsets[x] & self.downsets[y])

    def truncate(self, height: int) -> "GradedPoset":
        """Elements of rank <= height with all covers between them."""
        mask = 0
        for r in range(min(height, self.max_rank) + 1):
            mask |= self.level_masks[r]
        return self.convex_subposet(mask)

    def principal_filter(self, p: int, height: int | None = None) -> "GradedPoset":
        """The filter of p, optionally truncated to the given relative height."""
        mask = self.upsets[p]
        if height is not None:
            cap = 0
            top = min(self.rank[p] + height, self.max_rank)
            for r in range(self.rank[p], top + 1):
                cap |= self.level_masks[r]
            mask &= cap
        return self.convex_subposet(mask)

    def delete_maximal(self, x: int) -> "GradedPoset":
        """Remove one maximal element (keeps the poset graded)."""
        if self.up[x]:
            raise ValueError("only maximal elements can be deleted safely")
        return self.convex_subposet(((1 << self.n) - 1) ^ (1 << x))

    def induced_subposet(self, mask: int, keep_ranks=True) -> "GradedPoset":
        """General induced subposet; covers recomputed by transitive reduction."""
        elems = list(iter_bits(mask))
        old_to_new = {e: i for i, e in enumerate(elems)}
        covers = []
        for y in elems:
            below = self.downsets[y] & mask & ~(1 << y)
            for x in self._maximal_of(below):
                covers.append((old_to_new[x], old_to_new[y]))
        ranks = [self.rank[e] for e in elems]
        if not keep_ranks:
            offset = min(ranks)
            ranks = [r - offset for r in ranks]
        labels = [self.labels[e] for e in elems] if self.labels is not None else None
        return GradedPoset(ranks, covers, labels)

    def core(self) -> "GradedPoset":
        """Interval from the minimum to the join of the atoms."""
        return self.interval(self.zero(), self.join_of_atoms())

    # -- structural tests -----------------------------------------------------

    def is_modular_element(self, m: int) -> bool:
        """Rank identity rho(m)+rho(q) == rho(m v q)+rho(m ^ q) against every q."""
        rm = self.rank[m]
        for q in range(self.n):
            try:
                j = self.join(m, q)
                w = self.meet(m, q)
            except (NoJoin, NoMeet):
                return False
            if rm + self.rank[q] != self.rank[j] + self.rank[w]:
                return False
        return True


@dataclass(frozen=True)
class LatticeVerdict:
    is_lattice: bool
    witness: tuple[int, int] | None
    missing: str | None
    minimal_bounds: tuple[int, ...]


@dataclass(frozen=True)
class PosetMap:
    """A map between posets, stored as per-source-element target indices."""

    source: GradedPoset
    target: GradedPoset
    image: tuple[int, ...]
    rank_preserving: bool = True

    def __call__(self, x: int) -> int:
        return self.image[x]


def build_poset(covers, ranks, labels=None, bounded_below=True) -> GradedPoset:
    """Validated construction from cover pairs and per-element ranks.

    Checks, in order: index bounds, acyclicity of the cover digraph, the
    rank-raises-by-one rule, duplicate covers, and (for bounded posets) a
    unique rank-0 element with every higher element covering something.
    """
    ranks = [int(r) for r in ranks]
    n = len(ranks)
    covers = [(int(a), int(b)) for a, b in covers]
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise RankMismatch(f"cover ({a},{b}) out of range for {n} elements")
    if any(r < 0 for r in ranks):
        raise RankMismatch("ranks must be nonnegative")

    # cycle check on the raw digraph, before trusting ranks
    adj = [[] for _ in range(n)]
    indeg = [0] * n
    for a, b in covers:
        adj[a].append(b)
        indeg[b] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen != n:
        raise CycleDetected("cover relations contain a directed cycle")

    for a, b in covers:
        if ranks[b] != ranks[a] + 1:
            raise RankMismatch(
                f"cover ({a},{b}) joins rank {ranks[a]} to rank {ranks[b]}"
            )
    if len(set(covers)) != len(covers):
        raise NotReduced("duplicate cover relations")
    # With consistent ranks every 2-step path spans 2 ranks, so a listed cover
    # can never be transitively implied; reduction is free at this point.

    if bounded_below and n > 0:
        bottoms = [i for i in range(n) if ranks[i] == 0]
        if len(bottoms) != 1:
            raise RankMismatch(f"expected one rank-0 element, found {len(bottoms)}")
        has_down = [False] * n
        for _, b in covers:
            has_down[b] = True
        for i in range(n):
            if ranks[i] > 0 and not has_down[i]:
                raise RankMismatch(f"element {i} has rank {ranks[i]} but no lower cover")
    return GradedPoset(ranks, covers, labels, bounded_below=bounded_below)


def direct_product(p: GradedPoset, q: GradedPoset) -> GradedPoset:
    """Product order; element (a, b) gets index a*q.n + b and rank adds."""
    ranks = [p.rank[a] + q.rank[b] for a in range(p.n) for b in range(q.n)]
    covers = []
    for a, b in p.covers:
        for c in range(q.n):
            covers.append((a * q.n + c, b * q.n + c))
    for c, d in q.covers:
        for a in range(p.n):
            covers.append((a * q.n + c, a * q.n + d))
    labels = None
    if p.labels is not None or q.labels is not None:
        labels = [
            f"({p.label(a)},{q.label(b)})" for a in range(p.n) for b in range(q.n)
        ]
    return GradedPoset(
        ranks, covers, labels, bounded_below=p.bounded_below and q.bounded_below
    )


def dual(p: GradedPoset) -> GradedPoset:
    """Reversed order, re-ranked from the old maximum."""
    top = p.maximum()
    if top is None:
        raise DualNotGraded("reversed poset has no single minimum")
    ranks = [p.max_rank - r for r in p.rank]
    covers = [(b, a) for a, b in p.covers]
    return build_poset(covers, ranks, p.labels)


def trim(lattice: GradedPoset, chain, k: int) -> GradedPoset:
    """Keep elements whose first chain cover exceeds their rank by less than k.

    ``chain`` must be a saturated maximal chain of modular elements from the
    minimum to the maximum; nu(x) is the least chain index with x below the
    chain element.  Ranks are retained from the input lattice and the output
    is re-validated as a graded lattice.
    """
    chain = list(chain)
    if k < 1:
        raise ValueError("trim index must be a positive integer")
    top = lattice.maximum()
    if top is None:
        raise ChainNotMaximal("lattice has no maximum")
    if not chain or chain[0] != lattice.zero() or chain[-1] != top:
        raise ChainNotMaximal("chain must run from the minimum to the maximum")
    for a, b in zip(chain, chain[1:]):
        if b not in lattice.up[a]:
            raise ChainNotMaximal(f"{a} is not covered by {b}")
    for x in chain:
        if not lattice.is_modular_element(x):
            raise ChainNotModular(f"chain element {x} is not modular")

    mask = 0
    for x in range(lattice.n):
        nu = next(i for i, c in enumerate(chain) if lattice.leq(x, c))
        if nu - lattice.rank[x] < k:
            mask |= 1 << x
    out = lattice.induced_subposet(mask, keep_ranks=True)
    # the construction is expected to produce a graded lattice; re-validate
    validated = build_poset(out.covers, out.rank, out.labels)
    verdict = validated.lattice_check()
    if not verdict.is_lattice:
        raise ChainNotModular(f"trimmed poset is not a lattice; witness {verdict.witness}")
    return validated
