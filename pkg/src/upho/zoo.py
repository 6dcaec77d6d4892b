"""Generators for the finite graded lattices used throughout the package.

Every generator returns a validated :class:`GradedPoset` with deterministic
element order (sorted canonical keys within each rank level) and display
labels ("1|23" for partitions, "+0-" for polytope faces, one-line words for
permutations, and so on).  Families with a distinguished maximal chain of
modular elements also expose that chain via :func:`supersolvable_instance`.

Element counts are estimated up front and instances beyond ``MAX_ELEMENTS``
are refused with :class:`SizeGuard` instead of exhausting memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from . import gf
from .coxeter import CoxeterType, realization
from .errors import SizeGuard, UphoError
from .intpoly import IntPolynomial
from .poset import GradedPoset, build_poset

MAX_ELEMENTS = 50_000


def _guard(count: int, what: str):
    if count > MAX_ELEMENTS:
        raise SizeGuard(f"{what} would have {count} elements (limit {MAX_ELEMENTS})")


@dataclass(frozen=True)
class ZooRecipe:
    """A zoo family name plus its integer parameters, e.g. ('partition', n=4)."""

    family: str
    params: tuple[tuple[str, int], ...] = ()

    @staticmethod
    def of(family: str, **params) -> "ZooRecipe":
        return ZooRecipe(family, tuple(sorted(params.items())))

    def param_dict(self) -> dict:
        return dict(self.params)

    def describe(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})"


def _poset_from_levels(levels, covers_by_key, labeller, bounded_below=True):
    """Assemble a poset from per-rank canonical keys and key-level covers."""
    index = {}
    ranks = []
    labels = []
    for r, keys in enumerate(levels):
        for key in sorted(keys):
            index[key] = len(ranks)
            ranks.append(r)
            labels.append(labeller(key))
    covers = sorted({(index[a], index[b]) for a, b in covers_by_key})
    poset = build_poset(covers, ranks, labels, bounded_below=bounded_below)
    return poset, index


# -- Boolean and subspace lattices ------------------------------------------


def _set_label(s) -> str:
    if not s:
        return "∅"
    items = sorted(s)
    if max(items) <= 9:
        return "".join(str(i) for i in items)
    return ",".join(str(i) for i in items)


def _build_boolean(n: int):
    if n < 0:
        raise UphoError("boolean lattice needs n >= 0")
    _guard(2**n, f"B_{n}")
    levels = [[] for _ in range(n + 1)]
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    for s in subsets:
        levels[len(s)].append(tuple(sorted(s)))
    covers = []
    for s in subsets:
        for x in range(1, n + 1):
            if x not in s:
                covers.append((tuple(sorted(s)), tuple(sorted(s | {x}))))
    return _poset_from_levels(levels, covers, _set_label)


def boolean(n: int) -> GradedPoset:
    """Subsets of {1..n} ordered by inclusion."""
    return _build_boolean(n)[0]


def _build_subspace(n: int, q: int):
    if n < 0:
        raise UphoError("subspace lattice needs n >= 0")
    gf.field(q)  # raises UnsupportedFieldOrder early
    count = sum(_gaussian_binomial(n, k, q) for k in range(n + 1))
    _guard(count, f"B_{n}({q})")
    levels = [sorted(gf.subspaces_of_dimension(d, q, n)) for d in range(n + 1)]
    covers = []
    for d in range(n):
        for u in levels[d]:
            members = gf.span_members(u, q, n) if u else {(0,) * n}
            seen = set()
            for v in gf.all_vectors(q, n):
                if v not in members and any(v):
                    w = gf.rref(list(u) + [v], q)
                    if w not in seen:
                        seen.add(w)
                        covers.append((u, w))
    def label(key):
        if not key:
            return "⟨0⟩"
        return "⟨" + ",".join("".join(str(x) for x in row) for row in key) + "⟩"
    return _poset_from_levels(levels, covers, label)


def subspace(n: int, q: int) -> GradedPoset:
    """Subspaces of GF(q)^n by inclusion, canonicalized by row echelon form."""
    return _build_subspace(n, q)[0]


def _gaussian_binomial(n, k, q) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# -- partition-type lattices -------------------------------------------------


def _partitions_of(items):
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in _partitions_of(rest):
        for i in range(len(part)):
            yield part[:i] + (tuple(sorted(part[i] + (first,))),) + part[i + 1 :]
        yield ((first,),) + part


def _partition_key(blocks) -> tuple:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def _partition_label(key) -> str:
    return "|".join("".join(str(x) for x in b) for b in key)


def _build_partition(n: int):
    if n < 1:
        raise UphoError("partition lattice needs n >= 1")
    if n > 9:
        raise SizeGuard(f"partition lattice guard: n={n} exceeds 9")
    levels = [[] for _ in range(n)]
    elems = [_partition_key(p) for p in _partitions_of(range(1, n + 1))]
    for key in elems:
        levels[n - len(key)].append(key)
    covers = []
    for key in elems:
        for i, j in combinations(range(len(key)), 2):
            merged = [b for t, b in enumerate(key) if t not in (i, j)]
            merged.append(tuple(sorted(key[i] + key[j])))
            covers.append((key, _partition_key(merged)))
    return _poset_from_levels(levels, covers, _partition_label)


def partition(n: int) -> GradedPoset:
    """Set partitions of {1..n} ordered by refinement."""
    return _build_partition(n)[0]


def _signed_key(pairs, zero) -> tuple:
    # pairs: list of tuples of signed ints; representative side contains +min|.|
    reps = []
    for block in pairs:
        block = tuple(sorted(block, key=abs))
        if block[0] < 0:
            block = tuple(-x for x in block)
        reps.append(block)
    return (tuple(sorted(reps, key=lambda b: abs(b[0]))), tuple(sorted(zero)))


def _signed_label(key) -> str:
    pairs, zero = key
    parts = ["".join(("-" + str(-x)) if x < 0 else str(x) for x in b) for b in pairs]
    if zero:
        parts.append("z" + "".join(str(x) for x in zero))
    return "|".join(parts) if parts else "z"


def _signed_elements(n: int):
    """Type-B partitions of {±1..±n}: (pair blocks by representative, zero set)."""
    out = []
    for zero_size in range(n + 1):
        for zero in combinations(range(1, n + 1), zero_size):
            rest = [x for x in range(1, n + 1) if x not in zero]
            for part in _partitions_of(rest):
                for signed in _sign_choices(part):
                    out.append(_signed_key(signed, zero))
    return out


def _sign_choices(blocks):
    """All per-block sign patterns with the minimum element kept positive."""
    options = []
    for b in blocks:
        pats = []
        for signs in product((1, -1), repeat=len(b) - 1):
            pats.append((b[0],) + tuple(s * x for s, x in zip(signs, b[1:])))
        options.append(pats)
    yield from product(*options)


def _signed_count(n: int) -> int:
    total = 0
    for k in range(n + 1):
        for zero in combinations(range(n), k):
            m = n - k
            total += _dowling_like_count(m, 2)
    return total


def _dowling_like_count(m: int, g: int) -> int:
    # partitions of an m-set with g^(|B|-1) labelings per block
    total = 0
    for part in _partitions_of(range(m)):
        w = 1
        for b in part:
            w *= g ** (len(b) - 1)
        total += w
    return total


def _build_signed_partition(n: int):
    if n < 1:
        raise UphoError("signed partition lattice needs n >= 1")
    if n > 6:
        raise SizeGuard(f"signed partition guard: n={n} exceeds 6")
    _guard(_signed_count(n), f"signed partition lattice n={n}")
    elems = _signed_elements(n)
    levels = [[] for _ in range(n + 1)]
    for key in elems:
        pairs, _zero = key
        levels[n - len(pairs)].append(key)
    covers = []
    for key in elems:
        pairs, zero = key
        for i, j in combinations(range(len(pairs)), 2):
            others = [b for t, b in enumerate(pairs) if t not in (i, j)]
            for flip in (1, -1):
                merged = others + [pairs[i] + tuple(flip * x for x in pairs[j])]
                covers.append((key, _signed_key(merged, zero)))
        for i in range(len(pairs)):
            others = [b for t, b in enumerate(pairs) if t != i]
            new_zero = tuple(sorted(set(zero) | {abs(x) for x in pairs[i]}))
            covers.append((key, _signed_key(others, new_zero)))
    return _poset_from_levels(levels, covers, _signed_label)


def signed_partition(n: int) -> GradedPoset:
    """Type-B partitions of {±1..±n} by refinement (mirror-closed blocks,
    at most one self-mirrored zero block)."""
    return _build_signed_partition(n)[0]


def _dowling_key(blocks) -> tuple:
    # block: (elements tuple ascending, labels tuple with label[0] == 0)
    return tuple(sorted(blocks, key=lambda b: b[0][0]))


def _dowling_label(key) -> str:
    if not key:
        return "∅"
    return "|".join(
        ",".join(f"{x}:{g}" for x, g in zip(elems, labs)) for elems, labs in key
    )


def _dowling_elements(n: int, m: int):
    out = []
    for dom_size in range(n + 1):
        for dom in combinations(range(1, n + 1), dom_size):
            for part in _partitions_of(dom):
                for labelled in _dowling_labelings(part, m):
                    out.append(_dowling_key(labelled))
    return out


def _dowling_labelings(blocks, m: int):
    options = []
    for b in blocks:
        pats = [
            (b, (0,) + labs) for labs in product(range(m), repeat=len(b) - 1)
        ]
        options.append(pats)
    yield from product(*options)


def _dowling_count(n: int, m: int) -> int:
    total = 0
    for k in range(n + 1):
        total += math.comb(n, k) * _dowling_like_count(k, m)
    return total


def _normalize_dowling_block(elems, labs, m: int):
    order = sorted(range(len(elems)), key=lambda t: elems[t])
    elems2 = tuple(elems[t] for t in order)
    labs2 = tuple(labs[t] for t in order)
    shift = labs2[0]
    labs2 = tuple((g - shift) % m for g in labs2)
    return (elems2, labs2)


def _build_dowling(n: int, m: int):
    if n < 0 or m < 1:
        raise UphoError("Dowling lattice needs n >= 0 and m >= 1")
    _guard(_dowling_count(n, m), f"Q_{n}(Z/{m})")
    elems = _dowling_elements(n, m)
    levels = [[] for _ in range(n + 1)]
    for key in elems:
        levels[n - len(key)].append(key)
    covers = []
    for key in elems:
        blocks = list(key)
        for i, j in combinations(range(len(blocks)), 2):
            others = [b for t, b in enumerate(blocks) if t not in (i, j)]
            (ei, li), (ej, lj) = blocks[i], blocks[j]
            for g in range(m):
                merged = _normalize_dowling_block(
                    ei + ej, li + tuple((x + g) % m for x in lj), m
                )
                covers.append((key, _dowling_key(others + [merged])))
        for i in range(len(blocks)):
            others = [b for t, b in enumerate(blocks) if t != i]
            covers.append((key, _dowling_key(others)))
    return _poset_from_levels(levels, covers, _dowling_label)


def dowling_cyclic(n: int, m: int) -> GradedPoset:
    """Dowling lattice of partial Z/m-labelled partitions of {1..n}."""
    return _build_dowling(n, m)[0]


# -- small handmade families --------------------------------------------------


def rank_two_lattice(r: int) -> GradedPoset:
    """The unique rank-two graded lattice with exactly r atoms (M_r)."""
    if r < 1:
        raise UphoError("rank-two lattice needs r >= 1")
    _guard(r + 2, f"M_{r}")
    ranks = [0] + [1] * r + [2]
    covers = [(0, i) for i in range(1, r + 1)] + [(i, r + 1) for i in range(1, r + 1)]
    labels = ["0"] + [f"s{i}" for i in range(1, r + 1)] + ["1"]
    return build_poset(covers, ranks, labels)


def chain_sum(r: int, n: int) -> GradedPoset:
    """Minimum plus r disjoint chains of n-1 elements plus maximum."""
    if r < 1 or n < 2:
        raise UphoError("chain sum needs r >= 1 and n >= 2")
    _guard(2 + r * (n - 1), "chain sum")
    ranks = [0]
    labels = ["0"]
    covers = []
    idx = {}
    for i in range(1, r + 1):
        for j in range(1, n):
            idx[(i, j)] = len(ranks)
            ranks.append(j)
            labels.append(f"c{i}.{j}")
    top = len(ranks)
    ranks.append(n)
    labels.append("1")
    for i in range(1, r + 1):
        covers.append((0, idx[(i, 1)]))
        for j in range(1, n - 1):
            covers.append((idx[(i, j)], idx[(i, j + 1)]))
        covers.append((idx[(i, n - 1)], top))
    return build_poset(covers, ranks, labels)


def cross_polytope_faces(n: int) -> GradedPoset:
    """Faces of the n-dimensional cross polytope: sign words over {0,+,-}
    plus an adjoined maximum; rank of a word is its support size."""
    if n < 1:
        raise UphoError("cross polytope needs n >= 1")
    _guard(3**n + 1, "cross polytope face lattice")
    words = list(product((0, 1, 2), repeat=n))
    levels = [[] for _ in range(n + 2)]
    for w in words:
        levels[sum(1 for c in w if c)].append(w)
    top = ("TOP",)
    levels[n + 1].append(top)
    covers = []
    for w in words:
        support = sum(1 for c in w if c)
        if support == n:
            covers.append((w, top))
        for i, c in enumerate(w):
            if c == 0:
                for sign in (1, 2):
                    covers.append((w, w[:i] + (sign,) + w[i + 1 :]))
    chars = {0: "0", 1: "+", 2: "-"}
    def label(key):
        if key == top:
            return "⊤"
        return "".join(chars[c] for c in key)
    return _poset_from_levels(levels, covers, label)[0]


def hypercube_faces(n: int) -> GradedPoset:
    """Faces of the n-cube: words over {-,+,*} (free coordinates starred)
    above an adjoined empty face; rank is the number of stars plus one."""
    if n < 1:
        raise UphoError("hypercube needs n >= 1")
    _guard(3**n + 1, "hypercube face lattice")
    bottom = ("EMPTY",)
    words = list(product((1, 2, 3), repeat=n))  # 1=+, 2=-, 3=*
    levels = [[bottom]] + [[] for _ in range(n + 1)]
    for w in words:
        levels[sum(1 for c in w if c == 3) + 1].append(w)
    covers = []
    for w in words:
        stars = sum(1 for c in w if c == 3)
        if stars == 0:
            covers.append((bottom, w))
        for i, c in enumerate(w):
            if c != 3:
                covers.append((w, w[:i] + (3,) + w[i + 1 :]))
    chars = {1: "+", 2: "-", 3: "*"}
    def label(key):
        if key == bottom:
            return "∅"
        return "".join(chars[c] for c in key)
    return _poset_from_levels(levels, covers, label)[0]


def bond_lattice(edges) -> GradedPoset:
    """Partitions of the vertex set whose blocks induce connected subgraphs,
    ordered by refinement (the lattice of flats of the graphic matroid)."""
    edges = [tuple(sorted(e)) for e in edges]
    verts = sorted({v for e in edges for v in e})
    n = len(verts)
    if verts != list(range(1, n + 1)):
        raise UphoError("bond lattice expects vertices 1..n")
    if n > 9:
        raise SizeGuard(f"bond lattice guard: {n} vertices exceeds 9")
    if len(set(edges)) != len(edges) or any(a == b for a, b in edges):
        raise UphoError("bond lattice expects a simple graph")
    adjacency = {v: set() for v in verts}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    # connectivity check
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise UphoError("bond lattice expects a connected graph")

    bottom = _partition_key([(v,) for v in verts])
    edge_set = set(edges)
    found = {bottom}
    levels = [[] for _ in range(n)]
    levels[0].append(bottom)
    covers = []
    frontier = [bottom]
    while frontier:
        nxt = []
        for key in frontier:
            for i, j in combinations(range(len(key)), 2):
                if not any(
                    tuple(sorted((a, b))) in edge_set
                    for a in key[i]
                    for b in key[j]
                ):
                    continue
                merged = [b for t, b in enumerate(key) if t not in (i, j)]
                merged.append(tuple(sorted(key[i] + key[j])))
                mkey = _partition_key(merged)
                covers.append((key, mkey))
                if mkey not in found:
                    found.add(mkey)
                    levels[n - len(mkey)].append(mkey)
                    nxt.append(mkey)
        frontier = nxt
    return _poset_from_levels(levels, covers, _partition_label)[0]


def uniform_matroid_flats(k: int, n: int) -> GradedPoset:
    """Flats of U(k, n): subsets of {1..n} of size below k plus a maximum."""
    if not 2 <= k <= n:
        raise UphoError("uniform matroid needs 2 <= k <= n")
    _guard(sum(math.comb(n, i) for i in range(k)) + 1, "uniform matroid flats")
    levels = [[] for _ in range(k + 1)]
    subsets = [
        tuple(sorted(c)) for size in range(k) for c in combinations(range(1, n + 1), size)
    ]
    for s in subsets:
        levels[len(s)].append(s)
    top = ("TOP",)
    levels[k].append(top)
    covers = []
    for s in subsets:
        if len(s) == k - 1:
            covers.append((s, top))
        else:
            ss = set(s)
            for x in range(1, n + 1):
                if x not in ss:
                    covers.append((s, tuple(sorted(s + (x,)))))
    def label(key):
        return "⊤" if key == top else _set_label(key)
    return _poset_from_levels(levels, covers, label)[0]


def weak_order(ctype: CoxeterType) -> GradedPoset:
    """Right weak order of the finite Coxeter group of the given type."""
    real = realization(ctype)
    _guard(len(real.elements), "weak order")
    elems = sorted(real.elements, key=lambda w: (real.length(w), real.label(w)))
    index = {w: i for i, w in enumerate(elems)}
    ranks = [real.length(w) for w in elems]
    covers = set()
    for w in elems:
        for s in real.simples:
            u = real.mul(w, s)
            if real.length(u) == real.length(w) + 1:
                covers.add((index[w], index[u]))
    labels = [real.label(w) for w in elems]
    return build_poset(sorted(covers), ranks, labels)


def noncrossing(ctype: CoxeterType) -> GradedPoset:
    """Interval from the identity to a Coxeter element in absolute order."""
    real = realization(ctype)
    c = real.coxeter_element()
    top_len = real.absolute_length(c)
    members = [w for w in real.elements if real.absolute_leq(w, c)]
    def label(w):
        return real.cycle_label(w) if hasattr(real, "cycle_label") else real.label(w)
    members.sort(key=lambda w: (real.absolute_length(w), label(w)))
    index = {w: i for i, w in enumerate(members)}
    ranks = [real.absolute_length(w) for w in members]
    covers = set()
    for w in members:
        lw = real.absolute_length(w)
        if lw == top_len:
            continue
        for t in real.reflections:
            u = real.mul(w, t)
            if real.absolute_length(u) == lw + 1 and u in index:
                covers.add((index[w], index[u]))
    labels = [label(w) for w in members]
    return build_poset(sorted(covers), ranks, labels)


def core_with_noncore_dual() -> GradedPoset:
    """A 7-element rank-3 lattice that is a core although its dual is not:
    three atoms a,b,c with a v b and b v c at rank two and a v c the top."""
    ranks = (0, 1, 1, 1, 2, 2, 3)
    covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (2, 5), (3, 5), (4, 6), (5, 6)]
    labels = ("0", "a", "b", "c", "ab", "bc", "1")
    return build_poset(covers, ranks, labels)


# -- distinguished modular chains ---------------------------------------------


def supersolvable_instance(family: str, n: int, q: int = 2, m: int = 2):
    """(lattice, chain) for the families carrying a canonical modular chain.

    The chain runs from the minimum to the maximum; for partitions it is the
    staircase 1|2|..|n < 12|3|..|n < 123|4|..|n < ... and the other families
    use the matching staircase in their own encodings.
    """
    if family == "boolean":
        poset, index = _build_boolean(n)
        chain = [tuple(range(1, i + 1)) for i in range(n + 1)]
    elif family == "subspace":
        poset, index = _build_subspace(n, q)
        chain = [
            gf.rref([_unit_vector(j, n) for j in range(i)], q) for i in range(n + 1)
        ]
    elif family == "partition":
        poset, index = _build_partition(n)
        chain = [
            _partition_key(
                [tuple(range(1, i + 2))] + [(x,) for x in range(i + 2, n + 1)]
            )
            for i in range(n)
        ]
    elif family == "signed_partition":
        poset, index = _build_signed_partition(n)
        chain = [
            _signed_key(
                [(x,) for x in range(i + 1, n + 1)], tuple(range(1, i + 1))
            )
            for i in range(n + 1)
        ]
    elif family == "dowling":
        poset, index = _build_dowling(n, m)
        chain = [
            _dowling_key([((x,), (0,)) for x in range(i + 1, n + 1)])
            for i in range(n + 1)
        ]
    else:
        raise UphoError(f"no canonical modular chain for family {family!r}")
    return poset, [index[key] for key in chain]


def _unit_vector(j: int, n: int):
    return tuple(1 if t == j else 0 for t in range(n))


# -- characteristic polynomials of graphs without building the lattice --------


def graph_char_poly(edges) -> IntPolynomial:
    """Rank-indexed characteristic polynomial of a connected graph's bond
    lattice, computed by deletion-contraction on the chromatic polynomial.

    Works far beyond the 9-vertex guard of :func:`bond_lattice`.
    """
    edges = [tuple(sorted(e)) for e in edges]
    verts = sorted({v for e in edges for v in e})
    remap = {v: i for i, v in enumerate(verts)}
    eset = frozenset(frozenset((remap[a], remap[b])) for a, b in edges)
    if any(len(e) != 2 for e in eset):
        raise UphoError("graph must be loop-free")
    chrom = _chromatic(len(verts), eset)
    n = len(verts)
    coeffs = [chrom.coeff(n - j) for j in range(n + 1)]
    return IntPolynomial.of(coeffs)


@lru_cache(maxsize=None)
def _chromatic(nv: int, edges: frozenset) -> IntPolynomial:
    # union-find component count and forest detection
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic_edge = None
    for e in edges:
        a, b = tuple(e)
        ra, rb = find(a), find(b)
        if ra == rb:
            cyclic_edge = e
        else:
            parent[ra] = rb
    ncomp = sum(1 for x in range(nv) if find(x) == x)
    if cyclic_edge is None:
        y = IntPolynomial((0, 1))
        out = IntPolynomial.one()
        for _ in range(ncomp):
            out = out * y
        for _ in range(len(edges)):
            out = out * IntPolynomial((-1, 1))
        return out
    a, b = tuple(cyclic_edge)
    deleted = edges - {cyclic_edge}
    # contract: merge b into a, relabel to stay dense
    relabel = [x if x < b else x - 1 for x in range(nv)]
    relabel[b] = relabel[a]
    contracted = frozenset(
        frozenset((relabel[x], relabel[y]))
        for e2 in deleted
        for x, y in [tuple(e2)]
        if relabel[x] != relabel[y]
    )
    return _chromatic(nv, deleted) - _chromatic(nv - 1, contracted)


# -- dispatcher ----------------------------------------------------------------


def generate(recipe: ZooRecipe) -> GradedPoset:
    """Build the lattice described by a recipe (used by the CLI and tests)."""
    p = recipe.param_dict()
    fam = recipe.family
    if fam == "boolean":
        return boolean(p["n"])
    if fam == "subspace":
        return subspace(p["n"], p["q"])
    if fam == "partition":
        return partition(p["n"])
    if fam == "signed_partition":
        return signed_partition(p["n"])
    if fam == "dowling":
        return dowling_cyclic(p["n"], p["m"])
    if fam == "rank_two":
        return rank_two_lattice(p["r"])
    if fam == "chain_sum":
        return chain_sum(p["r"], p["n"])
    if fam == "cross_polytope":
        return cross_polytope_faces(p["n"])
    if fam == "hypercube":
        return hypercube_faces(p["n"])
    if fam == "uniform_matroid":
        return uniform_matroid_flats(p["k"], p["n"])
    if fam == "cycle_bond":
        n = p["n"]
        return bond_lattice([(i, i + 1) for i in range(1, n)] + [(1, n)])
    if fam == "complete_bond":
        n = p["n"]
        return bond_lattice([(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])
    if fam == "weak_order":
        if "m" in p:
            return weak_order(CoxeterType("I2", p["m"]))
        return weak_order(CoxeterType("A", p["r"]))
    if fam == "noncrossing":
        if "m" in p:
            return noncrossing(CoxeterType("I2", p["m"]))
        return noncrossing(CoxeterType("A", p["r"]))
    if fam == "core_with_noncore_dual":
        return core_with_noncore_dual()
    raise UphoError(f"unknown zoo family {recipe.family!r}")
