"""Rank-N truncations of the infinite self-similar lattices.

Each builder enumerates the elements of rank <= N with the concrete
descriptions of the corresponding infinite lattice (tuples for the grid,
bounded subsets, echelon forms, k-block partitions, and so on), and emits
the covers constructively level by level.  Cover relations of the infinite
objects never skip ranks, so a truncation is exact: it contains every
element of rank <= N and every cover between them.

A truncation records the recipe it was built from, the zoo recipe of its
expected core, and (when a closed form is known) the polynomial whose series
inverse must reproduce the rank counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from . import gf, zoo
from .coxeter import CoxeterType
from .errors import SizeGuard, UphoError
from .intpoly import IntPolynomial
from .monoid import (
    MonoidPresentation,
    MonoidPoset,
    chains_presentation,
    classical_braid_presentation,
    core_with_noncore_dual_presentation,
    dual_braid_presentation,
    enumerate_elements,
    rank_two_presentation,
)
from .poset import GradedPoset
from .zoo import MAX_ELEMENTS, ZooRecipe, _dowling_key, _partition_key, _signed_key


@dataclass(frozen=True)
class UphoTruncation:
    """A truncated self-similar lattice plus its construction metadata."""

    poset: GradedPoset
    recipe: str
    params: tuple[tuple[str, int], ...]
    N: int
    expected_core: ZooRecipe | None
    expected_chi: IntPolynomial | None

    def describe(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.recipe}({inner})@N={self.N}"


def _check_truncation(poset: GradedPoset, N: int):
    if poset.max_rank != N:
        raise UphoError(f"truncation has max rank {poset.max_rank}, expected {N}")
    counts = poset.rank_counts()
    if any(c == 0 for c in counts):
        raise UphoError("truncation has an empty rank level")
    for i in range(poset.n):
        if poset.rank[i] < N and not poset.up[i]:
            raise UphoError(f"element {i} below the top rank has no upper cover")


def _guard_expected(chi: IntPolynomial, N: int, what: str):
    from .intpoly import series_inverse

    total = sum(series_inverse(chi, N).coeffs)
    if total > MAX_ELEMENTS:
        raise SizeGuard(f"{what} would have {total} elements (limit {MAX_ELEMENTS})")


def _assemble(levels, covers_by_key, labeller, recipe, params, N, core, chi):
    poset, _ = zoo._poset_from_levels(levels, covers_by_key, labeller)
    _check_truncation(poset, N)
    return UphoTruncation(poset, recipe, tuple(sorted(params.items())), N, core, chi)


def grid(d: int, N: int) -> UphoTruncation:
    """Tuples in N^d with coordinate sum <= N, ordered coordinatewise."""
    if d < 1 or N < 0:
        raise UphoError("grid needs d >= 1 and N >= 0")
    chi = IntPolynomial.linear_product([1] * d)
    _guard_expected(chi, N, "grid truncation")
    levels: list[list] = [[] for _ in range(N + 1)]
    covers = []
    for t in product(range(N + 1), repeat=d):
        s = sum(t)
        if s > N:
            continue
        levels[s].append(t)
        if s < N:
            for i in range(d):
                covers.append((t, t[:i] + (t[i] + 1,) + t[i + 1 :]))
    return _assemble(
        levels, covers, lambda t: "(" + ",".join(map(str, t)) + ")",
        "grid", {"d": d}, N, ZooRecipe.of("boolean", n=d), chi,
    )


def boolean_infty(k: int, N: int) -> UphoTruncation:
    """Finite sets S inside {1..#S+k-1}, by inclusion; rank is the size."""
    if k < 1 or N < 0:
        raise UphoError("bounded-subset truncation needs k >= 1 and N >= 0")
    chi = IntPolynomial.linear_product([1] * k)
    _guard_expected(chi, N, "bounded-subset truncation")
    levels = [
        [tuple(sorted(c)) for c in combinations(range(1, r + k), r)]
        for r in range(N + 1)
    ]
    covers = []
    for r in range(N):
        for s in levels[r]:
            have = set(s)
            for x in range(1, r + k + 1):
                if x not in have:
                    covers.append((s, tuple(sorted(s + (x,)))))
    return _assemble(
        levels, covers, zoo._set_label,
        "boolean_infty", {"k": k}, N, ZooRecipe.of("boolean", n=k), chi,
    )


def subspace_infty(k: int, q: int, N: int) -> UphoTruncation:
    """Subspaces spanned inside the first dim+k-1 coordinates; rank is dim.

    A rank-r element is stored as its echelon form in GF(q)^(r+k-1), padded
    with zero columns when compared against higher levels.
    """
    if k < 1 or N < 0:
        raise UphoError("subspace truncation needs k >= 1 and N >= 0")
    gf.field(q)
    chi = IntPolynomial.linear_product([q**i for i in range(k)])
    _guard_expected(chi, N, "subspace truncation")

    def embed(u, width):
        return tuple(row + (0,) * (width - len(row)) for row in u)

    levels = []
    for r in range(N + 1):
        width = r + k - 1
        subs = sorted(gf.subspaces_of_dimension(r, q, width)) if width else [()]
        levels.append(subs)
    covers = []
    for r in range(N):
        width = r + k
        for u in levels[r]:
            u_wide = embed(u, width)
            members = gf.span_members(u_wide, q, width) if u_wide else {(0,) * width}
            seen = set()
            for v in gf.all_vectors(q, width):
                if v not in members and any(v):
                    w = gf.rref(list(u_wide) + [v], q)
                    if w not in seen:
                        seen.add(w)
                        covers.append((u, w))
    def label(key):
        if not key:
            return "⟨0⟩"
        return "⟨" + ",".join("".join(str(x) for x in row) for row in key) + "⟩"
    return _assemble(
        levels, covers, label,
        "subspace_infty", {"k": k, "q": q}, N, ZooRecipe.of("subspace", n=k, q=q), chi,
    )


def partition_infty(k: int, N: int) -> UphoTruncation:
    """Partitions of {1..n} into exactly k blocks (n = rank + k), ordered by
    blockwise containment."""
    if k < 1 or N < 0:
        raise UphoError("partition truncation needs k >= 1 and N >= 0")
    chi = IntPolynomial.linear_product(range(1, k + 1))
    _guard_expected(chi, N, "partition truncation")
    levels = [
        [p for p in _k_block_partitions(r + k, k)] for r in range(N + 1)
    ]
    covers = []
    for r in range(N):
        for key in levels[r]:
            n = r + k
            # place n+1 in an existing block, or merge two blocks and let
            # n+1 start a fresh singleton; both keep exactly k blocks
            for i in range(k):
                grown = list(key)
                grown[i] = tuple(sorted(grown[i] + (n + 1,)))
                covers.append((key, _partition_key(grown)))
            for i, j in combinations(range(k), 2):
                merged = [b for t, b in enumerate(key) if t not in (i, j)]
                merged.append(tuple(sorted(key[i] + key[j])))
                merged.append((n + 1,))
                covers.append((key, _partition_key(merged)))
    return _assemble(
        levels, covers, zoo._partition_label,
        "partition_infty", {"k": k}, N, ZooRecipe.of("partition", n=k + 1), chi,
    )


def _k_block_partitions(n: int, k: int):
    """Partitions of {1..n} into exactly k blocks, via growth strings."""
    out = []
    if k > n:
        return out
    assign = [0] * n

    def rec(i, used):
        if i == n:
            if used == k:
                blocks = [[] for _ in range(k)]
                for t, b in enumerate(assign):
                    blocks[b].append(t + 1)
                out.append(_partition_key(blocks))
            return
        if used + (n - i) < k:
            return
        for b in range(min(used + 1, k)):
            assign[i] = b
            rec(i + 1, max(used, b + 1))

    rec(0, 0)
    return sorted(out)


def signed_partition_infty(k: int, N: int) -> UphoTruncation:
    """Mirror-closed partitions of {±1..±n} with exactly k-1 non-zero block
    pairs (n = rank + k - 1), ordered by blockwise containment."""
    if k < 1 or N < 0:
        raise UphoError("signed partition truncation needs k >= 1 and N >= 0")
    chi = IntPolynomial.linear_product([2 * i + 1 for i in range(k)])
    _guard_expected(chi, N, "signed partition truncation")
    levels = []
    for r in range(N + 1):
        n = r + k - 1
        levels.append(sorted(_signed_with_pairs(n, k - 1)))
    covers = []
    for r in range(N):
        n = r + k - 1
        for key in levels[r]:
            pairs, zero = key
            new = n + 1
            # absorb the new point into the zero block
            covers.append((key, _signed_key(pairs, zero + (new,))))
            # attach the new point to either side of an existing pair
            for i in range(len(pairs)):
                for sign in (1, -1):
                    grown = list(pairs)
                    grown[i] = grown[i] + (sign * new,)
                    covers.append((key, _signed_key(grown, zero)))
            # merge two pairs (two relative orientations) and open {new}
            for i, j in combinations(range(len(pairs)), 2):
                others = [b for t, b in enumerate(pairs) if t not in (i, j)]
                for flip in (1, -1):
                    merged = others + [
                        pairs[i] + tuple(flip * x for x in pairs[j]),
                        (new,),
                    ]
                    covers.append((key, _signed_key(merged, zero)))
            # dissolve one pair into the zero block and open {new}
            for i in range(len(pairs)):
                others = [b for t, b in enumerate(pairs) if t != i] + [(new,)]
                bigger_zero = tuple(sorted(set(zero) | {abs(x) for x in pairs[i]}))
                covers.append((key, _signed_key(others, bigger_zero)))
    return _assemble(
        levels, covers, zoo._signed_label,
        "signed_partition_infty", {"k": k}, N, ZooRecipe.of("signed_partition", n=k), chi,
    )


def _signed_with_pairs(n: int, pairs: int):
    out = []
    for zero_size in range(n + 1):
        if n - zero_size < pairs:
            continue
        for zero in combinations(range(1, n + 1), zero_size):
            rest = [x for x in range(1, n + 1) if x not in zero]
            for part in zoo._partitions_of(rest):
                if len(part) != pairs:
                    continue
                for signed in zoo._sign_choices(part):
                    out.append(_signed_key(signed, zero))
    return out


def dowling_infty(k: int, m: int, N: int) -> UphoTruncation:
    """Partial Z/m-labelled partitions of {1..n} with exactly k-1 blocks
    (n = rank + k - 1); comparison deletes the trailing points first."""
    if k < 1 or m < 1 or N < 0:
        raise UphoError("Dowling truncation needs k >= 1, m >= 1, N >= 0")
    chi = IntPolynomial.linear_product([1 + i * m for i in range(k)])
    _guard_expected(chi, N, "Dowling truncation")
    # elements are pairs (n, blocks): the ambient n is part of the identity,
    # since the same block data with a larger trash is a different element
    levels = []
    for r in range(N + 1):
        n = r + k - 1
        levels.append(sorted((n, key) for key in _dowling_with_blocks(n, k - 1, m)))
    covers = []
    for r in range(N):
        n = r + k - 1
        for elem in levels[r]:
            _, key = elem
            blocks = list(key)
            new = n + 1
            # the new point goes to the trash
            covers.append((elem, (n + 1, key)))
            # join an existing block with any relative label
            for i in range(len(blocks)):
                elems, labs = blocks[i]
                for g in range(m):
                    grown = blocks[:i] + blocks[i + 1 :] + [
                        zoo._normalize_dowling_block(
                            elems + (new,), labs + (g,), m
                        )
                    ]
                    covers.append((elem, (n + 1, _dowling_key(grown))))
            # merge two blocks (m relative labelings) and open {new}
            for i, j in combinations(range(len(blocks)), 2):
                others = [b for t, b in enumerate(blocks) if t not in (i, j)]
                (ei, li), (ej, lj) = blocks[i], blocks[j]
                for g in range(m):
                    merged = zoo._normalize_dowling_block(
                        ei + ej, li + tuple((x + g) % m for x in lj), m
                    )
                    covers.append(
                        (elem, (n + 1, _dowling_key(others + [merged, ((new,), (0,))])))
                    )
            # delete one block and open {new}
            for i in range(len(blocks)):
                others = [b for t, b in enumerate(blocks) if t != i]
                covers.append((elem, (n + 1, _dowling_key(others + [((new,), (0,))]))))

    def label(elem):
        n, key = elem
        return f"[{n}]" + zoo._dowling_label(key)

    return _assemble(
        levels, covers, label,
        "dowling_infty", {"k": k, "m": m}, N, ZooRecipe.of("dowling", n=k, m=m), chi,
    )


def _dowling_with_blocks(n: int, nblocks: int, m: int):
    out = []
    for dom_size in range(nblocks, n + 1):
        for dom in combinations(range(1, n + 1), dom_size):
            for part in zoo._partitions_of(dom):
                if len(part) != nblocks:
                    continue
                for labelled in zoo._dowling_labelings(part, m):
                    out.append(_dowling_key(labelled))
    return out


# -- monoid-backed truncations ---------------------------------------------------


def from_monoid(
    pres: MonoidPresentation,
    N: int,
    recipe: str = "monoid",
    params: dict | None = None,
    expected_core: ZooRecipe | None = None,
    expected_chi: IntPolynomial | None = None,
    budget: int | None = None,
) -> UphoTruncation:
    """Wrap a monoid's left-divisibility poset as a truncation."""
    mp = enumerate_elements(pres, N, budget=budget)
    _check_truncation(mp.poset, N)
    return UphoTruncation(
        mp.poset, recipe, tuple(sorted((params or {}).items())), N,
        expected_core, expected_chi,
    )


def rank_two(r: int, N: int, budget: int | None = None) -> UphoTruncation:
    chi = IntPolynomial.of([1, -r, r - 1])
    return from_monoid(
        rank_two_presentation(r), N, "rank_two", {"r": r},
        ZooRecipe.of("rank_two", r=r), chi, budget,
    )


def chains(r: int, n: int, N: int, budget: int | None = None) -> UphoTruncation:
    chi = IntPolynomial.of([1, -r] + [0] * (n - 2) + [r - 1])
    return from_monoid(
        chains_presentation(r, n), N, "chains", {"r": r, "n": n},
        ZooRecipe.of("chain_sum", r=r, n=n), chi, budget,
    )


def braid_classical(ctype: CoxeterType, N: int, budget: int | None = None) -> UphoTruncation:
    core = (
        ZooRecipe.of("weak_order", r=ctype.param)
        if ctype.family == "A"
        else ZooRecipe.of("weak_order", m=ctype.param)
    )
    return from_monoid(
        classical_braid_presentation(ctype), N, "braid_classical",
        {"param": ctype.param}, core, None, budget,
    )


def braid_dual(ctype: CoxeterType, N: int, budget: int | None = None) -> UphoTruncation:
    core = (
        ZooRecipe.of("noncrossing", r=ctype.param)
        if ctype.family == "A"
        else ZooRecipe.of("noncrossing", m=ctype.param)
    )
    return from_monoid(
        dual_braid_presentation(ctype), N, "braid_dual",
        {"param": ctype.param}, core, None, budget,
    )


def asymmetric_core(N: int, budget: int | None = None) -> UphoTruncation:
    # expected_core stays unset: the extracted core of this presentation is an
    # 8-element lattice sharing its characteristic polynomial with the
    # 7-element asymmetric-core example
    return from_monoid(
        core_with_noncore_dual_presentation(), N, "core_with_noncore_dual", {},
        None, None, budget,
    )


BUILDERS = {
    "grid": grid,
    "boolean-infty": boolean_infty,
    "subspace-infty": subspace_infty,
    "partition-infty": partition_infty,
    "signed-partition-infty": signed_partition_infty,
    "dowling-infty": dowling_infty,
}
