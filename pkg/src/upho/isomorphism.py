"""Poset isomorphism and order-embedding search.

Both searches share the same shape: an iterative-refinement phase that
partitions elements into classes by (rank, up-degree, down-degree, neighbor
class multisets), then deterministic backtracking over bitmask candidate
sets.  Tie-breaking is always refined-class-then-index order, so results are
reproducible.  No canonical-form machinery is attempted; instances stay in
the low thousands of elements.
"""

from __future__ import annotations

from .errors import SearchBudgetExceeded
from .poset import GradedPoset, PosetMap, iter_bits


def _refine_colors(posets) -> list[list[int]]:
    """Joint color refinement over the cover digraphs of several posets.

    Colors are stable under isomorphism: equal colors are assigned to
    elements whose iterated (rank, degrees, neighbor colors) signatures
    agree.  New color ids are allocated by sorted signature, which keeps the
    numbering canonical.
    """
    colorings = [
        [(p.rank[i], len(p.up[i]), len(p.down[i])) for i in range(p.n)] for p in posets
    ]

    def compress(raw):
        table = {sig: c for c, sig in enumerate(sorted(set(s for rs in raw for s in rs)))}
        return [[table[s] for s in rs] for rs in raw], len(table)

    colorings, n_colors = compress(colorings)
    while True:
        raw = []
        for p, cols in zip(posets, colorings):
            raw.append(
                [
                    (
                        cols[i],
                        tuple(sorted(cols[j] for j in p.up[i])),
                        tuple(sorted(cols[j] for j in p.down[i])),
                    )
                    for i in range(p.n)
                ]
            )
        colorings, new_n = compress(raw)
        if new_n == n_colors:
            return colorings
        n_colors = new_n


def is_isomorphic(p: GradedPoset, q: GradedPoset) -> PosetMap | None:
    """A poset isomorphism p -> q, or None; deterministic given inputs."""
    if p.n != q.n or p.rank_counts() != q.rank_counts() or len(p.covers) != len(q.covers):
        return None
    cp, cq = _refine_colors([p, q])
    hist_p: dict[int, int] = {}
    hist_q: dict[int, int] = {}
    for c in cp:
        hist_p[c] = hist_p.get(c, 0) + 1
    for c in cq:
        hist_q[c] = hist_q.get(c, 0) + 1
    if hist_p != hist_q:
        return None

    # Q elements by color, and class sizes for the processing order.
    q_by_color: dict[int, list[int]] = {}
    for j, c in enumerate(cq):
        q_by_color.setdefault(c, []).append(j)

    # Process bottom-up: when an element is placed, all its lower covers are
    # already mapped, so candidates are exactly the unused same-color elements
    # of Q whose lower-cover set equals the image of the element's lower covers.
    order = sorted(range(p.n), key=lambda i: (p.rank[i], hist_p[cp[i]], cp[i], i))
    image = [-1] * p.n
    used = 0
    down_bits_q = [0] * q.n
    for a, b in q.covers:
        down_bits_q[b] |= 1 << a

    down_p = p.down
    pos = 0
    cand_stack: list[list[int]] = []
    ptr_stack: list[int] = []
    while True:
        if pos == p.n:
            return PosetMap(p, q, tuple(image))
        if pos == len(cand_stack):
            i = order[pos]
            target = 0
            for d in down_p[i]:
                target |= 1 << image[d]
            cands = [
                j
                for j in q_by_color[cp[i]]
                if not (used >> j) & 1 and down_bits_q[j] == target
            ]
            cand_stack.append(cands)
            ptr_stack.append(0)
        cands = cand_stack[pos]
        k = ptr_stack[pos]
        if k < len(cands):
            ptr_stack[pos] += 1
            j = cands[k]
            image[order[pos]] = j
            used |= 1 << j
            pos += 1
        else:
            cand_stack.pop()
            ptr_stack.pop()
            pos -= 1
            if pos < 0:
                return None
            j = image[order[pos]]
            used ^= 1 << j
            image[order[pos]] = -1


def find_embedding(
    p: GradedPoset,
    q: GradedPoset,
    budget: int | None = None,
) -> PosetMap | None:
    """A rank-preserving order-embedding p -> q (injective, order-preserving
    and order-reflecting), or None when an exhaustive search rules one out.

    A ``budget`` caps the number of search-tree nodes; exceeding it raises
    :class:`SearchBudgetExceeded`, so callers can distinguish "no embedding"
    from "gave up".
    """
    if p.n > q.n or p.max_rank > q.max_rank:
        return None
    # Per-rank profile counts: an embedding maps upsets into upsets and
    # downsets into downsets, so counts may only grow.
    def profile(poset, i):
        up = [0] * (poset.max_rank + 1)
        for e in iter_bits(poset.upsets[i]):
            up[poset.rank[e]] += 1
        dn = [0] * (poset.max_rank + 1)
        for e in iter_bits(poset.downsets[i]):
            dn[poset.rank[e]] += 1
        return up, dn

    prof_q = [profile(q, j) for j in range(q.n)]

    init_cand = []
    for i in range(p.n):
        up_i, dn_i = profile(p, i)
        mask = 0
        for j in q.levels[p.rank[i]]:
            up_j, dn_j = prof_q[j]
            if all(a <= b for a, b in zip(up_i, up_j)) and all(
                a <= b for a, b in zip(dn_i, dn_j)
            ):
                mask |= 1 << j
        if mask == 0:
            return None
        init_cand.append(mask)

    strict_up_q = [q.upsets[j] ^ (1 << j) for j in range(q.n)]
    strict_dn_q = [q.downsets[j] ^ (1 << j) for j in range(q.n)]

    cand = list(init_cand)
    image = [-1] * p.n
    unassigned = set(range(p.n))
    trail: list[list[tuple[int, int]]] = []
    choice_stack: list[tuple[int, list[int], int]] = []
    nodes = 0

    def pick():
        return min(unassigned, key=lambda i: (cand[i].bit_count(), i))

    def assign(i, j):
        # prune neighbours: comparabilities and incomparabilities must be
        # mirrored exactly in the image
        changes = []
        for k in unassigned:
            old = cand[k]
            if p.leq(i, k):
                new = old & strict_up_q[j]
            elif p.leq(k, i):
                new = old & strict_dn_q[j]
            else:
                new = old & ~(q.upsets[j] | q.downsets[j])
            if new != old:
                cand[k] = new
                changes.append((k, old))
                if new == 0:
                    return changes, False
        return changes, True

    while True:
        if not unassigned:
            return PosetMap(p, q, tuple(image))
        i = pick()
        choice_stack.append((i, list(iter_bits(cand[i])), 0))
        unassigned.discard(i)
        while choice_stack:
            i, cands, k = choice_stack[-1]
            if k < len(cands):
                nodes += 1
                if budget is not None and nodes > budget:
                    raise SearchBudgetExceeded(f"embedding search exceeded {budget} nodes")
                choice_stack[-1] = (i, cands, k + 1)
                j = cands[k]
                image[i] = j
                changes, ok = assign(i, j)
                trail.append(changes)
                if ok:
                    break
                # undo and try this frame's next candidate
                for idx, old in trail.pop():
                    cand[idx] = old
                image[i] = -1
            else:
                choice_stack.pop()
                unassigned.add(i)
                if not choice_stack:
                    return None
                # retract the parent's current assignment and continue there
                pi, _, _ = choice_stack[-1]
                for idx, old in trail.pop():
                    cand[idx] = old
                image[pi] = -1


def is_embedding(
    p: GradedPoset, q: GradedPoset, image, rank_preserving: bool = True
) -> bool:
    """Validate a candidate embedding pointwise (used by tests and reports)."""
    image = list(image)
    if len(set(image)) != p.n:
        return False
    for i in range(p.n):
        if rank_preserving and p.rank[i] != q.rank[image[i]]:
            return False
        for k in range(p.n):
            if p.leq(i, k) != q.leq(image[i], image[k]):
                return False
    return True
