"""Identity verification, self-similarity checks, matrix identities, and the
obstruction pipeline for ruling lattices out as cores.

Everything here is bounded evidence by design: a truncation can only ever be
checked to its own rank, and a nonnegative positivity scan proves nothing
beyond its order.  Verdicts therefore distinguish "pass" (a definitive
finite computation), "fail" (always carrying a certificate), and
"inconclusive" (a scan or search bound was exhausted without a decision).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .builders import UphoTruncation
from .errors import DepthExceedsTruncation, SearchBudgetExceeded, UphoError
from .intpoly import (
    IntPolynomial,
    IntPowerSeries,
    first_negative_coefficient,
    series_div,
    series_inverse,
    substitute_power,
)
from .isomorphism import find_embedding, is_isomorphic
from .poset import GradedPoset
from . import zoo

DEFAULT_EMBED_BUDGET = 500_000


def default_scan_order(chi: IntPolynomial) -> int:
    """Positivity scan order covering every index this package ever cites."""
    return max(13, 4 * max(chi.degree, 0) + 16)


# -- the rank-generating-function identity -------------------------------------


@dataclass(frozen=True)
class IdentityVerdict:
    ok: bool
    chi: IntPolynomial
    counts: tuple[int, ...]
    expected: tuple[int, ...]
    first_mismatch: int | None

    def describe(self) -> str:
        if self.ok:
            return (
                f"rank counts match the series inverse of {self.chi.text()} "
                f"through rank {len(self.counts) - 1}"
            )
        k = self.first_mismatch
        return (
            f"rank {k}: counted {self.counts[k]} elements but the series "
            f"inverse of {self.chi.text()} expects {self.expected[k]}"
        )


def verify_rank_identity(t: UphoTruncation) -> IdentityVerdict:
    """Rank counts of the truncation against 1/chi* of its extracted core."""
    chi = t.poset.core().reciprocal_char_poly()
    expected = series_inverse(chi, t.N).coeffs
    counts = t.poset.rank_counts()
    mismatch = next((k for k in range(t.N + 1) if counts[k] != expected[k]), None)
    return IdentityVerdict(mismatch is None, chi, counts, expected, mismatch)


@dataclass(frozen=True)
class UphoVerdict:
    ok: bool
    depth: int
    checked: int
    witness: int | None = None
    witness_label: str | None = None

    def describe(self) -> str:
        if self.ok:
            return (
                f"all {self.checked} principal filters at ranks 1..{self.depth} "
                "are isomorphic to the truncation at matching height"
            )
        return (
            f"filter of element {self.witness} ({self.witness_label}) is not "
            "isomorphic to the truncation at matching height"
        )


def verify_upho(t: UphoTruncation, depth: int | None = None) -> UphoVerdict:
    """Compare every low filter with the whole truncation at equal height.

    The filter above a rank-d element is only known to height N-d, so each
    comparison truncates both sides to that height.  Bounded evidence: this
    can refute self-similarity, never prove it.
    """
    if depth is None:
        depth = max(1, min(3, t.N - 1))
    if depth >= t.N:
        raise DepthExceedsTruncation(
            f"depth {depth} leaves no room below truncation rank {t.N}"
        )
    p = t.poset
    checked = 0
    cache: dict[int, GradedPoset] = {}
    for x in range(p.n):
        d = p.rank[x]
        if not 1 <= d <= depth:
            continue
        h = t.N - d
        if h not in cache:
            cache[h] = p.truncate(h)
        filt = p.principal_filter(x, height=h)
        checked += 1
        if is_isomorphic(filt, cache[h]) is None:
            return UphoVerdict(False, depth, checked, x, p.label(x))
    return UphoVerdict(True, depth, checked)


# -- obstruction pipeline --------------------------------------------------------


@dataclass(frozen=True)
class ObstructionEntry:
    test: str
    verdict: str  # pass | fail | inconclusive
    certificate: dict = field(default_factory=dict)

    def describe(self) -> str:
        extra = ""
        if self.certificate:
            inner = ", ".join(f"{k}={v}" for k, v in sorted(self.certificate.items()))
            extra = f" ({inner})"
        return f"{self.test}: {self.verdict}{extra}"


@dataclass(frozen=True)
class ObstructionReport:
    lattice_id: str
    entries: tuple[ObstructionEntry, ...]

    def verdict(self, test: str) -> str:
        return next(e.verdict for e in self.entries if e.test == test)

    def rules_out(self) -> bool:
        return any(e.verdict == "fail" for e in self.entries)


def obstruction_positivity_poly(chi: IntPolynomial, order: int) -> ObstructionEntry:
    inv = series_inverse(chi, order)
    idx = first_negative_coefficient(inv)
    if idx is not None:
        return ObstructionEntry(
            "positivity", "fail", {"index": idx, "value": inv.coeff(idx)}
        )
    return ObstructionEntry("positivity", "inconclusive", {"scanned_to": order})


def obstruction_positivity(lattice: GradedPoset, order: int | None = None) -> ObstructionEntry:
    """Negative coefficient in 1/chi* refutes core-ness; absence proves nothing."""
    chi = lattice.reciprocal_char_poly()
    return obstruction_positivity_poly(chi, order or default_scan_order(chi))


def obstruction_positivity_m_poly(chi: IntPolynomial, m: int, order: int) -> ObstructionEntry:
    name = f"positivity_m[m={m}]"
    if m == 1:
        return ObstructionEntry(name, "pass", {"note": "ratio is identically 1"})
    num = substitute_power(chi, m)
    den = IntPolynomial.one()
    for _ in range(m):
        den = den * chi
    ratio = series_div(num, den, order)
    idx = first_negative_coefficient(ratio)
    if idx is not None:
        return ObstructionEntry(name, "fail", {"index": idx, "value": ratio.coeff(idx)})
    return ObstructionEntry(name, "inconclusive", {"scanned_to": order})


def obstruction_positivity_m(
    lattice: GradedPoset, m: int, order: int | None = None
) -> ObstructionEntry:
    """Scan chi*(x^m)/chi*(x)^m for a negative coefficient."""
    chi = lattice.reciprocal_char_poly()
    return obstruction_positivity_m_poly(chi, m, order or default_scan_order(chi))


def obstruction_max_join(lattice: GradedPoset) -> ObstructionEntry:
    """A core's maximum must be the join of its atoms."""
    top = lattice.maximum()
    if top is None:
        return ObstructionEntry("max_join", "fail", {"note": "no maximum"})
    j = lattice.join_of_atoms()
    if j == top:
        return ObstructionEntry("max_join", "pass")
    return ObstructionEntry(
        "max_join",
        "fail",
        {"join_of_atoms": lattice.label(j), "top": lattice.label(top)},
    )


def obstruction_structural(
    lattice: GradedPoset, budget: int = DEFAULT_EMBED_BUDGET
) -> ObstructionEntry:
    """Self-similarity test: for every interior x, the interval from x to the
    join of its covers must embed rank-preservingly into the whole lattice.

    The embedding search is exhaustive (with pruning), so a negative answer
    is a sound certificate; hitting the node budget yields "inconclusive",
    never "fail".
    """
    top = lattice.maximum()
    zero = lattice.zero()
    for x in range(lattice.n):
        if x == zero or x == top:
            continue
        covers = lattice.up[x]
        j = lattice.join_all(covers) if covers else x
        interval = lattice.interval(x, j)
        try:
            emb = find_embedding(interval, lattice, budget=budget)
        except SearchBudgetExceeded:
            return ObstructionEntry(
                "structural",
                "inconclusive",
                {"witness": lattice.label(x), "budget": budget},
            )
        if emb is None:
            top_of_interval = interval.maximum()
            cert = {
                "witness": lattice.label(x),
                "interval_size": interval.n,
                "interval_top_covers": len(interval.down[top_of_interval])
                if top_of_interval is not None
                else None,
                "max_covers_at_rank": max(
                    (len(lattice.down[y]) for y in lattice.levels[interval.max_rank]),
                    default=0,
                ),
            }
            return ObstructionEntry("structural", "fail", cert)
    return ObstructionEntry("structural", "pass")


def obstruction_report(
    lattice: GradedPoset,
    lattice_id: str,
    order: int | None = None,
    m: int = 2,
    budget: int = DEFAULT_EMBED_BUDGET,
) -> ObstructionReport:
    """Run the full pipeline: positivity, m-fold positivity, max-join,
    structural."""
    chi = lattice.reciprocal_char_poly()
    scan = order or default_scan_order(chi)
    entries = (
        obstruction_positivity_poly(chi, scan),
        obstruction_positivity_m_poly(chi, m, scan),
        obstruction_max_join(lattice),
        obstruction_structural(lattice, budget=budget),
    )
    return ObstructionReport(lattice_id, entries)


# -- Whitney numbers and symmetric-function matrices ------------------------------


def h_complete(k: int, xs) -> int:
    """Complete homogeneous symmetric polynomial h_k evaluated at integers."""
    xs = list(xs)
    if k < 0:
        return 0
    row = [1] + [0] * k
    for x in xs:
        for d in range(1, k + 1):
            row[d] += x * row[d - 1]
    return row[k]


def e_elementary(k: int, xs) -> int:
    """Elementary symmetric polynomial e_k evaluated at integers."""
    xs = list(xs)
    if k < 0 or k > len(xs):
        return 0
    row = [1] + [0] * k
    for x in xs:
        for d in range(min(k, len(xs)), 0, -1):
            row[d] += x * row[d - 1]
    return row[k]


@dataclass(frozen=True)
class WhitneyTables:
    family: str
    n: int
    second_kind: tuple[tuple[int, ...], ...]  # V[i][j]
    first_kind: tuple[tuple[int, ...], ...]  # v[i][j]
    atom_increments: tuple[int, ...]  # a_1..a_n


def _whitney_lattice(family: str, i: int, q: int, m: int) -> GradedPoset:
    if family == "boolean":
        return zoo.boolean(i)
    if family == "subspace":
        return zoo.subspace(i, q)
    if family == "partition":
        return zoo.partition(i + 1)
    if family == "signed_partition":
        return zoo.signed_partition(i) if i else zoo.boolean(0)
    if family == "dowling":
        return zoo.dowling_cyclic(i, m)
    raise UphoError(f"no uniform sequence named {family!r}")


def whitney_tables(family: str, n: int, q: int = 2, m: int = 2) -> WhitneyTables:
    """Read V(i,j) and v(i,j) off F and chi* of the first n+1 lattices in the
    uniform sequence; row i is indexed by corank j (coefficient of x^{i-j})."""
    V = []
    v = []
    atoms = []
    for i in range(n + 1):
        lat = _whitney_lattice(family, i, q, m)
        f = lat.rank_gen_poly()
        chi = lat.reciprocal_char_poly()
        V.append(tuple(f.coeff(i - j) for j in range(n + 1)))
        v.append(tuple(chi.coeff(i - j) for j in range(n + 1)))
        atoms.append(len(lat.atoms()) if i else 0)
    increments = tuple(atoms[i] - atoms[i - 1] for i in range(1, n + 1))
    return WhitneyTables(family, n, tuple(V), tuple(v), increments)


@dataclass(frozen=True)
class MatrixVerdict:
    ok: bool
    note: str


def _is_identity(mat) -> bool:
    return all(
        mat[i][j] == (1 if i == j else 0) for i in range(len(mat)) for j in range(len(mat))
    )


def _mat_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)
    ]


def _lower_unitriangular(mat) -> bool:
    n = len(mat)
    for i in range(n):
        if mat[i][i] != 1:
            return False
        for j in range(i + 1, n):
            if mat[i][j] != 0:
                return False
    return True


def whitney_inverse_check(tables: WhitneyTables) -> MatrixVerdict:
    """Both Whitney matrices must be lower unitriangular and mutually inverse."""
    V = [list(r) for r in tables.second_kind]
    v = [list(r) for r in tables.first_kind]
    if not (_lower_unitriangular(V) and _lower_unitriangular(v)):
        return MatrixVerdict(False, "tables are not lower unitriangular")
    if not (_is_identity(_mat_mul(V, v)) and _is_identity(_mat_mul(v, V))):
        return MatrixVerdict(False, "product is not the identity")
    return MatrixVerdict(True, f"{tables.family} Whitney matrices of size {tables.n + 1} are inverses")


def sym_matrix_inverse_check(a, size: int) -> MatrixVerdict:
    """Build A[i][j] = h_{i-j}(a_1..a_{j+1}) and B[i][j] = (-1)^{i-j}
    e_{i-j}(a_1..a_i) numerically and check both products are the identity."""
    a = list(a)
    if len(a) < size:
        raise UphoError("sequence too short for the requested size")
    A = [
        [h_complete(i - j, a[: j + 1]) if i >= j else 0 for j in range(size)]
        for i in range(size)
    ]
    B = [
        [
            (-1) ** (i - j) * e_elementary(i - j, a[:i]) if i >= j else 0
            for j in range(size)
        ]
        for i in range(size)
    ]
    ok = _is_identity(_mat_mul(A, B)) and _is_identity(_mat_mul(B, A))
    return MatrixVerdict(ok, "h/e matrices are inverses" if ok else "product differs from identity")


@dataclass(frozen=True)
class FactorizationVerdict:
    ok: bool
    atom_counts: tuple[int, ...]
    product: IntPolynomial
    chi: IntPolynomial

    def describe(self) -> str:
        status = "matches" if self.ok else "differs from"
        return (
            f"product over chain increments {self.atom_counts} {status} "
            f"chi* = {self.chi.text()}"
        )


def supersolvable_factorization_check(
    lattice: GradedPoset, chain
) -> FactorizationVerdict:
    """a_i counts atoms first bounded by the i-th chain element; the product
    of (1 - a_i x) must reproduce chi* computed from the Moebius function."""
    chain = list(chain)
    atoms = lattice.atoms()
    counts = []
    for prev, cur in zip(chain, chain[1:]):
        counts.append(
            sum(
                1
                for s in atoms
                if lattice.leq(s, cur) and not lattice.leq(s, prev)
            )
        )
    product = IntPolynomial.linear_product(counts)
    chi = lattice.reciprocal_char_poly()
    return FactorizationVerdict(product == chi, tuple(counts), product, chi)
