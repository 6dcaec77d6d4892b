"""Poset JSON schema, DOT export, and number-safe polynomial serialization.

The poset schema is ``{"n": int, "ranks": [int], "covers": [[int, int]],
"labels": [str]?}`` and round-trips bit-exactly.  All polynomial and series
coefficients are serialized as decimal strings, since values like
-269758375958758 must survive any JSON reader.
"""

from __future__ import annotations

import json

from .errors import UphoError
from .intpoly import IntPolynomial, IntPowerSeries
from .poset import GradedPoset, build_poset


def poset_to_dict(p: GradedPoset) -> dict:
    d = {
        "n": p.n,
        "ranks": list(p.rank),
        "covers": [list(c) for c in sorted(p.covers)],
    }
    if p.labels is not None:
        d["labels"] = list(p.labels)
    return d


def poset_from_dict(d: dict) -> GradedPoset:
    try:
        n = d["n"]
        ranks = d["ranks"]
        covers = d["covers"]
    except (KeyError, TypeError) as e:
        raise UphoError(f"malformed poset JSON: missing {e}") from e
    if len(ranks) != n:
        raise UphoError("malformed poset JSON: n disagrees with ranks")
    labels = d.get("labels")
    if labels is not None and len(labels) != n:
        raise UphoError("malformed poset JSON: n disagrees with labels")
    return build_poset(covers, ranks, labels)


def poset_to_json(p: GradedPoset) -> str:
    return json.dumps(poset_to_dict(p), ensure_ascii=False)


def poset_from_json(text: str) -> GradedPoset:
    return poset_from_dict(json.loads(text))


def poset_to_dot(p: GradedPoset, name: str = "hasse") -> str:
    """Hasse diagram in DOT: same-rank groups, edges drawn bottom-to-top."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for r, level in enumerate(p.levels):
        if not level:
            continue
        members = " ".join(f"n{i};" for i in level)
        lines.append(f"  {{ rank=same; {members} }}")
    for i in range(p.n):
        esc = p.label(i).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{i} [label="{esc}"];')
    for a, b in sorted(p.covers):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def coeffs_to_strings(coeffs) -> list[str]:
    return [str(int(c)) for c in coeffs]


def poly_to_dict(p: IntPolynomial) -> dict:
    return {"coeffs": coeffs_to_strings(p.coeffs)}


def poly_from_dict(d: dict) -> IntPolynomial:
    return IntPolynomial.of(int(c) for c in d["coeffs"])


def series_to_dict(s: IntPowerSeries) -> dict:
    return {"coeffs": coeffs_to_strings(s.coeffs), "order": s.order}


def series_from_dict(d: dict) -> IntPowerSeries:
    return IntPowerSeries(tuple(int(c) for c in d["coeffs"]), int(d["order"]))
