"""JSON and DOT formats for algebras, modules, presentations and exchange graphs.

Scalars are written as strings: integers, or ``"a/b"`` over Q.  Over GF(p)
the symmetric representative is used, so ``-1`` is written as ``"-1"``.
"""
from __future__ import annotations

import json

import numpy as np

from .algebra import AlgebraSpec, PathBasisAlgebra, Quiver, RelationSpec, build_algebra
from .field import Field
from .presentations import Presentation, g_vector
from .rep import Representation
from .silting import ExchangeGraph, SiltingObject, SupportTauTiltingPair


# algebras

def algebra_spec_from_json(doc: dict, field: Field | None = None) -> AlgebraSpec:
    try:
        quiver = Quiver(int(doc["vertices"]), tuple(tuple(int(x) for x in a) for a in doc["arrows"]))
        rels = tuple(RelationSpec(tuple((str(c), tuple(int(a) for a in word)) for c, word in rel))
                     for rel in doc.get("relations", []))
        bound = int(doc["nilpotency_bound"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed algebra document: {exc}") from exc
    if field is None:
        field = Field.from_descriptor(doc.get("field", {"prime": 32003}))
    return AlgebraSpec(quiver, rels, bound, field)


def algebra_from_json(doc: dict, field: Field | None = None) -> PathBasisAlgebra:
    return build_algebra(algebra_spec_from_json(doc, field))


def algebra_to_json(alg: PathBasisAlgebra) -> dict:
    spec = alg.spec
    F = alg.field
    return {
        "vertices": spec.quiver.vertex_count,
        "arrows": [list(a) for a in spec.quiver.arrows],
        "relations": [[[F.to_str(F(c)), list(w)] for c, w in r.terms] for r in spec.relations],
        "nilpotency_bound": spec.nilpotency_bound,
        "field": F.descriptor(),
    }


# modules

def module_from_json(alg: PathBasisAlgebra, doc: dict) -> Representation:
    F = alg.field
    dims = [int(d) for d in doc["dims"]]
    maps = {}
    for a, s, t in alg.quiver.arrows:
        m = doc.get("arrows", {}).get(str(a))
        if m is None:
            continue
        maps[a] = F.array(m) if dims[t] and dims[s] else F.zeros((dims[t], dims[s]))
    return Representation(alg, dims, maps)


def module_to_json(M: Representation) -> dict:
    F = M.field
    return {
        "dims": list(M.dims),
        "arrows": {str(a): [[F.to_str(x) for x in row] for row in m]
                   for a, m in sorted(M.maps.items())},
    }


# presentations

def presentation_from_json(alg: PathBasisAlgebra, doc: dict) -> Presentation:
    F = alg.field
    p1, p0 = doc.get("p1", []), doc.get("p0", [])
    M = F.zeros((len(p0), len(p1), alg.dim))
    rows = doc.get("matrix", [])
    if len(rows) != len(p0) or any(len(r) != len(p1) for r in rows):
        raise ValueError("matrix shape does not match p1/p0")
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            for c, b in entry:
                M[i, j, int(b)] = F.reduce(M[i, j, int(b)] + F(c))
    return Presentation(alg, p1, p0, M)


def presentation_to_json(f: Presentation) -> dict:
    F = f.algebra.field
    return {
        "p1": list(f.p1),
        "p0": list(f.p0),
        "matrix": [[[[F.to_str(f.matrix[i, j, b]), int(b)] for b in np.nonzero(f.matrix[i, j] != 0)[0]]
                    for j in range(len(f.p1))] for i in range(len(f.p0))],
    }


# silting objects, pairs, graphs

def silting_to_json(T: SiltingObject) -> dict:
    return {"g_matrix": [list(r) for r in T.g_matrix],
            "summands": [presentation_to_json(s) for s in T.summands]}


def pair_to_json(p: SupportTauTiltingPair) -> dict:
    return {"module": module_to_json(p.module), "support": list(p.support_proj)}


def graph_to_json(G: ExchangeGraph) -> dict:
    edges = []
    for e in G.edges:
        item = {"source": e.source, "target": e.target, "summand": e.summand}
        if e.data is not None:
            item.update({
                "d": e.data.d,
                "f_plus": presentation_to_json(e.data.f_plus),
                "f_minus": presentation_to_json(e.data.f_minus),
                "f_prime": presentation_to_json(e.data.f_prime),
                "f_double_prime": presentation_to_json(e.data.f_double_prime),
                "checks": dict(sorted(e.data.checks.items())),
            })
        edges.append(item)
    return {
        "algebra": algebra_to_json(G.algebra),
        "complete": G.complete,
        "vertices": [silting_to_json(T) for T in G.vertices],
        "edges": edges,
    }


def _g_label(T: SiltingObject) -> str:
    return "\\n".join(" ".join(str(x) for x in g) for g in T.g_matrix)


def graph_to_dot(G: ExchangeGraph) -> str:
    lines = ["digraph exchange {", "  node [shape=box];"]
    for i, T in enumerate(G.vertices):
        lines.append(f'  v{i} [label="{_g_label(T)}"];')
    for e in G.edges:
        d = "" if e.data is None else f", d={e.data.d}"
        lines.append(f'  v{e.source} -> v{e.target} [label="k={e.summand}{d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
