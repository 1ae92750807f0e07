"""Command line interface.

Every command reads one JSON document: either a bare algebra file or a
bundle ``{"algebra": ..., "modules": {...}, "presentations": {...}}``.
Objects are referred to by handle: a bundle name, or a built-in

* ``P3[0]`` / ``P3[1]``: the projective at vertex 3 in degree 0 / shifted,
* ``A[0]`` / ``A[1]``: the sum of all of these,
* ``S2``, ``P2``, ``I2``, ``A``: simple, projective, injective, regular module,

joined with ``+`` for direct sums (order is kept).

Exit codes: 0 success, 1 mathematical failure, 2 input error, 3 cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import io
from .algebra import PathBasisAlgebra
from .errors import (CapExceeded, NonAdmissibleRelation, NotAlmostComplete, NotRigid,
                     PathExplosion, PoolExhausted, TauTiltError)
from .field import Field
from .presentations import Presentation, decompose, direct_sum, e_dim, g_vector, is_rigid
from .rep import (Representation, direct_sum as rep_sum, injective_as_rep, min_presentation,
                  projective_as_rep, regular, simple, tau)
from .silting import (SiltingEngine, exchange_graph, make_silting, complete_to_silting,
                      complete_to_tau_tilting, other_complement, exchange_data)

EXIT_OK, EXIT_MATH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


class Context:
    def __init__(self, doc: dict, field: Field | None, args):
        if "algebra" in doc:
            self.alg_doc = doc["algebra"]
            self.modules = doc.get("modules", {})
            self.presentations = doc.get("presentations", {})
        else:
            self.alg_doc, self.modules, self.presentations = doc, {}, {}
        self.alg: PathBasisAlgebra = io.algebra_from_json(self.alg_doc, field)
        self.args = args

    def _vertex(self, s: str) -> int:
        v = int(s)
        if not 0 <= v < self.alg.n:
            raise InputError(f"vertex {v} out of range")
        return v

    def presentation_parts(self, handle: str) -> list[Presentation]:
        parts = []
        for h in handle.split("+"):
            h = h.strip()
            if h in self.presentations:
                parts.append(io.presentation_from_json(self.alg, self.presentations[h]))
            elif m := re.fullmatch(r"P(\d+)\[([01])\]", h):
                v = self._vertex(m.group(1))
                parts.append(Presentation.projective(self.alg, v) if m.group(2) == "0"
                             else Presentation.shifted(self.alg, v))
            elif m := re.fullmatch(r"A\[([01])\]", h):
                ctor = Presentation.projective if m.group(1) == "0" else Presentation.shifted
                parts.extend(ctor(self.alg, v) for v in range(self.alg.n))
            elif h in self.modules or re.fullmatch(r"[SPI]\d+|A", h):
                parts.append(min_presentation(self.module(h)))
            else:
                raise InputError(f"unknown presentation handle {h!r}")
        return parts

    def presentation(self, handle: str) -> Presentation:
        return direct_sum(*self.presentation_parts(handle))

    def module(self, handle: str) -> Representation:
        parts = []
        for h in handle.split("+"):
            h = h.strip()
            if h in self.modules:
                parts.append(io.module_from_json(self.alg, self.modules[h]))
            elif h == "A":
                parts.append(regular(self.alg))
            elif m := re.fullmatch(r"([SPI])(\d+)", h):
                ctor = {"S": simple, "P": projective_as_rep, "I": injective_as_rep}[m.group(1)]
                parts.append(ctor(self.alg, self._vertex(m.group(2))))
            else:
                raise InputError(f"unknown module handle {h!r}")
        return rep_sum(*parts)

    def is_module_handle(self, handle: str) -> bool:
        return all(h.strip() in self.modules or re.fullmatch(r"[SPI]\d+|A", h.strip())
                   for h in handle.split("+"))


def _bundle(ctx: Context, presentations=None, modules=None, extra=None) -> dict:
    doc = {"algebra": io.algebra_to_json(ctx.alg)}
    if modules:
        doc["modules"] = modules
    if presentations:
        doc["presentations"] = presentations
    doc.update(extra or {})
    return doc


def cmd_algebra_info(ctx: Context):
    A = ctx.alg
    if ctx.args.format == "json":
        return EXIT_OK, io.dumps({
            "dim": A.dim, "semisimple": A.is_semisimple, "field": A.field.descriptor(),
            "basis": [A.label(i) for i in range(A.dim)],
            "hom_proj": [[len(A.hom_proj(v, w)) for w in range(A.n)] for v in range(A.n)],
            "generous_bound": A.generous_bound})
    lines = [f"dim {A.dim}" + (", semisimple" if A.is_semisimple else "")]
    lines.append(f"field {'Q' if A.field.p is None else 'GF(%d)' % A.field.p}")
    lines.append("basis " + " ".join(A.label(i) for i in range(A.dim)))
    lines.append("dim Hom(P_v, P_w)  (row v, column w)")
    for v in range(A.n):
        lines.append("  " + " ".join(str(len(A.hom_proj(v, w))) for w in range(A.n)))
    if A.generous_bound and A.spec.nilpotency_bound > 1:
        lines.append(f"note: all paths of length {A.spec.nilpotency_bound - 1} vanish; "
                     "a smaller nilpotency bound would do")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_e_dim(ctx: Context, f1: str, f2: str):
    d = e_dim(ctx.presentation(f1), ctx.presentation(f2))
    if ctx.args.format == "json":
        return EXIT_OK, io.dumps({"e_dim": d})
    return EXIT_OK, f"{d}\n"


def cmd_rigid(ctx: Context, f: str):
    r = is_rigid(ctx.presentation(f))
    if ctx.args.format == "json":
        return EXIT_OK, io.dumps({"rigid": r})
    return EXIT_OK, f"{str(r).lower()}\n"


def cmd_min_pres(ctx: Context, m: str):
    f = min_presentation(ctx.module(m))
    if ctx.args.format == "json":
        return EXIT_OK, io.dumps(_bundle(ctx, presentations={"f": io.presentation_to_json(f)}))
    return EXIT_OK, f.describe() + "\n"


def cmd_tau(ctx: Context, m: str):
    t = tau(ctx.module(m))
    if ctx.args.format == "json":
        return EXIT_OK, io.dumps(_bundle(ctx, modules={"tau": io.module_to_json(t)}))
    doc = io.module_to_json(t)
    lines = [f"dims {list(t.dims)}"]
    for a in sorted(t.maps):
        m = t.maps[a]
        lines.append(f"arrow {a}: " + (str(doc["arrows"][str(a)]) if m.size else "%dx%d" % m.shape))
    return EXIT_OK, "\n".join(lines) + "\n"


def _engine(ctx: Context) -> SiltingEngine:
    return SiltingEngine(ctx.alg, cap_vertices=ctx.args.cap_vertices,
                         cap_pool=ctx.args.cap_pool, with_data=False)


def _silting_output(ctx: Context, summands, extra=None):
    pres = {f"s{k}": io.presentation_to_json(s) for k, s in enumerate(summands)}
    extra = dict(extra or {})
    extra["object"] = "+".join(pres)
    extra["g_matrix"] = [list(g_vector(s)) for s in summands]
    return _bundle(ctx, presentations=pres, extra=extra)


def cmd_complete(ctx: Context, handle: str):
    if ctx.is_module_handle(handle):
        M = complete_to_tau_tilting(ctx.module(handle), _engine(ctx))
        if ctx.args.format == "json":
            return EXIT_OK, io.dumps(_bundle(ctx, modules={"T": io.module_to_json(M)}))
        return EXIT_OK, f"tau-tilting module dims {list(M.dims)}\n"
    T = complete_to_silting(ctx.presentation(handle), _engine(ctx))
    if ctx.args.format == "json":
        return EXIT_OK, io.dumps(_silting_output(ctx, T.summands))
    return EXIT_OK, "".join(f"{g_vector(s)}  {s.describe()}\n" for s in T.summands)


def cmd_mutate(ctx: Context, handle: str, k: int):
    parts = []
    for p in ctx.presentation_parts(handle):
        parts.extend(decompose(p, seed=ctx.args.seed))
    T = direct_sum(*parts)
    if len(parts) != ctx.alg.n or not is_rigid(T):
        raise NotRigid("input is not a silting object")
    if not 0 <= k < len(parts):
        raise InputError(f"summand index {k} out of range")
    U = parts[:k] + parts[k + 1:]
    other, g_is_plus = other_complement(U, parts[k])
    fp, fm = (parts[k], other) if g_is_plus else (other, parts[k])
    data = exchange_data(fp, fm, U)
    new = parts[:k] + [other] + parts[k + 1:]
    info = {"mutated": k, "d": data.d, "replaced_is_f_plus": g_is_plus,
            "checks": dict(sorted(data.checks.items()))}
    if ctx.args.format == "json":
        return EXIT_OK, io.dumps(_silting_output(ctx, new, {"exchange": info}))
    lines = [f"{g_vector(s)}  {s.describe()}" for s in new]
    lines.append(f"exchanged summand {k}: d = {data.d}, "
                 f"{'f+ -> f-' if g_is_plus else 'f- -> f+'}, checks "
                 f"{'ok' if data.verified else 'FAILED'}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_graph(ctx: Context):
    G = exchange_graph(ctx.alg, cap=ctx.args.cap_vertices)
    code = EXIT_OK if G.complete else EXIT_CAP
    if ctx.args.format == "dot":
        return code, io.graph_to_dot(G)
    if ctx.args.format == "json":
        return code, io.dumps(io.graph_to_json(G))
    lines = [f"{len(G.vertices)} silting objects, {len(G.edges)} edges"
             + ("" if G.complete else " (incomplete: cap reached)")]
    for i, T in enumerate(G.vertices):
        lines.append(f"v{i}: {[list(g) for g in T.g_matrix]}")
    for e in G.edges:
        lines.append(f"v{e.source} -> v{e.target}  k={e.summand} d={e.data.d}")
    return code, "\n".join(lines) + "\n"


def _add_options(p: argparse.ArgumentParser, defaults: bool) -> None:
    # options are accepted before and after the subcommand; only the main
    # parser carries defaults so a later occurrence is not overwritten
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--field", default=d(None), help="prime p or Q (overrides the file)")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--cap-vertices", type=int, default=d(2000))
    p.add_argument("--cap-pool", type=int, default=d(2000))
    p.add_argument("--format", choices=["text", "json", "dot"], default=d("text"))
    p.add_argument("--out", default=d(None), help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tautilt", description=__doc__.split("\n")[0])
    _add_options(p, True)
    sub = p.add_subparsers(dest="command", required=True)
    for name, extra in [("algebra-info", []), ("e-dim", ["f1", "f2"]), ("rigid", ["f"]),
                        ("min-pres", ["module"]), ("tau", ["module"]), ("complete", ["handle"]),
                        ("mutate", ["object", "k"]), ("graph", [])]:
        sp = sub.add_parser(name)
        _add_options(sp, False)
        sp.add_argument("input")
        for a in extra:
            sp.add_argument(a, type=int if a == "k" else str)
    return p


def run(argv=None) -> tuple[int, str, str]:
    """Run a command; returns ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK, "", ""
    if args.cap_vertices < 1 or args.cap_pool < 1:
        return EXIT_INPUT, "", "caps must be positive\n"
    try:
        field = None
        if args.field:
            field = Field.rationals() if args.field.upper() == "Q" else Field(int(args.field))
        with open(args.input) as fh:
            doc = json.load(fh)
        ctx = Context(doc, field, args)
        cmd = args.command
        if cmd == "algebra-info":
            code, out = cmd_algebra_info(ctx)
        elif cmd == "e-dim":
            code, out = cmd_e_dim(ctx, args.f1, args.f2)
        elif cmd == "rigid":
            code, out = cmd_rigid(ctx, args.f)
        elif cmd == "min-pres":
            code, out = cmd_min_pres(ctx, args.module)
        elif cmd == "tau":
            code, out = cmd_tau(ctx, args.module)
        elif cmd == "complete":
            code, out = cmd_complete(ctx, args.handle)
        elif cmd == "mutate":
            code, out = cmd_mutate(ctx, args.object, args.k)
        else:
            code, out = cmd_graph(ctx)
    except (CapExceeded, PoolExhausted) as exc:
        capped = isinstance(exc, CapExceeded) or "cap" in str(exc)
        return (EXIT_CAP if capped else EXIT_MATH), "", f"{type(exc).__name__}: {exc}\n"
    except (NotRigid, NotAlmostComplete) as exc:
        return EXIT_MATH, "", f"{type(exc).__name__}: {exc}\n"
    except (NonAdmissibleRelation, PathExplosion, InputError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        return EXIT_INPUT, "", f"{type(exc).__name__}: {exc}\n"
    except TauTiltError as exc:
        return EXIT_MATH, "", f"{type(exc).__name__}: {exc}\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
        out = ""
    return code, out, ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
