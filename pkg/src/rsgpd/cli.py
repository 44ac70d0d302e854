"""``rsgpd`` command line.

Exit codes: 0 pass, 1 semantic failure, 2 parse failure (including missing
files), 3 guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import axioms, representation, structure, szendrei
from .core import ElementMapping, RestrictionSemigroupoid, base_of, validate
from .errors import (ContradictionError, GraphingFailed, GuardExceeded, InvalidElement, NotCategorical,
                     NotComposable, PreconditionError, ProductUndefined)
from .fileformat import ParseError, emit, load

SEMANTIC = (PreconditionError, NotCategorical, GraphingFailed, ContradictionError, ProductUndefined,
            NotComposable, InvalidElement)


class Outcome:
    def __init__(self, command):
        self.command = command
        self.ok = True
        self.lines = []
        self.data = {}

    def verdict(self, rule, report):
        self.ok &= report.passed
        self.lines.append(f"{rule}: {'pass' if report.passed else 'fail'}")
        self.lines += [f"  {v}" for v in report.violations]
        self.data[rule] = {"passed": report.passed,
                           "violations": [{"rule": v.rule, "witness": list(v.witness), "message": v.message}
                                          for v in report.violations]}


def _restriction(S, what):
    if not isinstance(S, RestrictionSemigroupoid):
        raise PreconditionError(f"{what} needs a structure with star lines")
    rep = axioms.check_left_restriction(S)
    if not rep.passed:
        raise PreconditionError(f"not a left restriction semigroupoid: {rep.violations[0]}")
    return S


def _mapping(obj):
    if not isinstance(obj, ElementMapping):
        raise ParseError("expected a mapping file (source:, target:, map: lines)")
    return obj


def cmd_check(args, out):
    S = load(args.file)
    out.verdict("validate", validate(S))
    if not out.ok:
        return
    out.verdict("associativity", axioms.check_associativity(S))
    if isinstance(S, RestrictionSemigroupoid):
        out.verdict("lr1..lr4", axioms.check_left_restriction(S))
        out.verdict("distinct-set", axioms.check_distinct_set(S, S.distinct_set))


def cmd_categorical(args, out):
    S = load(args.file)
    c = structure.is_categorical(S)
    B = base_of(S)
    out.ok = c.categorical
    out.data["categorical"] = c.categorical
    if c.categorical:
        out.lines.append("categorical")
    else:
        s, t, u = c.witness
        rs = B.right_sets
        out.lines.append(f"NOT categorical; witness S^{B.names[s]}={B.fmt(rs[s])} S^{B.names[t]}={B.fmt(rs[t])}")
        out.data["witness"] = {"s": B.names[s], "t": B.names[t], "common": B.names[u],
                               "S^s": sorted(B.names[x] for x in rs[s]),
                               "S^t": sorted(B.names[x] for x in rs[t])}


def cmd_graph(args, out):
    S = load(args.file)
    G = structure.graphing(S)
    out.lines.append("objects: " + " ".join(G.objects))
    out.lines += [f"D({x})={G.dom[i]} R({x})={G.ran[i]}" for i, x in enumerate(S.names)]
    out.data.update(objects=list(G.objects), dom=dict(zip(S.names, G.dom)), ran=dict(zip(S.names, G.ran)))


def cmd_szendrei(args, out):
    S = _restriction(load(args.file), "szendrei")
    sz = szendrei.build_sz(S, guard=args.guard)
    text = emit(sz.structure)
    dict_lines = ["# dict:"] + [
        f"#   {x.name(S)} = ({{{','.join(S.names[a] for a in sorted(x.A))}}}, {S.names[x.a]})"
        for x in sz.elements]
    text += "\n".join(dict_lines) + "\n"
    out.data.update(size=len(sz), elements=list(sz.names()))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        out.lines.append(f"wrote {len(sz)} elements to {args.output}")
    else:
        out.lines += text.rstrip("\n").split("\n")


def cmd_embed(args, out):
    S = _restriction(load(args.file), "embed")
    emb = representation.build_embedding(S)
    out.lines += emb.lines()
    out.data["alpha"] = emb.lines()
    out.verdict("verify_embedding", representation.verify_embedding(emb))


def cmd_factorize(args, out):
    phi = _mapping(load(args.file))
    _restriction(phi.source, "factorize source")
    _restriction(phi.target, "factorize target")
    out.verdict("premorphism", szendrei.check_premorphism(phi))
    if not out.ok:
        return
    sz = szendrei.build_sz(phi.source)
    bar = szendrei.factorize(phi, sz)
    out.lines += [f"phibar {a} -> {x}" for a, x in bar.as_names().items()]
    out.data["phibar"] = bar.as_names()
    back = szendrei.premorphism_from_morphism(sz, bar)
    again = szendrei.factorize(back, sz)
    for rule, good in (("phibar.iota = phi", back == phi), ("factorize(phibar.iota) = phibar", again == bar)):
        out.ok &= good
        out.lines.append(f"{rule}: {'pass' if good else 'fail'}")
        out.data[rule] = good


def cmd_naturality(args, out):
    f = _mapping(load(args.file))
    _restriction(f.source, "naturality source")
    _restriction(f.target, "naturality target")
    out.verdict("restriction-morphism", axioms.check_morphism(f))
    if not out.ok:
        return
    sz_s, sz_t = szendrei.build_sz(f.source), szendrei.build_sz(f.target)
    F = szendrei.sz_functor(f, sz_s, sz_t)
    out.lines += [f"Sz(f) {a} -> {x}" for a, x in F.as_names().items()]
    out.data["Sz(f)"] = F.as_names()
    out.verdict("square", szendrei.verify_naturality(f, sz_s, sz_t))


COMMANDS = {
    "check": cmd_check, "categorical": cmd_categorical, "graph": cmd_graph,
    "szendrei": cmd_szendrei, "embed": cmd_embed, "factorize": cmd_factorize,
    "naturality": cmd_naturality,
}


def build_parser():
    p = argparse.ArgumentParser(prog="rsgpd", description="Check and transform finite restriction semigroupoids.")
    p.add_argument("--json", action="store_true", help="emit results as JSON")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("check", "categorical", "graph", "embed"):
        sub.add_parser(name).add_argument("file")
    sz = sub.add_parser("szendrei")
    sz.add_argument("file")
    sz.add_argument("-o", "--output")
    sz.add_argument("--guard", type=int, default=16)
    sub.add_parser("factorize").add_argument("file", help="mapping file for a premorphism")
    sub.add_parser("naturality").add_argument("file", help="mapping file for a restriction morphism")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Outcome(args.command)
    code, error = 0, None
    try:
        COMMANDS[args.command](args, out)
        code = 0 if out.ok else 1
    except (ParseError, OSError, UnicodeDecodeError) as exc:
        code, error = 2, exc
    except GuardExceeded as exc:
        code, error = 3, exc
    except SEMANTIC as exc:
        code, error = 1, exc
    if args.json:
        payload = {"command": args.command, "exit": code, "ok": code == 0, "results": out.data}
        if error is not None:
            payload["error"] = str(error)
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        for line in out.lines:
            print(line)
        if error is not None:
            print(f"error: {error}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
