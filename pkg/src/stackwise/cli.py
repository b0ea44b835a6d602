"""Command-line front end and the plain-text poset format.

A poset document has four ``key: value`` sections::

    colors: a b c d
    edges: a-b b-c c-d
    elements: v:a w:c x:b y:d z:c
    covers: v<x w<x w<y x<z y<z

Blank lines and ``#`` comments are ignored. ``edges`` and ``covers`` may be
empty. Exit status: 0 success, 1 mathematical failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional

from . import catalog
from .basis import certify_standard, expand_word, stackwise_vector
from .diagram import DynkinDiagram
from .errors import ECViolation, InputError, LinearDependence, MathematicalFailure, PosetFormatError
from .identities import binomial_grid, identity_grid
from .lattice import build_lattice
from .mvector import MVector, format_coefficient
from .poset import AXIOMS, ColoredPoset
from .rep import count_multichains, failures, mu_table, seshadri_basis, verify_borel, verify_kacmoody
from .words import Word, stackwise_word

SECTIONS = ("colors", "edges", "elements", "covers")
_TOKEN = re.compile(r"\S+")


# -- poset documents --------------------------------------------------------------

def _split_pair(token, sep, line, col, what):
    parts = token.split(sep)
    if len(parts) != 2 or not all(parts):
        raise PosetFormatError(f"expected {what} of the form x{sep}y, got {token!r}", line, col)
    return parts[0], parts[1]


def parse_poset(document: str) -> tuple[DynkinDiagram, ColoredPoset]:
    sections: dict[str, list[tuple[str, int, int]]] = {}
    for lineno, raw in enumerate(document.splitlines(), 1):
        text = raw.split("#", 1)[0]
        if not text.strip():
            continue
        key, colon, rest = text.partition(":")
        if not colon:
            col = len(text) - len(text.lstrip()) + 1
            raise PosetFormatError("expected 'section: values'", lineno, col)
        name = key.strip()
        if name not in SECTIONS:
            raise PosetFormatError(f"unknown section {name!r}", lineno, text.index(name) + 1)
        if name in sections:
            raise PosetFormatError(f"duplicate section {name!r}", lineno, text.index(name) + 1)
        offset = len(key) + 1
        sections[name] = [(m.group(), lineno, offset + m.start() + 1) for m in _TOKEN.finditer(rest)]
    if "colors" not in sections:
        raise PosetFormatError("missing section 'colors'")

    colors = []
    for tok, line, col in sections["colors"]:
        if tok in colors:
            raise PosetFormatError(f"duplicate color {tok!r}", line, col)
        colors.append(tok)
    edges = set()
    for tok, line, col in sections.get("edges", []):
        a, b = _split_pair(tok, "-", line, col, "edge")
        for c in (a, b):
            if c not in colors:
                raise PosetFormatError(f"unknown color {c!r}", line, col)
        pair = frozenset((a, b))
        if pair in edges:
            raise PosetFormatError(f"duplicate edge {tok!r}", line, col)
        if a == b:
            raise PosetFormatError(f"self-loop {tok!r}", line, col)
        edges.add(pair)
    if not colors:
        raise PosetFormatError("diagram must have at least one color")
    diagram = DynkinDiagram(tuple(colors), frozenset(edges))
    if "elements" not in sections:
        raise PosetFormatError("missing section 'elements'")

    elements, coloring = [], {}
    for tok, line, col in sections["elements"]:
        x, c = _split_pair(tok, ":", line, col, "element")
        if x in coloring:
            raise PosetFormatError(f"duplicate element {x!r}", line, col)
        if c not in colors:
            raise PosetFormatError(f"unknown color {c!r} for element {x!r}", line, col)
        elements.append(x)
        coloring[x] = c
    covers = []
    for tok, line, col in sections.get("covers", []):
        x, y = _split_pair(tok, "<", line, col, "cover")
        for z in (x, y):
            if z not in coloring:
                raise PosetFormatError(f"unknown element {z!r}", line, col)
        if (x, y) in covers:
            raise PosetFormatError(f"duplicate cover {tok!r}", line, col)
        covers.append((x, y))
    return diagram, ColoredPoset(elements, covers, coloring, diagram)


def render_poset(poset: ColoredPoset) -> str:
    d = poset.diagram
    idx = d.index
    edges = sorted((tuple(sorted(e, key=idx.get)) for e in d.edges), key=lambda e: (idx[e[0]], idx[e[1]]))
    pos = poset.position
    covers = sorted(poset.covers, key=lambda c: (pos[c[0]], pos[c[1]]))
    lines = [
        "colors: " + " ".join(d.colors),
        "edges: " + " ".join(f"{a}-{b}" for a, b in edges),
        "elements: " + " ".join(f"{x}:{poset.color(x)}" for x in poset.elements),
        "covers: " + " ".join(f"{x}<{y}" for x, y in covers),
    ]
    return "\n".join(line.rstrip() for line in lines) + "\n"


# -- commands --------------------------------------------------------------------

def _names(poset, ideals):
    return [poset.ideal_name(i) for i in ideals]


def _vector_json(v: MVector):
    return [{"ideals": _names(v.poset, k), "coefficient": format_coefficient(c)} for k, c in v.items()]


def _parse_flag(poset, text, m):
    parts = text.split(";")
    if len(parts) != m:
        raise InputError(f"flag has {len(parts)} ideals but m = {m}")
    return tuple(poset.parse_ideal(p) for p in parts)


class Result:
    def __init__(self, status=0, lines=None, data=None):
        self.status = status
        self.lines = lines or []
        self.data = data if data is not None else {}


def cmd_check(poset, args):
    reports = [poset.check_axiom(a) for a in AXIOMS]
    return Result(0, [str(r) for r in reports],
                  {"axioms": [{"axiom": r.axiom, "holds": r.holds, "witness": r.witness} for r in reports]})


def cmd_classify(poset, args):
    label = poset.classify().label
    return Result(0, [label], {"classification": label})


def cmd_lattice(poset, args):
    lat = build_lattice(poset, args.ext)
    return Result(0, lat.render(), {
        "splits": _names(poset, lat.splits),
        "edges": [[poset.ideal_name(a), poset.ideal_name(b), c] for a, b, c in lat.edges]})


def cmd_extensions(poset, args):
    exts = list(poset.linear_extensions())
    return Result(0, [" ".join(e) for e in exts], {"extensions": [list(e) for e in exts]})


def cmd_stackwise(poset, args):
    flag = _parse_flag(poset, args.flag, args.m)
    ext = poset.check_extension(args.ext)
    word = stackwise_word(poset, flag, ext)
    v = stackwise_vector(poset, flag, ext)
    lead, coef = v.leading()
    lines = [f"word: <{word}>", f"vector: {v.render()}",
             f"leading: {format_coefficient(coef)}{{{'; '.join(_names(poset, lead))}}}"]
    return Result(0, lines, {"word": str(word), "vector": _vector_json(v),
                             "leading": {"ideals": _names(poset, lead), "coefficient": format_coefficient(coef)}})


def cmd_expand(poset, args):
    ext = poset.check_extension(args.ext)
    exp = expand_word(poset, Word.parse(args.word), args.m, ext)
    lines = [exp.vector.render()] + exp.render()
    return Result(0, lines, {
        "vector": _vector_json(exp.vector),
        "expansion": [{"flag": _names(poset, f), "coefficient": format_coefficient(c)}
                      for f, c in exp.coefficients.items()]})


def cmd_certify(poset, args):
    exts = [args.ext] if args.ext else None
    report = certify_standard(poset, args.m_max, args.all_extensions, args.random, args.max_len,
                              args.seed, extensions=exts)
    data = {"seed": report.seed, "certified": report.certified, "runs": [
        {"m": r.m, "extension": list(r.extension), "basis": r.basis_size, "words": r.words_checked,
         "failures": [[str(w), msg] for w, msg in r.failures]} for r in report.runs]}
    return Result(0 if report.certified else 1, report.render(), data)


def cmd_verify_identities(poset, args):
    checks = identity_grid(poset, args.pmax, args.qmax, args.rmax, range(1, args.m + 1),
                           sample=args.sample, seed=args.seed)
    checks += binomial_grid(max(args.pmax, 1), max(args.qmax, 1), max(args.rmax, 1))
    bad = [c for c in checks if not c.holds]
    lines = [c.render() for c in checks]
    lines.append(f"{len(checks) - len(bad)}/{len(checks)} checks hold")
    data = {"checks": [{"identity": c.identity, "params": c.params, "status": c.status,
                        "exhaustive": c.exhaustive} for c in checks]}
    return Result(1 if bad else 0, lines, data)


def cmd_mu(poset, args):
    mu = mu_table(poset)
    lines = mu.render() + ["highest weight: " + ", ".join(map(str, mu[frozenset(poset.elements)]))]
    return Result(0, lines, {"colors": list(mu.colors),
                             "mu": {poset.ideal_name(i): list(r) for i, r in mu.values.items()}})


def cmd_verify_rep(poset, args):
    algebra = args.algebra
    if algebra == "auto":
        algebra = "kac-moody" if poset.classify().is_minuscule else "borel"
    reports = (verify_kacmoody if algebra == "kac-moody" else verify_borel)(poset)
    bad = failures(reports)
    lines = [r.render() for r in bad] + [f"{algebra}: {len(reports) - len(bad)}/{len(reports)} relations hold"]
    data = {"algebra": algebra, "reports": [
        {"relation": r.relation, "params": list(r.params), "holds": r.holds,
         "witness": list(r.witness) if r.witness else None} for r in reports]}
    return Result(1 if bad else 0, lines, data)


def cmd_count(poset, args):
    n = count_multichains(poset, args.m)
    return Result(0, [str(n)], {"m": args.m, "count": n})


def cmd_seshadri(poset, args):
    basis = seshadri_basis(poset, args.m, args.ext)
    lines = [f"{len(basis)} downward basis vectors"]
    items = []
    for flag, v in basis.vectors:
        name = ";".join(poset.ideal_name(frozenset(poset.elements) - f) for f in flag)
        lines.append(f"[{name}] {v.render()}")
        items.append({"ideals": name.split(";"), "vector": _vector_json(v)})
    return Result(0, lines, {"count": len(basis), "basis": items})


COMMANDS = {
    "check": cmd_check, "classify": cmd_classify, "lattice": cmd_lattice,
    "extensions": cmd_extensions, "stackwise": cmd_stackwise, "expand": cmd_expand,
    "certify": cmd_certify, "verify-identities": cmd_verify_identities, "mu": cmd_mu,
    "verify-rep": cmd_verify_rep, "count": cmd_count, "seshadri": cmd_seshadri,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("poset", nargs="?", help="poset document (default: standard input, '-' too)")
    common.add_argument("--catalog", help="built-in poset: dcomplete5, chain:N, rectangle:KxL")
    common.add_argument("--extension", help="linear extension, names separated by spaces or commas")
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="stackwise", description="Colored poset combinatorics")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("check", "classify", "lattice", "extensions", "mu"):
        sub.add_parser(name, parents=[common])
    p = sub.add_parser("stackwise", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--flag", required=True, help='ideals separated by ";", empty ideal as 0')
    p = sub.add_parser("expand", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--word", required=True, help='e.g. "d^1,b^1,c^4,a^3"')
    p = sub.add_parser("certify", parents=[common])
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--all-extensions", action="store_true")
    p.add_argument("--random", type=int, default=500, help="random words per run")
    p.add_argument("--max-len", type=int, default=8)
    p = sub.add_parser("verify-identities", parents=[common])
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--qmax", type=int, default=3)
    p.add_argument("--rmax", type=int, default=3)
    p.add_argument("--m", type=int, default=3, help="check every m from 1 to this value")
    p.add_argument("--sample", type=int, help="check this many random inputs (non-exhaustive)")
    p = sub.add_parser("verify-rep", parents=[common])
    p.add_argument("--algebra", choices=("auto", "borel", "kac-moody"), default="auto")
    for name in ("count", "seshadri"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--m", type=int, required=True)
    return parser


def load_poset(args, stdin=None) -> ColoredPoset:
    if args.catalog:
        if args.poset:
            raise InputError("give either a poset file or --catalog, not both")
        return catalog.from_name(args.catalog)
    if args.poset and args.poset != "-":
        try:
            with open(args.poset, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as err:
            raise InputError(f"cannot read {args.poset}: {err.strerror}") from None
    else:
        text = (stdin or sys.stdin).read()
    return parse_poset(text)[1]


def _json_default(obj):
    if isinstance(obj, Fraction):
        return format_coefficient(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    return str(obj)


def run(argv=None, stdout=None, stdin=None) -> int:
    out = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        poset = load_poset(args, stdin)
        args.ext = None
        if args.extension:
            args.ext = poset.check_extension(args.extension.replace(",", " ").split())
        result = COMMANDS[args.command](poset, args)
    except InputError as err:
        _emit(out, args, Result(2, [f"input error: {err}"], {"error": "input", "message": str(err)}))
        return 2
    except (MathematicalFailure, ECViolation) as err:
        lines = [f"{type(err).__name__}: {err}"]
        data = {"error": type(err).__name__, "message": str(err)}
        if isinstance(err, LinearDependence) and err.witness is not None:
            lines += err.witness.render().splitlines()
            data["witness"] = err.witness.render()
        _emit(out, args, Result(1, lines, data))
        return 1
    _emit(out, args, result)
    return result.status


def _emit(out, args, result: Result):
    if getattr(args, "json", False):
        payload = {"command": args.command, "status": result.status, **result.data}
        out.write(json.dumps(payload, default=_json_default, ensure_ascii=False, indent=2) + "\n")
    else:
        for line in result.lines:
            out.write(line + "\n")


def main(argv: Optional[list[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
