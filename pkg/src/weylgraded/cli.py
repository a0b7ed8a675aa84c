"""Command-line front end.

Picard elements are written in a small expression language, composed
left-to-right with the leftmost functor applied last:

    element := term ('*' term)*
    term    := 'S' ('^' int)? | 'i' '{' int (',' int)* '}' | 'w' | 'e'

Exit codes: 0 success, 1 domain error (for example a non-generative input to
``classify``), 2 usage or expression-syntax error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .zfin import (
    FinSet,
    necklace_count,
    necklace_enumerate,
)
from .picard import PicElement, compose, inverse, power
from .classify import canonical_admissible, same_morita_class
from . import gwa
from .lattices import (
    cokernel_support,
    hom_generator,
    iota_lattice,
    to_dset,
)
from .ktheory import (
    ProjectiveSum,
    iso_test,
    normalize_sum,
    stably_free_witness,
    theta_map,
)
from .verification import SUITES, run_suites


class ExpressionError(ValueError):
    """Syntax error in a CLI expression, with a position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


# --- Picard expression parser -------------------------------------------------


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def expect(self, c: str) -> None:
        got = self.peek()
        if got != c:
            raise ExpressionError(f"expected {c!r}, found {got!r}" if got else f"expected {c!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ExpressionError("expected an integer", start)
        return int(self.text[start : self.pos])


def _parse_term(sc: _Scanner) -> PicElement:
    c = sc.peek()
    if c == "S":
        sc.take()
        b = 1
        if sc.peek() == "^":
            sc.take()
            b = sc.integer()
        return PicElement(1, b, FinSet())
    if c == "i":
        sc.take()
        sc.expect("{")
        values = [sc.integer()]
        while sc.peek() == ",":
            sc.take()
            values.append(sc.integer())
        sc.expect("}")
        return PicElement(1, 0, FinSet(values))
    if c == "w":
        sc.take()
        return PicElement(-1, 0, FinSet())
    if c == "e":
        sc.take()
        return PicElement(1, 0, FinSet())
    raise ExpressionError(
        f"expected a term (S, i{{...}}, w, or e), found {c!r}" if c else "unexpected end of input",
        sc.pos,
    )


def parse_expression(text: str) -> PicElement:
    """Parse and normalize a Picard expression."""
    sc = _Scanner(text)
    if not sc.peek():
        raise ExpressionError("empty expression", 0)
    out = _parse_term(sc)
    while sc.peek() == "*":
        sc.take()
        out = compose(out, _parse_term(sc))
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ExpressionError(f"trailing input {sc.text[sc.pos:]!r}", sc.pos)
    return out


# --- small argument parsers ---------------------------------------------------


def _parse_int_set(text: str) -> FinSet:
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    if not text:
        return FinSet()
    try:
        return FinSet(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ExpressionError(f"bad integer set {text!r}: {exc}", 0) from None


def _parse_summand(text: str) -> tuple[FinSet, int]:
    if "@" in text:
        body, _, shift = text.partition("@")
        try:
            return (_parse_int_set(body), int(shift))
        except ValueError:
            raise ExpressionError(f"bad shift in summand {text!r}", 0) from None
    return (_parse_int_set(text), 0)


def _parse_sum(text: str) -> ProjectiveSum:
    text = text.strip()
    if not text or text == "0":
        return ProjectiveSum(())
    return ProjectiveSum(tuple(_parse_summand(t) for t in text.split("+")))


def _parse_combo(text: str) -> list[tuple[FinSet, int]]:
    """Integer combination of classes, e.g. '2{0,3} - {1} + {}'."""
    out: list[tuple[FinSet, int]] = []
    i, n = 0, len(text)
    sign = 1
    while i < n:
        while i < n and (text[i].isspace() or text[i] in "+-"):
            if text[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            break
        j = i
        while j < n and (text[j].isdigit()):
            j += 1
        coeff = int(text[i:j]) if j > i else 1
        if j >= n or text[j] != "{":
            raise ExpressionError("expected '{' after coefficient", j)
        k = text.find("}", j)
        if k < 0:
            raise ExpressionError("unterminated set", j)
        out.append((_parse_int_set(text[j : k + 1]), sign * coeff))
        i = k + 1
        sign = 1
    return out


# --- output helpers -------------------------------------------------------------


def _emit(args, human: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _pieces_payload(pieces) -> dict:
    return pieces.to_json()


def _pieces_human(pieces) -> str:
    lines = []
    for j, (h, p) in sorted(pieces.pieces.items()):
        if p == 0:
            body = "k[z]" if h.is_one() else f"({h}) k[z]"
        else:
            ypow = "y" if p == 1 else f"y^{p}"
            body = f"{ypow} k[z]" if h.is_one() else f"({h}) {ypow} k[z]"
        lines.append(f"S_{j} = {body}")
    return "\n".join(lines)


def _support_payload(support) -> list[dict]:
    return [
        {"point": str(pt) if pt.denominator != 1 else int(pt), "count": c}
        for pt, c in support
    ]


# --- command handlers ------------------------------------------------------------


def _cmd_pic(args) -> int:
    F = parse_expression(args.expr)
    if args.cmd == "eval":
        _emit(args, str(F), F.to_json())
    elif args.cmd == "pow":
        G = power(F, args.k)
        _emit(args, str(G), G.to_json())
    elif args.cmd == "inv":
        G = inverse(F)
        _emit(args, str(G), G.to_json())
    elif args.cmd == "conj":
        g = parse_expression(args.by)
        G = compose(g, compose(F, inverse(g)))
        _emit(args, str(G), G.to_json())
    elif args.cmd == "canonical":
        return _do_canonical(args, F)
    return 0


def _do_canonical(args, F: PicElement) -> int:
    pair, g = canonical_admissible(F)
    _emit(
        args,
        f"pair: {pair}\nconjugator: {g}",
        {"pair": pair.to_json(), "conjugator": g.to_json()},
    )
    return 0


def _cmd_classify(args) -> int:
    if args.cmd == "canonical":
        return _do_canonical(args, parse_expression(args.expr))
    F = parse_expression(args.expr)
    G = parse_expression(args.other)
    same = same_morita_class(F, G)
    _emit(args, "same graded Morita class" if same else "different graded Morita classes",
          {"same_class": same})
    return 0


def _cmd_necklace(args) -> int:
    if args.cmd == "count":
        c = necklace_count(args.n)
        _emit(args, str(c), {"n": args.n, "count": c})
    else:
        classes = necklace_enumerate(args.n)
        human = "\n".join(str(c.representative) for c in classes)
        _emit(args, human, {"n": args.n, "classes": [c.to_json() for c in classes]})
    return 0


def _cmd_ring(args) -> int:
    J = _parse_int_set(args.J)
    if args.cmd == "present":
        p = gwa.present(J, args.n)
        human = (
            f"W relation data for S({J}, {args.n}):\n"
            f"  f = {p.f}\n  idealizer factor = {p.idealizer_factor}\n"
            + "\n".join(f"  {r}" for r in p.relations)
        )
        _emit(args, human, p.to_json())
    elif args.cmd in ("pieces", "oracle"):
        pieces = gwa.ring_pieces(J, args.n, args.min, args.max, oracle=args.cmd == "oracle")
        _emit(args, _pieces_human(pieces), _pieces_payload(pieces))
    else:  # verify
        closure = gwa.verify_ring_closure(J, args.n, args.window)
        embed = gwa.verify_gwa_embedding(J, args.n)
        ok = closure and embed
        _emit(
            args,
            f"closure: {'ok' if closure else 'FAILED'}\nembedding: {'ok' if embed else 'FAILED'}",
            {"closure": closure, "embedding": embed},
        )
        return 0 if ok else 1
    return 0


def _cmd_mod(args) -> int:
    if args.cmd == "dset":
        E = to_dset(_parse_int_set(args.J), args.shift)
        _emit(args, str(E), E.to_json())
    elif args.cmd == "lattice":
        L = iota_lattice(_parse_int_set(args.J), args.shift)
        human = "\n".join(f"deg {m}: ({g}) x^{m} k[z]" for m, g in L.generators.items())
        _emit(args, human, L.to_json())
    else:
        P = iota_lattice(_parse_int_set(args.J), args.shift)
        Q = iota_lattice(_parse_int_set(args.J2), args.shift2)
        if args.cmd == "hom":
            h = hom_generator(P, Q)
            _emit(args, str(h), {"generator": h.to_json()})
        else:  # coker
            support = cokernel_support(P, Q)
            human = ", ".join(f"point {pt} x{c}" for pt, c in support) or "(empty)"
            _emit(args, human, {"support": _support_payload(support)})
    return 0


def _cmd_k0(args) -> int:
    if args.cmd == "normalize":
        S = normalize_sum(_parse_sum(args.sum))
        _emit(args, str(S), S.to_json())
    elif args.cmd == "iso":
        same = iso_test(_parse_sum(args.left), _parse_sum(args.right))
        _emit(args, "isomorphic" if same else "not isomorphic", {"isomorphic": same})
    elif args.cmd == "witness":
        adds, result = stably_free_witness(_parse_int_set(args.J))
        human = (
            "adds:   " + ", ".join(f"A<{l}>" for l in adds) + "\n"
            "result: " + ", ".join(f"A<{m}>" for m in result)
        )
        _emit(args, human, {"adds": adds, "result": result})
    else:  # theta
        F = theta_map(_parse_combo(args.combo))
        _emit(args, str(F), F.to_json())
    return 0


def _cmd_verify(args) -> int:
    if args.window is not None:
        # same cap the environment variable applies; the flag wins for this run
        os.environ["WEYLGRADED_MAX_WINDOW"] = str(args.window)
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    passed, failed, results = run_suites(names, seed=args.seed)
    for name, ok, detail in results:
        tag = "PASS" if ok else "FAIL"
        suffix = f"  [{detail}]" if detail else ""
        print(f"{tag}  {name}{suffix}")
    print(f"{passed} passed, {failed} failed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylgraded",
        description="Exact computations in the graded module category of the Weyl algebra.",
    )
    sub = parser.add_subparsers(dest="family", required=True)

    def leaf(group, name, **kwargs):
        p = group.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    pic = sub.add_parser("pic", help="Picard group arithmetic").add_subparsers(
        dest="cmd", required=True
    )
    leaf(pic, "eval", help="normalize an expression").add_argument("expr")
    p = leaf(pic, "pow", help="integer power")
    p.add_argument("expr")
    p.add_argument("k", type=int)
    leaf(pic, "inv", help="group inverse").add_argument("expr")
    p = leaf(pic, "conj", help="conjugate EXPR by BY")
    p.add_argument("expr")
    p.add_argument("by")
    leaf(pic, "canonical", help="canonical admissible form").add_argument("expr")

    cl = sub.add_parser("classify", help="graded Morita classification").add_subparsers(
        dest="cmd", required=True
    )
    leaf(cl, "canonical", help="admissible pair + conjugator").add_argument("expr")
    p = leaf(cl, "same-class", help="same graded Morita class?")
    p.add_argument("expr")
    p.add_argument("other")

    nk = sub.add_parser("necklace", help="necklace combinatorics").add_subparsers(
        dest="cmd", required=True
    )
    leaf(nk, "count", help="number of classes").add_argument("n", type=int)
    leaf(nk, "enum", help="list all classes").add_argument("n", type=int)

    rg = sub.add_parser("ring", help="the rings S(J, n)").add_subparsers(
        dest="cmd", required=True
    )
    for name in ("present", "pieces", "oracle", "verify"):
        p = leaf(rg, name)
        p.add_argument("--J", default="", help="comma-separated residues, e.g. 0,2")
        p.add_argument("--n", type=int, required=True)
        if name in ("pieces", "oracle"):
            p.add_argument("--min", type=int, default=-2)
            p.add_argument("--max", type=int, default=2)
        if name == "verify":
            p.add_argument("--window", type=int, default=3)

    md = sub.add_parser("mod", help="rank-1 graded projective modules").add_subparsers(
        dest="cmd", required=True
    )
    for name in ("dset", "lattice"):
        p = leaf(md, name)
        p.add_argument("--J", default="")
        p.add_argument("--shift", type=int, default=0)
    for name in ("hom", "coker"):
        p = leaf(md, name)
        p.add_argument("--J", default="", help="first module's involution set")
        p.add_argument("--shift", type=int, default=0)
        p.add_argument("--J2", default="", help="second module's involution set")
        p.add_argument("--shift2", type=int, default=0)

    k0 = sub.add_parser("k0", help="graded K-theory").add_subparsers(
        dest="cmd", required=True
    )
    leaf(k0, "normalize", help="chain normal form").add_argument(
        "sum", help="summands joined by '+', e.g. '{1,3}+{0,1,2}@1'"
    )
    p = leaf(k0, "iso", help="isomorphism test")
    p.add_argument("left")
    p.add_argument("right")
    leaf(k0, "witness", help="stably-free witness").add_argument(
        "--J", required=True, help="subset of Z>=1"
    )
    leaf(k0, "theta", help="map to the involution group").add_argument(
        "combo", help="integer combination, e.g. '{0,3}-{}'"
    )

    vf = sub.add_parser("verify", help="run invariant sweeps")
    vf.add_argument("--suite", default="all", choices=["all", *sorted(SUITES)])
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--window", type=int, default=None, help="cap sweep window sizes")
    return parser


_HANDLERS = {
    "pic": _cmd_pic,
    "classify": _cmd_classify,
    "necklace": _cmd_necklace,
    "ring": _cmd_ring,
    "mod": _cmd_mod,
    "k0": _cmd_k0,
    "verify": _cmd_verify,
}


def run_command(argv: Sequence[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.family](args)
    except ExpressionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
