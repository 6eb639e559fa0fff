"""Command-line front end: ``doobcodes {dual,enum,check,convert}``.

Exit codes: 0 success, 1 identity failure, 2 parse/usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .codes import (
    HERM,
    PSI_PAIRING,
    TR,
    AdditiveCode,
    Pairing,
    additive_closure,
    dual,
    format_code_file,
    is_linear,
    linear_closure,
    parse_code_file,
)
from .enumerators import (
    CORRECTED_SUBSTITUTION,
    PRINTED_SUBSTITUTION,
    BivariateEnum,
    complete_weight_enumerator,
    coweight_enumerator,
    format_poly,
    macwilliams_transform,
    weight_enumerator,
)
from .errors import BudgetExceededError, ParseError, TransformError
from .rings import E4Elem, F4Elem
from .space import DEFAULT_BUDGET, LMap, MixedVector, SpaceShape, check_budget, parse_vector
from .zrep import MINUS, PLUS, ZShape, ZVector, convert_code

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3

CAMPAIGN_SHAPES = ((1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (2, 0, 0), (0, 2, 2))
E4_PAIRINGS = ("tr", "psi", "herm")
Z4_PAIRINGS = ("plus", "minus")


@dataclass(frozen=True)
class RunConfig:
    representation: str = "e4"
    pairing: str = "tr"
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    output: str = "text"
    printed_substitution: bool = False

    @property
    def substitution(self):
        return PRINTED_SUBSTITUTION if self.printed_substitution else CORRECTED_SUBSTITUTION


def parse_pairing(text: str, rep: str = "e4") -> Pairing:
    """``tr | psi | herm | L:<l1>,<lw>`` for e4, ``plus | minus`` for z4."""
    named = {"tr": TR, "psi": PSI_PAIRING, "herm": HERM, "plus": PLUS, "minus": MINUS}
    if text.startswith("L:"):
        try:
            l1, lw = (int(t) for t in text[2:].split(","))
        except ValueError:
            raise ParseError(f"bad L-map {text!r}, expected L:<l1>,<lw>") from None
        try:
            pairing = Pairing.from_lmap(LMap(l1 % 4, lw % 4))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    elif text in named:
        pairing = named[text]
    else:
        raise ParseError(f"unknown pairing {text!r}")
    allowed = Z4_PAIRINGS if rep == "z4" else E4_PAIRINGS + ("L",)
    if pairing.kind not in allowed:
        raise ParseError(f"pairing {text!r} does not apply to representation {rep}")
    return pairing


def parse_shape(text: str) -> tuple[int, int, int]:
    try:
        dims = tuple(int(t) for t in text.split(","))
    except ValueError:
        dims = ()
    if len(dims) != 3 or min(dims) < 0:
        raise ParseError(f"bad shape {text!r}, expected m,n',n''")
    return dims


def random_vector(shape, rng: random.Random):
    if isinstance(shape, ZShape):
        return ZVector(
            [(rng.randrange(4), rng.randrange(4)) for _ in range(shape.m)],
            [(rng.randrange(2), rng.randrange(2)) for _ in range(shape.nprime)],
            [rng.randrange(4) for _ in range(shape.nsec)],
        )
    return MixedVector(
        [E4Elem(rng.randrange(4), rng.randrange(4)) for _ in range(shape.m)],
        [F4Elem(rng.randrange(2), rng.randrange(2)) for _ in range(shape.nprime)],
        [rng.randrange(4) for _ in range(shape.nsec)],
    )


def random_code(shape, rng: random.Random, linear: bool = False,
                budget: int = DEFAULT_BUDGET) -> AdditiveCode:
    gens = [random_vector(shape, rng) for _ in range(rng.randint(1, 4))]
    if linear:
        return linear_closure(shape, gens, budget)
    return additive_closure(shape, gens, budget)


# -- identity checks -------------------------------------------------------

def _mw(source: BivariateEnum, size: int, target: BivariateEnum, substitution) -> bool:
    try:
        return macwilliams_transform(source, size, substitution) == target
    except TransformError:
        return False


def identity_checks(code: AdditiveCode, pairing: Pairing, cfg: RunConfig) -> tuple[AdditiveCode, dict]:
    """Compute the dual exhaustively and test every identity that applies to ``pairing``."""
    sub = cfg.substitution
    d = dual(code, pairing, cfg.budget)
    results = {
        "card": len(code) * len(d) == code.shape.ambient_size,
        "dual-dual": dual(d, pairing, cfg.budget) == code,
    }
    W, Wd = weight_enumerator(code), weight_enumerator(d)
    if pairing.kind in ("tr", "herm", "plus"):
        Wa, Wad = coweight_enumerator(code), coweight_enumerator(d)
        label = "Th4" if pairing.kind == "plus" else "MWa"
        results[label + "1"] = _mw(Wa, len(code), Wd, sub)
        results[label + "2"] = _mw(Wad, len(d), W, sub)
    if pairing.kind in ("psi", "minus") or (
        pairing.kind in ("tr", "L") and isinstance(code.shape, SpaceShape)
        and not code.shape.nsec and is_linear(code)
    ):
        label = {"psi": "Th3", "minus": "Th5"}.get(pairing.kind, "Th2")
        results[label] = _mw(W, len(code), Wd, sub)
        results[label + "-rev"] = _mw(Wd, len(d), W, sub)
    if pairing.kind == "L":
        results["Prop1"] = d == dual(code, TR, cfg.budget)
    return d, results


def _shape_for(dims, rep):
    return ZShape(*dims) if rep == "z4" else SpaceShape(*dims)


def _emit_results(rows, cfg: RunConfig, out) -> int:
    failed = sum(1 for r in rows if not all(r["checks"].values()))
    if cfg.output == "json":
        json.dump({"results": rows, "passed": len(rows) - failed, "failed": failed}, out, indent=1)
        out.write("\n")
    else:
        for r in rows:
            names = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in r["checks"].items())
            verdict = "PASS" if all(r["checks"].values()) else "FAIL"
            out.write(f"{verdict} {r['index']:04d} {r['rep']} shape={r['shape']} "
                      f"pairing={r['pairing']} |C|={r['size']} |Cd|={r['dual_size']} {names}\n")
        out.write(f"{len(rows) - failed}/{len(rows)} PASS\n")
    return EXIT_FAIL if failed else EXIT_OK


def _row(index, code, d, pairing, checks, rep):
    s = code.shape
    return {"index": index, "rep": rep, "shape": f"{s.m},{s.nprime},{s.nsec}",
            "pairing": str(pairing), "size": len(code), "dual_size": len(d), "checks": checks}


def run_random(count: int, cfg: RunConfig, shapes, linear: bool, out, pairings=None) -> int:
    rng = random.Random(cfg.seed)
    rows = []
    for k in range(count):
        dims = shapes[k % len(shapes)]
        shape = _shape_for(dims, cfg.representation)
        check_budget(shape.ambient_size, cfg.budget)
        code = random_code(shape, rng, linear, cfg.budget)
        for pairing in pairings or [parse_pairing(cfg.pairing, cfg.representation)]:
            d, checks = identity_checks(code, pairing, cfg)
            rows.append(_row(k, code, d, pairing, checks, cfg.representation))
    return _emit_results(rows, cfg, out)


def run_paper_examples(cfg: RunConfig, out) -> int:
    shape = SpaceShape(1)
    C = additive_closure(shape, [parse_vector("2:0", shape), parse_vector("0:2", shape)])
    D = additive_closure(shape, [parse_vector("3:1", shape)])
    Cd, Dd = dual(C, TR), dual(D, TR)
    omega_line = [parse_vector(t, shape) for t in ("0:0", "0:1", "0:2", "0:3")]

    def T(code):
        return macwilliams_transform(coweight_enumerator(code), len(code), cfg.substitution)

    checks = [
        ("C = {0, 2, 2w, 2w_bar}", [str(x) for x in C] == ["0:0", "0:2", "2:0", "2:2"]),
        ("D = {0, psi, 2psi, -psi}", [str(x) for x in D] == ["0:0", "1:3", "2:2", "3:1"]),
        ("W_C = A^2 + 3B^2", weight_enumerator(C).coeffs == (1, 0, 3)),
        ("W_D = A^2 + 3B^2", weight_enumerator(D).coeffs == (1, 0, 3)),
        ("dual(C) = C", Cd == C),
        ("dual(D) = {0, w, 2w, -w}", list(Dd.elements) == omega_line),
        ("W_dual(C) = A^2 + 3B^2", weight_enumerator(Cd).coeffs == (1, 0, 3)),
        ("W_dual(D) = A^2 + 2AB + B^2", weight_enumerator(Dd).coeffs == (1, 2, 1)),
        ("coweight W_dual(C) = coweight W_dual(D) = A^2 + 3B^2",
         coweight_enumerator(Cd).coeffs == coweight_enumerator(Dd).coeffs == (1, 0, 3)),
    ]
    for name, code, target in (("C", C, Cd), ("D", D, Dd)):
        try:
            ok = T(code) == weight_enumerator(target)
        except TransformError:
            ok = False
        checks.append((f"transform of coweight W_{name} = W_dual({name})", ok))
    failed = sum(1 for _, ok in checks if not ok)
    if cfg.output == "json":
        json.dump({"checks": {n: ok for n, ok in checks}, "failed": failed}, out, indent=1)
        out.write("\n")
    else:
        for name, ok in checks:
            out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
        out.write(f"{len(checks) - failed}/{len(checks)} PASS\n")
    return EXIT_FAIL if failed else EXIT_OK


# -- subcommands -----------------------------------------------------------

def _load(path: str, cfg: RunConfig, explicit_rep: bool) -> tuple[str, AdditiveCode]:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(str(exc)) from None
    rep, code = parse_code_file(text, cfg.budget)
    if explicit_rep and rep != cfg.representation:
        raise ParseError(f"{path} is a {rep} code file but --rep {cfg.representation} was given")
    return rep, code


def _default_pairing(args, rep: str) -> str:
    return args.pairing or ("plus" if rep == "z4" else "tr")


def cmd_dual(args, cfg: RunConfig, out) -> int:
    rep, code = _load(args.file, cfg, args.rep is not None)
    pairing = parse_pairing(_default_pairing(args, rep), rep)
    d = dual(code, pairing, cfg.budget)
    ambient = code.shape.ambient_size
    ok = len(code) * len(d) == ambient
    if cfg.output == "json":
        s = code.shape
        json.dump({
            "rep": rep, "shape": [s.m, s.nprime, s.nsec], "pairing": str(pairing),
            "code": [str(x) for x in code], "dual": [str(x) for x in d],
            "size": len(code), "dual_size": len(d), "ambient": ambient,
        }, out, indent=1)
        out.write("\n")
    else:
        out.write(f"C ({len(code)} words):\n")
        out.writelines(f"  {x}\n" for x in code)
        out.write(f"dual under {pairing} ({len(d)} words):\n")
        out.writelines(f"  {x}\n" for x in d)
        out.write(f"|C| * |dual| = {len(code)} * {len(d)} = {len(code) * len(d)}; |V| = {ambient}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enum(args, cfg: RunConfig, out) -> int:
    rep, code = _load(args.file, cfg, args.rep is not None)
    W, Wa = weight_enumerator(code), coweight_enumerator(code)
    complete = complete_weight_enumerator(code) if rep == "e4" else None
    if cfg.output == "json":
        doc = {"weight": W.to_json(), "coweight": Wa.to_json()}
        if complete is not None:
            doc["complete"] = complete.to_json()
        json.dump(doc, out, indent=1)
        out.write("\n")
    else:
        out.write(f"|C| = {len(code)}, N = {W.N}\n")
        out.write(f"W(A,B) = {W}   coeffs {list(W.coeffs)}\n")
        out.write(f"coweight W(A,B) = {format_poly(Wa.coeffs)}   coeffs {list(Wa.coeffs)}\n")
        if complete is not None:
            out.write("complete enumerator:\n")
            for row in complete.to_json()["profiles"]:
                mono = " ".join(f"{v}^{e}" if e > 1 else v for v, e in row["exponents"].items())
                out.write(f"  {row['coeff']} {mono or '1'}\n")
    return EXIT_OK


def cmd_check(args, cfg: RunConfig, out) -> int:
    if args.paper_examples:
        return run_paper_examples(cfg, out)
    shapes = [parse_shape(args.shape)] if args.shape else None
    if args.proposition1:
        if cfg.representation != "e4":
            raise ParseError("--proposition1 applies to the e4 representation")
        shapes = shapes or [s for s in CAMPAIGN_SHAPES if s[2] == 0]
        if any(s[2] for s in shapes):
            raise ParseError("--proposition1 needs shapes without Z4 coordinates")
        pairings = [TR] + [Pairing.from_lmap(L) for L in LMap.all_surjective()]
        return run_random(args.random or 50, cfg, shapes, True, out, pairings)
    if args.random:
        pairing = parse_pairing(cfg.pairing, cfg.representation)
        shapes = shapes or list(CAMPAIGN_SHAPES)
        if pairing.kind in ("L", "herm"):
            shapes = [s for s in shapes if s[2] == 0]
            if not shapes:
                raise ParseError(f"pairing {pairing} needs shapes without Z4 coordinates")
        return run_random(args.random, cfg, shapes, pairing.kind == "L", out)
    if args.file:
        rep, code = _load(args.file, cfg, args.rep is not None)
        pairing = parse_pairing(_default_pairing(args, rep), rep)
        d, checks = identity_checks(code, pairing, cfg)
        return _emit_results([_row(0, code, d, pairing, checks, rep)], cfg, out)
    raise ParseError("check needs a code file, --random, --proposition1 or --paper-examples")


def cmd_convert(args, cfg: RunConfig, out) -> int:
    _, code = _load(args.file, cfg, False)
    converted = convert_code(code)
    if weight_enumerator(converted) != weight_enumerator(code):
        out.write("weight enumerator changed under conversion\n")
        return EXIT_FAIL
    out.write(format_code_file(converted))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rep", choices=("e4", "z4"), default=None)
    common.add_argument("--pairing", default=None,
                        help="tr | psi | herm | L:<l1>,<lw> (e4); plus | minus (z4)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="cap on the number of ambient vectors enumerated")
    common.add_argument("--json", action="store_true")

    parser = argparse.ArgumentParser(prog="doobcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("dual", parents=[common], help="list a code and its dual")
    p.add_argument("file")
    p = sub.add_parser("enum", parents=[common], help="weight, coweight and complete enumerators")
    p.add_argument("file")
    p = sub.add_parser("check", parents=[common], help="verify MacWilliams identities")
    p.add_argument("file", nargs="?")
    p.add_argument("--shape", help="m,n',n''")
    p.add_argument("--random", type=int, default=0, metavar="COUNT")
    p.add_argument("--paper-examples", action="store_true")
    p.add_argument("--proposition1", action="store_true")
    p.add_argument("--printed-substitution", action="store_true",
                   help="use (A+B, A-3B) instead of (A+3B, A-B); expected to fail")
    p = sub.add_parser("convert", parents=[common], help="translate between space and zspace files")
    p.add_argument("file")
    return parser


COMMANDS = {"dual": cmd_dual, "enum": cmd_enum, "check": cmd_check, "convert": cmd_convert}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    rep = args.rep or ("z4" if args.pairing in Z4_PAIRINGS else "e4")
    cfg = RunConfig(
        representation=rep,
        pairing=args.pairing or ("plus" if rep == "z4" else "tr"),
        seed=args.seed,
        budget=args.budget,
        output="json" if args.json else "text",
        printed_substitution=getattr(args, "printed_substitution", False),
    )
    try:
        return COMMANDS[args.command](args, cfg, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        # e.g. an E4-only product requested on a file with Z4 coordinates
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
