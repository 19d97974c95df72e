"""Command-line front end. Every command writes one deterministic JSON
report (or a text rendering) and exits with

    0  the check came out as expected (holds, or the no-go is reproduced)
    1  it did not (a law fails, or an expected no-go is missing)
    2  inconclusive within the budget
    3  malformed input, with the location of the problem
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Any

import jsonschema

from . import algebra as alg
from . import lifted, nogo
from .finrel import FinFun, FinRel, FinSet, NotEnumerable, ValidationError
from .laws import AXIOMS, axiom_report, check_axiom, check_monotone, check_naturality, law_by_name
from .lp import PolytopeQ
from .serial import dumps, jsonable
from .verdict import Budget, Status, Verdict, combine

EXIT_OK, EXIT_MISMATCH, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    def __init__(self, message: str, location: str = ""):
        super().__init__(message)
        self.location = location


@dataclass(frozen=True)
class RunConfig:
    command: str
    args: dict = field(default_factory=dict)
    budget: Budget = Budget()
    sizes: tuple = (0, 1, 2)
    input: str | None = None
    output: str | None = None
    format: str = "json"

    def echo(self) -> dict:
        return {
            "command": self.command,
            "args": {k: v for k, v in sorted(self.args.items()) if v is not None},
            "budget": self.budget.as_dict(),
            "sizes": list(self.sizes),
            "seed": self.budget.seed,
        }


# input files

_SCALAR = {"type": ["integer", "string", "boolean"]}
_ELEMENT = {"anyOf": [_SCALAR, {"type": "array"}]}
_NUMBER = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}]}
_POINT = {"type": "array", "items": _NUMBER, "minItems": 1}

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["kind"],
    "properties": {"kind": {"enum": ["jsl", "powerset", "chain", "polytope", "monoid"]}},
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": "jsl"}}},
            "then": {
                "required": ["elements"],
                "properties": {
                    "elements": {"type": "array", "items": _ELEMENT},
                    "join": {"type": "array", "items": {"type": "array", "minItems": 3, "maxItems": 3}},
                    "order": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
                },
                "oneOf": [{"required": ["join"]}, {"required": ["order"]}],
            },
        },
        {
            "if": {"properties": {"kind": {"enum": ["powerset", "chain"]}}},
            "then": {"required": ["n"], "properties": {"n": {"type": "integer", "minimum": 0, "maximum": 6}}},
        },
        {
            "if": {"properties": {"kind": {"const": "polytope"}}},
            "then": {
                "required": ["vertices"],
                "properties": {
                    "vertices": {"type": "array", "items": _POINT, "minItems": 1},
                    "subset": {"type": "array", "items": _POINT, "minItems": 1},
                },
            },
        },
        {
            "if": {"properties": {"kind": {"const": "monoid"}}},
            "then": {
                "required": ["alphabet", "lmax"],
                "properties": {
                    "alphabet": {"type": "array", "items": {"type": "string"}},
                    "lmax": {"type": "integer", "minimum": 0, "maximum": 4},
                    "commutative": {"type": "boolean"},
                },
            },
        },
    ],
}

MAP_SCHEMA = {
    "type": "object",
    "required": ["domain", "codomain", "map"],
    "properties": {
        "domain": {"type": "array", "items": _ELEMENT},
        "codomain": {"type": "array", "items": _ELEMENT},
        "map": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
    },
}

MORPHISM_SCHEMA = {
    "type": "object",
    "required": ["source", "target", "map"],
    "properties": {
        "source": ALGEBRA_SCHEMA,
        "target": ALGEBRA_SCHEMA,
        "map": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
    },
}

RELATION_SCHEMA = {
    "type": "object",
    "required": ["source", "target", "pairs"],
    "properties": {
        "source": ALGEBRA_SCHEMA,
        "target": ALGEBRA_SCHEMA,
        "pairs": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
    },
}


def load_json(path: str, schema: dict) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read input: {exc.strerror}", path) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", f"{path}:{exc.lineno}:{exc.colno}") from None
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        where = "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)
        raise InputError(err.message, f"{path}:{where}")
    return data


def _frac(v) -> Fraction:
    return Fraction(v) if isinstance(v, int) else Fraction(str(v))


def _freeze(v):
    return tuple(_freeze(x) for x in v) if isinstance(v, list) else v


def decode_algebra(spec: dict):
    kind = spec["kind"]
    if kind == "powerset":
        return alg.powerset_lattice(range(spec["n"]))
    if kind == "chain":
        if spec["n"] < 1:
            raise ValidationError("a chain needs at least one element")
        return alg.chain(spec["n"])
    if kind == "jsl":
        els = [_freeze(x) for x in spec["elements"]]
        if "join" in spec:
            table = {(_freeze(a), _freeze(b)): _freeze(c) for a, b, c in spec["join"]}
            return alg.JoinSemilattice(els, table, name="input")
        rel = {(_freeze(a), _freeze(b)) for a, b in spec["order"]} | {(x, x) for x in els}
        return alg.jsl_from_order(els, lambda a, b: (a, b) in rel, name="input")
    if kind == "polytope":
        pts = [tuple(_frac(c) for c in v) for v in spec["vertices"]]
        return PolytopeQ(len(pts[0]), pts)
    return alg.TruncatedMonoid(tuple(spec["alphabet"]), spec["lmax"], spec.get("commutative", False))


def decode_element(A, v):
    if isinstance(A, alg.JoinSemilattice) and all(isinstance(x, frozenset) for x in A.elements):
        if not isinstance(v, list):
            raise ValidationError(f"element {v!r} of a powerset lattice must be a list")
        return frozenset(_freeze(x) for x in v)
    if isinstance(A, PolytopeQ):
        return tuple(_frac(c) for c in v)
    return _freeze(v)


def _member(A, x, where: str):
    if isinstance(A, alg.JoinSemilattice) and x not in A.carrier:
        raise ValidationError(f"{x!r} is not an element of the {where}")
    return x


def decode_lattice_map(spec: dict):
    A, B = decode_algebra(spec["source"]), decode_algebra(spec["target"])
    if not (isinstance(A, alg.JoinSemilattice) and isinstance(B, alg.JoinSemilattice)):
        raise ValidationError("morphism files describe maps between join-semilattices")
    table = {}
    for x, y in spec["map"]:
        table[_member(A, decode_element(A, x), "source")] = _member(B, decode_element(B, y), "target")
    missing = [x for x in A.elements if x not in table]
    if missing:
        raise ValidationError(f"map is undefined on {missing[0]!r}")
    return A, B, table


# dispatch


def verdict_code(v: Verdict) -> int:
    if v.status is Status.INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if v.holds else EXIT_MISMATCH


def _all_code(verdicts) -> int:
    return verdict_code(combine(verdicts))


def cmd_check_law(cfg: RunConfig):
    law = law_by_name(cfg.args["law"])
    sizes = (cfg.args["size"],) if cfg.args.get("size") is not None else cfg.sizes
    axioms = AXIOMS if cfg.args.get("axiom") in (None, "all") else (cfg.args["axiom"],)
    if len(axioms) == len(AXIOMS):
        report = axiom_report(law, sizes, cfg.budget)
        verdicts = dict(report.verdicts)
        result = {"law": law.name, "sizes": list(sizes), "verdicts": verdicts,
                  "classification": report.classification}
    else:
        verdicts = {a: combine(check_axiom(law, a, range(n), cfg.budget) for n in sizes) for a in axioms}
        result = {"law": law.name, "sizes": list(sizes), "verdicts": verdicts}
    tag = "law-axiom:" + (axioms[0] if len(axioms) == 1 else "all")
    return _all_code(verdicts.values()), tag, result


def cmd_check_naturality(cfg: RunConfig):
    law = law_by_name(cfg.args["law"])
    spec = load_json(cfg.input, MAP_SCHEMA)
    dom, cod = FinSet(_freeze(x) for x in spec["domain"]), FinSet(_freeze(y) for y in spec["codomain"])
    f = FinFun(dom, cod, {_freeze(x): _freeze(y) for x, y in spec["map"]})
    v = check_naturality(law, f, cfg.budget)
    return verdict_code(v), "law-naturality", {"law": law.name, "verdict": v}


def cmd_check_monotone(cfg: RunConfig):
    law = law_by_name(cfg.args["law"])
    n = cfg.args.get("size") if cfg.args.get("size") is not None else 2
    v = check_monotone(law, range(n), range(n), cfg.budget)
    return verdict_code(v), "law-monotonicity", {"law": law.name, "size": n, "verdict": v}


def cmd_check_algebra(cfg: RunConfig):
    A = decode_algebra(load_json(cfg.input, ALGEBRA_SCHEMA))
    if isinstance(A, alg.JoinSemilattice):
        verdicts = {"semilattice": A.axioms(), "algebra": alg.check_algebra(A.algebra(), cfg.budget)}
    elif isinstance(A, PolytopeQ):
        verdicts = {"algebra": alg.check_algebra(alg.convex_algebra(A), cfg.budget)}
    else:
        verdicts = {"algebra": alg.check_algebra(A.algebra(), cfg.budget)}
    return _all_code(verdicts.values()), "algebra-laws", {"verdicts": verdicts}


def cmd_check_morphism(cfg: RunConfig):
    A, B, table = decode_lattice_map(load_json(cfg.input, MORPHISM_SCHEMA))
    v = alg.check_morphism(alg.morphism(A.algebra(), B.algebra(), table.__getitem__), cfg.budget)
    return verdict_code(v), "algebra-morphism", {"verdict": v}


def cmd_decomposable(cfg: RunConfig):
    A, B, table = decode_lattice_map(load_json(cfg.input, MORPHISM_SCHEMA))
    f = alg.morphism(A.algebra(), B.algebra(), table.__getitem__)
    is_morphism = alg.check_morphism(f, cfg.budget)
    if not is_morphism.holds:
        return EXIT_INPUT, "decomposability", {"error": "not a morphism", "verdict": is_morphism}
    # two independent routes, reported side by side
    brute = alg.is_decomposable(f, cfg.budget)
    special = alg.is_decomposable_jsl(table.__getitem__, A, B)
    result = {"brute_force": brute, "semilattice": special, "routes_agree": brute.holds == special.holds}
    if brute.status is Status.INCONCLUSIVE:
        return verdict_code(special), "decomposability", result
    if brute.holds != special.holds:
        return EXIT_MISMATCH, "decomposability", result
    return verdict_code(brute), "decomposability", result


def cmd_weak_composite(cfg: RunConfig):
    law = law_by_name(cfg.args["law"])
    n = cfg.args.get("size") if cfg.args.get("size") is not None else 2
    wc = lifted.weak_composite(law, range(n))
    units = wc.check_unit_laws()
    assoc_budget = replace(cfg.budget, samples=cfg.budget.samples or 100)
    verdicts = {**units, "associativity": wc.check_associativity(assoc_budget)}
    union_closed = all(lifted.is_union_closed(r) for r in wc.carrier) if law.T.kind == "powerset" else None
    result = {"law": law.name, "size": n, "carrier_size": len(wc.carrier), "verdicts": verdicts}
    if union_closed is not None:
        result["retract_union_closed"] = union_closed
    if cfg.args.get("dump_carrier"):
        result["carrier"] = list(wc.carrier.elems)
    code = _all_code(verdicts.values())
    if union_closed is False:
        code = EXIT_MISMATCH
    return code, "weak-composite", result


def cmd_lift_powerset(cfg: RunConfig):
    A = decode_algebra(load_json(cfg.input, ALGEBRA_SCHEMA))
    what = cfg.args.get("what") or "carrier"
    if not isinstance(A, alg.JoinSemilattice):
        return EXIT_INCONCLUSIVE, "lifted-powerset", {"note": "the lifted carrier is infinite for this presentation"}
    L = lifted.LiftedPowersetJSL(A)
    if what == "carrier":
        return EXIT_OK, "lifted-powerset:carrier", {"size": len(L.carrier), "carrier": L.carrier}
    if what == "unit":
        return EXIT_OK, "lifted-powerset:unit", {"unit": {"map": [[x, L.unit(x)] for x in A.elements]}}
    carrier = L.carrier
    if len(carrier) > 64:
        return EXIT_INCONCLUSIVE, "lifted-powerset:mult", {"note": f"{len(carrier)} elements; join table not printed"}
    table = [[E, F, L.join2(E, F)] for E in carrier for F in carrier]
    lattice = L.lattice()
    return verdict_code(lattice.axioms()), "lifted-powerset:mult", {"join": table, "axioms": lattice.axioms()}


def cmd_kleisli_membership(cfg: RunConfig):
    spec = load_json(cfg.input, RELATION_SCHEMA)
    A, B = decode_algebra(spec["source"]), decode_algebra(spec["target"])
    if not (isinstance(A, alg.JoinSemilattice) and isinstance(B, alg.JoinSemilattice)):
        raise ValidationError("relations are read between join-semilattices")
    pairs = [(decode_element(A, a), decode_element(B, b)) for a, b in spec["pairs"]]
    psi = FinRel(A.carrier, B.carrier, pairs)
    report = lifted.kleisli_lift_membership(psi, A, B)
    equal, decomposable = lifted.membership_vs_decomposability(psi, A, B)
    result = {
        "classification": report.classification,
        "equal": equal,
        "left_leg_decomposable": decomposable,
        "agree": equal == decomposable,
    }
    return (EXIT_OK if equal == decomposable else EXIT_MISMATCH), "kleisli-membership", result


def cmd_classifier(cfg: RunConfig):
    spec = load_json(cfg.input, ALGEBRA_SCHEMA)
    A = decode_algebra(spec)
    if isinstance(A, alg.JoinSemilattice):
        r = lifted.classifier_check_jsl(A)
        result = {
            "verdict": r.verdict,
            "decomposable_monos": r.decomposable_monos,
            "characteristic_maps": r.characteristic_maps,
            "down_closed": r.down_closed,
        }
        return verdict_code(r.verdict), "decomposable-subobject-classifier", result
    if isinstance(A, PolytopeQ):
        if "subset" not in spec:
            raise InputError("a polytope classifier check needs a 'subset'", f"{cfg.input}:$.subset")
        E = PolytopeQ(A.dim, [tuple(_frac(c) for c in v) for v in spec["subset"]])
        r = lifted.classifier_check_conv(A, E, cfg.budget)
        agree = r.wall == r.decomposable == r.affine_characteristic
        result = {"wall": r.wall, "decomposable": r.decomposable, "affine_characteristic": r.affine_characteristic,
                  "witness": r.witness, "sampled": True}
        return (EXIT_OK if agree else EXIT_MISMATCH), "decomposable-subobject-classifier", result
    raise ValidationError("classifier checks take a join-semilattice or a polytope")


def _expect_code(found: bool, expected: bool) -> int:
    return EXIT_OK if found == expected else EXIT_MISMATCH


def cmd_nogo(cfg: RunConfig):
    which = cfg.args["which"]
    expect_fail = cfg.args.get("expect", "fails") == "fails"
    if which == "singleton":
        A = decode_algebra(load_json(cfg.input, ALGEBRA_SCHEMA))
        r = nogo.singleton_lifting_test(A, cfg.budget.maxden)
        result = {"holds": r.holds, "singleton_in": r.singleton_in, "nonempty_subsets_in": r.nonempty_subsets_in,
                  "witness": r.witness, "replays": bool(r.witness and r.witness.replay())}
        return _expect_code(r.holds, expect_fail), "singleton-lifting-test", result
    if which in ("yang-baxter", "pi-yang-baxter"):
        names = [s.strip() for s in (cfg.args.get("laws") or "distrPP,distrPP,distrPP").split(",")]
        if len(names) != 3:
            raise InputError("--laws takes three comma-separated law names", "--laws")
        rho, sigma, tau = (law_by_name(n) for n in names)
        n = cfg.args.get("size") if cfg.args.get("size") is not None else 2
        check = nogo.yang_baxter_check if which == "yang-baxter" else nogo.pi_yang_baxter_check
        v, w = check(rho, sigma, tau, range(n), cfg.budget)
        result = {"laws": names, "size": n, "verdict": v, "witness": w, "replays": bool(w and w.replay())}
        if v.status is Status.INCONCLUSIVE:
            return EXIT_INCONCLUSIVE, which + "-hexagon", result
        return _expect_code(v.fails, expect_fail), which + "-hexagon", result
    if which == "search":
        kind = cfg.args.get("kind") or "jsl"
        if kind in ("jsl", "jsl*"):
            w = nogo.search_preservation_counterexample([nogo.parity_map(4)], nonempty=kind == "jsl*")
        else:
            w = nogo.search_conv_counterexample(nogo.collapse_map(), 3, cfg.budget.maxden)
        result = {"kind": kind, "witness": w, "replays": bool(w and w.replay())}
        return _expect_code(w is not None and w.replay(), expect_fail), "lifted-decomposability-search", result
    if which == "mon-cmon":
        lmax = cfg.args.get("lmax") or 2
        subsets_ng = nogo.reproduce_mon_cmon(lmax)
        found = {f"P/{k}": v for k, v in subsets_ng.items()}
        for name in ("Mon", "CMon"):
            found[f"M/{name}"] = nogo.multiset_no_go(name == "CMon", lmax)
            found[f"D/{name}"] = nogo.distribution_no_go(name == "CMon")
        result = {
            key: {"confirmed": ng.confirmed, "premises": ng.premises, "witness": ng.witness,
                  "solutions": ng.solutions, "replays": ng.witness.replay()}
            for key, ng in found.items()
        }
        ok = all(ng.confirmed for ng in found.values())
        return _expect_code(ok, expect_fail), "monoid-lifting-no-go", result
    if which == "table":
        report = nogo.table_report(cfg.args.get("profile") or "desk")
        golden = cfg.args.get("golden")
        code = EXIT_OK if report.matches_expected else EXIT_MISMATCH
        if code == EXIT_OK and report.inconclusive:
            code = EXIT_INCONCLUSIVE
        result = {"table": report}
        if cfg.format == "text":
            result["text"] = report.render_text()
        if golden:
            try:
                expected = Path(golden).read_text(encoding="utf-8")
            except OSError as exc:
                raise InputError(f"cannot read golden fixture: {exc.strerror}", golden) from None
            same = dumps(jsonable(report)) == expected
            result["golden_match"] = same
            if not same:
                code = EXIT_MISMATCH
        return code, "monotone-law-table", result
    raise InputError(f"unknown no-go check {which!r}", "nogo")


COMMANDS = {
    "check-law": cmd_check_law,
    "check-naturality": cmd_check_naturality,
    "check-monotone": cmd_check_monotone,
    "check-algebra": cmd_check_algebra,
    "check-morphism": cmd_check_morphism,
    "decomposable": cmd_decomposable,
    "weak-composite": cmd_weak_composite,
    "lift-powerset": cmd_lift_powerset,
    "kleisli-membership": cmd_kleisli_membership,
    "classifier": cmd_classifier,
    "nogo": cmd_nogo,
}


def run(cfg: RunConfig) -> tuple[int, dict]:
    try:
        code, tag, result = COMMANDS[cfg.command](cfg)
    except InputError as exc:
        return EXIT_INPUT, {"config": cfg.echo(), "error": str(exc), "location": exc.location}
    except (ValidationError, NotEnumerable, ValueError) as exc:
        return EXIT_INPUT, {"config": cfg.echo(), "error": str(exc), "location": cfg.input or cfg.command}
    return code, {"check": tag, "config": cfg.echo(), "exit_code": code, "result": result}


# argument parsing


def _budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--maxden", type=int, default=2, help="largest denominator for distributions")
    p.add_argument("--maxlen", type=int, default=2, help="word length / multiset size / sampled subset size")
    p.add_argument("--samples", type=int, default=None, help="random inputs when a domain is too large")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", default="0,1,2", help="carrier sizes to sweep")
    p.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weaklaw", description="Finite checks for weak distributive laws.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-law", help="axioms of a law TS => ST")
    p.add_argument("--law", required=True)
    p.add_argument("--axiom", choices=(*AXIOMS, "all"), default="all")
    p.add_argument("--size", type=int)
    _budget_args(p)

    p = sub.add_parser("check-naturality", help="naturality of a law at a map given in a file")
    p.add_argument("--law", required=True)
    p.add_argument("--map", dest="input", required=True)
    _budget_args(p)

    p = sub.add_parser("check-monotone", help="monotonicity of a law over the powerset")
    p.add_argument("--law", required=True)
    p.add_argument("--size", type=int)
    _budget_args(p)

    helps = {
        "check-algebra": "algebra axioms of a finite structure",
        "lift-powerset": "powerset monad lifted to join-semilattices",
        "classifier": "decomposable monos against maps into 2",
        "check-morphism": "morphism laws for a map between algebras",
        "decomposable": "decomposability of a morphism by two routes",
    }
    for name, flag in (("check-algebra", "--algebra"), ("lift-powerset", "--algebra"), ("classifier", "--algebra")):
        p = sub.add_parser(name, help=helps[name])
        p.add_argument(flag, dest="input", required=True)
        if name == "lift-powerset":
            p.add_argument("--what", choices=("carrier", "unit", "mult"), default="carrier")
        _budget_args(p)

    for name in ("check-morphism", "decomposable"):
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("--morphism", dest="input", required=True)
        _budget_args(p)

    p = sub.add_parser("kleisli-membership", help="Kleisli lift membership of a relation")
    p.add_argument("--relation", dest="input", required=True)
    _budget_args(p)

    p = sub.add_parser("weak-composite", help="carrier and laws of the weak composite monad")
    p.add_argument("--law", required=True)
    p.add_argument("--size", type=int)
    p.add_argument("--dump-carrier", action="store_true")
    _budget_args(p)

    p = sub.add_parser("nogo", help="negative results")
    nsub = p.add_subparsers(dest="which", required=True)
    q = nsub.add_parser("singleton", help="singleton test for lifting the powerset law")
    q.add_argument("--algebra", dest="input", required=True)
    for name in ("yang-baxter", "pi-yang-baxter"):
        q = nsub.add_parser(name, help=f"{name} hexagon for three laws")
        q.add_argument("--laws", default="distrPP,distrPP,distrPP")
        q.add_argument("--size", type=int)
    q = nsub.add_parser("search", help="lifted decomposability counterexample search")
    q.add_argument("--kind", choices=("jsl", "jsl*", "conv"), default="jsl")
    q = nsub.add_parser("mon-cmon", help="monoid and commutative monoid lifting no-go")
    q.add_argument("--lmax", type=int, default=2)
    q = nsub.add_parser("table", help="table of monotone laws by category")
    q.add_argument("--profile", choices=sorted(nogo.PROFILES), default="desk")
    q.add_argument("--golden", default=None)
    for q in nsub.choices.values():
        q.add_argument("--expect", choices=("fails", "holds"), default="fails")
        _budget_args(q)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    seed = ns.seed
    env = os.environ.get("WEAKLAW_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise InputError(f"WEAKLAW_SEED must be an integer, got {env!r}", "WEAKLAW_SEED") from None
    try:
        sizes = tuple(int(s) for s in ns.sizes.split(",") if s.strip())
        budget = Budget(ns.maxden, ns.maxlen, ns.samples, seed)
    except ValueError as exc:
        raise InputError(str(exc), "--sizes/--maxden/--maxlen") from None
    skip = {"command", "input", "output", "format", "maxden", "maxlen", "samples", "seed", "sizes"}
    args = {k: v for k, v in vars(ns).items() if k not in skip}
    return RunConfig(ns.command, args, budget, sizes, getattr(ns, "input", None), ns.output, ns.format)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report)
    result = report.get("result", {})
    if "text" in result:
        return result["text"]
    data = jsonable(report)
    lines = [f"check: {data.get('check', '-')}", f"exit code: {data.get('exit_code', EXIT_INPUT)}"]
    if "error" in data:
        lines.append(f"error: {data['error']} at {data['location']}")
    for key, value in sorted(data.get("result", {}).items()):
        if isinstance(value, dict) and "status" in value:
            lines.append(f"{key}: {value['status']}")
        elif isinstance(value, dict) and all(isinstance(v, dict) and "status" in v for v in value.values()) and value:
            lines.extend(f"{key}.{k}: {v['status']}" for k, v in sorted(value.items()))
        elif not isinstance(value, (dict, list)):
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
    except InputError as exc:
        sys.stderr.write(dumps({"error": str(exc), "location": exc.location}))
        return EXIT_INPUT
    code, report = run(cfg)
    text = render(report, cfg.format)
    if code == EXIT_INPUT:
        sys.stderr.write(text)
    elif cfg.output:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
