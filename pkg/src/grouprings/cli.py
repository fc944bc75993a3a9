"""Command-line front end.

Exit codes: 0 success, 1 a disagreement or refutation was found, 2 usage or
parse error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import prufer
from .coeffs import gf, parse_coeff_spec
from .config import Output, RunConfig, load_config
from .errors import AlgebraError, ParseError, SizeLimitExceeded, WitnessSearchExhausted
from .groupring import (
    GroupAlgebra,
    annihilator_witness,
    find_nontrivial_idempotent,
    frobenius_gram,
    idempotent_from_cyclic,
    is_local_ring,
    jacobson_radical,
    nilpotency_index,
    omega,
    right_socle,
)
from .laurent import inverse_in_window, lp_is_unit, parse_laurent
from .structures import (
    element_orders,
    is_p_group,
    parse_group_spec,
    prime_factors,
    subgroup_generated,
)
from .theorems import Catalog, VerifyOptions, dumps, verify_all

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--config", type=Path, help="key = value file; flags override it")
    common.add_argument("--seed", type=int, help="random seed (default 0)")
    common.add_argument("--max-group-order", type=int, help="largest group a spec may build (default 64)")
    common.add_argument("--max-enum", type=int, dest="max_enum_elements",
                        help="largest exhaustive enumeration (default 16384)")
    return common


def _ring_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--coeff", required=True, help="gf:<p> or zmod:<n>")
    p.add_argument("--group", required=True, help="e.g. c4, d8, q8, s3, c2xc2, file:<path>")


def build_parser() -> _Parser:
    common = _common()
    parser = _Parser(prog="grouprings", description="Group rings A[G]: radicals, locality, self-injectivity.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    group = sub.add_parser("group", help="finite group queries").add_subparsers(dest="action", required=True)
    info = group.add_parser("info", parents=[common], help="order, abelian, element orders, p-group verdicts")
    info.add_argument("spec")

    gr = sub.add_parser("gr", help="group ring computations").add_subparsers(dest="action", required=True)
    helps = {
        "local": "locality verdict with radical certificate",
        "radical": "Jacobson radical with certificate",
        "socle": "right socle",
        "omega": "augmentation ideal and its nilpotency index",
        "idempotents": "idempotents from cyclic subgroups and the first nontrivial one",
        "frobenius": "Frobenius form and its nondegeneracy",
        "annihilator": "left annihilator of omega(H) with the sum of H",
    }
    for name, text in helps.items():
        cmd = gr.add_parser(name, parents=[common], help=text, description=text)
        _ring_args(cmd)
        if name == "radical":
            cmd.add_argument("--strategy", default="auto", choices=["auto", "structural", "trace-form", "exhaustive"])
        if name == "annihilator":
            cmd.add_argument("--subgroup", required=True, help="comma-separated generator names or indices")

    laurent = sub.add_parser("laurent", help="Laurent polynomials").add_subparsers(dest="action", required=True)
    unit = laurent.add_parser("unit", parents=[common], help="unit test with certificate")
    unit.add_argument("--p", type=int, required=True)
    unit.add_argument("--poly", required=True, help='e.g. "1 + x - x^2"')

    pr = sub.add_parser("prufer", help="quasi-cyclic group ring").add_subparsers(dest="action", required=True)
    lemma = pr.add_parser("lemma", parents=[common], help="exhaustive sweep of both lemma claims")
    lemma.add_argument("--p", type=int, required=True)
    lemma.add_argument("--i", type=int, required=True)
    lemma.add_argument("--max-level", type=int, required=True)
    lemma.add_argument("--coeff", help="coefficient ring for claim (1) (default gf:<p>)")
    wit = pr.add_parser("witness", parents=[common], help="essential-extension witnesses")
    wit.add_argument("--p", type=int, required=True)
    wit.add_argument("--i", type=int, required=True)
    wit.add_argument("--coeff", help="coefficient ring (default gf:<p>)")
    wit.add_argument("--a", help="JSON list of [num, level, coeff] triples")
    wit.add_argument("--b", help="JSON list of [num, level, coeff] triples")
    wit.add_argument("--random", action="store_true")
    wit.add_argument("--count", type=int, default=10)
    wit.add_argument("--n-max", type=int)

    verify = sub.add_parser("verify", help="theorem verification").add_subparsers(dest="action", required=True)
    va = verify.add_parser("all", parents=[common], help="every theorem report over the catalog")
    va.add_argument("--catalog", type=Path, help='JSON {"primes": [...], "groups": [...], "mixed": [[coeff, group], ...]}')
    va.add_argument("--witness-count", type=int, help="random witnesses per (ring, p, i) (default 100)")
    va.add_argument("--timings", action="store_true", help="include wall-clock timings (output is then not deterministic)")
    return parser


def _config(args) -> RunConfig:
    base = load_config(args.config) if args.config else RunConfig()
    return base.merged(
        seed=args.seed,
        max_group_order=args.max_group_order,
        max_enum_elements=args.max_enum_elements,
        catalog=getattr(args, "catalog", None),
        witness_count=getattr(args, "witness_count", None),
        timings=getattr(args, "timings", None) or None,
        output=Output.JSON if args.json else None,
    )


def _emit(cfg: RunConfig, headline: str, payload: dict) -> None:
    if cfg.output is Output.JSON:
        print(dumps(payload))
        return
    print(headline)
    for key, value in payload.items():
        text = value if isinstance(value, str) else json.dumps(value, sort_keys=True, default=str)
        print(f"  {key}: {text}")


def _ambient(args, cfg: RunConfig) -> GroupAlgebra:
    return GroupAlgebra(parse_coeff_spec(args.coeff), parse_group_spec(args.group, cfg.max_group_order))


def _prufer_literal(text: str, ring, p: int) -> prufer.PruferGrElem:
    try:
        triples = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad element literal: {exc.msg}", text, exc.pos) from None
    if not isinstance(triples, list) or not all(isinstance(t, list) and len(t) == 3 for t in triples):
        raise ParseError("expected a list of [num, level, coeff] triples", text, 0)
    mapping: dict = {}
    for num, level, c in triples:
        g = prufer.PruferElem.of(p, int(num), int(level))
        mapping[g] = mapping.get(g, 0) + int(c)
    return prufer.PruferGrElem.of(ring, p, mapping)


def cmd_group_info(args, cfg):
    g = parse_group_spec(args.spec, cfg.max_group_order)
    orders = element_orders(g)
    primes = sorted({q for q in prime_factors(g.order)} | {2, 3, 5})
    payload = {
        "group": args.spec,
        "order": g.order,
        "abelian": g.is_abelian,
        "element_orders": {g.names[x]: orders[x] for x in range(g.order)},
        "p_group": {str(q): is_p_group(g, q) for q in primes},
    }
    _emit(cfg, f"{args.spec}: order {g.order}, {'abelian' if g.is_abelian else 'non-abelian'}", payload)
    return EXIT_OK


def cmd_gr(args, cfg):
    amb = _ambient(args, cfg)
    cap = cfg.max_enum_elements
    action = args.action
    if action == "local":
        verdict = is_local_ring(amb, cap)
        headline = f"{amb}: {'local' if verdict.local else 'not local'}"
        if verdict.idempotent is not None:
            headline += f"; idempotent witness {verdict.idempotent}"
        _emit(cfg, headline, verdict.to_json())
    elif action == "radical":
        cert = jacobson_radical(amb, args.strategy, cap)
        _emit(cfg, f"{amb}: dim J = {cert.radical.dim}", cert.to_json())
    elif action == "socle":
        soc = right_socle(amb, cap)
        _emit(cfg, f"{amb}: right socle of dim {soc.dim}", soc.to_json())
    elif action == "omega":
        om = omega(amb)
        payload = om.to_json() if amb.ring.is_field else {"dim": amb.dim - 1}
        if amb.ring.is_field:
            payload["nilpotency_index"] = nilpotency_index(om)
        _emit(cfg, f"{amb}: omega of dim {amb.dim - 1}", payload)
    elif action == "idempotents":
        rows = []
        for x in range(amb.dim):
            if x == amb.group.identity:
                continue
            try:
                ci = idempotent_from_cyclic(amb, x)
            except AlgebraError as exc:
                rows.append({"x": amb.group.names[x], "error": exc.code})
                continue
            rows.append({
                "x": amb.group.names[x], "e_H": str(ci.element), "complement": str(ci.complement),
                "idempotent": ci.idempotent, "complement_idempotent": ci.complement_idempotent, "trivial": ci.trivial,
            })
        found = find_nontrivial_idempotent(amb, cap)
        payload = {"cyclic": rows, "first_nontrivial": None if found is None else str(found)}
        _emit(cfg, f"{amb}: first nontrivial idempotent {found if found is not None else 'none'}", payload)
    elif action == "frobenius":
        gram, ok = frobenius_gram(amb)
        _emit(cfg, f"{amb}: Frobenius form {'nondegenerate' if ok else 'degenerate'}",
              {"nondegenerate": ok, "gram": gram.tolist()})
    elif action == "annihilator":
        gens = [s.strip() for s in args.subgroup.split(",") if s.strip()]
        h = subgroup_generated(amb.group, [amb.group.index(int(s) if s.isdigit() else s) for s in gens])
        ann, total, inside = annihilator_witness(amb, h)
        payload = {
            "subgroup": [amb.group.names[x] for x in h.elements],
            "annihilator": ann.to_json(),
            "sum_of_subgroup": str(total),
            "contains_sum": inside,
        }
        _emit(cfg, f"{amb}: l.ann(omega(H)) of dim {ann.dim}, contains sum: {inside}", payload)
        return EXIT_OK if inside and not ann.is_zero() else EXIT_REFUTED
    return EXIT_OK


def cmd_laurent_unit(args, cfg):
    x = parse_laurent(args.poly, args.p)
    cert = lp_is_unit(x)
    payload = cert.to_json()
    payload["polynomial"] = str(x)
    window = inverse_in_window(x)
    payload["window_inverse"] = None if window is None else str(window)
    _emit(cfg, f"{x} over GF({args.p}): {'unit' if cert.unit else 'not a unit'}", payload)
    return EXIT_OK if cert.unit == (window is not None) else EXIT_REFUTED


def cmd_prufer_lemma(args, cfg):
    ring = parse_coeff_spec(args.coeff) if args.coeff else gf(args.p)
    size = ring.modulus ** (args.p ** (args.i + 1))
    if size > cfg.max_enum_elements:
        raise SizeLimitExceeded(f"claim (1) enumerates {size} elements b, cap is {cfg.max_enum_elements}",
                                cfg.max_enum_elements, size)
    reports = [prufer.lemma1_sweep(ring, args.p, args.i, args.max_level),
               prufer.lemma2_sweep(args.p, args.i, max(args.max_level, 2 * args.i + 4))]
    ok = all(r.passed for r in reports)
    _emit(cfg, f"lemma sweep p={args.p} i={args.i}: {'pass' if ok else 'FAIL'}",
          {"claims": [r.to_json() for r in reports], "pass": ok})
    return EXIT_OK if ok else EXIT_REFUTED


def cmd_prufer_witness(args, cfg):
    ring = parse_coeff_spec(args.coeff) if args.coeff else gf(args.p)
    if args.random:
        rng = np.random.default_rng([cfg.seed, args.p, args.i, ring.modulus])
        pairs = [prufer.random_pair(rng, ring, args.p, args.i) for _ in range(args.count)]
    elif args.a is not None and args.b is not None:
        pairs = [(_prufer_literal(args.a, ring, args.p), _prufer_literal(args.b, ring, args.p))]
    else:
        raise ParseError("give --a and --b, or --random", "", 0)
    witnesses = [prufer.essential_witness(args.i, a, b, args.n_max).to_json() for a, b in pairs]
    _emit(cfg, f"{len(witnesses)} witness(es) over {ring}, p={args.p}, i={args.i}", {"witnesses": witnesses})
    return EXIT_OK


def cmd_verify_all(args, cfg):
    catalog = Catalog.load(cfg.catalog, cfg.max_group_order) if cfg.catalog else Catalog(max_group_order=cfg.max_group_order)
    opts = VerifyOptions(catalog, cfg.max_enum_elements, cfg.seed, cfg.witness_count, cfg.timings)
    result = verify_all(opts)
    if cfg.output is Output.JSON:
        print(dumps(result))
    else:
        for rep in result["reports"]:
            s = rep["summary"]
            print(f"{rep['theorem_id']:3} {rep['verdict']:4}  {s['agree']}/{s['instances']} agree, "
                  f"{s['skipped']} skipped  {rep['claim']}")
            for inst in rep["instances"]:
                if not inst["agree"]:
                    print(f"      {'skipped' if inst['skipped'] else 'DISAGREE'}: {inst['ambient']}")
        print(f"overall: {result['verdict']} ({result['disagreements']} disagreements)")
    return EXIT_OK if result["disagreements"] == 0 else EXIT_REFUTED


HANDLERS = {
    ("group", "info"): cmd_group_info,
    ("laurent", "unit"): cmd_laurent_unit,
    ("prufer", "lemma"): cmd_prufer_lemma,
    ("prufer", "witness"): cmd_prufer_witness,
    ("verify", "all"): cmd_verify_all,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        handler = cmd_gr if args.command == "gr" else HANDLERS[(args.command, args.action)]
        return handler(args, cfg)
    except SizeLimitExceeded as exc:
        print(f"error [{exc.code}]: {exc} (cap {exc.cap})", file=sys.stderr)
        return EXIT_CAP
    except ParseError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WitnessSearchExhausted as exc:
        print(f"error [{exc.code}]: {exc}; {json.dumps(exc.diagnostics)}", file=sys.stderr)
        return EXIT_REFUTED
    except AlgebraError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
