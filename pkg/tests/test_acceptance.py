"""Acceptance suite: twelve criteria, each reported on its own PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the report lines
next to the test names; they are printed even when output is captured.
"""

from __future__ import annotations

import subprocess
import sys
from fractions import Fraction

import numpy as np

from grouprings import prufer
from grouprings.coeffs import gf, zmod
from grouprings.errors import CharDividesOrder, WitnessSearchExhausted
from grouprings.groupring import (
    GroupAlgebra,
    Side,
    double_annihilator_check,
    find_nontrivial_idempotent,
    frobenius_gram,
    idempotent_from_cyclic,
    is_local_ring,
    jacobson_radical,
    left_annihilator,
    nilpotency_index,
    omega,
    omega_sub,
    principal_left_ideals,
    right_socle,
)
from grouprings.laurent import inverse_in_window, lp_is_unit, parse_laurent
from grouprings.structures import element_order, is_p_group, parse_group_spec, subgroup_generated
from grouprings.theorems import DEFAULT_GROUPS

import oracles

PRIMES = (2, 3, 5)
GROUPS = {spec: parse_group_spec(spec) for spec in DEFAULT_GROUPS}
# order-16 2-groups for the structural part of the radical identity
EXTRA_P_GROUPS = ("c16", "c4xc4", "c2xc8", "c2xc2xc2xc2", "d16", "c2xd8", "c2xq8")


def report(capsys, number: int, failures: list, description: str) -> None:
    verdict = "PASS" if not failures else "FAIL"
    with capsys.disabled():
        print(f"\nCRITERION {number}: {verdict}: {description}")
        for item in failures[:10]:
            print(f"    {item}")
    assert not failures, failures


def all_subgroups(group):
    """Every subgroup, grown one generator at a time from the trivial one."""
    seen = {}
    frontier = [subgroup_generated(group, [])]
    while frontier:
        nxt = []
        for sub in frontier:
            if sub.elements in seen:
                continue
            seen[sub.elements] = sub
            for x in range(group.order):
                if x not in sub.elements:
                    nxt.append(subgroup_generated(group, list(sub.elements) + [x]))
        frontier = nxt
    return list(seen.values())


def test_criterion_01_theorem1_biconditional(capsys):
    failures = []
    for p in PRIMES:
        for spec, group in GROUPS.items():
            got = is_local_ring(GroupAlgebra(gf(p), group)).local
            if got != is_p_group(group, p):
                failures.append(f"GF({p})[{spec}]: local={got}")
    for coeff, spec, expected in ((zmod(4), "c2", True), (zmod(9), "c3", True), (zmod(6), "c2", False)):
        got = is_local_ring(GroupAlgebra(coeff, parse_group_spec(spec))).local
        if got != expected:
            failures.append(f"{coeff}[{spec}]: local={got}, expected {expected}")
    report(capsys, 1, failures, "A[G] local iff G is a p-group (45 field instances, 3 mixed)")


def test_criterion_02_radical_is_omega(capsys):
    failures = []
    checked = 0
    specs = list(DEFAULT_GROUPS) + list(EXTRA_P_GROUPS)
    for p in (2, 3):
        for spec in specs:
            group = GROUPS.get(spec) or parse_group_spec(spec)
            if not is_p_group(group, p) or group.order > 16:
                continue
            amb = GroupAlgebra(gf(p), group)
            cert = jacobson_radical(amb, strategy="structural")
            checked += 1
            if cert.radical != omega(amb):
                failures.append(f"GF({p})[{spec}]: structural radical differs from omega")
            if nilpotency_index(cert.radical) is None:
                failures.append(f"GF({p})[{spec}]: radical not nilpotent")
            if p ** group.order <= 2**14 and group.order <= 8:
                if jacobson_radical(amb, strategy="exhaustive").radical != omega(amb):
                    failures.append(f"GF({p})[{spec}]: exhaustive radical differs from omega")
    if checked < 15:
        failures.append(f"only {checked} p-group instances")
    report(capsys, 2, failures, f"J(GF(p)[G]) = omega(G) on {checked} p-group instances")


def test_criterion_03_semisimple_side(capsys):
    failures = []
    count = 0
    for p in PRIMES:
        for spec, group in GROUPS.items():
            if group.order % p == 0:
                continue
            count += 1
            amb = GroupAlgebra(gf(p), group)
            if not jacobson_radical(amb).radical.is_zero():
                failures.append(f"GF({p})[{spec}]: nonzero radical")
            if group.order > 1:
                e = find_nontrivial_idempotent(amb)
                if e is None or e * e != e or e.is_zero() or e == amb.one():
                    failures.append(f"GF({p})[{spec}]: no nontrivial idempotent ({e})")
    report(capsys, 3, failures, f"J = 0 and a nontrivial idempotent when p does not divide |G| ({count} instances)")


def test_criterion_04_cyclic_idempotents(capsys):
    failures = []
    count = 0
    for p in PRIMES:
        for spec, group in GROUPS.items():
            amb = GroupAlgebra(gf(p), group)
            for x in range(group.order):
                q = element_order(group, x)
                try:
                    ci = idempotent_from_cyclic(amb, x)
                except CharDividesOrder:
                    if q % p:
                        failures.append(f"GF({p})[{spec}] x={group.names[x]}: unexpected error for q={q}")
                    continue
                count += 1
                if q % p == 0:
                    failures.append(f"GF({p})[{spec}] x={group.names[x]}: no error although {p} | {q}")
                if ci.element * ci.element != ci.element:
                    failures.append(f"GF({p})[{spec}] x={group.names[x]}: not idempotent")
                if ci.complement * ci.complement != ci.complement:
                    failures.append(f"GF({p})[{spec}] x={group.names[x]}: complement not idempotent")
                if x != group.identity and (ci.element.is_zero() or ci.element == amb.one()):
                    failures.append(f"GF({p})[{spec}] x={group.names[x]}: trivial idempotent")
    report(capsys, 4, failures, f"cyclic idempotents e_H valid on {count} (x, q) pairs, errors exactly when p | q")


def test_criterion_05_laurent_nonunit(capsys):
    failures = []
    for p in (2, 3, 5, 7):
        poly = parse_laurent("1 + x - x^2", p)
        if lp_is_unit(poly).unit:
            failures.append(f"GF({p}): monomial rule says unit")
        found = inverse_in_window(poly, -8, 8)
        if found is not None:
            failures.append(f"GF({p}): window search found {found}")
    report(capsys, 5, failures, "1 + x - x^2 is not a unit of GF(p)[x, 1/x], p in {2,3,5,7}")


def test_criterion_06_annihilator_of_omega_h(capsys):
    failures = []
    count = 0
    for p in (2, 3):
        for spec, group in GROUPS.items():
            amb = GroupAlgebra(gf(p), group)
            for sub in all_subgroups(group):
                count += 1
                ann = left_annihilator(omega_sub(amb, sub, Side.RIGHT))
                norm = amb.sum_of(sub.elements)
                if ann.is_zero() or norm not in ann:
                    failures.append(f"GF({p})[{spec}] H={sub.elements}: dim {ann.dim}, contains sum={norm in ann}")
    report(capsys, 6, failures, f"l(omega(H)) is nonzero and contains the sum of H ({count} subgroup instances)")


def test_criterion_07_socle_and_chain(capsys):
    failures = []
    count = 0
    for p in PRIMES:
        for spec, group in GROUPS.items():
            if not is_p_group(group, p):
                continue
            count += 1
            amb = GroupAlgebra(gf(p), group)
            soc = right_socle(amb)
            if soc.dim != 1 or amb.norm_element() not in soc:
                failures.append(f"GF({p})[{spec}]: socle dim {soc.dim}")
    dims = [omega(GroupAlgebra(gf(2), parse_group_spec(s))).dim for s in ("c2", "c4", "c8")]
    if dims != [1, 3, 7]:
        failures.append(f"omega dims along C2, C4, C8: {dims}")
    report(capsys, 7, failures, f"socle = span of the group sum on {count} p-group instances; omega dims 1 < 3 < 7")


def test_criterion_08_frobenius_and_duality(capsys):
    failures = []
    for p in PRIMES:
        for spec, group in GROUPS.items():
            _, ok = frobenius_gram(GroupAlgebra(gf(p), group))
            if not ok:
                failures.append(f"GF({p})[{spec}]: degenerate Frobenius form")
    ideals = 0
    for spec in ("c4", "s3"):
        amb = GroupAlgebra(gf(2), parse_group_spec(spec))
        gens = np.array(oracles.all_elements(2, amb.dim), dtype=np.int64)
        for ideal in principal_left_ideals(amb, gens):
            ideals += 1
            if not double_annihilator_check(ideal):
                failures.append(f"GF(2)[{spec}]: l(r(L)) != L for dim {ideal.dim}")
    report(capsys, 8, failures, f"Frobenius forms nondegenerate; l(r(L)) = L for {ideals} principal left ideals")


def test_criterion_09_lemma_sweeps(capsys):
    failures = []
    sweeps = [prufer.lemma1_sweep(gf(2), 2, i, 6) for i in (1, 2)]
    sweeps += [prufer.lemma2_sweep(p, i, 2 * i + 6) for p in (2, 3) for i in (0, 1)]
    for sweep in sweeps:
        if not sweep.passed:
            failures.append(f"{sweep.name}: {sweep.violations} violations of {sweep.instances}")
    total = sum(s.instances for s in sweeps)
    report(capsys, 9, failures, f"both lemma sweeps pass ({total} instances)")


def test_criterion_10_essentiality_witness(capsys):
    failures = []
    paths: dict[str, int] = {}
    for ring in (gf(2), gf(3), zmod(4)):
        for p in (2, 3):
            for i in (0, 1):
                rng = np.random.default_rng([2024, ring.modulus, p, i])
                for _ in range(1000):
                    a, b = prufer.random_pair(rng, ring, p, i)
                    try:
                        w = prufer.essential_witness(i, a, b)
                    except WitnessSearchExhausted as exc:
                        failures.append(f"{ring} p={p} i={i}: exhausted {exc}")
                        continue
                    if w.result.is_zero():
                        failures.append(f"{ring} p={p} i={i}: zero result")
                    paths[w.path] = paths.get(w.path, 0) + 1
                a, b = prufer.fallback_instance(ring, p, i)
                w = prufer.essential_witness(i, a, b)
                if w.path != "fallback" or w.n0 != i + 1 or w.result.is_zero():
                    failures.append(f"{ring} p={p} i={i}: constructed instance gave {w.path}({w.n0})")
    report(capsys, 10, failures, f"12000 random witnesses verified {paths}; fallback n0 = i + 1 in all 12 configurations")


def test_criterion_11_pattern_closed_form(capsys):
    failures = []
    for p in (2, 3):
        pattern = oracles.pattern_by_enumeration(p, 8)
        for g in prufer.elements_up_to(p, 8):
            value = Fraction(g.num, p**g.level) if g.level else Fraction(0)
            if prufer.f_eval(g) != int(value in pattern):
                failures.append(f"p={p} g={g}: closed form {prufer.f_eval(g)}")
    report(capsys, 11, failures, "closed-form f matches the (k, l) enumeration up to level 8, p in {2,3}")


def test_criterion_12_determinism(capsys):
    cmd = [sys.executable, "-m", "grouprings", "verify", "all", "--json", "--seed", "0"]
    runs = [subprocess.run(cmd, capture_output=True, timeout=120) for _ in range(2)]
    failures = [f"exit {r.returncode}: {r.stderr.decode()[-300:]}" for r in runs if r.returncode != 0]
    if runs[0].stdout != runs[1].stdout:
        failures.append("outputs differ")
    if not runs[0].stdout:
        failures.append("empty output")
    report(capsys, 12, failures, f"verify all --json is byte-identical across runs ({len(runs[0].stdout)} bytes)")
