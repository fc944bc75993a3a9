import json


from grouprings.coeffs import gf, zmod
from grouprings.structures import parse_group_spec
from grouprings.theorems import (
    Catalog,
    Entry,
    Instance,
    TheoremId,
    TheoremReport,
    VerifyOptions,
    check_prop2_finite,
    check_prop5,
    check_theorem1,
    check_theorem3_ingredients,
    check_theorem4_finite,
    dumps,
    theorem1_rhs,
    verify_all,
)


def entry(coeff, spec):
    return Entry(coeff, parse_group_spec(spec), spec)


def by_ambient(report):
    return {i.ambient: i for i in report.instances}


def test_report_invariants():
    rep = TheoremReport(TheoremId.T1, "claim")
    rep.instances += [Instance("a", True, True), Instance("b", False, True), Instance("c", None, None, skipped="cap")]
    assert rep.summary == {"instances": 3, "agree": 1, "disagree": 1, "skipped": 1}
    assert not rep.passed
    data = rep.to_json()
    assert data["verdict"] == "fail" and data["timings"] is None
    assert [i["agree"] for i in data["instances"]] == [True, False, False]


def test_theorem1_examples():
    rep = check_theorem1([entry(gf(2), "c2xc2"), entry(gf(3), "c2"), entry(zmod(4), "c2"), entry(zmod(6), "c2")])
    inst = by_ambient(rep)
    assert inst["GF(2)[c2xc2]"].lhs is True and inst["GF(2)[c2xc2]"].rhs is True
    neg = inst["GF(3)[c2]"]
    assert neg.lhs is False and neg.rhs is False
    assert neg.certificates["lhs"]["idempotent"] == [("e", 2), ("g", 2)]
    assert inst["Z/4[c2]"].lhs and inst["Z/4[c2]"].rhs
    assert not inst["Z/6[c2]"].lhs and not inst["Z/6[c2]"].rhs
    assert rep.passed and rep.out_of_scope


def test_theorem1_rhs_independent():
    assert theorem1_rhs(zmod(9), parse_group_spec("c3"))[0]
    assert not theorem1_rhs(zmod(9), parse_group_spec("c2"))[0]
    assert not theorem1_rhs(zmod(6), parse_group_spec("trivial"))[0]


def test_theorem1_skips_over_cap():
    # GF(2)[S4]: no normal Sylow 2-subgroup, degenerate trace form, 2^24 elements
    rep = check_theorem1([entry(gf(2), "s4")])
    assert rep.summary == {"instances": 1, "agree": 0, "disagree": 0, "skipped": 1}
    assert rep.instances[0].certificates["required"] == 2**24
    assert rep.passed


def test_prop2_examples():
    rep = check_prop2_finite([entry(gf(2), "c6"), entry(gf(3), "c3"), entry(gf(2), "trivial"), entry(gf(2), "s3")])
    inst = by_ambient(rep)
    assert set(inst) == {"GF(2)[c6]", "GF(3)[c3]", "GF(2)[trivial]"}
    c6 = inst["GF(2)[c6]"].certificates
    assert c6["sylow"] == {"p": 2, "G_p_order": 2, "G_0_order": 3}
    assert all(i.lhs for i in rep.instances) and rep.passed


def test_theorem3_examples():
    groups = [(s, parse_group_spec(s)) for s in ("c2", "c4", "c3xc3")]
    rep = check_theorem3_ingredients(2, groups[:2], chain=[(s, parse_group_spec(s)) for s in ("c2", "c4", "c8")])
    chain = rep.instances[-1]
    assert chain.certificates["omega_dims"] == [1, 3, 7] and chain.agree
    assert rep.instances[0].certificates["socle_dim"] == 1
    rep3 = check_theorem3_ingredients(3, groups[2:])
    cert = rep3.instances[0].certificates
    assert cert["radical_is_omega"] and cert["socle_dim"] == 1
    # the equivalence has no finite refutation surface; the report says so
    assert any("no refutation surface" in n for n in rep3.notes)


def test_theorem4_examples():
    rep = check_theorem4_finite([entry(gf(2), "c4"), entry(gf(2), "s3"), entry(gf(3), "c3")])
    inst = by_ambient(rep)
    c4 = inst["GF(2)[c4]"].certificates
    assert c4["frobenius_nondegenerate"]
    assert c4["double_annihilator"] == {"mode": "exhaustive", "generators": 16, "distinct_ideals": 5, "failures": 0}
    assert inst["GF(2)[s3]"].certificates["frobenius_nondegenerate"]
    sweep = inst["GF(3)[c3]"].certificates["annihilator_witnesses"]["subgroups"]
    assert sweep[-1] == {"subgroup": ["e", "g", "g^2"], "ann_dim": 1, "contains_sum": True}
    assert rep.passed


def test_theorem4_samples_above_cap():
    rep = check_theorem4_finite([entry(gf(3), "c2xc4")], cap=1000, seed=5)
    battery = rep.instances[0].certificates["double_annihilator"]
    assert battery["mode"] == "sampled" and battery["failures"] == 0


def test_prop5_small():
    rep = check_prop5(witness_count=5, rings=(gf(2),))
    assert rep.passed
    names = [i.ambient for i in rep.instances]
    assert "witness GF(2) p=3 i=1" in names


def test_catalog_load(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps({"primes": [2], "groups": ["c2", "s3"], "mixed": [["zmod:4", "c2"]]}))
    cat = Catalog.load(path)
    assert [e.label for e in cat.field_entries()] == ["GF(2)[c2]", "GF(2)[s3]"]
    assert [e.label for e in cat.mixed_entries()] == ["Z/4[c2]"]
    assert [s for s, _ in cat.p_groups(2)] == ["c2"]


def test_verify_all_small_catalog_is_deterministic(tmp_path):
    cat = Catalog(primes=(2, 3), groups=("trivial", "c2", "c3", "s3"), mixed=(("zmod:4", "c2"),))
    opts = VerifyOptions(catalog=cat, witness_count=3)
    first, second = dumps(verify_all(opts)), dumps(verify_all(opts))
    assert first == second
    data = json.loads(first)
    assert data["schema"] == 1 and data["verdict"] == "pass"
    assert [r["theorem_id"] for r in data["reports"]] == ["T1", "P2", "T3", "T3", "T4", "P5"]
    for rep in data["reports"]:
        assert rep["out_of_scope"] or rep["theorem_id"] == "P5"
