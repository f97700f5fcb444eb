import json

import pytest

from quadbench.claims import (DEFAULT_FIELDS, check_chain, corrected_chain, filter_report, render_report,
                              run_claims, verify_witness)
from quadbench.classgroup import class_group
from quadbench.errors import EmptyConfig
from quadbench.ideals import class_order, dual
from quadbench.outcome import CLAIM_IDS, FAILS, HOLDS, OUT_OF_SCOPE, UNDECIDED, ClaimOutcome
from quadbench.quadfield import QuadraticField


@pytest.fixture(scope="module")
def report():
    return run_claims(DEFAULT_FIELDS)


def test_every_cell_present(report):
    assert len(report.outcomes) == len(CLAIM_IDS) * len(DEFAULT_FIELDS)
    order = [(o.claim_id, o.d) for o in report.sorted_outcomes()]
    assert order == sorted(order, key=lambda k: (CLAIM_IDS.index(k[0]), k[1]))


def test_no_undecided_at_default_bounds(report):
    assert not [o for o in report.outcomes if o.status == UNDECIDED]


def test_fails_witnesses_reverify(report):
    fails = [o for o in report.outcomes if o.status == FAILS]
    assert fails
    assert all(verify_witness(o) for o in fails)


def test_verdicts_against_genus_theory(report):
    for d in DEFAULT_FIELDS:
        C = class_group(QuadraticField(d))
        # conjugation inverts classes, so fixed nontrivial classes exist iff h is even
        assert report.get("P2.2", d).status == (FAILS if C.h % 2 == 0 else HOLDS)
        assert report.get("CHAIN-1", d).status == (FAILS if C.h > 1 else HOLDS)
        if d < 0:
            # ramified primes generate exactly the 2-torsion
            elementary = all(x == 2 for x in C.divisors)
            assert report.get("L1.2", d).status == (HOLDS if elementary else FAILS)
        assert report.get("P2.1", d).status == OUT_OF_SCOPE
        for cid in ("L1.3", "UFD-IFF", "T2.3", "T2.4", "T2.5", "T3.1"):
            assert report.get(cid, d).status == HOLDS, (cid, d)


def test_remark_verdicts(report):
    got = {d: report.get("REMARK", d).status for d in DEFAULT_FIELDS}
    assert {d for d, s in got.items() if s == FAILS} == {2, 3, 5, 7}
    assert all(s == OUT_OF_SCOPE for d, s in got.items() if d not in (2, 3, 5, 7))


def test_chain_corrected_statement():
    for d in (-5, -23, -14):
        C = class_group(QuadraticField(d))
        M = dual(C.reps[1])
        assert corrected_chain(M, class_order(M))
        w = check_chain(QuadraticField(d)).witness
        assert w["O_K_in_M"] and w["M_in_M2"] and not w["M2_in_M"]


def test_json_schema(report):
    data = json.loads(render_report(report, "json"))
    assert set(data) == {"version", "config", "outcomes"}
    assert data["config"]["fields"] == list(DEFAULT_FIELDS)
    for o in data["outcomes"]:
        assert set(o) <= {"claim_id", "d", "status", "witness", "reason"}
        assert o["status"] in (HOLDS, FAILS, UNDECIDED, OUT_OF_SCOPE)


def test_text_table(report):
    text = render_report(report, "text")
    lines = text.splitlines()
    assert lines[0].split() == ["CLAIM", "FIELD", "STATUS", "WITNESS-SUMMARY"]
    assert len(lines) == 1 + len(report.outcomes)
    assert any(line.startswith("L1.2") and "d=-23" in line and "FAILS" in line for line in lines)


def test_text_and_json_agree(report):
    data = json.loads(render_report(report, "json"))
    rows = [line.split()[:3] for line in render_report(report, "text").splitlines()[1:]]
    assert rows == [[o["claim_id"], f"d={o['d']}", o["status"]] for o in data["outcomes"]]


def test_filter_and_empty():
    rep = run_claims([-5, -23])
    sub = filter_report(rep, [-23])
    assert {o.d for o in sub.outcomes} == {-23}
    with pytest.raises(EmptyConfig):
        run_claims([])


def test_outcome_validation():
    with pytest.raises(ValueError):
        ClaimOutcome("NOPE", -5, HOLDS)
    with pytest.raises(ValueError):
        ClaimOutcome("P2.1", -5, OUT_OF_SCOPE)
    with pytest.raises(ValueError):
        ClaimOutcome("L1.2", -5, FAILS)


def test_removing_a_field_removes_only_its_rows():
    both = run_claims([-5, -23])
    one = run_claims([-5])
    assert [o.to_json() for o in filter_report(both, [-5]).sorted_outcomes()] == \
        [o.to_json() for o in one.sorted_outcomes()]


def test_empty_filtered_report_renders():
    rep = filter_report(run_claims([-5]), [])
    assert json.loads(render_report(rep, "json"))["outcomes"] == []
    assert render_report(rep, "text").splitlines() == ["CLAIM  FIELD  STATUS  WITNESS-SUMMARY"]
