import json

import pytest

from chromalab import claims
from chromalab.claims import (AuditRow, audit_bipartite_bounds, audit_family,
                              claimed_value, mismatch_keys, registry,
                              render_report)
from chromalab.errors import DomainError

EXPECTED_CLAIM_IDS = {
    "complete.sum", "complete.product",
    "complete_bipartite.sum", "complete_bipartite.product",
    "star.sum", "star.product",
    "bistar.sum", "bistar.product",
    "wheel.chi", "wheel.chi_line", "wheel.sum", "wheel.product",
    "helm.chi", "helm.chi_line", "helm.sum", "helm.product",
    "fan.chi_line",
    "fan.sum.statement", "fan.product.statement",
    "fan.sum.proof", "fan.product.proof",
}


def _claim(cid):
    return next(c for c in registry() if c.id == cid)


def test_registry_checklist():
    reg = registry()
    assert {c.id for c in reg} == EXPECTED_CLAIM_IDS
    assert len(reg) == len(EXPECTED_CLAIM_IDS) == 21
    assert all(c.citation for c in reg)
    assert all(c.quantity in claims.QUANTITIES for c in reg)
    # the fan sum/product conflict is carried as two rival claims each
    assert len([c for c in reg if c.family == "fan" and c.quantity == "sum"]) == 2
    assert len([c for c in reg if c.family == "fan" and c.quantity == "product"]) == 2


def test_claimed_value_examples():
    assert claimed_value(_claim("complete.sum"), (6,)) == 11
    assert claimed_value(_claim("complete.sum"), (7,)) == 14
    assert claimed_value(_claim("helm.product"), (5,)) == 15
    assert claimed_value(_claim("wheel.chi_line"), (4,)) == 3
    assert claimed_value(_claim("bistar.sum"), (2, 3)) == 5
    # outside the claim's domain -> undefined marker
    assert claimed_value(_claim("complete.sum"), (1,)) is None
    assert claimed_value(_claim("wheel.chi"), (3,)) is None
    with pytest.raises(DomainError):
        claimed_value(_claim("bistar.sum"), (2,))


def test_audit_wheel_all_match():
    rows = audit_family("wheel", 8)
    assert rows and all(r.verdict == claims.MATCH for r in rows)


def test_audit_bistar_mismatches_with_corrected_value():
    rows = audit_family("bistar", 4)
    by_quantity = {}
    for r in rows:
        by_quantity.setdefault(r.claim_id, []).append(r)
    for r in by_quantity["bistar.sum"]:
        params = dict(r.params)
        assert r.verdict == claims.MISMATCH
        assert r.exact == 3 + max(params["m"], params["n"])
    for r in by_quantity["bistar.product"]:
        assert r.verdict == claims.MISMATCH


def test_audit_complete_matches():
    rows = audit_family("complete", 6)
    assert all(r.verdict == claims.MATCH for r in rows)
    assert len(rows) == 2 * 5  # two claims, n = 2..6


def test_audit_rows_are_deterministic_and_keyed():
    a = audit_family("fan", 4)
    b = audit_family("fan", 4)
    assert a == b
    assert a[0].key.startswith("fan.")
    assert all("n=" in r.key for r in a)


def test_audit_unknown_family():
    with pytest.raises(DomainError):
        audit_family("gear", 5)


def test_audit_budget_marks_rows():
    rows = audit_family("wheel", 5, budget_limit=1)
    assert rows and all(r.verdict == claims.BUDGET_EXCEEDED for r in rows)
    assert mismatch_keys(rows) == []


def test_bipartite_bounds_flags_only_k2():
    rows = audit_bipartite_bounds(5)
    bad = [r for r in rows if r.verdict == claims.MISMATCH]
    assert {r.key for r in bad} == {
        "bipartite.sum_bounds[order=2,edges=0-1]",
        "bipartite.product_bounds[order=2,edges=0-1]",
    }
    k2_sum = next(r for r in bad if r.claim_id == "bipartite.sum_bounds")
    assert k2_sum.exact == 3  # chi = 2, chi' = 1
    # P_4 appears and matches: sum 4 within [4, 2 + max(2, 2)]
    p4 = next(r for r in rows if r.claim_id == "bipartite.sum_bounds"
              and dict(r.params)["edges"] == "0-1;1-2;2-3")
    assert p4.verdict == claims.MATCH and p4.exact == 4
    # K_{2,3}: sum 5 within [4, 2 + 3]
    k23 = next(r for r in rows if r.claim_id == "bipartite.sum_bounds"
               and dict(r.params)["edges"] == "0-2;0-3;0-4;1-2;1-3;1-4")
    assert k23.verdict == claims.MATCH and k23.exact == 5


def test_bipartite_bounds_order_cap():
    with pytest.raises(DomainError):
        audit_bipartite_bounds(8)


def test_render_report_formats():
    assert render_report([], "csv") == "claim,params,exact,claimed,verdict,citation\n"
    row = AuditRow("wheel.chi", (("n", 4),), 4, 4, claims.MATCH, "chi=0", "c")
    md = render_report([row], "markdown")
    assert md.splitlines()[0] == "| claim | params | exact | claimed | verdict | citation |"
    assert "| MATCH |" in md
    payload = json.loads(render_report([row, row], "json"))
    assert len(payload) == 2
    assert payload[0]["params"] == {"n": 4}
    with pytest.raises(DomainError):
        render_report([], "xml")
