"""K_0 through the truncated models, the brute-force oracle, and the
comparison maps."""

import pytest

from kderiv import ktheory as kt
from kderiv.basecat import VectIso, WaldhausenStructure
from kderiv.derivator import represent


BASE = VectIso(2)
D = represent(BASE)


def test_k0_models_collapse_for_vect():
    # maps to zero are allowed cofiber data, so every class dies
    for model in ("s", "bisimplicial", "derivator"):
        res = kt.k0(model, D, 1)
        assert res.invariants.is_trivial(), model


def test_k0_oracle_collapses_for_vect():
    res = kt.k0_oracle(represent(BASE), 1)
    assert res.invariants.is_trivial()


def test_k0_unknown_model():
    with pytest.raises(ValueError):
        kt.k0("nerve", D, 1)
    with pytest.raises(ValueError):
        kt.k0("waldhausen", D, 1)


def test_oracle_comparison_vect():
    res = kt.k0("s", D, 1)
    oracle = kt.k0_oracle(represent(BASE), 1)
    comp = kt.oracle_comparison(res, oracle, BASE)
    assert comp.verdict == "iso"
    js = comp.to_json()
    assert js["comparison"].endswith("s")
    assert js["verdict"] == "iso"


def test_waldhausen_k0_rank():
    W = WaldhausenStructure(BASE, "monos")
    res = kt.k0("waldhausen", W, 1)
    assert res.invariants.factors == []
    assert res.invariants.free_rank == 1
    oracle = kt.k0_oracle(W, 1)
    assert oracle.invariants == res.invariants
    comp = kt.oracle_comparison(res, oracle, BASE)
    assert comp.verdict == "iso"
    # the oracle certificate is the dimension up to a global sign
    certs = {oracle.reps[g]: free for g, (tors, free) in
             oracle.certificate.items()}
    eps = next(v[0] for o, v in certs.items() if o)
    assert eps in (1, -1)
    assert all(v == (eps * o,) for o, v in certs.items())


def test_iota_iso():
    rep = kt.iota(D, 1)
    assert rep.verdict == "iso"


def test_mu_and_factorization():
    assert kt.mu_ob(D, 1).verdict == "iso"
    assert kt.mu(D, 1).verdict == "iso"
    assert kt.mu_factorization_check(D, 1)


def test_agreement_bound_1():
    W = WaldhausenStructure(BASE, "all-maps")
    rep = kt.agreement(W, 1)
    assert rep.verdict == "iso"
    assert rep.levelwise_bijection


def test_L_construction():
    out = kt.L_construction(D, 1, 1)
    for lvl in out["levels"].values():
        assert lvl.invariants.is_trivial()
    for rep in out["operators"]:
        assert rep.verdict == "iso", rep.name
    assert out["iota_F"].verdict == "iso"


def test_k0result_json():
    res = kt.k0("s", D, 1)
    js = res.to_json()
    assert js["model"] == "s"
    assert js["bounds"] == {"bound": 1, "N": 2}
    assert "invariant_factors" in js and "certificate" in js
