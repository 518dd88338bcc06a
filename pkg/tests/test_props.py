from fractions import Fraction

import pytest

from qgring.algebra import hat
from qgring.catalog import build_named, build_spec
from qgring.errors import NotPGroup, UnknownWitness
from qgring.groups import is_normal, join, subgroup_generated
from qgring.props import (
    abelian_invariants,
    classify_ssn,
    curated_witness,
    is_hamiltonian,
    is_ncn,
    is_sn,
    is_ssn,
    nd_verdict,
    nd_witness_search,
    verify_witness,
)
from qgring.shoda import metabelian_pcis


def test_is_sn_examples():
    G = build_named("D12")
    assert not is_sn(G)
    # the classic failing pair: Y = <b>, N = <a^3>
    Y = subgroup_generated(G, (G.element("b"),))
    N = subgroup_generated(G, (G.word("a^3"),))
    assert is_normal(G, N) and not (N <= Y)
    assert not is_normal(G, join(G, Y, N))
    assert is_sn(build_named("C3C3rC8"))
    assert not is_sn(build_named("C2xD8"))
    assert is_sn(build_named("Ex38K"))
    assert not is_sn(build_named("Ex37G1"))


def test_is_ssn_examples():
    assert not is_ssn(build_named("D8cpD8"))
    assert is_ssn(build_named("A5"))
    assert not is_ssn(build_named("C3C3rC8"))
    assert is_ssn(build_named("C3rC8"))


def test_is_ncn():
    assert is_ncn(build_named("Q16"))
    assert not is_ncn(build_named("C2xD8"))
    assert is_ncn(build_named("Q8"))
    with pytest.raises(NotPGroup):
        is_ncn(build_spec("C(6)"))


def test_is_hamiltonian():
    assert is_hamiltonian(build_named("Q8"))
    assert is_hamiltonian(build_spec("X(Q(8),C(3))"))
    assert not is_hamiltonian(build_named("D8"))
    assert not is_hamiltonian(build_spec("C(4)"))


def test_abelian_invariants():
    G = build_spec("C(6)")
    full = subgroup_generated(G, (G.element("x"),))
    assert abelian_invariants(G, full) == [2, 3]
    G = build_spec("X(Q(8),C(15))")
    mask = 0
    for g in range(G.order):
        if G.element_order(g) % 2 == 1:
            mask |= 1 << g
    from qgring.groups import subgroup_from_mask
    odd = subgroup_from_mask(G, mask)
    assert abelian_invariants(G, odd) == [3, 5]


def test_classify_ssn_taxonomy():
    assert classify_ssn(build_named("A4")).tag == "SolvableTypeI"
    assert classify_ssn(build_named("A4")).params == \
        {"p": 2, "n": 2, "q_order": 3}
    cls = classify_ssn(build_named("C3rC8"))
    assert cls.tag == "SolvableTypeII"
    assert cls.params == {"p": 3, "q": 2, "k": 3, "k0": 1, "r0": 2}
    assert classify_ssn(build_named("D12")).tag == "NotSSN"
    assert classify_ssn(build_named("A5")).tag == "A5"
    assert classify_ssn(build_spec("C(12)")).tag == "Abelian"
    cls = classify_ssn(build_spec("X(Q(8),C(3))"))
    assert cls.tag == "Hamiltonian" and cls.params["odd_invariants"] == [3]
    cls = classify_ssn(build_named("Q16"))
    assert cls.tag == "PGroupNCN" and cls.params["bj"] == "BJ6"
    assert classify_ssn(build_named("BJ9")).params["bj"] == "BJ9"
    assert classify_ssn(build_named("C9rC3")).params["bj"] == "BJ1"
    assert classify_ssn(build_named("Q8xC4")).params["bj"] == "BJ3"


def test_curated_witness_assertions():
    for name, kwargs in [("D12", {}), ("Ex3.8", {}), ("BJ3", {"n": 3}),
                         ("BJ9", {}), ("A5", {})]:
        w = curated_witness(name, **kwargs)
        assert all(verify_witness(w).values()), name
    with pytest.raises(UnknownWitness):
        curated_witness("nope")
    with pytest.raises(UnknownWitness):
        curated_witness("BJ3", n=2)


def test_a5_witness_coefficient_is_exactly_one_half():
    w = curated_witness("A5")
    b = w.group.element("(1,2)(3,4)")
    assert (w.alpha * w.e).coeff(b) == Fraction(1, 2)


def test_bj9_coset_obstruction():
    # hat(<b>) * hat(<a>) = hat(<a,b>), not in 2 Z[G]
    G = build_named("BJ9")
    a, b = G.element("a"), G.element("b")
    prod = hat(subgroup_generated(G, (b,))) * hat(subgroup_generated(G, (a,)))
    assert prod == hat(subgroup_generated(G, (a, b)))
    assert any(v % 2 for v in prod.nums)


def test_witness_search_d12():
    G = build_named("D12")
    pcis = [sp.e for sp in metabelian_pcis(G)]
    found, spent = nd_witness_search(G, pcis, budget=5000)
    assert found is not None
    alpha, e = found
    assert alpha.is_integral() and alpha.is_nilpotent()
    assert e.is_central() and e.is_idempotent()
    assert not (alpha * e).is_integral()


def test_witness_search_ex38():
    G = build_named("Ex38K")
    pcis = [sp.e for sp in metabelian_pcis(G)]
    found, _ = nd_witness_search(G, pcis, budget=50000)
    assert found is not None
    alpha, e = found
    assert not (alpha * e).is_integral()


def test_witness_search_exhausts_on_q8():
    G = build_named("Q8")
    pcis = [sp.e for sp in metabelian_pcis(G)]
    found, spent = nd_witness_search(G, pcis, budget=10 ** 6)
    assert found is None
    assert spent < 10 ** 6  # candidate space exhausted, not the budget


def test_nd_verdict_positive_and_negative():
    r = nd_verdict(build_named("Q12"), budget=2000)
    assert r.verdict == "HasND" and r.reason == "OneMatrixComponent"
    assert r.matrix_count.exact == 1
    r = nd_verdict(build_named("A4"), budget=2000)
    assert r.verdict == "HasND"
    r = nd_verdict(build_named("D12"), budget=2000)
    assert r.verdict == "NotND" and r.witness is not None
    r = nd_verdict(build_named("A5"), budget=2000)
    assert r.verdict == "NotND" and r.ssn
    r = nd_verdict(build_named("C3rC8"), budget=2000)
    assert r.verdict != "HasND"
    assert r.matrix_count.exact == 2


def test_nd_report_json():
    r = nd_verdict(build_named("Q12"), budget=100)
    d = r.to_dict(spec="Q(12)")
    assert d["group"] == "Q(12)" and d["verdict"] == "HasND"
    assert d["matrix_count"] == 1 and d["witness"] is None
    r = nd_verdict(build_named("D12"), budget=2000)
    d = r.to_dict()
    assert d["witness"] is not None and len(d["witness"]["alpha"]) == 12


def test_hamiltonian_polynomial_witness():
    from qgring.props import hamiltonian_witness
    w = hamiltonian_witness(3, 2)  # Q8 x C9
    assert w is not None and all(verify_witness(w).values())
    assert hamiltonian_witness(7, 2) is None  # ord_7(2) = 3 is odd
    r = nd_verdict(build_spec("X(Q(8),C(9))"), budget=2000)
    assert r.verdict == "NotND" and r.reason == "WitnessFound"


def test_ncn_iff_ssn_for_p_groups():
    for name in ["D8", "Q8", "Q16", "C2xD8", "D8cpD8", "D8cpQ8", "Q8xC4",
                 "BJ5", "BJ8", "Heis27", "C9rC3"]:
        G = build_named(name)
        okp, _ = G.is_p_group()
        assert okp
        assert is_ncn(G) == is_ssn(G), name
