import itertools

import pytest

from qgring.catalog import bj1_group, build_named, build_spec
from qgring.errors import (
    BNotAbelian,
    InconsistentSpec,
    NotNormal,
    OrderCapExceeded,
    ParseError,
)
from qgring.groups import (
    FiniteGroup,
    _closure,
    center,
    conjugate_subgroup,
    derived_subgroup,
    dihedral,
    find_isomorphism,
    fingerprint,
    intersect,
    is_normal,
    join,
    maximal_abelian_over,
    metacyclic_amitsur,
    minimal_normal_subgroups_of_quotient,
    normalizer,
    order_q_matrix,
    quaternion,
    quotient,
    semidirect_vector,
    subgroup_generated,
    subgroups,
)


# -- construction invariants -------------------------------------------------


def test_trivial_group():
    G = build_spec("C(1)")
    assert G.order == 1 and G.names == ["1"]


def test_table_validation_rejects_broken_tables():
    with pytest.raises(InconsistentSpec):
        FiniteGroup([[0, 1], [1, 1]], ["1", "g"])  # not a Latin square
    with pytest.raises(InconsistentSpec):
        FiniteGroup([[1, 0], [0, 1]], ["1", "g"])  # identity not index 0
    # associative Latin square check: Z3 with a corrupted entry
    t = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    t[1][1] = 0
    t[1][2] = 2  # keep rows permutations but break associativity
    with pytest.raises(InconsistentSpec):
        FiniteGroup(t, ["1", "a", "b"])


def test_inverses_and_powers():
    G = build_named("Q8")
    for g in range(G.order):
        assert G.table[g][G.inverse[g]] == 0
        assert G.power(g, G.element_order(g)) == 0
    a = G.element("a")
    assert G.power(a, -1) == G.inverse[a]


def test_metacyclic_amitsur_relations():
    # brute-force check of all defining relations and the order formula
    G = metacyclic_amitsur(21, 16)
    assert G.order == 63
    A, B = G.element("a"), G.element("b")
    assert G.element_order(A) == 21
    assert G.power(B, 3) == G.power(A, 7)  # B^n = A^t with n=3, t=7
    assert G.conj_left(A, B) == G.power(A, 16)  # B A B^-1 = A^16
    # normal forms A^i B^j are distinct
    seen = {G.table[G.power(A, i)][G.power(B, j)]
            for i in range(21) for j in range(3)}
    assert len(seen) == 63
    # isomorphic to C7 : C9 with y x y^-1 = x^2
    assert fingerprint(G) == fingerprint(build_spec("SdCyc(7,9,2)"))


def test_quaternion_relations():
    G = quaternion(16)
    a, b = G.element("a"), G.element("b")
    assert G.element_order(a) == 8
    assert G.power(b, 2) == G.power(a, 4)
    assert G.conj_left(a, b) == G.inverse[a]


def test_bj9_presentation():
    G = build_named("BJ9")
    assert G.order == 64
    a, b, c, d = (G.element(x) for x in "abcd")
    assert G.power(a, 4) == 0 and G.power(b, 4) == 0
    assert G.table[a][b] == G.table[b][a]
    assert G.power(c, 2) == G.word("a^2*b^2")
    assert G.power(d, 2) == G.word("a^2")
    assert G.conj(a, c) == G.inverse[a]
    assert G.conj(b, c) == G.word("a^2*b^-1")
    assert G.conj(a, d) == G.word("a^-1*b^2")
    assert G.conj(b, d) == G.inverse[b]
    assert G.commutator(c, d) == 0


def test_central_product_order():
    G = build_named("D8cpD8")
    assert G.order == 32
    assert center(G).order == 2
    G2 = build_named("D8cpQ8")
    assert G2.order == 32
    assert fingerprint(G) != fingerprint(G2)


def test_central_product_rejects_bad_identification():
    from qgring.groups import central_product
    with pytest.raises(InconsistentSpec):
        central_product(dihedral(8), dihedral(8), 2)  # 2 not a unit mod 2


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        build_spec("C(251)")
    assert build_spec("C(251)", cap=300).order == 251


def test_semidirect_vector_action_convention():
    # x^c = c^-1 x c follows the action matrix
    G = build_named("C3C3rC8")
    a, b, c = G.element("a"), G.element("b"), G.element("c")
    assert G.conj(a, c) == b
    assert G.conj(b, c) == G.table[a][b]
    assert G.conj(a, G.power(c, 4)) == G.power(a, 2)  # a^(c^4) = a^2
    with pytest.raises(InconsistentSpec):
        semidirect_vector(3, 2, [[1, 0], [0, 1]], 8)  # matrix not of order 8


# -- subgroup lattice ---------------------------------------------------------


def test_subgroups_cyclic_and_quaternion():
    assert len(subgroups(build_spec("C(6)"))) == 4
    subs = subgroups(build_named("Q8"))
    assert len(subs) == 6
    assert sorted(s.order for s in subs) == [1, 2, 4, 4, 4, 8]


def test_subgroups_a5_against_two_generator_oracle():
    G = build_named("A5")
    subs = subgroups(G)
    assert len(subs) == 59
    # independent oracle: subgroups generated by at most two elements,
    # closed under pairwise joins
    masks = set()
    for x in range(G.order):
        masks.add(_closure(G, (x,)))
        for y in range(x + 1, G.order):
            masks.add(_closure(G, (x, y)))
    changed = True
    while changed:
        changed = False
        for m1, m2 in itertools.combinations(sorted(masks), 2):
            if m1 | m2 in masks:
                continue
            members = tuple(i for i in range(G.order) if (m1 | m2) >> i & 1)
            j = _closure(G, members)
            if j not in masks:
                masks.add(j)
                changed = True
    assert masks == {s.mask for s in subs}


def test_subgroup_lattice_closure_properties():
    G = build_named("D12")
    subs = subgroups(G)
    masks = {s.mask for s in subs}
    for A, B in itertools.combinations(subs, 2):
        assert join(G, A, B).mask in masks
        assert intersect(G, A, B).mask in masks
    for s in subs:
        assert G.order % s.order == 0  # Lagrange


def test_subgroup_members_closed():
    G = build_named("A4")
    for H in subgroups(G):
        mem = H.members
        assert 0 in mem
        for x in mem:
            assert G.inverse[x] in H
            for y in mem:
                assert G.table[x][y] in H


# -- structure maps -----------------------------------------------------------


def test_derived_center_normalizer():
    A4 = build_named("A4")
    der = derived_subgroup(A4)
    assert der.order == 4
    assert all(A4.element_order(g) in (1, 2) for g in der.members)
    assert center(build_named("Q8")).order == 2
    G = build_named("C3C3rC8")
    assert derived_subgroup(G).order == 9
    K = subgroup_generated(G, (G.element("a"),))
    N = normalizer(G, K)
    expected = subgroup_generated(
        G, (G.element("a"), G.element("b"), G.word("c^4")))
    assert N.mask == expected.mask


def test_quotients():
    G = build_named("C3rC8")
    for N in [s for s in subgroups(G) if is_normal(G, s)]:
        Q, proj = quotient(G, N)
        assert Q.order * N.order == G.order
        assert len(set(proj)) == Q.order
    # G/<y^2> is S3; G/<y^4> is C3 : C4 (the next tower level)
    Q2, _ = quotient(G, subgroup_generated(G, (G.word("y^2"),)))
    assert find_isomorphism(Q2, dihedral(6)) is not None
    Q4, _ = quotient(G, subgroup_generated(G, (G.word("y^4"),)))
    assert Q4.order == 12
    assert find_isomorphism(Q4, build_spec("SdCyc(3,4,2)")) is not None
    with pytest.raises(NotNormal):
        quotient(build_named("D12"),
                 subgroup_generated(build_named("D12"),
                                    (build_named("D12").element("b"),)))


def test_quotient_trivial_and_q8():
    G = build_named("Q8")
    Q, _ = quotient(G, subgroup_generated(G, tuple(range(G.order))))
    assert Q.order == 1
    Qz, _ = quotient(G, center(G))
    assert sorted(Qz.element_order(g) for g in range(Qz.order)) == [1, 2, 2, 2]


def test_derived_of_quotient_is_image_of_derived():
    for name in ["A4", "Q12", "C3C3rC8", "D12", "Q8xC4"]:
        G = build_named(name)
        der = derived_subgroup(G)
        for N in [s for s in subgroups(G) if is_normal(G, s)]:
            Q, proj = quotient(G, N)
            img = sorted({proj[g] for g in der.members})
            dq = derived_subgroup(Q)
            assert subgroup_generated(Q, tuple(img)).mask == dq.mask


def test_minimal_normal_subgroups_of_quotient():
    C4 = build_spec("C(4)")
    one = subgroup_generated(C4, ())
    mins = minimal_normal_subgroups_of_quotient(C4, one)
    assert len(mins) == 1 and mins[0].order == 2
    EA = build_spec("EA(2,2)")
    assert len(minimal_normal_subgroups_of_quotient(
        EA, subgroup_generated(EA, ()))) == 3
    G = build_named("C3C3rC8")
    H = derived_subgroup(G)
    K = subgroup_generated(G, (G.element("a"),))
    mins = minimal_normal_subgroups_of_quotient(H, K)
    assert len(mins) == 1 and mins[0].mask == H.mask


def test_maximal_abelian_over():
    G = build_spec("C(12)")
    full = subgroup_generated(G, (G.element("x"),))
    assert maximal_abelian_over(G, subgroup_generated(G, ())).mask == full.mask
    G = build_named("C3C3rC8")
    der = derived_subgroup(G)
    assert maximal_abelian_over(G, der).mask == der.mask
    B = bj1_group(3, 2, 1)
    a_sub = subgroup_generated(B, (B.element("a"),))
    assert maximal_abelian_over(B, derived_subgroup(B)).mask == a_sub.mask
    with pytest.raises(BNotAbelian):
        maximal_abelian_over(G, subgroup_generated(G, (G.element("a"),
                                                       G.element("c"))))


def test_conjugate_subgroup():
    G = build_named("A5")
    H = subgroup_generated(G, (G.element("(1,2,3)"),))
    Hg = conjugate_subgroup(G, H, G.element("(1,2,3,4,5)"))
    assert Hg.order == 3 and Hg.mask != H.mask


# -- names, words, spec language ----------------------------------------------


def test_element_names_and_words():
    G = build_named("C3C3rC8")
    assert G.names[0] == "1"
    assert G.word("a*a*a") == 0
    assert G.word("c^8") == 0
    assert G.word("a^2*b") == G.table[G.power(G.element("a"), 2)][G.element("b")]
    with pytest.raises(KeyError):
        G.element("nonexistent")


def test_spec_parser_roundtrips():
    for spec, order in [("C(6)", 6), ("D(12)", 12), ("Q(16)", 16),
                        ("EA(2,3)", 8), ("MetaAmitsur(21,16)", 63),
                        ("SdVec(2,2,[[0,1],[1,1]],3)", 12),
                        ("SdCyc(5,4,2)", 20), ("X(C(2),D(8))", 16),
                        ("CProd(D(8),D(8),1)", 32)]:
        assert build_spec(spec).order == order


def test_spec_parser_errors():
    for bad in ["", "C(", "C(x)", "Nope", "C(3))"]:
        with pytest.raises(ParseError):
            build_spec(bad)
    with pytest.raises(InconsistentSpec):
        build_spec("SdVec(3,2,[[0,1]],8)")  # matrix shape mismatch


def test_direct_product_renames_colliding_letters():
    G = build_spec("X(D(8),D(8))")
    assert G.order == 64
    assert len(set(G.names)) == 64


def test_order_q_matrix():
    M = order_q_matrix(2, 4, 5)
    G = semidirect_vector(2, 4, M, 5)
    assert G.order == 80
    with pytest.raises(InconsistentSpec):
        order_q_matrix(3, 2, 5)  # ord_5(3) = 4 != 2


def test_fingerprint_distinguishes_groups():
    assert fingerprint(build_named("D8")) != fingerprint(build_named("Q8"))
    assert fingerprint(build_spec("C(4)")) != fingerprint(build_spec("EA(2,2)"))
    assert fingerprint(bj1_group(2, 2, 2)) != fingerprint(bj1_group(2, 3, 1))


def test_find_isomorphism_small():
    assert find_isomorphism(build_named("S3"), dihedral(6)) is not None
    assert find_isomorphism(build_named("Q8"), build_named("D8")) is None


def test_quotient_and_subgroup_of_spec():
    from qgring.catalog import quotient_of_spec, subgroup_of_spec
    Q = quotient_of_spec("SdCyc(3,8,2)", ["y^2"])
    assert Q.order == 6
    H = subgroup_of_spec("SdVec(3,2,[[0,1],[1,1]],8)", ["a", "b", "c^2"])
    assert H.order == 36 and H.names[0] == "1"
