"""The division criterion for cyclic algebras (Q(zeta_m), sigma_r, zeta_s).

The groups C_p : C_{q^k} with a non-faithful action contribute one cyclic
algebra per level j; the group embeds in a division ring exactly when all
of them are division algebras. Two independent routes decide each level:
the general criterion and a q-adic valuation shortcut; they must agree.
"""

from qgring.components import (
    amitsur_division,
    nonfaithful_amitsur_params,
    nonfaithful_division_by_valuation,
    predict_nonnilpotent,
)

print("Audit of three cyclic algebras:")
for m, r in [(21, 16), (6, 5), (12, 5)]:
    res = amitsur_division(m, r)
    print(f"  (Q(zeta_{m}), sigma_{r}, zeta_{res.s}): division={res.division} "
          f"[s={res.s} t={res.t} n={res.n} conditions={res.conditions}]")

print("\nC_7 : C_{3^k} towers (odd-order groups embeddable in division rings):")
for k in range(2, 5):
    pred = predict_nonnilpotent({"family": "nonfaithful", "p": 7, "q": 3,
                                 "k": k, "k0": 1, "r0": 2})
    print(f"  k={k}: one_matrix={pred.one_matrix} "
          f"levels={pred.detail['per_j_division']}")

print("\nC_3 : C_8 fails at the top level (3 is 3 mod 8, not 5):")
pred = predict_nonnilpotent({"family": "nonfaithful", "p": 3, "q": 2,
                             "k": 3, "k0": 1, "r0": 2})
for j, div in pred.detail["per_j_division"].items():
    m, r = nonfaithful_amitsur_params(3, 2, 1, j, 2)
    assert div == nonfaithful_division_by_valuation(3, 2, 1, j)
    print(f"  level j={j}: algebra (m={m}, r={r}) division={div}")
print(f"  one matrix component: {pred.one_matrix}")
