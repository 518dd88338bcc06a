"""Primitive central idempotents and Wedderburn component shapes.

Enumerates the components of Q[G] for a few metabelian groups via subgroup
pairs, and shows the classification cascade at work: commutative parts,
full matrix rings over fixed fields, and division algebras decided by the
cyclic-algebra criterion.
"""

from qgring import build_named, build_spec, metabelian_pcis, pci_sanity
from qgring.components import count_matrix_components

for spec in ["A4", "C5rC4", "Q(16)", "C3C3rC8"]:
    G = build_named(spec) if spec[0].isalpha() and "(" not in spec \
        else build_spec(spec)
    print(f"\n=== Q[{spec}]  (order {G.order})")
    cnt, comps = count_matrix_components(G)
    for sp, desc in comps:
        print(f"  pair {sp.describe():<28} dim={desc.dim_over_Q:<4} "
              f"center_rank={desc.center_rank:<3} {desc.kind:<24} {desc.shape}")
    rep = pci_sanity(G, metabelian_pcis(G))
    print(f"  sanity: sum=1 {rep.sum_is_one}, orthogonal {rep.pairwise_orthogonal}, "
          f"dim budget {rep.dim_total}={G.order}, "
          f"commutative budget {rep.commutative_dim_total}")
    print(f"  matrix components: {cnt}")
