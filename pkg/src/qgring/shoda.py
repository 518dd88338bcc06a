"""Central idempotents of Q[G] from subgroup pairs.

epsilon(H, K) is tilde(H) when H = K and otherwise the product of
(tilde(K) - tilde(M)) over the minimal nontrivial normal subgroups M/K of
H/K. Summing the G-conjugates of epsilon over a transversal of its
centralizer gives a central element e(G, H, K); for metabelian G the pairs
singled out by the maximal-abelian enumeration produce exactly the
primitive central idempotents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import AlgElem, tilde
from .errors import NotMetabelian, NotNormalInH
from .groups import (
    FiniteGroup,
    Subgroup,
    centralizer,
    derived_subgroup,
    maximal_abelian_over,
    minimal_normal_subgroups_of_quotient,
    normalizer,
    quotient,
    subgroup_from_mask,
    subgroups,
)


def _is_normal_in(H: Subgroup, K: Subgroup) -> bool:
    """K normal in H (both subgroups of the same parent)."""
    G = H.parent
    kgens = K.gens if K.gens else K.members
    hgens = H.gens if H.gens else H.members
    return K <= H and all(K.contains(G.conj(k, h)) for h in hgens for k in kgens)


def epsilon(H: Subgroup, K: Subgroup) -> AlgElem:
    """The idempotent of Q[H] built from K normal in H."""
    if not _is_normal_in(H, K):
        raise NotNormalInH("K must be normal in H")
    if H.mask == K.mask:
        return tilde(H)
    out = None
    tk = tilde(K)
    for M in minimal_normal_subgroups_of_quotient(H, K):
        factor = tk - tilde(M)
        out = factor if out is None else out * factor
    assert out is not None
    return out


def _right_transversal(G: FiniteGroup, C: Subgroup, reverse: bool = False) -> list[int]:
    """Representatives of the right cosets C*t, scanned in index order."""
    seen = 0
    reps = []
    order = range(G.order - 1, -1, -1) if reverse else range(G.order)
    for g in order:
        if seen >> g & 1:
            continue
        reps.append(g)
        for c in C.members:
            seen |= 1 << G.table[c][g]
    return reps


def e_idem(G: FiniteGroup, H: Subgroup, K: Subgroup,
           check_transversal: bool = False) -> AlgElem:
    """e(G, H, K): sum of the G-conjugates of epsilon(H, K) over a right
    transversal of its centralizer. Central in Q[G] by construction;
    independent of the transversal (checked when requested)."""
    eps = epsilon(H, K)
    C = eps.centralizer_subgroup()
    out = AlgElem.zero(G)
    for t in _right_transversal(G, C):
        out = out + eps.conjugate(t)
    assert out.is_central(), "e(G,H,K) must be central"
    if check_transversal:
        alt = AlgElem.zero(G)
        for t in _right_transversal(G, C, reverse=True):
            alt = alt + eps.conjugate(t)
        assert alt == out, "e(G,H,K) depends on the transversal"
    return out


def is_shoda_pair(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    """K normal in H, H/K cyclic, and every g outside H has some h in H
    with commutator (h, g) in H minus K."""
    if not _is_normal_in(H, K):
        return False
    if not _quotient_cyclic(H, K):
        return False
    for g in range(G.order):
        if H.contains(g):
            continue
        if not any(H.contains(c) and not K.contains(c)
                   for c in (G.commutator(h, g) for h in H.members)):
            return False
    return True


def _quotient_cyclic(H: Subgroup, K: Subgroup) -> bool:
    """H/K cyclic: some h in H has <h, K> = H."""
    G = H.parent
    if H.mask == K.mask:
        return True
    kgens = K.gens
    for h in H.members:
        if K.contains(h):
            continue
        from .groups import _closure
        if _closure(G, kgens + (h,)) == H.mask:
            return True
    return False


def is_strong_shoda_pair(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    """K normal in H normal in N_G(K); H/K cyclic and maximal abelian in
    N_G(K)/K; G-conjugates of epsilon(H,K) outside N_G(K) orthogonal."""
    if not _is_normal_in(H, K):
        return False
    N = normalizer(G, K)
    if not _is_normal_in(N, H):
        return False
    if not _quotient_cyclic(H, K):
        return False
    # H/K maximal abelian in N/K  <=>  centralizer of H/K in N/K is H/K
    Ngrp, to_parent = N.induced()
    pos = {g: i for i, g in enumerate(to_parent)}
    Kloc = subgroup_from_mask(Ngrp, _local_mask(K, pos))
    Q, proj = quotient(Ngrp, Kloc)
    h_img = sorted({proj[pos[h]] for h in H.members})
    h_mask = 0
    for i in h_img:
        h_mask |= 1 << i
    cen = centralizer(Q, h_img)
    if cen.mask != h_mask:
        return False
    # N <= Cen(eps) always (H and the minimal normal subgroups over K are
    # N-stable), so any g in Cen(eps) outside N already violates
    # orthogonality; the strong condition forces Cen(eps) = N exactly.
    eps = epsilon(H, K)
    C = eps.centralizer_subgroup()
    if C.mask != N.mask:
        return False
    for t in _right_transversal(G, C):
        if N.contains(t):
            continue
        if not (eps * eps.conjugate(t)).is_zero():
            return False
    return True


def _local_mask(K: Subgroup, pos: dict[int, int]) -> int:
    mask = 0
    for g in K.members:
        mask |= 1 << pos[g]
    return mask


@dataclass
class ShodaPair:
    """A subgroup pair with its idempotents and predicate verdicts."""

    H: Subgroup
    K: Subgroup
    epsilon: AlgElem
    e: AlgElem
    kind: str  # "strong-shoda" | "plain-shoda" | "neither"

    def describe(self) -> str:
        G = self.H.parent
        hn = ",".join(G.names[g] for g in self.H.gens) or "1"
        kn = ",".join(G.names[g] for g in self.K.gens) or "1"
        return f"(<{hn}>, <{kn}>)"


@dataclass
class SanityReport:
    """Completeness facts about a primitive central idempotent list."""

    sum_is_one: bool
    pairwise_orthogonal: bool
    all_central: bool
    all_idempotent: bool
    dims: list[int] = field(default_factory=list)
    dim_total: int = 0
    commutative_dim_total: int = 0
    group_order: int = 0
    commutative_budget: int = 0
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.sum_is_one and self.pairwise_orthogonal and self.all_central
                and self.all_idempotent and self.dim_total == self.group_order
                and self.commutative_dim_total == self.commutative_budget)


def metabelian_pcis(G: FiniteGroup, A: Optional[Subgroup] = None,
                    check_strong: bool = True) -> list[ShodaPair]:
    """All primitive central idempotents of Q[G] for metabelian G, as
    deduplicated e(G, H, K) over the maximal-abelian pair enumeration.

    Postconditions asserted: the idempotents are central, pairwise
    orthogonal and sum to 1.
    """
    if "pcis" in G._cache and A is None:
        return G._cache["pcis"]
    Gder = derived_subgroup(G)
    if not Gder.is_abelian():
        raise NotMetabelian(f"{G.name} is not metabelian")
    if A is None:
        A = maximal_abelian_over(G, Gder)
        cache = True
    else:
        cache = False
    subs = subgroups(G)
    derived_of: dict[int, int] = {}
    for B in subs:
        comms = {G.commutator(x, y) for x in B.members for y in B.members}
        comms.discard(0)
        from .groups import _closure
        derived_of[B.mask] = _closure(G, tuple(sorted(comms)))
    pairs: list[tuple[Subgroup, Subgroup]] = []
    for K in subs:
        # B ranges over subgroups with A <= B, B' <= K <= B
        cands = [B for B in subs
                 if A <= B and K <= B and derived_of[B.mask] | K.mask == K.mask]
        maximal = [B for B in cands if not any(B < C for C in cands)]
        for H in maximal:
            if _quotient_cyclic(H, K):
                pairs.append((H, K))
    # H descending by order, K ascending
    pairs.sort(key=lambda hk: (-hk[0].order, hk[0].mask, hk[1].order, hk[1].mask))
    by_key: dict[tuple, ShodaPair] = {}
    for H, K in pairs:
        e = e_idem(G, H, K)
        k = e.key()
        if k in by_key:
            continue
        eps = epsilon(H, K)
        kind = "neither"
        if check_strong:
            if is_strong_shoda_pair(G, H, K):
                kind = "strong-shoda"
            elif is_shoda_pair(G, H, K):
                kind = "plain-shoda"
        by_key[k] = ShodaPair(H, K, eps, e, kind)
    out = [by_key[k] for k in sorted(by_key)]
    total = AlgElem.zero(G)
    for sp in out:
        assert sp.e.is_central()
        total = total + sp.e
    assert total == AlgElem.one(G), "PCIs must sum to 1"
    for i, sp in enumerate(out):
        for sq in out[i + 1:]:
            assert (sp.e * sq.e).is_zero(), "PCIs must be pairwise orthogonal"
    if cache:
        G._cache["pcis"] = out
    return out


def pci_sanity(G: FiniteGroup, pcis: list[ShodaPair]) -> SanityReport:
    """Re-verify completeness of a PCI list and collect dimension data."""
    from .components import component_dimension

    total = AlgElem.zero(G)
    orth = True
    central = all(sp.e.is_central() for sp in pcis)
    idem = all(sp.e.is_idempotent() for sp in pcis)
    for i, sp in enumerate(pcis):
        total = total + sp.e
        for sq in pcis[i + 1:]:
            if not (sp.e * sq.e).is_zero():
                orth = False
    dims = [component_dimension(G, sp.e) for sp in pcis]
    Gder = derived_subgroup(G)
    comm_dims = sum(d for d, sp in zip(dims, pcis)
                    if Gder.mask & sp.K.mask == Gder.mask)
    rep = SanityReport(
        sum_is_one=(total == AlgElem.one(G)),
        pairwise_orthogonal=orth,
        all_central=central,
        all_idempotent=idem,
        dims=sorted(dims),
        dim_total=sum(dims),
        commutative_dim_total=comm_dims,
        group_order=G.order,
        commutative_budget=G.order // Gder.order,
    )
    for sp in pcis:
        if sp.kind != "strong-shoda":
            rep.warnings.append(
                f"pair {sp.describe()} is not verified strong ({sp.kind})")
    return rep
