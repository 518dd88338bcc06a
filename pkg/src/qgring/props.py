"""Group-property predicates and the nilpotent-decomposition verdict engine.

SN: for every normal N and subgroup Y, either N <= Y or YN is normal.
SSN: every subgroup has SN. NCN (p-groups): every non-cyclic subgroup is
normal. A group "has ND" when every nilpotent element of Z[G] stays
integral after projection by every central idempotent of Q[G]; here the
positive certificate is "at most one matrix component" and the negative
certificate is an explicit witness pair (alpha, e), re-verified exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import AlgElem, hat, one_minus, one_plus, tilde
from .errors import NotPGroup, UnknownWitness
from .groups import (
    FiniteGroup,
    Subgroup,
    derived_subgroup,
    fingerprint,
    is_nilpotent_group,
    is_normal,
    is_solvable_group,
    join,
    normal_subgroups,
    subgroup_generated,
    subgroups,
)
from .numutil import ord_mod, padic_valuation, prime_factors
from .shoda import ShodaPair


# ---------------------------------------------------------------------------
# SN / SSN / NCN


def is_sn(G: FiniteGroup) -> bool:
    """Exhaustive check: N normal, Y any subgroup => N <= Y or YN normal."""
    subs = subgroups(G)
    for N in normal_subgroups(G):
        if N.order == 1:
            continue
        for Y in subs:
            if N <= Y:
                continue
            if not is_normal(G, join(G, Y, N)):
                return False
    return True


def is_ssn(G: FiniteGroup) -> bool:
    """Every subgroup, viewed standalone, has SN."""
    if "ssn" not in G._cache:
        verdict = True
        for H in reversed(subgroups(G)):
            if H.order <= 5:
                continue  # groups of order <= 5 are abelian, SN is automatic
            Hgrp, _ = H.induced()
            if not is_sn(Hgrp):
                verdict = False
                break
        G._cache["ssn"] = verdict
    return G._cache["ssn"]


def is_ncn(G: FiniteGroup) -> bool:
    """Every non-cyclic subgroup is normal (p-groups only)."""
    ok, p = G.is_p_group()
    if not ok or G.order == 1:
        raise NotPGroup(f"{G.name} is not a nontrivial p-group")
    return all(is_normal(G, H) for H in subgroups(G) if not H.is_cyclic())


def is_hamiltonian(G: FiniteGroup) -> bool:
    return (not G.is_abelian()) and all(is_normal(G, H) for H in subgroups(G))


def _int_log(base: int, value: int) -> int:
    e, v = 0, 1
    while v < value:
        v *= base
        e += 1
    if v != value:
        raise ValueError(f"{value} is not a power of {base}")
    return e


def abelian_invariants(G: FiniteGroup, H: Subgroup) -> list[int]:
    """Prime-power invariants of an abelian subgroup, sorted.

    Uses the count of elements of order dividing p^i: it equals
    p^(sum_j min(lambda_j, i)) for type (lambda_1 >= lambda_2 >= ...).
    """
    if not H.is_abelian():
        raise ValueError("abelian_invariants needs an abelian subgroup")
    out: list[int] = []
    orders = [G.element_order(g) for g in H.members]
    for p in prime_factors(H.order):
        p_orders = [o for o in orders
                    if o == 1 or set(prime_factors(o)) == {p}]
        total = len(p_orders)
        f = [0]  # f[i] = log_p #{elements with order dividing p^i}
        while p ** f[-1] != total:
            i = len(f)
            cnt = sum(1 for o in p_orders if p ** i % o == 0)
            f.append(_int_log(p, cnt))
        ge = [f[i] - f[i - 1] for i in range(1, len(f))]  # #parts >= i
        for i in range(len(ge), 0, -1):
            exactly = ge[i - 1] - (ge[i] if i < len(ge) else 0)
            out.extend([p ** i] * exactly)
    return sorted(out)


@dataclass
class SSNClass:
    tag: str  # Abelian | Hamiltonian | PGroupNCN | SolvableTypeI | SolvableTypeII | A5 | NotSSN
    params: dict = field(default_factory=dict)

    @property
    def ssn(self) -> bool:
        return self.tag != "NotSSN"


_A5_FP = None


def _a5_fingerprint():
    global _A5_FP
    if _A5_FP is None:
        from .catalog import build_named
        _A5_FP = fingerprint(build_named("A5"))
    return _A5_FP


def _bj_tag(G: FiniteGroup, p: int) -> Optional[str]:
    """Best-effort identification of the NCN-classification type (BJ1-BJ9) of a
    p-group (nonabelian, non-Hamiltonian)."""
    from .catalog import build_named
    n = G.order
    # BJ1: metacyclic minimal nonabelian, not Q8
    der = derived_subgroup(G)
    minimal_nonabelian = all(H.is_abelian() for H in subgroups(G)
                             if H.order < n)
    if minimal_nonabelian:
        # metacyclic: some cyclic normal subgroup with cyclic quotient
        from .groups import quotient
        for N in normal_subgroups(G):
            if not N.is_cyclic():
                continue
            Q, _ = quotient(G, N)
            if any(Q.element_order(g) == Q.order for g in range(Q.order)):
                return "BJ1"
    if p == 2:
        for name in ("BJ5", "BJ8", "BJ9"):
            if n == build_named(name).order and \
                    fingerprint(G) == fingerprint(build_named(name)):
                return name
        if n == 16 and fingerprint(G) == fingerprint(build_named("Q16")):
            return "BJ6"
        if n == 32 and fingerprint(G) == fingerprint(build_named("D8cpQ8")):
            return "BJ7"
        # BJ3: Q8 x C_{2^k}, k >= 2
        m = n // 8
        if n % 8 == 0 and m >= 4 and (m & (m - 1)) == 0:
            from .catalog import build_spec
            ref = build_spec(f"X(Q(8),C({m}))")
            if fingerprint(ref) == fingerprint(G):
                return "BJ3"
    if n == 81 and fingerprint(G) == fingerprint(build_named("BJ4")):
        return "BJ4"
    # BJ2: G0 central product cyclic Z; G' = Z(G0) of order p, Z(G) cyclic
    from .groups import center
    Z = center(G)
    if der.order == p and Z.is_cyclic() and der <= Z:
        return "BJ2"
    return None


def classify_ssn(G: FiniteGroup) -> SSNClass:
    """Structural SSN classification: nilpotent branch via NCN/Hamiltonian,
    solvable non-nilpotent branch via the two semidirect families, plus the
    single non-solvable group."""
    if G.is_abelian():
        return SSNClass("Abelian", {"order": G.order})
    if is_nilpotent_group(G):
        if is_hamiltonian(G):
            mask = 0
            for g in range(G.order):
                if G.element_order(g) % 2 == 1:
                    mask |= 1 << g
            from .groups import subgroup_from_mask
            odd_sub = subgroup_from_mask(G, mask)
            e_rank = padic_valuation(2, G.order) - 3
            invs = abelian_invariants(G, odd_sub)
            return SSNClass("Hamiltonian",
                            {"e_rank": e_rank, "odd_invariants": invs})
        ok, p = G.is_p_group()
        if ok:
            if is_ncn(G):
                return SSNClass("PGroupNCN", {"p": p, "bj": _bj_tag(G, p)})
            return SSNClass("NotSSN", {"reason": "p-group without NCN"})
        return SSNClass("NotSSN",
                        {"reason": "nilpotent, neither abelian nor Hamiltonian"})
    if not is_solvable_group(G):
        if fingerprint(G) == _a5_fingerprint():
            return SSNClass("A5", {})
        return SSNClass("NotSSN", {"reason": "non-solvable, not A5"})
    # solvable, not nilpotent: G = P : Q with P = G'
    P = derived_subgroup(G)
    if not P.is_abelian():
        return SSNClass("NotSSN", {"reason": "derived subgroup not abelian"})
    q_order = G.order // P.order
    if math.gcd(P.order, q_order) != 1:
        return SSNClass("NotSSN", {"reason": "no coprime complement"})
    y = None
    for g in range(1, G.order):
        if G.element_order(g) == q_order and not P.contains(g):
            Qsub = subgroup_generated(G, (g,))
            if Qsub.mask & P.mask == 1:
                y = g
                break
    if y is None:
        return SSNClass("NotSSN", {"reason": "complement is not cyclic"})
    Qsub = subgroup_generated(G, (y,))
    # kernel of the action of Q on P
    kernel = [q for q in Qsub.members
              if all(G.conj(x, q) == x for x in P.members)]
    faithful = len(kernel) == 1
    pfac = prime_factors(P.order)
    p = next(iter(pfac))
    if faithful:
        # type (i): P elementary abelian, every nontrivial subgroup of Q
        # acts irreducibly
        if len(pfac) != 1 or any(G.element_order(g) > p for g in P.members):
            return SSNClass("NotSSN", {"reason": "P not elementary abelian"})
        Pgrp, to_parent = P.induced()
        proper = [S for S in subgroups(Pgrp) if 1 < S.order < Pgrp.order]
        pos = {g: i for i, g in enumerate(to_parent)}
        for ell in prime_factors(q_order):
            gen = G.power(y, q_order // ell)
            for S in proper:
                stable = all(
                    pos[G.conj(to_parent[s], gen)] in
                    {i for i in range(Pgrp.order) if S.contains(i)}
                    for s in S.members)
                if stable:
                    return SSNClass(
                        "NotSSN",
                        {"reason": f"order-{ell} subgroup acts reducibly"})
        n_rank = pfac[p]
        return SSNClass("SolvableTypeI",
                        {"p": p, "n": n_rank, "q_order": q_order})
    # type (ii): |P| = p, Q a cyclic q-group of order >= q^2, non-faithful
    if P.order != p or len(pfac) != 1:
        return SSNClass("NotSSN", {"reason": "non-faithful action on non-prime P"})
    qfac = prime_factors(q_order)
    if len(qfac) != 1:
        return SSNClass("NotSSN", {"reason": "Q not a q-group"})
    q = next(iter(qfac))
    k = qfac[q]
    if k < 2:
        return SSNClass("NotSSN", {"reason": "faithless action needs |Q| >= q^2"})
    x = min(g for g in P.members if g != 0)
    conj = G.conj_left(x, y)  # y x y^-1 = x^r0
    r0 = None
    cur = 0
    for e in range(P.order):
        if cur == conj:
            r0 = e
            break
        cur = G.table[cur][x]
    ordr = ord_mod(p, r0) if r0 is not None and math.gcd(r0, p) == 1 else 0
    if r0 is None or ordr == 1:
        return SSNClass("NotSSN", {"reason": "action trivial"})
    k0 = padic_valuation(q, ordr)
    if q ** k0 != ordr or not (1 <= k0 < k):
        return SSNClass("NotSSN", {"reason": "kernel level out of range"})
    return SSNClass("SolvableTypeII",
                    {"p": p, "q": q, "k": k, "k0": k0, "r0": r0})


# ---------------------------------------------------------------------------
# curated witnesses


@dataclass
class Witness:
    name: str
    group: FiniteGroup
    alpha: AlgElem
    e: AlgElem
    notes: str = ""


def verify_witness(w: Witness) -> dict[str, bool]:
    """The four assertions every negative certificate must satisfy."""
    prod = w.alpha * w.e
    return {
        "alpha_integral": w.alpha.is_integral(),
        "alpha_nilpotent": w.alpha.is_nilpotent(),
        "e_central_idempotent": w.e.is_central() and w.e.is_idempotent(),
        "alpha_e_not_integral": not prod.is_integral(),
    }


def a5_shoda_idempotent(G: FiniteGroup) -> tuple[Subgroup, Subgroup, AlgElem, AlgElem]:
    """(A4, K, epsilon, e) inside a group built as the standard A5:
    epsilon = tilde(K) - tilde(A4), e = (1/2) sum of its five conjugates
    by powers of a 5-cycle (conjugating on the left)."""
    a = G.element("(1,2,3,4,5)")
    b = G.element("(1,2)(3,4)")
    c = G.element("(1,2,3)")
    k2 = G.element("(1,3)(2,4)")
    A4 = subgroup_generated(G, (c, b))
    K = subgroup_generated(G, (b, k2))
    eps = tilde(K) - tilde(A4)
    e = AlgElem.zero(G)
    for i in range(5):
        e = e + eps.conjugate_left(G.power(a, i))
    e = Fraction(1, 2) * e
    assert e.is_central() and e.is_idempotent()
    return A4, K, eps, e


def curated_witness(name: str, n: int = 3) -> Witness:
    """The worked negative examples, constructed exactly: returns
    (group, alpha, e) with alpha integral nilpotent, e a central idempotent
    and alpha*e not integral (all re-verified by the caller)."""
    from .catalog import build_named, build_spec

    if name == "D12":
        G = build_named("D12")
        a, b = G.element("a"), G.element("b")
        alpha = one_minus(G, b) * AlgElem.basis(G, a) * one_plus(G, b)
        e = tilde(subgroup_generated(G, (G.word("a^3"),))) \
            - tilde(subgroup_generated(G, (a,)))
        return Witness(name, G, alpha, e, "dihedral of order 12")

    if name == "Ex3.8":
        G = build_named("Ex38K")
        a = G.element("a")
        c4 = G.word("c^4")
        alpha = one_minus(G, c4) * AlgElem.basis(G, a) * one_plus(G, c4)
        Kp = subgroup_generated(G, (a, G.element("b")))
        from .shoda import e_idem
        e = e_idem(G, Kp, subgroup_generated(G, (a,)))
        return Witness(name, G, alpha, e, "index-2 subgroup of (C3xC3):C8")

    if name == "BJ3":
        if n < 3:
            raise UnknownWitness("BJ3 witness needs n >= 3")
        G = build_spec(f"X(Q(8),C({2 ** n}))")
        a, b, x = G.element("a"), G.element("b"), G.element("x")
        z = G.word("a^2")
        t = G.power(x, 2 ** (n - 3))
        bt = AlgElem.basis(G, G.table[b][t])
        bt2 = AlgElem.basis(G, G.table[b][G.table[t][t]])
        amul = AlgElem.basis(G, a)
        t2 = G.power(t, 2)
        t4 = G.power(t, 4)
        r = ((amul + bt) * one_minus(G, t2) * one_plus(G, t4)
             * one_minus(G, z))
        s_elem = (amul + bt2) * one_minus(G, t4) * one_minus(G, z)
        omt = one_minus(G, t)
        alpha = Fraction(1, 2) * (r * omt + s_elem * omt * omt * omt)
        e = tilde(subgroup_generated(G, (t4,)))
        w = Witness(name, G, alpha, e, f"Q8 x C_{2 ** n}")
        assert w.e * r == r and (w.e * s_elem).is_zero()
        assert w.alpha * w.e == Fraction(1, 2) * (r * omt)
        return w

    if name == "BJ9":
        G = build_named("BJ9")
        A = G.element("b")
        B = G.element("a")
        C = G.word("c*d")
        A2B2 = G.table[G.power(A, 2)][G.power(B, 2)]
        alpha = (one_minus(G, A2B2) * one_plus(G, A) * one_plus(G, B)
                 * AlgElem.basis(G, C))
        e = tilde(subgroup_generated(G, (G.power(A, 2),)))
        return Witness(name, G, alpha, e, "special group of order 64")

    if name == "A5":
        G = build_named("A5")
        a = G.element("(1,2,3,4,5)")
        b = G.element("(1,2)(3,4)")
        _, _, _, e = a5_shoda_idempotent(G)
        alpha = hat(subgroup_generated(G, (a,))) * AlgElem.basis(G, b) \
            * one_minus(G, a)
        return Witness(name, G, alpha, e, "alternating group of degree 5")

    raise UnknownWitness(f"no curated witness named {name!r}")


CURATED_NAMES = ("D12", "Ex3.8", "BJ3", "BJ9", "A5")


def _sum_of_squares_polys(p: int) -> Optional[tuple[list[int], list[int]]]:
    """Polynomials r, s of degree < p with coefficients in 0..p-1 such that
    1 + r(X)^2 + s(X)^2 is an integer multiple of 1 + X + ... + X^(p-1)
    modulo X^p - 1. Bounded brute force, intended for p <= 7."""
    import itertools as it

    def sq_mod(coeffs):
        out = [0] * p
        for i, a in enumerate(coeffs):
            if a:
                for j, b in enumerate(coeffs):
                    if b:
                        out[(i + j) % p] += a * b
        return out

    def canon(vec):
        # representative modulo Z * (1,...,1)
        last = vec[-1]
        return tuple(v - last for v in vec)

    table: dict[tuple, list[int]] = {}
    for coeffs in it.product(range(p), repeat=p):
        table.setdefault(canon(sq_mod(coeffs)), list(coeffs))
    for s_coeffs in it.product(range(p), repeat=p):
        sq = sq_mod(s_coeffs)
        target = [-(1 if i == 0 else 0) - sq[i] for i in range(p)]
        hit = table.get(canon(target))
        if hit is not None:
            return hit, list(s_coeffs)
    return None


def hamiltonian_witness(p: int, n: int) -> Optional[Witness]:
    """Negative ND certificate for Q8 x C_{p^n} with p an odd prime,
    n >= 2 and ord_p(2) even, via the sum-of-two-squares polynomial
    construction; None when the bounded search finds no polynomials
    (the search is only attempted for p <= 7)."""
    from .catalog import build_spec
    from .numutil import is_prime

    if not (is_prime(p) and p % 2 == 1 and n >= 2):
        return None
    if ord_mod(p, 2) % 2 == 1 or p > 7:
        return None
    polys = _sum_of_squares_polys(p)
    if polys is None:
        return None
    r_coeffs, s_coeffs = polys
    G = build_spec(f"X(Q(8),C({p ** n}))")
    x2 = G.word("a^2")  # the central involution of the quaternion factor
    c = G.power(G.element("x"), p ** (n - 2))  # order p^2
    cp = G.power(c, p)

    def poly_at(coeffs, g):
        out = AlgElem.zero(G)
        for i, v in enumerate(coeffs):
            if v:
                out = out + v * AlgElem.basis(G, G.power(g, i))
        return out

    qa = AlgElem.basis(G, G.element("a"))
    qb = AlgElem.basis(G, G.element("b"))
    qab = AlgElem.basis(G, G.word("a*b"))
    alpha_part = qa + poly_at(r_coeffs, cp) * qb + poly_at(s_coeffs, cp) * qab
    beta_part = qa + poly_at(r_coeffs, c) * qb + poly_at(s_coeffs, c) * qab

    omc = one_minus(G, c)
    omc_pow = AlgElem.one(G)
    for _ in range(p * p - p - 1):
        omc_pow = omc_pow * omc
    omc_small = AlgElem.one(G)
    for _ in range(p - 1):
        omc_small = omc_small * omc
    hat_cp = hat(subgroup_generated(G, (cp,)))
    from fractions import Fraction
    w = Fraction(1, p) * (one_minus(G, x2) * (
        omc_pow * one_minus(G, cp) * alpha_part
        - omc_small * hat_cp * beta_part))
    e = tilde(subgroup_generated(G, (cp,)))
    wit = Witness(f"Q8xC{p}^{n}", G, w, e,
                  f"Hamiltonian Q8 x C_{p ** n} via polynomial witness")
    if all(verify_witness(wit).values()):
        return wit
    return None


def a5_special_pci(G: FiniteGroup):
    """If G is table-identical to the standard A5, return its documented
    Shoda-pair idempotent as a certified matrix component; else None."""
    if G.order != 60:
        return None
    from .catalog import build_named
    ref = build_named("A5")
    if G.table != ref.table:
        return None
    from .components import (MATRIX, ComponentDescriptor, center_rank,
                             component_dimension)
    A4, K, eps, e = a5_shoda_idempotent(G)
    sp = ShodaPair(A4, K, eps, e, "plain-shoda")
    dim = component_dimension(G, e)
    rank = center_rank(G, e)
    deg = math.isqrt(dim // rank)
    wit = curated_witness("A5")
    alpha = AlgElem(G, wit.alpha.nums, wit.alpha.den)  # same table as ref
    cert = alpha * e
    assert not cert.is_zero() and cert.is_nilpotent()
    desc = ComponentDescriptor(
        group=G, H=A4, K=K, e=e, matrix_size_n=5, cyclotomic_order_h=3,
        nh_order=1, nh_cyclic=True, action={}, twisting={},
        gen_action_exp=None, gen_twist_exp=None,
        dim_over_Q=dim, center_rank=rank, degree=deg,
        kind=MATRIX, shape=f"M_{deg}(Q)",
        trace={"branch": "nilpotent-certificate", "pair": "plain Shoda"})
    return sp, desc


# ---------------------------------------------------------------------------
# witness search


def nd_witness_search(G: FiniteGroup, pcis: list[AlgElem], budget: int = 10 ** 6,
                      ) -> tuple[Optional[tuple[AlgElem, AlgElem]], int]:
    """Search for (alpha, e): alpha an integral square-zero element of the
    standard (1-y) g hat(Y) / hat(Y) g (1-y) families (and +/- combinations
    sharing Y), e a central idempotent from pcis, with alpha*e not integral.

    The budget counts integrality tests. Returns (pair or None, spent).
    """
    spent = 0
    combos_base: list[AlgElem] = []
    for Y in subgroups(G):
        if Y.order == 1 or Y.order == G.order:
            continue
        hy = hat(Y)
        per_y: list[AlgElem] = []
        for y in Y.members:
            if y == 0:
                continue
            omy = one_minus(G, y)
            for g in range(G.order):
                # vanishing tests for the two one-sided families
                left_zero = Y.contains(G.conj(y, g))
                right_zero = Y.contains(G.conj_left(y, g))
                if left_zero and right_zero:
                    continue
                gb = AlgElem.basis(G, g)
                cands = []
                if not left_zero:
                    left = omy * gb * hy
                    cands.append(left)
                    per_y.append(left)
                if not right_zero:
                    cands.append(hy * gb * omy)
                for alpha in cands:
                    for e in pcis:
                        spent += 1
                        if not (alpha * e).is_integral():
                            return (alpha, e), spent
                        if spent >= budget:
                            return None, spent
        # pairwise integral combinations with the same Y are still square-zero
        for i in range(len(per_y)):
            for j in range(i + 1, len(per_y)):
                for sign in (1, -1):
                    alpha = per_y[i] + sign * per_y[j]
                    if alpha.is_zero():
                        continue
                    for e in pcis:
                        spent += 1
                        if not (alpha * e).is_integral():
                            return (alpha, e), spent
                        if spent >= budget:
                            return None, spent
    return None, spent


# ---------------------------------------------------------------------------
# verdicts


@dataclass
class NDReport:
    group_name: str
    order: int
    verdict: str  # HasND | NotND | Unknown
    reason: str   # OneMatrixComponent | WitnessFound | BudgetExhausted
    matrix_count: "MatrixCount"
    sn: bool
    ssn: bool
    ncn: Optional[bool]
    witness: Optional[tuple[AlgElem, AlgElem]] = None
    budget: int = 0
    spent: int = 0

    def to_dict(self, spec: Optional[str] = None) -> dict:
        wit = None
        if self.witness is not None:
            alpha, e = self.witness
            wit = {"alpha": [[str(c.numerator), str(c.denominator)]
                             for c in alpha.coeffs()],
                   "e": [[str(c.numerator), str(c.denominator)]
                         for c in e.coeffs()]}
        return {
            "group": spec or self.group_name,
            "verdict": self.verdict,
            "reason": {"kind": self.reason, "budget": self.budget,
                       "spent": self.spent},
            "witness": wit,
            "matrix_count": self.matrix_count.to_json(),
            "sn": self.sn,
            "ssn": self.ssn,
            "ncn": self.ncn,
        }


def _curated_for_group(G: FiniteGroup) -> Optional[Witness]:
    """A curated witness whose group is table-identical to G, if any."""
    from .numutil import prime_factors

    candidates: list[Witness | tuple[str, dict]] = []
    if G.order == 12:
        candidates.append(("D12", {}))
    if G.order == 36:
        candidates.append(("Ex3.8", {}))
    if G.order == 60:
        candidates.append(("A5", {}))
    if G.order == 64:
        candidates.append(("BJ9", {}))
    if G.order % 8 == 0:
        m = G.order // 8
        n = m.bit_length() - 1
        if m == 1 << n and n >= 3:
            candidates.append(("BJ3", {"n": n}))
        if m % 2 == 1 and m > 1:
            fac = prime_factors(m)
            if len(fac) == 1:
                p, n = next(iter(fac.items()))
                if n >= 2:
                    hw = hamiltonian_witness(p, n)
                    if hw is not None:
                        candidates.append(hw)
    for cand in candidates:
        if isinstance(cand, Witness):
            w = cand
        else:
            name, kw = cand
            try:
                w = curated_witness(name, **kw)
            except UnknownWitness:
                continue
        if w.group.table == G.table:
            checks = verify_witness(w)
            if all(checks.values()):
                return Witness(w.name, G,
                               AlgElem(G, w.alpha.nums, w.alpha.den),
                               AlgElem(G, w.e.nums, w.e.den), w.notes)
    return None


def nd_verdict(G: FiniteGroup, budget: int = 10 ** 6, probe_budget: int = 2000,
               seed: int = 0) -> NDReport:
    """Decide ND where possible. Positive only via the at-most-one-matrix-
    component certificate; negative only via a verified witness; otherwise
    Unknown with the search budget recorded."""
    from .components import MatrixCount, count_matrix_components
    from .errors import NotMetabelian

    sn = is_sn(G)
    ssn = is_ssn(G)
    okp, _p = G.is_p_group()
    ncn = is_ncn(G) if okp and G.order > 1 else None

    pcis_e: list[AlgElem] = []
    try:
        count, comps = count_matrix_components(G, probe_budget=probe_budget,
                                               seed=seed)
        pcis_e = [sp.e for sp, _d in comps]
    except NotMetabelian:
        count = MatrixCount(0, None)

    name = getattr(G, "spec", G.name)
    if count.hi is not None and count.hi <= 1:
        return NDReport(name, G.order, "HasND", "OneMatrixComponent",
                        count, sn, ssn, ncn, budget=budget)

    wit = _curated_for_group(G)
    if wit is not None:
        checks = verify_witness(wit)
        assert all(checks.values())
        return NDReport(name, G.order, "NotND", "WitnessFound", count,
                        sn, ssn, ncn, witness=(wit.alpha, wit.e),
                        budget=budget)

    found, spent = nd_witness_search(G, pcis_e, budget=budget)
    if found is not None:
        alpha, e = found
        w = Witness("search", G, alpha, e)
        assert all(verify_witness(w).values())
        return NDReport(name, G.order, "NotND", "WitnessFound", count,
                        sn, ssn, ncn, witness=found, budget=budget,
                        spent=spent)
    return NDReport(name, G.order, "Unknown", "BudgetExhausted", count,
                    sn, ssn, ncn, budget=budget, spent=spent)
