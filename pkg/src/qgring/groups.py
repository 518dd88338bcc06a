"""Finite groups as dense multiplication tables, with the constructions
needed for rational group algebra analysis: cyclic/dihedral/quaternion
families, metacyclic presentations with fusion, semidirect and central
products, cyclic extensions of an arbitrary base, and A5.

Elements are integers 0..order-1 with the identity always at index 0.
Groups and subgroups are immutable after construction; derived data
(subgroup lattice, center, conjugacy classes, ...) is cached per group.
"""

from __future__ import annotations

import itertools
import math
import re
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BNotAbelian,
    InconsistentSpec,
    NotNormal,
    OrderCapExceeded,
)

DEFAULT_ORDER_CAP = 250

# full associativity check up to this order, deterministic sampling above
FULL_CHECK_ORDER = 64


def _check_cap(order: int, cap: Optional[int]) -> None:
    cap = DEFAULT_ORDER_CAP if cap is None else cap
    if order > cap:
        raise OrderCapExceeded(f"group order {order} exceeds cap {cap}")


class FiniteGroup:
    """A finite group given by its full multiplication table.

    table[a][b] is the index of the product a*b; index 0 is the identity.
    """

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str],
                 name: str = "G", letters: tuple[str, ...] = (),
                 check: bool = True):
        self.order = len(table)
        self.table: list[list[int]] = [list(map(int, row)) for row in table]
        self.names: list[str] = [str(s) for s in names]
        self.name = name
        self.letters = tuple(letters)
        self.identity = 0
        self._cache: dict = {}
        if len(self.names) != self.order:
            raise InconsistentSpec("names/table size mismatch")
        self._name_to_idx = {}
        for i, nm in enumerate(self.names):
            if nm in self._name_to_idx:
                raise InconsistentSpec(f"duplicate element name {nm!r}")
            self._name_to_idx[nm] = i
        if check:
            self._validate()
        self.inverse: list[int] = self._compute_inverses()

    # -- construction checks ------------------------------------------------

    def _validate(self) -> None:
        n = self.order
        t = np.array(self.table, dtype=np.int64)
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise InconsistentSpec("table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(t[0], ar) and np.array_equal(t[:, 0], ar)):
            raise InconsistentSpec("index 0 is not a two-sided identity")
        for i in range(n):
            if len(set(self.table[i])) != n:
                raise InconsistentSpec(f"row {i} is not a permutation")
        for j in range(n):
            if len({self.table[i][j] for i in range(n)}) != n:
                raise InconsistentSpec(f"column {j} is not a permutation")
        # associativity: full check for small groups, sampled deterministically above
        if n <= FULL_CHECK_ORDER:
            lhs = t[t, :]              # lhs[a,b,c] = t[t[a,b],c]
            rhs = t[:, t]              # rhs[a,b,c] = t[a,t[b,c]]
            if not np.array_equal(lhs, rhs):
                raise InconsistentSpec("multiplication table is not associative")
        else:
            step = max(1, (n ** 3) // 200_000)
            count = 0
            for k in range(0, n ** 3, step):
                a, rem = divmod(k, n * n)
                b, c = divmod(rem, n)
                if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                    raise InconsistentSpec("multiplication table is not associative")
                count += 1

    def _compute_inverses(self) -> list[int]:
        inv = [0] * self.order
        for g in range(self.order):
            row = self.table[g]
            found = -1
            for h in range(self.order):
                if row[h] == 0:
                    found = h
                    break
            if found < 0 or self.table[found][g] != 0:
                raise InconsistentSpec(f"element {g} has no two-sided inverse")
            inv[g] = found
        return inv

    # -- basics ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        out = 0
        while k:
            if k & 1:
                out = self.table[out][a]
            a = self.table[a][a]
            k >>= 1
        return out

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return self.table[self.table[self.inverse[g]][x]][g]

    def conj_left(self, x: int, g: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inverse[g]]

    def commutator(self, h: int, g: int) -> int:
        """(h, g) = h^-1 g^-1 h g."""
        t = self.table
        return t[t[t[self.inverse[h]][self.inverse[g]]][h]][g]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def element(self, name: str) -> int:
        """Look up an element by its display name."""
        try:
            return self._name_to_idx[name]
        except KeyError:
            raise KeyError(f"no element named {name!r} in {self.name}") from None

    def word(self, expr: str) -> int:
        """Evaluate a word like 'a^2*b*c^-1' over element names."""
        out = 0
        for token in expr.replace(" ", "").split("*"):
            if not token:
                continue
            if token in self._name_to_idx:
                out = self.table[out][self._name_to_idx[token]]
                continue
            if "^" in token:
                base, _, exp = token.rpartition("^")
                out = self.table[out][self.power(self.element(base), int(exp))]
            else:
                out = self.table[out][self.element(token)]
        return out

    def generators(self) -> tuple[int, ...]:
        """A small generating set (greedy, deterministic)."""
        if "generators" not in self._cache:
            gens: list[int] = []
            have = _closure(self, ())
            full = (1 << self.order) - 1
            g = 1
            while have != full:
                while have >> g & 1:
                    g += 1
                gens.append(g)
                have = _closure_mask(self, have, (g,))
            self._cache["generators"] = tuple(gens)
        return self._cache["generators"]

    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            gens = self.generators()
            self._cache["abelian"] = all(
                self.table[a][b] == self.table[b][a]
                for a in gens for b in gens)
        return self._cache["abelian"]

    def is_p_group(self) -> tuple[bool, int]:
        """(True, p) if |G| is a power of the prime p; (False, 0) otherwise."""
        n = self.order
        if n == 1:
            return True, 1
        from .numutil import prime_factors
        fac = prime_factors(n)
        if len(fac) == 1:
            return True, next(iter(fac))
        return False, 0

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        if "classes" not in self._cache:
            seen = 0
            classes = []
            for g in range(self.order):
                if seen >> g & 1:
                    continue
                orbit = {g}
                frontier = [g]
                while frontier:
                    x = frontier.pop()
                    for t in range(self.order):
                        y = self.conj(x, t)
                        if y not in orbit:
                            orbit.add(y)
                            frontier.append(y)
                for x in orbit:
                    seen |= 1 << x
                classes.append(tuple(sorted(orbit)))
            self._cache["classes"] = classes
        return self._cache["classes"]


# ---------------------------------------------------------------------------
# closure helpers (bitmask based)


def _closure_mask(G: FiniteGroup, start_mask: int, extra: Iterable[int]) -> int:
    """Mask of the subgroup generated by the elements of start_mask plus extra.

    start_mask must already contain the identity or be 0.
    """
    mask = start_mask | 1
    members = [i for i in range(G.order) if mask >> i & 1]
    gens = [g for g in extra if not mask >> g & 1]
    for g in gens:
        mask |= 1 << g
        members.append(g)
    # generated closure: right-multiply known members by all generators
    # (plus the original member set, so 'join' of two subgroups works)
    table = G.table
    gens_all = list(dict.fromkeys(list(extra) + members))
    queue = list(members)
    while queue:
        x = queue.pop()
        row = table[x]
        for g in gens_all:
            y = row[g]
            if not mask >> y & 1:
                mask |= 1 << y
                queue.append(y)
    return mask


def _closure(G: FiniteGroup, gens: Iterable[int]) -> int:
    gens = list(gens)
    mask = 1
    members = [0]
    table = G.table
    queue = [0]
    while queue:
        x = queue.pop()
        row = table[x]
        for g in gens:
            y = row[g]
            if not mask >> y & 1:
                mask |= 1 << y
                members.append(y)
                queue.append(y)
    return mask


class Subgroup:
    """A subgroup of a FiniteGroup, stored as a bitmask over element indices."""

    __slots__ = ("parent", "mask", "gens", "_members")

    def __init__(self, parent: FiniteGroup, mask: int, gens: tuple[int, ...] = ()):
        self.parent = parent
        self.mask = mask
        self.gens = gens
        self._members: Optional[tuple[int, ...]] = None

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            self._members = tuple(i for i in range(self.parent.order)
                                  if self.mask >> i & 1)
        return self._members

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def contains(self, idx: int) -> bool:
        return bool(self.mask >> idx & 1)

    def __contains__(self, idx: int) -> bool:
        return bool(self.mask >> idx & 1)

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask | other.mask == other.mask

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.mask != other.mask

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.mask == self.mask)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))

    def __repr__(self) -> str:
        names = ",".join(self.parent.names[g] for g in self.gens) or "1"
        return f"Subgroup(<{names}>, order={self.order})"

    def is_abelian(self) -> bool:
        m = self.members
        return all(self.parent.table[a][b] == self.parent.table[b][a]
                   for i, a in enumerate(m) for b in m[i + 1:])

    def is_cyclic(self) -> bool:
        n = self.order
        return any(self.parent.element_order(g) == n for g in self.members)

    def induced(self) -> tuple[FiniteGroup, list[int]]:
        """Standalone group on this subgroup's members (parent names kept).

        Returns (group, to_parent) with to_parent[i] the parent index of
        the i-th element.
        """
        key = ("induced", self.mask)
        if key not in self.parent._cache:
            mem = list(self.members)
            pos = {g: i for i, g in enumerate(mem)}
            table = [[pos[self.parent.table[a][b]] for b in mem] for a in mem]
            names = [self.parent.names[g] for g in mem]
            H = FiniteGroup(table, names,
                            name=f"{self.parent.name}|{repr(self)}",
                            letters=self.parent.letters)
            self.parent._cache[key] = (H, mem)
        return self.parent._cache[key]


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = tuple(gens)
    return Subgroup(G, _closure(G, gens), gens)


def subgroup_from_mask(G: FiniteGroup, mask: int) -> Subgroup:
    """Wrap a mask known to be closed; generators recovered greedily."""
    members = [i for i in range(G.order) if mask >> i & 1]
    gens: list[int] = []
    have = 1
    for g in members:
        if not have >> g & 1:
            gens.append(g)
            have = _closure(G, gens)
    sub = Subgroup(G, mask, tuple(gens))
    if have != mask:
        raise InconsistentSpec("mask is not closed under multiplication")
    return sub


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, 1, ())


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (1 << G.order) - 1, G.generators())


# ---------------------------------------------------------------------------
# lattice operations


# groups whose subgroup lattice exceeds this are outside the intended
# desk scale (e.g. high-rank elementary abelian 2-groups)
MAX_SUBGROUPS = 20_000


def subgroups(G: FiniteGroup, cap: Optional[int] = None) -> list[Subgroup]:
    """All subgroups of G, each exactly once, sorted by (order, mask).

    Seeds with the cyclic subgroups and closes under joins with them.
    """
    _check_cap(G.order, cap)
    if "subgroups" not in G._cache:
        cyclic: dict[int, Subgroup] = {}
        for g in range(G.order):
            sub = subgroup_generated(G, (g,) if g else ())
            cyclic.setdefault(sub.mask, sub)
        seen: dict[int, Subgroup] = dict(cyclic)
        frontier = list(cyclic.values())
        cyc_list = list(cyclic.values())
        full = (1 << G.order) - 1
        while frontier:
            new: list[Subgroup] = []
            for H in frontier:
                if H.mask == full:
                    continue
                for C in cyc_list:
                    if C.mask | H.mask == H.mask:
                        continue
                    gens = tuple(dict.fromkeys(H.gens + C.gens))
                    mask = _closure(G, gens)
                    if mask not in seen:
                        sub = Subgroup(G, mask, gens)
                        seen[mask] = sub
                        new.append(sub)
            if len(seen) > MAX_SUBGROUPS:
                raise OrderCapExceeded(
                    f"{G.name} has more than {MAX_SUBGROUPS} subgroups")
            frontier = new
        subs = sorted(seen.values(), key=lambda s: (s.order, s.mask))
        G._cache["subgroups"] = subs
    return G._cache["subgroups"]


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    gens = H.gens if H.gens else H.members
    for g in G.generators():
        for h in gens:
            if not H.contains(G.conj(h, g)):
                return False
    return True


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    gens = H.gens if H.gens else H.members
    mask = 0
    for g in range(G.order):
        if all(H.contains(G.conj(h, g)) for h in gens):
            mask |= 1 << g
    return subgroup_from_mask(G, mask)


def centralizer(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    elems = list(elems)
    mask = 0
    t = G.table
    for g in range(G.order):
        if all(t[g][x] == t[x][g] for x in elems):
            mask |= 1 << g
    return subgroup_from_mask(G, mask)


def center(G: FiniteGroup) -> Subgroup:
    if "center" not in G._cache:
        G._cache["center"] = centralizer(G, G.generators())
    return G._cache["center"]


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    if "derived" not in G._cache:
        comms = {G.commutator(h, g) for h in range(G.order) for g in range(G.order)}
        comms.discard(0)
        G._cache["derived"] = subgroup_generated(G, sorted(comms))
    return G._cache["derived"]


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    if "normals" not in G._cache:
        G._cache["normals"] = [H for H in subgroups(G) if is_normal(G, H)]
    return G._cache["normals"]


def conjugate_subgroup(G: FiniteGroup, H: Subgroup, g: int) -> Subgroup:
    mask = 0
    for h in H.members:
        mask |= 1 << G.conj(h, g)
    return Subgroup(G, mask, tuple(G.conj(h, g) for h in H.gens))


def join(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    gens = tuple(dict.fromkeys(A.gens + B.gens))
    return Subgroup(G, _closure(G, gens), gens)


def intersect(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    return subgroup_from_mask(G, A.mask & B.mask)


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, list[int]]:
    """Quotient group G/N and the projection map element -> coset index.

    Coset representatives are the minimal element of each coset; the
    identity coset is index 0.
    """
    key = ("quotient", N.mask)
    if key in G._cache:
        return G._cache[key]
    if not is_normal(G, N):
        raise NotNormal(f"{N!r} is not normal in {G.name}")
    proj = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if proj[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for n in N.members:
            proj[G.table[n][g]] = idx
    table = [[proj[G.table[a][b]] for b in reps] for a in reps]
    names = ["1"] + [f"[{G.names[r]}]" for r in reps[1:]]
    Q = FiniteGroup(table, names, name=f"{G.name}/{repr(N)}", letters=G.letters)
    G._cache[key] = (Q, proj)
    return Q, proj


def minimal_normal_subgroups_of_quotient(H, K: Subgroup) -> list[Subgroup]:
    """Preimages of the minimal nontrivial normal subgroups of H/K.

    H may be a FiniteGroup or a Subgroup containing K; K must be normal
    in H. Results are subgroups M of H's parent with K < M <= H.
    """
    if isinstance(H, FiniteGroup):
        G = H
        Hsub = full_subgroup(G)
    else:
        G = H.parent
        Hsub = H
    if not (K <= Hsub):
        raise NotNormal("K is not contained in H")
    Hgrp, to_parent = Hsub.induced()
    pos = {g: i for i, g in enumerate(to_parent)}
    Kloc = subgroup_from_mask(Hgrp, _mask_map(K.members, pos))
    Q, proj = quotient(Hgrp, Kloc)  # raises NotNormal if K not normal in H
    normals = [M for M in normal_subgroups(Q) if M.order > 1]
    out = []
    for M in normals:
        if any(P.order < M.order and P <= M for P in normals):
            continue
        mask = 0
        for i in range(Hgrp.order):
            if M.contains(proj[i]):
                mask |= 1 << to_parent[i]
        out.append(subgroup_from_mask(G, mask))
    out.sort(key=lambda s: (s.order, s.mask))
    return out


def _mask_map(members: Iterable[int], pos: dict[int, int]) -> int:
    mask = 0
    for g in members:
        mask |= 1 << pos[g]
    return mask


def maximal_abelian_over(G: FiniteGroup, B: Subgroup) -> Subgroup:
    """A maximal abelian subgroup containing B (smallest mask tie-break)."""
    if not B.is_abelian():
        raise BNotAbelian("seed subgroup is not abelian")
    cands = [H for H in subgroups(G) if B <= H and H.is_abelian()]
    maxi = [H for H in cands if not any(H < C for C in cands)]
    return min(maxi, key=lambda s: s.mask)


def all_maximal_abelian_over(G: FiniteGroup, B: Subgroup) -> list[Subgroup]:
    if not B.is_abelian():
        raise BNotAbelian("seed subgroup is not abelian")
    cands = [H for H in subgroups(G) if B <= H and H.is_abelian()]
    return [H for H in cands if not any(H < C for C in cands)]


def is_metabelian(G: FiniteGroup) -> bool:
    return derived_subgroup(G).is_abelian()


def is_nilpotent_group(G: FiniteGroup) -> bool:
    """Lower central series reaches 1."""
    if "nilpotent" not in G._cache:
        cur = full_subgroup(G)
        while True:
            comms = sorted({G.commutator(h, g) for h in cur.members
                            for g in range(G.order)} - {0})
            nxt = subgroup_generated(G, comms)
            if nxt.mask == cur.mask:
                G._cache["nilpotent"] = cur.order == 1
                break
            cur = nxt
    return G._cache["nilpotent"]


def is_solvable_group(G: FiniteGroup) -> bool:
    cur = full_subgroup(G)
    while True:
        members = cur.members
        comms = sorted({G.commutator(h, g) for h in members for g in members} - {0})
        nxt = subgroup_generated(G, comms)
        if nxt.mask == cur.mask:
            return cur.order == 1
        cur = nxt


def is_dedekind(G: FiniteGroup) -> bool:
    """All subgroups normal."""
    return all(is_normal(G, H) for H in subgroups(G))


# ---------------------------------------------------------------------------
# fingerprints and small-order isomorphism


def fingerprint(G: FiniteGroup) -> tuple:
    """Cheap isomorphism invariants used to identify catalog groups."""
    if "fingerprint" not in G._cache:
        orders: dict[int, int] = {}
        for g in range(G.order):
            o = G.element_order(g)
            orders[o] = orders.get(o, 0) + 1
        der = derived_subgroup(G)
        series = [G.order]
        cur = der
        while True:
            series.append(cur.order)
            if cur.order == 1 or cur.order == series[-2]:
                break  # reached 1, or stabilized (perfect subgroup)
            Hgrp, _ = cur.induced()
            nxt_loc = derived_subgroup(Hgrp)
            _, to_parent = cur.induced()
            mask = 0
            for i in nxt_loc.members:
                mask |= 1 << to_parent[i]
            cur = subgroup_from_mask(G, mask)
        ab, proj = quotient(G, der)
        ab_profile = tuple(sorted((ab.element_order(g) for g in range(ab.order))))
        G._cache["fingerprint"] = (
            G.order,
            tuple(sorted(orders.items())),
            center(G).order,
            tuple(series),
            ab_profile,
            len(G.conjugacy_classes()),
        )
    return G._cache["fingerprint"]


def hom_from_gen_images(G: FiniteGroup, H: FiniteGroup,
                        pairs: dict[int, int]) -> Optional[list[int]]:
    """Extend generator images to a homomorphism G -> H, or None.

    The given generators must generate G. Verifies multiplicativity on
    the whole table.
    """
    img = [-1] * G.order
    img[0] = 0
    frontier = [0]
    gens = list(pairs.items())
    while frontier:
        x = frontier.pop()
        for g, hg in gens:
            y = G.table[x][g]
            hy = H.table[img[x]][hg]
            if img[y] < 0:
                img[y] = hy
                frontier.append(y)
            elif img[y] != hy:
                return None
    if any(v < 0 for v in img):
        return None
    for a in range(G.order):
        ra, ia = G.table[a], img[a]
        for b in range(G.order):
            if img[ra[b]] != H.table[ia][img[b]]:
                return None
    return img


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[list[int]]:
    """Exhaustive isomorphism search; intended for order <= 24.

    Differing fingerprints settle non-isomorphism at any size; the
    exhaustive search itself refuses above order 64 rather than claim a
    negative it has not checked.
    """
    if G.order != H.order:
        return None
    if fingerprint(G) != fingerprint(H):
        return None
    if G.order > 64:
        raise InconsistentSpec(
            "exhaustive isomorphism search is limited to order <= 64")
    gens = G.generators()
    pools = []
    for g in gens:
        o = G.element_order(g)
        pools.append([h for h in range(H.order) if H.element_order(h) == o])
    for images in itertools.product(*pools):
        img = hom_from_gen_images(G, H, dict(zip(gens, images)))
        if img is not None and len(set(img)) == G.order:
            return img
    return None


# ---------------------------------------------------------------------------
# builders


def _name_power(letter: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return letter
    return f"{letter}^{e}"


def _join_name(parts: list[str]) -> str:
    parts = [p for p in parts if p]
    return "*".join(parts) if parts else "1"


def cyclic(n: int, letter: str = "x", cap: Optional[int] = None) -> FiniteGroup:
    if n < 1:
        raise InconsistentSpec("cyclic group order must be positive")
    _check_cap(n, cap)
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = [_join_name([_name_power(letter, i)]) for i in range(n)]
    return FiniteGroup(table, names, name=f"C{n}", letters=(letter,))


def abelian(orders: Sequence[int], letters: Sequence[str],
            cap: Optional[int] = None, name: Optional[str] = None) -> FiniteGroup:
    """Direct product of cyclic groups with one generator letter each."""
    if len(orders) != len(letters):
        raise InconsistentSpec("orders/letters length mismatch")
    n = math.prod(orders)
    _check_cap(n, cap)
    elems = list(itertools.product(*(range(o) for o in orders)))
    pos = {e: i for i, e in enumerate(elems)}
    table = [[pos[tuple((a + b) % o for a, b, o in zip(x, y, orders))]
              for y in elems] for x in elems]
    names = [_join_name([_name_power(l, e) for l, e in zip(letters, x)])
             for x in elems]
    gname = name or "x".join(f"C{o}" for o in orders)
    return FiniteGroup(table, names, name=gname, letters=tuple(letters))


def elementary_abelian(p: int, rank: int, cap: Optional[int] = None) -> FiniteGroup:
    from .numutil import is_prime
    if not is_prime(p):
        raise InconsistentSpec(f"{p} is not prime")
    if rank < 1 or rank > 8:
        raise InconsistentSpec("rank must be between 1 and 8")
    letters = "abcdefgh"[:rank]
    return abelian([p] * rank, list(letters), cap=cap, name=f"EA({p},{rank})")


def metacyclic(m: int, n: int, t: int, r: int, letters=("a", "b"),
               cap: Optional[int] = None, name: Optional[str] = None) -> FiniteGroup:
    """<a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>, of order m*n.

    Requires r^n = 1 (mod m) and t*r = t (mod m) so the presentation is
    consistent with |a| = m.
    """
    if m < 1 or n < 1:
        raise InconsistentSpec("orders must be positive")
    _check_cap(m * n, cap)
    r %= max(m, 1)
    t %= max(m, 1)
    if pow(r, n, m) % m != 1 % m:
        raise InconsistentSpec(f"r^n != 1 mod m for (m,n,t,r)=({m},{n},{t},{r})")
    if t * r % m != t % m:
        raise InconsistentSpec(f"a^t is not centralized by b for (m,n,t,r)=({m},{n},{t},{r})")
    rpow = [1 % m]
    for _ in range(n):
        rpow.append(rpow[-1] * r % m)
    la, lb = letters
    # a-powers first: <a> occupies the lowest indices, so it wins
    # smallest-bitset tie-breaks among maximal abelian subgroups
    elems = [(i, j) for j in range(n) for i in range(m)]
    pos = {e: k for k, e in enumerate(elems)}

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        j = j1 + j2
        carry = j // n
        return ((i1 + i2 * rpow[j1] + t * carry) % m, j % n)

    table = [[pos[mul(x, y)] for y in elems] for x in elems]
    names = [_join_name([_name_power(la, i), _name_power(lb, j)]) for i, j in elems]
    gname = name or f"Metacyclic({m},{n},{t},{r})"
    return FiniteGroup(table, names, name=gname, letters=tuple(letters))


def dihedral(order: int, cap: Optional[int] = None) -> FiniteGroup:
    if order % 2 or order < 2:
        raise InconsistentSpec("dihedral order must be even and >= 2")
    n = order // 2
    return metacyclic(n, 2, 0, (n - 1) % max(n, 1), cap=cap, name=f"D{order}")


def quaternion(order: int, cap: Optional[int] = None) -> FiniteGroup:
    if order % 4 or order < 8:
        raise InconsistentSpec("generalized quaternion order must be a multiple of 4, >= 8")
    n = order // 4
    return metacyclic(2 * n, 2, n, 2 * n - 1, cap=cap, name=f"Q{order}")


def metacyclic_amitsur(m: int, r: int, cap: Optional[int] = None) -> FiniteGroup:
    """<A, B | A^m = 1, B^n = A^t, B A B^-1 = A^r> with s = gcd(r-1, m),
    t = m/s, n = ord_m(r)."""
    from .numutil import ord_mod
    if math.gcd(m, r) != 1:
        raise InconsistentSpec(f"gcd({m},{r}) != 1")
    s = math.gcd(r - 1, m) if m > 1 else 1
    t = m // s
    n = ord_mod(m, r)
    return metacyclic(m, n, t, r, cap=cap, name=f"G({m},{r})")


def semidirect_cyclic(p: int, n: int, r0: int, cap: Optional[int] = None) -> FiniteGroup:
    """<x, y | x^p = y^n = 1, y x y^-1 = x^r0>."""
    if pow(r0, n, p) != 1 % p:
        raise InconsistentSpec(f"r0^n != 1 mod p for ({p},{n},{r0})")
    return metacyclic(p, n, 0, r0, letters=("x", "y"), cap=cap,
                      name=f"C{p}:C{n}(r0={r0})")


def cyclic_extension(base: FiniteGroup, conj_images: dict[int, int], n_ext: int,
                     power_elem: int, new_letter: str,
                     cap: Optional[int] = None, name: Optional[str] = None,
                     images_are_right: bool = True) -> FiniteGroup:
    """Extend base by a new generator c with c^n_ext = power_elem in base and
    x^c = c^-1 x c given on generators by conj_images.

    Consistency (checked): the extension of conj_images is an automorphism
    phi of base, phi fixes power_elem, and phi^n_ext is conjugation by
    power_elem.
    """
    order = base.order * n_ext
    _check_cap(order, cap)
    img = hom_from_gen_images(base, base, conj_images)
    if img is None or len(set(img)) != base.order:
        raise InconsistentSpec("conjugation images do not extend to an automorphism")
    phi_r = img
    if images_are_right:
        phi_l = [0] * base.order
        for x, y in enumerate(phi_r):
            phi_l[y] = x
    else:
        phi_l = phi_r
        phi_r = [0] * base.order
        for x, y in enumerate(phi_l):
            phi_r[y] = x
    z = power_elem
    if phi_r[z] != z:
        raise InconsistentSpec("c^n must be fixed by conjugation by c")
    # phi_l^n_ext must equal conjugation x -> z x z^-1
    cur = list(range(base.order))
    for _ in range(n_ext):
        cur = [phi_l[x] for x in cur]
    for x in range(base.order):
        if cur[x] != base.conj_left(x, z):
            raise InconsistentSpec("action order does not match the extension degree")
    phi_l_pows = [list(range(base.order))]
    for _ in range(n_ext - 1):
        phi_l_pows.append([phi_l[x] for x in phi_l_pows[-1]])

    elems = [(x, k) for x in range(base.order) for k in range(n_ext)]
    pos = {e: i for i, e in enumerate(elems)}

    def mul(u, v):
        x1, k1 = u
        x2, k2 = v
        k = k1 + k2
        carry = k // n_ext
        y = base.table[x1][phi_l_pows[k1][x2]]
        if carry:
            y = base.table[y][z]
        return (y, k % n_ext)

    table = [[pos[mul(u, v)] for v in elems] for u in elems]
    names = []
    for x, k in elems:
        bn = base.names[x]
        parts = [] if bn == "1" else [bn]
        parts.append(_name_power(new_letter, k))
        names.append(_join_name(parts))
    gname = name or f"{base.name}.C{n_ext}"
    return FiniteGroup(table, names, name=gname,
                       letters=base.letters + (new_letter,))


def _mat_mul(A, B, p):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) % p for j in range(n)]
            for i in range(n)]


def _mat_eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_order(M, p, limit=10_000):
    I = _mat_eye(len(M))
    A = [row[:] for row in M]
    k = 1
    while A != I:
        A = _mat_mul(A, M, p)
        k += 1
        if k > limit:
            raise InconsistentSpec("action matrix order too large")
    return k


def _mat_inv(M, p):
    o = _mat_order(M, p)
    A = _mat_eye(len(M))
    for _ in range(o - 1):
        A = _mat_mul(A, M, p)
    return A


def semidirect_vector(p: int, rank: int, matrix: Sequence[Sequence[int]], q: int,
                      cap: Optional[int] = None) -> FiniteGroup:
    """(C_p)^rank semidirect C_q; the C_q generator c acts by x^c = M x
    on exponent vectors."""
    from .numutil import is_prime
    if not is_prime(p):
        raise InconsistentSpec(f"{p} is not prime")
    _check_cap(p ** rank * q, cap)
    M = [[v % p for v in row] for row in matrix]
    if len(M) != rank or any(len(row) != rank for row in M):
        raise InconsistentSpec("action matrix has wrong shape")
    if _mat_order(M, p) != q:
        raise InconsistentSpec("action matrix is not of order q")
    base = elementary_abelian(p, rank)
    # base elements are exponent tuples in lexicographic order
    elems = list(itertools.product(*(range(p) for _ in range(rank))))
    pos = {e: i for i, e in enumerate(elems)}
    conj_images = {}
    for k in range(rank):
        e = tuple(1 if i == k else 0 for i in range(rank))
        img = tuple(sum(M[i][j] * e[j] for j in range(rank)) % p for i in range(rank))
        conj_images[pos[e]] = pos[img]
    letter = "abcdefgh"[rank]
    return cyclic_extension(base, conj_images, q, 0, letter, cap=cap,
                            name=f"EA({p},{rank}):C{q}")


def direct_product(G1: FiniteGroup, G2: FiniteGroup,
                   cap: Optional[int] = None) -> FiniteGroup:
    _check_cap(G1.order * G2.order, cap)
    names2 = G2.names
    letters2 = G2.letters
    shared = set(G1.letters) & set(G2.letters)
    if shared:
        unused = [c for c in "abcdefghijklmnopqrstuvwxyz"
                  if c not in G1.letters and c not in G2.letters]
        ren = {}
        for l in G2.letters:
            ren[l] = unused.pop(0) if l in shared else l
        pat = re.compile("|".join(re.escape(l) for l in ren))
        names2 = [pat.sub(lambda m: ren[m.group(0)], nm) for nm in G2.names]
        letters2 = tuple(ren[l] for l in G2.letters)
    n2 = G2.order
    order = G1.order * n2
    table = [[0] * order for _ in range(order)]
    for a1 in range(G1.order):
        for b1 in range(n2):
            i = a1 * n2 + b1
            row = table[i]
            r1, r2 = G1.table[a1], G2.table[b1]
            for a2 in range(G1.order):
                base = r1[a2] * n2
                for b2 in range(n2):
                    row[a2 * n2 + b2] = base + r2[b2]
    names = []
    for a in range(G1.order):
        for b in range(n2):
            parts = []
            if G1.names[a] != "1":
                parts.append(G1.names[a])
            if names2[b] != "1":
                parts.append(names2[b])
            names.append(_join_name(parts))
    return FiniteGroup(table, names, name=f"{G1.name}x{G2.name}",
                       letters=G1.letters + letters2)


def central_product(G1: FiniteGroup, G2: FiniteGroup, ident_exp: int = 1,
                    cap: Optional[int] = None) -> FiniteGroup:
    """Quotient of G1 x G2 identifying Z(G1) with the unique central cyclic
    subgroup of G2 of the same order, via generator -> generator^ident_exp."""
    Z1 = center(G1)
    if not Z1.is_cyclic():
        raise InconsistentSpec("center of the first factor must be cyclic")
    m = Z1.order
    if m == 1:
        return direct_product(G1, G2, cap=cap)
    z0 = min(g for g in Z1.members if G1.element_order(g) == m)
    Z2 = center(G2)
    targets = []
    for w in sorted(Z2.members):
        if G2.element_order(w) == m:
            sub = subgroup_generated(G2, (w,))
            if sub.mask not in [t.mask for t in targets]:
                targets.append(sub)
    if len(targets) != 1:
        raise InconsistentSpec(
            f"need exactly one central cyclic subgroup of order {m} in the "
            f"second factor, found {len(targets)}")
    if math.gcd(ident_exp, m) != 1:
        raise InconsistentSpec("identification exponent must be a unit")
    w0 = min(g for g in targets[0].members if G2.element_order(g) == m)
    _check_cap(G1.order * G2.order // m, cap)
    # the intermediate direct product may exceed the cap; only the quotient counts
    P = direct_product(G1, G2, cap=G1.order * G2.order)
    n2 = G2.order
    glue = P.table[z0 * n2][0 * n2 + G2.power(G2.inv(w0), ident_exp)]
    N = subgroup_generated(P, (glue,))
    Q, _ = quotient(P, N)
    Q.name = f"{G1.name}~{G2.name}"
    return Q


def alternating5(cap: Optional[int] = None) -> FiniteGroup:
    """A5 as permutations of 5 points; names in cycle notation.

    Product convention: (p*q) means apply p first, then q.
    """
    _check_cap(60, cap)
    perms = []
    for p in itertools.permutations(range(5)):
        inversions = sum(1 for i in range(5) for j in range(i + 1, 5)
                         if p[i] > p[j])
        if inversions % 2 == 0:
            perms.append(p)
    perms.sort()
    pos = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # apply p then q
        return tuple(q[p[i]] for i in range(5))

    table = [[pos[compose(p, q)] for q in perms] for p in perms]

    def cycle_name(p):
        seen = [False] * 5
        parts = []
        for i in range(5):
            if seen[i] or p[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = p[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = p[j]
            parts.append("(" + ",".join(str(k + 1) for k in cyc) + ")")
        return "".join(parts) if parts else "1"

    names = [cycle_name(p) for p in perms]
    return FiniteGroup(table, names, name="A5", letters=())


def from_table(table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
               name: str = "G", cap: Optional[int] = None) -> FiniteGroup:
    _check_cap(len(table), cap)
    if names is None:
        names = ["1"] + [f"g{i}" for i in range(1, len(table))]
    return FiniteGroup(table, names, name=name)


# ---------------------------------------------------------------------------
# finite field helper: matrices of prime order for vector-family sweeps


def _poly_mulmod(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce modulo monic f
    n = len(f) - 1
    for i in range(len(out) - 1, n - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(n):
                out[i - n + j] = (out[i - n + j] - c * f[j]) % p
    return out[:n] + [0] * (n - len(out[:n]))


def _poly_powmod(base, e, f, p):
    n = len(f) - 1
    out = [0] * n
    out[0] = 1 % p
    b = _poly_mulmod(base, [1], f, p)  # reduce base modulo f first
    while e:
        if e & 1:
            out = _poly_mulmod(out, b, f, p)
        b = _poly_mulmod(b, b, f, p)
        e >>= 1
    return out


def order_q_matrix(p: int, n: int, q: int) -> list[list[int]]:
    """A rank-n matrix over F_p of multiplicative order q with irreducible
    characteristic polynomial (so the action on (C_p)^n is irreducible).

    Requires ord_q(p) = n, i.e. q has a degree-n irreducible factor in
    x^q - 1 over F_p.
    """
    from .numutil import ord_mod
    if ord_mod(q, p) != n:
        raise InconsistentSpec(f"ord_{q}({p}) != {n}; no irreducible order-{q} action")
    x = [0, 1]
    for coeffs in itertools.product(range(p), repeat=n):
        f = list(coeffs) + [1]  # monic degree n
        xred = _poly_mulmod(x, [1], f, p)  # x reduced modulo f
        # f must divide x^q - 1: x^q = 1 mod f
        xq = _poly_powmod(x, q, f, p)
        if xq != [1 % p] + [0] * (n - 1):
            continue
        # irreducible: x^(p^n) = x mod f and x^(p^d) != x for proper divisors d
        ok = True
        for d in range(1, n):
            if n % d == 0 and _poly_powmod(x, p ** d, f, p) == xred:
                ok = False
                break
        if not ok:
            continue
        if _poly_powmod(x, p ** n, f, p) != xred:
            continue
        # companion matrix (action x * v in F_p[x]/(f))
        M = [[0] * n for _ in range(n)]
        for j in range(n - 1):
            M[j + 1][j] = 1
        for i in range(n):
            M[i][n - 1] = (-f[i]) % p
        if _mat_order(M, p) == q:
            return M
    raise InconsistentSpec(f"no order-{q} irreducible matrix found for p={p}, n={n}")
