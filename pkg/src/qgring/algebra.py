"""Exact arithmetic in the rational group algebra Q[G].

An AlgElem stores a common positive denominator and one integer numerator
per group element, always normalized so gcd(den, gcd(nums)) = 1. All
arithmetic is exact; no floats anywhere. Elements are immutable values.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Optional

from .errors import GroupMismatch
from .groups import FiniteGroup, Subgroup, subgroup_from_mask


class AlgElem:
    """An element sum(c_g * g) of Q[G] with exact rational coefficients."""

    __slots__ = ("group", "den", "nums", "_support")

    def __init__(self, group: FiniteGroup, nums: list[int], den: int = 1,
                 _normalized: bool = False):
        self.group = group
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den, nums = -den, [-v for v in nums]
        if not _normalized:
            g = den
            for v in nums:
                if v:
                    g = math.gcd(g, v)
                    if g == 1:
                        break
            if g > 1:
                den //= g
                nums = [v // g for v in nums]
        self.den = den
        self.nums = nums
        self._support: Optional[tuple[int, ...]] = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(G: FiniteGroup) -> "AlgElem":
        return AlgElem(G, [0] * G.order, 1, _normalized=True)

    @staticmethod
    def one(G: FiniteGroup) -> "AlgElem":
        nums = [0] * G.order
        nums[0] = 1
        return AlgElem(G, nums, 1, _normalized=True)

    @staticmethod
    def basis(G: FiniteGroup, g: int) -> "AlgElem":
        nums = [0] * G.order
        nums[g] = 1
        return AlgElem(G, nums, 1, _normalized=True)

    @staticmethod
    def from_coeffs(G: FiniteGroup, coeffs: dict[int, Fraction | int]) -> "AlgElem":
        den = 1
        for c in coeffs.values():
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        nums = [0] * G.order
        for g, c in coeffs.items():
            f = Fraction(c)
            nums[g] = f.numerator * (den // f.denominator)
        return AlgElem(G, nums, den)

    # -- queries ---------------------------------------------------------------

    @property
    def support(self) -> tuple[int, ...]:
        if self._support is None:
            self._support = tuple(g for g, v in enumerate(self.nums) if v)
        return self._support

    def is_zero(self) -> bool:
        return not any(self.nums)

    def coeff(self, g: int) -> Fraction:
        return Fraction(self.nums[g], self.den)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(v, self.den) for v in self.nums]

    def augmentation(self) -> Fraction:
        return Fraction(sum(self.nums), self.den)

    def key(self) -> tuple:
        """Canonical hashable key (used for dedup and deterministic sort)."""
        return (self.den, tuple(self.nums))

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgElem) and other.group is self.group
                and other.den == self.den and other.nums == self.nums)

    def __hash__(self) -> int:
        return hash((id(self.group), self.den, tuple(self.nums)))

    def __repr__(self) -> str:
        parts = []
        for g in self.support[:8]:
            c = self.coeff(g)
            parts.append(f"{c}*{self.group.names[g]}")
        more = "" if len(self.support) <= 8 else f" ... ({len(self.support)} terms)"
        return "AlgElem(" + (" + ".join(parts) if parts else "0") + more + ")"

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "AlgElem") -> None:
        if other.group is not self.group:
            raise GroupMismatch("elements live over different groups")

    def __add__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        d = self.den * other.den // math.gcd(self.den, other.den)
        f1, f2 = d // self.den, d // other.den
        nums = [a * f1 + b * f2 for a, b in zip(self.nums, other.nums)]
        return AlgElem(self.group, nums, d)

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        self._check(other)
        d = self.den * other.den // math.gcd(self.den, other.den)
        f1, f2 = d // self.den, d // other.den
        nums = [a * f1 - b * f2 for a, b in zip(self.nums, other.nums)]
        return AlgElem(self.group, nums, d)

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.group, [-v for v in self.nums], self.den, _normalized=True)

    def __mul__(self, other) -> "AlgElem":
        if isinstance(other, AlgElem):
            self._check(other)
            table = self.group.table
            out = [0] * self.group.order
            bn = other.nums
            bsup = other.support
            for g in self.support:
                ag = self.nums[g]
                row = table[g]
                for h in bsup:
                    out[row[h]] += ag * bn[h]
            return AlgElem(self.group, out, self.den * other.den)
        f = Fraction(other)
        return AlgElem(self.group, [v * f.numerator for v in self.nums],
                       self.den * f.denominator)

    def __rmul__(self, other) -> "AlgElem":
        return self.__mul__(other)

    def conjugate(self, g: int) -> "AlgElem":
        """g^-1 * self * g (coefficient permutation)."""
        G = self.group
        out = [0] * G.order
        for x in self.support:
            out[G.conj(x, g)] = self.nums[x]
        return AlgElem(G, out, self.den, _normalized=True)

    def conjugate_left(self, g: int) -> "AlgElem":
        """g * self * g^-1."""
        G = self.group
        out = [0] * G.order
        for x in self.support:
            out[G.conj_left(x, g)] = self.nums[x]
        return AlgElem(G, out, self.den, _normalized=True)

    # -- predicates ---------------------------------------------------------------

    def is_integral(self) -> bool:
        return self.den == 1

    def is_central(self) -> bool:
        """True iff conjugation by every generator of G fixes the element."""
        G = self.group
        nums = self.nums
        for g in G.generators():
            for x in range(G.order):
                if nums[G.conj(x, g)] != nums[x]:
                    return False
        return True

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_nilpotent(self) -> bool:
        """True iff some power vanishes; uses repeated squaring up to the
        first power of two >= |G| (nilpotency index is at most dim Q[G])."""
        n = self.group.order
        x = self
        if x.is_zero():
            return True
        e = 1
        while e < n:
            x = x * x
            if x.is_zero():
                return True
            e *= 2
        return x.is_zero()

    def centralizer_subgroup(self) -> Subgroup:
        """Cen_G(alpha) = {g : g*alpha = alpha*g}."""
        G = self.group
        mask = 0
        for g in range(G.order):
            if all(self.nums[G.conj(x, g)] == self.nums[x] for x in range(G.order)):
                mask |= 1 << g
        return subgroup_from_mask(G, mask)

    # -- serialization ----------------------------------------------------------

    def to_json(self, spec: Optional[str] = None) -> str:
        coeffs = [[str(Fraction(v, self.den).numerator),
                   str(Fraction(v, self.den).denominator)] for v in self.nums]
        return json.dumps({"group": spec or self.group.name, "coeffs": coeffs})

    @staticmethod
    def from_json(G: FiniteGroup, data: str) -> "AlgElem":
        obj = json.loads(data)
        coeffs = obj["coeffs"]
        if len(coeffs) != G.order:
            raise GroupMismatch("coefficient count does not match group order")
        return AlgElem.from_coeffs(
            G, {i: Fraction(int(n), int(d)) for i, (n, d) in enumerate(coeffs)})


# ---------------------------------------------------------------------------
# subgroup sums


def hat(H: Subgroup) -> AlgElem:
    """Sum of the elements of H, in Z[G]."""
    G = H.parent
    nums = [0] * G.order
    for g in H.members:
        nums[g] = 1
    return AlgElem(G, nums, 1, _normalized=True)


def tilde(H: Subgroup) -> AlgElem:
    """hat(H)/|H|, an idempotent of Q[G]."""
    G = H.parent
    nums = [0] * G.order
    for g in H.members:
        nums[g] = 1
    return AlgElem(G, nums, H.order)


def hat_elem(G: FiniteGroup, g: int) -> AlgElem:
    """Sum over the cyclic group generated by g."""
    from .groups import subgroup_generated
    return hat(subgroup_generated(G, (g,)))


def tilde_elem(G: FiniteGroup, g: int) -> AlgElem:
    from .groups import subgroup_generated
    return tilde(subgroup_generated(G, (g,)))


def one_minus(G: FiniteGroup, g: int) -> AlgElem:
    """1 - g."""
    nums = [0] * G.order
    nums[0] += 1
    nums[g] -= 1
    return AlgElem(G, nums, 1)


def one_plus(G: FiniteGroup, g: int) -> AlgElem:
    nums = [0] * G.order
    nums[0] += 1
    nums[g] += 1
    return AlgElem(G, nums, 1)
