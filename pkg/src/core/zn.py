"""
Modular arithmetic over Z_n: cyclic subgroups, cosets, units and element order.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import FrozenSet, Iterable, List, Tuple


@dataclass(frozen=True)
class Residue:
    """Element of Z_n, canonicalized to [0, n)"""
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"Modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self) -> int:
        return self.value

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __add__(self, other) -> "Residue":
        return Residue(self.value + int(other), self.modulus)

    def __mul__(self, other) -> "Residue":
        return Residue(self.value * int(other), self.modulus)

    @property
    def order(self) -> int:
        return element_order(self.value, self.modulus)


@dataclass(frozen=True)
class CyclicSubgroup:
    """The additive subgroup <w> of Z_n"""
    modulus: int
    generator: int
    elements: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.modulus // self.order

    def __contains__(self, x: int) -> bool:
        return x % self.modulus % (self.modulus // self.order) == 0

    def coset_of(self, x: int) -> Tuple[int, ...]:
        """Coset x + <w>, sorted"""
        return tuple(sorted((x + e) % self.modulus for e in self.elements))


def element_order(w: int, n: int) -> int:
    """Additive order of w in Z_n"""
    return n // gcd(n, w % n)


@lru_cache(maxsize=None)
def divisors(n: int) -> Tuple[int, ...]:
    """Positive divisors of n, ascending"""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def subgroup(n: int, w: int) -> CyclicSubgroup:
    """Additive cyclic subgroup of Z_n generated by w"""
    if n < 1:
        raise ValueError(f"Modulus must be positive, got {n}")
    if not 0 <= w < n:
        raise ValueError(f"Generator {w} outside [0, {n})")
    step = gcd(n, w)  # <w> = <gcd(n, w)>
    return CyclicSubgroup(modulus=n, generator=w, elements=tuple(range(0, n, step)))


def cosets(sub: CyclicSubgroup) -> List[Tuple[int, ...]]:
    """All cosets of sub in Z_n, trivial coset first, ordered by minimum element"""
    # every coset of <d> has a unique representative in [0, d)
    return [sub.coset_of(r) for r in range(sub.index)]


def units(n: int) -> FrozenSet[int]:
    """U(n) = {t : gcd(t, n) = 1}"""
    if n == 1:
        return frozenset({0})
    return frozenset(t for t in range(1, n) if gcd(t, n) == 1)


def is_union_of_cosets(S: Iterable[int], sub: CyclicSubgroup, include_trivial: bool) -> bool:
    """True iff S is exactly a union of cosets of sub (excluding the trivial coset unless allowed)"""
    members = {x % sub.modulus for x in S}
    if len(members) % sub.order:
        return False
    period = sub.modulus // sub.order
    for x in members:
        if not include_trivial and x % period == 0:
            return False
        # closed under translation by the subgroup generator
        if (x + period) % sub.modulus not in members:
            return False
    return True
