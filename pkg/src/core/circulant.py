"""
Circulant graphs C_n(A): connection-set validation, construction and
the multiplier algebra over the units of Z_n.
"""

import logging
import re
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from core.errors import NotInverseClosedError, OutOfRangeError, TokenError, ZeroGeneratorError
from core.graph import Graph
from core.zn import units
from utils.helpers import format_generators, mask_of

logger = logging.getLogger(__name__)

# "±3", "+-3", "pm3", "-3", "3"
_TOKEN_RE = re.compile(r"^(±|\+-|-\+|pm|\+/-)?\s*(-?\d+)$", re.IGNORECASE)


@dataclass(frozen=True)
class ConnectionSet:
    """Inverse-closed subset of Z_n without 0"""
    modulus: int
    members: Tuple[int, ...]

    def __post_init__(self):
        n = self.modulus
        if n < 1:
            raise OutOfRangeError(f"Modulus must be positive, got {n}")
        canonical = tuple(sorted({a % n for a in self.members}))
        if 0 in canonical:
            raise ZeroGeneratorError(f"0 is not a valid generator of C_{n}")
        missing = [a for a in canonical if (n - a) % n not in canonical]
        if missing:
            raise NotInverseClosedError(
                f"Connection set of C_{n} is not inverse-closed: {missing[0]} lacks {n - missing[0]}"
            )
        object.__setattr__(self, "members", canonical)

    @classmethod
    def generated_by(cls, n: int, representatives: Iterable[int]) -> "ConnectionSet":
        """Close representatives under negation, e.g. C_8(1,3) -> {1,3,5,7}"""
        reps = [a % n for a in representatives]
        return cls(n, tuple(set(reps) | {(n - a) % n for a in reps}))

    def __contains__(self, a: int) -> bool:
        return a % self.modulus in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    @property
    def representatives(self) -> Tuple[int, ...]:
        """Members up to sign, i.e. those at most n/2"""
        return tuple(a for a in self.members if 2 * a <= self.modulus)

    def scaled(self, t: int) -> "ConnectionSet":
        """t * A"""
        return ConnectionSet(self.modulus, tuple(t * a for a in self.members))

    def label(self) -> str:
        return format_generators(self.modulus, self.members)


@dataclass(frozen=True)
class CirculantSpec:
    """C_n(A) with its gcd-derived structural flags"""
    n: int
    connection_set: ConnectionSet
    components: int = field(init=False)
    bipartite: bool = field(init=False)
    valency: int = field(init=False)

    def __post_init__(self):
        if self.connection_set.modulus != self.n:
            raise OutOfRangeError(
                f"Connection set modulus {self.connection_set.modulus} does not match n={self.n}"
            )
        A = self.connection_set.members
        object.__setattr__(self, "components", reduce(gcd, A, self.n))
        object.__setattr__(self, "valency", len(A))
        object.__setattr__(self, "bipartite", _circulant_bipartite(self.n, A))

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "CirculantSpec":
        return cls(n, ConnectionSet(n, tuple(members)))

    @property
    def connected(self) -> bool:
        return self.components == 1

    @property
    def canonical(self) -> str:
        """C_n(a1,a2,...) with members ascending"""
        return f"C_{self.n}({','.join(str(a) for a in self.connection_set.members)})"

    @property
    def name(self) -> str:
        """C_n(±a,...) shorthand"""
        return f"C_{self.n}({self.connection_set.label()})"

    def __str__(self) -> str:
        return self.name


def _circulant_bipartite(n: int, A: Sequence[int]) -> bool:
    if not A:
        return True
    # each component is C_m(A/g) with m = n/g; bipartite iff m even and every a/g odd
    g = reduce(gcd, A, n)
    return (n // g) % 2 == 0 and all((a // g) % 2 == 1 for a in A)


def _parse_token(n: int, token: str) -> List[int]:
    match = _TOKEN_RE.match(token.strip())
    if not match:
        raise TokenError(f"Cannot parse generator token '{token}'")
    sign, digits = match.groups()
    value = int(digits)
    if not -n < value < n:
        raise OutOfRangeError(f"Generator {value} outside (-{n}, {n})")
    if value % n == 0:
        raise ZeroGeneratorError(f"Generator '{token}' is 0 mod {n}")
    a = value % n
    return [a, (n - a) % n] if sign else [a]


def split_tokens(tokens: Union[str, Iterable[str]]) -> List[str]:
    if isinstance(tokens, str):
        tokens = [tokens]
    parts = []
    for chunk in tokens:
        parts.extend(p for p in re.split(r"[,\s]+", str(chunk)) if p)
    return parts


def parse_connection_set(n: int, tokens: Union[str, Iterable[str]]) -> ConnectionSet:
    """Parse '±1,±3,4'-style tokens into a validated connection set"""
    if n < 1:
        raise OutOfRangeError(f"Order must be positive, got {n}")
    members = set()
    for token in split_tokens(tokens):
        members.update(_parse_token(n, token))
    for a in sorted(members):
        if (n - a) % n not in members:
            raise NotInverseClosedError(
                f"Generator {a} listed without its inverse {n - a} mod {n}; write ±{min(a, n - a)}"
            )
    return ConnectionSet(n, tuple(members))


def parse_spec(n: int, tokens: Union[str, Iterable[str]]) -> CirculantSpec:
    return CirculantSpec(n, parse_connection_set(n, tokens))


def build(spec: CirculantSpec) -> Graph:
    """u ~ v iff u - v mod n lies in A"""
    n = spec.n
    base = spec.connection_set.mask
    full = (1 << n) - 1
    # row u is the base row rotated by u
    rows = [((base << u) | (base >> (n - u))) & full for u in range(n)]
    return Graph._trusted(n, rows)


def complement_set(A: ConnectionSet) -> ConnectionSet:
    n = A.modulus
    return ConnectionSet(n, tuple(a for a in range(1, n) if a not in A.members))


def complement_spec(spec: CirculantSpec) -> CirculantSpec:
    return CirculantSpec(spec.n, complement_set(spec.connection_set))


def multiplier_stabilizer(A: ConnectionSet) -> FrozenSet[int]:
    """stab_n(A) = {t in U(n) : t*A = A}"""
    n = A.modulus
    members = set(A.members)
    return frozenset(t for t in units(n) if {t * a % n for a in members} == members)


def multiplier_isomorphic(A: ConnectionSet, B: ConnectionSet) -> Optional[int]:
    """Smallest unit t with t*A = B; None does not certify non-isomorphism"""
    if A.modulus != B.modulus or len(A) != len(B):
        return None
    n = A.modulus
    target = set(B.members)
    for t in sorted(units(n)):
        if {t * a % n for a in A.members} == target:
            return t
    return None


def multiplier_canonical(A: ConnectionSet) -> Tuple[int, ...]:
    """Lexicographically least t*A over units t; equal for multiplier-isomorphic sets"""
    n = A.modulus
    return min(tuple(sorted(t * a % n for a in A.members)) for t in units(n))


def translation(n: int, w: int) -> Tuple[int, ...]:
    """v -> v + w"""
    return tuple((v + w) % n for v in range(n))


def multiplier_map(n: int, t: int) -> Tuple[int, ...]:
    """v -> t*v"""
    return tuple((t * v) % n for v in range(n))


def all_connection_sets(n: int) -> List[ConnectionSet]:
    """Every valid connection set of Z_n, ordered by (size, members)"""
    blocks = sorted({tuple(sorted({a, (n - a) % n})) for a in range(1, n)})
    result = []
    for choice in range(1 << len(blocks)):
        members = [a for i, block in enumerate(blocks) if (choice >> i) & 1 for a in block]
        result.append(ConnectionSet(n, tuple(members)))
    result.sort(key=lambda A: (len(A), A.members))
    return result


GraphSource = Union[Graph, CirculantSpec]


def resolve(source: GraphSource) -> Tuple[Graph, Optional[CirculantSpec]]:
    """Graph plus its circulant spec when one is known"""
    if isinstance(source, CirculantSpec):
        return build(source), source
    if isinstance(source, Graph):
        return source, None
    raise TypeError(f"Expected Graph or CirculantSpec, got {type(source).__name__}")
