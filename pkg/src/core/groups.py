"""
Symbolic group-structure expressions.

Expressions only describe how an automorphism group was assembled; the
order they evaluate to is what the rest of the toolkit checks.
"""

from dataclasses import dataclass
from math import factorial, prod
from typing import Tuple


class GroupExpression:
    """Node of a structure expression"""

    @property
    def order(self) -> int:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Trivial(GroupExpression):
    @property
    def order(self) -> int:
        return 1

    def render(self) -> str:
        return "1"


@dataclass(frozen=True)
class Symmetric(GroupExpression):
    degree: int

    @property
    def order(self) -> int:
        return factorial(self.degree)

    def render(self) -> str:
        return f"S{self.degree}"


@dataclass(frozen=True)
class Cyclic(GroupExpression):
    size: int

    @property
    def order(self) -> int:
        return self.size

    def render(self) -> str:
        return f"Z{self.size}"


@dataclass(frozen=True)
class Dihedral(GroupExpression):
    """Symmetries of the regular m-gon, order 2m"""
    m: int

    @property
    def order(self) -> int:
        return 2 * self.m

    def render(self) -> str:
        return f"D{self.m}"


@dataclass(frozen=True)
class Power(GroupExpression):
    base: GroupExpression
    exponent: int

    @property
    def order(self) -> int:
        return self.base.order ** self.exponent

    def render(self) -> str:
        if self.exponent == 1:
            return self.base.render()
        return f"({self.base.render()}^{self.exponent})"


@dataclass(frozen=True)
class Direct(GroupExpression):
    factors: Tuple[GroupExpression, ...]

    @property
    def order(self) -> int:
        return prod(f.order for f in self.factors)

    def render(self) -> str:
        return " x ".join(f.render() for f in self.factors)


@dataclass(frozen=True)
class Semidirect(GroupExpression):
    """normal : acting"""
    normal: GroupExpression
    acting: GroupExpression

    @property
    def order(self) -> int:
        return self.normal.order * self.acting.order

    def render(self) -> str:
        return f"{_wrap(self.normal)} : {_wrap(self.acting)}"


@dataclass(frozen=True)
class AutOf(GroupExpression):
    """Aut(label), carrying the expression the label stands for"""
    label: str
    inner: GroupExpression

    @property
    def order(self) -> int:
        return self.inner.order

    def render(self) -> str:
        return f"Aut({self.label})"

    def expanded(self) -> str:
        return f"Aut({self.label}) = {self.inner.render()}"


@dataclass(frozen=True)
class Stabilized(GroupExpression):
    """Vertex-transitive group of degree n whose point stabilizer is given"""
    stabilizer: GroupExpression
    degree: int

    @property
    def order(self) -> int:
        return self.stabilizer.order * self.degree

    def render(self) -> str:
        return f"{_wrap(self.stabilizer)} . {self.degree}"


@dataclass(frozen=True)
class Named(GroupExpression):
    """Group known only by a label and its order"""
    label: str
    size: int

    @property
    def order(self) -> int:
        return self.size

    def render(self) -> str:
        return self.label


@dataclass(frozen=True)
class Unclassified(GroupExpression):
    size: int

    @property
    def order(self) -> int:
        return self.size

    def render(self) -> str:
        return f"unclassified[{self.size}]"


def _wrap(expr: GroupExpression) -> str:
    text = expr.render()
    if isinstance(expr, (Direct, Semidirect, Stabilized)):
        return f"({text})"
    return text


def circulant_normal_expression(n: int, stabilizer_size: int) -> GroupExpression:
    """Z_n : stab_n(A); dihedral when the multipliers are just {1, -1}"""
    if stabilizer_size == 2 and n >= 3:
        return Dihedral(n)
    if stabilizer_size == 1:
        return Cyclic(n)
    return Semidirect(Cyclic(n), Named(f"stab{stabilizer_size}", stabilizer_size))


def twin_expression(t: int, class_count: int, quotient: GroupExpression) -> GroupExpression:
    """(S_t)^c : Aut(quotient), collapsing trivial factors"""
    kernel = Power(Symmetric(t), class_count)
    if quotient.is_trivial:
        return kernel
    return Semidirect(kernel, quotient)
