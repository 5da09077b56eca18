import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Any, Dict, Iterator, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def gcd3(a: int, b: int, c: int) -> int:
    return math.gcd(math.gcd(abs(a), abs(b)), abs(c))


def format_rational(value: RationalLike) -> str:
    """Render an exact rational as "p/q", keeping q = 1 for integers."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    num, _, den = text.partition('/')
    return Fraction(int(num), int(den) if den else 1)


@dataclass(frozen=True)
class IntVec3:
    x: int
    y: int
    z: int

    @classmethod
    def of(cls, values) -> 'IntVec3':
        x, y, z = values
        return cls(int(x), int(y), int(z))

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y
        yield self.z

    def __add__(self, other: 'IntVec3') -> 'IntVec3':
        return IntVec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: 'IntVec3') -> 'IntVec3':
        return IntVec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> 'IntVec3':
        return IntVec3(-self.x, -self.y, -self.z)

    def scale(self, k: int) -> 'IntVec3':
        return IntVec3(k * self.x, k * self.y, k * self.z)

    def dot(self, other: 'IntVec3') -> int:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def norm2(self) -> int:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})"


ZERO = IntVec3(0, 0, 0)


def cross(u: IntVec3, v: IntVec3) -> IntVec3:
    return IntVec3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )


def det3(u: IntVec3, v: IntVec3, w: IntVec3) -> int:
    """Determinant of the matrix with columns u, v, w."""
    return u.dot(cross(v, w))


def integer_multiple(v: IntVec3, n: IntVec3):
    """Return t with v = t*n, or None when v is not an integer multiple of n (n nonzero)."""
    for vi, ni in zip(v, n):
        if ni != 0:
            if vi % ni != 0:
                return None
            t = vi // ni
            break
    else:
        return None
    return t if n.scale(t) == v else None


@total_ordering
@dataclass(frozen=True, eq=False)
class SurdValue:
    """The exact nonnegative number coeff * sqrt(radicand).

    The radicand is kept exactly as given, so sqrt(12)/2 and sqrt(3) are different
    objects that still compare and hash equal.
    """
    coeff: Fraction
    radicand: int

    def __post_init__(self):
        object.__setattr__(self, 'coeff', Fraction(self.coeff))
        object.__setattr__(self, 'radicand', int(self.radicand))
        if self.coeff < 0:
            raise ValueError(f"SurdValue coefficient must be nonnegative, got {self.coeff}")
        if self.radicand < 0:
            raise ValueError(f"SurdValue radicand must be nonnegative, got {self.radicand}")

    def squared(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    def is_zero(self) -> bool:
        return self.coeff == 0 or self.radicand == 0

    def scale(self, q: RationalLike) -> 'SurdValue':
        return SurdValue(self.coeff * Fraction(q), self.radicand)

    def ratio(self, other: 'SurdValue'):
        """Exact quotient self / other as a Fraction, or None if it is irrational or undefined."""
        if other.is_zero():
            return None
        if self.is_zero():
            return Fraction(0)
        product = self.radicand * other.radicand
        root = math.isqrt(product)
        if root * root != product:
            return None
        # sqrt(r1/r2) = sqrt(r1*r2)/r2
        return self.coeff / other.coeff * Fraction(root, other.radicand)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, SurdValue):
            return NotImplemented
        return self.squared() == other.squared()

    def __lt__(self, other: 'SurdValue') -> bool:
        if not isinstance(other, SurdValue):
            return NotImplemented
        return self.squared() < other.squared()

    def __hash__(self) -> int:
        return hash(self.squared())

    def to_dict(self) -> Dict[str, str]:
        return {'coeff': format_rational(self.coeff), 'radicand': str(self.radicand)}

    @classmethod
    def from_dict(cls, data: Dict[str, str]) -> 'SurdValue':
        return cls(parse_rational(data['coeff']), int(data['radicand']))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        coeff = str(self.coeff)
        if self.radicand == 1:
            return coeff
        if self.coeff == 1:
            return f"√{self.radicand}"
        return f"{coeff}√{self.radicand}"


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def surd_compare(s1: SurdValue, s2: SurdValue) -> Ordering:
    left, right = s1.squared(), s2.squared()
    return Ordering((left > right) - (left < right))
