"""
Lattices of integer points in a rational plane ax + by + cz = 0 of Z^3.

A plane is identified by its primitive normal. Every basis handed out by this
module is certified: {b1, b2} spans all of Z^3 on the plane iff cross(b1, b2) = +-n.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from lattice_pick.errors import (
    DegenerateBasis, InternalInconsistency, InvalidNormal, NotInLattice, NotInPlane, ZeroVector,
)
from lattice_pick.exact import IntVec3, SurdValue, cross, det3, gcd3, integer_multiple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Normal:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise InvalidNormal("normal must not be the zero vector")
        if gcd3(self.a, self.b, self.c) != 1:
            raise InvalidNormal(f"normal {self.as_vector()} is not primitive")
        first = next(v for v in (self.a, self.b, self.c) if v != 0)
        if first < 0:
            raise InvalidNormal(f"normal {self.as_vector()} is not canonically oriented")

    def as_vector(self) -> IntVec3:
        return IntVec3(self.a, self.b, self.c)

    def norm2(self) -> int:
        return self.a * self.a + self.b * self.b + self.c * self.c

    def contains(self, v: IntVec3) -> bool:
        return self.as_vector().dot(v) == 0

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class PlaneLattice:
    normal: Normal
    b1: IntVec3
    b2: IntVec3
    covolume: SurdValue


def primitive_normal(v: IntVec3) -> Normal:
    if v.is_zero():
        raise ZeroVector("cannot derive a normal from the zero vector")
    g = gcd3(v.x, v.y, v.z)
    a, b, c = v.x // g, v.y // g, v.z // g
    first = next(x for x in (a, b, c) if x != 0)
    if first < 0:
        a, b, c = -a, -b, -c
    return Normal(a, b, c)


def _require_a(n: Normal, construction: str):
    if n.a == 0:
        raise DegenerateBasis(
            f"{construction} needs a != 0; normal {n} gives collinear vectors"
        )


def paper_basis(n: Normal) -> Tuple[IntVec3, IntVec3]:
    """alpha = (-b, a, 0) and beta = (-c, 0, a)."""
    _require_a(n, "paper basis")
    return IntVec3(-n.b, n.a, 0), IntVec3(-n.c, 0, n.a)


def schmidt_intermediate(n: Normal) -> Tuple[Fraction, Fraction, Fraction]:
    """gamma_2 = beta - (beta.gamma_1 / gamma_1.gamma_1) gamma_1 with gamma_1 = alpha."""
    alpha, beta = paper_basis(n)
    coefficient = Fraction(beta.dot(alpha), alpha.dot(alpha))
    return tuple(Fraction(bi) - coefficient * ai for bi, ai in zip(beta, alpha))


def orthogonal_basis(n: Normal) -> Tuple[IntVec3, IntVec3]:
    """eta_1 = alpha and eta_2 = (a^2 + b^2) gamma_2 = (-a^2 c, -abc, a^3 + ab^2)."""
    _require_a(n, "orthogonal basis")
    a, b, c = n.a, n.b, n.c
    eta1 = IntVec3(-b, a, 0)
    eta2 = IntVec3(-a * a * c, -a * b * c, a ** 3 + a * b * b)

    scale = a * a + b * b
    gamma2 = schmidt_intermediate(n)
    if tuple(scale * g for g in gamma2) != eta2.as_tuple():
        raise InternalInconsistency(f"eta_2 {eta2} does not match (a^2+b^2)*gamma_2 for {n}")
    if eta1.dot(eta2) != 0:
        raise InternalInconsistency(f"eta_1 and eta_2 are not orthogonal for {n}")
    return eta1, eta2


def _unimodular_reduction(row: List[int]) -> List[List[int]]:
    """Integer column operations taking (a b c) to (g 0 0).

    Returns the accumulated unimodular matrix as a list of columns.
    """
    row = list(row)
    columns = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def subtract(target: int, source: int, q: int):
        row[target] -= q * row[source]
        columns[target] = [t - q * s for t, s in zip(columns[target], columns[source])]

    while sum(1 for v in row if v != 0) > 1:
        pivot = min((i for i in range(3) if row[i] != 0), key=lambda i: abs(row[i]))
        for j in range(3):
            if j != pivot and row[j] != 0:
                subtract(j, pivot, row[j] // row[pivot])

    pivot = next(i for i in range(3) if row[i] != 0)
    if pivot != 0:
        row[0], row[pivot] = row[pivot], row[0]
        columns[0], columns[pivot] = columns[pivot], columns[0]
    return columns


def kernel_basis(n: Normal) -> PlaneLattice:
    columns = _unimodular_reduction([n.a, n.b, n.c])
    b1, b2 = IntVec3.of(columns[1]), IntVec3.of(columns[2])

    normal = n.as_vector()
    if not (n.contains(b1) and n.contains(b2)) or cross(b1, b2) not in (normal, -normal):
        raise InternalInconsistency(f"kernel basis {b1}, {b2} failed certification for {n}")

    logger.debug("kernel basis for %s: %s, %s", n, b1, b2)
    return PlaneLattice(normal=n, b1=b1, b2=b2, covolume=parallelogram_area(b1, b2, n))


def determinant_area(n: Normal, u: IntVec3, v: IntVec3) -> SurdValue:
    """det(n | u | v) / sqrt(a^2 + b^2 + c^2), written as (|det| / |n|^2) sqrt(|n|^2)."""
    det = det3(n.as_vector(), u, v)
    return SurdValue(Fraction(abs(det), n.norm2()), n.norm2())


def parallelogram_area(u: IntVec3, v: IntVec3, n: Optional[Normal] = None) -> SurdValue:
    """Area of the parallelogram spanned by two in-plane integer vectors.

    When n is omitted it is taken from cross(u, v); dependent vectors then give 0.
    """
    product = cross(u, v)
    if n is None:
        if product.is_zero():
            return SurdValue(0, 1)
        n = primitive_normal(product)

    t = integer_multiple(product, n.as_vector()) if not product.is_zero() else 0
    if t is None:
        raise NotInPlane(f"{u} and {v} do not lie in the plane with normal {n}")

    area = SurdValue(abs(t), n.norm2())
    if determinant_area(n, u, v) != area:
        raise InternalInconsistency(f"determinant and cross-product areas disagree for {u}, {v}")
    return area


def lattice_coordinates(L: PlaneLattice, w: IntVec3) -> Tuple[int, int]:
    """Integer (x, y) with w = x*b1 + y*b2."""
    if not L.normal.contains(w):
        raise NotInLattice(f"{w} is not in the plane with normal {L.normal}")
    spanned = cross(L.b1, L.b2)
    denominator = spanned.norm2()
    x = Fraction(cross(w, L.b2).dot(spanned), denominator)
    y = Fraction(cross(L.b1, w).dot(spanned), denominator)
    if x.denominator != 1 or y.denominator != 1:
        raise NotInLattice(f"{w} has coordinates ({x}, {y}) in basis {L.b1}, {L.b2}")
    x, y = int(x), int(y)
    if L.b1.scale(x) + L.b2.scale(y) != w:
        raise NotInLattice(f"{w} is not reconstructed by basis {L.b1}, {L.b2}")
    return x, y


def basis_change_determinant(L: PlaneLattice, u: IntVec3, v: IntVec3) -> int:
    """Signed k1*l2 - k2*l1 for u = k1 b1 + k2 b2 and v = l1 b1 + l2 b2.

    u, v are independent iff this is != 0.
    """
    k1, k2 = lattice_coordinates(L, u)
    l1, l2 = lattice_coordinates(L, v)
    return k1 * l2 - k2 * l1


def sublattice_index(L: PlaneLattice, u: IntVec3, v: IntVec3) -> int:
    return abs(basis_change_determinant(L, u, v))


def is_lattice_basis(n: Normal, u: IntVec3, v: IntVec3) -> bool:
    if not (n.contains(u) and n.contains(v)):
        return False
    normal = n.as_vector()
    return cross(u, v) in (normal, -normal)
