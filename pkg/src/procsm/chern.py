"""Total Chern classes: Whitney products and quotients, duals, tangent classes."""

from __future__ import annotations

from dataclasses import dataclass

from procsm.chow_ring import AmbientSpace, ChowClass, ProductAmbient, checked
from procsm.errors import AmbientMismatch, NotADivisorClass


@dataclass(frozen=True)
class TotalChernClass:
    """A unit series: a class whose codimension-0 part is the fundamental class."""

    value: ChowClass

    def __post_init__(self):
        if self.value.component(0) != self.value.ambient.one():
            raise ValueError(f"not a unit series: {self.value}")

    @property
    def ambient(self) -> AmbientSpace:
        return self.value.ambient

    def c(self, s: int) -> ChowClass:
        """The ``s``-th Chern class."""
        return self.value.component(s)

    def __mul__(self, other: "TotalChernClass") -> "TotalChernClass":
        return TotalChernClass(self.value * other.value)

    def __truediv__(self, other: "TotalChernClass") -> "TotalChernClass":
        return whitney_quotient(self, other)

    def __str__(self) -> str:
        return str(self.value)


def tangent_chern(ambient: AmbientSpace) -> TotalChernClass:
    """``c(T)`` of the ambient variety."""
    if isinstance(ambient, ProductAmbient):
        out = ambient.one()
        for i, n in enumerate(ambient.factors):
            out = out * (ambient.one() + ambient.hyperplane(i)) ** (n + 1)
        return TotalChernClass(out)
    return TotalChernClass(
        ambient.one() - ambient.canonical() + ambient.c2_degree * ambient.point()
    )


def dual_chern(c: TotalChernClass) -> TotalChernClass:
    """Chern class of the dual bundle: ``c_s`` picks up the sign ``(-1)^s``."""
    x = c.value
    coeffs = tuple(
        checked(-a, "dual_chern") if cd % 2 else a
        for a, cd in zip(x.coeffs, x.ambient.codims)
    )
    return TotalChernClass(ChowClass(x.ambient, coeffs))


def structure_sheaf_chern(divisor: ChowClass) -> TotalChernClass:
    """``c(O_D) = 1 + D + D^2 + ...``, the inverse of ``c(O(-D)) = 1 - D``."""
    if divisor.is_zero() or divisor.codimensions() != {1}:
        raise NotADivisorClass(f"{divisor} is not a nonzero class of codimension 1")
    ambient = divisor.ambient
    out = ambient.one()
    power = ambient.one()
    for _ in range(ambient.dim):
        power = power * divisor
        out = out + power
    return TotalChernClass(out)


def whitney_quotient(num: TotalChernClass, den: TotalChernClass) -> TotalChernClass:
    """The unit series ``q`` with ``q * den == num``, solved degree by degree."""
    if num.ambient != den.ambient:
        raise AmbientMismatch("whitney_quotient: ambients differ")
    ambient = num.ambient
    q = ambient.zero()
    for s in range(ambient.dim + 1):
        residual = num.value - q * den.value
        q = q + residual.component(s)
    return TotalChernClass(q)


def whitney_product(*classes: TotalChernClass) -> TotalChernClass:
    if not classes:
        raise ValueError("whitney_product needs at least one factor")
    out = classes[0]
    for c in classes[1:]:
        out = out * c
    return out


def divisor_line_bundle(divisor: ChowClass) -> TotalChernClass:
    """``c(O(D)) = 1 + D``."""
    return TotalChernClass(divisor.ambient.one() + divisor)
