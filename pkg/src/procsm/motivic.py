"""Euler characteristics by cut-and-paste, integer and quadratic.

Quadratic values live in the subring ``Z[ε] / (ε² - 1)`` of the
Grothendieck-Witt ring, ``ε = <-1>``.  A variety is described by a small
expression tree (points, affine and projective spaces, ``G_m``, products,
disjoint unions and complements of closed subvarieties) and the measures are
evaluated by the scissor relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from procsm.chow_ring import checked
from procsm.errors import MalformedExpression, MissingSmoothDim


@dataclass(frozen=True)
class GWElement:
    """``a·<1> + b·<-1>``."""

    a: int = 0
    b: int = 0

    def __add__(self, other: "GWElement") -> "GWElement":
        return GWElement(checked(self.a + other.a, "gw_add"), checked(self.b + other.b, "gw_add"))

    def __neg__(self) -> "GWElement":
        return GWElement(-self.a, -self.b)

    def __sub__(self, other: "GWElement") -> "GWElement":
        return self + -other

    def __mul__(self, other: "GWElement") -> "GWElement":
        a = checked(self.a * other.a + self.b * other.b, "gw_mul")
        b = checked(self.a * other.b + self.b * other.a, "gw_mul")
        return GWElement(a, b)

    def __pow__(self, k: int) -> "GWElement":
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    @property
    def rank(self) -> int:
        return self.a + self.b

    @property
    def signature(self) -> int:
        return self.a - self.b

    def __str__(self) -> str:
        terms = []
        order = ((self.a, ""), (self.b, "<-1>"))
        if self.a < 0 < self.b:
            order = order[::-1]
        for coeff, name in order:
            if not coeff:
                continue
            body = f"{abs(coeff)}{name}" if abs(coeff) != 1 or not name else name
            if terms:
                terms.append(f"{'+' if coeff > 0 else '-'} {body}")
            else:
                terms.append(body if coeff > 0 else f"-{body}")
        return " ".join(terms) if terms else "0"


ONE = GWElement(1, 0)
EPS = GWElement(0, 1)


def gw_add(x: GWElement, y: GWElement) -> GWElement:
    return x + y


def gw_mul(x: GWElement, y: GWElement) -> GWElement:
    return x * y


def gw_invariants(x: GWElement) -> tuple[int, int]:
    """``(rank, signature)``."""
    return x.rank, x.signature


# --- expression trees --------------------------------------------------------


@dataclass(frozen=True, kw_only=True)
class Space:
    smooth_dim: Optional[int] = None


@dataclass(frozen=True, kw_only=True)
class Point(Space):
    pass


@dataclass(frozen=True, kw_only=True)
class Affine(Space):
    n: int


@dataclass(frozen=True, kw_only=True)
class Proj(Space):
    n: int


@dataclass(frozen=True, kw_only=True)
class Gm(Space):
    pass


@dataclass(frozen=True, kw_only=True)
class Product(Space):
    factors: tuple


@dataclass(frozen=True, kw_only=True)
class DisjointUnion(Space):
    parts: tuple


@dataclass(frozen=True, kw_only=True)
class Complement(Space):
    """``whole ∖ closed``; that ``closed`` is a closed subvariety is not checked."""

    whole: Space
    closed: Space


def _validate(e) -> None:
    if not isinstance(e, Space):
        raise MalformedExpression(f"not a space expression: {e!r}")
    if e.smooth_dim is not None and (not isinstance(e.smooth_dim, int) or e.smooth_dim < 0):
        raise MalformedExpression(f"smooth_dim must be a non-negative integer, got {e.smooth_dim!r}")
    if isinstance(e, (Affine, Proj)) and (not isinstance(e.n, int) or e.n < 1):
        raise MalformedExpression(f"{type(e).__name__} needs n >= 1, got {e.n!r}")
    if isinstance(e, Product) and not e.factors:
        raise MalformedExpression("empty product")
    if isinstance(e, DisjointUnion) and not e.parts:
        raise MalformedExpression("empty disjoint union")


def _measure(e, point, affine_line, gm, one, zero):
    # generic evaluator; the three base values pin everything else
    _validate(e)
    rec = lambda x: _measure(x, point, affine_line, gm, one, zero)  # noqa: E731
    if isinstance(e, Point):
        return point
    if isinstance(e, Gm):
        return gm
    if isinstance(e, Affine):
        out = one
        for _ in range(e.n):
            out = out * affine_line
        return out
    if isinstance(e, Proj):
        # P^n = A^n ⊔ A^(n-1) ⊔ ... ⊔ pt
        out, power = one, one
        for _ in range(e.n):
            power = power * affine_line
            out = out + power
        return out
    if isinstance(e, Product):
        out = one
        for f in e.factors:
            out = out * rec(f)
        return out
    if isinstance(e, DisjointUnion):
        out = zero
        for p in e.parts:
            out = out + rec(p)
        return out
    if isinstance(e, Complement):
        return rec(e.whole) - rec(e.closed)
    raise MalformedExpression(f"unknown expression node {type(e).__name__}")


def chi_compact(e: Space) -> int:
    """Compactly supported Euler characteristic (integer)."""
    return _measure(e, 1, 1, 0, 1, 0)


def chi_compact_quadratic(e: Space) -> GWElement:
    """Compactly supported quadratic Euler characteristic: ``A^1 ↦ <-1>``, ``G_m ↦ <-1> - 1``."""
    return _measure(e, ONE, EPS, EPS - ONE, ONE, GWElement())


def chi_homological_quadratic(e: Space) -> GWElement:
    """Homological quadratic Euler characteristic of a smooth variety.

    Modeled as ``<-1>^dim · χᶜ`` (duality twist); this is a modeling assumption
    checked only on ``G_m`` and on proper varieties.
    """
    _validate(e)
    if e.smooth_dim is None:
        raise MissingSmoothDim(f"{type(e).__name__} carries no smooth_dim annotation")
    return EPS**e.smooth_dim * chi_compact_quadratic(e)
