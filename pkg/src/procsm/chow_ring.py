"""Exact graded Chow rings of products of projective spaces and of surfaces.

Two ambient families are supported:

* ``ProductAmbient`` -- ``Z[h_1, ..., h_k] / (h_i^(n_i + 1))``, the Chow ring of
  ``P^n_1 x ... x P^n_k``.  Basis: exponent vectors in lexicographic order.
* ``SurfaceAmbient`` -- a smooth proper surface given by a divisor lattice with
  its intersection form, canonical class and ``deg c_2(T)``.  Basis: the
  fundamental class ``1``, the divisor labels, then the point class ``pt``.

Classes are stored densely over the ambient basis and every coefficient is
checked against the signed 64-bit range.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from procsm.errors import (
    AmbientMismatch,
    ArithmeticOverflow,
    DuplicateLabel,
    EmptyFactors,
    NonPositiveDimension,
    NotASurface,
)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

FUNDAMENTAL = "1"
POINT = "pt"


def checked(value: int, op: str) -> int:
    if value < INT64_MIN or value > INT64_MAX:
        raise ArithmeticOverflow(f"{op}: coefficient {value} leaves the 64-bit range")
    return value


@dataclass(frozen=True)
class ProductAmbient:
    factors: tuple[int, ...]

    kind = "product"

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise EmptyFactors("a product ambient needs at least one factor")
        for n in self.factors:
            if not isinstance(n, int) or n < 1:
                raise NonPositiveDimension(f"factor dimension {n!r} must be a positive integer")

    @property
    def dim(self) -> int:
        return sum(self.factors)

    @cached_property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.product(*(range(n + 1) for n in self.factors)))

    @cached_property
    def codims(self) -> tuple[int, ...]:
        return tuple(sum(e) for e in self.basis)

    @cached_property
    def _index(self) -> dict:
        return {e: i for i, e in enumerate(self.basis)}

    @cached_property
    def mult_table(self) -> tuple:
        # mult_table[i][j] lists (k, c) with basis_i * basis_j = sum c * basis_k
        table = []
        for e in self.basis:
            row = []
            for f in self.basis:
                g = tuple(a + b for a, b in zip(e, f))
                k = self._index.get(g)
                row.append(() if k is None else ((k, 1),))
            table.append(tuple(row))
        return tuple(table)

    def monomial_name(self, i: int) -> str:
        e = self.basis[i]
        if not any(e):
            return FUNDAMENTAL
        parts = []
        single = len(self.factors) == 1
        for pos, power in enumerate(e):
            if power == 0:
                continue
            var = "h" if single else f"h{pos + 1}"
            parts.append(var if power == 1 else f"{var}^{power}")
        return "*".join(parts)

    def monomial(self, exponents: Sequence[int], coefficient: int = 1) -> "ChowClass":
        exponents = tuple(exponents)
        if exponents not in self._index:
            if len(exponents) == len(self.factors) and all(e >= 0 for e in exponents):
                return self.zero()
            raise ValueError(f"bad exponent vector {exponents} for factors {self.factors}")
        coeffs = [0] * len(self.basis)
        coeffs[self._index[exponents]] = checked(coefficient, "monomial")
        return ChowClass(self, tuple(coeffs))

    def hyperplane(self, i: int) -> "ChowClass":
        """Pull-back of the hyperplane class of the ``i``-th factor (0-based)."""
        e = [0] * len(self.factors)
        e[i] = 1
        return self.monomial(e)

    def divisor(self, multidegree: Sequence[int]) -> "ChowClass":
        if len(multidegree) != len(self.factors):
            raise AmbientMismatch(
                f"multidegree {list(multidegree)} does not match {len(self.factors)} factors"
            )
        out = self.zero()
        for i, d in enumerate(multidegree):
            out = out + d * self.hyperplane(i)
        return out

    def one(self) -> "ChowClass":
        return self.monomial((0,) * len(self.factors))

    def zero(self) -> "ChowClass":
        return ChowClass(self, (0,) * len(self.basis))

    def point(self) -> "ChowClass":
        return self.monomial(self.factors)

    def describe(self) -> str:
        return " x ".join(f"P{n}" for n in self.factors)


@dataclass(frozen=True)
class SurfaceAmbient:
    basis_labels: tuple[str, ...]
    intersection_matrix: tuple[tuple[int, ...], ...]
    canonical_class: tuple[int, ...]
    c2_degree: int

    kind = "surface"
    dim = 2

    def __post_init__(self):
        labels = self.basis_labels
        if len(set(labels)) != len(labels):
            raise DuplicateLabel(f"basis labels {list(labels)} are not distinct")
        for label in labels:
            if label in (FUNDAMENTAL, POINT) or not label:
                raise DuplicateLabel(f"label {label!r} is reserved")
        r = len(labels)
        m = self.intersection_matrix
        if len(m) != r or any(len(row) != r for row in m):
            raise ValueError(f"intersection matrix must be {r}x{r}")
        for i in range(r):
            for j in range(r):
                if m[i][j] != m[j][i]:
                    raise ValueError("intersection matrix is not symmetric")
        if len(self.canonical_class) != r:
            raise ValueError("canonical class has the wrong length")

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    @cached_property
    def basis(self) -> tuple[str, ...]:
        return (FUNDAMENTAL,) + tuple(self.basis_labels) + (POINT,)

    @cached_property
    def codims(self) -> tuple[int, ...]:
        return (0,) + (1,) * self.rank + (2,)

    @cached_property
    def mult_table(self) -> tuple:
        size = self.rank + 2
        top = size - 1
        table = []
        for i in range(size):
            row = []
            for j in range(size):
                if i == 0:
                    row.append(((j, 1),))
                elif j == 0:
                    row.append(((i, 1),))
                elif i < top and j < top:
                    pairing = self.intersection_matrix[i - 1][j - 1]
                    row.append(((top, pairing),) if pairing else ())
                else:
                    row.append(())
            table.append(tuple(row))
        return tuple(table)

    def monomial_name(self, i: int) -> str:
        return self.basis[i]

    def label_index(self, label: str) -> int:
        try:
            return self.basis_labels.index(label)
        except ValueError:
            raise KeyError(f"unknown divisor label {label!r}") from None

    def divisor(self, vector: Sequence[int]) -> "ChowClass":
        if len(vector) != self.rank:
            raise AmbientMismatch(f"divisor vector {list(vector)} does not match rank {self.rank}")
        coeffs = (0,) + tuple(checked(v, "divisor") for v in vector) + (0,)
        return ChowClass(self, coeffs)

    def label_class(self, label: str) -> "ChowClass":
        v = [0] * self.rank
        v[self.label_index(label)] = 1
        return self.divisor(v)

    def one(self) -> "ChowClass":
        return ChowClass(self, (1,) + (0,) * (self.rank + 1))

    def zero(self) -> "ChowClass":
        return ChowClass(self, (0,) * (self.rank + 2))

    def point(self) -> "ChowClass":
        return ChowClass(self, (0,) * (self.rank + 1) + (1,))

    def canonical(self) -> "ChowClass":
        return self.divisor(self.canonical_class)

    def describe(self) -> str:
        return f"surface[{', '.join(self.basis_labels)}]"


AmbientSpace = Union[ProductAmbient, SurfaceAmbient]


@dataclass(frozen=True)
class ChowClass:
    ambient: AmbientSpace
    coeffs: tuple[int, ...]

    def _same(self, other: "ChowClass", op: str) -> None:
        if not isinstance(other, ChowClass):
            raise TypeError(f"{op}: expected a ChowClass, got {type(other).__name__}")
        if other.ambient != self.ambient:
            raise AmbientMismatch(
                f"{op}: {self.ambient.describe()} vs {other.ambient.describe()}"
            )

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._same(other, "class_add")
        return ChowClass(
            self.ambient,
            tuple(checked(a + b, "class_add") for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ambient, tuple(checked(-a, "class_neg") for a in self.coeffs))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        self._same(other, "class_sub")
        return ChowClass(
            self.ambient,
            tuple(checked(a - b, "class_sub") for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self.ambient, tuple(checked(other * a, "class_scale") for a in self.coeffs))
        self._same(other, "class_mul")
        table = self.ambient.mult_table
        out = [0] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                for k, c in row[j]:
                    out[k] = checked(out[k] + checked(a * b * c, "class_mul"), "class_mul")
        return ChowClass(self.ambient, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "ChowClass":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        out = self.ambient.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def component(self, codim: int) -> "ChowClass":
        """The homogeneous piece of codimension ``codim``."""
        codims = self.ambient.codims
        return ChowClass(
            self.ambient,
            tuple(a if c == codim else 0 for a, c in zip(self.coeffs, codims)),
        )

    def codimensions(self) -> set:
        return {c for a, c in zip(self.coeffs, self.ambient.codims) if a}

    def top(self) -> "ChowClass":
        return self.component(self.ambient.dim)

    def degree(self) -> int:
        return self.coeffs[-1]

    def table(self) -> list:
        """Dense ``(monomial, coefficient)`` pairs in basis order."""
        return [(self.ambient.monomial_name(i), a) for i, a in enumerate(self.coeffs)]

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            name = self.ambient.monomial_name(i)
            if name == FUNDAMENTAL:
                body = str(abs(a))
            elif abs(a) == 1:
                body = name
            else:
                body = f"{abs(a)}{name}"
            if not terms:
                terms.append(body if a > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if a > 0 else '-'} {body}")
        return " ".join(terms) if terms else "0"


def make_product_ambient(factors: Sequence[int]) -> ProductAmbient:
    return ProductAmbient(tuple(factors))


def make_surface_ambient(labels, intersection_matrix, canonical_class, c2_degree) -> SurfaceAmbient:
    return SurfaceAmbient(
        tuple(labels),
        tuple(tuple(row) for row in intersection_matrix),
        tuple(canonical_class),
        c2_degree,
    )


def class_add(x: ChowClass, y: ChowClass) -> ChowClass:
    return x + y


def class_mul(x: ChowClass, y: ChowClass) -> ChowClass:
    return x * y


def degree(x: ChowClass) -> int:
    """Push-forward to the point: the coefficient of the point class."""
    return x.degree()


def as_surface(ambient: AmbientSpace) -> SurfaceAmbient:
    """Surface form of ``P^2`` or ``P^1 x P^1``; surfaces are returned unchanged."""
    if isinstance(ambient, SurfaceAmbient):
        return ambient
    if ambient.dim != 2:
        raise NotASurface(f"{ambient.describe()} has dimension {ambient.dim}")
    if ambient.factors == (2,):
        return make_surface_ambient(["H"], [[1]], [-3], 3)
    return make_surface_ambient(["H1", "H2"], [[0, 1], [1, 0]], [-2, -2], 4)


def as_surface_class(x: ChowClass) -> ChowClass:
    """Transport a class on ``P^2`` or ``P^1 x P^1`` to the ring of ``as_surface``."""
    if isinstance(x.ambient, SurfaceAmbient):
        return x
    surface = as_surface(x.ambient)
    coeffs = [0] * (surface.rank + 2)
    for e, a in zip(x.ambient.basis, x.coeffs):
        c = sum(e)
        if c == 0:
            coeffs[0] += a
        elif c == 1:
            coeffs[1 + e.index(1)] += a
        else:
            coeffs[-1] += a
    return ChowClass(surface, tuple(coeffs))


@dataclass(frozen=True)
class BlowDownMap:
    source: SurfaceAmbient
    target: SurfaceAmbient
    exceptional_label: str

    def __post_init__(self):
        src, tgt, e = self.source, self.target, self.exceptional_label
        if set(src.basis_labels) != set(tgt.basis_labels) | {e} or e in tgt.basis_labels:
            raise ValueError("source basis must be the target basis plus the exceptional label")
        idx = [src.label_index(label) for label in tgt.basis_labels]
        ie = src.label_index(e)
        m = src.intersection_matrix
        for a, ia in enumerate(idx):
            if m[ia][ie] != 0:
                raise ValueError("exceptional class is not orthogonal to the target basis")
            for b, ib in enumerate(idx):
                if m[ia][ib] != tgt.intersection_matrix[a][b]:
                    raise ValueError("source form does not restrict to the target form")
        if m[ie][ie] != -1:
            raise ValueError("exceptional class must have self-intersection -1")
        if src.c2_degree != tgt.c2_degree + 1:
            raise ValueError("c2 must grow by one under a point blow-up")
        for a, ia in enumerate(idx):
            if src.canonical_class[ia] != tgt.canonical_class[a]:
                raise ValueError("canonical class is not K + E")
        if src.canonical_class[ie] != 1:
            raise ValueError("canonical class is not K + E")


def blow_up_surface(target: AmbientSpace, new_label: str) -> tuple[SurfaceAmbient, BlowDownMap]:
    """Blow up one point of a surface; returns the new surface and the blow-down."""
    target = as_surface(target)
    if new_label in target.basis_labels or new_label in (FUNDAMENTAL, POINT):
        raise DuplicateLabel(f"label {new_label!r} is already in use")
    r = target.rank
    matrix = [list(row) + [0] for row in target.intersection_matrix]
    matrix.append([0] * r + [-1])
    source = make_surface_ambient(
        list(target.basis_labels) + [new_label],
        matrix,
        list(target.canonical_class) + [1],
        target.c2_degree + 1,
    )
    return source, BlowDownMap(source, target, new_label)


def pushforward_blowdown(blowdown: BlowDownMap, x: ChowClass) -> ChowClass:
    if x.ambient != blowdown.source:
        raise AmbientMismatch("class does not live on the source of the blow-down")
    src, tgt = blowdown.source, blowdown.target
    divisor = [x.coeffs[1 + src.label_index(label)] for label in tgt.basis_labels]
    return ChowClass(tgt, (x.coeffs[0],) + tuple(divisor) + (x.coeffs[-1],))
