"""Logarithmic Chern classes and CSM classes of SNC complements.

Every stratum is represented inside the Chow ring of the ambient: the class of
``D_I = D_i1 ∩ ... ∩ D_ik`` pushed forward is obtained from a class ``a`` on the
ambient by the projection formula ``a * D_i1 * ... * D_ik``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from procsm.chern import (
    TotalChernClass,
    divisor_line_bundle,
    dual_chern,
    structure_sheaf_chern,
    tangent_chern,
    whitney_quotient,
)
from procsm.chow_ring import AmbientSpace, ChowClass
from procsm.errors import AmbientMismatch, DuplicateLabel, IndexOutOfRange, NotADivisorClass


@dataclass(frozen=True)
class DivisorArrangement:
    """Named divisor classes asserted (not checked) to form an SNC divisor."""

    ambient: AmbientSpace
    components: tuple[tuple[str, ChowClass], ...] = ()
    snc_asserted: bool = True

    def __post_init__(self):
        object.__setattr__(self, "components", tuple((n, c) for n, c in self.components))
        names = [n for n, _ in self.components]
        if len(set(names)) != len(names):
            raise DuplicateLabel(f"component names {names} are not distinct")
        for name, cls in self.components:
            if cls.ambient != self.ambient:
                raise AmbientMismatch(f"component {name!r} lives on another ambient")
            if cls.is_zero() or cls.codimensions() != {1}:
                raise NotADivisorClass(f"component {name!r} = {cls} is not a divisor class")

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.components]

    @property
    def classes(self) -> list[ChowClass]:
        return [c for _, c in self.components]

    def prefix(self, k: int) -> "DivisorArrangement":
        """The arrangement formed by the first ``k`` components."""
        return DivisorArrangement(self.ambient, self.components[:k], self.snc_asserted)

    def permuted(self, order: Sequence[int]) -> "DivisorArrangement":
        return DivisorArrangement(
            self.ambient, tuple(self.components[i] for i in order), self.snc_asserted
        )


def arrangement(ambient: AmbientSpace, classes: Iterable[ChowClass], names=None) -> DivisorArrangement:
    """Convenience constructor; components are named ``D1, D2, ...`` unless given."""
    classes = list(classes)
    if names is None:
        names = [f"D{i + 1}" for i in range(len(classes))]
    return DivisorArrangement(ambient, tuple(zip(names, classes)))


def log_cotangent_chern(arr: DivisorArrangement) -> TotalChernClass:
    """``c(Ω¹(log D)) = c(Ω¹) · ∏ c(O_{D_i})``."""
    out = dual_chern(tangent_chern(arr.ambient))
    for d in arr.classes:
        out = out * structure_sheaf_chern(d)
    return out


def csm_open(arr: DivisorArrangement) -> ChowClass:
    """Total CSM class of the complement, pushed into the ambient."""
    return dual_chern(log_cotangent_chern(arr)).value


def csm_zero(arr: DivisorArrangement) -> ChowClass:
    return csm_open(arr).top()


def compositions(total: int, parts: int):
    """All tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def silred_rhs(arr: DivisorArrangement) -> ChowClass:
    """Term-by-term multi-index expansion of the top log CSM class.

    ``c_n(T) + Σ_{l=1..n} Σ_{j_1+...+j_m=l} c_{n-l}(T) (-D_1)^{j_1} ... (-D_m)^{j_m}``
    """
    ambient = arr.ambient
    n = ambient.dim
    tangent = tangent_chern(ambient)
    negated = [-d for d in arr.classes]
    out = tangent.c(n)
    for l in range(1, n + 1):
        lower = tangent.c(n - l)
        for js in compositions(l, arr.m):
            term = lower
            for d, j in zip(negated, js):
                term = term * d**j
            out = out + term
    return out


def _check_indices(arr: DivisorArrangement, subset) -> tuple[int, ...]:
    subset = tuple(sorted(set(subset)))
    for i in subset:
        if not 0 <= i < arr.m:
            raise IndexOutOfRange(f"component index {i} outside 0..{arr.m - 1}")
    return subset


def stratum_csm_pushed(arr: DivisorArrangement, subset) -> ChowClass:
    """Pushed CSM class of the open stratum ``D_I° = D_I ∖ ∪_{j∉I} D_j``.

    Indices are 0-based.  The representative is
    ``c(T) / ∏_i (1 + D_i) · ∏_{i∈I} D_i``: adjunction gives ``c(T_{D_I})``,
    removing the residual divisors contributes the remaining ``1 / (1 + D_j)``,
    and the projection formula pushes the result into the ambient.
    """
    subset = _check_indices(arr, subset)
    ambient = arr.ambient
    den = ambient.one()
    for d in arr.classes:
        den = den * divisor_line_bundle(d).value
    out = whitney_quotient(tangent_chern(ambient), TotalChernClass(den)).value
    for i in subset:
        out = out * arr.classes[i]
    return out


@dataclass
class AdditivityReport:
    strata: list = field(default_factory=list)  # (subset, class) pairs
    total: ChowClass = None
    tangent: ChowClass = None
    passed: bool = False


def additivity_check(arr: DivisorArrangement) -> AdditivityReport:
    """Sum the pushed CSM classes of all strata and compare with ``c(T)``."""
    ambient = arr.ambient
    report = AdditivityReport(total=ambient.zero(), tangent=tangent_chern(ambient).value)
    for size in range(arr.m + 1):
        for subset in itertools.combinations(range(arr.m), size):
            cls = stratum_csm_pushed(arr, subset)
            report.strata.append((subset, cls))
            report.total = report.total + cls
    report.passed = report.total == report.tangent
    return report
