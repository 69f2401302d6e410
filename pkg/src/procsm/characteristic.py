"""Compactly supported characteristic class of an SNC complement.

The class is computed by localization: the unit of the ambient minus the
characteristic class of the boundary divisor, the latter assembled by
inclusion-exclusion over the strata ``D_I`` (iterated Mayer-Vietoris), each
stratum contributing the Euler class of its tangent bundle pushed forward.

This module also carries the verifier that replays the induction on the number
of boundary components step by step, and the check that classes computed on
two compactifications related by blow-downs agree after push-forward.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from procsm.chern import TotalChernClass, divisor_line_bundle, tangent_chern, whitney_quotient
from procsm.chow_ring import (
    AmbientSpace,
    BlowDownMap,
    ChowClass,
    ProductAmbient,
    as_surface,
    as_surface_class,
    pushforward_blowdown,
)
from procsm.errors import AmbientMismatch, IndexOutOfRange
from procsm.log_csm import DivisorArrangement, compositions, csm_open, csm_zero, silred_rhs


def _product(classes, ambient: AmbientSpace) -> ChowClass:
    out = ambient.one()
    for c in classes:
        out = out * c
    return out


def char_class_localization(arr: DivisorArrangement) -> ChowClass:
    """``c_n(T) - Σ_{I≠∅} (-1)^{|I|+1} ι_{I*} c_top(T_{D_I})``."""
    ambient = arr.ambient
    n = ambient.dim
    tangent = tangent_chern(ambient)
    boundary = ambient.zero()
    for size in range(1, min(arr.m, n) + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(arr.classes, size):
            normal = _product((divisor_line_bundle(d).value for d in subset), ambient)
            stratum_tangent = whitney_quotient(tangent, TotalChernClass(normal))
            euler = stratum_tangent.c(n - size) * _product(subset, ambient)
            boundary = boundary + sign * euler
    return tangent.c(n) - boundary


@dataclass
class MainIdentityReport:
    csm_zero: ChowClass
    silred_rhs: ChowClass
    char_class: ChowClass
    passed: bool


def verify_main_identity(arr: DivisorArrangement) -> MainIdentityReport:
    a, b, c = csm_zero(arr), silred_rhs(arr), char_class_localization(arr)
    return MainIdentityReport(a, b, c, a == b == c)


# --- induction verifier -----------------------------------------------------
#
# A "support" is a tuple of divisor classes cutting out a smooth subvariety Y of
# the ambient.  Classes on Y are represented by ambient classes; pushing them to
# the ambient multiplies by the product of the support (projection formula).


class _Context:
    def __init__(self, ambient: AmbientSpace):
        self.ambient = ambient
        self.n = ambient.dim
        tangent = tangent_chern(ambient)
        self._tangents = {(): [tangent.c(s) for s in range(self.n + 1)]}

    def tangent(self, support: tuple) -> list:
        """Chern classes ``c_0..c_dim`` of ``T_Y``, peeling one divisor at a time.

        Uses ``c_d(T)|_D = c_d(T_D) - c_{d-1}(T_D) c_1(-D)|_D`` solved for ``c_d(T_D)``.
        """
        if support in self._tangents:
            return self._tangents[support]
        outer = self.tangent(support[:-1])
        d = support[-1]
        inner = [outer[0]] if len(outer) > 1 else []
        for s in range(1, len(outer) - 1):
            inner.append(outer[s] + inner[s - 1] * (-d))
        self._tangents[support] = inner
        return inner

    def dim(self, support: tuple) -> int:
        return self.n - len(support)

    def push(self, x: ChowClass, support: tuple) -> ChowClass:
        return x * _product(support, self.ambient)

    def euler(self, support: tuple) -> ChowClass:
        """Pushed Euler class of ``T_Y`` (the characteristic class of ``1_Y``)."""
        if self.dim(support) < 0:
            return self.ambient.zero()
        return self.push(self.tangent(support)[self.dim(support)], support)

    def euler_union(self, support: tuple, comps: tuple) -> ChowClass:
        """Pushed characteristic class of ``Y ∩ (D_1 ∪ ... ∪ D_k)`` via Mayer-Vietoris."""
        out = self.ambient.zero()
        for size in range(1, len(comps) + 1):
            sign = 1 if size % 2 else -1
            for subset in itertools.combinations(comps, size):
                out = out + sign * self.euler(support + subset)
        return out

    def claim_rhs(self, support: tuple, comps: tuple, last_positive: bool = False) -> ChowClass:
        """``Σ_{l≥1} Σ_{|j|=l} c_{d-l}(T_Y) Π (-D_i)^{j_i}`` pushed from ``Y``."""
        d = self.dim(support)
        out = self.ambient.zero()
        if d < 0:
            return out
        tangent = self.tangent(support)
        negated = [-c for c in comps]
        for l in range(1, d + 1):
            for js in compositions(l, len(comps)):
                if last_positive and js[-1] == 0:
                    continue
                term = tangent[d - l]
                for c, j in zip(negated, js):
                    term = term * c**j
                out = out + term
        return self.push(out, support)

    def sil2_expanded(self, support: tuple, comps: tuple) -> ChowClass:
        """Second half of the split after substituting the restricted tangent class.

        Factors one ``c_1(-D_m)`` out of each term, rewrites ``c(T)|_{D_m}`` through
        ``T_{D_m}`` and re-multiplies: this is the literal middle of the step.
        """
        d = self.dim(support)
        out = self.ambient.zero()
        if d < 1:
            return out
        last = comps[-1]
        inner = support + (last,)
        tangent = self.tangent(inner)  # c_0..c_{d-1} of T_{D_m ∩ Y}
        negated = [-c for c in comps]
        for l in range(1, d + 1):
            for js in compositions(l, len(comps)):
                if js[-1] == 0:
                    continue
                mono = self.ambient.one()
                for c, j in zip(negated[:-1], js[:-1]):
                    mono = mono * c**j
                reduced = mono * negated[-1] ** (js[-1] - 1)
                out = out + tangent[d - l] * reduced
                if l <= d - 1:
                    out = out - tangent[d - l - 1] * reduced * negated[-1]
        return -self.push(out, inner)


@dataclass
class InductionLevel:
    m: int
    lhs: ChowClass
    rhs: ChowClass
    closed_form: ChowClass
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


@dataclass
class InductionReport:
    levels: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.levels) and all(level.passed for level in self.levels)


def _claim_checks(ctx: _Context, support: tuple, comps: tuple) -> dict:
    """All step checks of the induction for ``comps`` inside ``Y = ∩ support``."""
    rhs = ctx.claim_rhs(support, comps)
    lhs = -ctx.euler_union(support, comps)
    checks = {"claim": lhs == rhs}
    if not comps:
        return checks
    last = comps[-1]
    head = comps[:-1]
    first = ctx.claim_rhs(support, head)
    second = ctx.claim_rhs(support, comps, last_positive=True)
    inner = support + (last,)
    checks["split"] = rhs == first + second
    checks["hypothesis_E"] = first == -ctx.euler_union(support, head)
    checks["sil2_substitution"] = second == ctx.sil2_expanded(support, comps)
    checks["restricted"] = second == -(ctx.euler(inner) + ctx.claim_rhs(inner, head))
    checks["hypothesis_E_cap_D"] = ctx.claim_rhs(inner, head) == -ctx.euler_union(inner, head)
    checks["mayer_vietoris"] = (
        ctx.euler(inner) - ctx.euler_union(inner, head)
        == ctx.euler_union(support, comps) - ctx.euler_union(support, head)
    )
    # the induction hypothesis itself, on both smaller configurations
    if ctx.dim(support) >= 0:
        checks["nested"] = all(_claim_checks(ctx, support, head).values()) and all(
            _claim_checks(ctx, inner, head).values()
        )
    return checks


def verify_silclaim_induction(arr: DivisorArrangement, upto: int = None) -> InductionReport:
    """Replay the induction on the number of components for ``m' = 1..m``.

    Each level recomputes both sides of the reduced claim for the first ``m'``
    components, checks every intermediate equality of the inductive step, and
    compares the result with the closed-form log CSM computation.
    """
    m = arr.m if upto is None else upto
    if m < 1 or m > arr.m:
        raise IndexOutOfRange(f"induction needs 1 <= m <= {arr.m}, got {m}")
    ambient = arr.ambient
    ctx = _Context(ambient)
    top_tangent = tangent_chern(ambient).c(ambient.dim)
    report = InductionReport()
    classes = tuple(arr.classes)
    for k in range(1, m + 1):
        comps = classes[:k]
        checks = _claim_checks(ctx, (), comps)
        closed = csm_zero(arr.prefix(k)) - top_tangent
        rhs = ctx.claim_rhs((), comps)
        checks["closed_form"] = closed == rhs
        report.levels.append(
            InductionLevel(k, -ctx.euler_union((), comps), rhs, closed, checks)
        )
    return report


# --- compactification diagrams ----------------------------------------------


def surface_arrangement(arr: DivisorArrangement) -> DivisorArrangement:
    """The same arrangement on the surface form of ``P^2`` or ``P^1 x P^1``."""
    if not isinstance(arr.ambient, ProductAmbient):
        return arr
    surface = as_surface(arr.ambient)
    return DivisorArrangement(
        surface,
        tuple((name, as_surface_class(c)) for name, c in arr.components),
        arr.snc_asserted,
    )


@dataclass(frozen=True)
class CompactificationDiagram:
    """Two compactifications of one open variety linked by a chain of blow-downs.

    ``maps`` runs from the upstairs ambient down to the downstairs ambient; an
    empty chain is the identity.  ``claim_same_complement`` records the user's
    assertion that both arrangements cut out the same open variety.
    """

    upstairs: DivisorArrangement
    downstairs: DivisorArrangement
    maps: tuple[BlowDownMap, ...] = ()
    claim_same_complement: bool = True

    def __post_init__(self):
        object.__setattr__(self, "upstairs", surface_arrangement(self.upstairs))
        object.__setattr__(self, "downstairs", surface_arrangement(self.downstairs))
        object.__setattr__(self, "maps", tuple(self.maps))
        current = self.upstairs.ambient
        for f in self.maps:
            if f.source != current:
                raise AmbientMismatch("blow-down chain does not start where the previous map ends")
            current = f.target
        if current != self.downstairs.ambient:
            raise AmbientMismatch("blow-down chain does not end at the downstairs ambient")


def push_down(maps: Sequence[BlowDownMap], x: ChowClass) -> ChowClass:
    for f in maps:
        x = pushforward_blowdown(f, x)
    return x


@dataclass
class CompatReport:
    csm_upstairs: ChowClass
    csm_pushed: ChowClass
    csm_downstairs: ChowClass
    char_upstairs: ChowClass
    char_pushed: ChowClass
    char_downstairs: ChowClass
    claim_same_complement: bool

    @property
    def csm_agrees(self) -> bool:
        return self.csm_pushed == self.csm_downstairs

    @property
    def char_agrees(self) -> bool:
        return self.char_pushed == self.char_downstairs

    @property
    def passed(self) -> bool:
        return self.csm_agrees and self.char_agrees


def compactification_compat(diag: CompactificationDiagram) -> CompatReport:
    up, down = diag.upstairs, diag.downstairs
    csm_up = csm_open(up)
    char_up = char_class_localization(up)
    return CompatReport(
        csm_upstairs=csm_up,
        csm_pushed=push_down(diag.maps, csm_up),
        csm_downstairs=csm_open(down),
        char_upstairs=char_up,
        char_pushed=push_down(diag.maps, char_up),
        char_downstairs=char_class_localization(down),
        claim_same_complement=diag.claim_same_complement,
    )
