import itertools

import pytest

import procsm.characteristic as characteristic
from procsm.chern import TotalChernClass, tangent_chern
from procsm.characteristic import (
    CompactificationDiagram,
    char_class_localization,
    compactification_compat,
    verify_main_identity,
    verify_silclaim_induction,
)
from procsm.chow_ring import as_surface, blow_up_surface, make_product_ambient
from procsm.errors import AmbientMismatch, IndexOutOfRange
from procsm.log_csm import arrangement, csm_zero

import oracles
from conftest import exps


def test_localization_examples(P2, P3):
    h = P2.hyperplane(0)
    assert char_class_localization(arrangement(P2, [h])) == P2.point()
    assert char_class_localization(arrangement(P2, [h, h])).is_zero()
    assert char_class_localization(arrangement(P3, [])) == tangent_chern(P3).c(3)


@pytest.mark.parametrize(
    "factors, multidegrees",
    [
        ([2], [[1], [1]]),
        ([2], [[3], [2]]),
        ([1, 1], [[1, 0], [0, 1], [1, 1]]),
        ([3], [[1], [2], [3], [1]]),
        ([2, 1], [[1, 1], [2, 3], [1, 2]]),
        ([1, 1, 1], [[1, 2, 3], [3, 2, 1], [1, 1, 1]]),
    ],
)
def test_localization_matches_oracle(factors, multidegrees):
    ambient = make_product_ambient(factors)
    arr = arrangement(ambient, [ambient.divisor(md) for md in multidegrees])
    assert exps(char_class_localization(arr)) == oracles.as_table(
        oracles.char_class(factors, multidegrees), factors
    )


def test_main_identity_examples(P1, P2, P1xP1):
    r = verify_main_identity(arrangement(P2, [P2.hyperplane(0)]))
    assert r.passed and r.csm_zero == r.silred_rhs == r.char_class == P2.point()
    r = verify_main_identity(arrangement(P1, [P1.hyperplane(0)] * 2))
    assert r.passed and r.char_class.is_zero()
    three = arrangement(P1xP1, [P1xP1.divisor(v) for v in ([1, 0], [0, 1], [1, 1])])
    r = verify_main_identity(three)
    assert r.passed
    # complement: A^2 minus a punctured line, chi_c = 1 - 0
    assert r.char_class.degree() == 1


def test_induction_one_line(P2):
    r = verify_silclaim_induction(arrangement(P2, [P2.hyperplane(0)]))
    assert r.passed and len(r.levels) == 1
    level = r.levels[0]
    assert level.lhs == -2 * P2.point()
    assert level.rhs == level.closed_form == level.lhs


def test_induction_two_lines(P2):
    r = verify_silclaim_induction(arrangement(P2, [P2.hyperplane(0)] * 2))
    assert [lv.passed for lv in r.levels] == [True, True]
    assert r.levels[1].lhs == -3 * P2.point()


def test_induction_three_planes(P3):
    arr = arrangement(P3, [P3.hyperplane(0)] * 3)
    r = verify_silclaim_induction(arr)
    assert r.passed and len(r.levels) == 3
    expected_checks = {
        "claim", "split", "hypothesis_E", "sil2_substitution", "restricted",
        "hypothesis_E_cap_D", "mayer_vietoris", "nested", "closed_form",
    }
    for k, level in enumerate(r.levels, start=1):
        assert set(level.checks) == expected_checks
        assert level.closed_form == csm_zero(arr.prefix(k)) - tangent_chern(P3).c(3)


def test_induction_needs_components(P2):
    with pytest.raises(IndexOutOfRange):
        verify_silclaim_induction(arrangement(P2, []))
    with pytest.raises(IndexOutOfRange):
        verify_silclaim_induction(arrangement(P2, [P2.hyperplane(0)]), upto=2)


def test_induction_detects_wrong_tangent(P2, monkeypatch):
    # negative control: a perturbed tangent class must break the comparison
    # with the closed-form path
    real = characteristic.tangent_chern

    def perturbed(ambient):
        c = real(ambient)
        return TotalChernClass(c.value + ambient.point())

    monkeypatch.setattr(characteristic, "tangent_chern", perturbed)
    r = verify_silclaim_induction(arrangement(P2, [P2.hyperplane(0)] * 2))
    assert not r.passed
    assert not all(level.checks["closed_form"] for level in r.levels)


def test_localization_permutation_invariant(P1xP1):
    arr = arrangement(P1xP1, [P1xP1.divisor(v) for v in ([1, 2], [2, 1], [1, 1])])
    base = char_class_localization(arr)
    for order in itertools.permutations(range(3)):
        assert char_class_localization(arr.permuted(order)) == base


def _a2_diagram(downstairs_lines=1):
    P2 = make_product_ambient([2])
    B, f = blow_up_surface(P2, "E")
    H, E = B.label_class("H"), B.label_class("E")
    up = arrangement(B, [H - E, E])
    down = arrangement(P2, [P2.hyperplane(0)] * downstairs_lines)
    return CompactificationDiagram(up, down, (f,)), B


def test_compat_a2():
    diag, B = _a2_diagram()
    r = compactification_compat(diag)
    H, E = B.label_class("H"), B.label_class("E")
    assert r.csm_upstairs == B.one() + 2 * H - E + B.point()
    S = as_surface(make_product_ambient([2]))
    assert r.csm_pushed == S.one() + 2 * S.label_class("H") + S.point()
    assert r.csm_downstairs == r.csm_pushed
    assert r.char_pushed == r.char_downstairs == S.point()
    assert r.passed


def test_compat_identity_diagram(P2):
    arr = arrangement(P2, [P2.hyperplane(0)])
    r = compactification_compat(CompactificationDiagram(arr, arr))
    assert r.passed


def test_compat_negative_control():
    diag, _ = _a2_diagram(downstairs_lines=2)
    r = compactification_compat(diag)
    assert not r.passed
    assert r.csm_pushed != r.csm_downstairs


def test_compat_two_blowups():
    P2 = make_product_ambient([2])
    B1, f1 = blow_up_surface(P2, "E1")
    B2, f2 = blow_up_surface(B1, "E2")
    H, E1, E2 = (B2.label_class(x) for x in ("H", "E1", "E2"))
    up = arrangement(B2, [H - E1 - E2, E1, E2])
    down = arrangement(P2, [P2.hyperplane(0)])
    r = compactification_compat(CompactificationDiagram(up, down, (f2, f1)))
    assert r.passed
    assert verify_main_identity(up).passed
    assert verify_silclaim_induction(up).passed


def test_diagram_chain_must_connect(P2):
    diag, _ = _a2_diagram()
    with pytest.raises(AmbientMismatch):
        CompactificationDiagram(diag.upstairs, diag.downstairs, ())
