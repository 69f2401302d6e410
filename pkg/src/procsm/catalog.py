"""Built-in worked examples, in a fixed order."""

from __future__ import annotations

import copy

from procsm.errors import SchemaViolation

_FULL = ["csm_open", "csm_zero", "silred_rhs", "char_class", "verify_main",
         "verify_induction", "additivity", "chi"]

_A2 = {"type": "affine", "n": 2, "smooth_dim": 2}

_ENTRIES = [
    {
        "name": "p1-minus-two-points",
        "description": "G_m as P1 minus two points",
        "ambient": "P1",
        "arrangement": {"components": [{"name": "zero", "class": [1]},
                                       {"name": "infinity", "class": [1]}]},
        "outputs": ["log_cotangent"] + _FULL + ["chi_quadratic", "chi_homological"],
        "scissor": {"type": "complement", "smooth_dim": 1,
                    "whole": {"type": "proj", "n": 1},
                    "closed": {"type": "union", "parts": [{"type": "point"}, {"type": "point"}]}},
    },
    {
        "name": "p2-minus-line",
        "description": "the affine plane as P2 minus a line",
        "ambient": "P2",
        "arrangement": {"components": [{"name": "L", "class": [1]}]},
        "outputs": _FULL + ["chi_quadratic"],
        "scissor": _A2,
    },
    {
        "name": "p2-minus-two-lines",
        "description": "A1 x G_m as P2 minus two lines",
        "ambient": "P2",
        "arrangement": {"components": [{"name": "L1", "class": [1]}, {"name": "L2", "class": [1]}]},
        "outputs": _FULL + ["chi_quadratic"],
        "scissor": {"type": "product", "smooth_dim": 2,
                    "factors": [{"type": "affine", "n": 1}, {"type": "gm"}]},
    },
    {
        "name": "p2-minus-conic",
        "description": "P2 minus a smooth conic",
        "ambient": "P2",
        "arrangement": {"components": [{"name": "Q", "class": [2]}]},
        "outputs": _FULL,
        "scissor": {"type": "complement", "whole": {"type": "proj", "n": 2},
                    "closed": {"type": "proj", "n": 1}},
    },
    {
        "name": "p1xp1-minus-diagonal-class",
        "description": "P1 x P1 minus a smooth curve of bidegree (1,1)",
        "ambient": "P1xP1",
        "arrangement": {"components": [{"name": "C", "class": [1, 1]}]},
        "outputs": _FULL,
        "scissor": {"type": "complement",
                    "whole": {"type": "product", "factors": [{"type": "proj", "n": 1},
                                                             {"type": "proj", "n": 1}]},
                    "closed": {"type": "proj", "n": 1}},
    },
    {
        "name": "p1xp1-three-curves",
        "description": "P1 x P1 minus two rulings and a (1,1)-curve",
        "ambient": "P1xP1",
        "arrangement": {"components": [{"name": "F1", "class": [1, 0]},
                                       {"name": "F2", "class": [0, 1]},
                                       {"name": "C", "class": [1, 1]}]},
        "outputs": _FULL,
        "scissor": {"type": "complement", "whole": {"type": "affine", "n": 2},
                    "closed": {"type": "gm"}},
    },
    {
        "name": "p3-minus-three-planes",
        "description": "A1 x G_m x G_m as P3 minus three general planes",
        "ambient": "P3",
        "arrangement": {"components": [{"name": "H1", "class": [1]},
                                       {"name": "H2", "class": [1]},
                                       {"name": "H3", "class": [1]}]},
        "outputs": _FULL + ["chi_quadratic"],
        "scissor": {"type": "product", "smooth_dim": 3,
                    "factors": [{"type": "affine", "n": 1}, {"type": "gm"}, {"type": "gm"}]},
    },
    {
        "name": "blowup-compat-a2",
        "description": "A2 compactified by P2 and by P2 blown up at a point at infinity",
        "ambient": {"type": "blowup", "base": "P2", "labels": ["E"]},
        "arrangement": {"components": [{"name": "L'", "class": {"H": 1, "E": -1}},
                                       {"name": "E", "class": {"E": 1}}]},
        "outputs": _FULL + ["compat"],
        "scissor": _A2,
        "diagram": {
            "upstairs": {
                "ambient": {"type": "blowup", "base": "P2", "labels": ["E"]},
                "arrangement": {"components": [{"name": "L'", "class": {"H": 1, "E": -1}},
                                               {"name": "E", "class": {"E": 1}}]},
            },
            "downstairs": {"ambient": "P2",
                           "arrangement": {"components": [{"name": "L", "class": [1]}]}},
        },
    },
    {
        "name": "blowup-twice-compat-a2",
        "description": "A2 compactified by P2 blown up at two points of the line at infinity",
        "ambient": {"type": "blowup", "base": "P2", "labels": ["E1", "E2"]},
        "arrangement": {"components": [{"name": "L'", "class": {"H": 1, "E1": -1, "E2": -1}},
                                       {"name": "E1", "class": {"E1": 1}},
                                       {"name": "E2", "class": {"E2": 1}}]},
        "outputs": _FULL + ["compat"],
        "scissor": _A2,
        "diagram": {
            "upstairs": {
                "ambient": {"type": "blowup", "base": "P2", "labels": ["E1", "E2"]},
                "arrangement": {"components": [{"name": "L'", "class": {"H": 1, "E1": -1, "E2": -1}},
                                               {"name": "E1", "class": {"E1": 1}},
                                               {"name": "E2", "class": {"E2": 1}}]},
            },
            "downstairs": {"ambient": "P2",
                           "arrangement": {"components": [{"name": "L", "class": [1]}]}},
        },
    },
    {
        "name": "blowup-compat-negative",
        "description": "negative control: A2 upstairs against P2 minus two lines downstairs",
        "outputs": ["compat"],
        "diagram": {
            "upstairs": {
                "ambient": {"type": "blowup", "base": "P2", "labels": ["E"]},
                "arrangement": {"components": [{"name": "L'", "class": {"H": 1, "E": -1}},
                                               {"name": "E", "class": {"E": 1}}]},
            },
            "downstairs": {"ambient": "P2",
                           "arrangement": {"components": [{"name": "L1", "class": [1]},
                                                          {"name": "L2", "class": [1]}]}},
            "expect": "incompatible",
        },
    },
    {
        "name": "gm-quadratic",
        "description": "quadratic Euler characteristics of G_m",
        "outputs": ["chi", "chi_quadratic", "chi_homological"],
        "scissor": {"type": "gm", "smooth_dim": 1},
    },
]


def names() -> list:
    return [e["name"] for e in _ENTRIES]


def listing() -> list:
    return [(e["name"], e["description"]) for e in _ENTRIES]


def get(name: str) -> dict:
    for e in _ENTRIES:
        if e["name"] == name:
            return copy.deepcopy(e)
    raise SchemaViolation(f"unknown catalog scenario {name!r}")
