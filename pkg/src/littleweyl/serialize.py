"""JSON schemas for spaces, cones and analysis reports.

All rationals travel as "p/q" strings (or "p" for integers) so that no
consumer ever sees a float; reports round-trip losslessly.  The space
description schema, version 1:

    {
      "schema_version": 1,
      "lie_algebra": {"cartan_type": "A2", "center_dim": 0}
                     or {"cartan_matrix": [[2,-1],[-1,2]], "center_dim": 0},
      "subalgebra": [["0","0","1"], ...],          # rows in basis coordinates
      "base_point_word": [
          {"kind": "nilpotent", "vector": [...]},
          {"kind": "torus", "coweight": [...], "scale": "p/q"},
          {"kind": "weyl", "word": [0, 1]},
          {"kind": "sign", "t": [...]}
      ],
      "claims": { ... optional expected-results block ... }
    }
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .cones import Cone
from .lie import LieAlgebraData, LieAlgebraError, build_from_cartan, cartan_matrix_of_type
from .linalg import Subspace, Vec, vec
from .spherical import BasePoint, WordEntry, translate

SCHEMA_VERSION = 1


class SpaceFileError(ValueError):
    pass


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_frac(s, where: str = "") -> Fraction:
    try:
        if isinstance(s, int):
            return Fraction(s)
        if isinstance(s, str):
            return Fraction(s)
    except (ValueError, ZeroDivisionError):
        pass
    raise SpaceFileError(f"not a rational number at {where or 'input'}: {s!r}")


def vec_to_json(v: Sequence) -> list[str]:
    return [frac_str(x) for x in vec(v)]


def vec_from_json(data, where: str = "") -> Vec:
    if not isinstance(data, list):
        raise SpaceFileError(f"expected a list of rationals at {where}")
    return tuple(parse_frac(x, f"{where}[{i}]") for i, x in enumerate(data))


def subspace_to_json(s: Subspace) -> list[list[str]]:
    return [vec_to_json(r) for r in s.basis_matrix]


def cone_to_json(c: Cone) -> dict:
    return {
        "inequalities": [vec_to_json(g) for g in c.inequalities],
        "rays": [vec_to_json(r) for r in c.rays],
        "lineality": subspace_to_json(c.lineality),
    }


def word_entry_to_json(e: WordEntry) -> dict:
    if e.kind == "nilpotent":
        return {"kind": "nilpotent", "vector": vec_to_json(e.nilpotent)}
    if e.kind == "torus":
        return {
            "kind": "torus",
            "coweight": vec_to_json(e.coweight),
            "scale": frac_str(e.scale),
        }
    if e.kind == "sign":
        return {"kind": "sign", "t": vec_to_json(e.coweight)}
    if e.kind == "weyl":
        return {"kind": "weyl", "word": list(e.weyl_word)}
    raise ValueError(f"unknown word entry kind {e.kind!r}")


def word_entry_from_json(data, where: str) -> WordEntry:
    if not isinstance(data, dict) or "kind" not in data:
        raise SpaceFileError(f"word entry at {where} must be an object with a 'kind'")
    kind = data["kind"]
    if kind == "nilpotent":
        return WordEntry.exp(vec_from_json(data.get("vector"), f"{where}.vector"))
    if kind == "torus":
        return WordEntry.torus(
            vec_from_json(data.get("coweight"), f"{where}.coweight"),
            parse_frac(data.get("scale"), f"{where}.scale"),
        )
    if kind == "sign":
        return WordEntry.sign(vec_from_json(data.get("t"), f"{where}.t"))
    if kind == "weyl":
        word = data.get("word")
        if not isinstance(word, list) or not all(isinstance(i, int) for i in word):
            raise SpaceFileError(f"weyl word at {where} must be a list of integers")
        return WordEntry.weyl(word)
    raise SpaceFileError(f"unknown word entry kind {kind!r} at {where}")


def lie_from_json(data, where: str = "lie_algebra") -> LieAlgebraData:
    if not isinstance(data, dict):
        raise SpaceFileError(f"{where} must be an object")
    center = data.get("center_dim", 0)
    if not isinstance(center, int) or center < 0:
        raise SpaceFileError(f"{where}.center_dim must be a nonnegative integer")
    try:
        if "cartan_type" in data:
            matrix = cartan_matrix_of_type(data["cartan_type"])
        elif "cartan_matrix" in data:
            matrix = data["cartan_matrix"]
        else:
            raise SpaceFileError(
                f"{where} needs either 'cartan_type' or 'cartan_matrix'"
            )
        return build_from_cartan(matrix, center)
    except LieAlgebraError as err:
        raise SpaceFileError(f"{where}: {err}") from err


def space_to_json(
    lie_desc: dict, subalgebra: Subspace, word: Sequence[WordEntry], claims: dict | None = None
) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "lie_algebra": lie_desc,
        "subalgebra": subspace_to_json(subalgebra),
        "base_point_word": [word_entry_to_json(e) for e in word],
    }
    if claims:
        out["claims"] = claims
    return out


def space_from_json(data) -> tuple[LieAlgebraData, BasePoint, dict]:
    """Parse a space description; returns (lie, base point, claims)."""
    if not isinstance(data, dict):
        raise SpaceFileError("space description must be a JSON object")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise SpaceFileError(f"unsupported schema_version {version}")
    lie = lie_from_json(data.get("lie_algebra"))
    rows = data.get("subalgebra")
    if not isinstance(rows, list) or not rows:
        raise SpaceFileError("subalgebra must be a nonempty list of rows")
    parsed = []
    for i, row in enumerate(rows):
        v = vec_from_json(row, f"subalgebra[{i}]")
        if len(v) != lie.dim:
            raise SpaceFileError(
                f"subalgebra[{i}] has length {len(v)}, expected {lie.dim}"
            )
        parsed.append(v)
    h = Subspace.from_spanning(lie.dim, parsed)
    word = [
        word_entry_from_json(e, f"base_point_word[{i}]")
        for i, e in enumerate(data.get("base_point_word", []))
    ]
    try:
        bp = translate(lie, h, word)
    except LieAlgebraError as err:
        raise SpaceFileError(str(err)) from err
    claims = data.get("claims") or {}
    return lie, bp, claims


def load_space_file(path: str) -> tuple[LieAlgebraData, BasePoint, dict]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as err:
        raise SpaceFileError(f"{path}:{err.lineno}:{err.colno}: {err.msg}") from err
    except OSError as err:
        raise SpaceFileError(str(err)) from err
    return space_from_json(data)


def catalog_entry_to_space_json(entry) -> dict:
    lie_desc = {"cartan_type": entry.cartan_type, "center_dim": entry.center_dim}
    lie = entry.lie()
    h = Subspace.from_spanning(lie.dim, entry.subalgebra)
    return space_to_json(lie_desc, h, entry.base_point_word, claims=dict(entry.expected))


def dumps_canonical(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
