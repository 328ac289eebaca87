"""JSON file formats: ideal files, knot files, and kappa sequences.

Coefficients are written as lists of ``[exponent, numerator, denominator]``
triples (a Laurent polynomial in t), or ``{"num": [...], "den": [...]}`` when a
genuine denominator is needed.

Ideal file::

    {"format": "ncapoly-ideal", "coordinates": "monomial",
     "polys": [{"terms": [{"p": 0, "q": 2, "coeff": [[0, 1, 1]]}, ...]}, ...]}

``coordinates`` is ``"monomial"`` (coefficients of ``l^p m^q``, p, q >= 0) or
``"rieffel"`` (coefficients of ``e_{p,q}``, any integers).  A bare list of poly
records is accepted as a monomial ideal file.

Knot file::

    {"name": "unknot", "bounding_curve": [0, 1],
     "generators": ["L(0,1) + t^2 + t^-2", "L(1,1) + t^-3*L(1,0)"],
     "kappa": "unknot.kappa"}

``kappa`` is a path relative to the knot file, ``"builtin:unknot"``, or absent.

Kappa file::

    {"format": "ncapoly-kappa", "knot": "unknot", "framing": 0,
     "values": [{"c": 0, "value": [[0, 1, 1]]}, ...]}
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .coefficients import scalar_from_json, scalar_to_json
from .pipeline import KnotData
from .quantum_plane import PlanePoly
from .quantum_torus import QTElement
from .skein_torus import SkeinParseError, parse_skein
from .solid_torus import ZSeq, z_unknot

__all__ = [
    "InputError",
    "load_json",
    "ideal_to_json",
    "ideal_from_json",
    "qt_to_json",
    "qt_from_json",
    "read_ideal",
    "write_ideal",
    "dumps_ideal",
    "write_kappa",
    "read_knot",
    "knot_from_json",
    "kappa_to_json",
    "kappa_from_json",
    "read_kappa",
    "data_path",
]


class InputError(ValueError):
    """Malformed input file; the message carries the location."""


def data_path(name: str) -> Path:
    """Path of a file bundled in ``ncapoly/data``."""
    return Path(str(resources.files("ncapoly") / "data" / name))


def load_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read file: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None


def _int(obj, where):
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise InputError(f"{where}: expected an integer, got {obj!r}")
    return obj


def _coeff(obj, where):
    try:
        return scalar_from_json(obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: {exc}") from None


def _terms_to_json(terms: dict) -> list:
    return [
        {"p": p, "q": q, "coeff": scalar_to_json(c)}
        for (p, q), c in sorted(terms.items(), reverse=True)
    ]


def _terms_from_json(rec, where) -> dict:
    if not isinstance(rec, dict) or "terms" not in rec:
        raise InputError(f"{where}: expected an object with a 'terms' list")
    terms_obj = rec["terms"]
    if not isinstance(terms_obj, list):
        raise InputError(f"{where}.terms: expected a list")
    terms: dict = {}
    for j, term in enumerate(terms_obj):
        w = f"{where}.terms[{j}]"
        if not isinstance(term, dict) or not {"p", "q", "coeff"} <= set(term):
            raise InputError(f"{w}: expected an object with keys p, q, coeff")
        key = (_int(term["p"], w + ".p"), _int(term["q"], w + ".q"))
        c = _coeff(term["coeff"], w + ".coeff")
        terms[key] = terms[key] + c if key in terms else c
    return terms


def qt_to_json(x: QTElement) -> dict:
    return {"terms": _terms_to_json(x.terms)}


def qt_from_json(obj, where="element") -> QTElement:
    return QTElement(_terms_from_json(obj, where))


def ideal_to_json(polys, coordinates: str = "monomial", **extra) -> dict:
    """Serialize PlanePolys (or QTElements with ``coordinates='rieffel'``)."""
    out = {"format": "ncapoly-ideal", "coordinates": coordinates}
    out.update(extra)
    out["polys"] = [{"terms": _terms_to_json(p.terms)} for p in polys]
    return out


def ideal_from_json(obj, where="ideal"):
    """Returns ``(polys, coordinates, header)``; polys are PlanePoly or QTElement."""
    header = {}
    if isinstance(obj, list):
        records, coords = obj, "monomial"
    elif isinstance(obj, dict):
        if "polys" not in obj:
            raise InputError(f"{where}: missing 'polys'")
        records = obj["polys"]
        coords = obj.get("coordinates", "monomial")
        header = {k: v for k, v in obj.items() if k not in ("polys", "coordinates")}
    else:
        raise InputError(f"{where}: expected an object or a list of polynomials")
    if coords not in ("monomial", "rieffel"):
        raise InputError(f"{where}.coordinates: must be 'monomial' or 'rieffel', got {coords!r}")
    if not isinstance(records, list):
        raise InputError(f"{where}.polys: expected a list")
    if not records:
        raise InputError(f"{where}.polys: the ideal has no generators")
    polys = []
    for i, rec in enumerate(records):
        w = f"{where}.polys[{i}]"
        terms = _terms_from_json(rec, w)
        if coords == "monomial":
            try:
                polys.append(PlanePoly(terms))
            except ValueError as exc:
                raise InputError(f"{w}: {exc}") from None
        else:
            polys.append(QTElement(terms))
    return polys, coords, header


def read_ideal(path):
    return ideal_from_json(load_json(path), str(path))


def dumps_ideal(obj: dict) -> str:
    """One term per line, so files diff cleanly."""
    head = {k: v for k, v in obj.items() if k != "polys"}
    lines = ["{"]
    for k, v in head.items():
        lines.append(f" {json.dumps(k)}: {json.dumps(v)},")
    lines.append(' "polys": [')
    for i, poly in enumerate(obj["polys"]):
        lines.append('  {"terms": [')
        terms = poly["terms"]
        for j, term in enumerate(terms):
            lines.append("   " + json.dumps(term) + ("," if j < len(terms) - 1 else ""))
        lines.append("  ]}" + ("," if i < len(obj["polys"]) - 1 else ""))
    lines.append(" ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_ideal(path, polys, coordinates="monomial", **extra) -> None:
    Path(path).write_text(dumps_ideal(ideal_to_json(polys, coordinates, **extra)), encoding="utf-8")


def dumps_kappa(obj: dict) -> str:
    head = {k: v for k, v in obj.items() if k != "values"}
    lines = ["{"] + [f" {json.dumps(k)}: {json.dumps(v)}," for k, v in head.items()] + [' "values": [']
    vals = obj["values"]
    for i, rec in enumerate(vals):
        lines.append("  " + json.dumps(rec) + ("," if i < len(vals) - 1 else ""))
    lines += [" ]", "}"]
    return "\n".join(lines) + "\n"


def write_kappa(path, z: ZSeq) -> None:
    Path(path).write_text(dumps_kappa(kappa_to_json(z)), encoding="utf-8")


def kappa_to_json(z: ZSeq) -> dict:
    return {
        "format": "ncapoly-kappa",
        "knot": z.name,
        "framing": z.framing,
        "values": [{"c": c, "value": scalar_to_json(v)} for c, v in enumerate(z.values)],
    }


def kappa_from_json(obj, where="kappa", source="file") -> ZSeq:
    if not isinstance(obj, dict) or "values" not in obj:
        raise InputError(f"{where}: expected an object with a 'values' list")
    vals = obj["values"]
    if not isinstance(vals, list) or not vals:
        raise InputError(f"{where}.values: expected a nonempty list")
    out = []
    for i, rec in enumerate(vals):
        w = f"{where}.values[{i}]"
        if not isinstance(rec, dict) or "value" not in rec:
            raise InputError(f"{w}: expected an object with 'c' and 'value'")
        c = _int(rec.get("c", i), w + ".c")
        if c != i:
            raise InputError(f"{w}.c: expected index {i}, got {c}")
        out.append(_coeff(rec["value"], w + ".value"))
    if out[0] != 1:
        raise InputError(f"{where}.values[0]: kappa(0) must be 1 (empty color), got {out[0]}")
    return ZSeq(tuple(out), name=str(obj.get("knot", "")), source=source,
                framing=_int(obj.get("framing", 0), where + ".framing"))


def read_kappa(ref: str, base: Path | None = None) -> ZSeq:
    """Load a kappa file; ``builtin:unknot[:depth]`` gives the closed form."""
    if ref.startswith("builtin:"):
        parts = ref.split(":")
        if parts[1] != "unknot":
            raise InputError(f"{ref}: unknown builtin kappa sequence")
        depth = int(parts[2]) if len(parts) > 2 else 256
        return z_unknot(depth)
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = base / path
    return kappa_from_json(load_json(path), str(path))


def knot_from_json(obj, where="knot", base: Path | None = None) -> KnotData:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object")
    for key in ("name", "generators"):
        if key not in obj:
            raise InputError(f"{where}: missing {key!r}")
    gens = obj["generators"]
    if not isinstance(gens, list) or not gens:
        raise InputError(f"{where}.generators: expected a nonempty list of skein expressions")
    skeins = []
    for i, g in enumerate(gens):
        w = f"{where}.generators[{i}]"
        if not isinstance(g, str):
            raise InputError(f"{w}: expected a string")
        try:
            s = parse_skein(g)
        except SkeinParseError as exc:
            raise InputError(f"{w}: {exc}") from None
        except ValueError as exc:
            raise InputError(f"{w}: {exc}") from None
        if not s:
            raise InputError(f"{w}: generator is zero")
        skeins.append(s)
    bc = obj.get("bounding_curve", [0, 1])
    if not (isinstance(bc, list) and len(bc) == 2 and tuple(bc) in ((0, 1), (1, 0))):
        raise InputError(f"{where}.bounding_curve: must be [1, 0] or [0, 1], got {bc!r}")
    kappa = None
    ref = obj.get("kappa")
    if ref is not None:
        if not isinstance(ref, str):
            raise InputError(f"{where}.kappa: expected a path or 'builtin:unknot'")
        kappa = z_unknot if ref == "builtin:unknot" else read_kappa(ref, base)
    return KnotData(name=str(obj["name"]), peripheral_gens=skeins, bounding_curve=tuple(bc), kappa=kappa)


def read_knot(path) -> KnotData:
    path = Path(path)
    return knot_from_json(load_json(path), str(path), base=path.parent)
