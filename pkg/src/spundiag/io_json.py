"""Strict JSON interchange for Heegaard and multisection diagrams.

The schema is closed-world: unknown or missing fields fail with a
JSON-pointer-style path.  Parsing re-validates that every curve system is
simple and disjoint, so a round-tripped document is a checked document.
"""
from __future__ import annotations

import json
from typing import Any

from .curves import Arc, BACK, CurveWord, Foot, FRONT, GapPos, PortPos, Thru, validate_simple_disjoint
from .heegaard import Flavor, HeegaardDiagram
from .spin import MultisectionDiagram
from .surface import PlanarModel, Tube

FORMAT_VERSION = "1"


class SchemaError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _expect_keys(obj: dict, path: str, required: dict[str, type]) -> None:
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected object, got {type(obj).__name__}")
    unknown = set(obj) - set(required)
    if unknown:
        raise SchemaError(path, f"unknown field(s) {sorted(unknown)}")
    for key, typ in required.items():
        if key not in obj:
            raise SchemaError(path, f"missing field {key!r}")
        if typ is not None and not isinstance(obj[key], typ):
            raise SchemaError(
                f"{path}/{key}", f"expected {typ.__name__}, got {type(obj[key]).__name__}"
            )


# -- encoding ---------------------------------------------------------------


def _foot_json(f: Foot) -> list:
    return [f.tube, f.sign]


def _pos_json(p) -> dict:
    if isinstance(p, PortPos):
        return {"port": {"foot": _foot_json(p.foot), "track": p.track}}
    return {"gap": {"after": _foot_json(p.after), "slot": p.slot}}


def _step_json(s) -> dict:
    if isinstance(s, Thru):
        return {"thru": {"tube": s.tube, "dir": s.direction, "track": s.track}}
    return {
        "arc": {"disk": s.disk, "src": _pos_json(s.src), "dst": _pos_json(s.dst)}
    }


def _word_json(w: CurveWord) -> dict:
    return {"name": w.name, "steps": [_step_json(s) for s in w.steps]}


def _model_json(m: PlanarModel) -> dict:
    return {
        "genus": m.genus,
        "tubes": [
            {"name": t.name, "cluster": list(t.cluster) if t.cluster else None}
            for t in m.tubes
        ],
        "foot_order": [_foot_json(f) for f in m.foot_order],
    }


def _heegaard_payload(hd: HeegaardDiagram) -> dict:
    return {
        "label": hd.label,
        "genus": hd.genus,
        "flavor": hd.flavor.value,
        "model": _model_json(hd.model),
        "delta": [_word_json(w) for w in hd.delta],
        "epsilon": [_word_json(w) for w in hd.epsilon],
    }


def serialize(d: HeegaardDiagram | MultisectionDiagram) -> str:
    if isinstance(d, HeegaardDiagram):
        doc = {
            "format_version": FORMAT_VERSION,
            "kind": "heegaard",
            "payload": _heegaard_payload(d),
        }
    elif isinstance(d, MultisectionDiagram):
        doc = {
            "format_version": FORMAT_VERSION,
            "kind": "multisection",
            "payload": {
                "label": d.label,
                "m": d.m,
                "fiber": _heegaard_payload(d.fiber),
                "central": _model_json(d.central),
                "systems": [[_word_json(w) for w in sys] for sys in d.systems],
            },
        }
    else:
        raise TypeError(f"cannot serialize {type(d).__name__}")
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=True) + "\n"


# -- decoding ---------------------------------------------------------------


def _parse_foot(obj, path) -> Foot:
    if (
        not isinstance(obj, list)
        or len(obj) != 2
        or not isinstance(obj[0], str)
        or obj[1] not in (1, -1)
    ):
        raise SchemaError(path, "foot must be [tube_name, 1|-1]")
    return Foot(obj[0], obj[1])


def _parse_pos(obj, path):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise SchemaError(path, "position must have exactly one of 'port'/'gap'")
    if "port" in obj:
        body = obj["port"]
        _expect_keys(body, f"{path}/port", {"foot": list, "track": int})
        return PortPos(_parse_foot(body["foot"], f"{path}/port/foot"), body["track"])
    if "gap" in obj:
        body = obj["gap"]
        _expect_keys(body, f"{path}/gap", {"after": list, "slot": int})
        return GapPos(_parse_foot(body["after"], f"{path}/gap/after"), body["slot"])
    raise SchemaError(path, f"unknown position kind {sorted(obj)}")


def _parse_step(obj, path):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise SchemaError(path, "step must have exactly one of 'thru'/'arc'")
    if "thru" in obj:
        body = obj["thru"]
        _expect_keys(body, f"{path}/thru", {"tube": str, "dir": int, "track": int})
        if body["dir"] not in (1, -1):
            raise SchemaError(f"{path}/thru/dir", "must be 1 or -1")
        return Thru(body["tube"], body["dir"], body["track"])
    if "arc" in obj:
        body = obj["arc"]
        _expect_keys(body, f"{path}/arc", {"disk": str, "src": dict, "dst": dict})
        if body["disk"] not in (FRONT, BACK):
            raise SchemaError(f"{path}/arc/disk", "must be 'front' or 'back'")
        return Arc(
            body["disk"],
            _parse_pos(body["src"], f"{path}/arc/src"),
            _parse_pos(body["dst"], f"{path}/arc/dst"),
        )
    raise SchemaError(path, f"unknown step kind {sorted(obj)}")


def _parse_word(obj, path) -> CurveWord:
    _expect_keys(obj, path, {"name": str, "steps": list})
    if not obj["steps"]:
        raise SchemaError(f"{path}/steps", "curve has no steps")
    steps = tuple(
        _parse_step(s, f"{path}/steps/{i}") for i, s in enumerate(obj["steps"])
    )
    return CurveWord(obj["name"], steps)


def _parse_model(obj, path) -> PlanarModel:
    _expect_keys(obj, path, {"genus": int, "tubes": list, "foot_order": list})
    tubes = []
    for i, t in enumerate(obj["tubes"]):
        _expect_keys(t, f"{path}/tubes/{i}", {"name": str, "cluster": None})
        cl = t["cluster"]
        if cl is not None:
            if not (isinstance(cl, list) and len(cl) == 2 and all(isinstance(x, int) for x in cl)):
                raise SchemaError(f"{path}/tubes/{i}/cluster", "must be null or [j, k]")
            cl = (cl[0], cl[1])
        tubes.append(Tube(t["name"], cl))
    feet = tuple(
        _parse_foot(f, f"{path}/foot_order/{i}") for i, f in enumerate(obj["foot_order"])
    )
    try:
        return PlanarModel(obj["genus"], tuple(tubes), feet)
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from exc


def _validated_system(words, model, path) -> None:
    rep = validate_simple_disjoint(list(words), model)
    if not rep.ok:
        raise SchemaError(path, f"system is not simple/disjoint: {rep}")


def _parse_heegaard(obj, path) -> HeegaardDiagram:
    _expect_keys(
        obj,
        path,
        {
            "label": str,
            "genus": int,
            "flavor": str,
            "model": dict,
            "delta": list,
            "epsilon": list,
        },
    )
    try:
        flavor = Flavor(obj["flavor"])
    except ValueError as exc:
        raise SchemaError(f"{path}/flavor", str(exc)) from exc
    model = _parse_model(obj["model"], f"{path}/model")
    if obj["genus"] != model.genus:
        raise SchemaError(f"{path}/genus", "does not match the model")
    delta = tuple(
        _parse_word(w, f"{path}/delta/{i}") for i, w in enumerate(obj["delta"])
    )
    epsilon = tuple(
        _parse_word(w, f"{path}/epsilon/{i}") for i, w in enumerate(obj["epsilon"])
    )
    _validated_system(delta, model, f"{path}/delta")
    _validated_system(epsilon, model, f"{path}/epsilon")
    return HeegaardDiagram(obj["label"], obj["genus"], model, delta, epsilon, flavor)


def parse(text: str) -> HeegaardDiagram | MultisectionDiagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("/", f"not valid JSON: {exc}") from exc
    _expect_keys(doc, "/", {"format_version": str, "kind": str, "payload": dict})
    if doc["format_version"] != FORMAT_VERSION:
        raise SchemaError(
            "/format_version", f"unsupported version {doc['format_version']!r}"
        )
    payload = doc["payload"]
    if doc["kind"] == "heegaard":
        return _parse_heegaard(payload, "/payload")
    if doc["kind"] == "multisection":
        _expect_keys(
            payload,
            "/payload",
            {"label": str, "m": int, "fiber": dict, "central": dict, "systems": list},
        )
        if payload["m"] < 0:
            raise SchemaError("/payload/m", "must be >= 0")
        fiber = _parse_heegaard(payload["fiber"], "/payload/fiber")
        central = _parse_model(payload["central"], "/payload/central")
        systems = []
        for i, sys in enumerate(payload["systems"]):
            if not isinstance(sys, list):
                raise SchemaError(f"/payload/systems/{i}", "expected a list")
            words = tuple(
                _parse_word(w, f"/payload/systems/{i}/{j}") for j, w in enumerate(sys)
            )
            _validated_system(words, central, f"/payload/systems/{i}")
            systems.append(words)
        return MultisectionDiagram(
            payload["label"], payload["m"], fiber, central, tuple(systems)
        )
    raise SchemaError("/kind", f"unknown kind {doc['kind']!r}")
