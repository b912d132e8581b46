"""JSON instance files and report serialization.

An instance file looks like::

    {
      "field": "gf:2",
      "objects": {"X": {"dim": 1}, "S": {"symplectic": 1},
                  "T": {"dim": 2, "form": [[0, 1], [-1, 0]]}},
      "relations": {"f": {"target": "X", "source": "X", "basis": [[1, 1]]},
                    "d": {"target": "X", "source": "X", "kind": "identity"}},
      "chains": {"c": ["f", "d"]},
      "ww": {"m": {"shadow": "f", "defect": 1, "excess": 0, "tag": "lrel"}},
      "triples": {"t": {"dim": 2, "A": [[1, 0]], "B": [], "C": [[1, 1]]}},
      "pairs": {"p": {"space": "S", "A": [[1, 0]], "B": [[0, 1]]}}
    }

Rationals are written as ``"a/b"`` strings (plain integers are accepted too);
elements of GF(p) as integers ``0 .. p-1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Dict, List

from . import exactalg as ea
from . import relcore as rc
from . import symplin as sp
from .exactalg import FieldSpec, Subspace
from .relcore import LinearRelation, VectorSpaceObj


class InstanceParseError(ea.LinRelError, ValueError):
    """Malformed file: bad JSON, missing keys, unparsable scalars."""


class InstanceValidationError(ea.LinRelError, ValueError):
    """Well-formed file whose content violates a mathematical precondition."""


@dataclass
class Instance:
    field: FieldSpec
    objects: Dict[str, VectorSpaceObj] = dc_field(default_factory=dict)
    relations: Dict[str, LinearRelation] = dc_field(default_factory=dict)
    chains: Dict[str, List[str]] = dc_field(default_factory=dict)
    ww: Dict[str, dict] = dc_field(default_factory=dict)
    triples: Dict[str, dict] = dc_field(default_factory=dict)
    pairs: Dict[str, dict] = dc_field(default_factory=dict)

    def chain(self, name: str) -> List[LinearRelation]:
        if name not in self.chains:
            raise InstanceValidationError(f"no chain named {name!r}")
        links = [self.relation(r) for r in self.chains[name]]
        try:
            rc.RelationChain(tuple(links))
        except rc.ObjectMismatchError as exc:
            raise InstanceValidationError(f"chain {name!r} is not composable: {exc}") from None
        return links

    def relation(self, name: str) -> LinearRelation:
        if name not in self.relations:
            raise InstanceValidationError(f"no relation named {name!r}")
        return self.relations[name]


def _rows(fld: FieldSpec, rows, ncols: int, what: str):
    if not isinstance(rows, list):
        raise InstanceParseError(f"{what}: expected a list of rows")
    out = []
    for r in rows:
        if not isinstance(r, list) or len(r) != ncols:
            raise InstanceParseError(f"{what}: every row needs {ncols} entries")
        try:
            out.append([fld(v) for v in r])
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise InstanceParseError(f"{what}: bad scalar ({exc})") from None
    return out


def _parse_object(fld: FieldSpec, name: str, entry) -> VectorSpaceObj:
    if not isinstance(entry, dict):
        raise InstanceParseError(f"object {name!r}: expected a mapping")
    try:
        if "symplectic" in entry:
            return sp.standard_space(int(entry["symplectic"]), fld, name)
        dim = int(entry["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceParseError(f"object {name!r}: {exc}") from None
    if "form" in entry:
        form = _rows(fld, entry["form"], dim, f"form of {name!r}")
        try:
            return sp.SymplecticSpace(dim, fld, name, tuple(tuple(r) for r in form))
        except ValueError as exc:
            raise InstanceValidationError(f"object {name!r}: {exc}") from None
    return VectorSpaceObj(dim, fld, name)


def _parse_relation(inst: Instance, name: str, entry) -> LinearRelation:
    try:
        x = inst.objects[entry["target"]]
        y = inst.objects[entry["source"]]
    except (KeyError, TypeError) as exc:
        raise InstanceParseError(f"relation {name!r}: unknown or missing object {exc}") from None
    kind = entry.get("kind")
    if kind == "identity":
        if x != y:
            raise InstanceValidationError(f"relation {name!r}: identity needs equal objects")
        return rc.identity(x)
    if kind == "zero":
        return rc.zero_relation(x, y)
    if kind == "full":
        return rc.full_relation(x, y)
    if kind is not None:
        raise InstanceParseError(f"relation {name!r}: unknown kind {kind!r}")
    if "basis" not in entry:
        raise InstanceParseError(f"relation {name!r}: needs 'basis' or 'kind'")
    rows = _rows(inst.field, entry["basis"], x.dim + y.dim, f"relation {name!r}")
    return rc.relation(x, y, rows)


def parse_instance(data) -> Instance:
    if not isinstance(data, dict):
        raise InstanceParseError("instance must be a JSON object")
    try:
        fld = ea.parse_field(str(data.get("field", "q")))
    except ValueError as exc:
        raise InstanceParseError(str(exc)) from None
    inst = Instance(fld)
    for name, entry in data.get("objects", {}).items():
        inst.objects[name] = _parse_object(fld, name, entry)
    for name, entry in data.get("relations", {}).items():
        if not isinstance(entry, dict):
            raise InstanceParseError(f"relation {name!r}: expected a mapping")
        inst.relations[name] = _parse_relation(inst, name, entry)
    for name, links in data.get("chains", {}).items():
        if not isinstance(links, list) or not links or not all(isinstance(s, str) for s in links):
            raise InstanceParseError(f"chain {name!r}: expected a nonempty list of names")
        for s in links:
            if s not in inst.relations:
                raise InstanceParseError(f"chain {name!r}: unknown relation {s!r}")
        inst.chains[name] = links
    for name, entry in data.get("ww", {}).items():
        if not isinstance(entry, dict) or "shadow" not in entry:
            raise InstanceParseError(f"ww morphism {name!r}: needs a 'shadow'")
        if entry["shadow"] not in inst.relations:
            raise InstanceParseError(f"ww morphism {name!r}: unknown shadow {entry['shadow']!r}")
        inst.ww[name] = entry
    for name, entry in data.get("triples", {}).items():
        try:
            n = int(entry["dim"])
            inst.triples[name] = {"dim": n, **{k: ea.span(_rows(fld, entry[k], n, f"{name}.{k}"), n, fld)
                                               for k in "ABC"}}
        except (KeyError, TypeError) as exc:
            raise InstanceParseError(f"triple {name!r}: missing {exc}") from None
    for name, entry in data.get("pairs", {}).items():
        try:
            x = inst.objects[entry["space"]]
        except (KeyError, TypeError) as exc:
            raise InstanceParseError(f"pair {name!r}: unknown space {exc}") from None
        if not isinstance(x, sp.SymplecticSpace):
            raise InstanceValidationError(f"pair {name!r}: space is not symplectic")
        try:
            inst.pairs[name] = {"space": x, **{k: ea.span(_rows(fld, entry[k], x.dim, f"{name}.{k}"),
                                                          x.dim, fld) for k in "AB"}}
        except KeyError as exc:
            raise InstanceParseError(f"pair {name!r}: missing {exc}") from None
    return inst


def load_instance(path: str) -> Instance:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InstanceParseError(f"cannot read {path}: {exc}") from None
    return parse_instance(data)


# -- output ---------------------------------------------------------------------

def subspace_json(s: Subspace) -> dict:
    return {
        "ambient_dim": s.ambient_dim,
        "dim": s.dim,
        "basis": [[s.field.format(v) for v in r] for r in s.basis],
    }


def relation_json(f: LinearRelation) -> dict:
    out = {
        "target": {"name": f.target.name, "dim": f.target.dim},
        "source": {"name": f.source.name, "dim": f.source.dim},
        **subspace_json(f.space),
    }
    if isinstance(f.target, sp.SymplecticSpace) and isinstance(f.source, sp.SymplecticSpace):
        out["class"] = sp.classify(f)
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
