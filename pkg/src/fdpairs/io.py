"""Pair files: JSON documents holding a group and two subsets.

    {"group": [2, 4, 4], "S": [[0, 0, 0], ...], "T": [[0, 0, 0], ...],
     "provenance": {...}}

Elements are written in dense-rank order so that parsing then serializing a
canonical file returns the same bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from .constructions import LiftedPair
from .errors import InvalidOrderError, PairFileError
from .groups import FiniteAbelianGroup, make_group


@dataclass(frozen=True)
class PairFile:
    group: FiniteAbelianGroup
    S: tuple
    T: tuple
    provenance: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_sets(cls, G: FiniteAbelianGroup, S, T, provenance=None) -> "PairFile":
        return cls(G, tuple(G.sorted_elements(S)), tuple(G.sorted_elements(T)), dict(provenance or {}))

    @classmethod
    def from_pair(cls, pair: LiftedPair) -> "PairFile":
        return cls.from_sets(pair.group, pair.S, pair.T, pair.provenance())

    def to_dict(self) -> dict:
        out = {"group": list(self.group.orders),
               "S": [list(x) for x in self.S],
               "T": [list(x) for x in self.T]}
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    def dumps(self) -> str:
        # one element per line keeps diffs readable
        d = self.to_dict()
        lines = ["{", f'  "group": {json.dumps(d["group"])},']
        for key in ("S", "T"):
            body = ",\n".join(f"    {json.dumps(v)}" for v in d[key])
            lines.append(f'  "{key}": [\n{body}\n  ],' if body else f'  "{key}": [],')
        if self.provenance:
            lines.append(f'  "provenance": {json.dumps(self.provenance, sort_keys=True)}')
        else:
            lines[-1] = lines[-1].rstrip(",")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def write(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps())


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise PairFileError(f"{where}: expected an integer, got {v!r}")
    return v


def _elements(G: FiniteAbelianGroup, raw, key: str) -> tuple:
    if not isinstance(raw, list):
        raise PairFileError(f"{key}: expected a list of coordinate vectors")
    seen = {}
    for i, vec in enumerate(raw):
        where = f"{key}[{i}]"
        if not isinstance(vec, list):
            raise PairFileError(f"{where}: expected a coordinate vector")
        if len(vec) != len(G.orders):
            raise PairFileError(f"{where}: length {len(vec)}, group has {len(G.orders)} factors")
        for j, (c, n) in enumerate(zip(vec, G.orders)):
            c = _int(c, f"{where}[{j}]")
            if not 0 <= c < n:
                raise PairFileError(f"{where}[{j}]: coordinate {c} out of range [0, {n})")
        t = tuple(vec)
        if t in seen:
            raise PairFileError(f"{where}: duplicate element {list(t)} (first at {key}[{seen[t]}])")
        seen[t] = i
    return tuple(G.sorted_elements(seen))


def parse_pair_file(data: Union[str, bytes]) -> PairFile:
    """Validate a pair file; errors name the offending field or JSON position."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise PairFileError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise PairFileError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise PairFileError("top level must be an object")
    for key in ("group", "S", "T"):
        if key not in doc:
            raise PairFileError(f"missing field {key!r}")
    extra = set(doc) - {"group", "S", "T", "provenance"}
    if extra:
        raise PairFileError(f"unknown field(s) {sorted(extra)}")
    orders = doc["group"]
    if not isinstance(orders, list):
        raise PairFileError("group: expected a list of cyclic orders")
    orders = [_int(n, f"group[{i}]") for i, n in enumerate(orders)]
    try:
        G = make_group(orders)
    except InvalidOrderError as exc:
        raise PairFileError(f"group: {exc}") from None
    prov = doc.get("provenance", {})
    if not isinstance(prov, dict):
        raise PairFileError("provenance: expected an object")
    return PairFile(G, _elements(G, doc["S"], "S"), _elements(G, doc["T"], "T"), prov)


def read_pair_file(path: Union[str, Path]) -> PairFile:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise PairFileError(f"{path}: {exc.strerror}") from None
    return parse_pair_file(raw)
