"""Descriptor files, JSON/CSV exports.

Words are written as labels joined by "." with "" for the identity.
Everything is sorted by (length, word) so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Iterable, Mapping

from .coxeter import INF, CoxeterSystem
from .laurent import LaurentPoly
from .vectors import Vector, Word, sort_key


class DescriptorError(ValueError):
    pass


def parse_descriptor(obj: Mapping, star_override: list[int] | None = None,
                     cap: int = 10**6) -> CoxeterSystem:
    if not isinstance(obj, Mapping) or "matrix" not in obj:
        raise DescriptorError("descriptor must be an object with a 'matrix' field")
    matrix = obj["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise DescriptorError("'matrix' must be a list of lists")
    for row in matrix:
        for m in row:
            if not (isinstance(m, int) and not isinstance(m, bool)) and m != "inf":
                raise DescriptorError(f"matrix entry {m!r} is neither an integer nor \"inf\"")
    star = star_override if star_override is not None else obj.get("star")
    labels = obj.get("labels")
    try:
        return CoxeterSystem(matrix, star, labels, cap)
    except (ValueError, TypeError) as exc:
        raise DescriptorError(str(exc)) from exc


def load_system(path: str | Path, star_override: list[int] | None = None,
                cap: int = 10**6) -> CoxeterSystem:
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"{path}: {exc}") from exc
    return parse_descriptor(obj, star_override, cap)


def system_descriptor(W: CoxeterSystem) -> dict:
    return {
        "labels": list(W.labels),
        "matrix": [["inf" if m == INF else int(m) for m in row] for row in W.matrix],
        "star": list(W.star),
    }


def dump_system(W: CoxeterSystem, path: str | Path) -> None:
    Path(path).write_text(json.dumps(system_descriptor(W)) + "\n", encoding="utf-8")


# polynomials and vectors ----------------------------------------------------

def poly_to_json(p: LaurentPoly) -> dict:
    return p.to_json()


def vector_to_json(W: CoxeterSystem, m: Vector) -> dict:
    return {"terms": [{"w": W.fmt(w), "coeff": m[w].to_json()}
                      for w in sorted(m, key=sort_key) if m[w]]}


def vector_from_json(W: CoxeterSystem, obj: Mapping) -> Vector:
    out: Vector = {}
    for t in obj["terms"]:
        c = LaurentPoly.from_json(t["coeff"])
        if c:
            out[W.parse(t["w"])] = c
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


# tables ---------------------------------------------------------------------

PM_COLUMNS = ["y", "w", "l_y", "l_w", "Ppm", "P", "Pplus", "Pminus"]
SCAN_COLUMNS = ["dprime_word", "d_word", "ppm", "kl_neg_u", "equal", "N_u1"]


def to_csv(columns: list[str], rows: Iterable[Mapping]) -> str:
    buf = _io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: r[k] for k in columns})
    return buf.getvalue()


def coset_record(W: CoxeterSystem, coset, tag: str | None, involutions: list[Word]) -> dict:
    return {
        "K": [W.labels[s] for s in coset.K],
        "b": W.fmt(coset.b),
        "d": W.fmt(coset.d),
        "J": [W.labels[s] for s in coset.J],
        "case_tag": tag,
        "involutions": [W.fmt(x) for x in sorted(involutions, key=sort_key)],
    }
