"""CSV + schema ingestion and JSON/CSV serialization."""
from __future__ import annotations

import csv
import io
import json
import os
from typing import IO, Union

from .core import AttributeType, Bicluster, BiclusterSolution, HeteroMatrix, QualityScore
from .errors import (EmptyBicluster, InputError, InvariantViolation, MissingValue,
                     SchemaMismatch, TypeViolation)

PathOrStream = Union[str, os.PathLike, IO]

MISSING_TOKENS = frozenset({"", "na", "n/a", "nan", "null", "none"})


def _read_bytes(source: PathOrStream) -> bytes:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return fh.read()
    data = source.read()
    return data.encode("utf-8") if isinstance(data, str) else data


def parse_schema(doc) -> list[tuple[str, AttributeType]]:
    """Parse a schema document ``{"columns": [{"name":..., "type":...}, ...]}``.

    ``doc`` may be the decoded dict, a path, or a stream of JSON.
    """
    if not isinstance(doc, dict):
        try:
            doc = json.loads(_read_bytes(doc).decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise SchemaMismatch(f"schema is not valid JSON: {exc}") from exc
    try:
        entries = doc["columns"]
        out = [(str(e["name"]), AttributeType(str(e["type"]).lower())) for e in entries]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaMismatch(f"malformed schema: {exc}") from exc
    names = [n for n, _ in out]
    if len(set(names)) != len(names):
        raise SchemaMismatch("schema lists a column more than once")
    return out


def load_matrix(csv_source: PathOrStream, schema) -> HeteroMatrix:
    """Read a UTF-8 CSV with header row and validate it against ``schema``."""
    fields = dict(parse_schema(schema))
    try:
        text = _read_bytes(csv_source).decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise InputError(f"CSV is not UTF-8: {exc}") from exc
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise InputError("CSV is empty") from None
    header = [h.strip() for h in header]
    if len(set(header)) != len(header):
        raise SchemaMismatch("CSV header repeats a column name")
    extra = [h for h in header if h not in fields]
    absent = [n for n in fields if n not in header]
    if extra or absent:
        raise SchemaMismatch(f"CSV columns not in schema: {extra}; schema columns not in CSV: {absent}")

    raw: list[list[str]] = [[] for _ in header]
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise InputError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        for j, cell in enumerate(row):
            cell = cell.strip()
            if cell.lower() in MISSING_TOKENS:
                raise MissingValue(f"line {lineno}, column {header[j]!r}: missing value")
            raw[j].append(cell)
    if not raw[0]:
        raise InputError("CSV has no data rows")

    types = [fields[h] for h in header]
    parsed = []
    for name, t, cells in zip(header, types, raw):
        if t is AttributeType.NUMERIC:
            try:
                parsed.append([float(c) for c in cells])
            except ValueError as exc:
                raise TypeViolation(f"column {name!r}: {exc}") from exc
        else:
            parsed.append(cells)
    return HeteroMatrix.from_columns(header, types, parsed)


def schema_doc(x: HeteroMatrix) -> dict:
    return {"columns": [{"name": c.name, "type": c.type.value} for c in x.columns]}


def to_csv(x: HeteroMatrix) -> bytes:
    """Serialize ``x`` so that ``load_matrix(to_csv(x), schema_doc(x)) == x``."""
    buf = io.StringIO(newline="")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(x.names)
    cols = [[repr(v) for v in c.raw()] if c.labels is None else c.raw() for c in x.columns]
    w.writerows(zip(*cols))
    return buf.getvalue().encode("utf-8")


def solution_to_dict(sol: BiclusterSolution, meta: dict | None = None) -> dict:
    items = []
    for b in sol:
        d = {"rows": list(b.rows), "cols": list(b.cols)}
        if b.score is not None:
            d.update(hiv=b.score.hiv, size=b.score.size, fitness=b.score.fitness)
        else:
            d["size"] = b.size
        items.append(d)
    out = {"biclusters": items}
    out["meta"] = dict(meta if meta is not None else sol.provenance)
    return out


def solution_from_dict(doc: dict) -> BiclusterSolution:
    try:
        items = doc["biclusters"]
        bics = []
        for d in items:
            rows = [int(i) for i in d["rows"]]
            cols = [int(j) for j in d["cols"]]
            if min(rows + cols, default=0) < 0:
                raise ValueError("negative index")
            score = None
            if "fitness" in d and "hiv" in d:
                score = QualityScore(anv=float("nan"), acf=float("nan"), hiv=float(d["hiv"]),
                                     size=len(set(rows)) * len(set(cols)),
                                     fitness=float(d["fitness"]))
            bics.append(Bicluster(tuple(rows), tuple(cols), score))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed solution document: {exc}") from exc
    meta = doc.get("meta") or {}
    try:
        return BiclusterSolution(bics, mode=str(meta.get("select", "all")),
                                 beta=meta.get("beta"), provenance=dict(meta))
    except (EmptyBicluster, InvariantViolation) as exc:
        raise InputError(f"invalid solution document: {exc}") from exc


def dump_json(obj, path: PathOrStream) -> None:
    text = json.dumps(obj, indent=1) + "\n"
    if isinstance(path, (str, os.PathLike)):
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        path.write(text)


def read_solution(path: PathOrStream) -> BiclusterSolution:
    try:
        doc = json.loads(_read_bytes(path).decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"solution is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("solution document must be a JSON object")
    return solution_from_dict(doc)
