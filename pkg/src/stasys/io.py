"""File formats: JSON complexes and profiles, CSV deformation reports.

Weights and all numeric report fields are serialized as exact fraction
strings ("3/4"), so every round trip is lossless.
"""

from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction

from .category import DimensionProfile, product_profile
from .complexes import WeightedCellComplex, build_complex
from .deform import DeformationReport, SweepSample


def frac_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_frac(s: str) -> Fraction:
    return Fraction(str(s).strip())


# ---------------------------------------------------------------------------
# Complexes
# ---------------------------------------------------------------------------

def complex_to_dict(K: WeightedCellComplex) -> dict:
    out = {"kind": K.kind, "top_dim": K.top_dim, "cells": {}}
    for q in range(K.top_dim + 1):
        entries = []
        for j, cid in enumerate(K.cell_ids[q]):
            entry = {
                "id": cid,
                "weight": frac_str(K.weights[q][j]),
                "boundary": [
                    [K.cell_ids[q - 1][face], inc] for face, inc in K.boundary_cols[q][j]
                ] if q else [],
            }
            if K.vertex_lists is not None:
                entry["vertices"] = list(K.vertex_lists[q][j])
            if K.factor_degrees is not None:
                entry["factor_degrees"] = list(K.factor_degrees[q][j])
            entries.append(entry)
        out["cells"][str(q)] = entries
    return out


def complex_from_dict(data: dict) -> WeightedCellComplex:
    kind = data["kind"]
    top = int(data["top_dim"])
    cells = []
    tags = []
    has_tags = True
    for q in range(top + 1):
        specs = []
        qtags = []
        for entry in data["cells"][str(q)]:
            vertices = entry.get("vertices")
            specs.append((
                entry["id"],
                parse_frac(entry["weight"]),
                [(fid, int(inc)) for fid, inc in entry.get("boundary", [])],
                tuple(vertices) if vertices is not None else None,
            ))
            tag = entry.get("factor_degrees")
            if tag is None:
                has_tags = False
            else:
                qtags.append((int(tag[0]), int(tag[1])))
        cells.append(specs)
        tags.append(qtags)
    return build_complex(kind, cells, factor_degrees=tags if has_tags else None)


def save_complex(K: WeightedCellComplex, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(complex_to_dict(K), fh, indent=1)


def load_complex(path: str) -> WeightedCellComplex:
    with open(path) as fh:
        return complex_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# Profiles
# ---------------------------------------------------------------------------

def profile_to_dict(p: DimensionProfile) -> dict:
    out = {
        "name": p.name,
        "dimension": p.n,
        "betti": list(p.betti),
        "orientable": p.orientable,
        "max_cup_length": p.max_cup_flag,
        "homology_sphere": p.homology_sphere,
    }
    if p.factors:
        out["factors"] = [profile_to_dict(f) for f in p.factors]
    return out


def profile_from_dict(data: dict) -> DimensionProfile:
    factors = tuple(profile_from_dict(f) for f in data.get("factors", []))
    if "betti" not in data and factors:
        return product_profile(list(factors))
    return DimensionProfile(
        n=int(data["dimension"]),
        betti=tuple(int(b) for b in data["betti"]),
        orientable=bool(data.get("orientable", True)),
        max_cup_flag=data.get("max_cup_length"),
        homology_sphere=bool(data.get("homology_sphere", False)),
        factors=factors,
        name=data.get("name", ""),
    )


def save_profile(p: DimensionProfile, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(profile_to_dict(p), fh, indent=1)


def load_profile(path: str) -> DimensionProfile:
    with open(path) as fh:
        return profile_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# Deformation reports as CSV
# ---------------------------------------------------------------------------

def report_to_csv(report: DeformationReport) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf)
    parts = report.partition.parts
    header = ["t"] + [f"systole_q{p}_part{i}" for i, p in enumerate(parts)]
    header += ["product", "volume", "ratio"]
    writer.writerow(header)
    for s in report.samples:
        row = [frac_str(s.t)] + [frac_str(v) for v in s.part_systoles]
        row += [frac_str(s.product), frac_str(s.volume), frac_str(s.ratio)]
        writer.writerow(row)
    return buf.getvalue()


def csv_to_samples(text: str) -> list[SweepSample]:
    reader = csv.reader(_io.StringIO(text))
    header = next(reader)
    nparts = len(header) - 4
    samples = []
    for row in reader:
        if not row:
            continue
        samples.append(SweepSample(
            t=parse_frac(row[0]),
            part_systoles=tuple(parse_frac(x) for x in row[1:1 + nparts]),
            product=parse_frac(row[1 + nparts]),
            volume=parse_frac(row[2 + nparts]),
            ratio=parse_frac(row[3 + nparts]),
        ))
    return samples
