"""Helpers that read a figure back from its SVG and sidecar CSVs."""

import csv
import xml.etree.ElementTree as ET
from pathlib import Path

SVG = "{http://www.w3.org/2000/svg}"


def read_csv(path):
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    header, body = rows[0], rows[1:]
    return [dict(zip(header, r)) for r in body]


def load(svg_path):
    svg_path = Path(svg_path)
    root = ET.parse(svg_path).getroot()
    desc = root.find(f"{SVG}desc").attrib
    columns = [e.attrib for e in root.iter(f"{SVG}rect") if e.get("class") == "column"]
    bins = [e.attrib for e in root.iter(f"{SVG}line") if e.get("class") == "bin"]
    poly = next(e for e in root.iter(f"{SVG}polyline") if e.get("class") == "density")
    stem = svg_path.parent / svg_path.stem
    return {
        "root": root,
        "desc": desc,
        "columns": columns,
        "bins": bins,
        "polyline_points": poly.get("points").split(),
        "density": read_csv(f"{stem}.density.csv"),
        "bins_csv": read_csv(f"{stem}.bins.csv"),
    }
