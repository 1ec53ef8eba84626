"""Probability heatmap export: GeoJSON and a self-contained HTML map."""

from __future__ import annotations

import json
import logging
import math
from pathlib import Path

from ..hexgrid import cell_ring
from ..model import PredictionMap

log = logging.getLogger(__name__)

HEATMAP_FORMATS = ("geojson", "html")


def heatmap_features(pred: PredictionMap, threshold: float | None) -> list[dict]:
    """Cell polygons with a `probability` property, sorted by cell id.

    threshold=None keeps every cell; a number keeps cells at or above it.
    """
    features = []
    for cell in sorted(pred.probabilities):
        p = pred.probabilities[cell]
        if threshold is not None and p < threshold:
            continue
        features.append(
            {
                "type": "Feature",
                "geometry": {"type": "Polygon", "coordinates": [cell_ring(cell.index)]},
                "properties": {"cell": str(cell), "probability": p},
            }
        )
    return features


def heatmap_geojson(
    pred: PredictionMap, threshold: float | None, stamp: dict | None = None
) -> dict:
    doc = {
        "type": "FeatureCollection",
        "features": heatmap_features(pred, threshold),
        "properties": {
            "city": pred.city_name,
            "resolution": pred.resolution,
            "threshold": threshold,
            **(stamp or {}),
        },
    }
    return doc


def ramp_color(t: float) -> str:
    """Red (low) to yellow (high)."""
    t = min(1.0, max(0.0, t))
    return f"#ff{round(255 * t):02x}00"


def heatmap_html(pred: PredictionMap, threshold: float, stamp: dict | None = None) -> str:
    """One self-contained HTML file: inline SVG map plus a legend.

    No external tiles or scripts, and nothing time-dependent, so the
    same predictions always produce the same bytes.
    """
    features = heatmap_features(pred, threshold)
    rings = [f["geometry"]["coordinates"][0] for f in features]
    probs = [f["properties"]["probability"] for f in features]

    if rings:
        lons = [lon for ring in rings for lon, _ in ring]
        lats = [lat for ring in rings for _, lat in ring]
        min_lon, max_lon = min(lons), max(lons)
        min_lat, max_lat = min(lats), max(lats)
        p_lo, p_hi = min(probs), max(probs)
    else:
        min_lon = max_lon = min_lat = max_lat = 0.0
        p_lo, p_hi = 0.0, 1.0

    width = 900.0
    cos_lat = math.cos(math.radians((min_lat + max_lat) / 2)) or 1.0
    lon_span = max(max_lon - min_lon, 1e-9)
    lat_span = max(max_lat - min_lat, 1e-9)
    height = width * (lat_span / (lon_span * cos_lat))

    def xy(lon, lat):
        x = (lon - min_lon) / lon_span * width
        y = (max_lat - lat) / lat_span * height
        return f"{x:.2f},{y:.2f}"

    polys = []
    for ring, p in zip(rings, probs):
        t = 0.5 if p_hi == p_lo else (p - p_lo) / (p_hi - p_lo)
        pts = " ".join(xy(lon, lat) for lon, lat in ring)
        polys.append(
            f'<polygon points="{pts}" fill="{ramp_color(t)}" stroke="#333" '
            f'stroke-width="0.4"><title>{p:.3f}</title></polygon>'
        )

    stamp_note = ""
    if stamp:
        pairs = " ".join(f"{k}={v}" for k, v in sorted(stamp.items()))
        stamp_note = f'<p class="stamp">{pairs}</p>'

    return f"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>{pred.city_name} station probability</title>
<style>
body {{ font-family: sans-serif; margin: 1.5rem; background: #fafafa; color: #222; }}
.legend {{ display: flex; align-items: center; gap: .6rem; margin: .8rem 0; }}
.ramp {{ width: 220px; height: 14px; background: linear-gradient(to right, #ff0000, #ffff00); border: 1px solid #999; }}
.stamp {{ color: #888; font-size: .8rem; }}
svg {{ background: #fff; border: 1px solid #ccc; max-width: 100%; height: auto; }}
</style>
</head>
<body>
<h1>{pred.city_name}</h1>
<p>{len(features)} cells at probability &ge; {threshold}</p>
<div class="legend"><span>{p_lo:.2f}</span><div class="ramp"></div><span>{p_hi:.2f}</span></div>
<svg viewBox="0 0 {width:.0f} {height:.0f}" xmlns="http://www.w3.org/2000/svg">
{chr(10).join(polys)}
</svg>
{stamp_note}
</body>
</html>
"""


def export_heatmap(
    pred: PredictionMap,
    threshold: float,
    fmt: str,
    path: str | Path,
    stamp: dict | None = None,
) -> int:
    """Write the heatmap to disk; returns the number of cells kept."""
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must be within (0, 1), got {threshold}")
    if fmt not in HEATMAP_FORMATS:
        raise ValueError(f"unknown heatmap format {fmt!r}")
    if fmt == "geojson":
        doc = heatmap_geojson(pred, threshold, stamp)
        count = len(doc["features"])
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        text = heatmap_html(pred, threshold, stamp)
        count = len(heatmap_features(pred, threshold))
    if count == 0:
        log.warning(
            "heatmap for %s is empty: no cell reaches threshold %s",
            pred.city_name, threshold,
        )
    Path(path).write_text(text)
    return count
