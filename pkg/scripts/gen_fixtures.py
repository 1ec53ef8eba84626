"""Generate the bundled synthetic fixture towns.

Three small towns are emitted as canned Overpass responses plus station
CSVs. Station sites are planted inside feature-dense POI clusters so a
classifier has a real signal to find, and every element carries an
expected category from this script's own literal table, independent of
the package's rule engine. The manifest

  tests/data/fixture_manifest.json

records those expected counts plus res 9/10/11 cell counts obtained
from the reference JS grid implementation (node + h3-js), so tests can
cross-check ingest and tessellation against numbers this package did
not produce.

Deterministic: fixed seeds, no timestamps. Run from the repo root:

    python3 scripts/gen_fixtures.py
"""

import itertools
import json
import math
import random
import subprocess
import sys
import tempfile
from collections import Counter
from pathlib import Path

from shapely.geometry import box

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from stationscout.ingest.extract import build_city_query  # noqa: E402
from stationscout.ingest.overpass import city_slug, query_hash  # noqa: E402
from stationscout.ingest.rules import load_default_rules  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
CACHE = DATA / "fixture_cache"

# degrees per meter around latitude 52.2
DLAT = 1.0 / 111263.0
DLON = 1.0 / 68240.0

EXCLUDE = "__excluded__"

TOWNS = {
    "Greenfield": dict(
        south=52.2000, west=21.0000, north=52.2126, east=21.0200,
        seed=101, clusters=25, prefix="gf",
    ),
    "Harborview": dict(
        south=52.2000, west=21.0500, north=52.2126, east=21.0700,
        seed=202, clusters=20, prefix="hv",
    ),
    "Littlemarsh": dict(
        south=52.2000, west=21.1000, north=52.2032, east=21.1050,
        seed=303, clusters=3, prefix="lm", tiny=True,
    ),
}


class TownBuilder:
    def __init__(self, name, spec):
        self.name = name
        self.spec = spec
        self.rnd = random.Random(spec["seed"])
        self.elements = []
        self.expected = Counter()
        self.excluded = 0
        self.stations = []
        self._node_ids = itertools.count(100000)
        self._way_ids = itertools.count(500000)

    # --- element emission -------------------------------------------------

    def node(self, lat, lon, tags, expect):
        self.elements.append(
            {
                "type": "node",
                "id": next(self._node_ids),
                "lat": round(lat, 7),
                "lon": round(lon, 7),
                "tags": tags,
            }
        )
        self._count(expect)

    def way(self, coords, tags, expect):
        self.elements.append(
            {
                "type": "way",
                "id": next(self._way_ids),
                "tags": tags,
                "geometry": [
                    {"lat": round(la, 7), "lon": round(lo, 7)} for la, lo in coords
                ],
            }
        )
        self._count(expect)

    def rect(self, lat, lon, h_m, w_m, tags, expect):
        dla, dlo = h_m * DLAT / 2, w_m * DLON / 2
        ring = [
            (lat - dla, lon - dlo),
            (lat - dla, lon + dlo),
            (lat + dla, lon + dlo),
            (lat + dla, lon - dlo),
            (lat - dla, lon - dlo),
        ]
        self.way(ring, tags, expect)

    def _count(self, expect):
        if expect == EXCLUDE:
            self.excluded += 1
        elif expect is not None:
            self.expected[expect] += 1

    # --- geometry helpers --------------------------------------------------

    def jitter(self, lat, lon, radius_m):
        ang = self.rnd.uniform(0, 2 * math.pi)
        r = self.rnd.uniform(0.3, 1.0) * radius_m
        return lat + math.sin(ang) * r * DLAT, lon + math.cos(ang) * r * DLON

    def inner_point(self, margin_m=40.0):
        s = self.spec
        return (
            self.rnd.uniform(s["south"] + margin_m * DLAT, s["north"] - margin_m * DLAT),
            self.rnd.uniform(s["west"] + margin_m * DLON, s["east"] - margin_m * DLON),
        )

    # --- town layout --------------------------------------------------------

    def build(self):
        s = self.spec
        tiny = s.get("tiny", False)
        step_lat = 165.0 * DLAT
        step_lon = 165.0 * DLON
        margin = 70.0

        # street grid: drive roads spanning the town
        lon = s["west"] + margin * DLON
        while lon < s["east"] - margin * DLON / 2:
            self.way(
                [(s["south"] + 20 * DLAT, lon), (s["north"] - 20 * DLAT, lon)],
                {"highway": "residential", "name": "NS"},
                "roads_drive",
            )
            lon += step_lon * (1 if tiny else 2)
        lat = s["south"] + margin * DLAT
        while lat < s["north"] - margin * DLAT / 2:
            self.way(
                [(lat, s["west"] + 20 * DLON), (lat, s["east"] - 20 * DLON)],
                {"highway": "tertiary", "name": "EW"},
                "roads_drive",
            )
            lat += step_lat * (1 if tiny else 2)

        # a cycleway across and a couple of footpaths
        self.way(
            [(s["south"] + 30 * DLAT, s["west"] + 30 * DLON),
             (s["north"] - 30 * DLAT, s["east"] - 30 * DLON)],
            {"highway": "cycleway"},
            "roads_bike",
        )
        for _ in range(2 if tiny else 10):
            a = self.inner_point()
            b = self.inner_point()
            self.way([a, b], {"highway": "footway"}, "roads_walk")

        # cluster sites on a coarse lattice, well separated
        sites = []
        pitch = 120.0 if tiny else 270.0
        lat = s["south"] + (90 if tiny else 130) * DLAT
        while lat < s["north"] - 90 * DLAT:
            lon = s["west"] + (90 if tiny else 130) * DLON
            while lon < s["east"] - 90 * DLON:
                sites.append((lat, lon))
                lon += pitch * DLON
            lat += pitch * DLAT
        self.rnd.shuffle(sites)
        sites = sites[: s["clusters"]]

        for i, (clat, clon) in enumerate(sites):
            self.cluster(i, clat, clon)

        # scattered low-density POIs away from clusters
        noise_kinds = [
            ({"amenity": "restaurant"}, "sustenance"),
            ({"shop": "convenience"}, "shops"),
            ({"tourism": "hotel"}, "tourism"),
            ({"amenity": "theatre"}, "culture_and_entertainment"),
            ({"historic": "memorial"}, "historic"),
        ]
        placed = 0
        target = 8 if tiny else 40
        while placed < target:
            lat, lon = self.inner_point()
            if any(
                abs(lat - cl) < 90 * DLAT and abs(lon - co) < 90 * DLON
                for cl, co in sites
            ):
                continue
            tags, expect = noise_kinds[placed % len(noise_kinds)]
            self.node(lat, lon, dict(tags), expect)
            placed += 1

        # free-standing buildings on the block lattice
        count = 0
        target = 12 if tiny else 110
        while count < target:
            lat, lon = self.inner_point(margin_m=60.0)
            if any(
                abs(lat - cl) < 60 * DLAT and abs(lon - co) < 60 * DLON
                for cl, co in sites
            ):
                continue
            self.rect(lat, lon, 16.0, 24.0, {"building": "yes"}, "buildings")
            count += 1

        # park with a pond, a pitch, and schools
        park_lat = s["north"] - 140 * DLAT
        park_lon = s["east"] - 140 * DLON
        self.rect(park_lat, park_lon, 130.0, 150.0, {"leisure": "park"}, "leisure")
        self.rect(
            park_lat, park_lon, 50.0, 60.0, {"natural": "water", "name": "pond"}, "water"
        )
        self.rect(
            s["south"] + 120 * DLAT, s["east"] - 120 * DLON,
            30.0, 40.0, {"leisure": "pitch", "sport": "soccer"}, "sport",
        )
        for k in range(1 if tiny else 2):
            lat, lon = self.inner_point(margin_m=100.0)
            self.node(lat, lon, {"amenity": "school", "name": f"School {k}"}, "education")
            self.rect(lat + 20 * DLAT, lon, 20.0, 30.0, {"building": "school"}, "education")

        if tiny:
            self.pad_to(150)
        return self

    def cluster(self, i, clat, clon):
        """One station site: dense commerce ring around a rental point."""
        prefix = self.spec["prefix"]
        self.node(clat, clon, {"amenity": "bicycle_rental"}, EXCLUDE)
        self.stations.append((f"{prefix}-{i:03d}", clat, clon))
        pois = [
            ({"amenity": "cafe"}, "sustenance"),
            ({"amenity": "cafe"}, "sustenance"),
            ({"amenity": "cafe"}, "sustenance"),
            ({"amenity": "restaurant"}, "sustenance"),
            ({"shop": "convenience"}, "shops"),
            ({"shop": "bakery"}, "shops"),
            ({"amenity": "bank"}, "finances"),
            ({"amenity": "pharmacy"}, "healthcare"),
            ({"highway": "bus_stop"}, "transportation"),
        ]
        for tags, expect in pois:
            lat, lon = self.jitter(clat, clon, 16.0)
            self.node(lat, lon, dict(tags), expect)
        self.rect(
            clat + 26 * DLAT, clon + 26 * DLON, 20.0, 30.0,
            {"building": "yes", "name": "market hall"}, "buildings",
        )

    def pad_to(self, total):
        while len(self.elements) < total:
            lat, lon = self.inner_point()
            self.node(lat, lon, {"shop": "kiosk"}, "shops")
        assert len(self.elements) == total, len(self.elements)


def golden_cells(boundary_ring):
    """Ask the reference JS implementation for center-containment fills."""
    reqs = [
        {"op": "polygonToCells", "args": [[boundary_ring], res, True]}
        for res in (9, 10, 11)
    ]
    with tempfile.TemporaryDirectory() as td:
        req = Path(td) / "req.json"
        resp = Path(td) / "resp.json"
        req.write_text(json.dumps(reqs))
        subprocess.run(
            ["node", str(ROOT / "scripts" / "h3probe" / "probe.mjs"), str(req), str(resp)],
            check=True,
        )
        results = json.loads(resp.read_text())
    for r in results:
        if isinstance(r, dict):
            raise RuntimeError(f"probe failed: {r}")
    return {str(res): len(cells) for res, cells in zip((9, 10, 11), results)}


def main():
    rules = load_default_rules()
    manifest = {"towns": {}}
    CACHE.mkdir(parents=True, exist_ok=True)
    for name, spec in TOWNS.items():
        town = TownBuilder(name, spec).build()
        boundary = box(spec["west"], spec["south"], spec["east"], spec["north"])
        ring = list(boundary.exterior.coords)
        ql = build_city_query(rules, ring)
        payload = {"version": 0.6, "generator": "fixture", "elements": town.elements}

        slug = city_slug(name)
        town_dir = CACHE / slug
        town_dir.mkdir(parents=True, exist_ok=True)
        (town_dir / f"{query_hash(ql)}.json").write_text(json.dumps(payload))

        csv_path = DATA / f"stations_{slug}.csv"
        with open(csv_path, "w") as fh:
            fh.write("station_id,lat,lon\n")
            for sid, lat, lon in town.stations:
                fh.write(f"{sid},{lat:.7f},{lon:.7f}\n")

        manifest["towns"][name] = {
            "bbox": [spec["south"], spec["west"], spec["north"], spec["east"]],
            "elements": len(town.elements),
            "expected_features": sum(town.expected.values()),
            "by_category": dict(sorted(town.expected.items())),
            "excluded_rentals": town.excluded,
            "stations": len(town.stations),
            "golden_cells": golden_cells([[lon, lat] for lon, lat in ring]),
        }
        print(f"{name}: {len(town.elements)} elements, {len(town.stations)} stations")

    (DATA / "fixture_manifest.json").write_text(
        json.dumps(manifest, indent=1, sort_keys=True) + "\n"
    )
    print("manifest written")


if __name__ == "__main__":
    main()
