"""Conformance battery for h3core against the reference JS implementation.

Development-time only (needs node + scripts/h3probe). On a clean run it
freezes the sampled vectors to tests/data/h3_goldens.json so the pytest
suite can replay them offline.
"""

import json
import math
import pathlib
import random
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from stationscout import h3core as h3  # noqa: E402
from stationscout.h3core import _index as IX  # noqa: E402
from stationscout.h3core import _tables as T  # noqa: E402

PROBE = ROOT / "scripts" / "h3probe" / "probe.mjs"
GOLDENS = ROOT / "tests" / "data" / "h3_goldens.json"

ANGLE_TOL_DEG = 1e-9


def probe(requests):
    req_path = pathlib.Path("/tmp/h3probe_req.json")
    res_path = pathlib.Path("/tmp/h3probe_res.json")
    req_path.write_text(json.dumps(requests))
    subprocess.run(
        ["node", str(PROBE), str(req_path), str(res_path)],
        check=True,
        cwd=PROBE.parent,
    )
    return json.loads(res_path.read_text())


def sphere_points(rng, n):
    pts = []
    for _ in range(n):
        lat = math.degrees(math.asin(rng.uniform(-1.0, 1.0)))
        lng = rng.uniform(-180.0, 180.0)
        pts.append((lat, lng))
    return pts


def close_deg(a, b, tol=ANGLE_TOL_DEG):
    dlng = abs(a[1] - b[1])
    if dlng > 180.0:
        dlng = 360.0 - dlng
    return abs(a[0] - b[0]) <= tol and dlng <= tol


def check_encode_decode(rng, golden):
    cases = []
    for res in range(16):
        for lat, lng in sphere_points(rng, 24):
            cases.append((lat, lng, res))
    truth = probe([{"op": "latLngToCell", "args": [la, ln, r]} for la, ln, r in cases])
    mine = [h3.cell_to_string(h3.latlng_to_cell(la, ln, r)) for la, ln, r in cases]
    bad = [(c, m, t) for c, m, t in zip(cases, mine, truth) if m != t]
    assert not bad, f"encode mismatches: {bad[:5]}"

    centers = probe([{"op": "cellToLatLng", "args": [s]} for s in mine])
    worst = 0.0
    for s, true_center in zip(mine, centers):
        got = h3.cell_to_latlng(h3.string_to_cell(s))
        dlat = abs(got[0] - true_center[0])
        dlng = abs(got[1] - true_center[1])
        if dlng > 180.0:
            dlng = 360.0 - dlng
        worst = max(worst, dlat, dlng)
    assert worst < ANGLE_TOL_DEG, f"decode worst error {worst}"
    print(f"  encode {len(cases)} exact; decode worst {worst:.2e} deg")
    golden["encode"] = [
        [la, ln, r, s] for (la, ln, r), s in zip(cases, mine)
    ]


def pentagon_cells():
    per_res = probe([{"op": "getPentagons", "args": [r]} for r in range(16)])
    return per_res


def check_pentagon_points(rng, pents_by_res):
    cases = []
    for res in (0, 1, 2, 5, 11, 15):
        for p in pents_by_res[res]:
            c = probe([{"op": "cellToLatLng", "args": [p]}])[0]
            for _ in range(3):
                cases.append(
                    (
                        c[0] + rng.uniform(-0.3, 0.3),
                        c[1] + rng.uniform(-0.3, 0.3),
                        res,
                    )
                )
    truth = probe([{"op": "latLngToCell", "args": list(c)} for c in cases])
    mine = [h3.cell_to_string(h3.latlng_to_cell(*c)) for c in cases]
    bad = [(c, m, t) for c, m, t in zip(cases, mine, truth) if m != t]
    assert not bad, f"pentagon-area encode mismatches: {bad[:5]}"
    print(f"  pentagon-area encode {len(cases)} exact")


def check_flags(rng, golden, pents_by_res):
    sample = [s for _, _, _, s in rng.sample(golden["encode"], 120)]
    sample += [p for r in (1, 4, 9) for p in pents_by_res[r]]
    flags = probe(
        [{"op": "isPentagon", "args": [s]} for s in sample]
        + [{"op": "getBaseCellNumber", "args": [s]} for s in sample]
    )
    n = len(sample)
    for i, s in enumerate(sample):
        c = h3.string_to_cell(s)
        assert h3.is_pentagon(c) == flags[i], s
        assert h3.get_base_cell(c) == flags[n + i], s
        assert h3.is_valid_cell(c), s
    print(f"  flags on {n} cells agree")
    golden["flags"] = [
        [s, flags[i], flags[n + i]] for i, s in enumerate(sample)
    ]


def check_validity_fuzz(rng, golden):
    seeds = [h3.string_to_cell(s) for _, _, _, s in rng.sample(golden["encode"], 60)]
    mutants = set()
    for h in seeds:
        for _ in range(6):
            bit = rng.randrange(64)
            mutants.add(h ^ (1 << bit))
        mutants.add(IX.set_base_cell(h, rng.randrange(122, 128)))
        res = IX.get_resolution(h)
        if res:
            mutants.add(IX.set_index_digit(h, rng.randrange(1, res + 1), 7))
    mutants = sorted(mutants)
    strs = [f"{m:x}" for m in mutants]
    truth = probe([{"op": "isValidCell", "args": [s]} for s in strs])
    for m, s, t in zip(mutants, strs, truth):
        assert h3.is_valid_cell(m) == t, f"validity disagrees for {s}"
    n_valid = sum(truth)
    print(f"  validity fuzz on {len(mutants)} mutants agrees ({n_valid} valid)")
    golden["validity"] = [[s, t] for s, t in zip(strs, truth)]


def check_boundaries(rng, golden, pents_by_res):
    sample = [s for _, _, _, s in rng.sample(golden["encode"], 150)]
    for r in (0, 1, 2, 3, 7, 15):
        sample += pents_by_res[r]
    sample = sorted(set(sample))
    truth = probe([{"op": "cellToBoundary", "args": [s]} for s in sample])
    worst = 0.0
    for s, tb in zip(sample, truth):
        mb = h3.cell_to_boundary(h3.string_to_cell(s))
        assert len(mb) == len(tb), f"vertex count {len(mb)} != {len(tb)} for {s}"
        for (mla, mln), (tla, tln) in zip(mb, tb):
            dlng = abs(mln - tln)
            if dlng > 180.0:
                dlng = 360.0 - dlng
            worst = max(worst, abs(mla - tla), dlng)
    assert worst < ANGLE_TOL_DEG, f"boundary worst error {worst}"
    print(f"  boundaries on {len(sample)} cells match, worst {worst:.2e} deg")
    keep = rng.sample(sample, 60)
    keep_set = set(keep)
    golden["boundary"] = {
        s: tb for s, tb in zip(sample, truth) if s in keep_set
    }


def check_disks(rng, golden, pents_by_res):
    origins = [s for _, _, _, s in rng.sample(golden["encode"], 80)]
    for r in (0, 1, 2, 5, 11):
        origins += rng.sample(pents_by_res[r], 4)
    seen = set()
    plan = []
    for s in origins:
        if s in seen:
            continue
        seen.add(s)
        plan.append((s, rng.choice((1, 2, 3))))

    truth = probe([{"op": "gridDiskDistances", "args": [s, k]} for s, k in plan])
    ordered = probe([{"op": "gridDisk", "args": [s, k]} for s, k in plan])
    golden_disks = []
    for (s, k), rings, flat in zip(plan, truth, ordered):
        origin = h3.string_to_cell(s)
        mine = h3.grid_disk_distances(origin, k)
        mine_rings = [set() for _ in range(k + 1)]
        for cell, d in mine:
            mine_rings[d].add(h3.cell_to_string(cell))
        assert [set(r) for r in rings] == mine_rings, f"disk rings differ at {s} k={k}"

        flat_mine = [h3.cell_to_string(c) for c in h3.grid_disk(origin, k)]
        pent_free = not any(
            h3.is_pentagon(h3.string_to_cell(x)) for ring in rings for x in ring
        )
        if pent_free:
            assert flat_mine == flat, f"spiral order differs at {s} k={k}"
        else:
            assert set(flat_mine) == set(flat), f"disk set differs at {s} k={k}"
        golden_disks.append({"origin": s, "k": k, "rings": rings})
    n_pent = sum(
        1
        for d in golden_disks
        if any(h3.is_pentagon(h3.string_to_cell(x)) for r in d["rings"] for x in r)
    )
    print(f"  disks on {len(plan)} origins match ({n_pent} pentagon-touching)")
    golden["disks"] = golden_disks


def check_rings(rng, golden):
    plan = [(d["origin"], d["k"]) for d in golden["disks"]]
    truth = probe([{"op": "gridRingUnsafe", "args": [s, k]} for s, k in plan])
    golden_rings = []
    for (s, k), t, d in zip(plan, truth, golden["disks"]):
        origin = h3.string_to_cell(s)
        mine = [h3.cell_to_string(c) for c in h3.grid_ring(origin, k)]
        assert set(mine) == set(d["rings"][k]), f"ring set differs at {s} k={k}"
        if isinstance(t, list):
            assert set(mine) == set(t), f"ring vs unsafe differs at {s} k={k}"
        golden_rings.append({"origin": s, "k": k, "ring": sorted(mine)})
    print(f"  rings on {len(plan)} origins match")
    golden["rings"] = golden_rings


def main():
    rng = random.Random(20240811)
    golden = {}
    pents_by_res = pentagon_cells()
    golden["pentagons"] = {str(r): pents_by_res[r] for r in (0, 1, 4, 9, 11)}
    golden["res0"] = probe([{"op": "getRes0Cells", "args": []}])[0]

    print("h3core conformance battery")
    check_encode_decode(rng, golden)
    check_pentagon_points(rng, pents_by_res)
    check_flags(rng, golden, pents_by_res)
    check_validity_fuzz(rng, golden)
    check_boundaries(rng, golden, pents_by_res)
    check_disks(rng, golden, pents_by_res)
    check_rings(rng, golden)

    GOLDENS.parent.mkdir(parents=True, exist_ok=True)
    GOLDENS.write_text(json.dumps(golden, separators=(",", ":")))
    size = GOLDENS.stat().st_size
    print(f"  froze goldens to {GOLDENS} ({size // 1024} KiB)")
    print("all clean")


if __name__ == "__main__":
    main()
