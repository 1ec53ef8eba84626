"""Recover the base cell data tables of the H3 grid from the reference
JavaScript implementation, and emit src/stationscout/h3core/_tables.py.

Development-time tool.  The projection and lattice arithmetic modules are
table-free; everything that depends on the 122 base cells (their home
faces, per-face orientations, neighbor graph, pentagon bookkeeping) is
recovered here by probing h3-js with constructed points and solving for
the rotation counts that make our digit walks agree with the reference
indexes.  The package never shells out to node at runtime or test time.

Usage: python3 scripts/gen_h3_tables.py
"""

import json
import math
import os
import subprocess
import sys
from collections import defaultdict

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from stationscout.h3core import _constants as C
from stationscout.h3core import _coordijk as CK
from stationscout.h3core import _faceijk as F
from stationscout.h3core import _index as IX

PROBE_DIR = os.path.join(os.path.dirname(__file__), "h3probe")
OUT_PATH = os.path.join(
    os.path.dirname(__file__), "..", "src", "stationscout", "h3core", "_tables.py"
)

DEG = 180.0 / math.pi


def probe(requests):
    req_path = "/tmp/h3probe_req.json"
    res_path = "/tmp/h3probe_res.json"
    with open(req_path, "w") as f:
        json.dump(requests, f)
    subprocess.run(
        ["node", os.path.join(PROBE_DIR, "probe.mjs"), req_path, res_path],
        check=True,
        capture_output=True,
    )
    with open(res_path) as f:
        return json.load(f)


def angular_distance(lat1, lng1, lat2, lng2):
    # haversine: well conditioned for the tiny distances checked here
    a = (
        math.sin((lat2 - lat1) / 2.0) ** 2
        + math.cos(lat1) * math.cos(lat2) * math.sin((lng2 - lng1) / 2.0) ** 2
    )
    return 2.0 * math.asin(min(1.0, math.sqrt(a)))


def point_toward(lat, lng, tlat, tlng, frac, az_offset=0.0):
    az = F.geo_azimuth_rads(lat, lng, tlat, tlng) + az_offset
    d = angular_distance(lat, lng, tlat, tlng)
    return F.geo_az_distance_rads(lat, lng, az, frac * d)


# all normalized ijk triples with components in [0, 2]
TRIPLES = sorted(
    {
        CK.ijk_normalize(i, j, k)
        for i in range(3)
        for j in range(3)
        for k in range(3)
    }
)
IN_RANGE = [t for t in TRIPLES if sum(t) <= 2]
OUT_RANGE = [t for t in TRIPLES if sum(t) > 2]


def adjust_to_canonical(face, ijk):
    """Apply res-0 overage adjustment until in range; returns (face, ijk, rots)."""
    rots = 0
    while True:
        overage, new_face, new_ijk = F.adjust_overage_class_ii(face, ijk, 0, False, False)
        if overage == C.NO_OVERAGE:
            return face, ijk, rots
        rots = (rots + _crossing_rotation(face, new_face)) % 6
        face, ijk = new_face, new_ijk


def _crossing_rotation(old_face, new_face):
    for quadrant in (1, 2, 3):
        entry = F.FACE_NEIGHBORS[old_face][quadrant]
        if entry[0] == new_face:
            return entry[2]
    raise AssertionError(f"faces {old_face}->{new_face} not adjacent")


def raw_encode(lat, lng, res):
    """Digit walk on the nearest face, no base cell tables involved.

    Returns (face, base-cell-level ijk, digits list res..1 order reversed).
    """
    face, ijk = F.geo_to_face_ijk(lat, lng, res)
    digits = [0] * res
    for r in range(res - 1, -1, -1):
        last = ijk
        if C.is_resolution_class_iii(r + 1):
            ijk = CK.up_ap7(*ijk)
            last_center = CK.down_ap7(*ijk)
        else:
            ijk = CK.up_ap7r(*ijk)
            last_center = CK.down_ap7r(*ijk)
        diff = CK.ijk_normalize(*CK.ijk_sub(last, last_center))
        digits[r] = CK.unit_ijk_to_digit(diff)
    return face, ijk, digits


def raw_decode_on_face(face, ijk0, res, digits):
    """Walk digits down from a base-cell position without overage handling."""
    ijk = ijk0
    for r in range(1, res + 1):
        if C.is_resolution_class_iii(r):
            ijk = CK.down_ap7(*ijk)
        else:
            ijk = CK.down_ap7r(*ijk)
        ijk = CK.neighbor(ijk, digits[r - 1])
    return face, ijk


def digits_of(h, res):
    return [IX.get_index_digit(h, r) for r in range(1, res + 1)]


def local_decode(h, home, pentagons):
    """Index to (face, ijk): digit walk from the home position plus overage."""
    res = IX.get_resolution(h)
    bc = IX.get_base_cell(h)
    if bc in pentagons and IX.leading_non_zero_digit(h) == CK.IK_AXES_DIGIT:
        h = IX.rotate60_cw_index(h)
    face, ijk = home[bc]
    possible_overage = not (
        bc not in pentagons and (res == 0 or ijk == (0, 0, 0))
    )
    for r in range(1, res + 1):
        if C.is_resolution_class_iii(r):
            ijk = CK.down_ap7(*ijk)
        else:
            ijk = CK.down_ap7r(*ijk)
        ijk = CK.neighbor(ijk, IX.get_index_digit(h, r))
    if possible_overage:
        orig = ijk
        adj_res = res
        if C.is_resolution_class_iii(res):
            ijk = CK.down_ap7r(*ijk)
            adj_res += 1
        pent_l4 = bc in pentagons and IX.leading_non_zero_digit(h) == CK.I_AXES_DIGIT
        ov, face2, ijk2 = F.adjust_overage_class_ii(face, ijk, adj_res, pent_l4, False)
        if ov != C.NO_OVERAGE:
            face, ijk = face2, ijk2
            if bc in pentagons:
                while True:
                    ov, face, ijk = F.adjust_overage_class_ii(face, ijk, adj_res, False, False)
                    if ov == C.NO_OVERAGE:
                        break
            if adj_res != res:
                ijk = CK.up_ap7r(*ijk)
        elif adj_res != res:
            ijk = orig
    return face, ijk


def main():
    print("== stage A: res-0 cells ==")
    res0 = probe([{"op": "getRes0Cells", "args": []}])[0]
    assert len(res0) == 122
    reqs = [{"op": "getBaseCellNumber", "args": [h]} for h in res0]
    reqs += [{"op": "cellToLatLng", "args": [h]} for h in res0]
    reqs.append({"op": "getPentagons", "args": [0]})
    res = probe(reqs)
    bc_of = dict(zip(res0, res[:122]))
    center_of = {}  # bc -> (lat rad, lng rad)
    for h, ll in zip(res0, res[122:244]):
        center_of[bc_of[h]] = (ll[0] / DEG, ll[1] / DEG)
    pent_indexes = res[244]
    pentagons = sorted(
        IX.get_base_cell(IX.string_to_cell_index(h)) for h in pent_indexes
    )
    assert sorted(bc_of.values()) == list(range(122))
    print(f"   pentagon base cells: {pentagons}")

    print("== stage B: face neighbor topology check ==")
    for f in range(20):
        flat, flng = C.FACE_CENTER_GEO[f]
        dists = sorted(
            (angular_distance(flat, flng, *C.FACE_CENTER_GEO[g]), g)
            for g in range(20)
            if g != f
        )
        adjacent = {g for _, g in dists[:3]}
        table_adj = {F.FACE_NEIGHBORS[f][q][0] for q in (1, 2, 3)}
        assert adjacent == table_adj, (f, adjacent, table_adj)
        for q, want_theta in ((1, 60.0), (2, 300.0), (3, 180.0)):
            g = F.FACE_NEIGHBORS[f][q][0]
            az = F.geo_azimuth_rads(flat, flng, *C.FACE_CENTER_GEO[g])
            theta = F.pos_angle_rads(C.FACE_AXES_AZ_RADS_CII[f][0] - F.pos_angle_rads(az))
            assert abs(theta * DEG - want_theta) < 1e-6, (f, q, theta * DEG)
    print("   adjacency and quadrant azimuths OK")

    print("== stage C: base cell identity per (face, ijk) ==")
    canon = {}  # (face, triple) -> (canon face, canon ijk)
    for f in range(20):
        for t in TRIPLES:
            cf, cijk, _ = adjust_to_canonical(f, t)
            canon[(f, t)] = (cf, cijk)
    keys = list(canon)
    reqs = []
    for key in keys:
        cf, cijk = canon[key]
        lat, lng = F.face_ijk_to_geo(cf, cijk, 0)
        reqs.append({"op": "latLngToCell", "args": [lat * DEG, lng * DEG, 0]})
    res = probe(reqs)
    base_cell_at = {}  # (face, triple) -> bc
    for key, h in zip(keys, res):
        base_cell_at[key] = bc_of[h]
    # cross-check our projected centers against the reference centers
    for key in keys:
        cf, cijk = canon[key]
        lat, lng = F.face_ijk_to_geo(cf, cijk, 0)
        clat, clng = center_of[base_cell_at[key]]
        d = angular_distance(lat, lng, clat, clng)
        assert d < 1e-9, (key, d)
    print(f"   {len(base_cell_at)} positions resolved, centers agree <1e-9 rad")

    print("== stage D: orientation recovery by sampling ==")
    RES = 3
    samples = []  # (face_hint, lat, lng)
    for f in range(20):
        flat, flng = C.FACE_CENTER_GEO[f]
        for t in TRIPLES:
            clat, clng = center_of[base_cell_at[(f, t)]]
            if angular_distance(clat, clng, flat, flng) < 1e-12:
                # face-center cell: sample a small disk around the center
                for az in (0.3, 1.4, 2.5, 3.6, 4.7, 5.8):
                    samples.append(F.geo_az_distance_rads(clat, clng, az, 0.05))
                continue
            for frac in (0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.65, 0.8):
                samples.append(point_toward(clat, clng, flat, flng, frac))
            for daz in (-1.5, -0.9, -0.4, 0.4, 0.9, 1.5):
                for frac in (0.08, 0.2, 0.35):
                    samples.append(point_toward(clat, clng, flat, flng, frac, daz))
    # pentagon deleted-subsequence probes: construct points whose raw walk
    # has a leading k digit
    for f in range(20):
        for t in IN_RANGE:
            if sum(t) != 2 or 0 not in t or base_cell_at[(f, t)] not in pentagons:
                continue
            if len([c for c in t if c == 0]) != 2:
                continue  # corners only: (2,0,0) permutations
            for d2 in (0, 2, 3, 4, 5, 6):
                for d3 in (0, 2, 3, 4, 5, 6):
                    _, ijk = raw_decode_on_face(f, t, RES, [1, d2, d3])
                    lat, lng = F.face_ijk_to_geo(f, ijk, RES)
                    samples.append((lat, lng))

    reqs = [
        {"op": "latLngToCell", "args": [lat * DEG, lng * DEG, RES]}
        for lat, lng in samples
    ]
    truth = probe(reqs)

    obs_rot = defaultdict(set)  # (face, triple) -> set of rot candidates (intersected)
    obs_bc = {}
    k_pairs = defaultdict(list)  # (face, triple) -> (pre-fix index, true index)
    for (lat, lng), h_str in zip(samples, truth):
        h_true = IX.string_to_cell_index(h_str)
        bc = IX.get_base_cell(h_true)
        face, fijk_bc, digits = raw_encode(lat, lng, RES)
        key = (face, tuple(fijk_bc))
        if key not in base_cell_at:
            continue  # walk left the covered neighborhood
        if base_cell_at[key] != bc:
            continue  # boundary-straddling sample; reference used other face
        if all(d == 0 for d in digits):
            continue
        h_mine = IX.build_cell_index(RES, bc, digits)
        cands = set()
        if bc in pentagons:
            lead = IX.leading_non_zero_digit(h_mine)
            variants = []
            if lead == CK.K_AXES_DIGIT:
                variants.append(IX.rotate60_ccw_index(h_mine))
                variants.append(IX.rotate60_cw_index(h_mine))
                k_pairs[key].append((h_mine, h_true))
            else:
                variants.append(h_mine)
            for base in variants:
                cur = base
                for r in range(6):
                    if cur == h_true:
                        cands.add(r)
                    cur = IX.rotate_pent60_ccw_index(cur)
        else:
            cur = h_mine
            for r in range(6):
                if cur == h_true:
                    cands.add(r)
                cur = IX.rotate60_ccw_index(cur)
        if not cands:
            continue
        if key in obs_bc:
            assert obs_bc[key] == bc, (key, obs_bc[key], bc)
        obs_bc[key] = bc
        if key in obs_rot and obs_rot[key]:
            merged = obs_rot[key] & cands
            assert merged, (key, obs_rot[key], cands)
            obs_rot[key] = merged
        else:
            obs_rot[key] = cands

    missing = [
        (f, t) for f in range(20) for t in IN_RANGE if (f, t) not in obs_rot
    ]
    assert not missing, f"unobserved in-range entries: {missing}"
    for key, cands in obs_rot.items():
        if len(cands) > 1:
            # only the five-fold pentagon symmetry may cause this
            assert obs_bc[key] in pentagons and cands == {0, 5}, (key, cands)

    rot_at = {key: min(cands) for key, cands in obs_rot.items() if key[1] in IN_RANGE}
    # out-of-range entries follow from in-range ones by frame composition
    for f in range(20):
        for t in OUT_RANGE:
            cf, cijk, rho = adjust_to_canonical(f, t)
            rot_at[(f, t)] = (rot_at[(cf, cijk)] + rho) % 6
    for key in obs_rot:
        if key[1] in OUT_RANGE and min(obs_rot[key]) != rot_at[key]:
            raise AssertionError(f"composition mismatch at {key}")
    print(f"   orientations solved for {len(rot_at)} entries")

    print("== stage E: home positions ==")
    home = {}
    twin_entries = []  # pentagon appearances operationally equal to the home
    for bc in range(122):
        if bc in pentagons:
            continue
        zero_rot = [
            (f, t)
            for (f, t), r in rot_at.items()
            if base_cell_at[(f, t)] == bc and r == 0 and sum(t) <= 2
        ]
        assert len(zero_rot) == 1, (bc, zero_rot)
        home[bc] = zero_rot[0]

    # A pentagon rotated five 60 degree steps with the deleted-k skip maps
    # onto itself, so encode observations leave two candidate homes; a digit
    # walk from the wrong one lands children in rotated positions, so decode
    # against reference child centers settles it.
    bc_index_of = {bc: h for h, bc in bc_of.items()}
    for bc in pentagons:
        cands = [
            (f, t)
            for (f, t), rset in obs_rot.items()
            if base_cell_at[(f, t)] == bc and 0 in rset and sum(t) <= 2
        ]
        assert 1 <= len(cands) <= 2, (bc, cands)
        kids = probe([{"op": "cellToChildren", "args": [bc_index_of[bc], 2]}])[0]
        true_centers = probe([{"op": "cellToLatLng", "args": [k]} for k in kids])
        chosen = []
        for cand in cands:
            trial_home = dict(home)
            trial_home[bc] = cand
            ok = True
            for k, ll in zip(kids, true_centers):
                hk = IX.string_to_cell_index(k)
                face, ijk = local_decode(hk, trial_home, pentagons)
                lat, lng = F.face_ijk_to_geo(face, ijk, 2)
                if angular_distance(lat, lng, ll[0] / DEG, ll[1] / DEG) > 1e-9:
                    ok = False
                    break
            if ok:
                chosen.append(cand)
        assert len(chosen) == 1, (bc, cands, chosen)
        home[bc] = chosen[0]
        rot_at[chosen[0]] = 0
        for cand in cands:
            if cand != chosen[0]:
                rot_at[cand] = 5  # provisional; traversal validation may flip
                twin_entries.append(cand)
        assert sum(home[bc][1]) == 2, (bc, home[bc])
    print(f"   homes fixed; pentagon twin entries at {twin_entries}")

    # decode every base cell's res-1 and res-2 children against the
    # reference centers: exercises homes, overage, and pentagon rotations
    reqs = []
    for bc in range(122):
        reqs.append({"op": "cellToChildren", "args": [bc_index_of[bc], 1]})
    kid_lists = probe(reqs)
    all_kids = [k for ks in kid_lists for k in ks]
    centers = probe([{"op": "cellToLatLng", "args": [k]} for k in all_kids])
    worst = 0.0
    for k, ll in zip(all_kids, centers):
        hk = IX.string_to_cell_index(k)
        face, ijk = local_decode(hk, home, pentagons)
        lat, lng = F.face_ijk_to_geo(face, ijk, IX.get_resolution(hk))
        worst = max(worst, angular_distance(lat, lng, ll[0] / DEG, ll[1] / DEG))
    assert worst < 1e-9, worst
    print(f"   res-1 decode of all base cells agrees (worst {worst:.2e} rad)")

    print("== stage F: base cell neighbor graph ==")
    INVALID = 127
    # Direction labels come from the reference's directed edges: bits 56..58
    # of an edge index hold the direction from origin to destination, and at
    # res 0 that is by definition the neighbor table row entry.  This covers
    # pentagon rows, where the lattice folds and plain stepping misleads.
    disks = probe(
        [{"op": "gridDisk", "args": [bc_index_of[bc], 1]} for bc in range(122)]
    )
    true_sets = {}
    for bc, disk in zip(range(122), disks):
        s = {IX.get_base_cell(IX.string_to_cell_index(h)) for h in disk} - {bc}
        assert len(s) == (5 if bc in pentagons else 6), (bc, sorted(s))
        true_sets[bc] = s
    pairs = [(a, b) for a in range(122) for b in sorted(true_sets[a])]
    edge_strs = probe(
        [
            {"op": "cellsToDirectedEdge", "args": [bc_index_of[a], bc_index_of[b]]}
            for a, b in pairs
        ]
    )
    neighbors = [[INVALID] * 7 for _ in range(122)]
    neighbor_rots = [[0] * 7 for _ in range(122)]
    for (a, b), e in zip(pairs, edge_strs):
        v = int(e, 16)
        assert (v >> 59) & 0xF == 2, e
        assert (v >> 45) & 0x7F == a, e
        d = (v >> 56) & 7
        assert 1 <= d <= 6 and neighbors[a][d] == INVALID, (a, b, d)
        neighbors[a][d] = b
    for bc in range(122):
        neighbors[bc][0] = bc
        missing = [d for d in range(1, 7) if neighbors[bc][d] == INVALID]
        assert missing == ([CK.K_AXES_DIGIT] if bc in pentagons else []), (
            bc,
            missing,
        )
    for bc in pentagons:
        assert not (true_sets[bc] & set(pentagons)), bc

    # Hexagon homes sit on flat lattice, so unit steps plus overage adjustment
    # must land on the same neighbors the edge oracle names.  Rotations follow
    # by frame composition.
    for bc in range(122):
        if bc in pentagons:
            continue
        f, t = home[bc]
        for d in range(1, 7):
            stepped = CK.neighbor(t, d)
            nf, nijk, rho = adjust_to_canonical(f, stepped)
            assert base_cell_at[(nf, nijk)] == neighbors[bc][d], (bc, d)
            neighbor_rots[bc][d] = (rot_at[(nf, nijk)] + rho) % 6
    print("   hexagon rows: lattice stepping agrees with edge oracle")

    # frame algebra must be self-consistent across hexagon-hexagon edges
    OPP = {1: 6, 6: 1, 2: 5, 5: 2, 3: 4, 4: 3}

    def rot_dir(d, r):
        for _ in range(r):
            d = CK.rotate60_ccw(d)
        return d

    for bc in range(122):
        if bc in pentagons:
            continue
        for d in range(1, 7):
            nbc = neighbors[bc][d]
            if nbc in pentagons:
                continue
            d_rev = rot_dir(OPP[d], neighbor_rots[bc][d])
            assert neighbors[nbc][d_rev] == bc, (bc, d, nbc, d_rev)
            assert (neighbor_rots[bc][d] + neighbor_rots[nbc][d_rev]) % 6 == 0
    print("   hexagon-hexagon frame rotations reciprocal")

    # Rotations for crossings touching a pentagon cannot be pinned from the
    # flat lattice alone: the fold bends reciprocity and twin appearances are
    # only known up to the five-fold symmetry.  Seed them algebraically and
    # record them for the traversal fit stage, which solves each against
    # reference grid disks.
    fit_targets = []
    for bc in range(122):
        for d in range(1, 7):
            nbc = neighbors[bc][d]
            if nbc == INVALID:
                continue
            if bc in pentagons:
                d_rev = {v: k for k, v in enumerate(neighbors[nbc])}[bc]
                neighbor_rots[bc][d] = (6 - neighbor_rots[nbc][d_rev]) % 6
                fit_targets.append((bc, d))
            elif nbc in pentagons:
                fit_targets.append((bc, d))
    print(f"   {len(fit_targets)} pentagon-touching rotations queued for fit")

    print("== stage G: pentagon clockwise offset faces ==")
    # With each appearance's rotation now pinned, the rotation that pulls a
    # leading k digit out of the deleted subsequence is decided per sample:
    # exactly one of ccw/cw reproduces the reference index.
    cw_faces = {bc: set() for bc in pentagons}
    ccw_faces = {bc: set() for bc in pentagons}
    for key, pairs_k in k_pairs.items():
        bc = base_cell_at[key]
        r_star = rot_at[key]
        fix_seen = set()
        for hm, ht in pairs_k:
            hits = []
            for name, fixed in (
                ("ccw", IX.rotate60_ccw_index(hm)),
                ("cw", IX.rotate60_cw_index(hm)),
            ):
                cur = fixed
                for _ in range(r_star):
                    cur = IX.rotate_pent60_ccw_index(cur)
                if cur == ht:
                    hits.append(name)
            if not hits:
                continue  # reference walked a different face for this point
            assert len(hits) == 1, (key, hits)
            fix_seen.add(hits[0])
        if not fix_seen:
            continue
        assert len(fix_seen) == 1, (key, fix_seen)
        (cw_faces if "cw" in fix_seen else ccw_faces)[bc].add(key[0])
    cw_offset = {}
    for bc in pentagons:
        assert not (cw_faces[bc] & ccw_faces[bc]), bc
        faces_seen = {
            f
            for (f, t), b in base_cell_at.items()
            if b == bc and sum(t) <= 2
        }
        cw_offset[bc] = sorted(cw_faces[bc])
        print(
            f"   pentagon {bc}: appears on {sorted(faces_seen)}, "
            f"cw fix on {sorted(cw_faces[bc])}, ccw fix on {sorted(ccw_faces[bc])}, "
            f"unobserved {sorted(faces_seen - cw_faces[bc] - ccw_faces[bc])}"
        )
        assert len(cw_offset[bc]) <= 2, (bc, cw_offset[bc])

    def emit_tables():
        emit_tables_file(
            pentagons,
            home,
            cw_offset,
            base_cell_at,
            rot_at,
            neighbors,
            neighbor_rots,
            twin_entries,
            fit_targets,
        )

    print("== emit _tables.py ==")
    emit_tables()

    print("== stage H: fit pentagon-touching rotations ==")
    traversal_path = os.path.join(
        os.path.dirname(OUT_PATH), "_traversal.py"
    )
    if not os.path.exists(traversal_path):
        print("   _traversal.py not present yet; rerun after writing it")
        return
    for round_no in range(6):
        r = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--fit-check"],
            capture_output=True,
            text=True,
        )
        sys.stdout.write(r.stdout)
        if r.returncode == 0:
            print("   traversal battery clean; tables final")
            break
        if r.returncode != 3:
            sys.stderr.write(r.stderr)
            raise AssertionError("fit check failed hard")
        with open("/tmp/h3_fit.json") as fh:
            fixes = json.load(fh)
        assert fixes, "fit signalled corrections but none written"
        for bc, d, rot in fixes:
            print(f"   rot fix: base {bc} dir {d}: {neighbor_rots[bc][d]} -> {rot}")
            assert (bc, d) in fit_targets, (bc, d)
            neighbor_rots[bc][d] = rot
        emit_tables()
    else:
        raise AssertionError("fit did not converge")


def emit_tables_file(
    pentagons,
    home,
    cw_offset,
    base_cell_at,
    rot_at,
    neighbors,
    neighbor_rots,
    twin_entries,
    fit_targets,
):
    lines = []
    lines.append('"""Base cell data of the H3 grid.')
    lines.append("")
    lines.append("Generated by scripts/gen_h3_tables.py against the reference grid")
    lines.append("implementation; do not edit by hand.  The full derivation is")
    lines.append("re-validated by scripts/validate_h3.py and the frozen vectors in")
    lines.append('the test suite."""')
    lines.append("")
    lines.append("INVALID_BASE_CELL = 127")
    lines.append("")
    lines.append(f"PENTAGON_BASE_CELLS = frozenset({sorted(pentagons)})")
    lines.append("")
    lines.append("# (home face, home ijk) per base cell")
    lines.append("BASE_CELL_HOME = (")
    for bc in range(122):
        f, t = home[bc]
        lines.append(f"    ({f}, {t!r}),")
    lines.append(")")
    lines.append("")
    lines.append("# faces on which a pentagon's missing k subsequence is entered")
    lines.append("# with a clockwise offset")
    lines.append("CW_OFFSET_PENT = {")
    for bc in sorted(cw_offset):
        lines.append(f"    {bc}: {tuple(cw_offset[bc])!r},")
    lines.append("}")
    lines.append("")
    lines.append("# (base cell, ccw 60 degree rotations) by face and normalized ijk,")
    lines.append("# components in [0, 2]")
    lines.append("FACE_IJK_BASE_CELLS = {")
    for f in range(20):
        for t in TRIPLES:
            bc = base_cell_at[(f, t)]
            r = rot_at[(f, t)]
            lines.append(f"    ({f}, {t!r}): ({bc}, {r}),")
    lines.append("}")
    lines.append("")
    lines.append("# neighboring base cell in each ijk direction (127 where the")
    lines.append("# pentagon's k neighbor is deleted)")
    lines.append("BASE_CELL_NEIGHBORS = (")
    for bc in range(122):
        lines.append(f"    {tuple(neighbors[bc])!r},")
    lines.append(")")
    lines.append("")
    lines.append("# ccw rotations of the digit frame when crossing into that neighbor")
    lines.append("BASE_CELL_NEIGHBOR_60CCW_ROTS = (")
    for bc in range(122):
        lines.append(f"    {tuple(neighbor_rots[bc])!r},")
    lines.append(")")
    lines.append("")
    lines.append("# pentagon appearances whose orientation is degenerate under the")
    lines.append("# five-fold symmetry; traversal validation pins their value")
    lines.append(f"TWIN_ENTRIES = {tuple(sorted(twin_entries))!r}")
    lines.append("")
    lines.append("# crossings whose rotation was solved against reference grid disks")
    lines.append("# rather than by flat-lattice frame composition")
    lines.append(f"FIT_SOLVED = {tuple(sorted(fit_targets))!r}")
    lines.append("")
    with open(OUT_PATH, "w") as fh:
        fh.write("\n".join(lines))
    print(f"   wrote {os.path.normpath(OUT_PATH)}")


def fit_check():
    """Compare grid disks around pentagon boundaries against the reference.

    Exits 0 when every disk matches.  Otherwise solves each queued crossing
    rotation by coordinate descent over the disks that exercise it, writes
    the corrections to /tmp/h3_fit.json, and exits 3.
    """
    from stationscout.h3core import _tables as T
    from stationscout.h3core import _traversal as TR

    res0 = probe([{"op": "getRes0Cells", "args": []}])[0]
    bc_index_of = {}
    for h in res0:
        bc_index_of[IX.get_base_cell(IX.string_to_cell_index(h))] = h

    pentagons = T.PENTAGON_BASE_CELLS
    near_pent = set(pentagons)
    for bc in pentagons:
        for nbc in T.BASE_CELL_NEIGHBORS[bc]:
            if nbc != T.INVALID_BASE_CELL:
                near_pent.add(nbc)

    origins = [bc_index_of[bc] for bc in sorted(near_pent)]
    kid_lists = probe(
        [{"op": "cellToChildren", "args": [bc_index_of[bc], r]} for bc in sorted(near_pent) for r in (1, 2)]
    )
    for ks in kid_lists:
        origins.extend(ks)
    truths = probe([{"op": "gridDisk", "args": [h, 1]} for h in origins])

    cases = []  # (origin_int, origin_bc, truth_set, truth_bcs)
    for h, disk in zip(origins, truths):
        hi = IX.string_to_cell_index(h)
        tset = {IX.string_to_cell_index(x) for x in disk}
        tbcs = {IX.get_base_cell(x) for x in tset}
        cases.append((hi, IX.get_base_cell(hi), tset, tbcs))

    def disk_ok(case):
        hi, _, tset, _ = case
        try:
            mine = set(TR.grid_disk(hi, 1))
        except Exception:
            return False
        return mine == tset

    failures = [c for c in cases if not disk_ok(c)]
    if not failures:
        sys.exit(0)
    print(f"   fit: {len(failures)} of {len(cases)} disks disagree; solving")

    rots = [list(row) for row in T.BASE_CELL_NEIGHBOR_60CCW_ROTS]

    def set_rot(bc, d, r):
        rots[bc][d] = r
        T.BASE_CELL_NEIGHBOR_60CCW_ROTS = tuple(tuple(row) for row in rots)

    set_rot(0, 0, 0)  # materialize mutable copy
    by_entry = {}
    for bc, d in T.FIT_SOLVED:
        nbc = T.BASE_CELL_NEIGHBORS[bc][d]
        rel = [
            c
            for c in cases
            if (c[1] == bc and nbc in c[3]) or (c[1] == nbc and bc in c[3])
        ]
        by_entry[(bc, d)] = rel

    changed_any = {}
    for _ in range(8):
        changed = False
        for (bc, d), rel in by_entry.items():
            if not rel:
                continue
            cur = rots[bc][d]
            scores = {}
            for r in range(6):
                set_rot(bc, d, r)
                scores[r] = sum(1 for c in rel if disk_ok(c))
            best = max(scores.values())
            winners = sorted(r for r, s in scores.items() if s == best)
            pick = cur if cur in winners else winners[0]
            set_rot(bc, d, pick)
            if pick != cur:
                changed = True
                changed_any[(bc, d)] = pick
        if not changed:
            break

    failures = [c for c in cases if not disk_ok(c)]
    if failures:
        for hi, bc, tset, _ in failures[:10]:
            mine = set()
            try:
                mine = set(TR.grid_disk(hi, 1))
            except Exception as e:
                mine = {f"error {e}"}
            print(
                f"   unresolved: origin {IX.cell_index_to_string(hi)} base {bc} "
                f"missing {[IX.cell_index_to_string(x) for x in tset - mine if not isinstance(x, str)]} "
                f"extra {[IX.cell_index_to_string(x) for x in mine - tset if not isinstance(x, str)]}"
            )
        sys.exit(1)
    with open("/tmp/h3_fit.json", "w") as fh:
        json.dump([[bc, d, r] for (bc, d), r in sorted(changed_any.items())], fh)
    sys.exit(3)


if __name__ == "__main__":
    if "--fit-check" in sys.argv:
        fit_check()
    else:
        main()
