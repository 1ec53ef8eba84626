"""Multipolygon assembly from relation member ways.

OSM relations deliver rings as arbitrary-order way fragments; outer
and inner fragments are stitched end to end (reversing where needed)
into closed rings, then holes are attached to the outer ring that
contains them.
"""

from shapely.geometry import MultiPolygon, Polygon


class AssemblyError(ValueError):
    pass


def _stitch(fragments):
    """Join coordinate runs into closed rings."""
    pending = [list(f) for f in fragments if len(f) >= 2]
    rings = []
    while pending:
        ring = pending.pop(0)
        while ring[0] != ring[-1]:
            for i, frag in enumerate(pending):
                if frag[0] == ring[-1]:
                    ring.extend(frag[1:])
                elif frag[-1] == ring[-1]:
                    ring.extend(reversed(frag[:-1]))
                else:
                    continue
                pending.pop(i)
                break
            else:
                raise AssemblyError("open ring: no fragment continues the chain")
        if len(ring) < 4:
            raise AssemblyError("ring with fewer than 3 distinct points")
        rings.append(ring)
    return rings


def multipolygon_from_members(members) -> MultiPolygon:
    """Build a MultiPolygon from (role, coords) relation members.

    Ways with role "inner" become holes; anything else (including the
    common empty role) counts as outer, matching how incomplete
    tagging is usually meant.
    """
    outers = _stitch([c for role, c in members if role != "inner"])
    inners = _stitch([c for role, c in members if role == "inner"])
    if not outers:
        raise AssemblyError("relation has no outer ring")

    shells = [Polygon(r) for r in outers]
    holes_for = {i: [] for i in range(len(shells))}
    for hole in inners:
        probe = Polygon(hole).representative_point()
        for i, shell in enumerate(shells):
            if shell.contains(probe):
                holes_for[i].append(hole)
                break
        else:
            raise AssemblyError("inner ring outside every outer ring")

    polys = [Polygon(outers[i], holes_for[i]) for i in range(len(shells))]
    out = MultiPolygon(polys)
    if not out.is_valid:
        raise AssemblyError("assembled multipolygon is invalid")
    return out
