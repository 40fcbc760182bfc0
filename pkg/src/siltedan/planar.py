"""Faces of a convex polygon cut by non-crossing chords.

Points 0..N-1 sit counterclockwise on a circle and consecutive points are
joined by boundary segments.  Chords may join adjacent points (then they run
parallel to a segment), so every edge carries an id and the rotation at a
point is computed from the cyclic offset with the two boundary segments
slightly outside the chord range.
"""
from __future__ import annotations

from dataclasses import dataclass


def crosses(c1, c2) -> bool:
    """Strict interior crossing of two chords on a circle."""
    a, b = sorted(c1)
    c, d = sorted(c2)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class Face:
    points: tuple[int, ...]
    chords: tuple[int, ...]      # indices into the chord list
    segments: tuple[int, ...]    # boundary segment i joins i and i+1


def faces(npoints: int, chords) -> list[Face]:
    """Bounded faces, each listed counterclockwise from its smallest dart."""
    N = npoints
    chords = [tuple(c) for c in chords]
    # darts: (edge kind, edge id, from, to)
    darts = []
    for i in range(N):
        darts.append(("seg", i, i, (i + 1) % N))
        darts.append(("seg", i, (i + 1) % N, i))
    for k, (u, w) in enumerate(chords):
        darts.append(("chord", k, u, w))
        darts.append(("chord", k, w, u))

    def key(d):
        kind, eid, u, w = d
        off = (w - u) % N
        if kind == "seg":
            return off - 0.5 if w == (u + 1) % N and eid == u else off + 0.5
        return off

    at = {u: sorted((d for d in darts if d[2] == u), key=key) for u in range(N)}
    seen = set()
    out = []
    for start in darts:
        if start in seen:
            continue
        cyc, d = [], start
        while d not in seen:
            seen.add(d)
            cyc.append(d)
            kind, eid, v, u = d
            rev = (kind, eid, u, v)
            ring = at[u]
            pos = ring.index(rev)
            d = ring[pos - 1]   # clockwise neighbour of the reverse dart
        # the outer face runs along the segments backwards
        if any(k == "seg" and u == (eid + 1) % N and w == eid for k, eid, u, w in cyc):
            continue
        out.append(Face(tuple(d[2] for d in cyc),
                        tuple(sorted(d[1] for d in cyc if d[0] == "chord")),
                        tuple(sorted(d[1] for d in cyc if d[0] == "seg"))))
    return out
