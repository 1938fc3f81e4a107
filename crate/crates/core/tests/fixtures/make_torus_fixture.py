"""Writes torus_no_colouring.json: an even-valency, even-face toroidal map with
no alternate-edge-colouring, drawn in a 12 x 6 rectangle whose opposite sides
are identified.

Run from this directory: python3 make_torus_fixture.py
"""

import itertools
import json
import math

WIDTH, HEIGHT = 12, 6

VERTICES = {
    "A": (0, 0),  # all four rectangle corners
    "B": (0, 3),  # also (12, 3)
    "C": (2, 0),  # also (2, 6)
    "D": (2, 3),
    "E": (4, 0),  # also (4, 6)
    "F": (6, 0),  # also (6, 6)
    "G": (8, 0),  # also (8, 6)
    "H": (10, 0),  # also (10, 6)
    "I": (10, 3),
    "J": (6, 2),
    "K": (6, 4),
}

# Each edge is drawn as a straight segment in the rectangle.
SEGMENTS = [
    ((0, 0), (2, 0)),  # A-C, bottom/top side
    ((2, 0), (4, 0)),  # C-E
    ((4, 0), (6, 0)),  # E-F, the edge marked with a double arrow
    ((6, 0), (8, 0)),  # F-G
    ((8, 0), (10, 0)),  # G-H
    ((10, 0), (12, 0)),  # H-A
    ((0, 0), (0, 3)),  # A-B, left/right side
    ((0, 3), (0, 6)),  # B-A, the edge marked with a single arrow
    ((2, 0), (2, 3)),  # C-D
    ((2, 3), (2, 6)),  # D-C
    ((10, 0), (10, 3)),  # H-I
    ((10, 3), (10, 6)),  # I-H
    ((4, 0), (6, 2)),  # E-J
    ((8, 0), (6, 2)),  # G-J
    ((2, 3), (6, 2)),  # D-J
    ((10, 3), (6, 2)),  # I-J
    ((2, 3), (6, 4)),  # D-K
    ((10, 3), (6, 4)),  # I-K
    ((4, 6), (6, 4)),  # E-K
    ((8, 6), (6, 4)),  # G-K
]


def vertex_at(p):
    q = (p[0] % WIDTH, p[1] % HEIGHT)
    for name, pos in VERTICES.items():
        if pos == q:
            return name
    raise ValueError(p)


def build():
    # dart 2i leaves the first endpoint of segment i, dart 2i+1 the second
    darts = []
    for a, b in SEGMENTS:
        darts.append((vertex_at(a), (b[0] - a[0], b[1] - a[1])))
        darts.append((vertex_at(b), (a[0] - b[0], a[1] - b[1])))
    nxt = [None] * len(darts)
    for v in VERTICES:
        around = sorted(
            (d for d in range(len(darts)) if darts[d][0] == v),
            key=lambda d: math.atan2(darts[d][1][1], darts[d][1][0]),
        )
        for i, d in enumerate(around):
            nxt[d] = around[(i + 1) % len(around)]

    # flag 2d: side of dart d towards nxt[d]; flag 2d+1: the other side
    n = 2 * len(darts)
    s0, s1, s2 = [None] * n, [None] * n, [None] * n
    for d in range(len(darts)):
        e = d ^ 1
        s2[2 * d], s2[2 * d + 1] = 2 * d + 1, 2 * d
        s0[2 * d], s0[2 * e + 1] = 2 * e + 1, 2 * d
        r = nxt[d]
        s1[2 * d], s1[2 * r + 1] = 2 * r + 1, 2 * d
    return darts, nxt, s0, s1, s2


def orbits(n, gens):
    label = [None] * n
    count = 0
    for f in range(n):
        if label[f] is None:
            stack = [f]
            label[f] = count
            while stack:
                x = stack.pop()
                for g in gens:
                    if label[g[x]] is None:
                        label[g[x]] = count
                        stack.append(g[x])
            count += 1
    return label, count


def main():
    darts, nxt, s0, s1, s2 = build()
    n = len(s0)
    vertex_of, v = orbits(n, [s1, s2])
    edge_of, e = orbits(n, [s0, s2])
    face_of, f = orbits(n, [s0, s1])
    assert (v, e, f) == (11, 20, 9) and v - e + f == 0
    for label, count in ((vertex_of, v), (face_of, f)):
        sizes = [label.count(i) for i in range(count)]
        assert all(s % 4 == 0 for s in sizes), sizes  # even valency, even face length
    # exhaustive search over all 2^20 edge colourings
    pairs = {(edge_of[x], edge_of[s1[x]]) for x in range(n)}
    for colours in itertools.product((0, 1), repeat=e):
        if all(colours[a] != colours[b] for a, b in pairs):
            raise AssertionError("found an alternate-edge-colouring")
    data = {
        "notes": {
            "surface": "torus: 12 x 6 rectangle, opposite sides identified",
            "vertices": {k: list(p) for k, p in VERTICES.items()},
            "edges": ["{}-{} {} {}".format(vertex_at(a), vertex_at(b), list(a), list(b)) for a, b in SEGMENTS],
            "flags": "dart 2i leaves the first endpoint of edge i, dart 2i+1 the second; "
            "flag 2d lies on the counter-clockwise side of dart d, flag 2d+1 on the clockwise side",
            "counts": {"V": v, "E": e, "F": f},
        },
        "flag_count": n,
        "s0": s0,
        "s1": s1,
        "s2": s2,
    }
    with open("torus_no_colouring.json", "w") as out:
        json.dump(data, out, indent=1)
        out.write("\n")


if __name__ == "__main__":
    main()
