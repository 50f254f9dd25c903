"""Writes the fixture graph documents from straight-line coordinates."""
import json
import math
import pathlib

HERE = pathlib.Path(__file__).parent


def document(points, edges, outer):
    nbrs = {v: [] for v in range(len(points))}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rotations = []
    for v, (x, y) in enumerate(points):
        rotations.append(sorted(nbrs[v], key=lambda w: math.atan2(points[w][1] - y, points[w][0] - x)))
    return {"n": len(points), "rotations": rotations, "outer": list(outer)}


def stacked(points, edges, faces):
    points, edges = list(points), list(edges)
    for f in faces:
        w = len(points)
        points.append(tuple(sum(points[i][k] for i in f) / 3 for k in range(2)))
        edges += [(i, w) for i in f]
    return points, edges


BASE = [(0, 0), (2, 0), (1, 2)]
TRI = [(0, 1), (1, 2), (2, 0)]

fixtures = {
    "triangle": (BASE, TRI),
    "k4": stacked(BASE, TRI, [(0, 1, 2)]),
    "k5e_z": stacked(BASE, TRI, [(0, 1, 2), (0, 1, 3)]),
    "k5e_u": stacked(BASE, TRI, [(0, 1, 2), (1, 2, 3)]),
    "k5e_v": stacked(BASE, TRI, [(0, 1, 2), (2, 0, 3)]),
    "stack6_nested": stacked(BASE, TRI, [(0, 1, 2), (0, 1, 3), (0, 1, 4)]),
    "stack6_spread": stacked(BASE, TRI, [(0, 1, 2), (0, 1, 3), (1, 2, 3)]),
    "stack6_chain": stacked(BASE, TRI, [(0, 1, 2), (0, 1, 3), (1, 3, 4)]),
}

OCTA = [(0, 0), (10, 0), (5, 10), (3, 5), (5, 2), (7, 5)]
OCTA_EDGES = [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3), (3, 4), (4, 5), (5, 3)]
fixtures["octahedron"] = (OCTA, OCTA_EDGES)
fixtures["octahedron_stacked"] = stacked(OCTA, OCTA_EDGES, [(3, 4, 5)])

for name, (pts, es) in fixtures.items():
    (HERE / f"{name}.json").write_text(json.dumps(document(pts, es, (0, 1, 2))) + "\n")
