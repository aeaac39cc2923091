"""Webs as combinatorial maps: noncrossing matchings and colored trivalent
planar maps with labeled boundary.

A web is stored purely combinatorially: vertices 0..B-1 are the boundary in
cyclic label order (label i is vertex i-1), then internal vertices.  Each
vertex carries the counterclockwise cyclic order of its incident edges, which
pins the embedding up to isotopy fixing the boundary.  Nothing here ever
touches coordinates.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

BLACK = "black"
WHITE = "white"


class WebStructureError(ValueError):
    """The half-edge data is malformed (as opposed to an invariant violation)."""


@dataclass(frozen=True)
class Matching:
    """A noncrossing perfect matching on 2n cyclically numbered points."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        norm = tuple(sorted((min(i, j), max(i, j)) for i, j in self.pairs))
        object.__setattr__(self, "pairs", norm)
        cover = sorted(x for pair in norm for x in pair)
        if cover != list(range(1, 2 * self.n + 1)):
            raise ValueError(f"pairs do not partition 1..{2 * self.n}")
        for (i, j) in norm:
            for (k, l) in norm:
                if i < k < j < l:
                    raise ValueError(f"pairs ({i},{j}) and ({k},{l}) cross")


def reflect_matching(m: Matching) -> Matching:
    """Reflect across the diameter through the midpoint of the arc (2n, 1)."""
    size = 2 * m.n + 1
    return Matching(m.n, tuple((size - j, size - i) for i, j in m.pairs))


@dataclass(frozen=True)
class Web:
    """An sl3 web diagram.

    boundary_colors[i] is the color at boundary label i+1; internal_colors
    follow.  Each edge joins two vertex ids; rotation[v] lists v's incident
    edge ids counterclockwise.
    """

    boundary_colors: tuple[str, ...]
    internal_colors: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "boundary_colors", tuple(self.boundary_colors))
        object.__setattr__(self, "internal_colors", tuple(self.internal_colors))
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        object.__setattr__(self, "rotation", tuple(tuple(int(e) for e in rot) for rot in self.rotation))
        for c in self.boundary_colors + self.internal_colors:
            if c not in (BLACK, WHITE):
                raise ValueError(f"bad color {c!r}")

    @property
    def n_boundary(self) -> int:
        return len(self.boundary_colors)

    @property
    def n_vertices(self) -> int:
        return len(self.boundary_colors) + len(self.internal_colors)

    def color(self, v: int) -> str:
        if v < self.n_boundary:
            return self.boundary_colors[v]
        return self.internal_colors[v - self.n_boundary]

    def is_boundary(self, v: int) -> bool:
        return v < self.n_boundary


def _check_structure(web: Web) -> None:
    nv = web.n_vertices
    if len(web.rotation) != nv:
        raise WebStructureError(f"rotation lists {len(web.rotation)} vertices, web has {nv}")
    seen_at: dict[int, list[int]] = {e: [] for e in range(len(web.edges))}
    for v, rot in enumerate(web.rotation):
        for e in rot:
            if not 0 <= e < len(web.edges):
                raise WebStructureError(f"vertex {v} lists unknown edge {e}")
            seen_at[e].append(v)
    for e, (a, b) in enumerate(web.edges):
        if not (0 <= a < nv and 0 <= b < nv):
            raise WebStructureError(f"edge {e} endpoint out of range")
        if a == b:
            raise WebStructureError(f"edge {e} is a loop")
        if sorted(seen_at[e]) != sorted((a, b)):
            raise WebStructureError(f"edge {e} incidences {seen_at[e]} disagree with endpoints {(a, b)}")


def _other(web: Web, e: int, v: int) -> int:
    a, b = web.edges[e]
    return b if v == a else a


def _augmented_faces(web: Web) -> list[list[tuple[int, bool]]]:
    """Faces of the map augmented with the boundary circle.

    Returns each face as a list of (edge index, is_arc) half-edge steps, where
    arc edges are the added boundary arcs between consecutive boundary labels.
    """
    b = web.n_boundary
    n_edges = len(web.edges)
    # half-edge h = 2e+side; vertex and rotations built explicitly so that
    # parallel arcs (b == 2) and the arc loop (b == 1) stay well-formed
    half_at: dict[int, int] = {}
    rot_half: list[list[int]] = [[] for _ in range(web.n_vertices)]
    for e, (a, bb) in enumerate(web.edges):
        half_at[2 * e] = a
        half_at[2 * e + 1] = bb
    for v, rot in enumerate(web.rotation):
        for e in rot:
            a, bb = web.edges[e]
            rot_half[v].append(2 * e if v == a else 2 * e + 1)
    arc_base = 2 * n_edges
    for i in range(b):
        nxt = (i + 1) % b
        half_at[arc_base + 2 * i] = i
        half_at[arc_base + 2 * i + 1] = nxt
    for i in range(b):
        prev = (i - 1) % b
        # ccw at a boundary vertex: arc toward the next label, the web edge
        # into the disk, arc back toward the previous label
        rot_half[i] = [arc_base + 2 * i] + rot_half[i] + [arc_base + 2 * prev + 1]

    position = {}
    for v, halves in enumerate(rot_half):
        for idx, h in enumerate(halves):
            position[h] = (v, idx)

    def face_next(h: int) -> int:
        opp = h ^ 1
        v, idx = position[opp]
        return rot_half[v][(idx + 1) % len(rot_half[v])]

    faces = []
    visited: set[int] = set()
    for h0 in sorted(position):
        if h0 in visited:
            continue
        face = []
        h = h0
        while True:
            visited.add(h)
            if h >= arc_base:
                face.append(((h - arc_base) // 2, True))
            else:
                face.append((h // 2, False))
            h = face_next(h)
            if h == h0:
                break
        faces.append(face)
    return faces


def validate_web(web: Web) -> list[str]:
    """Check every web invariant; returns the list of violations (empty iff
    the web is a valid non-elliptic diagram).  Malformed half-edge data raises
    WebStructureError instead of being reported."""
    _check_structure(web)
    report: list[str] = []
    b = web.n_boundary
    for v in range(web.n_vertices):
        deg = len(web.rotation[v])
        want = 1 if v < b else 3
        where = f"boundary vertex {v + 1}" if v < b else f"internal vertex {v - b}"
        if deg != want:
            report.append(f"{where} has degree {deg}, expected {want}")
    for e, (x, y) in enumerate(web.edges):
        if web.color(x) == web.color(y):
            report.append(f"edge {e} joins two {web.color(x)} vertices")
    if b == 0:
        if web.n_vertices or web.edges:
            report.append("web without boundary vertices is not embeddable in the disk model")
        return report
    faces = _augmented_faces(web)
    euler = web.n_vertices - (len(web.edges) + b) + len(faces)
    if euler != 2:
        report.append(f"rotation system is not a planar disk embedding (V-E+F = {euler}, expected 2)")
        return report
    for face in faces:
        if any(is_arc for _, is_arc in face):
            continue
        if len(face) < 6:
            report.append(f"internal face of size {len(face)} < 6")
    return report


def canonicalize(web: Web) -> str:
    """Deterministic encoding, equal for isotopic webs with the same boundary.

    Breadth-first from the boundary vertices in label order; each internal
    vertex's rotation is read counterclockwise starting from its discovery
    edge, so internal vertex names and rotation phases wash out.
    """
    _check_structure(web)
    b = web.n_boundary
    order: dict[int, int] = {v: v for v in range(b)}
    anchor: dict[int, int] = {}
    queue = deque(range(b))
    nxt = b

    def anchored(v: int) -> tuple[int, ...]:
        rot = web.rotation[v]
        if v < b or v not in anchor:
            return rot
        i = rot.index(anchor[v])
        return rot[i:] + rot[:i]

    while queue:
        v = queue.popleft()
        for e in anchored(v):
            w = _other(web, e, v)
            if w not in order:
                order[w] = nxt
                nxt += 1
                anchor[w] = e
                queue.append(w)
    if len(order) != web.n_vertices:
        raise ValueError("web has vertices unreachable from the boundary")
    by_id = sorted(order, key=order.get)
    chunks = ["".join("B" if c == BLACK else "W" for c in web.boundary_colors)]
    for v in by_id:
        mark = "B" if web.color(v) == BLACK else "W"
        nbrs = ",".join(str(order[_other(web, e, v)]) for e in anchored(v))
        chunks.append(f"{mark}({nbrs})")
    return "|".join(chunks)


def webs_equal(a: Web, b: Web) -> bool:
    return canonicalize(a) == canonicalize(b)


@dataclass(frozen=True)
class ExpandedWeb:
    """An all-black-boundary web plus the consecutive pairs (p, p+1) that may
    be contracted back into white boundary vertices."""

    web: Web
    contractible: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "contractible", tuple(sorted(int(p) for p in self.contractible)))
        for p, q in zip(self.contractible, self.contractible[1:]):
            if q - p < 2:
                raise ValueError(f"contractible pairs at {p} and {q} overlap")
        for p in self.contractible:
            _common_white_neighbor(self.web, p)


def _common_white_neighbor(web: Web, p: int) -> tuple[int, int, int]:
    """The shared white neighbor of boundary vertices p and p+1 (1-based,
    cyclic); returns (white vertex, edge at p, edge at p+1)."""
    b = web.n_boundary
    if not 1 <= p <= b:
        raise ValueError(f"position {p} out of range 1..{b}")
    vp, vq = p - 1, p % b
    for v in (vp, vq):
        if web.boundary_colors[v] != BLACK:
            raise ValueError(f"boundary vertex {v + 1} is not black")
        if len(web.rotation[v]) != 1:
            raise ValueError(f"boundary vertex {v + 1} does not have degree 1")
    ep, eq = web.rotation[vp][0], web.rotation[vq][0]
    u = _other(web, ep, vp)
    if _other(web, eq, vq) != u or web.color(u) != WHITE:
        raise ValueError(f"boundary vertices {p} and {p % b + 1} have no common white neighbor")
    return u, ep, eq


def contract_pair(web: Web, p: int) -> Web:
    """Delete the black boundary pair (p, p+1) and move their shared white
    neighbor onto the boundary in their place."""
    _check_structure(web)
    b = web.n_boundary
    u, ep, eq = _common_white_neighbor(web, p)
    if web.is_boundary(u):
        raise ValueError("shared white neighbor already lies on the boundary")
    rot_u = web.rotation[u]
    iu = rot_u.index(ep)
    if rot_u[(iu + 1) % len(rot_u)] != eq:
        raise ValueError("contraction pair edges are not adjacent in the white vertex's rotation")
    vp, vq = p - 1, p % b

    # new boundary: u replaces the pair; seam contraction (p == b) appends u
    if p < b:
        new_boundary = [v for v in range(b) if v not in (vp, vq)]
        new_boundary.insert(p - 1, u)
    else:
        new_boundary = [v for v in range(1, b - 1)] + [u]
    new_internal = [v for v in range(b, web.n_vertices) if v != u]
    remap = {v: i for i, v in enumerate(new_boundary + new_internal)}

    keep_edges = [e for e in range(len(web.edges)) if e not in (ep, eq)]
    edge_remap = {e: i for i, e in enumerate(keep_edges)}
    edges = tuple((remap[a], remap[bb]) for a, bb in (web.edges[e] for e in keep_edges))
    colors = [None] * len(remap)
    rotation: list[tuple[int, ...]] = [()] * len(remap)
    for v, new_v in remap.items():
        colors[new_v] = web.color(v)
        rotation[new_v] = tuple(edge_remap[e] for e in web.rotation[v] if e in edge_remap)
    nb = len(new_boundary)
    return Web(tuple(colors[:nb]), tuple(colors[nb:]), edges, tuple(rotation))


def contract_pairs(web: Web, positions) -> Web:
    """Contract at several recorded pair positions, lowest first; each earlier
    contraction shifts the later positions down by one."""
    for done, p in enumerate(sorted(positions)):
        web = contract_pair(web, p - done)
    return web


def expand_white(web: Web) -> ExpandedWeb:
    """Replace each white boundary vertex by a pair of black boundary vertices
    attached to a new internal white vertex (the reverse contraction)."""
    report = validate_web(web)
    if report:
        raise ValueError("cannot expand an invalid web: " + "; ".join(report))
    b = web.n_boundary
    whites = [v for v in range(b) if web.boundary_colors[v] == WHITE]
    if not whites:
        return ExpandedWeb(web, ())

    new_b = b + len(whites)
    # slot assignment along the boundary, preserving cyclic order
    slot_of: dict[int, int] = {}
    pair_slots: dict[int, tuple[int, int]] = {}
    contractible = []
    cursor = 0
    for v in range(b):
        if web.boundary_colors[v] == WHITE:
            pair_slots[v] = (cursor, cursor + 1)
            contractible.append(cursor + 1)  # 1-based position of the pair
            cursor += 2
        else:
            slot_of[v] = cursor
            cursor += 1

    # vertex ids: boundary slots first, then old internals, then restored whites
    remap: dict[int, int] = {}
    for v, slot in slot_of.items():
        remap[v] = slot
    for i, v in enumerate(range(b, web.n_vertices)):
        remap[v] = new_b + i
    restored = {v: new_b + (web.n_vertices - b) + i for i, v in enumerate(whites)}

    colors = [BLACK] * new_b + [web.internal_colors[v - b] for v in range(b, web.n_vertices)]
    colors += [WHITE] * len(whites)
    edges = []
    for a, bb in web.edges:
        edges.append(tuple(restored.get(x, remap.get(x)) for x in (a, bb)))
    rotation: list[tuple[int, ...]] = [()] * len(colors)
    for v in range(web.n_vertices):
        target = restored[v] if v in restored else remap[v]
        rotation[target] = web.rotation[v]
    for v in whites:
        left, right = pair_slots[v]
        e_left = len(edges)
        edges.append((restored[v], left))
        e_right = len(edges)
        edges.append((restored[v], right))
        old_edge = web.rotation[v][0]
        # ccw at the pulled-in white: old edge into the disk, then the leg to
        # the clockwise-side (smaller label) black, then the other leg
        rotation[restored[v]] = (old_edge, e_left, e_right)
        rotation[left] = (e_left,)
        rotation[right] = (e_right,)
    out = Web(tuple(colors[:new_b]), tuple(colors[new_b:]), tuple(edges), tuple(rotation))
    return ExpandedWeb(out, tuple(contractible))


def _mirror_all_black(web: Web) -> Web:
    """Reflect an all-black-boundary web: boundary label i becomes m+1-i and
    every rotation reverses (a mirror image reverses orientation)."""
    b = web.n_boundary
    remap = {v: (b - 1 - v if v < b else v) for v in range(web.n_vertices)}
    edges = tuple((remap[a], remap[bb]) for a, bb in web.edges)
    rotation: list[tuple[int, ...]] = [()] * web.n_vertices
    for v in range(web.n_vertices):
        rotation[remap[v]] = tuple(reversed(web.rotation[v]))
    return Web(web.boundary_colors, web.internal_colors, edges, tuple(rotation))


def reflect_web(web: Web) -> Web:
    """Reflect across the diameter through the midpoint of the boundary arc
    between the last and first labels.

    Combinatorially: expand white boundary vertices to black pairs, relabel
    i -> m+1-i while reversing every rotation, then recontract at the
    reflected pair positions.
    """
    exp = expand_white(web)
    m = exp.web.n_boundary
    mirrored = _mirror_all_black(exp.web)
    return contract_pairs(mirrored, [m - p for p in exp.contractible])


# --- JSON forms -------------------------------------------------------------

def matching_to_json(m: Matching) -> dict:
    return {"n": m.n, "pairs": [list(p) for p in m.pairs]}


def matching_from_json(doc: dict | str) -> Matching:
    if isinstance(doc, str):
        doc = json.loads(doc)
    return Matching(int(doc["n"]), tuple((int(i), int(j)) for i, j in doc["pairs"]))


def _endpoint_name(web: Web, v: int) -> str:
    return f"b{v}" if v < web.n_boundary else f"i{v - web.n_boundary}"


def web_to_json(web: Web) -> dict:
    half_rotation = []
    for v, rot in enumerate(web.rotation):
        halves = []
        for e in rot:
            a, _ = web.edges[e]
            halves.append(2 * e if v == a else 2 * e + 1)
        half_rotation.append(halves)
    return {
        "boundary": [{"color": c} for c in web.boundary_colors],
        "internal_count": len(web.internal_colors),
        "internal_colors": list(web.internal_colors),
        "edges": [[_endpoint_name(web, a), _endpoint_name(web, b)] for a, b in web.edges],
        "rotation": half_rotation,
    }


def web_from_json(doc: dict | str) -> Web:
    if isinstance(doc, str):
        doc = json.loads(doc)
    boundary_colors = tuple(item["color"] for item in doc["boundary"])
    internal_colors = tuple(doc["internal_colors"])
    if len(internal_colors) != int(doc["internal_count"]):
        raise WebStructureError("internal_count disagrees with internal_colors")
    b = len(boundary_colors)

    def endpoint(name: str) -> int:
        kind, idx = name[0], int(name[1:])
        if kind == "b":
            if not 0 <= idx < b:
                raise WebStructureError(f"unknown boundary vertex {name}")
            return idx
        if kind == "i":
            if not 0 <= idx < len(internal_colors):
                raise WebStructureError(f"unknown internal vertex {name}")
            return b + idx
        raise WebStructureError(f"bad endpoint {name!r}")

    edges = tuple((endpoint(x), endpoint(y)) for x, y in doc["edges"])
    rotation = []
    for v, halves in enumerate(doc["rotation"]):
        rot = []
        for h in halves:
            e, side = divmod(int(h), 2)
            if not 0 <= e < len(edges):
                raise WebStructureError(f"half-edge {h} references unknown edge")
            if edges[e][side] != v:
                raise WebStructureError(f"half-edge {h} does not sit at vertex {v}")
            rot.append(e)
        rotation.append(tuple(rot))
    web = Web(boundary_colors, internal_colors, edges, tuple(rotation))
    _check_structure(web)
    return web
