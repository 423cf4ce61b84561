"""Embedded planar graphs: rotation systems, faces, disks, splits, stellation.

Vertices are integer ids (not necessarily contiguous — subgraphs keep their
parent's ids).  A graph is given by a clockwise rotation system plus the outer
facial circuit listed counter-clockwise.  Faces are traced purely
combinatorially; "inside" of a cycle is decided by face reachability in the
dual, never by coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class NonPlanarEmbedding(Exception):
    """Rotation system does not describe a genus-0 embedding."""


class NotAChord(Exception):
    pass


class NotATriangulation(Exception):
    pass


class NotWTriangulation(Exception):
    pass


class ChordConditionViolated(Exception):
    pass


class PreconditionViolated(Exception):
    pass


Edge = frozenset


def edge(u: int, v: int) -> frozenset:
    return frozenset((u, v))


def cyclic_eq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Directed cyclic equality of two circuits."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    n = len(a)
    bb = list(b) + list(b)
    first = a[0]
    for i in range(n):
        if bb[i] == first and bb[i : i + n] == list(a):
            return True
    return False


# ---------------------------------------------------------------------------
# Core graph type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanarGraph:
    """Embedded planar graph: CW rotations + CCW outer circuit."""

    rotation: dict[int, tuple[int, ...]]
    outer: tuple[int, ...]

    # -- basic accessors ----------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.rotation))

    @property
    def n(self) -> int:
        return len(self.rotation)

    @cached_property
    def edges(self) -> frozenset:
        out = set()
        for u, nbrs in self.rotation.items():
            for v in nbrs:
                out.add(edge(u, v))
        return frozenset(out)

    @cached_property
    def adj(self) -> dict[int, frozenset]:
        return {u: frozenset(nbrs) for u, nbrs in self.rotation.items()}

    @cached_property
    def _pos(self) -> dict[int, dict[int, int]]:
        return {
            u: {v: i for i, v in enumerate(nbrs)}
            for u, nbrs in self.rotation.items()
        }

    def next_cw(self, u: int, v: int) -> int:
        """Neighbor after v in the CW rotation of u."""
        rot = self.rotation[u]
        return rot[(self._pos[u][v] + 1) % len(rot)]

    def prev_cw(self, u: int, v: int) -> int:
        rot = self.rotation[u]
        return rot[(self._pos[u][v] - 1) % len(rot)]

    # -- faces ---------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return trace_faces(self)

    @cached_property
    def outer_index(self) -> int:
        for i, f in enumerate(self.faces):
            if cyclic_eq(f, self.outer):
                return i
        raise NonPlanarEmbedding("outer_face is not a traced facial circuit")

    @cached_property
    def interior_faces(self) -> tuple[tuple[int, ...], ...]:
        oi = self.outer_index
        return tuple(f for i, f in enumerate(self.faces) if i != oi)

    @cached_property
    def face_sets(self) -> frozenset:
        return frozenset(frozenset(f) for f in self.interior_faces)

    @cached_property
    def outer_set(self) -> frozenset:
        return frozenset(self.outer)

    @cached_property
    def outer_edges(self) -> frozenset:
        o = self.outer
        return frozenset(edge(o[i], o[(i + 1) % len(o)]) for i in range(len(o)))

    def interior_edges(self) -> frozenset:
        return self.edges - self.outer_edges

    def is_interior_vertex(self, v: int) -> bool:
        return v not in self.outer_set

    def validate(self) -> None:
        """Symmetry, simplicity, Euler formula, outer-circuit membership."""
        for u, nbrs in self.rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise NonPlanarEmbedding(f"duplicate neighbor in rotation of {u}")
            for v in nbrs:
                if v == u:
                    raise NonPlanarEmbedding(f"loop at {u}")
                if v not in self.rotation or u not in self.rotation[v]:
                    raise NonPlanarEmbedding(
                        f"rotation asymmetry between {u} and {v}"
                    )
        self.faces  # traces and checks Euler
        self.outer_index

    # -- derived structure ---------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def outer_path_ccw(self, a: int, b: int) -> tuple[int, ...]:
        """CCW outer path from a to b, inclusive."""
        o = self.outer
        i = o.index(a)
        path = [a]
        while path[-1] != b:
            i = (i + 1) % len(o)
            path.append(o[i])
            if len(path) > len(o) + 1:
                raise ValueError("b not on outer face")
        return tuple(path)


def trace_faces(g: PlanarGraph) -> tuple[tuple[int, ...], ...]:
    """All facial circuits via next-edge walking; checks Euler's formula.

    The walk rule (next neighbor = CW-predecessor of the incoming vertex)
    traces the outer face counter-clockwise and interior faces clockwise,
    matching the CCW convention for ``outer``.
    """
    for u, nbrs in g.rotation.items():
        for v in nbrs:
            if v not in g.rotation or u not in g.rotation[v]:
                raise NonPlanarEmbedding(f"rotation asymmetry between {u} and {v}")
    seen: set[tuple[int, int]] = set()
    faces: list[tuple[int, ...]] = []
    for u0 in g.rotation:
        for v0 in g.rotation[u0]:
            if (u0, v0) in seen:
                continue
            circuit = []
            u, v = u0, v0
            while (u, v) not in seen:
                seen.add((u, v))
                circuit.append(u)
                u, v = v, g.prev_cw(v, u)
            faces.append(tuple(circuit))
    n = g.n
    m = sum(len(nbrs) for nbrs in g.rotation.values()) // 2
    f = len(faces)
    if n - m + f != 2:
        raise NonPlanarEmbedding(
            f"Euler check failed: V={n} E={m} F={f} (V-E+F={n - m + f})"
        )
    return tuple(faces)


# ---------------------------------------------------------------------------
# Regions and disk subgraphs
# ---------------------------------------------------------------------------


def _face_edge_index(g: PlanarGraph) -> dict[frozenset, list[int]]:
    idx: dict[frozenset, list[int]] = {}
    for fi, f in enumerate(g.faces):
        for i in range(len(f)):
            idx.setdefault(edge(f[i], f[(i + 1) % len(f)]), []).append(fi)
    return idx


def region_inside_cycle(
    g: PlanarGraph, cycle: Sequence[int]
) -> tuple[frozenset, tuple[int, ...]]:
    """(strictly inside vertices, inside face indices) of a simple cycle.

    Inside = faces not reachable from the outer face in the dual without
    crossing a cycle edge.
    """
    cyc_edges = {edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    for e in cyc_edges:
        if e not in g.edges:
            raise ValueError(f"cycle edge {sorted(e)} not in graph")
    fe = _face_edge_index(g)
    adj: dict[int, set[int]] = {i: set() for i in range(len(g.faces))}
    for e, fis in fe.items():
        if e in cyc_edges:
            continue
        for a in fis:
            for b in fis:
                if a != b:
                    adj[a].add(b)
    outside = set()
    stack = [g.outer_index]
    while stack:
        x = stack.pop()
        if x in outside:
            continue
        outside.add(x)
        stack.extend(adj[x] - outside)
    inside_faces = tuple(i for i in range(len(g.faces)) if i not in outside)
    cyc_set = set(cycle)
    inner = set()
    for fi in inside_faces:
        inner.update(g.faces[fi])
    return frozenset(inner - cyc_set), inside_faces


def disk_subgraph(g: PlanarGraph, cycle: Sequence[int]) -> PlanarGraph:
    """Closed disk bounded by a simple cycle: the cycle plus everything inside.

    The returned graph keeps parent vertex ids and inherits the embedding; its
    outer circuit is the cycle in the orientation traced by the inherited
    rotation system.
    """
    inner, inside_faces = region_inside_cycle(g, cycle)
    cyc_set = set(cycle)
    keep = inner | cyc_set
    cyc_edges = {edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    keep_edges = set(cyc_edges)
    for fi in inside_faces:
        f = g.faces[fi]
        for i in range(len(f)):
            keep_edges.add(edge(f[i], f[(i + 1) % len(f)]))
    rot = {}
    for v in keep:
        nbrs = tuple(u for u in g.rotation[v] if edge(u, v) in keep_edges)
        rot[v] = nbrs
    inside_circuits = {g.faces[fi] for fi in inside_faces}
    sub = PlanarGraph(rot, tuple(cycle))
    outer_circ = None
    for f in trace_faces(sub):
        if frozenset(f) == frozenset(cyc_set) and len(f) == len(cycle):
            if not any(cyclic_eq(f, c) for c in inside_circuits):
                outer_circ = f
                break
    if outer_circ is None:
        raise ValueError("could not identify outer circuit of disk subgraph")
    sub = PlanarGraph(rot, outer_circ)
    sub.validate()
    return sub


# ---------------------------------------------------------------------------
# Triangulated disks, W-triangulations, separating triangles
# ---------------------------------------------------------------------------


def is_triangulated_disk(g: PlanarGraph) -> tuple[bool, str]:
    if len(set(g.outer)) != len(g.outer) or len(g.outer) < 3:
        return False, "outer face is not a simple cycle"
    for f in g.interior_faces:
        if len(f) != 3:
            return False, f"non-triangular interior face {f}"
    return True, ""


def triangles(g: PlanarGraph) -> list[tuple[int, int, int]]:
    """All 3-cliques (sorted triples) via edge/common-neighbor enumeration."""
    out = []
    adj = g.adj
    for e in g.edges:
        u, v = sorted(e)
        small, big = (u, v) if len(adj[u]) <= len(adj[v]) else (v, u)
        for w in adj[small]:
            if w > v and w in adj[big] and w in adj[small]:
                out.append((u, v, w))
    return sorted(set(out))


def find_separating_triangles(g: PlanarGraph) -> list[tuple[tuple[int, int, int], int]]:
    """Separating triangles with enclosed-vertex counts.

    Sorted by (count, triple): the first entry is the inclusion-wise minimal
    one under the fewest-enclosed-vertices order with lexicographic ties.
    """
    face_sets = g.face_sets
    outer_set = g.outer_set
    out = []
    for t in triangles(g):
        ts = frozenset(t)
        if ts in face_sets:
            continue
        if len(g.outer) == 3 and ts == outer_set:
            continue
        inner, _ = region_inside_cycle(g, t)
        outside = set(g.vertices) - set(t) - inner
        if inner and outside:
            out.append((t, len(inner)))
    out.sort(key=lambda p: (p[1], p[0]))
    return out


def is_w_triangulation(g: PlanarGraph) -> tuple[bool, str]:
    ok, why = is_triangulated_disk(g)
    if not ok:
        return False, why
    sep = find_separating_triangles(g)
    if sep:
        return False, f"separating triangle {sep[0][0]}"
    return True, ""


def is_triangulation(g: PlanarGraph) -> bool:
    ok, _ = is_triangulated_disk(g)
    return ok and len(g.outer) == 3


# ---------------------------------------------------------------------------
# Corner frames and the chord condition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CornerFrame:
    """Corner designation (A, B, C) with the three boundary paths and F."""

    A: int
    B: int
    C: int
    p_ab: tuple[int, ...]
    p_bc: tuple[int, ...]
    p_ca: tuple[int, ...]
    F: tuple[tuple[int, int], ...] = ()

    @property
    def b_prev(self) -> int:
        """b_{s-1}: the P_BC vertex just before C."""
        return self.p_bc[-2]

    @property
    def c2(self) -> int:
        """c_2: the P_CA vertex just after C."""
        return self.p_ca[1]

    def special(self) -> tuple[int, int] | None:
        return self.F[0] if self.F else None

    def f_kind(self) -> str:
        """'' | 'c2' | 'b' : which outer edge at C the special edge is."""
        if not self.F:
            return ""
        e = edge(*self.F[0])
        if e == edge(self.C, self.c2):
            return "c2"
        if e == edge(self.C, self.b_prev):
            return "b"
        raise ValueError(f"special edge {self.F[0]} not incident to corner C")


def make_frame(
    g: PlanarGraph, a: int, b: int, c: int, F: Iterable[tuple[int, int]] = ()
) -> CornerFrame:
    p_ab = g.outer_path_ccw(a, b)
    p_bc = g.outer_path_ccw(b, c)
    p_ca = g.outer_path_ccw(c, a)
    if len(p_ab) + len(p_bc) + len(p_ca) - 3 != len(g.outer):
        raise ValueError("corners do not partition the outer face (CCW order?)")
    fr = CornerFrame(a, b, c, p_ab, p_bc, p_ca, tuple(tuple(e) for e in F))
    fr.f_kind()
    return fr


def check_chord_condition(
    g: PlanarGraph, frame: CornerFrame
) -> tuple[bool, tuple[int, int] | None]:
    """True iff no interior edge has both ends on one boundary path."""
    paths = (set(frame.p_ab), set(frame.p_bc), set(frame.p_ca))
    for e in g.interior_edges():
        u, v = sorted(e)
        for p in paths:
            if u in p and v in p:
                return False, (u, v)
    return True, None


def find_valid_corners(
    g: PlanarGraph,
) -> tuple[int, int, int] | None:
    """First (lexicographic) corner triple satisfying the chord condition."""
    o = g.outer
    k = len(o)
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                fr = make_frame(g, o[i], o[j], o[l])
                ok, _ = check_chord_condition(g, fr)
                if ok:
                    return o[i], o[j], o[l]
    return None


# ---------------------------------------------------------------------------
# Reversal, stellation, splits
# ---------------------------------------------------------------------------


def reverse_embedding(g: PlanarGraph) -> PlanarGraph:
    """Reverse all rotations; keep the same outer face (re-oriented)."""
    rot = {u: tuple(reversed(nbrs)) for u, nbrs in g.rotation.items()}
    outer = (g.outer[0],) + tuple(reversed(g.outer[1:]))
    return PlanarGraph(rot, outer)


def split_at_chord(
    g: PlanarGraph, chord: tuple[int, int]
) -> tuple[PlanarGraph, PlanarGraph]:
    """Split a disk along a chord; parts keep parent ids and share the chord.

    The first part is bounded by the CCW outer path u->v plus the chord, the
    second by the CCW path v->u plus the chord.
    """
    u, v = chord
    e = edge(u, v)
    if e not in g.edges:
        raise NotAChord(f"{chord} is not an edge")
    if e in g.outer_edges or u not in g.outer_set or v not in g.outer_set:
        raise NotAChord(f"{chord} is not a chord")
    cyc1 = g.outer_path_ccw(u, v)
    cyc2 = g.outer_path_ccw(v, u)
    return disk_subgraph(g, cyc1), disk_subgraph(g, cyc2)


def stellate_face(g: PlanarGraph, face: Sequence[int], new_id: int) -> PlanarGraph:
    """Insert a vertex inside a facial circuit and join it to the distinct
    vertices of the circuit (first occurrence used for rotation insertion)."""
    circuit = list(face)
    distinct: list[int] = []
    for x in circuit:
        if x not in distinct:
            distinct.append(x)
    rot = {u: list(nbrs) for u, nbrs in g.rotation.items()}
    n = len(circuit)
    for u in distinct:
        i = circuit.index(u)
        p = circuit[(i - 1) % n]
        q = circuit[(i + 1) % n]
        # Walking p->u->q: by the trace rule q = prev_cw(u, p); inserting the
        # new vertex between q and p in the CW list splits this corner.
        pos_p = rot[u].index(p)
        rot[u].insert(pos_p, new_id)
    rot[new_id] = list(reversed(distinct))
    out = PlanarGraph({k: tuple(v) for k, v in rot.items()}, g.outer)
    return out


def stellate(
    g: PlanarGraph, include_outer: bool = True
) -> tuple[PlanarGraph, dict[int, tuple[int, ...]]]:
    """Stellate every non-triangular face (optionally the outer one too).

    Returns the new graph plus a map new-vertex -> host facial circuit.  If
    the outer face is stellated, the new outer face is one of the created
    triangles at the old outer circuit.
    """
    added: dict[int, tuple[int, ...]] = {}
    cur = g
    next_id = max(g.rotation) + 1
    oi = cur.outer_index
    targets = []
    for i, f in enumerate(cur.faces):
        if len(f) == 3 and len(set(f)) == 3:
            continue
        if i == oi and not include_outer:
            continue
        targets.append((i == oi, f))
    new_outer = None
    for is_outer, f in targets:
        cur = stellate_face(cur, f, next_id)
        added[next_id] = tuple(f)
        if is_outer:
            new_outer = (f[1], f[0], next_id)
        next_id += 1
    if new_outer is not None:
        # Old outer circuit f was CCW; the triangle (f0, f1, v) is a face of
        # the new graph; orient it as traced.
        rebased = PlanarGraph(cur.rotation, new_outer)
        got = None
        for c in trace_faces(rebased):
            if frozenset(c) == frozenset(new_outer) and len(c) == 3:
                got = c
        if got is None:
            raise NonPlanarEmbedding("stellation lost the outer face")
        # Two circuits on the same triangle exist (the face and its mirror);
        # pick the one that is NOT an interior face of the rest.
        inner, _ = region_inside_cycle(rebased, got)
        if len(inner) != rebased.n - 3:
            got = (got[0],) + tuple(reversed(got[1:]))
        cur = PlanarGraph(cur.rotation, got)
    cur.validate()
    return cur, added


def triangulate_by_stellation(
    g: PlanarGraph, rounds: int = 3
) -> tuple[PlanarGraph, frozenset]:
    """Repeatedly stellate (outer face included) until triangulated.

    Returns the triangulation and the set of added vertex ids.
    """
    cur = g
    added: set[int] = set()
    for _ in range(rounds):
        if is_triangulation(cur):
            break
        cur, new = stellate(cur, include_outer=True)
        added.update(new)
    if not is_triangulation(cur):
        raise NotATriangulation("graph not triangulated after stellation rounds")
    return cur, frozenset(added)


# ---------------------------------------------------------------------------
# Case-3 decomposition (fan split at a chordless corner C)
# ---------------------------------------------------------------------------


@dataclass
class ChainBlock:
    """One block of the fan-complement chain between consecutive anchors."""

    t_lo: int
    t_hi: int
    graph: PlanarGraph | None  # None for a bare edge block
    corners: tuple[int, int, int] | None  # (A_i, B_i, C_i) when non-trivial


@dataclass
class Case3Data:
    fan: tuple[int, ...]  # u_1..u_q, CW neighbors of C from b_{s-1} to c_2
    j: int  # 1-based index of u_j
    ts: tuple[int, ...]  # t_1..t_x, neighbors of u_j on P_{c_2 A} in path order
    g_r: PlanarGraph
    corners_r: tuple[int, int, int]
    special_r: tuple[int, int]  # (u_1, u_2)
    g_0: PlanarGraph | None  # None when G_0 = {c_2} (j = q-1)
    corners_0: tuple[int, int, int] | None
    special_0: tuple[int, int] | None  # (u_{j+1}, u_{j+2})
    blocks: list[ChainBlock] = field(default_factory=list)
    nbr_path: tuple[int, ...] = ()  # u_j's neighbors CCW from u_{j+1} to t_x


def corner_fan(g: PlanarGraph, frame: CornerFrame) -> tuple[int, ...]:
    """Neighbors of C in CW order starting at b_{s-1}, ending at c_2."""
    c = frame.C
    rot = g.rotation[c]
    i = rot.index(frame.b_prev)
    fan = tuple(rot[(i + k) % len(rot)] for k in range(len(rot)))
    if fan[-1] != frame.c2:
        raise PreconditionViolated("rotation at C does not end at c_2")
    return fan


def pick_fan_j(g: PlanarGraph, frame: CornerFrame, min_j: int = 1) -> int:
    """Minimal j (1-based, j <= q-1, j >= min_j) such that u_j has an interior
    edge to P_CA - {C}."""
    fan = corner_fan(g, frame)
    pca = set(frame.p_ca) - {frame.C}
    interior = g.interior_edges()
    for j in range(min_j, len(fan)):
        u = fan[j - 1]
        for w in g.adj[u]:
            if w in pca and edge(u, w) in interior:
                return j
    raise PreconditionViolated("no fan vertex with an interior P_CA neighbor")


def _fan_arc(g: PlanarGraph, center: int, a: int, b: int, avoid: set[int]) -> tuple[int, ...]:
    """Neighbors of center strictly between a and b in rotation, choosing the
    arc that avoids ``avoid``; returned walking from a to b."""
    rot = g.rotation[center]
    n = len(rot)
    ia = rot.index(a)
    fwd = []
    k = (ia + 1) % n
    while rot[k] != b:
        fwd.append(rot[k])
        k = (k + 1) % n
    if not any(w in avoid for w in fwd):
        return tuple(fwd)
    bwd = []
    k = (ia - 1) % n
    while rot[k] != b:
        bwd.append(rot[k])
        k = (k - 1) % n
    if any(w in avoid for w in bwd):
        raise PreconditionViolated("both rotation arcs hit avoided vertices")
    return tuple(bwd)


def case3_decompose(
    g: PlanarGraph, frame: CornerFrame, use_j_prime: bool = False
) -> Case3Data:
    """The chordless-corner fan split.

    Requires: C not incident to a chord (unless ``use_j_prime``) and
    deg(C) >= 3.  Returns the fan, j, the anchors t_1..t_x, the right graph
    G_R with corners and special edge (u_1, u_2), the left graph G_0 with its
    corners and special edge, and the chain blocks of G_Q.
    """
    A, B, C = frame.A, frame.B, frame.C
    interior = g.interior_edges()
    for w in g.adj[C]:
        if w in g.outer_set and edge(C, w) in interior:
            if not use_j_prime:
                raise PreconditionViolated(f"chord ({C},{w}) at C")
    if g.degree(C) < 3:
        raise PreconditionViolated("deg(C) < 3")
    fan = corner_fan(g, frame)
    q = len(fan)
    j = pick_fan_j(g, frame, min_j=2 if use_j_prime else 1)
    if j == 1 and not use_j_prime:
        raise PreconditionViolated("j = 1: chord from b_{s-1} to P_CA (case 3b)")
    u_j = fan[j - 1]
    pca_order = {v: i for i, v in enumerate(frame.p_ca)}
    ts = tuple(
        sorted(
            (w for w in g.adj[u_j] if w in pca_order and w != C),
            key=lambda w: pca_order[w],
        )
    )
    t1, tx = ts[0], ts[-1]

    # G_R: A ..P_AB.. B ..P_BC.. u_1, u_2, .., u_j, t_x ..P_CA.. A
    cyc_r = (
        list(frame.p_ab)
        + list(g.outer_path_ccw(B, fan[0]))[1:]
        + list(fan[1:j])
        + list(g.outer_path_ccw(tx, A))[:-1]
    )
    g_r = disk_subgraph(g, cyc_r)
    c_r = fan[0] if fan[0] != B else fan[1]
    corners_r = (A, B, c_r)
    special_r = (fan[0], fan[1])

    # G_0: bounded by P_{c_2 t_1} + fan arc of u_j (t_1 .. u_{j+1}) + u_{j+1}..u_q
    if j == q - 1 and t1 == fan[q - 1]:
        g_0 = None
        corners_0 = None
        special_0 = None
    else:
        arc = _fan_arc(g, u_j, t1, fan[j], avoid=set(frame.p_ca) | {C})
        cyc_0 = (
            list(g.outer_path_ccw(frame.c2, t1))
            + list(arc)
            + [x for x in reversed(fan[j : q - 1])]
        )
        g_0 = disk_subgraph(g, cyc_0)
        corners_0 = (frame.c2, t1, fan[j])  # (A_0, B_0, C_0) = (c_2, t_1, u_{j+1})
        special_0 = (fan[j], fan[j + 1])

    # Chain blocks of G_Q between consecutive anchors.
    blocks: list[ChainBlock] = []
    for i in range(len(ts) - 1):
        lo, hi = ts[i], ts[i + 1]
        arc = _fan_arc(g, u_j, lo, hi, avoid=set(frame.p_ca) | {C})
        if not arc:
            blocks.append(ChainBlock(lo, hi, None, None))
            continue
        path = g.outer_path_ccw(lo, hi)
        cyc = list(path) + [x for x in reversed(arc)]
        sub = disk_subgraph(g, cyc)
        corners = (hi, lo, path[1])  # (A_i, B_i, C_i); C_i on P_CA
        blocks.append(ChainBlock(lo, hi, sub, corners))

    # Neighbor path of u_j CCW from u_{j+1} to t_x (consecutive pairs are edges).
    nbr_items: list[int] = [fan[j]]
    for i in range(len(ts) - 1):
        lo, hi = ts[i], ts[i + 1]
        arc = _fan_arc(g, u_j, lo, hi, avoid=set(frame.p_ca) | {C})
        if i == 0 and t1 != fan[j]:
            pre = _fan_arc(g, u_j, t1, fan[j], avoid=set(frame.p_ca) | {C})
            nbr_items.extend(reversed(pre))
            nbr_items.append(t1)
        elif i == 0:
            pass
        nbr_items.extend(arc)
        nbr_items.append(hi)
    if len(ts) == 1 and t1 != fan[j]:
        pre = _fan_arc(g, u_j, t1, fan[j], avoid=set(frame.p_ca) | {C})
        nbr_items.extend(reversed(pre))
        nbr_items.append(t1)

    return Case3Data(
        fan=fan,
        j=j,
        ts=ts,
        g_r=g_r,
        corners_r=corners_r,
        special_r=special_r,
        g_0=g_0,
        corners_0=corners_0,
        special_0=special_0,
        blocks=blocks,
        nbr_path=tuple(nbr_items),
    )
