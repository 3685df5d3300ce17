"""The planar surface model and combinatorial surgery.

A genus-G surface is presented as a sphere with 2G slit feet on its
equator joined in pairs by tubes.  Realizing a disjoint curve system
produces an oriented combinatorial map (darts with a rotation system);
cutting along the system is a union-find over its faces.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import curves as _curves
from .abelian import is_primitive_span, rank
from .curves import (
    Arc,
    BoundaryOrder,
    CurveWord,
    Foot,
    FRONT,
    GapPos,
    PortPos,
    Thru,
    ValidationReport,
    validate_simple_disjoint,
)

SEAM_TRACK = 10**9  # phantom strand making empty tube walls into disks


@dataclass(frozen=True)
class Tube:
    """A handle of the model; cluster = (sheet j, handle k) on spun models."""

    name: str
    cluster: tuple[int, int] | None = None


@dataclass(frozen=True)
class PlanarModel:
    genus: int
    tubes: tuple[Tube, ...]
    foot_order: tuple[Foot, ...]

    def __post_init__(self):
        if len(self.tubes) != self.genus:
            raise ValueError("genus must equal the number of tubes")
        if len(self.foot_order) != 2 * self.genus:
            raise ValueError("foot_order must list exactly 2G feet")
        expected = {(t.name, s) for t in self.tubes for s in (1, -1)}
        got = {(f.tube, f.sign) for f in self.foot_order}
        if expected != got:
            raise ValueError("foot_order is not a permutation of all feet")

    @classmethod
    def standard(cls, handles: int, sheets: int = 1) -> PlanarModel:
        """Genus handles*sheets model, feet grouped in `handles` clusters.

        Cluster k holds tubes (j,k) for j = 1..sheets, feet ordered
        (1,+)..(sheets,+),(sheets,-)..(1,-).  Plain Heegaard models are
        sheets == 1; spun central surfaces use sheets == m+2.
        """
        if handles < 1:
            raise ValueError("genus-0 fiber splitting unsupported")
        if sheets < 1:
            raise ValueError("need at least one sheet")
        tubes = []
        feet = []
        for k in range(1, handles + 1):
            names = [cls.tube_name(j, k, sheets) for j in range(1, sheets + 1)]
            for j, nm in enumerate(names, start=1):
                tubes.append(Tube(nm, (j, k) if sheets > 1 else None))
            feet.extend(Foot(nm, 1) for nm in names)
            feet.extend(Foot(nm, -1) for nm in reversed(names))
        return cls(handles * sheets, tuple(tubes), tuple(feet))

    @staticmethod
    def tube_name(sheet: int, handle: int, sheets: int) -> str:
        return f"h{handle}" if sheets == 1 else f"h{sheet}.{handle}"

    def tube(self, name: str) -> Tube:
        for t in self.tubes:
            if t.name == name:
                return t
        raise KeyError(name)

    def tube_index(self, name: str) -> int:
        for i, t in enumerate(self.tubes):
            if t.name == name:
                return i
        raise KeyError(name)

    def foot_before(self, foot: Foot) -> Foot:
        i = self.foot_order.index(foot)
        return self.foot_order[i - 1]

    def gap_before(self, foot: Foot, slot: int) -> GapPos:
        """Point in the gap immediately west of `foot`."""
        return GapPos(self.foot_before(foot), slot)

    def gap_after(self, foot: Foot, slot: int) -> GapPos:
        return GapPos(foot, slot)

    # -- named curve families ------------------------------------------------

    def meridian(self, tube_name: str, nesting: int = 0) -> CurveWord:
        """Belt circle of a tube, drawn as a small ring around its + foot."""
        foot = Foot(tube_name, 1)
        west = self.gap_before(foot, 10**6 - nesting)  # east-hug zone
        east = self.gap_after(foot, -(10**6 - nesting))  # west-hug zone
        name = self.curve_label("μ", tube_name)
        if nesting:
            name += f"'{nesting}"
        return CurveWord(name, (Arc(FRONT, west, east), Arc(_curves.BACK, east, west)))

    def longitude(self, tube_name: str, track: int = _curves.REF_TRACK) -> CurveWord:
        name = self.curve_label("λ", tube_name)
        if track != _curves.REF_TRACK:
            name += f"'{track}"
        return CurveWord(
            name,
            (
                Thru(tube_name, 1, track),
                Arc(FRONT, PortPos(Foot(tube_name, -1), track), PortPos(Foot(tube_name, 1), track)),
            ),
        )

    def curve_label(self, symbol: str, tube_name: str) -> str:
        t = self.tube(tube_name)
        if t.cluster is None:
            return f"{symbol}_{tube_name[1:]}"
        j, k = t.cluster
        return f"{symbol}_{j}^{k}"

    def mu_family(self) -> tuple[CurveWord, ...]:
        return tuple(self.meridian(t.name) for t in self.tubes)

    def lambda_family(self) -> tuple[CurveWord, ...]:
        return tuple(self.longitude(t.name) for t in self.tubes)


# ---------------------------------------------------------------------------
# Combinatorial map
# ---------------------------------------------------------------------------


@dataclass
class CombinatorialMap:
    """Oriented map: darts with a rotation system and edge involution."""

    n_vertices: int
    n_edges: int
    n_faces: int
    face_of_dart: dict[int, int]
    reverse: dict[int, int]
    dart_head: dict[int, int]
    edge_is_curve: dict[int, str | None]  # edge id -> curve name or None
    edge_darts: dict[int, tuple[int, int]]
    vertex_is_curve: dict[int, bool]
    vertex_foot: dict[int, int | None]  # anchor vertices -> foot index
    edge_faces: dict[int, tuple[int, int]]
    curve_edge: dict[str, int]  # one representative edge per curve

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2


class RealizationError(ValueError):
    """Raised when a system cannot be embedded (it is not disjoint)."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(str(report))


def realize(model: PlanarModel, system: list[CurveWord]) -> CombinatorialMap:
    """Embed a validated disjoint system as edge cycles in an oriented map."""
    report = validate_simple_disjoint(system, model)
    if not report.ok:
        raise RealizationError(report)
    order = BoundaryOrder(model)

    # Vertices: anchors, used ports, used gap points (+ seam ports).
    vid: dict[tuple, int] = {}

    def vertex(key) -> int:
        if key not in vid:
            vid[key] = len(vid)
        return vid[key]

    ports_by_foot: dict[Foot, list[PortPos]] = {f: [] for f in model.foot_order}
    gaps_by_foot: dict[Foot, list[GapPos]] = {f: [] for f in model.foot_order}
    strands: dict[str, set[int]] = {t.name: set() for t in model.tubes}
    arc_edges: list[tuple[Arc, str]] = []

    for w in system:
        for s in w.steps:
            if isinstance(s, Thru):
                strands[s.tube].add(s.track)
            else:
                arc_edges.append((s, w.name))
                for p in (s.src, s.dst):
                    if isinstance(p, GapPos):
                        gaps_by_foot[p.after].append(p)
    for t in model.tubes:
        if not strands[t.name]:
            strands[t.name].add(SEAM_TRACK)
        for trk in strands[t.name]:
            ports_by_foot[Foot(t.name, 1)].append(PortPos(Foot(t.name, 1), trk))
            ports_by_foot[Foot(t.name, -1)].append(PortPos(Foot(t.name, -1), trk))

    for f in model.foot_order:
        ports_by_foot[f] = sorted(set(ports_by_foot[f]), key=order.key)
        gaps_by_foot[f] = sorted(set(gaps_by_foot[f]), key=order.key)

    # Edges with rotation bookkeeping.  Each vertex gets an ordered list of
    # dart slots; darts are appended per the local pictures below.
    rotations: dict[int, list[int]] = {}
    dart_head: dict[int, int] = {}
    reverse: dict[int, int] = {}
    edge_of_dart: dict[int, int] = {}
    edge_is_curve: dict[int, str | None] = {}
    edge_darts: dict[int, tuple[int, int]] = {}
    n_darts = 0
    n_edges = 0
    pending: dict[int, dict[str, int]] = {}

    def new_edge(curve: str | None) -> int:
        nonlocal n_edges
        e = n_edges
        n_edges += 1
        edge_is_curve[e] = curve
        return e

    def new_dart(edge: int, head_vertex: int) -> int:
        nonlocal n_darts
        d = n_darts
        n_darts += 1
        dart_head[d] = head_vertex
        edge_of_dart[d] = edge
        return d

    def connect(edge: int, u: int, v: int) -> tuple[int, int]:
        """Create the two darts of an edge: (u->v, v->u)."""
        d1 = new_dart(edge, v)
        d2 = new_dart(edge, u)
        reverse[d1] = d2
        reverse[d2] = d1
        edge_darts[edge] = (d1, d2)
        return d1, d2

    # Per-vertex rotation assembly: we record, for each vertex, named slots
    # in counterclockwise order and fill them as edges are created.
    # Slot layouts (ccw starting east):
    #   port:     lip_east, front_arc, lip_west, strand
    #   gap pt:   gap_east, front_arc, gap_west, back_arc
    #   anchor L: front_lip, gap_west, back_lip
    #   anchor R: gap_east, front_lip, back_lip
    slot_names = {
        "port": ("lip_east", "front_arc", "lip_west", "strand"),
        "gap": ("gap_east", "front_arc", "gap_west", "back_arc"),
        "L": ("front_lip", "gap_west", "back_lip"),
        "R": ("gap_east", "front_lip", "back_lip"),
    }
    vertex_kind: dict[int, str] = {}
    vertex_foot: dict[int, int | None] = {}
    vertex_is_curve: dict[int, bool] = {}

    def declare(key, kind, foot_index=None, on_curve=False) -> int:
        v = vertex(key)
        vertex_kind[v] = kind
        pending.setdefault(v, {})
        if foot_index is not None:
            vertex_foot[v] = foot_index
        vertex_is_curve[v] = vertex_is_curve.get(v, False) or on_curve
        return v

    def put(v: int, slot: str, dart: int) -> None:
        if slot in pending[v]:
            raise AssertionError(f"slot {slot} of vertex {v} filled twice")
        pending[v][slot] = dart

    seam_ports = {
        PortPos(Foot(t.name, s), SEAM_TRACK)
        for t in model.tubes
        for s in (1, -1)
        if SEAM_TRACK in strands[t.name]
    }

    # Declare vertices.
    for fi, f in enumerate(model.foot_order):
        declare(("L", f), "L", foot_index=fi)
        declare(("R", f), "R", foot_index=fi)
        for p in ports_by_foot[f]:
            declare(("P", p), "port", on_curve=p not in seam_ports)
        for g in gaps_by_foot[f]:
            declare(("G", g), "gap", on_curve=True)

    # Front lip chains and back lips.
    for f in model.foot_order:
        chain = [("L", f)] + [("P", p) for p in ports_by_foot[f]] + [("R", f)]
        for a, b in zip(chain, chain[1:]):
            e = new_edge(None)
            d_ab, d_ba = connect(e, vid[a], vid[b])
            # d_ab heads east (toward R)
            put(vid[a], "lip_east" if vertex_kind[vid[a]] == "port" else "front_lip", d_ab)
            put(vid[b], "lip_west" if vertex_kind[vid[b]] == "port" else "front_lip", d_ba)
        e = new_edge(None)
        d_lr, d_rl = connect(e, vid[("L", f)], vid[("R", f)])
        put(vid[("L", f)], "back_lip", d_lr)
        put(vid[("R", f)], "back_lip", d_rl)

    # Gap chains (after each foot comes the next foot's L anchor).
    nf = len(model.foot_order)
    for i, f in enumerate(model.foot_order):
        nxt = model.foot_order[(i + 1) % nf]
        chain = [("R", f)] + [("G", g) for g in gaps_by_foot[f]] + [("L", nxt)]
        for a, b in zip(chain, chain[1:]):
            e = new_edge(None)
            d_ab, d_ba = connect(e, vid[a], vid[b])
            put(vid[a], "gap_east", d_ab)
            put(vid[b], "gap_west", d_ba)

    # Strands (curve strands carry their curve name; seams do not).
    strand_curve: dict[tuple[str, int], str] = {}
    for w in system:
        for s in w.steps:
            if isinstance(s, Thru):
                strand_curve[(s.tube, s.track)] = w.name
    for t in model.tubes:
        for trk in sorted(strands[t.name]):
            cname = strand_curve.get((t.name, trk))
            e = new_edge(cname)
            pp = vid[("P", PortPos(Foot(t.name, 1), trk))]
            pm = vid[("P", PortPos(Foot(t.name, -1), trk))]
            d1, d2 = connect(e, pp, pm)
            put(pp, "strand", d1)
            put(pm, "strand", d2)

    # Curve arcs.
    for a, cname in arc_edges:
        e = new_edge(cname)
        u = vid[("P", a.src) if isinstance(a.src, PortPos) else ("G", a.src)]
        v = vid[("P", a.dst) if isinstance(a.dst, PortPos) else ("G", a.dst)]
        d_uv, d_vu = connect(e, u, v)
        slot = "front_arc" if a.disk == FRONT else "back_arc"
        put(u, slot, d_uv)
        put(v, slot, d_vu)

    # Assemble rotations.
    for v, slots in pending.items():
        rot = []
        for s in slot_names[vertex_kind[v]]:
            if s in slots:
                rot.append(slots[s])
        rotations[v] = rot

    # Face tracing: next dart in face = rotation successor of reverse(d).
    succ: dict[int, int] = {}
    for v, rot in rotations.items():
        for i, d in enumerate(rot):
            succ[d] = rot[(i + 1) % len(rot)]

    face_of_dart: dict[int, int] = {}
    n_faces = 0
    for d0 in range(n_darts):
        if d0 in face_of_dart:
            continue
        f = n_faces
        n_faces += 1
        d = d0
        while True:
            face_of_dart[d] = f
            d = succ[reverse[d]]
            if d == d0:
                break

    edge_faces = {
        e: (face_of_dart[d1], face_of_dart[d2]) for e, (d1, d2) in edge_darts.items()
    }
    curve_edge: dict[str, int] = {}
    for e, cname in edge_is_curve.items():
        if cname is not None and cname not in curve_edge:
            curve_edge[cname] = e

    for w in system:
        if w.name not in curve_edge:
            raise AssertionError(f"curve {w.name} produced no edges")

    return CombinatorialMap(
        n_vertices=len(vid),
        n_edges=n_edges,
        n_faces=n_faces,
        face_of_dart=face_of_dart,
        reverse=reverse,
        dart_head=dart_head,
        edge_is_curve=edge_is_curve,
        edge_darts=edge_darts,
        vertex_is_curve=vertex_is_curve,
        vertex_foot=vertex_foot,
        edge_faces=edge_faces,
        curve_edge=curve_edge,
    )


# ---------------------------------------------------------------------------
# Cutting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CutComponent:
    euler_characteristic: int
    boundary_circles: int

    @property
    def capped_euler_characteristic(self) -> int:
        return self.euler_characteristic + self.boundary_circles


@dataclass(frozen=True)
class CutResult:
    components: tuple[CutComponent, ...]

    @property
    def connected_after_capping(self) -> bool:
        return len(self.components) == 1

    @property
    def caps_to_sphere(self) -> bool:
        return (
            self.connected_after_capping
            and self.components[0].capped_euler_characteristic == 2
        )


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def cut_along_system(model: PlanarModel, system: list[CurveWord]) -> CutResult:
    """Components of the surface cut open along all curves of the system."""
    cmap = realize(model, system)
    uf = _UnionFind(cmap.n_faces)
    for e, (f1, f2) in cmap.edge_faces.items():
        if cmap.edge_is_curve[e] is None:
            uf.union(f1, f2)

    pieces = sorted({uf.find(f) for f in range(cmap.n_faces)})
    index = {p: i for i, p in enumerate(pieces)}

    chi = [0] * len(pieces)
    for f in range(cmap.n_faces):
        chi[index[uf.find(f)]] += 1
    for e, (f1, f2) in cmap.edge_faces.items():
        if cmap.edge_is_curve[e] is None:
            chi[index[uf.find(f1)]] -= 1

    # Non-curve vertices: locate via any incident dart's face.
    vertex_piece: dict[int, int] = {}
    for d, face in cmap.face_of_dart.items():
        v = cmap.dart_head[d]
        vertex_piece.setdefault(v, uf.find(face))
    for v, on_curve in cmap.vertex_is_curve.items():
        if not on_curve:
            chi[index[vertex_piece[v]]] += 1

    circles = [0] * len(pieces)
    for cname, e in cmap.curve_edge.items():
        f1, f2 = cmap.edge_faces[e]
        circles[index[uf.find(f1)]] += 1
        circles[index[uf.find(f2)]] += 1

    min_foot = [None] * len(pieces)
    for v, fi in cmap.vertex_foot.items():
        p = index[vertex_piece[v]]
        if min_foot[p] is None or fi < min_foot[p]:
            min_foot[p] = fi

    comps = sorted(
        range(len(pieces)),
        key=lambda p: (min_foot[p] if min_foot[p] is not None else 10**9, p),
    )
    return CutResult(
        tuple(CutComponent(chi[p], circles[p]) for p in comps)
    )


# ---------------------------------------------------------------------------
# Cut-system decision
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CutSystemCheck:
    ok: bool
    failures: tuple[str, ...]
    size_ok: bool
    disjoint_ok: bool
    independent_ok: bool
    sphere_ok: bool

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "cut system" if self.ok else "; ".join(self.failures)


def is_cut_system(model: PlanarModel, system: list[CurveWord]) -> CutSystemCheck:
    """Def.-style test: G disjoint simple homologically independent curves
    whose cut caps off to a single sphere."""
    failures: list[str] = []
    size_ok = len(system) == model.genus
    if not size_ok:
        failures.append(f"expected {model.genus} curves, got {len(system)}")

    report = validate_simple_disjoint(system, model)
    disjoint_ok = report.ok
    if not disjoint_ok:
        failures.append(f"not simple/disjoint: {report}")

    independent_ok = False
    sphere_ok = False
    if disjoint_ok:
        m = _curves.class_matrix(system, model)
        independent_ok = rank(m) == len(system)
        if not independent_ok:
            failures.append("homologically dependent")
        cut = cut_along_system(model, system)
        sphere_ok = size_ok and cut.caps_to_sphere
        if size_ok and not sphere_ok:
            failures.append(
                f"surgery yields {len(cut.components)} component(s), "
                f"capped chi {[c.capped_euler_characteristic for c in cut.components]}"
            )
    ok = size_ok and disjoint_ok and independent_ok and sphere_ok
    return CutSystemCheck(ok, tuple(failures), size_ok, disjoint_ok, independent_ok, sphere_ok)


def lagrangian_check(model: PlanarModel, system: list[CurveWord]) -> tuple[bool, str]:
    """Pairwise intersection zero, rank G, primitive span."""
    for i, c1 in enumerate(system):
        for c2 in system[i + 1 :]:
            n = _curves.algebraic_intersection(c1, c2, model)
            if n:
                return False, f"<{c1.name},{c2.name}> = {n}"
    m = _curves.class_matrix(system, model)
    if rank(m) != model.genus:
        return False, f"rank {rank(m)} != {model.genus}"
    if not is_primitive_span(m):
        return False, "span is not primitive"
    return True, "Lagrangian with primitive span"
