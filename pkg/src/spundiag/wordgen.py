"""Emitters for the standard curve words used by the catalog and generator.

A (winds, strands)-pattern around a handle is laid out as the comb form of
the torus geodesic: parallel strands on integer tracks, connections that
wrap westward around the handle via gap points.  Exact rational heights
along the geodesic fix the nesting order of all gap points, so emitted
systems are embedded by construction; the system validator re-checks
everything downstream.

Handles come in three flavors of target: a plain tube (fiber models and
2-section central surfaces), an adjacent tube pair fused by a merge curve
(spun central surfaces), and the wrap-around pair whose enclosing rings
must weave past the belted tubes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .curves import Arc, BACK, CurveWord, Foot, FRONT, GapPos, PortPos, Thru

TRACK_REF = 0
TRACK_MERGE_LOW = 1
TRACK_IMAGE = 2
TRACK_MERGE_HIGH = 10**6
TRACK_IMAGE_HIGH = 10**6 + 2  # corridor images ride above a high merge

_HUG = 10**6  # named meridians hug feet at +-(_HUG - nesting)

ZONE_WEST = 0
ZONE_MID = 1
ZONE_EAST = 2


class RoutingError(ValueError):
    """A curve system could not be routed crossing-free."""


@dataclass(frozen=True)
class _SlotKey:
    zone: int
    main: Fraction
    seq: int


class WordBuilder:
    """Two-pass gap-slot allocator.

    Emitters create gap points with symbolic sort keys; ``finalize``
    rewrites them to concrete integer slots, sorted eastward per gap.
    """

    _BASE = 10**7

    def __init__(self, model):
        self.model = model
        self._keys: dict[int, tuple[Foot, _SlotKey]] = {}
        self._seq = 0

    def gap_point(self, after: Foot, zone: int, main: Fraction) -> GapPos:
        self._seq += 1
        placeholder = self._BASE + self._seq
        self._keys[placeholder] = (after, _SlotKey(zone, Fraction(main), self._seq))
        return GapPos(after, placeholder)

    def finalize(self, words: list[CurveWord]) -> list[CurveWord]:
        per_gap: dict[Foot, list[tuple[_SlotKey, int]]] = {}
        for placeholder, (after, key) in self._keys.items():
            per_gap.setdefault(after, []).append((key, placeholder))
        slot_of: dict[int, int] = {}
        for after, entries in per_gap.items():
            entries.sort(key=lambda e: (e[0].zone, e[0].main, e[0].seq))
            west = [p for k, p in entries if k.zone == ZONE_WEST]
            mid = [p for k, p in entries if k.zone == ZONE_MID]
            east = [p for k, p in entries if k.zone == ZONE_EAST]
            for i, p in enumerate(west):
                slot_of[p] = -(_HUG - 1000) + i
            for i, p in enumerate(mid):
                slot_of[p] = i - len(mid) // 2
            for i, p in enumerate(east):
                slot_of[p] = (_HUG - 1000) - (len(east) - 1 - i)

        def fix(pos):
            if isinstance(pos, GapPos) and pos.slot >= self._BASE:
                return GapPos(pos.after, slot_of[pos.slot])
            return pos

        out = []
        for w in words:
            steps = []
            for s in w.steps:
                if isinstance(s, Arc):
                    steps.append(Arc(s.disk, fix(s.src), fix(s.dst)))
                else:
                    steps.append(s)
            out.append(CurveWord(w.name, tuple(steps)))
        return out


@dataclass(frozen=True)
class Target:
    """Where a (winds, strands)-tangle lives on the model.

    Strands run through ``tube``; winds enclose the + feet between the
    wrap anchor gap (west) and the mid anchor gap (east).  ``duck`` marks
    a wrap-around pair: front arcs leaving a wrap point dive behind the
    intervening feet through the two listed gaps.  ``corridor`` gives the
    two gaps hugging the strand tube inside a merge curve, used by pure
    strand patterns that must stay nested inside the merge.
    """

    tube: str
    m_after: Foot
    w_after: Foot
    track_base: int = TRACK_IMAGE
    duck: tuple[Foot, Foot] | None = None
    corridor: tuple[Foot, Foot] | None = None  # (plus-side gap, minus-side gap)

    def entry_foot(self) -> Foot:
        return Foot(self.tube, 1)

    def exit_foot(self) -> Foot:
        return Foot(self.tube, -1)


def plain_target(model, tube: str, track_base: int = TRACK_IMAGE) -> Target:
    plus = Foot(tube, 1)
    return Target(
        tube=tube,
        m_after=plus,
        w_after=model.foot_before(plus),
        track_base=track_base,
    )


# ---------------------------------------------------------------------------
# Geodesic comb tokens
# ---------------------------------------------------------------------------


@dataclass
class _Connection:
    src_pos: int  # global strand position of the exit
    dst_pos: int  # global strand position of the entry
    events: list[tuple[str, Fraction]]  # ('M'|'W', height in (0, 1/2))


def _port_theta(pos: int, total: int) -> Fraction:
    return Fraction(pos + 1, total + 2) * Fraction(1, 2)


def _connections(u: int, v: int, positions: list[int], total: int) -> list[_Connection]:
    """Comb connections of the closed primitive (u, v)-pattern.

    ``positions`` lists the v global strand positions used by this cable,
    in increasing order; ``total`` is the global strand count.
    """
    out = []
    for r in range(v):
        r2 = (r + u) % v
        wraps = (r + u) // v
        start = _port_theta(positions[r], total)
        end = wraps + _port_theta(positions[r2], total)
        events: list[tuple[str, Fraction]] = []
        k = 0
        while True:
            m_theta = Fraction(2 * k + 1, 2)
            w_theta = Fraction(k + 1)
            nxt = []
            if start < m_theta < end:
                nxt.append(("M", m_theta))
            if start < w_theta < end:
                nxt.append(("W", w_theta))
            if not nxt:
                break
            events.extend(nxt)
            k += 1
        events.sort(key=lambda e: e[1])
        span = end - start
        events = [
            (kind, (theta - start) / span * Fraction(1, 2)) for kind, theta in events
        ]
        out.append(_Connection(positions[r], positions[r2], events))
    return out


class _TangleEmitter:
    """Emits the arcs of one cluster tangle for one curve."""

    def __init__(self, builder: WordBuilder, target: Target, shift: Fraction):
        self.b = builder
        self.t = target
        self.shift = shift

    def m_point(self, y: Fraction) -> GapPos:
        # mid slots ascend eastward toward the minus foot (height 0 side)
        return self.b.gap_point(self.t.m_after, ZONE_MID, -(y - self.shift))

    def w_point(self, y: Fraction) -> GapPos:
        return self.b.gap_point(self.t.w_after, ZONE_MID, y - self.shift)

    def entry(self, pos_track: int) -> PortPos:
        return PortPos(self.t.entry_foot(), pos_track)

    def exit(self, pos_track: int) -> PortPos:
        return PortPos(self.t.exit_foot(), pos_track)

    def front(self, src, dst) -> list[Arc]:
        """Front arc, split behind the belted block on wrap-pair targets."""
        if self.t.duck is not None and self._is_w(dst):
            raise AssertionError("front arcs always leave, never enter, a wrap point")
        if self.t.duck is not None and self._is_w(src):
            q1_after, q2_after = self.t.duck
            wk = self._w_key(src)
            q1 = self.b.gap_point(q1_after, ZONE_MID, -wk)
            q2 = self.b.gap_point(q2_after, ZONE_MID, wk)
            return [Arc(FRONT, src, q1), Arc(BACK, q1, q2), Arc(FRONT, q2, dst)]
        return [Arc(FRONT, src, dst)]

    def _is_w(self, pos) -> bool:
        return isinstance(pos, GapPos) and pos.after == self.t.w_after

    def _w_key(self, pos: GapPos) -> Fraction:
        return self.b._keys[pos.slot][1].main

    def back(self, src, dst) -> Arc:
        return Arc(BACK, src, dst)


def _emit_connection(em: _TangleEmitter, conn: _Connection, tracks: dict[int, int]) -> list:
    """Arcs from the exit of conn.src_pos to the entry of conn.dst_pos."""
    src = em.exit(tracks[conn.src_pos])
    dst = em.entry(tracks[conn.dst_pos])
    if not conn.events:
        return [Arc(FRONT, src, dst)]
    pts = []
    for kind, y in conn.events:
        pts.append(em.m_point(y) if kind == "M" else em.w_point(y))
    arcs = []
    cur = src
    front = True  # exit arc to the first M point is a front arc
    for p, (kind, _) in zip(pts, conn.events):
        if front:
            arcs.extend(em.front(cur, p))
        else:
            arcs.append(em.back(cur, p))
        cur = p
        front = not front
    if front:
        arcs.extend(em.front(cur, dst))
    else:
        arcs.append(em.back(cur, dst))
    return arcs


def emit_closed_tangle(
    builder: WordBuilder,
    target: Target,
    winds: int,
    strands: int,
    name: str,
    shift: Fraction = Fraction(0),
) -> CurveWord:
    """Closed (winds, strands)-curve on one target; gcd must be 1."""
    u, v = winds, strands
    if u < 0 or v < 0:
        raise RoutingError("negative pattern; reverse the curve instead")
    if gcd(u, v) != 1:
        raise RoutingError(f"({u},{v}) is not primitive")
    em = _TangleEmitter(builder, target, shift)
    if v == 0:
        # A single enclosing ring.
        w = em.w_point(Fraction(1, 4))
        m = em.m_point(Fraction(1, 4))
        steps = em.front(w, m) + [em.back(m, w)]
        return CurveWord(name, tuple(steps))
    tracks = {p: target.track_base + p for p in range(v)}
    conns = _connections(u, v, list(range(v)), v)
    steps: list = []
    pos = v - 1  # start at the entry of the last strand
    for _ in range(v):
        steps.append(Thru(target.tube, 1, tracks[pos]))
        conn = next(c for c in conns if c.src_pos == pos)
        steps.extend(_emit_connection(em, conn, tracks))
        pos = conn.dst_pos
    if pos != v - 1:
        raise AssertionError("pattern did not close up")
    return CurveWord(name, tuple(steps))


def emit_closed_corridor(
    builder: WordBuilder, target: Target, strands: int, name: str, shift=Fraction(0)
) -> CurveWord:
    """Closed pure-strand curve nested inside a merge (pair targets)."""
    if strands != 1:
        raise RoutingError("closed pure-strand pattern must be a single strand")
    em = _TangleEmitter(builder, target, shift)
    if target.corridor is None:
        # Plain target: an honest longitude on the image band.
        trk = target.track_base
        return CurveWord(
            name,
            (
                Thru(target.tube, 1, trk),
                Arc(FRONT, em.exit(trk), em.entry(trk)),
            ),
        )
    plus_gap, minus_gap = target.corridor
    trk = target.track_base
    y = builder.gap_point(minus_gap, ZONE_MID, shift)
    r0 = builder.gap_point(plus_gap, ZONE_MID, shift)
    return CurveWord(
        name,
        (
            Thru(target.tube, 1, trk),
            Arc(FRONT, em.exit(trk), y),
            Arc(BACK, y, r0),
            Arc(FRONT, r0, em.entry(trk)),
        ),
    )
