"""Curve words on a planar surface model.

A curve is a cyclic word of tube traversals and sphere arcs.  The sphere
minus the feet is two disks (front and back); every sphere arc is a chord
of one of them, so exact disjointness is decidable by endpoint
interleaving on the boundary circle.  Tube strands run on integer tracks
and can never cross inside a tube.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .abelian import IntMatrix

FRONT = "front"
BACK = "back"

REF_TRACK = 0  # every tube's reference longitude (homology a-coordinate datum)


@dataclass(frozen=True)
class Foot:
    """One end of a tube: (tube name, +1 or -1)."""

    tube: str
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("foot sign must be +1 or -1")

    def __str__(self) -> str:
        return f"({self.tube},{'+' if self.sign > 0 else '-'})"


@dataclass(frozen=True)
class PortPos:
    """Attachment point of a tube strand on a foot's front lip."""

    foot: Foot
    track: int


@dataclass(frozen=True)
class GapPos:
    """Point on the equator in the gap following foot ``after``."""

    after: Foot
    slot: int


Pos = Union[PortPos, GapPos]


@dataclass(frozen=True)
class Thru:
    """Tube traversal. direction +1 goes from the + foot to the - foot."""

    tube: str
    direction: int
    track: int

    def __post_init__(self):
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")

    def start(self) -> PortPos:
        return PortPos(Foot(self.tube, self.direction), self.track)

    def end(self) -> PortPos:
        return PortPos(Foot(self.tube, -self.direction), self.track)


@dataclass(frozen=True)
class Arc:
    """Sphere chord in the front or back disk, directed src -> dst."""

    disk: str
    src: Pos
    dst: Pos

    def __post_init__(self):
        if self.disk not in (FRONT, BACK):
            raise ValueError("disk must be 'front' or 'back'")

    def start(self) -> Pos:
        return self.src

    def end(self) -> Pos:
        return self.dst


Step = Union[Thru, Arc]


@dataclass(frozen=True)
class CurveWord:
    name: str
    steps: tuple[Step, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError(f"curve {self.name!r} has no steps")

    def arcs(self) -> list[Arc]:
        return [s for s in self.steps if isinstance(s, Arc)]

    def thrus(self) -> list[Thru]:
        return [s for s in self.steps if isinstance(s, Thru)]

    def positions(self) -> list[Pos]:
        """Boundary-circle points used by the word (start of each step)."""
        return [s.start() for s in self.steps]

    def reversed(self) -> CurveWord:
        """Orientation reversal; the homology class negates."""
        out: list[Step] = []
        for s in reversed(self.steps):
            if isinstance(s, Thru):
                out.append(Thru(s.tube, -s.direction, s.track))
            else:
                out.append(Arc(s.disk, s.dst, s.src))
        return CurveWord(self.name, tuple(out))


# ---------------------------------------------------------------------------
# Boundary-circle order
# ---------------------------------------------------------------------------


class BoundaryOrder:
    """Total cyclic order of positions around the equator of a model.

    Ports on a + foot ascend by track, on a - foot descend (the tube glues
    its two lips with a reversal, which is what keeps strands parallel).
    Gap slots ascend eastward.
    """

    def __init__(self, model):
        self._foot_index = {f: i for i, f in enumerate(model.foot_order)}
        if len(self._foot_index) != len(model.foot_order):
            raise ValueError("foot_order has duplicates")

    def key(self, pos: Pos) -> tuple[int, int]:
        if isinstance(pos, PortPos):
            i = self._foot_index[pos.foot]
            sub = pos.track if pos.foot.sign > 0 else -pos.track
            return (2 * i, sub)
        if isinstance(pos, GapPos):
            return (2 * self._foot_index[pos.after] + 1, pos.slot)
        raise TypeError(pos)

    def foot_block(self, foot: Foot) -> int:
        return 2 * self._foot_index[foot]

    @staticmethod
    def _between(a, x, b) -> bool:
        """True iff x lies in the open cyclic interval (a, b)."""
        if a < b:
            return a < x < b
        return x > a or x < b

    def interleaved(self, a: tuple, b: tuple) -> bool:
        """Do chords with endpoint keys a=(a1,a2), b=(b1,b2) cross?

        Chords sharing an endpoint are pushed apart and never count.
        """
        a1, a2 = a
        b1, b2 = b
        if len({a1, a2, b1, b2}) < 4:
            return False
        return self._between(a1, b1, a2) != self._between(a1, b2, a2)

    def crossing_sign(self, a: tuple, b: tuple) -> int:
        """Signed crossing of directed chords; 0 when disjoint or touching."""
        if not self.interleaved(a, b):
            return 0
        return 1 if self._between(a[0], b[0], a[1]) else -1


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    curves: tuple[str, ...]

    def __str__(self) -> str:
        return f"[{self.kind}] {self.detail} ({', '.join(self.curves)})"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


def _check_word_syntax(word: CurveWord, model, out: list[Violation]) -> None:
    steps = word.steps
    n = len(steps)
    tubes = {t.name for t in model.tubes}
    for i, s in enumerate(steps):
        nxt = steps[(i + 1) % n]
        if isinstance(s, Thru) and s.tube not in tubes:
            out.append(Violation("unknown-tube", f"{s.tube}", (word.name,)))
            return
        if s.end() != nxt.start():
            out.append(
                Violation(
                    "disconnected",
                    f"step {i} ends at {s.end()} but step {(i + 1) % n} "
                    f"starts at {nxt.start()}",
                    (word.name,),
                )
            )
            return
        if isinstance(s, Arc):
            if s.src == s.dst:
                out.append(Violation("degenerate-arc", f"step {i}", (word.name,)))
                return
            for p in (s.src, s.dst):
                if isinstance(p, PortPos) and s.disk != FRONT:
                    out.append(
                        Violation(
                            "back-port",
                            f"arc touches port {p} from the back disk",
                            (word.name,),
                        )
                    )
                    return
        if isinstance(s, Arc) and isinstance(nxt, Arc):
            if not isinstance(s.dst, GapPos):
                out.append(
                    Violation(
                        "arc-chain",
                        f"consecutive arcs must meet at a gap point (step {i})",
                        (word.name,),
                    )
                )
                return
            if s.disk == nxt.disk:
                out.append(
                    Violation(
                        "no-disk-change",
                        f"consecutive arcs share disk {s.disk} at step {i}",
                        (word.name,),
                    )
                )
                return
        if isinstance(s, Thru) and isinstance(nxt, Thru):
            out.append(
                Violation("thru-chain", f"steps {i},{i + 1} both traversals", (word.name,))
            )
            return


def validate_simple_disjoint(system: Iterable[CurveWord], model) -> ValidationReport:
    """Accept iff every curve is simple and the system is pairwise disjoint."""
    words = list(system)
    out: list[Violation] = []
    order = BoundaryOrder(model)
    for w in words:
        _check_word_syntax(w, model, out)
    if out:
        return ValidationReport(tuple(out))

    seen: dict[tuple, tuple[str, Pos]] = {}
    for w in words:
        for pos in w.positions():
            k = order.key(pos)
            if k in seen:
                other = seen[k][0]
                out.append(
                    Violation(
                        "position-collision",
                        f"{pos} used twice",
                        tuple(sorted({w.name, other})),
                    )
                )
            else:
                seen[k] = (w.name, pos)

    keyed = []
    for w in words:
        for a in w.arcs():
            keyed.append((w.name, a.disk, (order.key(a.src), order.key(a.dst))))
    for i in range(len(keyed)):
        for j in range(i + 1, len(keyed)):
            ni, di, ki = keyed[i]
            nj, dj, kj = keyed[j]
            if di != dj:
                continue
            if order.interleaved(ki, kj):
                out.append(
                    Violation(
                        "interleaving",
                        f"{di} chords {ki} and {kj} cross",
                        tuple(sorted({ni, nj})),
                    )
                )
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# Homology
# ---------------------------------------------------------------------------


def _reference_chord(order: BoundaryOrder, tube: str) -> tuple:
    src = PortPos(Foot(tube, -1), REF_TRACK)
    dst = PortPos(Foot(tube, 1), REF_TRACK)
    return (order.key(src), order.key(dst))


def homology_class(word: CurveWord, model) -> tuple[int, ...]:
    """Class in the basis (a_1, b_1, ..., a_G, b_G) fixed by model.tubes.

    b_t counts signed traversals of tube t; a_t counts signed crossings
    with the reference longitude of t (its chord at track 0).
    """
    order = BoundaryOrder(model)
    coeffs: list[int] = []
    front_arcs = [
        (order.key(a.src), order.key(a.dst)) for a in word.arcs() if a.disk == FRONT
    ]
    for t in model.tubes:
        a_t = 0
        ref = _reference_chord(order, t.name)
        for chord in front_arcs:
            a_t -= order.crossing_sign(chord, ref)
        b_t = sum(s.direction for s in word.thrus() if s.tube == t.name)
        coeffs.extend((a_t, b_t))
    return tuple(coeffs)


def algebraic_intersection(c1: CurveWord, c2: CurveWord, model) -> int:
    """Symplectic pairing of the classes: <a_t, b_t> = +1."""
    v = homology_class(c1, model)
    w = homology_class(c2, model)
    total = 0
    for t in range(len(v) // 2):
        total += v[2 * t] * w[2 * t + 1] - v[2 * t + 1] * w[2 * t]
    return total


def class_matrix(system: Iterable[CurveWord], model) -> IntMatrix:
    """2G x n matrix whose columns are the homology classes."""
    cols = [list(homology_class(w, model)) for w in system]
    return IntMatrix.from_columns(2 * model.genus, cols)
