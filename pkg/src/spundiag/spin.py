"""The two-step generator: central surface and the m+2 cut systems of a
multisection diagram of the m-spun of a 3-manifold.

System i consists of the window meridians (belts of the tubes with sheet
indices i..m+i-1), one slid-longitude curve through the remaining two
tubes of each cluster, and the transported epsilon curves.  Epsilon
transport is class-driven: on each cluster the fiber curve's winding /
traversal pair becomes windings around the two non-window tubes' + feet
and strands through tube m+i; the flavor decides which fiber coordinate
plays which role.  For m = 0 the windows are empty and system i keeps the
belts of tube i with the epsilon images riding tube i+1, which is what
makes the 2-section a genus-2g Heegaard diagram of M # M.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .abelian import AbelianGroup, cokernel
from .curves import (
    Arc,
    BACK,
    CurveWord,
    Foot,
    FRONT,
    PortPos,
    Thru,
    class_matrix,
    homology_class,
)
from .heegaard import Flavor, HeegaardDiagram, h1
from .surface import PlanarModel, is_cut_system
from .wordgen import (
    RoutingError,
    TRACK_IMAGE,
    TRACK_IMAGE_HIGH,
    TRACK_MERGE_HIGH,
    TRACK_MERGE_LOW,
    Target,
    WordBuilder,
    ZONE_EAST,
    ZONE_MID,
    ZONE_WEST,
    emit_closed_corridor,
    emit_closed_tangle,
    plain_target,
)

TRACK_SLID = 0  # the slid longitude is a band of reference longitudes


class GeneratorError(RuntimeError):
    """A generated system failed its own validation (should not happen)."""


@dataclass(frozen=True)
class MultisectionDiagram:
    label: str
    m: int
    fiber: HeegaardDiagram
    central: PlanarModel
    systems: tuple[tuple[CurveWord, ...], ...]

    @property
    def n(self) -> int:
        return self.m + 2

    @property
    def genus(self) -> int:
        return self.central.genus

    def system_names(self) -> list[str]:
        return [f"α^{i}" for i in range(1, self.n + 1)]


def central_model(g: int, m: int) -> PlanarModel:
    """Genus (m+2)g model: g clusters of m+2 tubes."""
    if g < 1:
        raise ValueError("genus-0 fiber splitting unsupported")
    if m < 0:
        raise ValueError("m must be >= 0")
    return PlanarModel.standard(g, sheets=m + 2)


def _sheet(j: int, m: int) -> int:
    return (j - 1) % (m + 2) + 1


def window(i: int, m: int) -> list[int]:
    """Sheet indices of system i's meridians: the cyclic window."""
    return [_sheet(i + d, m) for d in range(m)]


def _tube(model: PlanarModel, sheet: int, k: int, m: int) -> str:
    return PlanarModel.tube_name(sheet, k, m + 2)


def step1_curves(
    i: int, g: int, m: int, flavor: Flavor, model: PlanarModel | None = None
) -> list[CurveWord]:
    """First-step curves of system i: window meridians plus, per cluster,
    the slid-longitude slot curve through the two non-window tubes.

    Both flavor branches produce the same intrinsic curves (the belts
    bound disks in the removed tubes either way); the flavor matters only
    for epsilon transport.
    """
    if not 1 <= i <= m + 2:
        raise ValueError(f"system index {i} out of range 1..{m + 2}")
    if model is None:
        model = central_model(g, m)
    curves: list[CurveWord] = []
    for k in range(1, g + 1):
        for j in window(i, m):
            curves.append(model.meridian(_tube(model, j, k, m)))
        if m == 0:
            curves.append(model.meridian(_tube(model, _sheet(i, m), k, m)))
        else:
            curves.append(_merge_curve(model, i, k, m))
    return curves


def _merge_curve(model: PlanarModel, i: int, k: int, m: int) -> CurveWord:
    """The slot curve with class b_{m+i} - b_{i+m+1}: the slid longitude
    after Prop-style handleslides, drawn through the two non-window tubes."""
    s = _sheet(m + i, m)
    t2 = _sheet(m + i + 1, m)
    ts = _tube(model, s, k, m)
    tt = _tube(model, t2, k, m)
    name = model.curve_label("λ'", _tube(model, _sheet(i + m + 1, m), k, m))
    if s != m + 2:
        tm = TRACK_MERGE_HIGH
        return CurveWord(
            name,
            (
                Thru(ts, 1, tm),
                Arc(FRONT, PortPos(Foot(ts, -1), tm), PortPos(Foot(tt, -1), tm)),
                Thru(tt, -1, tm),
                Arc(FRONT, PortPos(Foot(tt, 1), tm), PortPos(Foot(ts, 1), tm)),
            ),
        )
    # Wrap-around pair {m+2, 1}: the closing arc ducks behind the window.
    builder = WordBuilder(model)
    tm = TRACK_MERGE_LOW
    g1 = builder.gap_point(Foot(tt, 1), ZONE_WEST, Fraction(0))
    g2 = builder.gap_point(
        Foot(_tube(model, m + 1, k, m), 1), ZONE_EAST, Fraction(0)
    )
    word = CurveWord(
        name,
        (
            Thru(ts, 1, tm),
            Arc(FRONT, PortPos(Foot(ts, -1), tm), PortPos(Foot(tt, -1), tm)),
            Thru(tt, -1, tm),
            Arc(FRONT, PortPos(Foot(tt, 1), tm), g1),
            Arc(BACK, g1, g2),
            Arc(FRONT, g2, PortPos(Foot(ts, 1), tm)),
        ),
    )
    (word,) = builder.finalize([word])
    return word


def slid_longitude(
    i: int, k: int, g: int, m: int, model: PlanarModel | None = None
) -> CurveWord:
    """The identification curve: one pass through each window-and-next
    tube (sheets i..m+i), class sum of their b-classes.

    It necessarily crosses the window meridians once each (its class
    pairs +-1 with theirs), so it is not a member of system i; it is the
    curve the fiber's delta-dual direction is identified with.
    """
    if model is None:
        model = central_model(g, m)
    builder = WordBuilder(model)
    sheets = [_sheet(i + d, m) for d in range(m + 1)]

    def connector(from_sheet: int, to_sheet: int) -> list:
        t_from = _tube(model, from_sheet, k, m)
        t_to = _tube(model, to_sheet, k, m)
        src = PortPos(Foot(t_from, -1), TRACK_SLID)
        dst = PortPos(Foot(t_to, 1), TRACK_SLID)
        if to_sheet > from_sheet:
            return [Arc(FRONT, src, dst)]
        # The single wrap-around pass goes home through the back disk.
        e1 = builder.gap_point(
            model.foot_before(Foot(t_from, -1)), ZONE_MID, Fraction(0)
        )
        e2 = builder.gap_point(Foot(t_to, 1), ZONE_MID, Fraction(0))
        return [Arc(FRONT, src, e1), Arc(BACK, e1, e2), Arc(FRONT, e2, dst)]

    steps: list = []
    for idx, j in enumerate(sheets):
        steps.append(Thru(_tube(model, j, k, m), 1, TRACK_SLID))
        steps.extend(connector(j, sheets[(idx + 1) % len(sheets)]))
    (word,) = builder.finalize([CurveWord(f"slid_λ_{i}^{k}", tuple(steps))])
    return word


# ---------------------------------------------------------------------------
# Epsilon transport
# ---------------------------------------------------------------------------


def _pair_target(model: PlanarModel, i: int, k: int, m: int, pure_strands: bool) -> Target:
    """Tangle target of system i in cluster k."""
    if m == 0:
        t = _tube(model, _sheet(i + 1, m), k, m)
        return plain_target(model, t, track_base=TRACK_IMAGE)
    s = _sheet(m + i, m)
    t2 = _sheet(m + i + 1, m)
    ts = _tube(model, s, k, m)
    tt = _tube(model, t2, k, m)
    if pure_strands:
        return Target(
            tube=ts,
            m_after=Foot(ts, 1),
            w_after=model.foot_before(Foot(ts, 1)),
            track_base=TRACK_IMAGE_HIGH,
            corridor=(Foot(ts, 1), model.foot_before(Foot(ts, -1))),
        )
    if s == m + 2:
        # wrap-around pair: rings weave behind the belted window block
        return Target(
            tube=ts,
            m_after=Foot(ts, 1),
            w_after=model.foot_before(Foot(tt, 1)),
            track_base=TRACK_IMAGE,
            duck=(Foot(tt, 1), Foot(_tube(model, m + 1, k, m), 1)),
        )
    return Target(
        tube=ts,
        m_after=Foot(tt, 1),
        w_after=model.foot_before(Foot(ts, 1)),
        track_base=TRACK_IMAGE,
    )


@dataclass
class _ImagePlan:
    name: str
    reversed_: bool
    per_cluster: dict[int, tuple[int, int]]  # k -> (winds u, strands v)


def _plan_images(hd: HeegaardDiagram) -> list[_ImagePlan]:
    plans = []
    for idx, eps in enumerate(hd.epsilon, start=1):
        hc = homology_class(eps, hd.model)
        per: dict[int, tuple[int, int]] = {}
        for k in range(1, hd.genus + 1):
            x, y = hc[2 * (k - 1)], hc[2 * (k - 1) + 1]
            u, v = (y, x) if hd.flavor is Flavor.DeltaIsLongitudes else (x, y)
            if (u, v) != (0, 0):
                per[k] = (u, v)
        if not per:
            raise RoutingError(f"{eps.name} is null-homologous; cannot transport")
        if len(per) > 1:
            raise RoutingError(
                f"{eps.name}: epsilon curves spanning several handles are not "
                "routable by this generator; present the fiber with "
                "single-handle epsilon curves"
            )
        first = per[min(per)]
        flip = first[0] < 0 or (first[0] == 0 and first[1] < 0)
        if flip:
            per = {k: (-u, -v) for k, (u, v) in per.items()}
        for k, (u, v) in per.items():
            if u < 0 or (u == 0 and v < 0):
                raise RoutingError(
                    f"{eps.name}: mixed per-handle orientation pattern is not routable"
                )
        plans.append(_ImagePlan(f"ε_{idx}", flip, per))
    return plans


def _check_cluster_compatibility(plans: list[_ImagePlan]) -> None:
    """Two valid single-handle epsilon curves can never share a handle
    (their classes would be dependent); assert it defensively."""
    seen: dict[int, str] = {}
    for plan in plans:
        for k in plan.per_cluster:
            if k in seen:
                raise RoutingError(
                    f"cluster {k}: shared by {seen[k]} and {plan.name}"
                )
            seen[k] = plan.name


def transport_epsilon(
    hd: HeegaardDiagram, i: int, central: PlanarModel
) -> list[CurveWord]:
    """Images of the fiber's epsilon curves in system i."""
    sheets = {t.cluster[0] for t in central.tubes if t.cluster is not None}
    if not sheets:
        raise ValueError("central model has no cluster structure")
    m = max(sheets) - 2
    plans = _plan_images(hd)
    _check_cluster_compatibility(plans)
    builder = WordBuilder(central)
    block_offset: dict[int, int] = {}
    words = []
    for j, plan in enumerate(plans):
        words.append(_emit_image(builder, central, i, m, plan, j, block_offset))
    words = builder.finalize(words)
    return [w.reversed() if p.reversed_ else w for w, p in zip(words, plans)]


def _emit_image(
    builder: WordBuilder,
    central: PlanarModel,
    i: int,
    m: int,
    plan: _ImagePlan,
    band: int,
    block_offset: dict[int, int],
) -> CurveWord:
    shift = Fraction(band + 1, 10**4)

    def cluster_target(k: int, u: int, v: int) -> Target:
        target = _pair_target(central, i, k, m, pure_strands=(u == 0))
        base = target.track_base + block_offset.get(k, 0)
        block_offset[k] = block_offset.get(k, 0) + max(v, 1)
        return replace(target, track_base=base)

    (k,) = plan.per_cluster
    u, v = plan.per_cluster[k]
    target = cluster_target(k, u, v)
    if u == 0:
        if v != 1:
            raise RoutingError(
                f"{plan.name}: single-cluster pure-strand multiplicity {v}"
            )
        return emit_closed_corridor(builder, target, 1, plan.name, shift=shift)
    if gcd(u, v) != 1:
        raise RoutingError(f"{plan.name}: non-primitive single-cluster class")
    return emit_closed_tangle(builder, target, u, v, plan.name, shift=shift)


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------


def spin_diagram(hd: HeegaardDiagram, m: int) -> MultisectionDiagram:
    """Assemble and validate the (m+2)-section diagram of the m-spun."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if not hd.delta_is_verbatim():
        raise ValueError("fiber diagram is not standardly embedded (delta != named family)")
    fiber_check_d = is_cut_system(hd.model, list(hd.delta))
    fiber_check_e = is_cut_system(hd.model, list(hd.epsilon))
    if not fiber_check_d.ok or not fiber_check_e.ok:
        raise ValueError(
            f"fiber diagram invalid: delta: {fiber_check_d}; epsilon: {fiber_check_e}"
        )
    g = hd.genus
    central = central_model(g, m)
    systems = []
    for i in range(1, m + 3):
        sys_i = step1_curves(i, g, m, hd.flavor, central) + transport_epsilon(
            hd, i, central
        )
        chk = is_cut_system(central, sys_i)
        if not chk.ok:
            raise GeneratorError(f"system α^{i} of {hd.label}, m={m}: {chk}")
        systems.append(tuple(sys_i))
    diagram = MultisectionDiagram(
        label=f"spin({hd.label}, m={m})",
        m=m,
        fiber=hd,
        central=central,
        systems=tuple(systems),
    )
    got = diagram_h1(diagram)
    expected = h1(hd) if m >= 1 else h1(hd).direct_sum(h1(hd))
    if got != expected:
        raise GeneratorError(
            f"{diagram.label}: diagram H1 {got} != expected {expected}"
        )
    return diagram


def diagram_h1(d: MultisectionDiagram) -> AbelianGroup:
    """H_1 of the multisected manifold: quotient of H_1 of the central
    surface by the span of every system's classes."""
    all_curves = [w for sys in d.systems for w in sys]
    return cokernel(2 * d.genus, class_matrix(all_curves, d.central))
