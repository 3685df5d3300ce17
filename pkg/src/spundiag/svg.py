"""SVG rendering in the paper-figure layout: feet on a horizontal line
grouped by cluster, tubes as arcs above, front chords below, back chords
dashed above, one color per cut system."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .curves import Arc, BoundaryOrder, CurveWord, Foot, FRONT, GapPos, PortPos, Thru
from .heegaard import HeegaardDiagram
from .spin import MultisectionDiagram
from .surface import PlanarModel

DEFAULT_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#17becf",
    "#8c564b",
    "#e377c2",
)


def palette_from_env() -> tuple[str, ...]:
    raw = os.environ.get("SPUN_COLOR_PALETTE", "")
    if raw.strip():
        return tuple(c.strip() for c in raw.split(",") if c.strip())
    return DEFAULT_PALETTE


@dataclass
class _Layout:
    model: PlanarModel
    x_of_key: dict[tuple, float]
    foot_center: dict[Foot, float]
    baseline: float
    width: float

    @classmethod
    def build(cls, model: PlanarModel, systems: list[list[CurveWord]]) -> "_Layout":
        order = BoundaryOrder(model)
        positions = set()
        for sys in systems:
            for w in sys:
                for s in w.steps:
                    if isinstance(s, Arc):
                        positions.add(s.src)
                        positions.add(s.dst)
                    else:
                        positions.add(s.start())
                        positions.add(s.end())
        per_foot: dict[Foot, list] = {f: [] for f in model.foot_order}
        per_gap: dict[Foot, list] = {f: [] for f in model.foot_order}
        for p in positions:
            if isinstance(p, PortPos):
                per_foot[p.foot].append(p)
            else:
                per_gap[p.after].append(p)
        x_of_key: dict[tuple, float] = {}
        foot_center: dict[Foot, float] = {}
        x = 40.0
        step = 14.0
        for f in model.foot_order:
            left = x
            for p in sorted(per_foot[f], key=order.key):
                x_of_key[order.key(p)] = x
                x += step
            right = max(x, left + step)
            foot_center[f] = (left + right - step) / 2
            x = right + step
            for p in sorted(per_gap[f], key=order.key):
                x_of_key[order.key(p)] = x
                x += step
            x += 2 * step
        return cls(model, x_of_key, foot_center, baseline=320.0, width=x + 40.0)

    def x(self, order: BoundaryOrder, pos) -> float:
        return self.x_of_key[order.key(pos)]


def _arc_path(x1: float, x2: float, base: float, height: float) -> str:
    mid = (x1 + x2) / 2
    return f"M {x1:.1f} {base:.1f} Q {mid:.1f} {base - height:.1f} {x2:.1f} {base:.1f}"


def _render(model: PlanarModel, named_systems: list[tuple[str, list[CurveWord]]],
            palette: tuple[str, ...], title: str) -> str:
    layout = _Layout.build(model, [sys for _, sys in named_systems])
    order = BoundaryOrder(model)
    base = layout.baseline
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{layout.width:.0f}" height="520" '
        f'viewBox="0 0 {layout.width:.0f} 520">',
        f'<title>{title}</title>',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="10" y1="{base}" x2="{layout.width - 10:.1f}" y2="{base}" '
        'stroke="#999" stroke-width="1"/>',
    ]
    # Feet and tube arcs.
    for f in model.foot_order:
        cx = layout.foot_center[f]
        parts.append(
            f'<circle cx="{cx:.1f}" cy="{base}" r="6" fill="#ddd" stroke="#333"/>'
        )
        sign = "+" if f.sign > 0 else "−"
        parts.append(
            f'<text x="{cx:.1f}" y="{base + 22}" font-size="9" text-anchor="middle" '
            f'fill="#333">{f.tube}{sign}</text>'
        )
    for t in model.tubes:
        x1 = layout.foot_center[Foot(t.name, 1)]
        x2 = layout.foot_center[Foot(t.name, -1)]
        h = 60 + abs(x2 - x1) / 4
        parts.append(
            f'<path d="{_arc_path(x1, x2, base, h)}" fill="none" '
            'stroke="#bbb" stroke-width="6" stroke-linecap="round"/>'
        )
    # Curves.
    for idx, (sys_name, sys) in enumerate(named_systems):
        color = palette[idx % len(palette)]
        for w in sys:
            for s in w.steps:
                if isinstance(s, Thru):
                    x1 = layout.x(order, s.start())
                    x2 = layout.x(order, s.end())
                    h = 60 + abs(x2 - x1) / 4
                    parts.append(
                        f'<path d="{_arc_path(x1, x2, base, h)}" fill="none" '
                        f'stroke="{color}" stroke-width="1.2"/>'
                    )
                else:
                    x1 = layout.x(order, s.src)
                    x2 = layout.x(order, s.dst)
                    if s.disk == FRONT:
                        h = -(18 + abs(x2 - x1) / 6)
                        dash = ""
                    else:
                        h = 12 + abs(x2 - x1) / 10
                        dash = ' stroke-dasharray="4 3"'
                    parts.append(
                        f'<path d="{_arc_path(x1, x2, base, h)}" fill="none" '
                        f'stroke="{color}" stroke-width="1.2"{dash}/>'
                    )
        parts.append(
            f'<text x="{30 + idx * 90}" y="30" font-size="13" fill="{color}">'
            f"{sys_name}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _named_systems(d: HeegaardDiagram | MultisectionDiagram) -> list[tuple[str, list[CurveWord]]]:
    if isinstance(d, HeegaardDiagram):
        return [("δ", list(d.delta)), ("ε", list(d.epsilon))]
    return [
        (name, list(sys)) for name, sys in zip(d.system_names(), d.systems)
    ]


def render_svg(d: HeegaardDiagram | MultisectionDiagram) -> str:
    """One SVG with all cut systems, one color each."""
    model = d.model if isinstance(d, HeegaardDiagram) else d.central
    return _render(model, _named_systems(d), palette_from_env(), d.label)


def render_svg_per_system(d: HeegaardDiagram | MultisectionDiagram) -> list[tuple[str, str]]:
    """One SVG per cut system; returns (system name, svg text) pairs."""
    model = d.model if isinstance(d, HeegaardDiagram) else d.central
    palette = palette_from_env()
    out = []
    for idx, (name, sys) in enumerate(_named_systems(d)):
        svg = _render(
            model,
            [(name, sys)],
            (palette[idx % len(palette)],),
            f"{d.label} — {name}",
        )
        out.append((name, svg))
    return out
