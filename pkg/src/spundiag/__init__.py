"""Multisection diagrams of spun 3-manifolds.

Build (m+2)-section diagrams of the m-spun of a 3-manifold from a
standardly embedded Heegaard diagram, verify them exactly (combinatorial
embedding, cut-system surgery, integer homology via Smith normal form),
and render them as SVG.
"""
from .abelian import AbelianGroup, IntMatrix, cokernel, smith_normal_form
from .curves import (
    Arc,
    CurveWord,
    Foot,
    GapPos,
    PortPos,
    Thru,
    algebraic_intersection,
    class_matrix,
    homology_class,
    validate_simple_disjoint,
)
from .heegaard import (
    Flavor,
    HeegaardDiagram,
    from_catalog,
    h1,
    h2,
    make_lens,
    make_poincare,
    make_torus3,
)
from .io_json import SchemaError, parse, serialize
from .spin import (
    GeneratorError,
    MultisectionDiagram,
    central_model,
    diagram_h1,
    slid_longitude,
    spin_diagram,
    step1_curves,
    transport_epsilon,
)
from .spun_homology import GradedHomology, spun_homology
from .surface import (
    CombinatorialMap,
    CutResult,
    PlanarModel,
    Tube,
    cut_along_system,
    is_cut_system,
    realize,
)
from .svg import render_svg, render_svg_per_system
from .verify import Report, verify_heegaard, verify_multisection
from .wordgen import RoutingError

__all__ = [
    "AbelianGroup",
    "Arc",
    "CombinatorialMap",
    "CurveWord",
    "CutResult",
    "Flavor",
    "Foot",
    "GapPos",
    "GeneratorError",
    "GradedHomology",
    "HeegaardDiagram",
    "IntMatrix",
    "MultisectionDiagram",
    "PlanarModel",
    "PortPos",
    "Report",
    "RoutingError",
    "SchemaError",
    "Thru",
    "Tube",
    "algebraic_intersection",
    "central_model",
    "class_matrix",
    "cokernel",
    "cut_along_system",
    "diagram_h1",
    "from_catalog",
    "h1",
    "h2",
    "homology_class",
    "is_cut_system",
    "make_lens",
    "make_poincare",
    "make_torus3",
    "parse",
    "realize",
    "render_svg",
    "render_svg_per_system",
    "serialize",
    "slid_longitude",
    "smith_normal_form",
    "spin_diagram",
    "spun_homology",
    "step1_curves",
    "transport_epsilon",
    "validate_simple_disjoint",
    "verify_heegaard",
    "verify_multisection",
]
