"""Heegaard diagrams: the type, standard-embedding flavors, and the
catalog of fiber 3-manifolds (lens spaces, the 3-torus, the Poincaré
homology sphere).

A diagram is standardly embedded when its delta system is verbatim one of
the model's named curve families.  With flavor DeltaIsLongitudes the
delta curves kill the b-classes, so a lens space L(p,q) ships its epsilon
curve with class p*a + q*b (p windings, q tube traversals), which is what
makes H_1 = Z/p.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .abelian import AbelianGroup, cokernel
from .curves import CurveWord, class_matrix
from .surface import PlanarModel
from .wordgen import WordBuilder, emit_closed_tangle, plain_target


class Flavor(enum.Enum):
    DeltaIsMeridians = "meridians"
    DeltaIsLongitudes = "longitudes"


@dataclass(frozen=True)
class HeegaardDiagram:
    label: str
    genus: int
    model: PlanarModel
    delta: tuple[CurveWord, ...]
    epsilon: tuple[CurveWord, ...]
    flavor: Flavor

    def named_family(self) -> tuple[CurveWord, ...]:
        """The model family delta must equal verbatim."""
        if self.flavor is Flavor.DeltaIsMeridians:
            return self.model.mu_family()
        return self.model.lambda_family()

    def delta_is_verbatim(self) -> bool:
        return self.delta == self.named_family()


def h1(hd: HeegaardDiagram) -> AbelianGroup:
    """H_1 of the closed 3-manifold the diagram presents."""
    m = class_matrix(list(hd.delta) + list(hd.epsilon), hd.model)
    return cokernel(2 * hd.genus, m)


def h2(hd: HeegaardDiagram) -> AbelianGroup:
    """H_2 by Poincaré duality: free of rank equal to H_1's free rank."""
    return AbelianGroup.free(h1(hd).free_rank)


def make_lens(p: int, q: int) -> HeegaardDiagram:
    """Genus-1 diagram of the lens space L(p, q); H_1 = Z/p.

    The epsilon curve winds p times and traverses the tube q mod p times
    (L(p,q) and L(p, q mod p) are the same space).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1")
    model = PlanarModel.standard(1)
    q = q % p if p > 1 else 0
    builder = WordBuilder(model)
    eps = emit_closed_tangle(builder, plain_target(model, "h1"), p, q, "ε_1")
    (eps,) = builder.finalize([eps])
    return HeegaardDiagram(
        label=f"lens({p},{q})" if (p, q) != (1, 0) else "s3",
        genus=1,
        model=model,
        delta=model.lambda_family(),
        epsilon=(eps,),
        flavor=Flavor.DeltaIsLongitudes,
    )


def make_torus3() -> HeegaardDiagram:
    """Genus-3 diagram with H_1 = Z^3.

    At genus 3 the two Lagrangians of the 3-torus coincide in homology,
    so the epsilon curves are longitude-parallels on their own tracks;
    the curve words are homology-faithful stand-ins for the usual picture.
    """
    model = PlanarModel.standard(3)
    builder = WordBuilder(model)
    eps = [
        emit_closed_tangle(builder, plain_target(model, t.name), 0, 1, f"ε_{i + 1}")
        for i, t in enumerate(model.tubes)
    ]
    eps = builder.finalize(eps)
    return HeegaardDiagram(
        label="torus3",
        genus=3,
        model=model,
        delta=model.lambda_family(),
        epsilon=tuple(eps),
        flavor=Flavor.DeltaIsLongitudes,
    )


def make_poincare() -> HeegaardDiagram:
    """Genus-2 diagram with trivial H_1.

    Epsilon classes are a_1 + 2 b_1 and a_2 + 3 b_2: the winding part is
    unimodular, so the diagram is a homology sphere; the 2/3 traversal
    multiplicities echo the Seifert invariants.  (The fundamental group is
    not verified anywhere in this package.)
    """
    model = PlanarModel.standard(2)
    builder = WordBuilder(model)
    e1 = emit_closed_tangle(builder, plain_target(model, "h1"), 1, 2, "ε_1")
    e2 = emit_closed_tangle(builder, plain_target(model, "h2"), 1, 3, "ε_2")
    e1, e2 = builder.finalize([e1, e2])
    return HeegaardDiagram(
        label="poincare",
        genus=2,
        model=model,
        delta=model.lambda_family(),
        epsilon=(e1, e2),
        flavor=Flavor.DeltaIsLongitudes,
    )


CATALOG = {
    "torus3": make_torus3,
    "poincare": make_poincare,
}


def from_catalog(spec: str) -> HeegaardDiagram:
    """Resolve a fiber name: `lens:p,q`, `torus3`, or `poincare`."""
    if spec in CATALOG:
        return CATALOG[spec]()
    if spec.startswith("lens:"):
        try:
            p_str, q_str = spec[len("lens:") :].split(",")
            return make_lens(int(p_str), int(q_str))
        except ValueError as exc:
            raise ValueError(f"bad lens spec {spec!r}: {exc}") from exc
    raise KeyError(f"unknown fiber {spec!r} (try lens:p,q | torus3 | poincare)")


def catalog_names() -> list[str]:
    return ["lens:p,q", "torus3", "poincare"]
