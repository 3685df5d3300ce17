"""Closed-form homology of the m-spun of a 3-manifold.

For m >= 1 the graded groups are Z in degrees 0 and m+3, H_1(M) in
degrees 1 and m+1, H_2(M) in degrees 2 and m+2, and zero elsewhere,
with coinciding degrees direct-summed.  At m = 1 this merges to
H_1 + H_2 in degree 2, reproducing both displayed tables.
"""
from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbelianGroup


@dataclass(frozen=True)
class GradedHomology:
    m: int
    groups: tuple[AbelianGroup, ...]  # indexed k = 0 .. m+3

    @property
    def dimension(self) -> int:
        return self.m + 3

    def strings(self) -> list[str]:
        return [str(g) for g in self.groups]

    def __str__(self) -> str:
        return "[" + ", ".join(self.strings()) + "]"


def spun_homology(h1_m: AbelianGroup, h2_m: AbelianGroup, m: int) -> GradedHomology:
    """Graded homology of the m-spun, m >= 1."""
    if m < 1:
        raise ValueError(
            "m = 0 is a connected sum; use diagram_h1 on the 2-section instead"
        )
    dim = m + 3
    groups = []
    for k in range(dim + 1):
        parts = []
        if k in (0, dim):
            parts.append(AbelianGroup.free(1))
        if k in (1, m + 1):
            parts.append(h1_m)
        if k in (2, m + 2):
            parts.append(h2_m)
        if parts:
            groups.append(parts[0].direct_sum(*parts[1:]))
        else:
            groups.append(AbelianGroup.trivial())
    out = GradedHomology(m, tuple(groups))
    assert out.groups[0] == AbelianGroup.free(1)
    assert out.groups[dim] == AbelianGroup.free(1)
    return out
