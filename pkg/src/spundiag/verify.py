"""One-stop validation reports for Heegaard and multisection diagrams."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .abelian import AbelianGroup, rank
from .curves import class_matrix, validate_simple_disjoint
from .heegaard import HeegaardDiagram, h1, h2
from .spin import MultisectionDiagram, diagram_h1, window
from .surface import cut_along_system, lagrangian_check


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str


@dataclass(frozen=True)
class Report:
    subject: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        return json.dumps(
            {
                "subject": self.subject,
                "passed": self.passed,
                "checks": [
                    {"name": c.name, "passed": c.passed, "details": c.details}
                    for c in self.checks
                ],
            },
            indent=2,
            ensure_ascii=False,
        )

    def to_table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [f"verification of {self.subject}"]
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  {c.name.ljust(width)}  {mark}  {c.details}")
        lines.append(f"  => {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def verify_multisection(
    d: MultisectionDiagram, expected_fiber_h1: AbelianGroup | None = None
) -> Report:
    """Run the fixed check list on a multisection diagram."""
    checks: list[CheckResult] = []
    g = d.fiber.genus
    want_genus = (d.m + 2) * g
    checks.append(
        CheckResult(
            "genus",
            d.genus == want_genus,
            f"central genus {d.genus}, expected (m+2)g = {want_genus}",
        )
    )
    count_ok = len(d.systems) == d.n and all(
        len(sys) == want_genus for sys in d.systems
    )
    checks.append(
        CheckResult(
            "system-count",
            count_ok,
            f"{len(d.systems)} systems of sizes {[len(s) for s in d.systems]}, "
            f"expected {d.n} x {want_genus}",
        )
    )

    names = d.system_names()
    bad = []
    for name, sys in zip(names, d.systems):
        rep = validate_simple_disjoint(list(sys), d.central)
        if not rep.ok:
            bad.append(f"{name}: {rep}")
    checks.append(
        CheckResult(
            "simple-disjoint", not bad, "; ".join(bad) if bad else "all systems embedded"
        )
    )

    bad = []
    for name, sys in zip(names, d.systems):
        ok, msg = lagrangian_check(d.central, list(sys))
        if not ok:
            bad.append(f"{name}: {msg}")
    checks.append(
        CheckResult(
            "lagrangian",
            not bad,
            "; ".join(bad) if bad else "rank (m+2)g, primitive, pairwise zero",
        )
    )

    bad = []
    for name, sys in zip(names, d.systems):
        try:
            cut = cut_along_system(d.central, list(sys))
        except Exception as exc:  # realization failures surface here
            bad.append(f"{name}: {exc}")
            continue
        if not cut.caps_to_sphere:
            bad.append(
                f"{name}: {len(cut.components)} pieces, capped chi "
                f"{[c.capped_euler_characteristic for c in cut.components]}"
            )
    checks.append(
        CheckResult(
            "cut-to-sphere", not bad, "; ".join(bad) if bad else "every system caps to S^2"
        )
    )

    expected_shared = max(d.m - 1, 0) * g
    bad = []
    for idx in range(len(d.systems)):
        a = set(d.systems[idx])
        b = set(d.systems[(idx + 1) % len(d.systems)])
        shared = len(a & b)
        if shared != expected_shared:
            bad.append(f"{names[idx]}∩{names[(idx + 1) % len(d.systems)]}: {shared}")
    checks.append(
        CheckResult(
            "window-sharing",
            not bad,
            "; ".join(bad)
            if bad
            else f"adjacent systems share {expected_shared} meridians",
        )
    )

    fiber_h1 = expected_fiber_h1 if expected_fiber_h1 is not None else h1(d.fiber)
    expected = fiber_h1 if d.m >= 1 else fiber_h1.direct_sum(fiber_h1)
    try:
        got = diagram_h1(d)
        h1_ok = got == expected
        detail = f"H1 = {got}, expected {expected}"
    except Exception as exc:
        h1_ok = False
        detail = str(exc)
    checks.append(CheckResult("homology", h1_ok, detail))

    return Report(d.label, tuple(checks))


def verify_heegaard(hd: HeegaardDiagram) -> Report:
    """Check the two cut systems and the standard-embedding contract."""
    from .surface import is_cut_system

    checks: list[CheckResult] = []
    for name, sys in (("delta", hd.delta), ("epsilon", hd.epsilon)):
        chk = is_cut_system(hd.model, list(sys))
        checks.append(CheckResult(f"{name}-cut-system", chk.ok, str(chk)))
    checks.append(
        CheckResult(
            "standard-embedding",
            hd.delta_is_verbatim(),
            f"delta is {'' if hd.delta_is_verbatim() else 'NOT '}the verbatim "
            f"{hd.flavor.value} family",
        )
    )
    dup = set(hd.delta) & set(hd.epsilon)
    rk = rank(class_matrix(list(hd.delta) + list(hd.epsilon), hd.model))
    checks.append(
        CheckResult(
            "epsilon-independent",
            not dup,
            f"duplicated curves: {sorted(w.name for w in dup)}"
            if dup
            else f"no verbatim duplicates; rank(delta ∪ epsilon) = {rk}",
        )
    )
    checks.append(CheckResult("h1", True, str(h1(hd))))
    checks.append(CheckResult("h2", True, str(h2(hd))))
    return Report(hd.label, tuple(checks))
