import json
import random

import pytest

from spundiag.abelian import AbelianGroup
from spundiag.curves import CurveWord
from spundiag.heegaard import HeegaardDiagram, make_lens, make_poincare, make_torus3
from spundiag.spin import MultisectionDiagram, spin_diagram
from spundiag.verify import verify_heegaard, verify_multisection


def replace_system(d: MultisectionDiagram, idx: int, system) -> MultisectionDiagram:
    systems = list(d.systems)
    systems[idx] = tuple(system)
    return MultisectionDiagram(d.label, d.m, d.fiber, d.central, tuple(systems))


class TestVerifyMultisection:
    def test_generated_pass(self):
        for hd in (make_lens(2, 1), make_poincare()):
            for m in (0, 1, 2):
                rep = verify_multisection(spin_diagram(hd, m))
                assert rep.passed, rep.to_table()

    def test_check_order(self):
        rep = verify_multisection(spin_diagram(make_lens(2, 1), 1))
        assert [c.name for c in rep.checks] == [
            "genus",
            "system-count",
            "simple-disjoint",
            "lagrangian",
            "cut-to-sphere",
            "window-sharing",
            "homology",
        ]

    def test_deleted_curve_fails(self):
        d = spin_diagram(make_lens(2, 1), 2)
        mutated = replace_system(d, 1, d.systems[1][:-1])
        rep = verify_multisection(mutated)
        assert not rep.passed
        failing = {c.name for c in rep.checks if not c.passed}
        assert "system-count" in failing

    def test_duplicated_curve_fails_dependence(self):
        d = spin_diagram(make_lens(2, 1), 2)
        sys0 = list(d.systems[0])
        # parallel copy of a window meridian in place of the last curve
        dup = d.central.meridian("h1.1", nesting=3)
        mutated = replace_system(d, 0, sys0[:-1] + [dup])
        rep = verify_multisection(mutated)
        assert not rep.passed
        failing = {c.name for c in rep.checks if not c.passed}
        assert "lagrangian" in failing or "simple-disjoint" in failing

    def test_expected_h1_override(self):
        d = spin_diagram(make_lens(3, 1), 1)
        rep = verify_multisection(d, expected_fiber_h1=AbelianGroup.cyclic(5))
        assert not rep.passed
        assert [c for c in rep.checks if c.name == "homology"][0].passed is False

    def test_report_json(self):
        rep = verify_multisection(spin_diagram(make_lens(2, 1), 0))
        doc = json.loads(rep.to_json())
        assert doc["passed"] is True
        assert len(doc["checks"]) == 7

    def test_report_table_deterministic(self):
        d = spin_diagram(make_lens(2, 1), 1)
        assert verify_multisection(d).to_table() == verify_multisection(d).to_table()


def parallel_copy(word: CurveWord, offset: int) -> CurveWord:
    """Track/slot-shifted copy: same homology class, nearby routing."""
    from spundiag.curves import Arc, GapPos, PortPos, Thru

    def shift_pos(p):
        if isinstance(p, PortPos):
            return PortPos(p.foot, p.track + offset)
        return GapPos(p.after, p.slot + offset)

    steps = []
    for s in word.steps:
        if isinstance(s, Thru):
            steps.append(Thru(s.tube, s.direction, s.track + offset))
        else:
            steps.append(Arc(s.disk, shift_pos(s.src), shift_pos(s.dst)))
    return CurveWord(f"{word.name}~dup", tuple(steps))


def mutate(d: MultisectionDiagram, rng: random.Random) -> MultisectionDiagram:
    """One random single-curve mutation: delete, duplicate another curve of
    the same system as a parallel copy, or window-shift a meridian."""
    i = rng.randrange(len(d.systems))
    sys_i = list(d.systems[i])
    kind = rng.choice(["delete", "duplicate", "shift"])
    if kind == "delete":
        sys_i.pop(rng.randrange(len(sys_i)))
    elif kind == "duplicate":
        j = rng.randrange(len(sys_i))
        k = rng.choice([x for x in range(len(sys_i)) if x != j] or [j])
        sys_i[j] = parallel_copy(sys_i[k], offset=1)
    else:
        meridians = [
            (j, w) for j, w in enumerate(sys_i) if w.name.startswith("μ") and w.thrus() == []
        ]
        if not meridians:
            sys_i.pop(rng.randrange(len(sys_i)))
        else:
            j, w = rng.choice(meridians)
            tube_names = sorted(t.name for t in d.central.tubes)
            # shift: a belt of the next tube instead (may duplicate another)
            current = [t for t in tube_names if d.central.meridian(t).steps == w.steps]
            base = current[0] if current else tube_names[0]
            nxt = tube_names[(tube_names.index(base) + 1) % len(tube_names)]
            sys_i[j] = d.central.meridian(nxt)
    return replace_system(d, i, sys_i)


class TestMutationRobustness:
    def test_hundred_mutations_detected(self):
        rng = random.Random(2026)
        base = [
            spin_diagram(make_lens(2, 1), 2),
            spin_diagram(make_lens(3, 1), 1),
            spin_diagram(make_poincare(), 1),
        ]
        for n in range(100):
            d = base[n % len(base)]
            mutated = mutate(d, rng)
            rep = verify_multisection(mutated)
            assert not rep.passed, f"mutation {n} undetected:\n{rep.to_table()}"


class TestVerifyHeegaard:
    def test_catalog_passes(self):
        for hd in (make_lens(2, 1), make_lens(7, 2), make_torus3(), make_poincare()):
            rep = verify_heegaard(hd)
            assert rep.passed, rep.to_table()

    def test_poincare_reports_trivial_h1(self):
        rep = verify_heegaard(make_poincare())
        h1_check = [c for c in rep.checks if c.name == "h1"][0]
        assert h1_check.details == "0"

    def test_delta_equals_epsilon_fails(self):
        hd = make_lens(2, 1)
        bad = HeegaardDiagram(
            "bad", 1, hd.model, hd.model.mu_family(), hd.model.mu_family(), hd.flavor
        )
        rep = verify_heegaard(bad)
        assert not rep.passed
        failing = {c.name for c in rep.checks if not c.passed}
        assert "epsilon-independent" in failing

    def test_distinguishes_lens_spaces(self):
        r6 = verify_heegaard(make_lens(6, 1))
        r7 = verify_heegaard(make_lens(7, 1))
        h6 = [c.details for c in r6.checks if c.name == "h1"][0]
        h7 = [c.details for c in r7.checks if c.name == "h1"][0]
        assert h6 == "Z/6" and h7 == "Z/7"
