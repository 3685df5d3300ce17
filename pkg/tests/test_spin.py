import random

import pytest

from spundiag.abelian import AbelianGroup
from spundiag.curves import (
    Arc,
    BACK,
    CurveWord,
    Foot,
    FRONT,
    GapPos,
    algebraic_intersection,
    homology_class,
    validate_simple_disjoint,
)
from spundiag.heegaard import Flavor, HeegaardDiagram, h1, make_lens, make_poincare, make_torus3
from spundiag.spin import (
    central_model,
    diagram_h1,
    slid_longitude,
    spin_diagram,
    step1_curves,
    transport_epsilon,
)
from spundiag.surface import PlanarModel, cut_along_system, is_cut_system, realize


class TestCentralModel:
    def test_small(self):
        m = central_model(1, 1)
        assert m.genus == 3
        assert len({t.cluster[1] for t in m.tubes}) == 1

    def test_paper_figure_shape(self):
        m = central_model(3, 2)
        assert m.genus == 12
        clusters = {t.cluster[1] for t in m.tubes}
        assert len(clusters) == 3
        for k in clusters:
            assert sum(1 for t in m.tubes if t.cluster[1] == k) == 4

    def test_lens_shape(self):
        assert central_model(2, 2).genus == 8

    def test_genus_zero_rejected(self):
        with pytest.raises(ValueError):
            central_model(0, 2)


class TestStep1:
    def test_window_m3(self):
        curves = step1_curves(1, 1, 3, Flavor.DeltaIsLongitudes)
        names = [c.name for c in curves]
        assert names == ["μ_1^1", "μ_2^1", "μ_3^1", "λ'_5^1"]

    def test_m0_single_curve(self):
        curves = step1_curves(2, 1, 0, Flavor.DeltaIsLongitudes)
        assert len(curves) == 1

    def test_window_wraps(self):
        curves = step1_curves(3, 2, 2, Flavor.DeltaIsLongitudes)
        names = [c.name for c in curves]
        assert names == ["μ_3^1", "μ_4^1", "λ'_2^1", "μ_3^2", "μ_4^2", "λ'_2^2"]

    def test_merge_class(self):
        model = central_model(1, 2)
        curves = step1_curves(1, 1, 2, Flavor.DeltaIsLongitudes, model)
        merge = curves[-1]
        # class b_3 - b_4 in basis (a_11, b_11, ..., a_41, b_41)
        assert homology_class(merge, model) == (0, 0, 0, 0, 0, 1, 0, -1)

    def test_step1_disjoint(self):
        for i in (1, 2, 3, 4):
            model = central_model(2, 2)
            sys = step1_curves(i, 2, 2, Flavor.DeltaIsLongitudes, model)
            assert validate_simple_disjoint(sys, model).ok

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            step1_curves(5, 1, 2, Flavor.DeltaIsLongitudes)


class TestSlidLongitude:
    def test_class_m1(self):
        model = central_model(1, 1)
        w = slid_longitude(1, 1, 1, 1, model)
        assert homology_class(w, model) == (0, 1, 0, 1, 0, 0)

    def test_class_m0(self):
        model = central_model(1, 0)
        w = slid_longitude(1, 1, 1, 0, model)
        assert homology_class(w, model) == (0, 1, 0, 0)

    def test_pairs_with_window_meridian(self):
        model = central_model(1, 2)
        w = slid_longitude(1, 1, 1, 2, model)
        mu2 = model.meridian("h2.1")
        assert abs(algebraic_intersection(w, mu2, model)) == 1

    def test_simple(self):
        for g, m, i, k in [(1, 1, 1, 1), (2, 2, 3, 2), (1, 3, 2, 1), (1, 4, 6, 1)]:
            model = central_model(g, m)
            w = slid_longitude(i, k, g, m, model)
            assert validate_simple_disjoint([w], model).ok


class TestTransport:
    def test_s3_fiber_m1(self):
        hd = make_lens(1, 0)
        central = central_model(1, 1)
        imgs = transport_epsilon(hd, 1, central)
        assert len(imgs) == 1
        sys = step1_curves(1, 1, 1, hd.flavor, central) + imgs
        assert is_cut_system(central, sys).ok

    def test_images_disjoint_from_step1(self):
        for hd in (make_lens(2, 1), make_poincare()):
            for m in (1, 2):
                central = central_model(hd.genus, m)
                for i in range(1, m + 3):
                    sys = step1_curves(i, hd.genus, m, hd.flavor, central)
                    sys += transport_epsilon(hd, i, central)
                    assert validate_simple_disjoint(sys, central).ok, (hd.label, m, i)


class TestSpinDiagram:
    def test_lens21_m2_counts(self):
        d = spin_diagram(make_lens(2, 1), 2)
        assert d.genus == 4
        assert len(d.systems) == 4
        assert all(len(s) == 4 for s in d.systems)

    def test_lens21_m3_counts(self):
        d = spin_diagram(make_lens(2, 1), 3)
        assert d.genus == 5
        assert len(d.systems) == 5

    def test_m0_connected_sum(self):
        d = spin_diagram(make_lens(3, 1), 0)
        assert d.genus == 2
        assert len(d.systems) == 2
        assert diagram_h1(d) == AbelianGroup.from_diagonal(0, [3, 3])

    def test_sharing_invariant(self):
        for m in (0, 1, 2, 3):
            d = spin_diagram(make_lens(2, 1), m)
            expected = max(m - 1, 0)
            for i in range(len(d.systems)):
                shared = set(d.systems[i]) & set(d.systems[(i + 1) % len(d.systems)])
                assert len(shared) == expected, (m, i)
                assert all(w.name.startswith("μ") for w in shared)

    def test_lagrangian_of_generated_systems(self):
        d = spin_diagram(make_poincare(), 1)
        from spundiag.surface import lagrangian_check

        for sys in d.systems:
            ok, msg = lagrangian_check(d.central, list(sys))
            assert ok, msg

    def test_realize_euler_characteristic(self):
        d = spin_diagram(make_lens(2, 1), 2)
        for sys in d.systems:
            cmap = realize(d.central, list(sys))
            assert cmap.euler_characteristic == 2 - 2 * d.genus

    def test_cut_subsystem_chi_invariance(self):
        d = spin_diagram(make_lens(3, 2), 2)
        rng = random.Random(3)
        full = list(d.systems[0])
        for _ in range(6):
            k = rng.randint(0, len(full))
            sub = rng.sample(full, k)
            cut = cut_along_system(d.central, sub)
            assert sum(c.euler_characteristic for c in cut.components) == 2 - 2 * d.genus
            assert sum(c.boundary_circles for c in cut.components) == 2 * len(sub)

    def test_torus3_h1(self):
        d = spin_diagram(make_torus3(), 1)
        assert diagram_h1(d) == AbelianGroup.free(3)

    def test_lens_q2(self):
        d = spin_diagram(make_lens(7, 2), 2)
        assert diagram_h1(d) == AbelianGroup.cyclic(7)

    def test_invalid_fiber_rejected(self):
        hd = make_lens(2, 1)
        bad = HeegaardDiagram(
            hd.label, hd.genus, hd.model, hd.epsilon, hd.epsilon, hd.flavor
        )
        with pytest.raises(ValueError):
            spin_diagram(bad, 1)


def _pair_wind(model: PlanarModel, handles: tuple[int, int], slot: int, name: str) -> CurveWord:
    """A curve winding once around the + feet of two handles."""
    ha, hb = (f"h{handles[0]}", f"h{handles[1]}")
    w = GapPos(model.foot_before(Foot(ha, 1)), slot)
    x = GapPos(Foot(ha, 1), slot)
    y = GapPos(model.foot_before(Foot(hb, 1)), slot + 1)
    z = GapPos(Foot(hb, 1), slot + 1)
    return CurveWord(
        name, (Arc(FRONT, w, x), Arc(BACK, x, y), Arc(FRONT, y, z), Arc(BACK, z, w))
    )


class TestMultiHandleEpsilonRejected:
    """Epsilon curves spanning several handles are outside the generator's
    routing scheme; it must report a routing failure, not emit crossings."""

    def test_valid_fiber_but_unroutable(self):
        from spundiag.wordgen import RoutingError

        model = PlanarModel.standard(2)
        eps1 = _pair_wind(model, (1, 2), 40, "ε_1")
        ring = model.meridian("h2", nesting=2)
        eps2 = CurveWord("ε_2", ring.steps)
        hd = HeegaardDiagram(
            "mixed", 2, model, model.lambda_family(), (eps1, eps2),
            Flavor.DeltaIsLongitudes,
        )
        assert homology_class(eps1, model) == (1, 0, 1, 0)
        assert is_cut_system(hd.model, list(hd.epsilon)).ok
        with pytest.raises(RoutingError):
            spin_diagram(hd, 1)


def _meridian_flavor_fiber() -> HeegaardDiagram:
    """Genus-1 diagram with delta = the meridian family: H_1 = Z/3."""
    from spundiag.wordgen import WordBuilder, emit_closed_tangle, plain_target

    model = PlanarModel.standard(1)
    b = WordBuilder(model)
    eps = emit_closed_tangle(b, plain_target(model, "h1"), 1, 3, "ε_1")
    (eps,) = b.finalize([eps])
    return HeegaardDiagram(
        "mu-flavor", 1, model, model.mu_family(), (eps,), Flavor.DeltaIsMeridians
    )


class TestMeridianBranch:
    def test_fiber(self):
        hd = _meridian_flavor_fiber()
        assert hd.delta_is_verbatim()
        assert h1(hd) == AbelianGroup.cyclic(3)

    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_spins(self, m):
        hd = _meridian_flavor_fiber()
        d = spin_diagram(hd, m)
        expected = (
            AbelianGroup.cyclic(3)
            if m >= 1
            else AbelianGroup.from_diagonal(0, [3, 3])
        )
        assert diagram_h1(d) == expected
