import pytest

from spundiag.curves import (
    Arc,
    BACK,
    CurveWord,
    Foot,
    FRONT,
    GapPos,
    PortPos,
    Thru,
    validate_simple_disjoint,
)
from spundiag.surface import (
    PlanarModel,
    RealizationError,
    cut_along_system,
    is_cut_system,
    lagrangian_check,
    realize,
)


@pytest.fixture
def torus():
    return PlanarModel.standard(1)


@pytest.fixture
def genus2():
    return PlanarModel.standard(2)


class TestModel:
    def test_standard_plain(self, genus2):
        assert genus2.genus == 2
        assert [t.name for t in genus2.tubes] == ["h1", "h2"]
        assert len(genus2.foot_order) == 4

    def test_standard_clustered(self):
        m = PlanarModel.standard(3, sheets=4)
        assert m.genus == 12
        assert m.tubes[0].cluster == (1, 1)
        assert m.tubes[4].cluster == (1, 2)

    def test_genus_zero_rejected(self):
        with pytest.raises(ValueError):
            PlanarModel.standard(0)


class TestRealize:
    @pytest.mark.parametrize("handles,sheets", [(1, 1), (2, 1), (3, 1), (1, 3), (2, 2)])
    def test_empty_system_euler(self, handles, sheets):
        m = PlanarModel.standard(handles, sheets)
        cmap = realize(m, [])
        assert cmap.euler_characteristic == 2 - 2 * m.genus
        assert cmap.genus == m.genus

    def test_with_meridian(self, torus):
        cmap = realize(torus, [torus.meridian("h1")])
        assert cmap.euler_characteristic == 0
        assert "μ_1" in cmap.curve_edge

    def test_with_longitude(self, torus):
        cmap = realize(torus, [torus.longitude("h1")])
        assert cmap.euler_characteristic == 0

    def test_full_families(self):
        m = PlanarModel.standard(2, sheets=3)
        cmap = realize(m, list(m.mu_family()))
        assert cmap.euler_characteristic == 2 - 2 * m.genus
        cmap = realize(m, list(m.lambda_family()))
        assert cmap.euler_characteristic == 2 - 2 * m.genus

    def test_crossing_rejected(self, torus):
        # mu and lambda on the same tube must intersect once.
        with pytest.raises(RealizationError):
            realize(torus, [torus.meridian("h1"), torus.longitude("h1")])


class TestValidation:
    def test_interleaving_chords(self, genus2):
        g = genus2.foot_order
        c1 = CurveWord(
            "x",
            (
                Arc(FRONT, GapPos(g[0], 1), GapPos(g[2], 1)),
                Arc(BACK, GapPos(g[2], 1), GapPos(g[0], 1)),
            ),
        )
        c2 = CurveWord(
            "y",
            (
                Arc(FRONT, GapPos(g[1], 1), GapPos(g[3], 1)),
                Arc(BACK, GapPos(g[3], 1), GapPos(g[1], 1)),
            ),
        )
        rep = validate_simple_disjoint([c1, c2], genus2)
        assert not rep.ok
        assert any(v.kind == "interleaving" for v in rep.violations)

    def test_nested_chords_accepted(self, genus2):
        g = genus2.foot_order
        c1 = CurveWord(
            "x",
            (
                Arc(FRONT, GapPos(g[0], 1), GapPos(g[3], 1)),
                Arc(BACK, GapPos(g[3], 1), GapPos(g[0], 1)),
            ),
        )
        c2 = CurveWord(
            "y",
            (
                Arc(FRONT, GapPos(g[1], 1), GapPos(g[2], 1)),
                Arc(BACK, GapPos(g[2], 1), GapPos(g[1], 1)),
            ),
        )
        assert validate_simple_disjoint([c1, c2], genus2).ok

    def test_port_collision(self, torus):
        a = torus.longitude("h1", track=2)
        b = CurveWord("dup", a.steps)
        rep = validate_simple_disjoint([a, b], torus)
        assert not rep.ok
        assert any(v.kind == "position-collision" for v in rep.violations)

    def test_mu_lambda_conflict_reported(self, torus):
        rep = validate_simple_disjoint(
            [torus.meridian("h1"), torus.longitude("h1")], torus
        )
        assert not rep.ok


class TestCut:
    def test_torus_meridian(self, torus):
        cut = cut_along_system(torus, [torus.meridian("h1")])
        assert len(cut.components) == 1
        c = cut.components[0]
        assert c.euler_characteristic == 0
        assert c.boundary_circles == 2
        assert cut.caps_to_sphere

    def test_genus2_two_meridians(self, genus2):
        cut = cut_along_system(genus2, [genus2.meridian("h1"), genus2.meridian("h2")])
        assert len(cut.components) == 1
        assert cut.components[0].euler_characteristic == -2
        assert cut.components[0].boundary_circles == 4
        assert cut.caps_to_sphere

    def test_parallel_meridians_separate(self, genus2):
        cut = cut_along_system(
            genus2, [genus2.meridian("h1"), genus2.meridian("h1", nesting=1)]
        )
        assert len(cut.components) == 2
        assert not cut.caps_to_sphere

    def test_empty_cut(self, torus):
        cut = cut_along_system(torus, [])
        assert len(cut.components) == 1
        assert cut.components[0].euler_characteristic == 0
        assert cut.components[0].boundary_circles == 0

    def test_chi_invariant_under_cutting(self):
        m = PlanarModel.standard(2, sheets=2)
        system = [m.meridian(t.name) for t in m.tubes[:3]]
        cut = cut_along_system(m, system)
        assert sum(c.euler_characteristic for c in cut.components) == 2 - 2 * m.genus
        assert sum(c.boundary_circles for c in cut.components) == 2 * len(system)


class TestIsCutSystem:
    @pytest.mark.parametrize("handles,sheets", [(1, 1), (2, 1), (1, 3), (3, 2)])
    def test_mu_family(self, handles, sheets):
        m = PlanarModel.standard(handles, sheets)
        assert is_cut_system(m, list(m.mu_family())).ok

    @pytest.mark.parametrize("handles,sheets", [(1, 1), (2, 1), (1, 3), (3, 2)])
    def test_lambda_family(self, handles, sheets):
        m = PlanarModel.standard(handles, sheets)
        assert is_cut_system(m, list(m.lambda_family())).ok

    def test_dependent_pair(self, genus2):
        chk = is_cut_system(
            genus2, [genus2.meridian("h1"), genus2.meridian("h1", nesting=1)]
        )
        assert not chk.ok
        assert not chk.independent_ok
        assert "homologically dependent" in " ".join(chk.failures)

    def test_wrong_count(self, genus2):
        chk = is_cut_system(genus2, [genus2.meridian("h1")])
        assert not chk.ok
        assert not chk.size_ok

    def test_lagrangian(self, genus2):
        ok, msg = lagrangian_check(genus2, list(genus2.mu_family()))
        assert ok, msg
