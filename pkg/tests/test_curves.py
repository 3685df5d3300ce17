import pytest
from hypothesis import given
from hypothesis import strategies as st

from spundiag.curves import (
    algebraic_intersection,
    class_matrix,
    homology_class,
    validate_simple_disjoint,
)
from spundiag.surface import PlanarModel


@pytest.fixture
def torus():
    return PlanarModel.standard(1)


@pytest.fixture
def genus3():
    return PlanarModel.standard(3)


class TestHomologyClass:
    def test_meridian_is_a(self, genus3):
        assert homology_class(genus3.meridian("h2"), genus3) == (0, 0, 1, 0, 0, 0)

    def test_longitude_is_b(self, genus3):
        assert homology_class(genus3.longitude("h3"), genus3) == (0, 0, 0, 0, 0, 1)

    def test_reversal_negates(self, genus3):
        for w in (genus3.meridian("h1"), genus3.longitude("h2")):
            v = homology_class(w, genus3)
            r = homology_class(w.reversed(), genus3)
            assert tuple(-x for x in v) == r

    def test_clustered_model(self):
        m = PlanarModel.standard(2, sheets=3)
        for i, t in enumerate(m.tubes):
            mu = homology_class(m.meridian(t.name), m)
            lam = homology_class(m.longitude(t.name), m)
            assert mu[2 * i] == 1 and sum(map(abs, mu)) == 1
            assert lam[2 * i + 1] == 1 and sum(map(abs, lam)) == 1


class TestIntersection:
    def test_dual_pair(self, torus):
        assert algebraic_intersection(torus.meridian("h1"), torus.longitude("h1"), torus) == 1

    def test_same_type(self, genus3):
        assert (
            algebraic_intersection(genus3.meridian("h1"), genus3.meridian("h2"), genus3)
            == 0
        )
        assert (
            algebraic_intersection(genus3.longitude("h1"), genus3.longitude("h2"), genus3)
            == 0
        )

    def test_disjoint_implies_zero(self, genus3):
        system = list(genus3.mu_family())
        assert validate_simple_disjoint(system, genus3).ok
        for i, c1 in enumerate(system):
            for c2 in system[i + 1 :]:
                assert algebraic_intersection(c1, c2, genus3) == 0


class TestClassMatrix:
    def test_mu_columns(self, genus3):
        m = class_matrix(genus3.mu_family(), genus3)
        assert m.rows == 6 and m.cols == 3
        for j in range(3):
            col = m.column(j)
            assert col[2 * j] == 1
            assert sum(map(abs, col)) == 1

    def test_lambda_columns(self, genus3):
        m = class_matrix(genus3.lambda_family(), genus3)
        for j in range(3):
            col = m.column(j)
            assert col[2 * j + 1] == 1
            assert sum(map(abs, col)) == 1


@given(st.integers(1, 4), st.integers(1, 4))
def test_families_on_random_models(handles, sheets):
    m = PlanarModel.standard(handles, sheets)
    mus = m.mu_family()
    lams = m.lambda_family()
    assert validate_simple_disjoint(list(mus), m).ok
    assert validate_simple_disjoint(list(lams), m).ok
    for i, t in enumerate(m.tubes):
        assert homology_class(mus[i], m)[2 * i] == 1
        assert homology_class(lams[i], m)[2 * i + 1] == 1
