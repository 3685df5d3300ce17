import pytest

from spundiag.abelian import AbelianGroup
from spundiag.heegaard import (
    Flavor,
    from_catalog,
    h1,
    h2,
    make_lens,
    make_poincare,
    make_torus3,
)
from spundiag.curves import homology_class
from spundiag.surface import is_cut_system


class TestMakeLens:
    def test_l21(self):
        hd = make_lens(2, 1)
        assert hd.genus == 1
        assert hd.flavor is Flavor.DeltaIsLongitudes
        assert h1(hd) == AbelianGroup.cyclic(2)

    def test_s3(self):
        hd = make_lens(1, 0)
        assert h1(hd).is_trivial
        # epsilon is a meridian-like dual: class a_1
        assert homology_class(hd.epsilon[0], hd.model) == (1, 0)

    def test_l72(self):
        assert h1(make_lens(7, 2)) == AbelianGroup.cyclic(7)

    def test_grid(self):
        for p in range(1, 13):
            for q in range(p):
                if p == 1 and q != 0:
                    continue
                from math import gcd

                if gcd(p, q) != 1:
                    continue
                assert h1(make_lens(p, q)) == AbelianGroup.cyclic(p), (p, q)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            make_lens(4, 2)
        with pytest.raises(ValueError):
            make_lens(0, 1)

    def test_cut_systems(self):
        hd = make_lens(5, 2)
        assert is_cut_system(hd.model, list(hd.delta)).ok
        assert is_cut_system(hd.model, list(hd.epsilon)).ok
        assert hd.delta_is_verbatim()


class TestCatalog:
    def test_torus3(self):
        hd = make_torus3()
        assert hd.genus == 3
        assert h1(hd) == AbelianGroup.free(3)
        assert h2(hd) == AbelianGroup.free(3)
        assert is_cut_system(hd.model, list(hd.epsilon)).ok
        assert hd.delta_is_verbatim()

    def test_poincare(self):
        hd = make_poincare()
        assert hd.genus == 2
        assert h1(hd).is_trivial
        assert h2(hd).is_trivial
        assert hd.flavor is Flavor.DeltaIsLongitudes
        assert is_cut_system(hd.model, list(hd.epsilon)).ok

    def test_h2_duality(self):
        assert h2(make_lens(6, 1)).is_trivial
        assert h2(make_torus3()) == AbelianGroup.free(3)

    def test_from_catalog(self):
        assert from_catalog("lens:2,1").label == "lens(2,1)"
        assert from_catalog("torus3").genus == 3
        assert from_catalog("poincare").genus == 2
        with pytest.raises(KeyError):
            from_catalog("nope")
        with pytest.raises(ValueError):
            from_catalog("lens:x,y")

    def test_h1_curve_permutation_invariance(self):
        hd = make_torus3()
        import itertools

        base = h1(hd)
        for perm in itertools.permutations(range(3)):
            shuffled = hd.epsilon[perm[0]], hd.epsilon[perm[1]], hd.epsilon[perm[2]]
            hd2 = type(hd)(
                hd.label, hd.genus, hd.model, hd.delta, shuffled, hd.flavor
            )
            assert h1(hd2) == base

    def test_h1_orientation_invariance(self):
        hd = make_lens(5, 1)
        hd2 = type(hd)(
            hd.label,
            hd.genus,
            hd.model,
            hd.delta,
            (hd.epsilon[0].reversed(),),
            hd.flavor,
        )
        assert h1(hd2) == h1(hd)
