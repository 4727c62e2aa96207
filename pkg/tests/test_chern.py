from fractions import Fraction

import pytest

from horochow.chern import (
    BundleChern,
    external_tensor_top_chern,
    g2_fundamental_class,
    schur_of_y,
    tensor_top_chern_monomials,
    twisted_dual_top_chern,
)
from horochow.schubert import GrassCtx, grass_mult
from horochow.symfunc import elementary, monomial_symmetric

G27, G28 = GrassCtx(2, 7), GrassCtx(2, 8)


def test_twisted_dual_of_quotient_bundle():
    base = twisted_dual_top_chern(BundleChern.quotient(G27))
    assert base == {(4, 1): 2, (3, 2): 2}


def test_twisted_dual_of_trivial_bundles():
    g24 = GrassCtx(2, 4)
    assert twisted_dual_top_chern(BundleChern.trivial(g24, 1)) == g24.hyperplane()
    assert twisted_dual_top_chern(BundleChern.trivial(g24, 2)) == {(2,): 1, (1, 1): 1}


@pytest.mark.parametrize("ctx", [GrassCtx(2, 4), G27, GrassCtx(3, 6)], ids=str)
def test_twisted_dual_is_homogeneous(ctx):
    for bundle in (BundleChern.quotient(ctx), BundleChern.trivial(ctx, 3)):
        assert twisted_dual_top_chern(bundle).degrees() <= {bundle.rank}


def test_bundle_rejects_wrong_degrees():
    with pytest.raises(ValueError):
        BundleChern(2, (G27.cycle((2,)), G27.cycle((2,))))


def test_bidegree_55_part():
    monos = tensor_top_chern_monomials(BundleChern.quotient(G27), 2)
    part = {ylam: left for (deg, ylam), left in monos.items() if deg == 5}
    t = G27.special
    assert part == {(5,): t(5), (4, 1): grass_mult(t(4), t(1)), (3, 2): grass_mult(t(3), t(2))}


def test_line_bundle_case():
    g13 = GrassCtx(1, 3)
    cls = external_tensor_top_chern(BundleChern(1, (g13.hyperplane(),)), 1, g13)
    assert cls == {((1,), ()): 1, ((), (1,)): 1}


def test_trivial_rank_two_with_line():
    g14 = GrassCtx(1, 4)
    cls = external_tensor_top_chern(BundleChern.trivial(g14, 2), 1, g14)
    # c_2 of two copies of the line bundle is its c_1 squared
    assert cls == {((), (2,)): 1}


def test_external_tensor_needs_matching_rank():
    with pytest.raises(ValueError):
        external_tensor_top_chern(BundleChern.quotient(G27), 2, GrassCtx(1, 4))


def test_external_tensor_slices_sum_to_whole():
    cls = external_tensor_top_chern(BundleChern.quotient(G27), 2, G28)
    assert cls.total_degrees() == {10}
    total = sum((cls.part(d) for d in range(11)), type(cls)({}, G27, G28))
    assert total == cls


def test_fundamental_class_pipeline():
    res = g2_fundamental_class()
    assert res.fundamental_class == G28.cycle((4, 1), 2) + G28.cycle((3, 2), 2)
    assert res.evaluations == {(5,): 0, (4, 1): 2, (3, 2): 4}
    assert res.y_combination == monomial_symmetric((4, 1), 2) * 2 + monomial_symmetric((3, 2), 2) * 4
    assert res.schur_route == res.fundamental_class
    assert res.stages[-1] == "2σ[4,1] + 2σ[3,2]"


def test_schur_route_directly():
    e1, e2 = elementary(1, 2), elementary(2, 2)
    assert schur_of_y(e2 * (e1 ** 3 - e1 * e2) * 2, G28) == {(4, 1): 2, (3, 2): 2}
    assert schur_of_y(e2 * Fraction(1), G28) == {(1, 1): 1}
