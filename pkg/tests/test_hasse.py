from fractions import Fraction

import pytest

from horochow import hasse as hs
from horochow.catalog import reconstruction
from horochow.errors import DegeneratePairing, Inconsistent, MixedDegrees, Underdetermined, UnknownSymbol
from horochow.hasse import Edge, HasseDiagram, QComb, Vertex
from horochow.poly import Poly
from horochow.ringkit import RingPresentation, build


def qc(**terms):
    """``qc(s6=56, t_2__q1=32)``: trailing ``__qK`` is the q power, ``_`` stands for a prime."""
    out = {}
    for key, c in terms.items():
        name, _, k = key.partition("__q")
        out[(name.replace("_", "'"), int(k or 0))] = c
    return QComb(out)


# --- Chevalley data ---------------------------------------------------------


def test_chevalley_apply_examples(g2):
    d = g2.spec.hasse
    assert hs.chevalley_apply(d, "t'2") == qc(t_3=2, s3=1)
    assert hs.chevalley_apply(d, "s3") == qc(s4=3, t_0__q1=1)
    assert hs.chevalley_apply(d, "s7") == qc(t_4__q1=1, t_0__q2=2)
    assert hs.chevalley_apply(d, "s7", quantum=False) == QComb()


def test_mixed_degrees(g2):
    with pytest.raises(MixedDegrees):
        hs.chevalley_apply(g2.spec.hasse, {"s2": 1, "s3": 1})


def test_quantum_h6_by_iteration(g2):
    d = g2.spec.hasse
    comb = QComb({(d.unit, 0): 1})
    for _ in range(6):
        comb = hs.chevalley_apply(d, comb)
    assert comb == qc(s6=56, t_2__q1=32, s2__q1=16)


def test_spin7_tau6_difference(spin7):
    d = spin7.spec.hasse
    diff = hs.chevalley_apply(d, {"t6m": 1, "t6p": -1})
    assert diff == QComb({(d.unit, 1): 1})


G2_DEGREES = {"t'0": 56, "t'1": 56, "t'2": 38, "t'3": 10, "t'4": 4, "t'5": 1,
              "s2": 18, "s3": 18, "s4": 6, "s5": 3, "s6": 1, "s7": 1}
SPIN7_DEGREES = {"s'0": 12, "s'1": 12, "s'2": 12, "s'3": 5, "s'4": 3, "s'5": 1, "t6p": 1,
                 "t3": 2, "t4": 2, "t5": 2, "t6m": 1, "t7": 1, "t8": 1, "t9": 1}


@pytest.mark.parametrize("name, want", [("g2", G2_DEGREES), ("spin7", SPIN7_DEGREES)])
def test_degrees_from_paths(request, name, want):
    ctx = request.getfixturevalue(name)
    assert hs.degrees_from_hasse(ctx.spec.hasse) == want


@pytest.mark.parametrize("name", ["g2", "spin7"])
def test_degrees_equal_integrals(request, name):
    ctx = request.getfixturevalue(name)
    d, ring = ctx.spec.hasse, ctx.ring
    h = ring.gen("h")
    degs = hs.degrees_from_hasse(d)
    for v in d.vertices:
        assert ring.integrate(ctx.images[v.id] * h ** (d.top - v.degree)) == degs[v.id]


@pytest.mark.parametrize("name", ["g2", "spin7"])
def test_vertex_counts_match_hilbert(request, name):
    ctx = request.getfixturevalue(name)
    d = ctx.spec.hasse
    assert [len(d.level(k)) for k in range(d.top + 1)] == ctx.ring.hilbert()


@pytest.mark.parametrize("name", ["g2", "spin7"])
def test_quantum_chevalley_matches_ring(request, name):
    ctx = request.getfixturevalue(name)
    d, ring, images = ctx.spec.hasse, ctx.qring, ctx.qimages
    h = ring.gen("h")
    for v in d.vertices:
        assert hs.express(d, ring, images, h * images[v.id]) == hs.chevalley_apply(d, v.id)


# --- Giambelli --------------------------------------------------------------


def test_giambelli_examples(g2):
    ring, qring = g2.ring, g2.qring
    assert g2.images["t'3"] == ring("1/2*h^3 - h*s")
    assert g2.images["s6"] == ring("1/56*h^6")
    assert g2.qimages["s6"] == qring("1/56*h^6 - 4/7*h^2*q + 2/7*s*q")


def _toy_ring():
    # Hilbert function 1, 2, 1
    pres = RingPresentation((("x", 1), ("y", 1)), ("x^2 - y^2", "x*y"), 2, ("x", 2, 1))
    return build(pres, [1, 2, 1])


def _toy_diagram(edges):
    verts = [Vertex("u", 0), Vertex("a", 1), Vertex("b", 1), Vertex("p", 2)]
    return HasseDiagram(verts, [Edge(s, t, Fraction(m)) for s, t, m in edges])


def test_giambelli_underdetermined():
    ring = _toy_ring()
    diag = _toy_diagram([("u", "a", 1), ("a", "p", 1), ("b", "p", 1)])
    with pytest.raises(Underdetermined):
        hs.giambelli_solve(diag, ring, {"u": Poly.constant(ring.names, 1)})


def test_giambelli_seeds_fix_the_gap():
    ring = _toy_ring()
    diag = _toy_diagram([("u", "a", 1), ("a", "p", 1)])
    images = hs.giambelli_solve(diag, ring, {"u": "1", "b": "y"})
    assert images["a"] == ring.gen("x") and images["p"] == ring("x^2")


def test_giambelli_inconsistent():
    ring = _toy_ring()
    diag = _toy_diagram([("u", "a", 2), ("a", "p", 1)])
    with pytest.raises(Inconsistent):
        hs.giambelli_solve(diag, ring, {"u": "1", "a": "x", "b": "y"})


# --- tables and duals ----------------------------------------------------------


def test_verify_table(g2):
    rows = [{"lhs": "t'2*s2", "rhs": "2*s4"}, {"lhs": "s2*s2", "rhs": "s4"}, {"lhs": "s3*s3", "rhs": "s6"}]
    report = hs.verify_table(g2.spec.hasse, g2.ring, g2.images, rows)
    assert [c.status for c in report] == ["pass", "pass", "fail"]
    # sigma3 = h*sigma2 and the integral of s^2*h^3 is 6
    assert "engine gives 6σ6" in report[2].detail


def test_verify_table_unknown_symbol(g2):
    with pytest.raises(UnknownSymbol):
        hs.verify_table(g2.spec.hasse, g2.ring, g2.images, [{"lhs": "zz", "rhs": "s2"}])


def test_dual_diagram_check(g2):
    spec = g2.spec
    data = spec.golden["dual_basis"]
    report, images = hs.dual_diagram_check(
        spec.hasse, g2.ring, g2.images, spec.dual_hasse, data["dual_of"], data["formulas"]
    )
    assert report.ok, [c.line() for c in report if not c.passed]
    for w, v in data["dual_of"].items():
        assert g2.ring.integrate(images[w] * g2.images[v]) == 1


# --- reconstruction ---------------------------------------------------------


@pytest.mark.parametrize("name", ["g2", "spin7"])
def test_reconstruction(request, name):
    ctx = request.getfixturevalue(name)
    res = reconstruction(ctx.spec, ctx)
    assert res.contains_true
    assert res.solution_dimension == 1
    assert all(ok for _, ok in res.samples_checked)


def test_reconstruction_true_operator_is_solution(g2):
    d = g2.spec.hasse
    true_op = hs.ring_operator(d, g2.ring, g2.images, g2.images["s2"], 2)
    assert hs.operators_associative(d, true_op, 2)


def test_degenerate_pairing():
    diag = _toy_diagram([("u", "a", 1), ("a", "p", 1), ("b", "p", 1)])
    pairing = {0: [[1]], 1: [[1, 0], [0, 0]], 2: [[1]]}
    with pytest.raises(DegeneratePairing):
        hs.reconstruct_second_generator(diag, pairing, "a")
