import math
from fractions import Fraction

import pytest

from rootedpoly.factor import dendrimer_poly
from rootedpoly.graph import (DendrimerSpec, Graph, complete, cycle, k1, path, star)
from rootedpoly.oracle import (CHARACTERISTIC_STANDARD, PERMANENTAL, char_poly_det,
                               simple_circuit_poly)
from rootedpoly.poly import Poly, X, parse_poly
from rootedpoly.spectra import RootSet, dendrimer_spectrum, multiplicity_at, roots

CHAR = CHARACTERISTIC_STANDARD


def test_roots_of_quadratic():
    rs = roots(parse_poly("x^2 - 1"))
    assert [(round(v.real, 9), m) for v, m in rs.roots] == [(1.0, 1), (-1.0, 1)]


def test_roots_flagship_polynomial():
    rs = roots(parse_poly("x^9 - 8*x^7 + 18*x^5 - 12*x^3"))
    got = [(v.real, m) for v, m in rs.roots]
    expect = [(2.175, 1), (1.414, 1), (1.126, 1), (0.0, 3),
              (-1.126, 1), (-1.414, 1), (-2.175, 1)]
    for (gv, gm), (ev, em) in zip(got, expect):
        assert gm == em
        assert abs(gv - ev) < 1e-3
    assert rs.roots[3] == (0, 3)  # exact triple zero
    assert max(rs.residuals) < 1e-10


def test_roots_double_zero():
    rs = roots(parse_poly("x^2"))
    assert rs.roots == ((0, 2),)


def test_roots_rejects_constants():
    with pytest.raises(ValueError, match="degree 0"):
        roots(Poly.const(3))


def test_roots_float_coefficients():
    p = Poly.from_univariate_coeffs([1.0, 0.0, -2.0])
    rs = roots(p)
    values = sorted(v.real for v in rs.expanded())
    assert abs(values[0] + math.sqrt(2)) < 1e-12
    assert abs(values[1] - math.sqrt(2)) < 1e-12


def test_roots_conjugate_closure():
    p = simple_circuit_poly(Graph(p=3, arcs={(1, 2): 1, (2, 3): 1, (3, 1): 1}), CHAR)
    rs = roots(p)
    values = rs.expanded()
    for v in values:
        assert any(abs(v.conjugate() - u) < 1e-9 for u in values)


def test_roots_multiplicity_sum_and_order():
    for g in (path(5), star(4), cycle(6)):
        p = char_poly_det(g)
        rs = roots(p)
        assert rs.source_degree == g.p
        assert sum(m for _, m in rs.roots) == g.p
        reals = [v.real for v in rs.values()]
        assert reals == sorted(reals, reverse=True)


def test_roots_reconstruct_monic_input():
    for g in (path(6), star(5), cycle(8), complete(4), path(12), cycle(12)):
        p = char_poly_det(g)
        rs = roots(p)
        recon = Poly.one()
        for v, m in rs.roots:
            recon = recon * (Poly.variable(X) - v) ** m
        ce = [complex(c) for c in p.univariate_coeffs(X)]
        cn = [complex(c) for c in recon.univariate_coeffs(X)]
        assert max(abs(a - b) for a, b in zip(ce, cn)) < 1e-8


def test_bipartite_negation_symmetry():
    for g in (path(4), star(3), cycle(6)):
        rs = roots(char_poly_det(g))
        values = rs.expanded()
        for v in values:
            assert any(abs(v + u) < 1e-8 for u in values)


def test_multiplicity_at_examples():
    assert multiplicity_at(parse_poly("x^4 - 3*x^2"), 0) == 2
    assert multiplicity_at(parse_poly("x^2 - 1"), 0) == 0
    assert multiplicity_at(parse_poly("x^3"), 0) == 3
    assert multiplicity_at(parse_poly("x^2 - x - 1/4"), Fraction(1, 2)) == 0


def test_rootset_validates_total():
    with pytest.raises(ValueError, match="multiplicities"):
        RootSet(roots=((1.0, 1),), source_degree=2, cluster_tol=1e-7, residuals=(0.0,))


def path_spec(generations: int) -> DendrimerSpec:
    return DendrimerSpec(core=k1(rooted=False), unit=complete(2).with_root(1),
                         attach_sites=(2,), generations=generations)


def test_dendrimer_spectrum_zero_generations_is_core_root():
    spec = DendrimerSpec(core=Graph(p=1, loops={1: 2}), unit=complete(2).with_root(1),
                         attach_sites=(2,), generations=0)
    # with the all-plus convention the single vertex polynomial is x + b
    rs = dendrimer_spectrum(spec, PERMANENTAL)
    assert abs(rs.roots[0][0] - (-2)) < 1e-12
    # under the determinant convention the loop enters negated
    rs = dendrimer_spectrum(spec, CHAR)
    assert abs(rs.roots[0][0] - 2) < 1e-12


def test_dendrimer_spectrum_paths():
    for j in (1, 3, 7):
        rs = dendrimer_spectrum(path_spec(j), CHAR)
        n = j + 1
        expect = sorted((2 * math.cos(k * math.pi / (n + 1)) for k in range(1, n + 1)),
                        reverse=True)
        got = sorted((v.real for v in rs.expanded()), reverse=True)
        assert max(abs(a - b) for a, b in zip(expect, got)) < 1e-8


def test_dendrimer_spectrum_degree_equals_vertex_count():
    spec = DendrimerSpec(core=k1(rooted=False), unit=path(3).with_root(2),
                         attach_sites=(1, 3), generations=5)
    rs = dendrimer_spectrum(spec, CHAR)
    assert rs.source_degree == 1 + 2 * (2 ** 5 - 1)


def test_dendrimer_poly_never_builds_graph_beyond_cap():
    # 1023 vertices is far above the enumeration cap; only the 3-vertex unit
    # and the 1-vertex core are ever enumerated
    spec = DendrimerSpec(core=k1(rooted=False), unit=path(3).with_root(2),
                         attach_sites=(1, 3), generations=9)
    poly = dendrimer_poly(spec, CHAR, cap=4)
    assert poly.degree_in(X) == 1023
