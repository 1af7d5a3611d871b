"""Composition identities: circuit polynomials of coalescences, rooted
products, restricted rooted products and dendrimers computed from the
polynomials of their constituents, without building the product graph.

Conventions shared by everything here:

* Substitution-style identities replace a vertex variable together with its
  one-vertex cover weight.  Mechanically: substitute v -> num / (u * den)
  with denominators cleared, then divide the result by u**arity, where u is
  the weight of a one-vertex component under the active specialization
  (the generic w1 variable, or its numeric value, see WeightMode.w1_unit).
  At w1 = 1 this reduces to the plain textbook substitution.
* Constituent polynomials follow the loop split of the chosen flavor: either
  the core polynomial carries the total coalescence-node loop weights and the
  attachments are root-loop-stripped, or the core is fully loop-stripped and
  each attachment carries the total loop weight at its root.  Both flavors
  produce the identical polynomial.
* Bipartite expansion coefficients are normalized by the one-vertex unit
  weight, so the leading coefficient is always exactly 1 and the even part
  q(z) built from them is monic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .graph import (DendrimerSpec, Graph, attach_root_loop, bipartition, delete_root,
                    edge_join, strip_all_loops)
from .oracle import (DEFAULT_CAP, WeightMode, circuit_poly, simple_circuit_poly,
                     specialize)
from .poly import (Poly, Var, X, divides, multilinear_ratio_substitute,
                   ratio_substitute, wvar, xvar, yvar)
from .spectra import RootSet, multiplicity_at, roots as numeric_roots

Unit = Poly | int | Fraction


class ProductMode(Enum):
    """Which side of a rooted product carries the coalescence-node loops."""

    ROOT_LOOPS_STRIPPED = "root-loops-stripped"
    CORE_LOOPS_STRIPPED = "core-loops-stripped"


@dataclass(frozen=True)
class BipartiteExpansion:
    """Synchronous expansion coefficients of a loopless bipartite core.

    delta[k] multiplies y1**(p1-k) * y2**(p2-k); delta[0] == 1 exactly.
    Entries are polynomials in the w variables, or constants once specialized.
    """

    delta: tuple[Poly, ...]
    p1: int
    p2: int

    def __post_init__(self):
        if len(self.delta) != self.p2 + 1:
            raise ValueError(f"expected {self.p2 + 1} coefficients, got {len(self.delta)}")
        if self.delta[0] != Poly.one():
            raise ValueError("leading expansion coefficient must be 1")

    def constants(self) -> list:
        return [d.constant_value() for d in self.delta]


@dataclass(frozen=True)
class MuSquares:
    """Squared symmetric roots of a bipartite core, plus the exact even part."""

    root_set: RootSet
    q: Poly


@dataclass(frozen=True)
class CommonMultiplicity:
    value: int


@dataclass(frozen=True)
class DivisibilityReport:
    zero_multiplicity: int
    exponent_larger: int
    exponent_smaller: int
    divides: bool
    quotient: Poly | None


# -- unit-weight bookkeeping ---------------------------------------------------

_W1 = Poly.variable(wvar(1))


def _unit_mul(p: Poly, unit) -> Poly:
    if isinstance(unit, Poly):
        if unit != _W1:
            raise ValueError("polynomial unit must be the w1 variable")
        return p * unit
    if unit == 1:
        return p
    return p * unit


def _unit_divide(p: Poly, unit, k: int) -> Poly:
    if k == 0:
        return p
    if isinstance(unit, Poly):
        if unit != _W1:
            raise ValueError("polynomial unit must be the w1 variable")
        return p.divide_var_power(wvar(1), k)
    if unit == 1:
        return p
    if isinstance(unit, (int, Fraction)):
        return p * (Fraction(1) / unit) ** k
    return p * (1 / unit) ** k


# -- coalescence and rooted products ------------------------------------------


def coalescence_poly(bg: Poly, bh_minus_r: Poly, bh_tri: Poly, root_var: Var,
                     w1_unit: Unit = 1) -> Poly:
    """Polynomial of a coalescence from the two constituent polynomials.

    bg must be the polynomial of the graph carrying the full loop weight of
    the coalescence node and be multilinear in root_var; bh_tri and
    bh_minus_r are the polynomials of the attachment with its root loops
    stripped and with its root deleted.
    """
    raw = multilinear_ratio_substitute(bg, [(root_var, bh_tri, _unit_mul(bh_minus_r, w1_unit))])
    return _unit_divide(raw, w1_unit, 1)


def rooted_product_poly(core_poly: Poly, gamma_polys: Sequence[tuple],
                        flavor: ProductMode, w1_unit: Unit = 1) -> Poly:
    """Product polynomial from the core polynomial and per-vertex triples.

    gamma_polys[i] = (ph, pl, ph_tri) holds the polynomials of the i-th
    attachment carrying the full coalescence loop weight, of its root-deleted
    graph, and of its root-loop-stripped graph.  With ROOT_LOOPS_STRIPPED the
    core polynomial must carry all coalescence-node loops and ph_tri is the
    substitution numerator; with CORE_LOOPS_STRIPPED the core must be
    loop-free and ph is the numerator.  Unused entries may be None.
    """
    p = len(gamma_polys)
    for v in core_poly.variables():
        if v.kind == 1 and v.index > p:
            raise ValueError(f"core polynomial mentions x{v.index} but only {p} attachments given")
    targets = []
    for i, entry in enumerate(gamma_polys, start=1):
        ph, pl, ph_tri = entry
        num = ph_tri if flavor is ProductMode.ROOT_LOOPS_STRIPPED else ph
        if num is None or pl is None:
            raise ValueError(f"attachment {i} lacks the polynomial needed for {flavor.value}")
        targets.append((xvar(i), num, _unit_mul(pl, w1_unit)))
    raw = multilinear_ratio_substitute(core_poly, targets)
    return _unit_divide(raw, w1_unit, p)


def simple_rooted_product_poly(bg_simple: Poly, bh_tri: Poly, bh_minus_r: Poly,
                               p: int, w1_unit: Unit = 1) -> Poly:
    """Same-attachment-everywhere product from the simple core polynomial.

    Expands the core polynomial in powers of x and recombines the coefficients
    with powers of the attachment polynomials; exact, and identical to the
    substitution route.
    """
    gammas = bg_simple.coeffs_in_x()
    if len(gammas) - 1 != p:
        raise ValueError(f"core polynomial has degree {len(gammas) - 1}, expected {p}")
    ghat = [_unit_divide(g, w1_unit, p - i) for i, g in enumerate(gammas)]
    if ghat[0] != Poly.one():
        raise ValueError("gamma0 != 1: core polynomial is not monic after unit normalization")
    total = Poly.zero()
    tri_pow = Poly.one()
    powers_tri = [Poly.one()]
    for _ in range(p):
        tri_pow = tri_pow * bh_tri
        powers_tri.append(tri_pow)
    del_pow = Poly.one()
    for g in range(p + 1):
        total = total + ghat[g] * powers_tri[p - g] * del_pow
        if g < p:
            del_pow = del_pow * bh_minus_r
    return total


def spectral_product_form(bg_roots: RootSet, bh_tri: Poly, bh_minus_r: Poly,
                          w1_unit: Unit = 1) -> Poly:
    """Numeric product polynomial from the core roots: one factor per root."""
    p = bg_roots.source_degree
    den = _unit_mul(bh_minus_r, w1_unit)
    prod = Poly.one()
    for lam, mult in bg_roots.roots:
        prod = prod * (bh_tri - lam * den) ** mult
    return _unit_divide(prod, w1_unit, p)


def spectral_product_from_loops(bg_roots: RootSet, h: Graph, mode: WeightMode,
                                cap: int = DEFAULT_CAP) -> Poly:
    """Numeric product polynomial as a product of loop-decorated attachment
    polynomials: for each core root, an extra loop of matching weight is added
    at the root of h and the decorated graph is fed to the enumeration oracle.

    h must carry the full coalescence-node loop weight at its root; the extra
    loop weight per root is chosen so the decorated polynomial equals the
    corresponding factor of the root-product form under the given mode.
    """
    if mode.w1 is None:
        raise ValueError("loop route needs a specialized mode with numeric w1")
    base = h.loop(h.root)
    prod = Poly.one()
    for lam, mult in bg_roots.roots:
        beta = -lam / (mode.sigma_b * mode.w1)
        if beta.imag == 0:
            beta = beta.real
        decorated = attach_root_loop(h, base + beta)
        prod = prod * simple_circuit_poly(decorated, mode, cap) ** mult
    return prod


# -- bipartite machinery --------------------------------------------------------


def core_parts(core: Graph) -> tuple[tuple[int, ...], int, int]:
    parts = core.parts if core.parts is not None else bipartition(core)
    n1, n2 = parts.count(1), parts.count(2)
    if n1 < n2 or (n1 == n2 and core.p and parts[0] == 2):
        parts = tuple(3 - x for x in parts)
        n1, n2 = n2, n1
    return parts, n1, n2


def bipartite_bivariate(core: Graph, mode: WeightMode, cap: int = DEFAULT_CAP) -> Poly:
    """Circuit polynomial of a loopless bipartite core in the two part variables."""
    if core.loops:
        raise ValueError("bipartite core must be loopless")
    parts, _, _ = core_parts(core)
    full = circuit_poly(core, cap)
    collapsed = full.substitute_many(
        {xvar(i): Poly.variable(yvar(parts[i - 1])) for i in range(1, core.p + 1)})
    return specialize(collapsed, replace(mode, collapse_x=False), core, cap)


def bipartite_delta(core: Graph, mode: WeightMode, cap: int = DEFAULT_CAP) -> BipartiteExpansion:
    """Synchronous expansion of a loopless bipartite core under a weight mode.

    The two collective part variables must appear only in monomials
    y1**(p1-k) * y2**(p2-k); anything else raises.  Coefficients are
    normalized by the one-vertex unit weight, making the leading one 1.
    """
    if core.loops:
        raise ValueError("bipartite core must be loopless")
    parts, p1, p2 = core_parts(core)
    p = core.p
    full = circuit_poly(core, cap)
    bivar = full.substitute_many(
        {xvar(i): Poly.variable(yvar(parts[i - 1])) for i in range(1, p + 1)})
    buckets: list[dict] = [dict() for _ in range(p2 + 1)]
    for mono, coeff in bivar.terms().items():
        e1 = e2 = 0
        rest = []
        for v, e in mono:
            if v == yvar(1):
                e1 = e
            elif v == yvar(2):
                e2 = e
            else:
                rest.append((v, e))
        k = p1 - e1
        if k != p2 - e2 or not 0 <= k <= p2:
            raise ValueError(f"not bipartite-consistent: monomial y1^{e1}*y2^{e2}")
        buckets[k][tuple(rest)] = coeff
    delta = []
    for k, bucket in enumerate(buckets):
        raw = Poly(bucket)
        try:
            normalized = raw.divide_var_power(wvar(1), p - 2 * k)
        except ValueError as exc:
            raise ValueError(f"not bipartite-consistent: {exc}") from exc
        delta.append(specialize(normalized, replace(mode, collapse_x=False), core, cap))
    return BipartiteExpansion(tuple(delta), p1, p2)


def restricted_product_poly(delta: BipartiteExpansion, ph1: Poly, pl1: Poly,
                            ph2: Poly, pl2: Poly) -> Poly:
    """Restricted-product polynomial from the expansion coefficients.

    ph1/ph2 are the attachment polynomials carrying the full loop weight at
    their roots; pl1/pl2 are their root-deleted polynomials.
    """
    p1, p2 = delta.p1, delta.p2
    pow1 = [Poly.one()]
    for _ in range(p1):
        pow1.append(pow1[-1] * ph1)
    pow2 = [Poly.one()]
    for _ in range(p2):
        pow2.append(pow2[-1] * ph2)
    total = Poly.zero()
    lpow = Poly.one()
    l12 = pl1 * pl2
    for k in range(p2 + 1):
        total = total + delta.delta[k] * pow1[p1 - k] * pow2[p2 - k] * lpow
        if k < p2:
            lpow = lpow * l12
    return total


def restricted_substitution_poly(bivariate: Poly, ph1: Poly, pl1: Poly,
                                 ph2: Poly, pl2: Poly, w1_unit: Unit = 1) -> Poly:
    """Restricted-product polynomial by direct substitution into the bivariate
    core polynomial, denominators cleared.  Agrees exactly with the
    expansion route."""
    p = bivariate.degree_in(yvar(1)) + bivariate.degree_in(yvar(2))
    raw = ratio_substitute(bivariate, [
        (yvar(1), ph1, _unit_mul(pl1, w1_unit)),
        (yvar(2), ph2, _unit_mul(pl2, w1_unit)),
    ])
    return _unit_divide(raw, w1_unit, p)


def one_sided_product_poly(delta: BipartiteExpansion, ph: Poly, pl: Poly,
                           other_loop, mode: WeightMode, larger_side: bool) -> Poly:
    """Attachments on one part only; the other part keeps bare loop-weighted
    vertices.  other_loop is the common loop weight on the bare side."""
    unit = _unit_mul(Poly.variable(X) + mode.sigma_b * other_loop, mode.w1_unit)
    if larger_side:
        return restricted_product_poly(delta, ph, pl, unit, Poly.one())
    return restricted_product_poly(delta, unit, Poly.one(), ph, pl)


def mu_squares(delta: BipartiteExpansion, cluster_tol: float = 1e-7) -> MuSquares:
    """Squared symmetric roots of the core from its expansion coefficients."""
    coeffs = delta.constants()
    q = Poly.from_univariate_coeffs(coeffs)
    if delta.p2 == 0:
        empty = RootSet(roots=(), source_degree=0, cluster_tol=cluster_tol, residuals=())
        return MuSquares(empty, q)
    return MuSquares(numeric_roots(q, cluster_tol), q)


def mu_squares_from_simple(simple: Poly, p1: int, p2: int,
                           cluster_tol: float = 1e-7) -> MuSquares:
    """Squared symmetric roots extracted from the simple core polynomial.

    The polynomial must have a single parity of powers and be divisible by
    x**(p1 - p2); its nonzero part is rewritten in z = x**2.
    """
    p = p1 + p2
    coeffs = simple.univariate_coeffs(X)
    if len(coeffs) - 1 != p:
        raise ValueError(f"expected degree {p}, got {len(coeffs) - 1}")
    qc = [coeffs[0]] + [0] * p2
    for i, c in enumerate(coeffs[1:], start=1):
        if c == 0:
            continue
        if i % 2:
            raise ValueError("spectrum not symmetric: mixed parity of powers")
        if i // 2 > p2:
            raise ValueError(f"spectrum not symmetric: not divisible by x^{p1 - p2}")
        qc[i // 2] = c
    q = Poly.from_univariate_coeffs(qc)
    if p2 == 0:
        empty = RootSet(roots=(), source_degree=0, cluster_tol=cluster_tol, residuals=())
        return MuSquares(empty, q)
    return MuSquares(numeric_roots(q, cluster_tol), q)


def restricted_spectral_form(mu2: RootSet, ph1: Poly, pl1: Poly, ph2: Poly,
                             pl2: Poly, p1: int, p2: int) -> Poly:
    """Numeric restricted-product polynomial built from the squared core roots."""
    if mu2.source_degree != p2:
        raise ValueError(f"expected {p2} squared roots, got {mu2.source_degree}")
    a = ph1 * ph2
    b = pl1 * pl2
    prod = ph1 ** (p1 - p2)
    for m, mult in mu2.roots:
        prod = prod * (a - m * b) ** mult
    return prod


def restricted_product_from_edge_join(mu2: RootSet, h1: Graph, h2: Graph,
                                      mode: WeightMode, p1: int, p2: int,
                                      cap: int = DEFAULT_CAP) -> Poly:
    """Numeric restricted-product polynomial as a product of polynomials of
    root-to-root edge-joined attachment pairs, one per squared core root."""
    if mode.w2 is None or mode.w2 == 0:
        raise ValueError("edge-join route needs a specialized mode with nonzero w2")
    if mu2.source_degree != p2:
        raise ValueError(f"expected {p2} squared roots, got {mu2.source_degree}")
    prod = simple_circuit_poly(h1, mode, cap) ** (p1 - p2)
    for m, mult in mu2.roots:
        weight = -m / mode.w2
        if isinstance(weight, complex) and weight.imag == 0:
            weight = weight.real
        joined = edge_join(h1, h2, weight)
        prod = prod * simple_circuit_poly(joined, mode, cap) ** mult
    return prod


def reciprocal_check(core: Graph, h1: Graph, h2: Graph, mode: WeightMode,
                     cap: int = DEFAULT_CAP) -> bool:
    """Whether swapping the two attachment sorts on an equipartite core
    preserves the product polynomial (it always does; exposed as a checker)."""
    if core.loops:
        raise ValueError("core must be loopless; put vertex weights on the attachment roots")
    _, p1, p2 = core_parts(core)
    if p1 != p2:
        raise ValueError(f"parts unequal: {p1} != {p2}")
    delta = bipartite_delta(core, mode, cap)
    polys = {}
    for h in (h1, h2):
        polys[id(h)] = (simple_circuit_poly(h, mode, cap),
                        simple_circuit_poly(delete_root(h), mode, cap))
    ph1, pl1 = polys[id(h1)]
    ph2, pl2 = polys[id(h2)]
    direct = restricted_product_poly(delta, ph1, pl1, ph2, pl2)
    swapped = restricted_product_poly(delta, ph2, pl2, ph1, pl1)
    return direct == swapped


def zero_divisibility_report(t_poly: Poly, ph1: Poly, ph2: Poly,
                             product_poly: Poly, p1: int, p2: int) -> DivisibilityReport:
    """Exact divisibility of the product polynomial by attachment powers tied
    to the multiplicity s of the zero root of the core polynomial.

    s always splits as (p1 - p2) guaranteed zeros plus twice the number of
    vanishing squared roots; each vanishing squared root yields one factor of
    each attachment polynomial, the part difference yields extra factors of
    the first.  Hence the exponents (s + p1 - p2) / 2 and (s - p1 + p2) / 2.
    """
    s = multiplicity_at(t_poly, 0)
    if s < p1 - p2:
        raise ValueError(f"zero multiplicity {s} below part difference {p1 - p2}")
    if (s - p1 + p2) % 2:
        raise ValueError(f"zero multiplicity {s} has wrong parity for parts ({p1},{p2})")
    e1 = (s + p1 - p2) // 2
    e2 = (s - p1 + p2) // 2
    divisor = ph1 ** e1 * ph2 ** e2
    ok, quotient = divides(divisor, product_poly)
    return DivisibilityReport(zero_multiplicity=s, exponent_larger=e1,
                              exponent_smaller=e2, divides=ok, quotient=quotient)


def common_multiplicity(poly1: Poly, poly2: Poly, lam, tol: float = 1e-8) -> CommonMultiplicity:
    """Minimum multiplicity of lam across two simple polynomials.

    Exact repeated division for rational lam, root clustering otherwise.
    """
    if isinstance(lam, (int, Fraction)):
        m1 = multiplicity_at(poly1, lam)
        m2 = multiplicity_at(poly2, lam)
    else:
        lam = complex(lam)

        def near(p: Poly) -> int:
            return sum(mult for value, mult in numeric_roots(p, tol).roots
                       if abs(value - lam) <= tol)

        m1, m2 = near(poly1), near(poly2)
    return CommonMultiplicity(min(m1, m2))


# -- dendrimers -------------------------------------------------------------------


def _shift_root_loop(p: Poly, q: Poly, extra, mode: WeightMode) -> Poly:
    """Polynomial of a rooted graph after adding extra loop weight at its root."""
    if extra == 0:
        return p
    return p + _unit_mul(q, mode.w1_unit) * (mode.sigma_b * extra)


def _keep_x(mode: WeightMode) -> WeightMode:
    if mode.x_to_one:
        raise ValueError(f"mode {mode.name} removes vertex variables; not usable here")
    return replace(mode, collapse_x=False)


def monodendron_polys(unit: Graph, attach_sites: Sequence[int], tiers: int,
                      mode: WeightMode, cap: int = DEFAULT_CAP) -> tuple[Poly, Poly]:
    """Simple polynomials of the branch with the given tier count and of the
    branch with its root deleted, computed tier by tier.

    Per tier, every unit vertex receives an attachment: the previous branch at
    the attach sites, a bare vertex elsewhere; unit loops ride on the
    attachment roots so the core stays loop-free.
    """
    if unit.root is None:
        raise ValueError("monodendron unit must be rooted")
    sites = set(attach_sites)
    keep = _keep_x(mode)
    w1 = mode.w1_unit
    xp = Poly.variable(X)
    p_cur = _unit_mul(xp, w1)          # bare rooted vertex
    q_cur = Poly.one()                 # nothing left after deleting its root
    if tiers == 0:
        return p_cur, q_cur
    unit_free = strip_all_loops(unit)
    core_main = specialize(circuit_poly(unit_free, cap), keep, unit_free, cap)
    deleted = delete_root(unit)
    deleted_free = strip_all_loops(deleted)
    core_del = specialize(circuit_poly(deleted_free, cap), keep, deleted_free, cap)
    del_index = {}
    nxt = 1
    for v in range(1, unit.p + 1):
        if v != unit.root:
            del_index[v] = nxt
            nxt += 1

    for _ in range(tiers):
        def gamma_for(v: int) -> tuple:
            if v in sites:
                ph = _shift_root_loop(p_cur, q_cur, unit.loop(v), mode)
                return (ph, q_cur, None)
            ph = _unit_mul(xp + mode.sigma_b * unit.loop(v), w1)
            return (ph, Poly.one(), None)

        gamma_main = [gamma_for(v) for v in range(1, unit.p + 1)]
        gamma_del = [None] * deleted.p
        for v, idx in del_index.items():
            gamma_del[idx - 1] = gamma_for(v)
        p_new = rooted_product_poly(core_main, gamma_main,
                                    ProductMode.CORE_LOOPS_STRIPPED, w1)
        q_new = rooted_product_poly(core_del, gamma_del,
                                    ProductMode.CORE_LOOPS_STRIPPED, w1)
        p_cur, q_cur = p_new, q_new
    return p_cur, q_cur


def dendrimer_poly(spec: DendrimerSpec, mode: WeightMode, cap: int = DEFAULT_CAP) -> Poly:
    """Simple circuit polynomial of a dendrimer by repeated factorization.

    Only the unit and the core are ever enumerated; the branches enter through
    their polynomials, so the result scales to thousands of vertices.
    """
    p_br, q_br = monodendron_polys(spec.unit, spec.attach_sites, spec.generations, mode, cap)
    core = spec.core
    core_free = strip_all_loops(core)
    keep = _keep_x(mode)
    core_poly = specialize(circuit_poly(core_free, cap), keep, core_free, cap)
    gamma = [(_shift_root_loop(p_br, q_br, core.loop(v), mode), q_br, None)
             for v in range(1, core.p + 1)]
    return rooted_product_poly(core_poly, gamma, ProductMode.CORE_LOOPS_STRIPPED, mode.w1_unit)
