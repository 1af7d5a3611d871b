"""Identity verification suites over an enumerated corpus.

Each suite checks a family of composition identities against the enumeration
oracle on explicitly constructed product graphs (exact suites, zero
tolerance) or against the exact routes (numeric suites, relative tolerance).
The corpus is every connected core on up to four vertices crossed with six
rooted attachment graphs, with and without injected loop weights.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace

from . import factor, spectra
from .factor import ProductMode
from .graph import (DendrimerSpec, Graph, attach_root_loop, bipartition, complete,
                    cycle, delete_root, from_edges, k1, monodendron, monodendron_star,
                    path, rooted_product, restricted_rooted_product, star,
                    strip_all_loops, strip_root_loops)
from .oracle import (CHARACTERISTIC_STANDARD, GENERIC, PERMANENTAL, WeightMode,
                     char_poly_det, circuit_poly, simple_circuit_poly, specialize)
from .poly import Poly, X, divides, ratio_substitute, wvar, xvar

SUITE_CAP = 13


@dataclass
class IdentityReport:
    identity: str
    instances: int = 0
    failures: int = 0
    max_deviation: float = 0.0
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.failures == 0 and self.instances > 0 else "fail"

    def record(self, ok: bool, deviation: float = 0.0, detail: str = ""):
        self.instances += 1
        if deviation > self.max_deviation:
            self.max_deviation = deviation
        if not ok:
            self.failures += 1
            if detail and not self.detail:
                self.detail = detail


@dataclass
class SuiteReport:
    suite: str
    identities: list[IdentityReport] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.identities)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "elapsed_seconds": round(self.elapsed, 3),
            "identities": [
                {
                    "id": r.identity,
                    "instances": r.instances,
                    "failures": r.failures,
                    "max_deviation": r.max_deviation,
                    "status": r.status,
                    **({"detail": r.detail} if r.detail else {}),
                }
                for r in self.identities
            ],
        }


# -- corpus -------------------------------------------------------------------


def corpus_cores() -> list[tuple[str, Graph]]:
    """Every connected undirected graph on at most four vertices."""
    return [
        ("k1", k1(rooted=False)),
        ("k2", complete(2)),
        ("p3", path(3)),
        ("k3", complete(3)),
        ("p4", path(4)),
        ("star3", star(3)),
        ("c4", cycle(4)),
        ("paw", from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4)])),
        ("diamond", from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])),
        ("k4", complete(4)),
    ]


def corpus_attachments() -> list[tuple[str, Graph]]:
    return [
        ("k1", k1()),
        ("k2", complete(2).with_root(1)),
        ("p3-end", path(3).with_root(1)),
        ("p3-mid", path(3).with_root(2)),
        ("k3", complete(3).with_root(1)),
        ("k1-loop", k1(loop=1)),
    ]


def loop_variants(p: int) -> list[dict[int, int]]:
    """Loop weight injections exercising values -1, 1 and 2."""
    variants: list[dict[int, int]] = [{}, {1: -1}]
    third = {1: 1, p: 2} if p > 1 else {1: 2}
    variants.append(third)
    return variants


def bipartite_cores() -> list[tuple[str, Graph]]:
    out = []
    for name, g in corpus_cores():
        try:
            parts = bipartition(g)
        except ValueError:
            continue
        out.append((name, g.with_parts(parts)))
    return out


# -- constituent polynomials in the product's variable space --------------------


def attachment_triple(h: Graph, extra_root_loop, mode: WeightMode, cap: int,
                      vmap: dict[int, int] | None = None):
    """(full, root-deleted, root-loop-stripped) polynomials of one attachment.

    extra_root_loop is the loop weight the attachment root picks up from the
    core vertex it lands on.  With vmap given, per-vertex variables are renamed
    into the product graph's numbering; otherwise the simple collapse applies.
    """
    hhat = attach_root_loop(h, extra_root_loop + h.loop(h.root))
    htri = strip_root_loops(h)
    hdel = delete_root(h)
    if vmap is None:
        simple = mode.simple()
        return (simple_circuit_poly(hhat, simple, cap),
                simple_circuit_poly(hdel, simple, cap),
                simple_circuit_poly(htri, simple, cap))
    keep = replace(mode, collapse_x=False)
    ren = {xvar(v): Poly.variable(xvar(g)) for v, g in vmap.items()}
    del_map = {}
    nxt = 1
    for v in range(1, h.p + 1):
        if v != h.root:
            del_map[v] = nxt
            nxt += 1
    ren_del = {xvar(d): Poly.variable(xvar(vmap[v])) for v, d in del_map.items()}
    ph = specialize(circuit_poly(hhat, cap), keep, hhat, cap).substitute_many(ren)
    ptri = specialize(circuit_poly(htri, cap), keep, htri, cap).substitute_many(ren)
    pl = specialize(circuit_poly(hdel, cap), keep, hdel, cap).substitute_many(ren_del)
    return ph, pl, ptri


def _with_loops(g: Graph, loops: dict[int, int]) -> Graph:
    merged = dict(g.loops)
    for v, b in loops.items():
        merged[v] = merged.get(v, 0) + b
    return Graph(p=g.p, arcs=g.arcs, loops=merged, root=g.root, parts=g.parts)


def coeff_deviation(exact: Poly, numeric: Poly) -> float:
    """Relative coefficient distance between two univariate polynomials."""
    ce = [complex(c) for c in exact.univariate_coeffs(X)]
    cn = [complex(c) for c in numeric.univariate_coeffs(X)]
    if len(ce) < len(cn):
        ce = [0j] * (len(cn) - len(ce)) + ce
    elif len(cn) < len(ce):
        cn = [0j] * (len(ce) - len(cn)) + cn
    scale = max(1.0, max(abs(c) for c in ce))
    return max(abs(a - b) for a, b in zip(ce, cn)) / scale


# -- products suite ---------------------------------------------------------------


def run_products_suite(cap: int = SUITE_CAP, tol: float = 0.0) -> SuiteReport:
    """Exact composition identities for coalescences and rooted products."""
    t0 = time.time()
    w1 = Poly.variable(wvar(1))
    rep_coal = IdentityReport("coalescence-substitution")
    rep_attach = IdentityReport("rooted-product-stripped-attachments")
    rep_core = IdentityReport("rooted-product-stripped-core")
    rep_sub = IdentityReport("uniform-product-substitution")
    rep_exp = IdentityReport("uniform-product-expansion")
    rep_div = IdentityReport("attachment-power-divisibility")

    cores = corpus_cores()
    attachments = corpus_attachments()

    for core_name, core_base in cores:
        for loops in loop_variants(core_base.p):
            core = _with_loops(core_base, loops)

            # coalescence at vertex 1 with every attachment sort
            for h_name, h in attachments:
                if core.p + h.p - 1 > cap:
                    continue
                product, maps = rooted_product(core, [h] + [k1()] * (core.p - 1))
                want = circuit_poly(product, cap)
                ph, pl, ptri = attachment_triple(h, core.loop(1), GENERIC, cap, maps[0])
                core_hat = _with_loops(core, {1: h.loop(h.root)})
                got = factor.coalescence_poly(circuit_poly(core_hat, cap), pl, ptri,
                                              xvar(1), w1_unit=w1)
                rep_coal.record(got == want, detail=f"{core_name}+{h_name} loops={loops}")

            # generalized rooted products: uniform sorts plus one mixed family
            families = [[h] * core.p for _, h in attachments]
            families.append([attachments[(k + 1) % len(attachments)][1] for k in range(core.p)])
            for fam_idx, gamma in enumerate(families):
                total = core.p + sum(h.p - 1 for h in gamma)
                if total > cap:
                    continue
                product, maps = rooted_product(core, gamma)
                want = circuit_poly(product, cap)
                triples = [attachment_triple(h, core.loop(k + 1), GENERIC, cap, maps[k])
                           for k, h in enumerate(gamma)]
                core_hat = _with_loops(core, {k + 1: h.loop(h.root) for k, h in enumerate(gamma)})
                got_a = factor.rooted_product_poly(circuit_poly(core_hat, cap), triples,
                                                   ProductMode.ROOT_LOOPS_STRIPPED, w1)
                got_c = factor.rooted_product_poly(circuit_poly(strip_all_loops(core), cap),
                                                   triples, ProductMode.CORE_LOOPS_STRIPPED, w1)
                detail = f"{core_name} family {fam_idx} loops={loops}"
                rep_attach.record(got_a == want, detail=detail)
                rep_core.record(got_c == want, detail=detail)

                if fam_idx < len(attachments):  # uniform: simple-polynomial routes
                    h = gamma[0]
                    want_simple = want.substitute_many(
                        {xvar(i): Poly.variable(X) for i in range(1, product.p + 1)})
                    bg = circuit_poly(core_hat, cap).substitute_many(
                        {xvar(i): Poly.variable(X) for i in range(1, core.p + 1)})
                    ph, pl, ptri = attachment_triple(h, 0, GENERIC, cap, vmap=None)
                    # direct substitution into the simple core polynomial
                    raw = ratio_substitute(bg, [(X, ptri, pl * w1)])
                    got_sub = raw.divide_var_power(wvar(1), core.p)
                    rep_sub.record(got_sub == want_simple, detail=detail)
                    # expansion in powers of x
                    got_exp = factor.simple_rooted_product_poly(bg, ptri, pl, core.p, w1)
                    rep_exp.record(got_exp == want_simple, detail=detail)

                    # zero-root divisibility of the product polynomial
                    mode = CHARACTERISTIC_STANDARD
                    bg_s = simple_circuit_poly(core_hat, mode, cap)
                    s = spectra.multiplicity_at(bg_s, 0)
                    if s >= 1:
                        tri_s = simple_circuit_poly(strip_root_loops(h), mode, cap)
                        prod_s = simple_circuit_poly(product, mode, cap)
                        ok, _ = divides(tri_s ** s, prod_s)
                        rep_div.record(ok, detail=detail)

    report = SuiteReport("products", [rep_coal, rep_attach, rep_core, rep_sub, rep_exp, rep_div])
    report.elapsed = time.time() - t0
    return report


# -- bipartite suite ---------------------------------------------------------------


def _restricted_constituents(h1: Graph, h2: Graph, mode: WeightMode, cap: int):
    out = []
    for h in (h1, h2):
        out.append((simple_circuit_poly(h, mode, cap),
                    simple_circuit_poly(delete_root(h), mode, cap)))
    return out[0] + out[1]


def run_bipartite_suite(cap: int = SUITE_CAP, tol: float = 0.0,
                        seed: int = 20260809, reciprocal_samples: int = 24) -> SuiteReport:
    """Exact identities special to bipartite cores."""
    t0 = time.time()
    w1 = Poly.variable(wvar(1))
    rep_exp = IdentityReport("restricted-expansion")
    rep_sub = IdentityReport("restricted-substitution")
    rep_one_l = IdentityReport("one-sided-larger-part")
    rep_one_s = IdentityReport("one-sided-smaller-part")
    rep_rec = IdentityReport("reciprocal-isospectral")
    rep_zero = IdentityReport("zero-root-divisibility")
    rep_struct = IdentityReport("bipartite-structure")

    attachments = corpus_attachments()
    simple_generic = GENERIC.simple()

    for core_name, core in bipartite_cores():
        parts, p1, p2 = factor.core_parts(core)
        core = core.with_parts(parts)
        delta = factor.bipartite_delta(core, GENERIC, cap)
        bivar = factor.bipartite_bivariate(core, GENERIC, cap)

        # single-parity powers, part-difference divisibility, leading delta 1
        simple = simple_circuit_poly(core, CHARACTERISTIC_STANDARD, cap)
        coeffs = simple.univariate_coeffs(X)
        parity_ok = all(c == 0 for i, c in enumerate(coeffs) if i % 2 == 1)
        low = min((core.p - i for i, c in enumerate(coeffs) if c != 0), default=core.p)
        char_delta = factor.bipartite_delta(core, CHARACTERISTIC_STANDARD, cap)
        regen = Poly.zero()
        for k, d in enumerate(char_delta.delta):
            regen = regen + d * Poly.monomial([(X, core.p - 2 * k)])
        rep_struct.record(parity_ok and low >= p1 - p2 and regen == simple,
                          detail=core_name)
        pairs = [(a, a) for a in attachments]
        pairs += [(attachments[i], attachments[(i + 2) % len(attachments)])
                  for i in range(len(attachments))]
        for (n1, h1), (n2, h2) in pairs:
            total = core.p + p1 * (h1.p - 1) + p2 * (h2.p - 1)
            if total > cap:
                continue
            product, _ = restricted_rooted_product(core, h1, h2)
            want = simple_circuit_poly(product, GENERIC, cap)
            ph1, pl1, ph2, pl2 = _restricted_constituents(h1, h2, simple_generic, cap)
            got_exp = factor.restricted_product_poly(delta, ph1, pl1, ph2, pl2)
            got_sub = factor.restricted_substitution_poly(bivar, ph1, pl1, ph2, pl2, w1)
            detail = f"{core_name}({n1},{n2})"
            rep_exp.record(got_exp == want, detail=detail)
            rep_sub.record(got_sub == want, detail=detail)

            # zero-root divisibility for the characteristic specialization
            s = spectra.multiplicity_at(simple, 0)
            if s >= p1 - p2:
                c1, d1, c2, d2 = _restricted_constituents(h1, h2, CHARACTERISTIC_STANDARD, cap)
                prod_char = factor.restricted_product_poly(char_delta, c1, d1, c2, d2)
                report = factor.zero_divisibility_report(simple, c1, c2, prod_char, p1, p2)
                rep_zero.record(report.divides, detail=detail)

        # one-sided attachments with a uniform loop weight on the bare part
        for h_name, h in attachments[:4]:
            for b in (-1, 2):
                for larger in (True, False):
                    n_attach = p1 if larger else p2
                    total = core.p + n_attach * (h.p - 1)
                    if total > cap or (not larger and p2 == 0):
                        continue
                    bare = [v for v in range(1, core.p + 1)
                            if (core.parts[v - 1] == 2) == larger]
                    core_loopy = _with_loops(core, {v: b for v in bare})
                    if larger:
                        product, _ = restricted_rooted_product(core_loopy, h, k1())
                    else:
                        product, _ = restricted_rooted_product(core_loopy, k1(), h)
                    want = simple_circuit_poly(product, GENERIC, cap)
                    ph = simple_circuit_poly(h, simple_generic, cap)
                    pl = simple_circuit_poly(delete_root(h), simple_generic, cap)
                    got = factor.one_sided_product_poly(delta, ph, pl, b, GENERIC, larger)
                    rep = rep_one_l if larger else rep_one_s
                    rep.record(got == want, detail=f"{core_name}+{h_name} b={b}")

    # reciprocal products on random equipartite cores
    rng = random.Random(seed)
    attach_pool = corpus_attachments()
    done = 0
    while done < reciprocal_samples:
        n = rng.choice((2, 3))
        edges = [(i, n + j) for i in range(1, n + 1) for j in range(1, n + 1)
                 if rng.random() < 0.6]
        if not edges:
            continue
        core = from_edges(2 * n, edges).with_parts(tuple([1] * n + [2] * n))
        _, h1 = rng.choice(attach_pool)
        _, h2 = rng.choice(attach_pool)
        ok = factor.reciprocal_check(core, h1, h2, CHARACTERISTIC_STANDARD, cap)
        rep_rec.record(ok, detail=f"random n={n}")
        done += 1

    report = SuiteReport("bipartite", [rep_exp, rep_sub, rep_one_l, rep_one_s,
                                       rep_rec, rep_zero, rep_struct])
    report.elapsed = time.time() - t0
    return report


def run_bipartite_structure_suite(max_vertices: int = 8, cap: int = SUITE_CAP) -> SuiteReport:
    """Structural facts for every loopless bipartite graph up to a size bound:
    single-parity simple polynomial, divisibility by the part-difference power,
    synchronous bivariate expansion with leading coefficient 1."""
    t0 = time.time()
    rep_parity = IdentityReport("bipartite-parity")
    rep_div = IdentityReport("part-difference-divisibility")
    rep_sync = IdentityReport("synchronous-expansion")
    mode = CHARACTERISTIC_STANDARD
    for g, p1, p2 in bipartite_graph_classes(max_vertices):
        simple = simple_circuit_poly(g, mode, cap)
        coeffs = simple.univariate_coeffs(X)
        p = len(coeffs) - 1
        parity_ok = all(c == 0 for i, c in enumerate(coeffs) if i % 2 == 1)
        rep_parity.record(parity_ok, detail=f"p1={p1} p2={p2}")
        low = next((p - i for i in range(p, -1, -1) if coeffs[i] != 0), p)
        rep_div.record(low >= p1 - p2, detail=f"p1={p1} p2={p2}")
        try:
            delta = factor.bipartite_delta(g, mode, cap)
            regen = Poly.zero()
            for k, d in enumerate(delta.delta):
                regen = regen + d * Poly.monomial([(X, p - 2 * k)])
            rep_sync.record(delta.delta[0] == Poly.one() and regen == simple,
                            detail=f"p1={p1} p2={p2}")
        except ValueError as exc:
            rep_sync.record(False, detail=str(exc))
    report = SuiteReport("bipartite-structure", [rep_parity, rep_div, rep_sync])
    report.elapsed = time.time() - t0
    return report


def bipartite_graph_classes(max_vertices: int = 8):
    """All loopless bipartite graphs with at most max_vertices vertices, one
    representative per part-preserving isomorphism class."""
    from itertools import permutations

    yield k1(rooted=False).with_parts((1,)), 1, 0
    for p2 in range(1, max_vertices // 2 + 1):
        for p1 in range(p2, max_vertices - p2 + 1):
            tables = []
            for pm in permutations(range(p2)):
                table = [0] * (1 << p2)
                for row in range(1 << p2):
                    out = 0
                    for c in range(p2):
                        if row >> c & 1:
                            out |= 1 << pm[c]
                    table[row] = out
                tables.append(table)
            seen = set()
            row_mask = (1 << p2) - 1
            for mask in range(1 << (p1 * p2)):
                rows = [(mask >> (r * p2)) & row_mask for r in range(p1)]
                key = min(tuple(sorted(table[row] for row in rows)) for table in tables)
                if key in seen:
                    continue
                seen.add(key)
                edges = [(r + 1, p1 + c + 1)
                         for r in range(p1) for c in range(p2) if rows[r] >> c & 1]
                parts = tuple([1] * p1 + [2] * p2)
                yield from_edges(p1 + p2, edges).with_parts(parts), p1, p2


# -- spectral suite -------------------------------------------------------------------


def run_spectral_suite(cap: int = SUITE_CAP, tol: float = 1e-8) -> SuiteReport:
    """Numeric root-product routes against the exact expansions."""
    t0 = time.time()
    rep_roots = IdentityReport("core-roots-product")
    rep_loops = IdentityReport("loop-attachment-product")
    rep_mu = IdentityReport("squared-roots-product")
    rep_one = IdentityReport("one-sided-squared-roots")
    rep_join = IdentityReport("edge-join-product")
    modes = (CHARACTERISTIC_STANDARD, PERMANENTAL)
    attachments = corpus_attachments()

    for core_name, core_base in corpus_cores():
        for loops in loop_variants(core_base.p):
            core = _with_loops(core_base, loops)
            for mode in modes:
                bg_free = simple_circuit_poly(strip_all_loops(core), mode, cap)
                free_roots = spectra.roots(bg_free)
                for h_name, h in attachments:
                    if core.p + core.p * (h.p - 1) > cap:
                        continue
                    loop_values = {core.loop(v) + h.loop(h.root) for v in range(1, core.p + 1)}
                    if len(loop_values) != 1:
                        continue  # root-product factors need a uniform unit
                    b = loop_values.pop()
                    tri = simple_circuit_poly(strip_root_loops(h), mode, cap)
                    pl = simple_circuit_poly(delete_root(h), mode, cap)
                    ph_b = tri + pl * (mode.sigma_b * b * mode.w1)
                    exact = factor.simple_rooted_product_poly(bg_free, ph_b, pl, core.p,
                                                              mode.w1)
                    dev = coeff_deviation(exact, factor.spectral_product_form(
                        free_roots, ph_b, pl, mode.w1))
                    rep_roots.record(dev <= tol, dev, f"{core_name}+{h_name} {mode.name}")
                    hb = attach_root_loop(h, b)
                    dev = coeff_deviation(exact, factor.spectral_product_from_loops(
                        free_roots, hb, mode, cap))
                    rep_loops.record(dev <= tol, dev, f"{core_name}+{h_name} {mode.name}")

    for core_name, core in bipartite_cores():
        parts, p1, p2 = factor.core_parts(core)
        if p2 == 0:
            continue
        for mode in modes:
            delta = factor.bipartite_delta(core, mode, cap)
            mu = factor.mu_squares(delta)
            for (n1, h1), (n2, h2) in [
                (("k2", complete(2).with_root(1)), ("k2", complete(2).with_root(1))),
                (("k1", k1()), ("k2", complete(2).with_root(1))),
                (("p3-end", path(3).with_root(1)), ("k1", k1())),
            ]:
                if core.p + p1 * (h1.p - 1) + p2 * (h2.p - 1) > cap:
                    continue
                ph1, pl1, ph2, pl2 = _restricted_constituents(h1, h2, mode, cap)
                exact = factor.restricted_product_poly(delta, ph1, pl1, ph2, pl2)
                detail = f"{core_name}({n1},{n2}) {mode.name}"
                dev = coeff_deviation(exact, factor.restricted_spectral_form(
                    mu.root_set, ph1, pl1, ph2, pl2, p1, p2))
                rep_mu.record(dev <= tol, dev, detail)
                dev = coeff_deviation(exact, factor.restricted_product_from_edge_join(
                    mu.root_set, h1, h2, mode, p1, p2, cap))
                rep_join.record(dev <= tol, dev, detail)

            # one-sided squared-root forms with loop-weighted bare vertices
            for b in (0, 2):
                for larger in (True, False):
                    h = complete(2).with_root(1)
                    ph = simple_circuit_poly(h, mode, cap)
                    pl = simple_circuit_poly(delete_root(h), mode, cap)
                    exact = factor.one_sided_product_poly(delta, ph, pl, b, mode, larger)
                    unit = Poly.variable(X) * mode.w1 + mode.sigma_b * b * mode.w1
                    if larger:
                        numeric = factor.restricted_spectral_form(
                            mu.root_set, ph, pl, unit, Poly.one(), p1, p2)
                    else:
                        numeric = factor.restricted_spectral_form(
                            mu.root_set, unit, Poly.one(), ph, pl, p1, p2)
                    dev = coeff_deviation(exact, numeric)
                    rep_one.record(dev <= tol, dev, f"{core_name} b={b} {mode.name}")

    report = SuiteReport("spectral", [rep_roots, rep_loops, rep_mu, rep_one, rep_join])
    report.elapsed = time.time() - t0
    return report


# -- dendrimer suite ------------------------------------------------------------------


def run_dendrimer_suite(cap: int = SUITE_CAP, tol: float = 1e-8) -> SuiteReport:
    t0 = time.time()
    rep_path = IdentityReport("path-eigenvalues")
    rep_monoid = IdentityReport("branch-monoid")
    rep_scale = IdentityReport("factorized-scaling")
    mode = CHARACTERISTIC_STANDARD
    import math

    twig = complete(2).with_root(1)
    for j in range(0, 9):
        spec = DendrimerSpec(core=k1(rooted=False), unit=twig, attach_sites=(2,), generations=j)
        rs = spectra.dendrimer_spectrum(spec, mode)
        n = j + 1
        expect = sorted((2 * math.cos(k * math.pi / (n + 1)) for k in range(1, n + 1)),
                        reverse=True)
        got = sorted((v.real for v in rs.expanded()), reverse=True)
        dev = max(abs(a - b) for a, b in zip(expect, got))
        built_ok = factor.dendrimer_poly(spec, mode) == char_poly_det(
            path(n)) if n > 0 else True
        rep_path.record(dev <= tol and built_ok, dev, f"generations={j}")

    branch_units = [(complete(2).with_root(1), (2,), [(0, 3), (2, 3), (3, 2), (1, 4)]),
                    (path(3).with_root(2), (1, 3), [(0, 2), (1, 1), (2, 0)])]
    for unit, sites, combos in branch_units:
        for j, k in combos:
            a = monodendron(unit, sites, j)
            b = monodendron(unit, sites, k)
            composed = monodendron_star(a, b)
            direct = monodendron(unit, sites, j + k)
            pa = simple_circuit_poly(composed.graph, GENERIC, cap)
            pb = simple_circuit_poly(direct.graph, GENERIC, cap)
            rep_monoid.record(pa == pb and composed.graph.p == direct.graph.p,
                              detail=f"d={len(sites)} {j}+{k}")

    big = DendrimerSpec(core=k1(rooted=False), unit=unit, attach_sites=sites, generations=9)
    start = time.time()
    poly = factor.dendrimer_poly(big, mode)
    rs = spectra.dendrimer_spectrum(big, mode)
    elapsed = time.time() - start
    degree = poly.degree_in(X)
    rep_scale.record(degree == 1023 and rs.source_degree == 1023 and elapsed < 10.0,
                     detail=f"degree={degree} elapsed={elapsed:.2f}s")

    deep = DendrimerSpec(core=k1(rooted=False), unit=twig, attach_sites=(2,), generations=12)
    rs = spectra.dendrimer_spectrum(deep, mode)
    rep_scale.record(rs.source_degree == 13, detail="deep path")

    report = SuiteReport("dendrimer", [rep_path, rep_monoid, rep_scale])
    report.elapsed = time.time() - t0
    return report


SUITES = {
    "products": run_products_suite,
    "bipartite": run_bipartite_suite,
    "spectral": run_spectral_suite,
    "dendrimer": run_dendrimer_suite,
}


def run_suites(names, cap: int = SUITE_CAP, tol: float = 1e-8) -> list[SuiteReport]:
    reports = []
    for name in names:
        runner = SUITES[name]
        if name in ("products", "bipartite"):
            reports.append(runner(cap=cap))
        else:
            reports.append(runner(cap=cap, tol=tol))
    return reports
