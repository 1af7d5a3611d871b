"""Ground-truth circuit polynomials by cycle-cover enumeration.

The full polynomial of a graph sums, over all permutations of the vertex set,
the product of matrix entries x_i + b_i on fixed points and arc weights along
longer cycles, times w_l per cycle of length l.  Permutations with a zero arc
factor are pruned by enumerating disjoint directed cycle packings instead of
the raw factorial loop; the result is term-for-term identical.

Specializations assign values to the w variables and fix the sign convention
for loop weights; independent cross-checks (exact determinant, permanent via
inclusion-exclusion, the cycle index of the symmetric group) live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

from .graph import Graph
from .poly import Mono, Poly, X, wvar, xvar

DEFAULT_CAP = 9


class OracleCapExceeded(ValueError):
    """Raised when a graph is too large for factorial-flavoured enumeration."""


@dataclass(frozen=True)
class WeightMode:
    """A recipe for specializing the w variables and the loop-sign convention.

    w1/w2/w_rest of None keep the variable; halve_rest rescales w_j to w_j/2
    for j >= 3; x_to_one fixes every vertex variable to 1 with loop weights
    discarded; collapse_x merges all vertex variables into the single x.
    """

    name: str
    sigma_b: int = 1
    w1: int | None = None
    w2: int | None = None
    w_rest: int | None = None
    halve_rest: bool = False
    x_to_one: bool = False
    collapse_x: bool = False

    def simple(self) -> "WeightMode":
        return self if self.collapse_x else replace(self, collapse_x=True)

    def w_value(self, i: int) -> int | None:
        if i == 1:
            return self.w1
        if i == 2:
            return self.w2
        return self.w_rest

    @property
    def w1_unit(self) -> "Poly | int":
        """Weight of a one-vertex cover component under this specialization."""
        return Poly.variable(wvar(1)) if self.w1 is None else self.w1


GENERIC = WeightMode("generic")
# cover counting on undirected loopless graphs: each cycle of length >= 3
# picks up both orientations in the enumeration, so its weight is halved
UNDIRECTED_COVERS = WeightMode("undirected-covers", halve_rest=True, x_to_one=True)
# per(x*I + A + diag b)
PERMANENTAL = WeightMode("permanental", w1=1, w2=1, w_rest=1)
# every component weight -1; matches a determinant only when all cycles are even
CHARACTERISTIC_UNIFORM = WeightMode("characteristic-uniform", sigma_b=-1, w1=-1, w2=-1, w_rest=-1)
# det(x*I - A - diag b)
CHARACTERISTIC_STANDARD = WeightMode("characteristic-standard", sigma_b=-1, w1=1, w2=-1, w_rest=-1)
MATCHING_PLUS = WeightMode("matching-plus", w1=1, w2=1, w_rest=0)
MATCHING_MINUS = WeightMode("matching-minus", sigma_b=-1, w1=-1, w2=-1, w_rest=0)
SIMPLE = WeightMode("simple", collapse_x=True)

MODES = {m.name: m for m in (GENERIC, UNDIRECTED_COVERS, PERMANENTAL, CHARACTERISTIC_UNIFORM,
                             CHARACTERISTIC_STANDARD, MATCHING_PLUS, MATCHING_MINUS, SIMPLE)}


def mode_by_name(name: str) -> WeightMode:
    try:
        return MODES[name]
    except KeyError:
        raise ValueError(f"unknown weight mode {name!r}; choose from {sorted(MODES)}") from None


# -- the full polynomial -----------------------------------------------------


def circuit_poly(g: Graph, cap: int = DEFAULT_CAP) -> Poly:
    """Full circuit polynomial in x_1..x_p and w_1..w_p.

    Enumerates packings of vertex-disjoint directed cycles; uncovered vertices
    are fixed points contributing (x_i + b_i) * w_1 each.
    """
    return _circuit_poly_signed(g, cap, sigma_b=1)


def _circuit_poly_signed(g: Graph, cap: int, sigma_b: int) -> Poly:
    p = g.p
    if p > cap:
        raise OracleCapExceeded(f"graph has {p} vertices, enumeration cap is {cap}")
    out: dict[int, list[tuple[int, object]]] = {v: [] for v in range(1, p + 1)}
    for (i, j), w in g.arcs.items():
        out[i].append((j, w))
    terms: dict[Mono, object] = {}
    fixed: list[int] = []
    cycles: list[int] = []  # cycle lengths; arc weights folded into coeff

    def emit(coeff):
        wexp = [0] * (p + 1)
        wexp[1] = len(fixed)
        for length in cycles:
            wexp[length] += 1
        base = tuple((wvar(i), e) for i, e in enumerate(wexp) if i and e)
        # Expand the product of (x_v + sigma_b * b_v) over fixed vertices.
        loopy = [v for v in fixed if g.loop(v) != 0]
        plain = [v for v in fixed if g.loop(v) == 0]

        def assemble(idx: int, chosen: list[int], c):
            if idx == len(loopy):
                xpart = tuple((xvar(v), 1) for v in sorted(plain + chosen))
                mono = xpart + base
                prev = terms.get(mono, 0)
                new = prev + c
                if new == 0:
                    terms.pop(mono, None)
                else:
                    terms[mono] = new
                return
            v = loopy[idx]
            assemble(idx + 1, chosen + [v], c)
            assemble(idx + 1, chosen, c * sigma_b * g.loop(v))

        assemble(0, [], coeff)

    full = (1 << p) - 1

    def cover(mask: int, coeff):
        if mask == full:
            emit(coeff)
            return
        v = 1
        while mask >> (v - 1) & 1:
            v += 1
        # v stays fixed
        fixed.append(v)
        cover(mask | 1 << (v - 1), coeff)
        fixed.pop()
        # or v anchors a directed cycle of length >= 2 over unused vertices

        def extend(u: int, used: int, length: int, acc):
            for (t, w) in out[u]:
                if t == v:
                    if length >= 2:
                        cycles.append(length)
                        cover(used, coeff * acc * w)
                        cycles.pop()
                elif t > v and not used >> (t - 1) & 1:
                    extend(t, used | 1 << (t - 1), length + 1, acc * w)

        extend(v, mask | 1 << (v - 1), 1, 1)

    if p == 0:
        return Poly.one()
    cover(0, 1)
    return Poly(terms)


def specialize(P: Poly, mode: WeightMode, g: Graph, cap: int = DEFAULT_CAP) -> Poly:
    """Apply a weight mode to the full polynomial computed from g.

    A negative loop-sign convention is applied by recomputing the enumeration
    with loop weights negated rather than by substitution.
    """
    if mode.sigma_b == -1 and g.loops:
        P = _circuit_poly_signed(g, max(cap, g.p), sigma_b=-1)
    mapping: dict = {}
    for v in P.variables():
        if v.kind == 3:  # w variable
            val = mode.w_value(v.index)
            if val is not None:
                mapping[v] = val
            elif mode.halve_rest and v.index >= 3:
                mapping[v] = Poly.monomial([(v, 1)], Fraction(1, 2))
        elif v.kind == 1:  # per-vertex variable
            if mode.x_to_one:
                mapping[v] = 1 - mode.sigma_b * g.loop(v.index)
            elif mode.collapse_x:
                mapping[v] = Poly.variable(X)
    return P.substitute_many(mapping)


def simple_circuit_poly(g: Graph, mode: WeightMode, cap: int = DEFAULT_CAP) -> Poly:
    """Specialized polynomial with all vertex variables collapsed into x."""
    return specialize(circuit_poly(g, cap), mode.simple(), g, cap)


# -- independent cross-checks -------------------------------------------------


def _adjacency(g: Graph) -> list[list]:
    a = [[0] * g.p for _ in range(g.p)]
    for (i, j), w in g.arcs.items():
        a[i - 1][j - 1] = w
    for v, b in g.loops.items():
        a[v - 1][v - 1] = b
    return a


def _det_fraction(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def char_poly_det(g: Graph) -> Poly:
    """Monic det(x*I - A - diag b) via evaluation at p+1 integers and interpolation."""
    p = g.p
    a = _adjacency(g)
    points = list(range(p + 1))
    values = []
    for t in points:
        m = [[Fraction(t if r == c else 0) - Fraction(a[r][c]) for c in range(p)] for r in range(p)]
        values.append(_det_fraction(m))
    # Lagrange interpolation on the exact samples.
    coeffs = [Fraction(0)] * (p + 1)
    for k, t in enumerate(points):
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, s in enumerate(points):
            if j == k:
                continue
            num = _poly_mul_linear(num, -Fraction(s))
            denom *= Fraction(t - s)
        scale = values[k] / denom
        for i, c in enumerate(num):
            coeffs[i] += scale * c
    coeffs.reverse()  # descending
    return Poly.from_univariate_coeffs(coeffs)


def _poly_mul_linear(coeffs: list[Fraction], c0: Fraction) -> list[Fraction]:
    # multiply ascending-coefficient poly by (x + c0)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i] += c * c0
        out[i + 1] += c
    return out


def permanental_poly_check(g: Graph, cap: int = DEFAULT_CAP) -> Poly:
    """per(x*I + A + diag b) by inclusion-exclusion over column subsets."""
    p = g.p
    if p > cap + 3:
        raise OracleCapExceeded(f"permanent check limited to {cap + 3} vertices, got {p}")
    if p == 0:
        return Poly.one()
    a = _adjacency(g)
    total = [0] * (p + 1)  # ascending coefficients
    sign_all = (-1) ** p
    for s in range(1, 1 << p):
        cols = [c for c in range(p) if s >> c & 1]
        prod = [1]  # ascending
        for r in range(p):
            const = sum(a[r][c] for c in cols)
            xcoef = 1 if s >> r & 1 else 0
            new = [0] * (len(prod) + (1 if xcoef else 0))
            for i, c in enumerate(prod):
                new[i] += c * const
                if xcoef:
                    new[i + 1] += c
            prod = new
        term_sign = sign_all * (-1) ** len(cols)
        for i, c in enumerate(prod):
            total[i] += term_sign * c
    total.reverse()
    return Poly.from_univariate_coeffs(total)


def cycle_index_sym(p: int) -> Poly:
    """Cycle index of the symmetric group on p points, as a polynomial in w's."""
    if p > 12:
        raise ValueError("cycle index supported up to 12 points")
    if p == 0:
        return Poly.one()
    total = Poly.zero()

    def partitions(remaining: int, max_part: int, counts: list[tuple[int, int]]):
        nonlocal total
        if remaining == 0:
            coeff = Fraction(1)
            mono = []
            for k, j in counts:
                coeff /= Fraction(k) ** j * math.factorial(j)
                mono.append((wvar(k), j))
            total = total + Poly.monomial(mono, coeff)
            return
        for k in range(min(remaining, max_part), 0, -1):
            for j in range(remaining // k, 0, -1):
                partitions(remaining - k * j, k - 1, counts + [(k, j)])

    partitions(p, p, [])
    return total


def negate_loops(g: Graph) -> Graph:
    return replace(g, loops={v: -b for v, b in g.loops.items()})


__all__ = [
    "DEFAULT_CAP", "OracleCapExceeded", "WeightMode", "GENERIC", "UNDIRECTED_COVERS",
    "PERMANENTAL", "CHARACTERISTIC_UNIFORM", "CHARACTERISTIC_STANDARD",
    "MATCHING_PLUS", "MATCHING_MINUS", "SIMPLE", "MODES", "mode_by_name",
    "circuit_poly", "specialize", "simple_circuit_poly", "char_poly_det",
    "permanental_poly_check", "cycle_index_sym", "negate_loops",
]
