"""Numeric roots of simple circuit polynomials, with multiplicity handling.

Exact-coefficient polynomials are first split into square-free parts (so
repeated roots come out with exact integer multiplicities), then each part is
solved by companion-matrix eigenvalues and polished by Newton steps, with a
Durand-Kerner sweep as fallback.  Roots within the cluster tolerance are
merged.  Residuals are reported against the square-free part a root was
extracted from, which keeps them meaningful for huge-coefficient inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

from .poly import Poly, X


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicities, sorted by descending real then imaginary part."""

    roots: tuple[tuple[complex, int], ...]
    source_degree: int
    cluster_tol: float
    residuals: tuple[float, ...]

    def __post_init__(self):
        if sum(m for _, m in self.roots) != self.source_degree:
            raise ValueError("multiplicities do not sum to the source degree")

    def expanded(self) -> list[complex]:
        out = []
        for value, mult in self.roots:
            out.extend([value] * mult)
        return out

    def values(self) -> list[complex]:
        return [value for value, _ in self.roots]


def roots(p: Poly, cluster_tol: float = 1e-7) -> RootSet:
    """All complex roots of a univariate polynomial in x."""
    coeffs = p.univariate_coeffs(X)
    degree = len(coeffs) - 1
    if degree < 1:
        raise ValueError("polynomial of degree 0 has no roots")
    found: list[tuple[complex, int, float]] = []  # value, multiplicity, residual
    if p.is_exact():
        t = sympy.Symbol("t")
        sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction)
                         else sympy.Integer(c) for c in coeffs], t)
        _, factors = sp.sqf_list()
        for fac, mult in factors:
            fc = [Fraction(c.p, c.q) for c in fac.all_coeffs()]
            for z in _numeric_roots(fc):
                found.append((z, mult, abs(_horner(fc, z))))
    else:
        fc = list(coeffs)
        for z in _numeric_roots(fc):
            found.append((z, 1, abs(_horner(fc, z))))
    merged = _cluster(found, cluster_tol)
    merged.sort(key=lambda item: (-item[0].real, -item[0].imag))
    return RootSet(
        roots=tuple((value, mult) for value, mult, _ in merged),
        source_degree=degree,
        cluster_tol=cluster_tol,
        residuals=tuple(res for _, _, res in merged),
    )


def multiplicity_at(p: Poly, lam: int | Fraction) -> int:
    """Largest k with (x - lam)**k dividing p, by repeated exact division."""
    coeffs = p.univariate_coeffs(X)
    if not p.is_exact():
        raise ValueError("exact multiplicity needs exact coefficients")
    if p.is_zero():
        raise ValueError("zero polynomial")
    lam = Fraction(lam)
    count = 0
    while len(coeffs) > 1:
        # synthetic division by (x - lam); the final accumulator is the remainder
        acc = Fraction(0)
        quotient = []
        for c in coeffs:
            acc = acc * lam + c
            quotient.append(acc)
        if acc != 0:
            break
        coeffs = quotient[:-1]
        count += 1
    return count


def dendrimer_spectrum(spec, mode, cap: int | None = None, cluster_tol: float = 1e-7) -> RootSet:
    """Spectrum of a dendrimer, computed from its factorized polynomial.

    The simple circuit polynomial is assembled tier by tier from the unit's
    polynomials; the full product graph is never constructed.
    """
    from . import factor  # local import; factor uses this module's root finder

    kwargs = {} if cap is None else {"cap": cap}
    poly = factor.dendrimer_poly(spec, mode, **kwargs)
    return roots(poly, cluster_tol)


# -- internals ------------------------------------------------------------


def _horner(coeffs, z: complex) -> complex:
    acc = 0j
    for c in coeffs:
        acc = acc * z + complex(c)
    return acc


def _float_coeffs(coeffs) -> list[complex]:
    try:
        out = [complex(c) for c in coeffs]
        if all(abs(v) < float("inf") for v in out):
            return out
    except OverflowError:
        pass
    # Rescale by a common power of two; relative magnitudes are preserved.
    bits = max(_bit_size(c) for c in coeffs)
    shift = bits - 512
    scale = Fraction(1, 2 ** shift)
    return [complex(Fraction(c) * scale) for c in coeffs]


def _bit_size(c) -> int:
    if isinstance(c, Fraction):
        return max(c.numerator.bit_length(), c.denominator.bit_length())
    if isinstance(c, int):
        return c.bit_length()
    return 64


def _numeric_roots(coeffs) -> list[complex]:
    """Roots of one (preferably square-free) polynomial, Newton-polished."""
    fc = _float_coeffs(coeffs)
    while fc and fc[0] == 0:
        fc = fc[1:]
    degree = len(fc) - 1
    if degree < 1:
        return []
    try:
        raw = [complex(z) for z in np.roots(fc)]
        bad = any(not np.isfinite(z.real) or not np.isfinite(z.imag) for z in raw)
    except Exception:
        raw, bad = [], True
    if bad or len(raw) != degree:
        raw = _durand_kerner(fc)
    deriv = [c * (degree - i) for i, c in enumerate(fc[:-1])]
    return [_newton_polish(fc, deriv, z) for z in raw]


def _newton_polish(fc, deriv, z: complex, steps: int = 40) -> complex:
    best, best_val = z, abs(_horner(fc, z))
    for _ in range(steps):
        fz = _horner(fc, z)
        dz = _horner(deriv, z)
        if dz == 0:
            break
        step = fz / dz
        z = z - step
        val = abs(_horner(fc, z))
        if val < best_val:
            best, best_val = z, val
        if abs(step) < 1e-15 * max(1.0, abs(z)):
            break
    return best


def _durand_kerner(fc, max_iter: int = 500) -> list[complex]:
    degree = len(fc) - 1
    lead = fc[0]
    monic = [c / lead for c in fc]
    z = [(0.4 + 0.9j) ** k for k in range(1, degree + 1)]
    for _ in range(max_iter):
        moved = 0.0
        for i in range(degree):
            num = _horner(monic, z[i])
            den = 1.0 + 0j
            for j in range(degree):
                if j != i:
                    den *= z[i] - z[j]
            if den == 0:
                z[i] += 1e-6 + 1e-6j
                continue
            delta = num / den
            z[i] -= delta
            moved = max(moved, abs(delta))
        if moved < 1e-14:
            break
    return z


def _cluster(found: list[tuple[complex, int, float]], tol: float) -> list[tuple[complex, int, float]]:
    """Greedy union of roots within tol of each other (multiplicity-weighted mean)."""
    clusters: list[list[tuple[complex, int, float]]] = []
    for item in sorted(found, key=lambda it: (it[0].real, it[0].imag)):
        for members in clusters:
            if abs(members[0][0] - item[0]) <= tol:
                members.append(item)
                break
        else:
            clusters.append([item])
    out = []
    for members in clusters:
        total = sum(m for _, m, _ in members)
        mean = sum(v * m for v, m, _ in members) / total
        res = max(r for _, _, r in members)
        # keep exact-looking real/zero values tidy
        if abs(mean.imag) <= tol / 2 and any(abs(v.imag) == 0 for v, _, _ in members):
            mean = complex(mean.real, 0.0)
        out.append((mean, total, res))
    return out
