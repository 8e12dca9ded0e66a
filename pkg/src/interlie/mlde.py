"""Modular linear differential equations in exact arithmetic.

The Serre-derivative calculus on exact q-series, the one-parameter
fourth-order operator family solved by the level-1 characters of the
intermediate-algebra vertex operator algebras, Frobenius power-series
solutions, the Wronskian index of a character system, and the
level-by-level rationality scan that a fractional index obstructs.

Conventions
-----------
``D_w f = q df/dq - (w/12) E2 f`` raises the modular weight by two.  A
monic operator of order ``d`` acting on weight-0 series composes the
iterated derivatives ``D_{2(d-1)} ... D_2 D_0``, so its leading action on
``q^alpha`` is ``prod_{j<d} (alpha - j/6)``.  Indicial polynomials replace
every Eisenstein coefficient by its constant term 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import intrep, liedata
from .exactq import (
    QSeries,
    QuasiModularForm,
    SeriesError,
    eisenstein,
)
from .liedata import PoleAtParameter, UnsupportedAlgebra

F = Fraction

__all__ = [
    "MLDEFamily",
    "IndicialData",
    "ScanRow",
    "ResonantExponents",
    "NotAnIndicialRoot",
    "serre_derivative",
    "build_level1_mlde",
    "build_order2_mlde",
    "level1_parameter",
    "level1_family",
    "indicial_polynomial",
    "indicial_data",
    "frobenius_solve",
    "wronskian_index",
    "rationality_scan",
]


class ResonantExponents(ArithmeticError):
    """Two indicial roots are spaced by a positive integer, so the
    Frobenius recursion divides by zero."""


class NotAnIndicialRoot(ValueError):
    """The requested leading exponent does not solve the indicial equation."""


# --------------------------------------------------------------------------
# Serre derivative
# --------------------------------------------------------------------------
def serre_derivative(f, weight):
    """``D_w f = q df/dq - (w/12) E2 f`` for a declared weight ``w``.

    Accepts either a :class:`QuasiModularForm` (whose own weight must agree
    with ``weight``) or a :class:`QSeries`; returns the same kind.  At
    weight 0 the E2 term drops out, so ``D_0 q^alpha = alpha q^alpha``.
    """
    w = F(weight)
    if isinstance(f, QuasiModularForm):
        if f.coeffs and f.weight != w:
            raise SeriesError(
                f"form has weight {f.weight}, not the requested {w}")
        return f.serre_derivative()
    if not isinstance(f, QSeries):
        raise TypeError("serre_derivative expects a QuasiModularForm or QSeries")
    out = f.qderiv()
    if w and not f.is_zero:
        span = max(1, math.ceil(f.known_to - f.leading_exponent))
        out = out - (f * eisenstein(2, span)).scale(w / 12)
    return out


# --------------------------------------------------------------------------
# operator families
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class MLDEFamily:
    """Monic modular operator ``D^d + sum_i coeffs[i] D^i``.

    ``coeffs[i]`` multiplies the ``i``-th iterated Serre derivative and must
    be a quasimodular form of weight ``2(d - i)`` (or zero), keeping the
    total weight homogeneous on weight-0 solutions.
    """

    order: int
    coeffs: tuple
    label: str = ""

    def __post_init__(self):
        if self.order < 1:
            raise SeriesError("operator order must be positive")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.order:
            raise SeriesError(
                f"need {self.order} lower-order coefficients, got {len(coeffs)}")
        for i, phi in enumerate(coeffs):
            if not isinstance(phi, QuasiModularForm):
                raise SeriesError("coefficients must be QuasiModularForm")
            if phi.coeffs and phi.weight != 2 * (self.order - i):
                raise SeriesError(
                    f"coefficient of D^{i} must have weight {2 * (self.order - i)}")
        object.__setattr__(self, "coeffs", coeffs)

    def apply(self, f: QSeries) -> QSeries:
        """Act on a weight-0 series; exact through the window of ``f``."""
        if f.is_zero:
            return f
        span = max(1, math.ceil(f.known_to - f.leading_exponent)) + 1
        derivs = [f]
        for i in range(self.order):
            derivs.append(serre_derivative(derivs[-1], 2 * i))
        total = derivs[self.order]
        for i, phi in enumerate(self.coeffs):
            if phi.coeffs:
                total = total + phi.to_qseries(span) * derivs[i]
        return total


def build_level1_mlde(a) -> MLDEFamily:
    """The fourth-order family ``D^4 + mu1 E4 D^2 + mu2 E6 D + mu3 E4^2``.

    Exact rational substitution into the three ``mu`` expressions; the
    family degenerates at ``a = -4``.
    """
    aa = F(a)
    if aa == -4:
        raise PoleAtParameter("the fourth-order family has a pole at a = -4")
    mu1 = -F(203 * aa**2 + 724 * aa + 1448) / (900 * (aa + 4) ** 2)
    mu2 = F(811 * aa**2 + 3068 * aa + 2896) / (5400 * (aa + 4) ** 2)
    mu3 = -F((2 * aa + 3) ** 2 * (6 * aa**2 + 53 * aa + 91)) / (625 * (aa + 4) ** 4)
    e4 = QuasiModularForm.generator(4)
    e6 = QuasiModularForm.generator(6)
    return MLDEFamily(
        order=4,
        coeffs=(
            (e4 * e4).scale(mu3),
            e6.scale(mu2),
            e4.scale(mu1),
            QuasiModularForm.zero(2),
        ),
        label=f"level1(a={aa})",
    )


def build_order2_mlde(c) -> MLDEFamily:
    """The second-order family ``D^2 + mu E4`` with vacuum exponent ``-c/24``.

    The indicial roots are ``-c/24`` and ``-c/24 + h`` with the familiar
    second-order relation ``h = 1/6 + c/12``.
    """
    cc = F(c)
    mu = (-cc / 24) * (F(1, 6) + cc / 24)
    return MLDEFamily(
        order=2,
        coeffs=(QuasiModularForm.generator(4).scale(mu), QuasiModularForm.zero(2)),
        label=f"order2(c={cc})",
    )


def level1_parameter(alg) -> Fraction:
    """The family parameter of a registered algebra (pole sits at -4)."""
    name = alg if isinstance(alg, str) else alg.name
    try:
        return liedata.build_intermediate(name).a_param
    except UnsupportedAlgebra:
        info = liedata.CHARACTER_ONLY.get(name)
        if info is None or info["a"] is None:
            raise UnsupportedAlgebra(
                f"no level-1 family parameter for {name!r}") from None
        return info["a"]


def level1_family(alg) -> MLDEFamily:
    """The fourth-order family at the algebra's own parameter."""
    name = alg if isinstance(alg, str) else alg.name
    fam = build_level1_mlde(level1_parameter(name))
    return MLDEFamily(fam.order, fam.coeffs, label=f"level1({name})")


# --------------------------------------------------------------------------
# indicial theory
# --------------------------------------------------------------------------
def _poly_mul(p, q):
    out = [F(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_eval(p, x):
    total = F(0)
    for c in reversed(p):
        total = total * x + c
    return total


def _poly_deflate(p, r):
    """Divide by ``(x - r)`` (synthetic division; ``r`` must be a root)."""
    out = [F(0)] * (len(p) - 1)
    carry = F(0)
    for k in range(len(p) - 1, 0, -1):
        carry = p[k] + r * carry
        out[k - 1] = carry
    return out


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _rational_roots(poly) -> list[Fraction]:
    """All rational roots, with multiplicity, constant-first coefficients."""
    p = [F(c) for c in poly]
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    roots: list[Fraction] = []
    while len(p) > 1 and p[0] == 0:
        roots.append(F(0))
        p = p[1:]
    if len(p) <= 1:
        return roots
    den = math.lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = math.gcd(*(abs(v) for v in ints))
    candidates = {F(0)}
    for num in _divisors(abs(ints[0]) // g):
        for d in _divisors(abs(ints[-1]) // g):
            candidates.add(F(num, d))
            candidates.add(F(-num, d))
    for r in sorted(candidates):
        while len(p) > 1 and _poly_eval(p, r) == 0:
            roots.append(r)
            p = _poly_deflate(p, r)
    return roots


def indicial_polynomial(m: MLDEFamily) -> tuple[Fraction, ...]:
    """Coefficients (constant term first, monic) of the indicial polynomial.

    The leading action of ``D^n`` on ``q^alpha`` contributes the falling
    product ``prod_{j<n} (alpha - j/6)``; every Eisenstein factor counts as
    its constant term 1.
    """
    falling = [[F(1)]]
    for j in range(m.order):
        falling.append(_poly_mul(falling[-1], [-F(j, 6), F(1)]))
    poly = list(falling[m.order])
    for i, phi in enumerate(m.coeffs):
        const = sum(phi.coeffs.values(), F(0))
        if const:
            for k, c in enumerate(falling[i]):
                poly[k] += const * c
    return tuple(poly)


def wronskian_index(d: int, exponents) -> Fraction:
    """``l = 6 (d(d-1)/12 - sum(alpha_i))`` for a rank-``d`` system."""
    exps = [F(e) for e in exponents]
    if len(exps) != d:
        raise ValueError(f"expected {d} exponents, got {len(exps)}")
    return 6 * (F(d * (d - 1), 12) - sum(exps, F(0)))


@dataclass(frozen=True)
class IndicialData:
    """Exponent list of a character system together with its index."""

    exponents: tuple
    index_l: Fraction

    def __post_init__(self):
        exps = tuple(F(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "index_l", F(self.index_l))
        if self.index_l != wronskian_index(len(exps), exps):
            raise ValueError("index does not match the exponent sum")


def indicial_data(m: MLDEFamily) -> IndicialData:
    """Roots of the indicial polynomial (sorted, with multiplicity).

    Raises :class:`ArithmeticError` when the roots are not all rational.
    """
    roots = _rational_roots(indicial_polynomial(m))
    if len(roots) != m.order:
        raise ArithmeticError(
            f"only {len(roots)} of {m.order} indicial roots are rational")
    roots.sort()
    return IndicialData(tuple(roots), wronskian_index(m.order, roots))


# --------------------------------------------------------------------------
# Frobenius solutions
# --------------------------------------------------------------------------
def frobenius_solve(m: MLDEFamily, alpha, trunc: int) -> QSeries:
    """Power-series solution ``q^alpha (1 + a_1 q + ... + a_trunc q^trunc)``.

    ``alpha`` must solve the indicial equation; each further coefficient is
    one linear solve with denominator ``P(alpha + n)``, which vanishes only
    when another root sits a positive integer above ``alpha``.
    """
    al = F(alpha)
    if trunc < 0:
        raise ValueError("truncation order must be nonnegative")
    poly = list(indicial_polynomial(m))
    if _poly_eval(poly, al) != 0:
        raise NotAnIndicialRoot(f"{al} does not solve the indicial equation")
    for n in range(1, trunc + 1):
        if _poly_eval(poly, al + n) == 0:
            raise ResonantExponents(
                f"indicial roots {al} and {al + n} are integer-spaced")
    window = al + trunc + 1
    # operator columns: m.apply(q^(al+mm)) = sum_j cols[mm][j] q^(al+mm+j)
    cols = []
    for mm in range(trunc + 1):
        mono = QSeries.from_terms({al + mm: 1}, window)
        img = m.apply(mono)
        cols.append([img.coefficient(al + mm + j) for j in range(trunc + 1 - mm)])
    coeffs = [F(1)] + [F(0)] * trunc
    for n in range(1, trunc + 1):
        rhs = sum((coeffs[mm] * cols[mm][n - mm] for mm in range(n)), F(0))
        coeffs[n] = -rhs / _poly_eval(poly, al + n)
    return QSeries.from_terms(
        {al + n: c for n, c in enumerate(coeffs)}, window)


# --------------------------------------------------------------------------
# rationality scan
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class ScanRow:
    """One level of the scan: distinct-character count, index, verdict."""

    level: int
    char_count: int
    index_l: Fraction
    verdict: str


def _scan_row(k: int, exponents) -> ScanRow:
    l = wronskian_index(len(exponents), exponents)
    good = l.denominator == 1 and l >= 0
    return ScanRow(k, len(exponents), l, "admissible" if good else "non-rational")


def rationality_scan(alg, k_max: int) -> tuple[ScanRow, ...]:
    """Wronskian indices of the level-``k`` character systems, ``k <= k_max``.

    Each distinct character contributes one exponent ``-c/24 + h``: label
    classes identified by the diagram flip count once (their members share
    a character), so the character counts follow the stored generating
    functions.  Intermediate algebras enumerate their own module classes;
    simple families go through the partner catalog at depth ``k``.
    """
    name = alg if isinstance(alg, str) else alg.name
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    rows = []
    if name in liedata.intermediate_names():
        a = liedata.build_intermediate(name)
        records: list = []
        for k in range(1, k_max + 1):
            for lev in (range(k + 1) if k == 1 else [k]):
                records.extend(intrep.enumerate_level(name, lev))
            c = a.central_charge(k)
            exps = [-c / 24 + rec.c2 / (2 * (a.h_dual + k)) for rec in records]
            rows.append(_scan_row(k, exps))
    elif name == "IM":
        for k in range(1, k_max + 1):
            spec = intrep.conformal_weights("IM", k)
            c = spec.central_charge
            exps = [-c / 24 + h for h, deg in spec.weights for _ in range(deg)]
            rows.append(_scan_row(k, exps))
    else:
        datum = liedata.simple_root_datum(name)
        hv = datum.dual_coxeter
        for k in range(1, k_max + 1):
            catalog = intrep.partner_catalog(name, max_level=k)
            c = F(k) * datum.dim / (k + hv)
            exps = [-c / 24 + rec.c2 / (2 * (hv + k)) for rec in catalog.values()]
            rows.append(_scan_row(k, exps))
    return tuple(rows)
