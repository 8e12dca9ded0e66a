"""Exact rational q-series arithmetic on fractional exponent grids.

A :class:`QSeries` is a truncated Puiseux-style series in ``q`` whose
exponents all lie in ``(1/grid)*Z``.  The representation tracks exactly which
coefficients are *known*: the window starts at the leading exponent
``lead/grid`` and covers ``trunc`` consecutive grid slots.  Slots inside the
window that carry no stored coefficient are known zeros; everything at or
beyond the threshold ``(lead+trunc)/grid`` is unknown.  All arithmetic is
exact over ``fractions.Fraction`` and propagates windows pessimistically, so
a coefficient that is reported was computed exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "SeriesError",
    "DivisionByZeroSeries",
    "RootNotExact",
    "GridMismatch",
    "QSeries",
    "QuasiModularForm",
    "dedekind_eta",
    "jacobi_theta_null",
    "eisenstein",
    "rogers_ramanujan",
    "pochhammer_q",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class SeriesError(ValueError):
    """Base error for exact series arithmetic."""


class DivisionByZeroSeries(SeriesError):
    """Raised when inverting or dividing by a series with no known nonzero term."""


class RootNotExact(SeriesError):
    """Raised when an exact m-th root does not exist in the rationals."""


class GridMismatch(SeriesError):
    """Raised when two series cannot be aligned on a common exponent grid."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _nth_root_int(n: int, m: int) -> int | None:
    """Exact integer m-th root of n >= 0, or None."""
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / m))
    for c in (r - 1, r, r + 1, r + 2):
        if c >= 0 and c**m == n:
            return c
    return None


def _nth_root_fraction(x: Fraction, m: int) -> Fraction:
    sign = 1
    if x < 0:
        if m % 2 == 0:
            raise RootNotExact(f"no rational {m}-th root of {x}")
        sign, x = -1, -x
    num = _nth_root_int(x.numerator, m)
    den = _nth_root_int(x.denominator, m)
    if num is None or den is None:
        raise RootNotExact(f"no rational {m}-th root of {sign * x}")
    return Fraction(sign * num, den)


class QSeries:
    """Truncated exact series ``sum_k coeffs[k] * q**((lead+k)/grid)``."""

    __slots__ = ("grid", "lead", "coeffs", "trunc")

    def __init__(self, grid: int, lead: int, coeffs: Sequence, trunc: int):
        if grid < 1:
            raise SeriesError("grid must be a positive integer")
        if trunc < 0:
            trunc = 0
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > trunc:
            cs = cs[:trunc]
        # strip leading zeros (advance the window start)
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        if start:
            cs = cs[start:]
            lead += start
            trunc -= start
        # strip trailing zeros; the tail of the window is implicitly zero
        end = len(cs)
        while end > 0 and cs[end - 1] == 0:
            end -= 1
        cs = cs[:end]
        # normalise the grid: divide out any common factor of grid, lead and
        # the support spacing (threshold is floored pessimistically)
        if grid > 1:
            g = math.gcd(grid, lead)
            for k, c in enumerate(cs):
                if g == 1:
                    break
                if c != 0:
                    g = math.gcd(g, k)
            if not cs:
                g = math.gcd(grid, lead)
            if g > 1:
                cs = cs[::g] if cs else cs
                thr = lead + trunc
                lead //= g
                trunc = thr // g - lead
                grid //= g
        if not cs:
            # canonical zero form: remember only the knowledge threshold
            thr = Fraction(lead + trunc, grid)
            grid = thr.denominator
            if thr >= 0:
                lead, trunc = 0, thr.numerator
            else:
                lead, trunc = thr.numerator, 0
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "lead", lead)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "trunc", trunc)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("QSeries is immutable")

    # ------------------------------------------------------------- basics
    @property
    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    @property
    def leading_exponent(self) -> Fraction:
        if self.is_zero:
            raise SeriesError("zero series has no leading exponent")
        return Fraction(self.lead, self.grid)

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise SeriesError("zero series has no leading coefficient")
        return self.coeffs[0]

    @property
    def known_to(self) -> Fraction:
        """First exponent whose coefficient is *not* known."""
        return Fraction(self.lead + self.trunc, self.grid)

    def coefficient(self, exponent) -> Fraction:
        """Exact coefficient of ``q**exponent``; raises beyond the window."""
        e = _as_fraction(exponent)
        if e >= self.known_to:
            raise SeriesError(f"coefficient of q^{e} is beyond the known window q^{self.known_to}")
        slot = e * self.grid - self.lead
        if slot.denominator != 1:
            return _ZERO
        k = slot.numerator
        if k < 0 or k >= len(self.coeffs):
            return _ZERO
        return self.coeffs[k]

    def terms(self) -> Iterator[tuple[Fraction, Fraction]]:
        """Iterate (exponent, coefficient) over nonzero known terms."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                yield Fraction(self.lead + k, self.grid), c

    def integer_coefficients(self, count: int) -> list[Fraction]:
        """Coefficients at lead, lead+1, ..., lead+count-1 (integer steps)."""
        if self.is_zero:
            raise SeriesError("zero series has no integer-step expansion")
        out = []
        e = self.leading_exponent
        for n in range(count):
            out.append(self.coefficient(e + n))
        return out

    # ------------------------------------------------------ constructors
    @classmethod
    def zero(cls, known_to=Fraction(10**6)) -> "QSeries":
        e = _as_fraction(known_to)
        return cls(e.denominator, 0, [], e.numerator)

    @classmethod
    def one(cls, orders: int = 12) -> "QSeries":
        return cls(1, 0, [_ONE], orders)

    @classmethod
    def monomial(cls, exponent, coefficient=1, orders: int = 12) -> "QSeries":
        e = _as_fraction(exponent)
        g = e.denominator
        return cls(g, e.numerator, [_as_fraction(coefficient)], orders * g)

    @classmethod
    def from_terms(cls, terms: Mapping, known_to) -> "QSeries":
        """Build from a mapping {exponent: coefficient} known below ``known_to``."""
        thr = _as_fraction(known_to)
        items = [(_as_fraction(e), _as_fraction(c)) for e, c in terms.items() if c != 0]
        items = [(e, c) for e, c in items if e < thr]
        if not items:
            return cls(thr.denominator, 0, [], thr.numerator)
        g = thr.denominator
        for e, _ in items:
            g = g * e.denominator // math.gcd(g, e.denominator)
        lead = min(int(e * g) for e, _ in items)
        trunc = int(thr * g) - lead
        cs = [_ZERO] * trunc
        for e, c in items:
            cs[int(e * g) - lead] += c
        return cls(g, lead, cs, trunc)

    # --------------------------------------------------------- alignment
    def _stretch(self, new_grid: int) -> tuple[int, list, int]:
        """Raw (lead, coeffs, trunc) re-expressed on a finer grid (no
        normalisation, so callers can rely on the grid they asked for)."""
        if new_grid % self.grid:
            raise GridMismatch(f"cannot rescale grid {self.grid} to {new_grid}")
        f = new_grid // self.grid
        if f == 1:
            return self.lead, list(self.coeffs), self.trunc
        cs = [_ZERO] * (len(self.coeffs) * f - (f - 1) if self.coeffs else 0)
        for k, c in enumerate(self.coeffs):
            cs[k * f] = c
        return self.lead * f, cs, self.trunc * f

    def truncate(self, known_to) -> "QSeries":
        """Forget coefficients at or beyond ``known_to``."""
        thr = min(_as_fraction(known_to), self.known_to)
        g = self.grid * thr.denominator // math.gcd(self.grid, thr.denominator)
        lead, cs, _ = self._stretch(g)
        new_trunc = int(thr * g) - lead
        return QSeries(g, lead, cs[: max(new_trunc, 0)], max(new_trunc, 0))

    def shift(self, exponent) -> "QSeries":
        """Multiply by ``q**exponent``."""
        e = _as_fraction(exponent)
        g = self.grid * e.denominator // math.gcd(self.grid, e.denominator)
        lead, cs, trunc = self._stretch(g)
        return QSeries(g, lead + int(e * g), cs, trunc)

    def scale(self, c) -> "QSeries":
        c = _as_fraction(c)
        if c == 0:
            return QSeries(self.grid, self.lead, [], self.trunc)
        return QSeries(self.grid, self.lead, [c * x for x in self.coeffs], self.trunc)

    def map_exponents(self, f: Callable[[Fraction], Fraction], known_to) -> "QSeries":
        """Rebuild the series applying ``f`` to every exponent (used by Hecke)."""
        return QSeries.from_terms({f(e): c for e, c in self.terms()}, known_to)

    # -------------------------------------------------------- arithmetic
    def __neg__(self) -> "QSeries":
        return self.scale(-1)

    def __add__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.monomial(0, other, 10**6)
        if not isinstance(other, QSeries):
            return NotImplemented
        g = self.grid * other.grid // math.gcd(self.grid, other.grid)
        la, ca, ta = self._stretch(g)
        lb, cb, tb = other._stretch(g)
        thr = min(la + ta, lb + tb)
        lead = min(la if ca else thr, lb if cb else thr)
        trunc = thr - lead
        cs = [_ZERO] * max(trunc, 0)
        for l0, arr in ((la, ca), (lb, cb)):
            for k, c in enumerate(arr):
                pos = l0 + k - lead
                if 0 <= pos < trunc:
                    cs[pos] += c
        return QSeries(g, lead, cs, max(trunc, 0))

    def __radd__(self, other) -> "QSeries":
        return self.__add__(other)

    def __sub__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.monomial(0, other, 10**6)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other) -> "QSeries":
        return self.__neg__().__add__(other)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        g = self.grid * other.grid // math.gcd(self.grid, other.grid)
        la, ca, tra = self._stretch(g)
        lb, cb, trb = other._stretch(g)
        ta, tb = la + tra, lb + trb
        bounds = []
        if ca:
            bounds.append(la + tb)
        if cb:
            bounds.append(lb + ta)
        if not bounds:
            bounds.append(ta + tb)
        thr = min(bounds)
        if not ca or not cb:
            e = Fraction(thr, g)
            return QSeries(e.denominator, e.numerator, [], 0)
        lead = la + lb
        trunc = thr - lead
        cs = [_ZERO] * max(trunc, 0)
        terms_a = [(k, c) for k, c in enumerate(ca) if c != 0]
        terms_b = [(k, c) for k, c in enumerate(cb) if c != 0]
        if len(terms_a) > len(terms_b):
            terms_a, terms_b = terms_b, terms_a
        for ka, va in terms_a:
            for kb, vb in terms_b:
                k = ka + kb
                if k >= trunc:
                    break
                cs[k] += va * vb
        return QSeries(g, lead, cs, max(trunc, 0))

    def __rmul__(self, other) -> "QSeries":
        return self.__mul__(other)

    def inverse(self) -> "QSeries":
        if self.is_zero:
            raise DivisionByZeroSeries("cannot invert a series with no known nonzero term")
        n = self.trunc
        a = list(self.coeffs) + [_ZERO] * (n - len(self.coeffs))
        c0 = a[0]
        inv0 = 1 / c0
        out = [_ZERO] * n
        out[0] = inv0
        support = [k for k in range(1, len(self.coeffs)) if self.coeffs[k] != 0]
        for k in range(1, n):
            acc = _ZERO
            for j in support:
                if j > k:
                    break
                acc += a[j] * out[k - j]
            out[k] = -acc * inv0
        return QSeries(self.grid, -self.lead, out, n)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if c == 0:
                raise DivisionByZeroSeries("division by zero constant")
            return self.scale(1 / c)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other) -> "QSeries":
        return self.inverse().__mul__(other)

    def __pow__(self, n: int) -> "QSeries":
        if not isinstance(n, int):
            raise TypeError("series powers must be integers; use .root() for radicals")
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            thr = self.known_to - (self.leading_exponent if self.coeffs else 0)
            return QSeries.one(1).truncate(max(thr, Fraction(1)))
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def root(self, m: int) -> "QSeries":
        """Exact m-th root (leading exponent divisible into the grid, leading
        coefficient a perfect rational m-th power)."""
        if m < 1:
            raise SeriesError("root index must be >= 1")
        if m == 1:
            return self
        if self.is_zero:
            raise RootNotExact("cannot take the root of a zero window")
        c0 = _nth_root_fraction(self.coeffs[0], m)
        # relative series u with (1+u) = self / (lead term)
        n = self.trunc
        a = [c / self.coeffs[0] for c in self.coeffs]
        a += [_ZERO] * (n - len(a))
        # v = (1+u)^(1/m) via v' = v * w with w = (x u')/(m (1+u))
        du = [_ZERO] * n
        for k in range(1, min(n, len(a))):
            du[k] = a[k] * k
        one_plus_u = QSeries(1, 0, a, n)
        w = QSeries(1, 0, du, n) / one_plus_u / m
        wc = [_ZERO] * n
        for k, c in enumerate(w.coeffs):
            if w.lead + k < n:
                wc[w.lead + k] = c
        v = [_ZERO] * n
        v[0] = _ONE
        wsupport = [k for k in range(1, n) if wc[k] != 0]
        for k in range(1, n):
            acc = _ZERO
            for j in wsupport:
                if j > k:
                    break
                acc += v[k - j] * wc[j]
            v[k] = acc / k
        lead_exp = Fraction(self.lead, self.grid * m)
        rooted = QSeries(self.grid, 0, v, n).shift(lead_exp).scale(c0)
        # verify exactness: rooted**m must reproduce the input on the window
        check = rooted**m
        diff = check - self
        if not diff.is_zero:
            raise RootNotExact(f"series is not an exact {m}-th power (index {m})")
        return rooted

    def qderiv(self) -> "QSeries":
        """Apply q d/dq (multiplies each coefficient by its exponent)."""
        cs = [c * Fraction(self.lead + k, self.grid) for k, c in enumerate(self.coeffs)]
        return QSeries(self.grid, self.lead, cs, self.trunc)

    # ------------------------------------------------------------ output
    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.coeffs == other.coeffs
            and (self.lead == other.lead or not self.coeffs)
            and self.known_to == other.known_to
            and (self.grid == other.grid or not self.coeffs)
        )

    def __hash__(self):
        return hash((self.grid, self.lead, self.coeffs, self.trunc))

    def agrees_with(self, other: "QSeries") -> bool:
        """Equality of all coefficients on the overlap of the known windows."""
        thr = min(self.known_to, other.known_to)
        return self.truncate(thr) == other.truncate(thr)

    def to_dict(self) -> dict:
        return {
            "grid": self.grid,
            "lead": self.lead,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
            "trunc": self.trunc,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "QSeries":
        return cls(d["grid"], d["lead"], [Fraction(c) for c in d["coeffs"]], d["trunc"])

    def __repr__(self) -> str:
        parts = []
        for e, c in list(self.terms())[:8]:
            parts.append(f"{c}*q^({e})")
        more = " + ..." if len(self.coeffs) > 8 else ""
        body = " + ".join(parts) if parts else "0"
        return f"QSeries({body}{more}; known to q^{self.known_to})"


# ---------------------------------------------------------------- generators


def dedekind_eta(orders: int = 12) -> QSeries:
    """eta(q) = q^(1/24) * prod (1-q^n), via the pentagonal number theorem."""
    n = orders * 24
    terms: dict[Fraction, Fraction] = {}
    k = 0
    while True:
        for kk in ((k, -k) if k else (0,)):
            e = Fraction(kk * (3 * kk - 1), 2)
            if e <= orders:
                terms[Fraction(1, 24) + e] = Fraction((-1) ** (kk % 2))
        if Fraction(k * (3 * k - 1), 2) > orders and Fraction(k * (3 * k + 1), 2) > orders:
            break
        k += 1
    return QSeries.from_terms(terms, Fraction(1, 24) + orders)


def pochhammer_q(k: int | None = None, orders: int = 12) -> QSeries:
    """(q)_k = prod_{j=1..k} (1-q^j); k=None gives (q)_infinity."""
    if k is None:
        return dedekind_eta(orders).shift(Fraction(-1, 24))
    out = QSeries.one(orders)
    for j in range(1, k + 1):
        out = out * QSeries.from_terms({0: 1, j: -1}, orders + 1)
    return out.truncate(orders)


def jacobi_theta_null(kind: int, orders: int = 12) -> QSeries:
    """Theta constants theta2, theta3, theta4 in the q = e^{2 pi i tau} grid,
    i.e. theta3 = sum q^(n^2/2)."""
    if kind not in (2, 3, 4):
        raise SeriesError("theta-null kind must be 2, 3 or 4")
    terms: dict[Fraction, Fraction] = {}
    if kind == 2:
        n = 0
        while Fraction((2 * n + 1) ** 2, 8) < Fraction(1, 8) + orders:
            terms[Fraction((2 * n + 1) ** 2, 8)] = terms.get(Fraction((2 * n + 1) ** 2, 8), 0) + 2
            n += 1
        return QSeries.from_terms(terms, Fraction(1, 8) + orders)
    sign = -1 if kind == 4 else 1
    n = 0
    while Fraction(n * n, 2) < orders:
        c = Fraction(1 if n == 0 else 2 * (sign**n))
        terms[Fraction(n * n, 2)] = c
        n += 1
    return QSeries.from_terms(terms, Fraction(orders))


def _divisor_power_sum(n: int, k: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            if d != n // d:
                total += (n // d) ** k
        d += 1
    return total


def eisenstein(weight: int, orders: int = 12) -> QSeries:
    """Normalised Eisenstein series E2, E4, E6 with constant term 1."""
    if weight not in (2, 4, 6):
        raise SeriesError("eisenstein weight must be 2, 4 or 6")
    factor = {2: -24, 4: 240, 6: -504}[weight]
    cs = [_ONE] + [Fraction(factor * _divisor_power_sum(n, weight - 1)) for n in range(1, orders)]
    return QSeries(1, 0, cs, orders)


def rogers_ramanujan(which: int, orders: int = 12) -> QSeries:
    """The effective Lee-Yang characters phi_0 (lead q^(-1/60)) and phi_1
    (lead q^(11/60)) as Euler products."""
    if which not in (0, 1):
        raise SeriesError("rogers_ramanujan index must be 0 or 1")
    residues = (1, 4) if which == 0 else (2, 3)
    out = QSeries.one(orders + 1)
    n = 1
    while n <= orders:
        if n % 5 in residues:
            out = out * QSeries.from_terms({0: 1, n: -1}, orders + 1).inverse()
        n += 1
    out = out.truncate(orders)
    lead = Fraction(-1, 60) if which == 0 else Fraction(11, 60)
    return out.shift(lead)


# --------------------------------------------------------- quasimodular ring


class QuasiModularForm:
    """Element of Q[E2, E4, E6], homogeneous of a fixed modular weight.

    Monomials are keyed by exponent triples (i, j, k) standing for
    E2^i E4^j E6^k (weight 2i + 4j + 6k).
    """

    __slots__ = ("coeffs", "weight")

    def __init__(self, coeffs: Mapping[tuple[int, int, int], object], weight: int | None = None):
        cleaned: dict[tuple[int, int, int], Fraction] = {}
        w = weight
        for key, val in coeffs.items():
            c = _as_fraction(val)
            if c == 0:
                continue
            i, j, k = key
            mw = 2 * i + 4 * j + 6 * k
            if w is None:
                w = mw
            elif mw != w:
                raise SeriesError(f"inhomogeneous quasimodular form: weight {mw} vs {w}")
            cleaned[(i, j, k)] = c
        self.coeffs = cleaned
        self.weight = w if w is not None else (weight if weight is not None else 0)

    @classmethod
    def zero(cls, weight: int = 0) -> "QuasiModularForm":
        return cls({}, weight)

    @classmethod
    def one(cls) -> "QuasiModularForm":
        return cls({(0, 0, 0): 1})

    @classmethod
    def generator(cls, weight: int) -> "QuasiModularForm":
        key = {2: (1, 0, 0), 4: (0, 1, 0), 6: (0, 0, 1)}[weight]
        return cls({key: 1})

    def __add__(self, other: "QuasiModularForm") -> "QuasiModularForm":
        if self.coeffs and other.coeffs and self.weight != other.weight:
            raise SeriesError("cannot add quasimodular forms of different weights")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, _ZERO) + v
        return QuasiModularForm(out, self.weight if self.coeffs else other.weight)

    def __sub__(self, other: "QuasiModularForm") -> "QuasiModularForm":
        return self + other.scale(-1)

    def scale(self, c) -> "QuasiModularForm":
        c = _as_fraction(c)
        return QuasiModularForm({k: c * v for k, v in self.coeffs.items()}, self.weight)

    def __mul__(self, other) -> "QuasiModularForm":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[tuple[int, int, int], Fraction] = {}
        for (i1, j1, k1), c1 in self.coeffs.items():
            for (i2, j2, k2), c2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2, k1 + k2)
                out[key] = out.get(key, _ZERO) + c1 * c2
        return QuasiModularForm(out, self.weight + other.weight if out else None)

    def __rmul__(self, other) -> "QuasiModularForm":
        return self.scale(other)

    def serre_derivative(self) -> "QuasiModularForm":
        """D_w = q d/dq - (w/12) E2 acting on a weight-w form; weight rises by 2."""
        out: dict[tuple[int, int, int], Fraction] = {}

        def add(key, val):
            out[key] = out.get(key, _ZERO) + val

        for (i, j, k), c in self.coeffs.items():
            # q d/dq by the Ramanujan identities
            if i:
                add((i + 1, j, k), c * i / 12)
                add((i - 1, j + 1, k), -c * i / 12)
            if j:
                add((i + 1, j, k), c * j / 3)
                add((i, j - 1, k + 1), -c * j / 3)
            if k:
                add((i + 1, j, k), c * k / 2)
                add((i, j + 2, k - 1), -c * k / 2)
            # minus (w/12) E2
            add((i + 1, j, k), -c * Fraction(self.weight, 12))
        return QuasiModularForm(out, self.weight + 2)

    def to_qseries(self, orders: int = 12) -> QSeries:
        e2, e4, e6 = (eisenstein(w, orders) for w in (2, 4, 6))
        total = QSeries(1, 0, [], orders)
        for (i, j, k), c in self.coeffs.items():
            term = QSeries.one(orders)
            for base, power in ((e2, i), (e4, j), (e6, k)):
                if power:
                    term = term * base**power
            total = total + term.scale(c)
        return total.truncate(orders)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuasiModularForm) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if not self.coeffs:
            return "QuasiModularForm(0)"
        bits = []
        for (i, j, k), c in sorted(self.coeffs.items()):
            mono = "".join(
                f"{n}^{p}" for n, p in (("E2", i), ("E4", j), ("E6", k)) if p
            ) or "1"
            bits.append(f"{c}*{mono}")
        return f"QuasiModularForm({' + '.join(bits)}; weight {self.weight})"
