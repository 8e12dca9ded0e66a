"""Module bookkeeping over intermediate root data.

Provides, for the algebras built by :mod:`interlie.liedata`:

* quadratic Casimirs (``casimir_c2``) combining the classical pairing with a
  correction quadratic form on the fermionic node labels;
* a generalized Weyl dimension formula (``weyl_dim_intermediate``) valid in
  three label regimes, returning :data:`NOT_COMPUTABLE` outside them;
* per-module records (``module_record``, ``module_by_name``,
  ``enumerate_level``) merging formulas with the shipped tables;
* conformal-weight spectra at positive integer level (``conformal_weights``);
* name catalogs for the classical algebras of each embedding chain
  (``partner_catalog``, ``resolve_partner``);
* exact dimension/index verification of the shipped branching, tensor and
  plethysm identities (``verify_branching``, ``verify_all_fixtures``);
* a bounded search expressing a (dim, index) target as a multiset of
  candidate modules (``decompose_by_dim_index``);
* the one-instanton Hilbert series on the adjoint ray
  (``hilbert_one_instanton``).

Conventions
-----------
* Highest weights are tuples of nonnegative integers in the fundamental-weight
  basis of the underlying classical root datum.
* ``index = dim * c2 / (2 * dim(g))``, each algebra in its own normalization.
  When an identity equates modules of two members of a chain, the checker
  rescales the subalgebra index sum by the embedding index inferred from the
  adjoint branching; it equals 1 for every chain shipped here.
* Quantities the shipped tables leave open are the :data:`UNKNOWN` sentinel;
  weights outside the validity range of the dimension formula produce
  :data:`NOT_COMPUTABLE`.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import product

from . import liedata
from .exactq import QSeries
from .liedata import IntermediateAlgebra, UnsupportedAlgebra

__all__ = [
    "UNKNOWN", "NOT_COMPUTABLE",
    "UnsupportedWeight", "UnknownModule", "NonTerminatingNumerator",
    "ModuleRecord", "ConformalSpectrum", "FixtureReport", "HilbertSeries",
    "FORMULA_ALGEBRAS",
    "casimir_c2", "weyl_dim_intermediate", "parity", "weight_level",
    "module_record", "module_by_name", "enumerate_level",
    "conformal_weights",
    "partner_catalog", "resolve_partner",
    "plethysm_dim_index", "tensor_dim_index",
    "load_fixtures", "embedding_rescale", "verify_branching",
    "verify_all_fixtures",
    "decompose_by_dim_index", "hilbert_one_instanton",
]

F = Fraction

#: Algebras whose Casimir and dimension come from closed formulas; the
#: remaining members rely on the shipped tables.
FORMULA_ALGEBRAS = ("A5h", "D6h", "E7h")


class _Sentinel:
    """Falsy placeholder with a stable repr (``Unknown``/``NotComputable``)."""

    __slots__ = ("_label",)

    def __init__(self, label: str):
        object.__setattr__(self, "_label", label)

    def __repr__(self) -> str:
        return self._label

    def __bool__(self) -> bool:
        return False


#: A table entry the data does not determine (dimension or index left open).
UNKNOWN = _Sentinel("Unknown")
#: A weight outside the validity regimes of the dimension formula.
NOT_COMPUTABLE = _Sentinel("NotComputable")


class UnsupportedWeight(ValueError):
    """A weight (or level) outside the tabulated/computable range."""


class UnknownModule(KeyError):
    """A module name with no stored data behind it."""


class NonTerminatingNumerator(ArithmeticError):
    """The Hilbert-series numerator fails to close at the expected degree."""


# --------------------------------------------------------------------------
# data access
# --------------------------------------------------------------------------
def _read_data(filename: str) -> dict:
    return json.loads(resources.files("interlie.data").joinpath(filename).read_text())


@lru_cache(maxsize=None)
def _module_tables() -> dict:
    return _read_data("modules.json")


@lru_cache(maxsize=None)
def _fixtures() -> tuple[dict, ...]:
    return tuple(_read_data("branchings.json")["fixtures"])


def load_fixtures() -> tuple[dict, ...]:
    """Shallow copies of the shipped decomposition-identity corpus."""
    return tuple(dict(fx) for fx in _fixtures())


def _frac(value) -> Fraction | None:
    return None if value is None else F(value)


def _alg(alg) -> IntermediateAlgebra:
    if isinstance(alg, IntermediateAlgebra):
        return alg
    return liedata.build_intermediate(str(alg))


def _alg_name(alg) -> str:
    return alg.name if isinstance(alg, IntermediateAlgebra) else str(alg)


def _canonical_labels(alg_name: str, labels) -> tuple[int, ...]:
    lab = tuple(int(v) for v in labels)
    if alg_name == "A5h":
        # label reversal is an automorphism here (palindromic rho, symmetric
        # fermionic node set), so classes are stored by their larger orientation
        return max(lab, tuple(reversed(lab)))
    return lab


@lru_cache(maxsize=None)
def _rows_by_labels(alg_name: str) -> dict:
    rows = _module_tables().get(alg_name)
    if rows is None:
        raise UnsupportedAlgebra(f"no module table for algebra {alg_name!r}")
    return {_canonical_labels(alg_name, r["labels"]): r
            for r in rows if r.get("labels") is not None}


@lru_cache(maxsize=None)
def _rows_by_name(alg_name: str) -> dict:
    rows = _module_tables().get(alg_name)
    if rows is None:
        raise UnsupportedAlgebra(f"no module table for algebra {alg_name!r}")
    return {r["name"]: r for r in rows if r.get("name")}


def _check_labels(alg: IntermediateAlgebra, labels) -> tuple[int, ...]:
    try:
        lab = tuple(int(v) for v in labels)
    except (TypeError, ValueError):
        raise UnsupportedWeight(f"{alg.name}: weight {labels!r} is not a label tuple")
    if len(lab) != alg.rank or any(v < 0 for v in lab) or \
            any(v != w for v, w in zip(lab, labels)):
        raise UnsupportedWeight(
            f"{alg.name}: expected {alg.rank} nonnegative integer labels, got {labels!r}")
    return lab


# --------------------------------------------------------------------------
# record type
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class ModuleRecord:
    """One module class and its invariants.

    ``mult`` is the class size: the number of conjugation-related copies that
    share every listed invariant (label reversal for the A-chain, charge sign
    for the u(1) chain).  ``dim``, ``c2`` and ``index`` may be the
    :data:`UNKNOWN` sentinel when the data leaves them open.
    """

    algebra: str
    labels: tuple[int, ...] | None
    name: str | None
    dim: object
    c2: object
    index: object
    parity: str | None
    level: Fraction | None
    mult: int = 1

    def display_name(self) -> str:
        if self.name is not None:
            return self.name
        return "(" + ",".join(str(v) for v in self.labels) + ")"


def _record_from_row(alg_name: str, row: dict) -> ModuleRecord:
    labels = tuple(row["labels"]) if row.get("labels") is not None else None
    return ModuleRecord(
        algebra=alg_name,
        labels=labels,
        name=row.get("name"),
        dim=row["dim"] if row.get("dim") is not None else UNKNOWN,
        c2=F(row["c2"]) if row.get("c2") is not None else UNKNOWN,
        index=F(row["index"]) if row.get("index") is not None else UNKNOWN,
        parity=row.get("parity"),
        level=_frac(row.get("level")),
        mult=row.get("mult", 1),
    )


# --------------------------------------------------------------------------
# Casimir, parity, level, dimension
# --------------------------------------------------------------------------
def _q_odd(values) -> Fraction:
    s = sum(values)
    return sum(v * v for v in values) - F(s * s, 2)


def _b_odd(x, y) -> Fraction:
    return sum(a * b for a, b in zip(x, y)) - F(sum(x) * sum(y), 2)


def casimir_c2(alg, labels) -> Fraction:
    """Quadratic Casimir of the highest-weight module ``labels``.

    For the three large algebras this is ``<lam + 2*rho, lam>`` in the
    subalgebra pairing plus a correction ``sum f_i^2 - (sum f_i)^2 / 2`` on
    the fermionic node labels ``f``; for the A-chain member, when all three
    fermionic labels are positive, the first two are reduced by their minimum
    before the correction is applied.  That reduction reads the labels in one
    diagram orientation; since label reversal identifies modules (and so must
    preserve the Casimir), the class value is the larger of the two
    orientations' corrections.  The smaller algebras answer from their stored
    tables and reject unlisted weights.
    """
    a = _alg(alg)
    lab = _check_labels(a, labels)
    if a.name in FORMULA_ALGEBRAS:
        lam = [F(v) for v in lab]
        shifted = [v + 2 * r for v, r in zip(lam, a.rho)]
        f = [lam[i] for i in sorted(a.s_odd)]
        if a.name == "A5h" and all(v > 0 for v in f):
            def reduced(g):
                m = min(g[0], g[1])
                return (g[0] - m, g[1] - m, g[2])
            return a.ip(shifted, lam) + max(
                _q_odd(reduced(f)), _q_odd(reduced(f[::-1])))
        return a.ip(shifted, lam) + _q_odd(f)
    row = _rows_by_labels(a.name).get(_canonical_labels(a.name, lab))
    if row is None or row.get("c2") is None:
        raise UnsupportedWeight(f"{a.name}: no tabulated Casimir for weight {lab}")
    return F(row["c2"])


def parity(alg, labels) -> str:
    """``"F"`` when the fermionic-node label sum is odd, else ``"B"``."""
    a = _alg(alg)
    lab = _check_labels(a, labels)
    return "F" if sum(lab[i] for i in a.s_odd) % 2 else "B"


def weight_level(alg, labels) -> Fraction:
    """Level of a highest weight (comark pairing, with per-chain variants)."""
    a = _alg(alg)
    lab = _check_labels(a, labels)
    if a.name == "AD3h":
        return F(max(lab))
    if a.name == "AG1h":
        return F(-(-lab[0] // 3))
    if a.name == "UA1h":
        raise UnsupportedWeight("UA1h levels are tabulated by name only")
    return a.level(lab)


def weyl_dim_intermediate(alg, labels):
    """Generalized Weyl dimension, or :data:`NOT_COMPUTABLE`.

    Writing ``f`` for the three fermionic node labels, the regimes are:

    i/ii. ``f`` decomposes into pairings of distinct fermionic fundamental
          weights (the pairing counts ``(f1+f2-f3)/2`` etc. are nonnegative
          integers): product over the positive roots and the selected
          half-weights of ``<lam+rho, a> / <rho, a>``.
    iii.  exactly one fermionic label equals 1, the others vanish: the same
          product with the odd pairing ``B(f, w_f)`` subtracted inside each
          half-weight factor and an overall 1/2.

    Any other weight returns :data:`NOT_COMPUTABLE`.
    """
    a = _alg(alg)
    if a.name not in FORMULA_ALGEBRAS:
        raise UnsupportedAlgebra(
            f"{a.name}: the dimension formula applies to {', '.join(FORMULA_ALGEBRAS)}")
    lab = _check_labels(a, labels)
    odd = sorted(a.s_odd)
    f = [lab[i] for i in odd]
    x, y, z = f
    pairings = (F(x + y - z, 2), F(x - y + z, 2), F(-x + y + z, 2))
    lam_rho = [F(v) + r for v, r in zip(lab, a.rho)]
    rho = list(a.rho)
    if all(m.denominator == 1 and m >= 0 for m in pairings):
        num = den = F(1)
        for root in list(a.sub.positive_roots) + list(a.half_weights):
            num *= a.ip(lam_rho, root)
            den *= a.ip(rho, root)
        d = num / den
        if d.denominator != 1 or d <= 0:
            raise ArithmeticError(f"{a.name}: pairing regime gave {d} for {lab}")
        return int(d)
    if sorted(f) == [0, 0, 1]:
        num, den = F(1), F(2)
        fl = [F(v) for v in f]
        for root in a.sub.positive_roots:
            num *= a.ip(lam_rho, root)
            den *= a.ip(rho, root)
        for w in a.half_weights:
            wf = [w[i] for i in odd]
            num *= a.ip(lam_rho, w) - _b_odd(fl, wf)
            den *= a.ip(rho, w)
        d = num / den
        if d.denominator != 1 or d <= 0:
            raise ArithmeticError(f"{a.name}: odd regime gave {d} for {lab}")
        return int(d)
    return NOT_COMPUTABLE


# --------------------------------------------------------------------------
# records and enumeration
# --------------------------------------------------------------------------
def module_record(alg, labels) -> ModuleRecord:
    """Record for a highest weight: formulas merged with the stored tables.

    Dimension preference: stored value, then the dimension formula, then
    :data:`UNKNOWN`; the index is ``dim * c2 / (2 * dim(g))`` whenever the
    dimension is known, else the stored value, else :data:`UNKNOWN`.
    """
    a = _alg(alg)
    lab = _check_labels(a, labels)
    if a.name == "UA1h":
        raise UnsupportedWeight(
            "UA1h modules are tabulated by name; use module_by_name")
    canon = _canonical_labels(a.name, lab)
    row = _rows_by_labels(a.name).get(canon)
    if a.name not in FORMULA_ALGEBRAS:
        if row is None:
            raise UnsupportedWeight(f"{a.name}: weight {lab} is not tabulated")
        return _record_from_row(a.name, row)
    c2 = casimir_c2(a, lab)
    dim = row["dim"] if row and row.get("dim") is not None else None
    if dim is None:
        formula_dim = weyl_dim_intermediate(a, lab)
        dim = UNKNOWN if formula_dim is NOT_COMPUTABLE else formula_dim
    if dim is not UNKNOWN:
        index = F(dim) * c2 / (2 * a.dim)
    elif row and row.get("index") is not None:
        index = F(row["index"])
    else:
        index = UNKNOWN
    mult = 1
    if a.name == "A5h" and canon != tuple(reversed(canon)):
        mult = 2
    if row and row.get("mult"):
        mult = row["mult"]
    return ModuleRecord(
        algebra=a.name,
        labels=canon,
        name=row.get("name") if row else None,
        dim=dim,
        c2=c2,
        index=index,
        parity=parity(a, lab),
        level=weight_level(a, lab),
        mult=mult,
    )


def module_by_name(alg, name: str) -> ModuleRecord:
    """Stored-table lookup by display name (a ``bar`` infix is ignored)."""
    alg_name = _alg_name(alg)
    rows = _rows_by_name(alg_name)
    key = name.replace("bar", "")
    if key not in rows:
        raise UnknownModule(f"{alg_name}: no stored module named {name!r}")
    return _record_from_row(alg_name, rows[key])


def _dominant_weights(datum, max_level: Fraction, exact: bool) -> list[tuple[int, ...]]:
    comarks = datum.affine_comarks
    out: list[tuple[int, ...]] = []

    def rec(i: int, acc: list[int], lev: Fraction):
        if i == datum.rank:
            if not exact or lev == max_level:
                out.append(tuple(acc))
            return
        n = 0
        while lev + n * comarks[i] <= max_level:
            rec(i + 1, acc + [n], lev + n * comarks[i])
            n += 1

    rec(0, [], F(0))
    return out


def enumerate_level(alg, k) -> list[ModuleRecord]:
    """All module classes of level exactly ``k``, sorted by labels.

    The three large algebras enumerate the dominant weights of their
    subalgebra (the A-chain member up to label reversal); the smaller
    algebras answer from their stored tables, which are complete for
    levels 0 and 1 only.
    """
    alg_name = _alg_name(alg)
    kk = F(k)
    if kk < 0:
        raise UnsupportedWeight("level must be nonnegative")
    if alg_name in FORMULA_ALGEBRAS:
        a = _alg(alg_name)
        weights = _dominant_weights(a.sub, kk, exact=True)
        classes = sorted({_canonical_labels(alg_name, w) for w in weights})
        return [module_record(a, w) for w in classes]
    rows = _module_tables().get(alg_name)
    if rows is None:
        raise UnsupportedAlgebra(f"no module table for algebra {alg_name!r}")
    if kk > 1:
        raise UnsupportedWeight(
            f"{alg_name}: stored module tables are complete for level <= 1 only")
    return [_record_from_row(alg_name, r) for r in rows if F(r["level"]) == kk]


# --------------------------------------------------------------------------
# conformal weights
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class ConformalSpectrum:
    """Conformal weights ``h = c2 / (2 (h_dual + k))`` with degeneracies.

    ``weights`` is sorted by ``h``; each degeneracy counts primaries (class
    sizes included).  ``conductor`` is the least common denominator of
    ``c/24`` and all ``h - c/24``.
    """

    algebra: str
    level: Fraction
    central_charge: Fraction
    weights: tuple[tuple[Fraction, int], ...]
    conductor: int

    @property
    def distinct_weights(self) -> tuple[Fraction, ...]:
        return tuple(h for h, _ in self.weights)

    @property
    def primary_count(self) -> int:
        return sum(d for _, d in self.weights)


def _spectrum(alg_name: str, k: Fraction, c: Fraction, pairs) -> ConformalSpectrum:
    merged: dict[Fraction, int] = {}
    for h, deg in pairs:
        merged[h] = merged.get(h, 0) + deg
    weights = tuple(sorted(merged.items()))
    denominators = [(h - c / 24).denominator for h, _ in weights]
    denominators.append((c / 24).denominator)
    return ConformalSpectrum(alg_name, k, c, weights, math.lcm(*denominators))


def _one_dim_spectrum(k: int) -> ConformalSpectrum:
    # the dim-1 chain member: its level-k vacuum module tower is the
    # effective (3k+2, 3) minimal model, all weights shifted by the minimum
    p = 3 * k + 2
    raw = [F((3 * s - p) ** 2 - (3 - p) ** 2, 12 * p) for s in range(1, p)]
    h_min = min(raw)
    pairs = [(h - h_min, 1) for h in raw]
    return _spectrum("IM", F(k), F(3 * k, p), pairs)


def conformal_weights(alg, k) -> ConformalSpectrum:
    """Spectrum of conformal weights at positive integer level ``k``.

    Raises :class:`UnsupportedWeight` where the stored tables run out (the
    smaller algebras beyond level 1) and :class:`UnsupportedAlgebra` for the
    dim-156 outlier, which carries no module data.
    """
    alg_name = _alg_name(alg)
    kk = F(k)
    if kk < 1 or kk.denominator != 1:
        raise UnsupportedWeight("level must be a positive integer")
    k_int = int(kk)
    if alg_name == "X1":
        raise UnsupportedAlgebra("X1 carries no module data")
    if alg_name == "IM":
        return _one_dim_spectrum(k_int)
    if alg_name == "D6hh":
        if k_int != 1:
            raise UnsupportedWeight("D6hh weights are stored for level 1 only")
        info = liedata.CHARACTER_ONLY["D6hh"]
        c = kk * info["dim"] / (kk + info["h_dual"])
        pairs = [(F(row["h"]), row.get("mult", 1))
                 for row in _module_tables()["D6hh"]]
        return _spectrum(alg_name, kk, c, pairs)
    a = _alg(alg_name)
    pairs = []
    for lev in range(k_int + 1):
        for rec in enumerate_level(a, lev):
            if rec.c2 is UNKNOWN:
                raise UnsupportedWeight(
                    f"{alg_name}: Casimir unknown for module {rec.display_name()}")
            pairs.append((rec.c2 / (2 * (a.h_dual + kk)), rec.mult))
    return _spectrum(alg_name, kk, a.central_charge(kk), pairs)


# --------------------------------------------------------------------------
# partner catalogs
# --------------------------------------------------------------------------
_DEFAULT_CATALOG_LEVEL = {"A2": 2, "A5": 5, "C3": 3, "D4": 2, "D6": 6,
                          "E6": 4, "E7": 4, "F4": 2, "G2": 2}
#: Established display names for the three 8-dimensional classes of D4
#: (vector / spinor / cospinor), which the prime convention cannot separate.
_PARTNER_ALIASES = {"D4": {"8_v": "8''", "8_s": "8'", "8_c": "8"}}


def _flip(family: str):
    if family in ("A2", "A5"):
        return lambda t: tuple(reversed(t))
    if family == "D6":
        return lambda t: t[:4] + (t[5], t[4])
    if family == "E6":
        return lambda t: (t[5], t[1], t[4], t[3], t[2], t[0])
    return lambda t: t


def _build_special_catalog(family: str) -> dict[str, ModuleRecord]:
    records: dict[str, ModuleRecord] = {}
    if family == "U1":
        # charge-q one-dimensional modules; names are the charges
        for q in range(-8, 9):
            c2 = F(q * q, 6)
            records[str(q)] = ModuleRecord(family, None, str(q), 1, c2,
                                           F(q * q, 12), None, None, 1)
    elif family == "A1^3":
        # names are the su(2)-factor dimensions "(a,b,c)"
        for dims in product(range(1, 5), repeat=3):
            labels = tuple(d - 1 for d in dims)
            c2 = sum(F(n * (n + 2), 2) for n in labels)
            dim = math.prod(dims)
            name = "(" + ",".join(str(d) for d in dims) + ")"
            records[name] = ModuleRecord(family, labels, name, dim, c2,
                                         F(dim) * c2 / 18, None, None, 1)
    elif family == "A1/3":
        # rescaled su(2): names are the module dimensions
        for n in range(0, 5):
            c2 = F(n * (n + 2), 6)
            records[str(n + 1)] = ModuleRecord(family, (n,), str(n + 1), n + 1,
                                               c2, F(n + 1) * c2 / 6, None,
                                               None, 1)
    return records


@lru_cache(maxsize=None)
def _partner_catalog_cached(family: str, max_level: Fraction) -> dict[str, ModuleRecord]:
    if family in ("U1", "A1^3", "A1/3"):
        return _build_special_catalog(family)
    datum = liedata.simple_root_datum(family)
    flip = _flip(family)
    classes: dict[tuple, dict] = {}
    for w in _dominant_weights(datum, max_level, exact=False):
        canon = max(w, flip(w))
        if canon in classes:
            continue
        classes[canon] = dict(
            labels=canon,
            dim=datum.weyl_dim(canon),
            c2=datum.casimir(canon),
            index=datum.index(canon),
            level=sum((F(v) * c for v, c in zip(canon, datum.affine_comarks)),
                      F(0)),
            mult=1 if canon == flip(canon) else 2,
        )
    by_dim: dict[int, list[dict]] = {}
    for cls in classes.values():
        by_dim.setdefault(cls["dim"], []).append(cls)
    records: dict[str, ModuleRecord] = {}
    for dim, group in by_dim.items():
        # same-dimension classes are distinguished by primes, in increasing
        # Casimir order (labels break the remaining ties deterministically)
        group.sort(key=lambda cls: (cls["c2"], cls["labels"]))
        for rank_in_group, cls in enumerate(group):
            name = str(dim) + "'" * rank_in_group
            records[name] = ModuleRecord(family, cls["labels"], name, dim,
                                         cls["c2"], cls["index"], None,
                                         cls["level"], cls["mult"])
    return records


def partner_catalog(family: str, max_level=None) -> dict[str, ModuleRecord]:
    """Name -> record catalog of the classical algebra ``family``.

    Classes are dominant-weight orbits under the diagram flip (label reversal
    for A-series, spinor swap for D6, the order-2 symmetry for E6); names are
    the dimension with primes separating same-dimension classes by Casimir.
    """
    if max_level is None:
        max_level = _DEFAULT_CATALOG_LEVEL.get(family, 3)
    return dict(_partner_catalog_cached(family, F(max_level)))


def resolve_partner(family: str, name: str, max_level=None) -> ModuleRecord:
    """Catalog lookup tolerating ``bar`` infixes and redundant primes.

    A conjugation marker never changes the class; a primed name whose
    dimension admits only a single class resolves to that class (primes
    only ever separate same-dimension classes).
    """
    if max_level is None:
        max_level = _DEFAULT_CATALOG_LEVEL.get(family, 3)
    catalog = _partner_catalog_cached(family, F(max_level))
    key = name.replace("bar", "")
    key = _PARTNER_ALIASES.get(family, {}).get(key, key)
    if key not in catalog and key.endswith("'"):
        base = key.rstrip("'")
        siblings = [n for n in catalog if n.rstrip("'") == base]
        if len(siblings) == 1:
            key = siblings[0]
    if key not in catalog:
        raise UnknownModule(f"{family}: no module named {name!r}")
    return catalog[key]


# --------------------------------------------------------------------------
# tensor and plethysm bookkeeping
# --------------------------------------------------------------------------
# Symmetric-group data for Schur functors of degree 2..4: centralizer orders
# z_mu of the cycle types and character values chi^nu(mu).
_Z_CYCLE = {(1, 1): 2, (2,): 2, (1, 1, 1): 6, (2, 1): 2, (3,): 3,
            (1, 1, 1, 1): 24, (2, 1, 1): 4, (2, 2): 8, (3, 1): 3, (4,): 4}
_CHI = {
    (2,): {(1, 1): 1, (2,): 1},
    (1, 1): {(1, 1): 1, (2,): -1},
    (3,): {(1, 1, 1): 1, (2, 1): 1, (3,): 1},
    (2, 1): {(1, 1, 1): 2, (2, 1): 0, (3,): -1},
    (1, 1, 1): {(1, 1, 1): 1, (2, 1): -1, (3,): 1},
    (4,): {(1, 1, 1, 1): 1, (2, 1, 1): 1, (2, 2): 1, (3, 1): 1, (4,): 1},
    (3, 1): {(1, 1, 1, 1): 3, (2, 1, 1): 1, (2, 2): -1, (3, 1): 0, (4,): -1},
    (2, 2): {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0},
    (2, 1, 1): {(1, 1, 1, 1): 3, (2, 1, 1): -1, (2, 2): -1, (3, 1): 0,
                (4,): 1},
    (1, 1, 1, 1): {(1, 1, 1, 1): 1, (2, 1, 1): -1, (2, 2): 1, (3, 1): 1,
                   (4,): -1},
}


def plethysm_dim_index(dim, index, partition) -> tuple[Fraction, Fraction]:
    """(dim, index) of the Schur functor ``s_partition`` applied to a module.

    Both follow from the cycle-type expansion: dimension
    ``sum_mu chi(mu)/z_mu * d^len(mu)`` and index
    ``I * sum_mu chi(mu)/z_mu * d^(len(mu)-1) * sum_i mu_i^2``.
    """
    nu = tuple(sorted((int(p) for p in partition), reverse=True))
    if nu not in _CHI:
        raise ValueError(f"unsupported partition {partition!r} (degrees 2-4)")
    d = F(dim)
    dim_out = sum(F(chi, _Z_CYCLE[mu]) * d ** len(mu)
                  for mu, chi in _CHI[nu].items())
    weight = sum(F(chi, _Z_CYCLE[mu]) * d ** (len(mu) - 1) * sum(p * p for p in mu)
                 for mu, chi in _CHI[nu].items())
    return dim_out, F(index) * weight


def tensor_dim_index(dim_a, index_a, dim_b, index_b) -> tuple[Fraction, Fraction]:
    """(dim, index) of a tensor product: ``I = dim_b*I_a + dim_a*I_b``."""
    da, db = F(dim_a), F(dim_b)
    return da * db, db * F(index_a) + da * F(index_b)


# --------------------------------------------------------------------------
# fixture verification
# --------------------------------------------------------------------------
def _module_info(alg_name: str, name: str) -> tuple[Fraction, Fraction]:
    """(dim, index) for bookkeeping; raises UnknownModule when not stored."""
    if alg_name in _module_tables():
        record = module_by_name(alg_name, name)
    else:
        record = resolve_partner(alg_name, name)
    if record.dim is UNKNOWN or record.index is UNKNOWN:
        raise UnknownModule(f"{alg_name} {name}: dimension/index not stored")
    return F(record.dim), F(record.index)


def _normalize_fixture(fx: dict) -> dict:
    if isinstance(fx.get("lhs"), dict):
        # verbose record shape: lhs {algebra, name}, rhs [{algebra, name, mult}]
        lhs = fx["lhs"]
        rhs = fx["rhs"]
        sub_algebras = {term["algebra"] for term in rhs}
        if len(sub_algebras) != 1:
            raise ValueError("all right-hand terms must carry one algebra tag")
        return {
            "kind": fx.get("kind", "branching"),
            "pair": [sub_algebras.pop(), lhs["algebra"]],
            "lhs": lhs.get("name", lhs.get("name_or_labels")),
            "rhs": [[term.get("mult", 1), term["name"]] for term in rhs],
            "adjoint": fx.get("adjoint", False),
            "cite": fx.get("cite", ""),
        }
    return fx


@lru_cache(maxsize=None)
def embedding_rescale(sub: str, big: str) -> Fraction:
    """Embedding index of ``sub`` in ``big``, pinned by the adjoint fixture.

    Defaults to 1 when the corpus has no adjoint branching for the pair;
    every chain shipped here yields exactly 1.
    """
    for fx in _fixtures():
        if fx["kind"] == "branching" and fx.get("adjoint") \
                and fx["pair"] == [sub, big]:
            _, lhs_index = _module_info(big, fx["lhs"])
            rhs_index = sum(m * _module_info(sub, n)[1] for m, n in fx["rhs"])
            return rhs_index / lhs_index
    return F(1)


@dataclass(frozen=True)
class FixtureReport:
    """Outcome of one exact dimension/index bookkeeping check."""

    kind: str
    description: str
    lhs_dim: Fraction
    rhs_dim: Fraction
    lhs_index: Fraction
    rhs_index: Fraction
    rescale: Fraction
    dim_ok: bool
    index_ok: bool

    @property
    def ok(self) -> bool:
        return self.dim_ok and self.index_ok


def _format_terms(rhs) -> str:
    parts = []
    for mult, name in rhs:
        body = name if abs(mult) == 1 else f"{abs(mult)}*{name}"
        if not parts:
            parts.append(body if mult > 0 else f"-{body}")
        else:
            parts.append(("+ " if mult > 0 else "- ") + body)
    return " ".join(parts)


def verify_branching(fixture: dict) -> FixtureReport:
    """Exact dimension and index bookkeeping for one identity.

    Accepts the shipped compact shape (``kind``/``pair``/``lhs``/``rhs``) or a
    verbose record with algebra-tagged sides.  Branching identities rescale
    the subalgebra index sum by :func:`embedding_rescale`.
    """
    fx = _normalize_fixture(dict(fixture))
    kind = fx.get("kind", "branching")
    if kind == "branching":
        sub, big = fx["pair"]
        lhs_dim, lhs_index = _module_info(big, fx["lhs"])
        rescale = embedding_rescale(sub, big)
        lhs_index = lhs_index * rescale
        rhs_algebra = sub
        head = f"{big} {fx['lhs']} -> {sub}:"
    elif kind == "tensor":
        rhs_algebra = fx["algebra"]
        (da, ia), (db, ib) = (_module_info(rhs_algebra, n) for n in fx["factors"])
        lhs_dim, lhs_index = tensor_dim_index(da, ia, db, ib)
        rescale = F(1)
        head = f"{rhs_algebra} {fx['factors'][0]} x {fx['factors'][1]}:"
    elif kind == "plethysm":
        rhs_algebra = fx["algebra"]
        d, i = _module_info(rhs_algebra, fx["arg"])
        lhs_dim, lhs_index = plethysm_dim_index(d, i, tuple(fx["partition"]))
        rescale = F(1)
        shape = ",".join(str(p) for p in fx["partition"])
        head = f"{rhs_algebra} s[{shape}]({fx['arg']}):"
    else:
        raise ValueError(f"unknown fixture kind {kind!r}")
    rhs_dim = sum((m * _module_info(rhs_algebra, n)[0] for m, n in fx["rhs"]),
                  F(0))
    rhs_index = sum((m * _module_info(rhs_algebra, n)[1] for m, n in fx["rhs"]),
                    F(0))
    return FixtureReport(
        kind=kind,
        description=f"{head} {_format_terms(fx['rhs'])}",
        lhs_dim=lhs_dim,
        rhs_dim=rhs_dim,
        lhs_index=lhs_index,
        rhs_index=rhs_index,
        rescale=rescale,
        dim_ok=lhs_dim == rhs_dim,
        index_ok=lhs_index == rhs_index,
    )


def verify_all_fixtures() -> tuple[FixtureReport, ...]:
    """Reports for the whole shipped corpus, in file order."""
    return tuple(verify_branching(fx) for fx in _fixtures())


# --------------------------------------------------------------------------
# bounded decomposition search
# --------------------------------------------------------------------------
def decompose_by_dim_index(target_dim, target_index, candidates,
                           max_mult: int = 4, max_terms: int = 6):
    """Multisets of candidates matching a (dimension, index) target exactly.

    ``candidates`` holds ``ModuleRecord`` objects or ``(name, dim, index)``
    triples; entries with unknown dimension or index are skipped.  Solutions
    are tuples of ``(mult, name)`` (dimension-descending) limited to
    ``max_mult`` per candidate and ``max_terms`` summands counted with
    multiplicity, ordered by total multiplicity.
    """
    pool: list[tuple[int, Fraction, str]] = []
    seen: set[str] = set()
    for cand in candidates:
        if isinstance(cand, ModuleRecord):
            name, dim, index = cand.display_name(), cand.dim, cand.index
        else:
            name, dim, index = cand
        if dim is UNKNOWN or index is UNKNOWN or name in seen:
            continue
        seen.add(name)
        pool.append((int(dim), F(index), str(name)))
    pool.sort(key=lambda entry: (-entry[0], entry[1], entry[2]))
    solutions: list[tuple[tuple[int, str], ...]] = []

    def search(pos: int, rem_dim, rem_index, chosen: list, used: int):
        if rem_dim == 0:
            if rem_index == 0:
                solutions.append(tuple(chosen))
            return
        if rem_dim < 0 or rem_index < 0 or pos == len(pool):
            return
        dim, index, name = pool[pos]
        highest = min(max_mult, rem_dim // dim, max_terms - used)
        if index > 0:
            highest = min(highest, rem_index // index)
        for mult in range(highest, -1, -1):
            search(pos + 1, rem_dim - mult * dim, rem_index - mult * index,
                   chosen + ([(mult, name)] if mult else []), used + mult)

    search(0, F(target_dim), F(target_index), [], 0)
    solutions.sort(key=lambda sol: (sum(m for m, _ in sol), sol))
    return solutions


# --------------------------------------------------------------------------
# one-instanton Hilbert series
# --------------------------------------------------------------------------
_ADJOINT_WEIGHT = {"D6h": (0, 1, 0, 0, 0, 0), "A5h": (1, 0, 0, 0, 1)}


@dataclass(frozen=True)
class HilbertSeries:
    """One-instanton Hilbert series on the adjoint ray.

    ``series`` is ``Z(v) = v^(h-1) * sum_n dim(n*theta) v^(2n)`` with
    ``h`` the dual Coxeter number.  ``numerator`` lists the coefficients of
    ``N(u)`` in ``Z(v) * (v - 1/v)^(2h-2) = v^-(h-1) * N(v^2)``; its Laurent
    spread is ``v^-(h-1) ... v^(h-1)`` and ``palindromic`` records the
    ``v <-> 1/v`` symmetry.
    """

    algebra: str
    series: QSeries
    numerator: tuple[int, ...]
    palindromic: bool


def hilbert_one_instanton(alg, order: int) -> HilbertSeries:
    """Hilbert series of the dimension generating function on the adjoint ray.

    ``order`` counts the adjoint multiples summed (must reach the dual
    Coxeter number so the numerator window closes); raises
    :class:`NonTerminatingNumerator` if coefficients survive past degree
    ``h - 1`` within the requested order.
    """
    a = _alg(alg)
    if a.name not in _ADJOINT_WEIGHT:
        raise UnsupportedAlgebra(
            "the adjoint-ray dimension formula is available for D6h and A5h")
    h = int(a.h_dual)
    if order < h:
        raise ValueError(f"{a.name}: order must be at least {h}")
    theta = _ADJOINT_WEIGHT[a.name]
    dims = []
    for n in range(order + 1):
        d = weyl_dim_intermediate(a, tuple(n * v for v in theta))
        dims.append(int(d))
    exponent = 2 * h - 2
    coeffs = [0] * (order + 1)
    for n, d in enumerate(dims):
        for j in range(min(exponent, order - n) + 1):
            coeffs[n + j] += d * (-1) ** j * math.comb(exponent, j)
    numerator, tail = coeffs[:h], coeffs[h:]
    if any(tail):
        raise NonTerminatingNumerator(
            f"{a.name}: numerator does not close by degree {h - 1} "
            f"(first residue at degree {h + next(i for i, v in enumerate(tail) if v)})")
    series = QSeries.from_terms(
        {F(h - 1 + 2 * n): F(d) for n, d in enumerate(dims)},
        known_to=F(h + 2 * order))
    return HilbertSeries(
        algebra=a.name,
        series=series,
        numerator=tuple(numerator),
        palindromic=numerator == numerator[::-1],
    )
