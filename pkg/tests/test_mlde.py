"""Tests for the modular differential operator layer.

Oracles: Ramanujan's closed-form Serre derivatives of the Eisenstein ring,
lattice theta quotients and the cube root of j built directly from exact
q-series, forward-substitution character expansions, and level-count
generating functions expanded by convolution.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interlie import intrep, liedata, mlde
from interlie.exactq import (
    QSeries,
    QuasiModularForm,
    SeriesError,
    dedekind_eta,
    eisenstein,
    rogers_ramanujan,
)
from interlie.liedata import PoleAtParameter, UnsupportedAlgebra
from interlie.intrep import UnsupportedWeight

F = Fraction


def horner(poly, x):
    total = F(0)
    for c in reversed(poly):
        total = total * x + c
    return total


# --------------------------------------------------------------------------
# Serre derivative
# --------------------------------------------------------------------------
class TestSerreDerivative:
    def test_ramanujan_e4(self):
        e4 = QuasiModularForm.generator(4)
        e6 = QuasiModularForm.generator(6)
        assert mlde.serre_derivative(e4, 4) == e6.scale(F(-1, 3))

    def test_ramanujan_e6(self):
        e4 = QuasiModularForm.generator(4)
        e6 = QuasiModularForm.generator(6)
        assert mlde.serre_derivative(e6, 6) == (e4 * e4).scale(F(-1, 2))

    def test_ramanujan_on_series(self):
        got = mlde.serre_derivative(eisenstein(4, 12), 4)
        assert got.agrees_with(eisenstein(6, 12).scale(F(-1, 3)))
        got6 = mlde.serre_derivative(eisenstein(6, 12), 6)
        e4 = eisenstein(4, 12)
        assert got6.agrees_with((e4 * e4).scale(F(-1, 2)))

    def test_weight_mismatch_rejected(self):
        with pytest.raises(SeriesError):
            mlde.serre_derivative(QuasiModularForm.generator(4), 6)

    def test_weight_zero_is_plain_q_derivative(self):
        mono = QSeries.from_terms({F(5, 7): 3}, F(5, 7) + 4)
        got = mlde.serre_derivative(mono, 0)
        assert got.coefficient(F(5, 7)) == F(15, 7)

    def test_eta_is_weight_half_eigenform(self):
        # D_{1/2} eta = q eta' - (1/24) E2 eta = 0 termwise.
        eta = dedekind_eta(10)
        assert mlde.serre_derivative(eta, F(1, 2)).is_zero

    @settings(deadline=None, max_examples=60)
    @given(
        start=st.integers(-2, 2),
        cf=st.lists(st.integers(-4, 4), min_size=1, max_size=4),
        cg=st.lists(st.integers(-4, 4), min_size=1, max_size=4),
        j=st.sampled_from([0, 2, 4]),
        k=st.sampled_from([0, 2, 4]),
    )
    def test_leibniz_rule(self, start, cf, cg, j, k):
        f = QSeries.from_terms(
            {start + i: c for i, c in enumerate(cf)}, start + len(cf))
        g = QSeries.from_terms({i: c for i, c in enumerate(cg)}, len(cg))
        lhs = mlde.serre_derivative(f * g, j + k)
        rhs = mlde.serre_derivative(f, j) * g + f * mlde.serre_derivative(g, k)
        assert lhs.agrees_with(rhs)


# --------------------------------------------------------------------------
# operator families
# --------------------------------------------------------------------------
class TestFamilies:
    def test_level1_coefficients_at_4(self):
        fam = mlde.build_level1_mlde(4)
        assert fam.order == 4
        assert fam.coeffs[2].coeffs == {(0, 1, 0): F(-7592, 57600)}
        assert fam.coeffs[1].coeffs == {(0, 0, 1): F(1759, 21600)}
        assert fam.coeffs[0].coeffs == {(0, 2, 0): F(-48279, 2560000)}
        assert fam.coeffs[3].coeffs == {}

    def test_level1_pole(self):
        with pytest.raises(PoleAtParameter):
            mlde.build_level1_mlde(-4)

    def test_parameter_lookup(self):
        assert mlde.level1_parameter("D6h") == 4
        assert mlde.level1_parameter("IM") == F(-4, 3)
        assert mlde.level1_parameter("D6hh") == 6
        with pytest.raises(UnsupportedAlgebra):
            mlde.level1_parameter("X1")
        with pytest.raises(UnsupportedAlgebra):
            mlde.level1_parameter("B17")

    def test_coefficient_weights_validated(self):
        e6 = QuasiModularForm.generator(6)
        with pytest.raises(SeriesError):
            mlde.MLDEFamily(2, (e6, QuasiModularForm.zero(2)))
        with pytest.raises(SeriesError):
            mlde.MLDEFamily(2, (QuasiModularForm.zero(4),))


EXPONENTS = {
    # algebra: sorted indicial roots -c/24 + h of its level-1 system
    "IM": (F(-1, 40), F(1, 40), F(9, 40), F(31, 40)),
    "UA1h": (F(-1, 15), F(1, 15), F(4, 15), F(11, 15)),
    "AG1h": (F(-1, 10), F(1, 10), F(3, 10), F(7, 10)),
    "AD3h": (F(-3, 20), F(3, 20), F(7, 20), F(13, 20)),
    "C3h": (F(-1, 5), F(1, 5), F(2, 5), F(3, 5)),
    "A5h": (F(-7, 30), F(7, 30), F(13, 30), F(17, 30)),
    "D6h": (F(-11, 40), F(11, 40), F(19, 40), F(21, 40)),
    "D6hh": (F(-3, 10), F(3, 10), F(1, 2), F(1, 2)),
    "E7h": (F(-19, 60), F(19, 60), F(29, 60), F(31, 60)),
}


class TestIndicial:
    @pytest.mark.parametrize("name", sorted(EXPONENTS))
    def test_exponents(self, name):
        data = mlde.indicial_data(mlde.level1_family(name))
        assert data.exponents == EXPONENTS[name]
        assert data.index_l == 0

    @settings(deadline=None, max_examples=80)
    @given(a=st.fractions(min_value=-10, max_value=10, max_denominator=8)
           .filter(lambda x: x != -4))
    def test_closed_form_roots_any_parameter(self, a):
        poly = list(mlde.indicial_polynomial(mlde.build_level1_mlde(a)))
        c = 24 * (2 * a + 3) / (5 * (a + 4))
        weights = (F(0), 2 * (2 * a + 3) / (5 * (a + 4)), (a + 2) / (a + 4), F(4, 5))
        for h in weights:
            assert horner(poly, -c / 24 + h) == 0
        # monic, and the exponents always sum to 1 (vanishing index)
        assert poly[4] == 1 and poly[3] == -1

    @settings(deadline=None, max_examples=80)
    @given(c=st.fractions(min_value=-30, max_value=30, max_denominator=12))
    def test_order2_gap_relation(self, c):
        poly = list(mlde.indicial_polynomial(mlde.build_order2_mlde(c)))
        assert horner(poly, -c / 24) == 0
        assert horner(poly, -c / 24 + F(1, 6) + c / 12) == 0

    def test_irrational_roots_rejected(self):
        fam = mlde.MLDEFamily(
            2, (QuasiModularForm.generator(4), QuasiModularForm.zero(2)))
        with pytest.raises(ArithmeticError):
            mlde.indicial_data(fam)

    def test_indicial_data_validates_index(self):
        with pytest.raises(ValueError):
            mlde.IndicialData((F(0), F(1, 2)), F(1))


# --------------------------------------------------------------------------
# Frobenius solutions
# --------------------------------------------------------------------------
# (algebra, leading exponent, leading degeneracy, coefficient window)
CHARACTER_WINDOWS = [
    ("D6h", F(-11, 40), 1, [1, 99, 1122, 7425, 37191]),
    ("D6h", F(11, 40), 12, [12, 264, 2024, 11484, 51348]),
    ("D6h", F(19, 40), 44, [44, 660, 4764, 25388, 110220]),
    ("D6h", F(21, 40), 33, [33, 451, 3234, 16929, 73062]),
    ("A5h", F(-7, 30), 1, [1, 56, 476, 2632, 11270]),
    ("A5h", F(7, 30), 6, [6, 105, 672, 3297, 12978]),
    ("A5h", F(13, 30), 21, [21, 252, 1533, 7098, 27210]),
    ("A5h", F(17, 30), 21, [21, 196, 1196, 5264, 19957]),
    ("C3h", F(-1, 5), 1, [1, 36, 240, 1144]),
    ("C3h", F(1, 5), 6, [6, 84, 461, 1980]),
    ("C3h", F(2, 5), 20, [20, 195, 1020, 4170]),
    ("C3h", F(3, 5), 15, [15, 100, 540, 2040]),
    ("AD3h", F(-3, 20), 1, [1, 18, 81, 306, 909]),
    ("AD3h", F(3, 20), 2, [2, 18, 78, 262, 774]),
    ("AD3h", F(7, 20), 6, [6, 40, 162, 534, 1532]),
    ("AD3h", F(13, 20), 9, [9, 34, 153, 450, 1284]),
    ("AG1h", F(-1, 10), 1, [1, 8, 23, 68, 154]),
    ("AG1h", F(1, 10), 2, [2, 9, 32, 76, 186]),
    ("AG1h", F(3, 10), 5, [5, 20, 60, 150, 350]),
    ("AG1h", F(7, 10), 5, [5, 10, 35, 80, 185]),
    ("UA1h", F(-1, 15), 1, [1, 4, 8, 20, 37]),
    ("UA1h", F(1, 15), 1, [1, 2, 7, 12, 26]),
    ("UA1h", F(4, 15), 2, [2, 5, 12, 23, 46]),
    ("UA1h", F(11, 15), 3, [3, 4, 10, 20, 38]),
]


def algebra_dim(name):
    try:
        return liedata.build_intermediate(name).dim
    except UnsupportedAlgebra:
        return liedata.CHARACTER_ONLY[name]["dim"]


class TestFrobenius:
    @pytest.mark.parametrize("name,root,lead,window", CHARACTER_WINDOWS,
                             ids=lambda v: str(v))
    def test_character_windows(self, name, root, lead, window):
        sol = mlde.frobenius_solve(mlde.level1_family(name), root, 8)
        coeffs = sol.scale(lead).integer_coefficients(9)
        assert coeffs[: len(window)] == window
        assert all(c >= 0 for c in coeffs)

    @pytest.mark.parametrize("name", sorted(EXPONENTS))
    def test_vacuum_counts_adjoint(self, name):
        fam = mlde.level1_family(name)
        vac = EXPONENTS[name][0]
        sol = mlde.frobenius_solve(fam, vac, 2)
        assert sol.coefficient(vac) == 1
        assert sol.coefficient(vac + 1) == algebra_dim(name)

    @pytest.mark.parametrize("name", sorted(EXPONENTS))
    def test_solutions_annihilated(self, name):
        fam = mlde.level1_family(name)
        for root in set(EXPONENTS[name]):
            sol = mlde.frobenius_solve(fam, root, 8)
            assert fam.apply(sol).is_zero

    def test_effective_minimal_window_integral(self):
        fam = mlde.level1_family("IM")
        for root in set(EXPONENTS["IM"]):
            coeffs = mlde.frobenius_solve(fam, root, 8).integer_coefficients(9)
            assert all(c >= 0 for c in coeffs)

    def test_top_pair_branches_to_e8(self):
        # chi(E8,1) = E4/eta^8 refines as chi_0 phi_0 + chi_{4/5} phi_1.
        fam = mlde.level1_family("E7h")
        chi0 = mlde.frobenius_solve(fam, F(-19, 60), 7)
        chi45 = mlde.frobenius_solve(fam, F(29, 60), 7).scale(57)
        lhs = rogers_ramanujan(0, 9) * chi0 + rogers_ramanujan(1, 9) * chi45
        rhs = eisenstein(4, 9) / dedekind_eta(10) ** 8
        assert lhs.agrees_with(rhs)
        assert lhs.coefficient(F(-1, 3) + 1) == 248
        assert lhs.coefficient(F(-1, 3) + 2) == 4124

    def test_double_root_power_solution(self):
        fam = mlde.build_level1_mlde(6)
        data = mlde.indicial_data(fam)
        assert data.exponents == (F(-3, 10), F(3, 10), F(1, 2), F(1, 2))
        sol = mlde.frobenius_solve(fam, F(1, 2), 6)
        assert fam.apply(sol).is_zero

    def test_not_a_root_rejected(self):
        with pytest.raises(mlde.NotAnIndicialRoot):
            mlde.frobenius_solve(mlde.level1_family("D6h"), F(1, 3), 3)

    def test_resonance_detected(self):
        fam = mlde.build_order2_mlde(10)  # roots -5/12 and 7/12
        with pytest.raises(mlde.ResonantExponents):
            mlde.frobenius_solve(fam, F(-5, 12), 4)
        top = mlde.frobenius_solve(fam, F(7, 12), 4)
        assert fam.apply(top).is_zero


class TestOrder2:
    def test_cube_root_of_j(self):
        fam = mlde.build_order2_mlde(8)
        sol = mlde.frobenius_solve(fam, F(-1, 3), 8)
        assert sol.agrees_with(eisenstein(4, 9) / dedekind_eta(10) ** 8)

    def test_su2_theta_quotients(self):
        fam = mlde.build_order2_mlde(1)
        eta = dedekind_eta(12)
        theta_int = QSeries.from_terms({0: 1, 1: 2, 4: 2, 9: 2}, 12)
        theta_half = QSeries.from_terms({F(1, 4): 2, F(9, 4): 2, F(25, 4): 2}, 12)
        vac = mlde.frobenius_solve(fam, F(-1, 24), 8)
        assert vac.agrees_with(theta_int / eta)
        spin = mlde.frobenius_solve(fam, F(5, 24), 8).scale(2)
        assert spin.agrees_with(theta_half / eta)


# --------------------------------------------------------------------------
# Wronskian index and the rationality scan
# --------------------------------------------------------------------------
class TestWronskian:
    def test_level1_systems_have_index_zero(self):
        for exps in EXPONENTS.values():
            assert mlde.wronskian_index(4, exps) == 0

    def test_rank13_level2_index(self):
        spec = intrep.conformal_weights("D6h", 2)
        exps = [h - spec.central_charge / 24
                for h, deg in spec.weights for _ in range(deg)]
        assert len(exps) == 13
        assert mlde.wronskian_index(13, exps) == 36

    def test_length_checked(self):
        with pytest.raises(ValueError):
            mlde.wronskian_index(3, (F(0), F(1, 2)))


SCAN_TABLES = {
    # algebra: (char counts, indices) for k = 1, 2, ...
    "D6": ([3, 10, 22, 49, 91, 168],
           [0, 15, 135, 870, 3390, 12420]),
    "D6h": ([4, 13, 32, 71, 140, 259],
            [0, 36, 340, F(12101, 6), F(162856, 19), F(123291, 4)]),
    "A5": ([4, 13, 32, 70], [0, 36, 340, 1955]),
    "A5h": ([4, 13, 32, 70], [0, 36, F(679, 2), F(25385, 13)]),
}


def poly_times(p, q, n):
    out = [0] * (n + 1)
    for i, a in enumerate(p[: n + 1]):
        for j, b in enumerate(q[: n + 1 - i]):
            out[i + j] += a * b
    return out


def geometric(step, n):
    # coefficients of 1/(1 - x^step) through degree n
    return [1 if i % step == 0 else 0 for i in range(n + 1)]


class TestRationalityScan:
    @pytest.mark.parametrize("name", sorted(SCAN_TABLES))
    def test_tables(self, name):
        counts, indices = SCAN_TABLES[name]
        rows = mlde.rationality_scan(name, len(counts))
        assert [r.level for r in rows] == list(range(1, len(counts) + 1))
        assert [r.char_count for r in rows] == counts
        assert [r.index_l for r in rows] == indices
        for row in rows:
            expected = ("admissible"
                        if row.index_l.denominator == 1 and row.index_l >= 0
                        else "non-rational")
            assert row.verdict == expected

    def test_fractional_indices_flagged(self):
        verdicts = [r.verdict for r in mlde.rationality_scan("D6h", 6)]
        assert verdicts == ["admissible"] * 3 + ["non-rational"] * 3
        verdicts = [r.verdict for r in mlde.rationality_scan("A5h", 4)]
        assert verdicts == ["admissible"] * 2 + ["non-rational"] * 2
        for name in ("D6", "A5"):
            assert all(r.verdict == "admissible"
                       for r in mlde.rationality_scan(name, 4))

    def test_counts_match_generating_functions(self):
        n = 6
        series = [1] + [0] * n
        for _ in range(4):
            series = poly_times(series, geometric(1, n), n)
        for _ in range(3):
            series = poly_times(series, geometric(2, n), n)
        # series = 1/((1-x)^4 (1-x^2)^3)
        assert series[1:] == [r.char_count for r in mlde.rationality_scan("D6h", n)]

        n = 4
        series = [1, 0, 1] + [0] * (n - 2)  # (1 + x^2)
        for _ in range(6):
            series = poly_times(series, geometric(1, n), n)
        alt = [(-1) ** i * (i + 1) for i in range(n + 1)]  # 1/(1+x)^2
        series = poly_times(series, alt, n)
        assert series[1:] == [r.char_count for r in mlde.rationality_scan("A5h", n)]

    def test_one_dimensional_tower_stays_admissible(self):
        for row in mlde.rationality_scan("IM", 4):
            assert row.verdict == "admissible"
            assert row.index_l.denominator == 1 and row.index_l >= 0
        assert mlde.rationality_scan("IM", 1)[0].char_count == 4

    def test_depth_limits_propagate(self):
        assert len(mlde.rationality_scan("C3h", 1)) == 1
        with pytest.raises(UnsupportedWeight):
            mlde.rationality_scan("C3h", 2)

    def test_unknown_algebra(self):
        with pytest.raises(UnsupportedAlgebra):
            mlde.rationality_scan("Z9", 2)
