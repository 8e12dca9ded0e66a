"""Root data, intermediate-series invariants, and universal dimension laws."""

from fractions import Fraction as F

import pytest

from interlie.liedata import (
    VOGEL_POINTS,
    UnsupportedAlgebra,
    PoleAtParameter,
    build_intermediate,
    intermediate_names,
    magic_square_dim,
    magic_square_dual_coxeter,
    simple_root_datum,
    strange_delta,
    universal_dim,
    universal_module_dims,
    vogel_adjoint_dim,
    vogel_casimirs,
    vogel_x2_dim,
    vogel_y2_dims,
    weyl_orbit,
)

SIMPLE = {
    # family: (positive roots, dim, dual Coxeter number)
    "A1": (1, 3, 2),
    "A2": (3, 8, 3),
    "A5": (15, 35, 6),
    "C3": (9, 21, 4),
    "D4": (12, 28, 6),
    "D6": (30, 66, 10),
    "E6": (36, 78, 12),
    "E7": (63, 133, 18),
    "E8": (120, 248, 30),
    "F4": (24, 52, 9),
    "G2": (6, 14, 4),
}


@pytest.mark.parametrize("family", sorted(SIMPLE))
def test_simple_catalogue(family):
    npos, dim, hv = SIMPLE[family]
    d = simple_root_datum(family)
    assert len(d.positive_roots) == npos
    assert d.dim == dim
    assert d.dual_coxeter == hv
    assert d.norm(d.highest_root) == 2
    # theta labels read off the affine comarks: <w_i, theta> = comark_i
    for i in range(d.rank):
        e_i = tuple(int(i == j) for j in range(d.rank))
        assert d.ip(e_i, d.highest_root) == d.affine_comarks[i]
    # rho is (1,...,1) and the adjoint Casimir is 2 h_dual
    assert d.casimir(d.highest_root) == 2 * hv
    assert d.index(d.highest_root) == hv


def test_simple_gram_values():
    c3 = simple_root_datum("C3")
    assert c3.gram == (
        (F(1, 2), F(1, 2), F(1, 2)),
        (F(1, 2), F(1), F(1)),
        (F(1, 2), F(1), F(3, 2)),
    )
    g2 = simple_root_datum("G2")
    # short fundamental weight of G2 has norm 2/3
    assert g2.norm((0, 1)) == F(2, 3)
    f4 = simple_root_datum("F4")
    assert f4.norm((0, 0, 0, 1)) == 1  # short node
    assert f4.norm((1, 0, 0, 0)) == 2  # long node (adjoint)


def test_unknown_family_raises():
    with pytest.raises(UnsupportedAlgebra):
        simple_root_datum("B3")
    with pytest.raises(UnsupportedAlgebra):
        build_intermediate("B3h")


@pytest.mark.parametrize(
    "family,labels,dim",
    [
        ("A2", (1, 0), 3),
        ("A2", (1, 1), 8),
        ("A5", (1, 0, 0, 0, 0), 6),
        ("A5", (0, 0, 1, 0, 0), 20),
        ("C3", (1, 0, 0), 6),
        ("C3", (0, 0, 1), 14),
        ("C3", (2, 0, 0), 21),
        ("D6", (1, 0, 0, 0, 0, 0), 12),
        ("D6", (0, 0, 0, 0, 0, 1), 32),
        ("D6", (0, 1, 0, 0, 0, 0), 66),
        ("E6", (1, 0, 0, 0, 0, 0), 27),
        ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
        ("E7", (1, 0, 0, 0, 0, 0, 0), 133),
        ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
        ("F4", (1, 0, 0, 0), 52),
        ("F4", (0, 0, 0, 1), 26),
        ("G2", (0, 1), 7),
        ("G2", (1, 0), 14),
    ],
)
def test_weyl_dimension(family, labels, dim):
    assert simple_root_datum(family).weyl_dim(labels) == dim


@pytest.mark.parametrize(
    "family,labels,size",
    [
        ("A5", (0, 0, 1, 0, 0), 20),
        ("C3", (1, 0, 0), 6),
        ("C3", (0, 0, 1), 8),
        ("D6", (0, 0, 0, 0, 0, 1), 32),
        ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
        ("A1^3", (1, 1, 1), 8),
    ],
)
def test_orbit_sizes(family, labels, size):
    d = simple_root_datum(family)
    orbit = weyl_orbit(d, labels)
    assert len(orbit) == size
    assert len(set(orbit)) == size


# ------------------------------------------------------ intermediate series

INTERMEDIATE = {
    # name: (a, dim, h_dual, rho, strange delta, sorted 1-based fermionic nodes)
    "UA1h": (F(-1), 4, F(3, 2), (F(1, 2),), F(1, 8), [1]),
    "AG1h": (F(-2, 3), 8, F(7, 3), (F(3),), F(1, 18), [1]),
    "AD3h": (F(0), 18, F(4), (F(3), F(1), F(1)), F(1, 2), [1, 2, 3]),
    "C3h": (F(1), 36, F(13, 2), (F(3), F(1), F(3, 2)), F(1, 8), [1, 2, 3]),
    "A5h": (F(2), 56, F(9), (F(2), F(1), F(2), F(1), F(2)), F(0), [1, 3, 5]),
    "D6h": (F(4), 99, F(14), (F(2), F(1), F(2), F(1), F(1), F(2)), F(0), [1, 3, 6]),
    "E7h": (F(8), 190, F(24), (F(1), F(2), F(1), F(1), F(2), F(1), F(2)), F(0), [2, 5, 7]),
}


def test_registry_is_complete():
    assert sorted(intermediate_names()) == sorted(INTERMEDIATE)


@pytest.mark.parametrize("name", sorted(INTERMEDIATE))
def test_intermediate_invariants(name):
    a, dim, hv, rho, delta, odd = INTERMEDIATE[name]
    alg = build_intermediate(name)
    assert alg.a_param == a
    assert alg.dim == dim
    assert alg.h_dual == hv
    assert alg.rho == rho
    assert strange_delta(alg) == delta
    assert sorted(i + 1 for i in alg.s_odd) == odd
    # linear law in the series parameter, and the series dimension formula
    assert alg.h_dual == F(5, 2) * a + 4
    assert universal_dim(a, "intermediate") == dim
    # h_dual is the average of the flanking algebras' values
    cd = simple_root_datum(alg.cd_parent)
    assert 2 * alg.h_dual == alg.sub.dual_coxeter + cd.dual_coxeter
    # R_sub matches the series formula dim = 6a + 8 and splits into +- halves
    assert len(alg.rsub_weights) == 6 * a + 8
    assert 2 * len(alg.half_weights) == len(alg.rsub_weights)
    negs = {tuple(-v for v in w) for w in alg.half_weights}
    assert negs | set(alg.half_weights) == set(alg.rsub_weights)
    # dimension counts sub + R_sub + center
    assert dim == alg.sub.dim + len(alg.rsub_weights) + 1


@pytest.mark.parametrize("name", ["C3h", "A5h", "D6h", "E7h"])
def test_intermediate_comarks(name):
    alg = build_intermediate(name)
    assert alg.affine_comarks[0] == 1
    assert sum(alg.affine_comarks) == alg.h_dual
    # multiplier on each node is the Weyl-vector component
    for i in range(alg.rank):
        assert alg.affine_comarks[i + 1] == alg.rho[i] * alg.sub.affine_comarks[i]
    if name in ("A5h", "D6h", "E7h"):
        # for these members that means: doubled exactly on fermionic nodes
        for i in range(alg.rank):
            factor = 2 if i in alg.s_odd else 1
            assert alg.affine_comarks[i + 1] == factor * alg.sub.affine_comarks[i]


def test_intermediate_comark_table():
    assert build_intermediate("D6h").affine_comarks == tuple(
        F(x) for x in (1, 2, 2, 4, 2, 1, 2)
    )
    assert build_intermediate("C3h").affine_comarks == (F(1), F(3), F(1), F(3, 2))


def test_small_members_fail_strange_formula():
    for name in ("UA1h", "AG1h", "AD3h", "C3h"):
        assert strange_delta(build_intermediate(name)) != 0


def test_central_charge_level1():
    # c = dim * k / (k + h_dual) at k = 1 equals 24(2a+3)/(5(a+4))
    for name in intermediate_names():
        alg = build_intermediate(name)
        a = alg.a_param
        assert alg.central_charge(1) == 24 * (2 * a + 3) / (5 * (a + 4))


def test_level_of_adjoint_and_rsub():
    alg = build_intermediate("D6h")
    assert alg.level(alg.sub.highest_root) == 2
    assert alg.level((0, 0, 0, 0, 0, 1)) == 1
    c3h = build_intermediate("C3h")
    assert c3h.level((0, 0, 1)) == 1
    assert c3h.level((2, 0, 0)) == 2


# ------------------------------------------------------- dimension formulas

CD_DIMS = {F(-4, 3): 3, F(-1): 8, F(-2, 3): 14, F(0): 28, F(1): 52, F(2): 78, F(4): 133, F(8): 248}
SUB_DIMS = {F(-1): 1, F(-2, 3): 3, F(0): 9, F(1): 21, F(2): 35, F(4): 66, F(8): 133}
SEVERI_DIMS = {F(0): 2, F(1): 8, F(2): 16, F(4): 35, F(8): 78}
SEVERI_SEC_DIMS = {F(1): 3, F(2): 8, F(4): 21, F(8): 52}


def test_universal_dimension_lines():
    for a, d in CD_DIMS.items():
        assert universal_dim(a, "CD") == d
    for a, d in SUB_DIMS.items():
        assert universal_dim(a, "sub") == d
    for a, d in SEVERI_DIMS.items():
        assert universal_dim(a, "Severi") == d
    for a, d in SEVERI_SEC_DIMS.items():
        assert universal_dim(a, "Severi_sec") == d
    # character-only members of the intermediate line
    assert universal_dim(F(-4, 3), "intermediate") == 1
    assert universal_dim(6, "intermediate") == 144
    with pytest.raises(PoleAtParameter):
        universal_dim(-4, "CD")
    with pytest.raises(UnsupportedAlgebra):
        universal_dim(1, "nope")


def test_universal_module_dims():
    mods = universal_module_dims(4)
    assert mods["V_sub"] == 32
    assert mods["V2_sub"] == 495
    assert mods["R3"] == 33
    assert universal_module_dims(2)["Severi_module"] == 9
    assert universal_module_dims(1)["Severi_sec_module"] == 5
    # V_sub counts the weights adjoined to the subalgebra
    for name in intermediate_names():
        alg = build_intermediate(name)
        assert len(alg.rsub_weights) == universal_module_dims(alg.a_param)["V_sub"]


def test_magic_square():
    # division algebras R, C, H, S, O carry parameters 1, 2, 4, 6, 8
    table = {
        (1, 4): ("C3", 21, 4),
        (1, 6): ("C3h", 36, F(13, 2)),
        (1, 8): ("F4", 52, 9),
        (2, 2): ("A2xA2", 16, 3),
        (2, 4): ("A5", 35, 6),
        (2, 6): ("A5h", 56, 9),
        (2, 8): ("E6", 78, 12),
        (4, 4): ("D6", 66, 10),
        (4, 6): ("D6h", 99, 14),
        (4, 8): ("E7", 133, 18),
        (6, 6): ("D6hh", 144, 19),
        (6, 8): ("E7h", 190, 24),
        (8, 8): ("E8", 248, 30),
    }
    for (a, b), (_, dim, hv) in table.items():
        assert magic_square_dim(a, b) == dim
        assert magic_square_dim(b, a) == dim
        assert magic_square_dual_coxeter(a, b) == hv
    # the b = 6 column reproduces the intermediate-series laws
    for a in (1, 2, 4, 6, 8):
        assert magic_square_dual_coxeter(a, 6) == F(5, 2) * a + 4
        assert magic_square_dim(a, 6) == universal_dim(a, "intermediate")
    with pytest.raises(PoleAtParameter):
        magic_square_dim(-4, 8)


# ------------------------------------------------------------- Vogel plane


def test_vogel_adjoint_dims():
    expected = {
        "U1_sub": 1, "A1_sub": 3, "C3_sub": 21, "A5_sub": 35,
        "D6_sub": 66, "E7_sub": 133,
        "D6h": 99, "E7h": 190, "X1": 156,
        "A2_cd": 8, "G2_cd": 14, "D4_cd": 28, "F4_cd": 52, "E6_cd": 78,
        "E7_cd": 133, "E8_cd": 248,
    }
    for key, dim in expected.items():
        assert vogel_adjoint_dim(VOGEL_POINTS[key]) == dim
    # the product algebra sits on the indeterminacy locus (beta = 0)
    with pytest.raises(PoleAtParameter):
        vogel_adjoint_dim(VOGEL_POINTS["A1^3_sub"])


def test_vogel_t_is_dual_coxeter():
    for key, hv in [("D6h", 14), ("E7h", 24), ("X1", 20), ("E8_cd", 30)]:
        assert VOGEL_POINTS[key].t == hv


def test_vogel_only_two_intermediates_fit():
    # scanning the intermediate line: only a = 4 and a = 8 admit a point with
    # alpha = -2 whose adjoint dimension matches the series formula
    from fractions import Fraction

    hits = []
    for name in intermediate_names():
        alg = build_intermediate(name)
        a = alg.a_param
        # candidate in the CD/sub interpolation pattern: beta = a + 2, gamma
        # follows from t = h_dual
        beta = a + 2
        gamma = alg.h_dual + 2 - beta
        from interlie.liedata import VogelPoint

        p = VogelPoint(Fraction(-2), Fraction(beta), Fraction(gamma))
        try:
            if vogel_adjoint_dim(p) == alg.dim:
                hits.append(name)
        except PoleAtParameter:
            pass
    assert hits == ["A5h", "D6h", "E7h"] or hits == ["D6h", "E7h"]


def test_vogel_sym2_decomposition():
    # dim Sym^2(g) = dim Y2 + Y2' + Y2'' + 1 and Alt^2 = X2 + g
    for key in ("D6h", "E7h", "E8_cd", "C3_sub", "G2_cd"):
        p = VOGEL_POINTS[key]
        g = vogel_adjoint_dim(p)
        y2 = vogel_y2_dims(p)
        assert sum(y2) + 1 == g * (g + 1) / 2
        assert vogel_x2_dim(p) + g == g * (g - 1) / 2


def test_vogel_casimirs_normalised():
    p = VOGEL_POINTS["D6h"]
    c_y2, c_y2p, c_y2pp, c_x2 = vogel_casimirs(p)
    # adjoint Casimir is 2t; eigenvalues in units of 2 h_dual must match
    assert (c_y2, c_y2p, c_y2pp, c_x2) == (30, 22, 18, 28)


def test_y2pp_vanishes_on_cd_line():
    # D4 is excluded: its coincident (beta, gamma) = (4, 4) makes the primed
    # eigenspace formulas singular
    for key in ("A2_cd", "G2_cd", "F4_cd", "E6_cd", "E7_cd", "E8_cd"):
        assert vogel_y2_dims(VOGEL_POINTS[key])[2] == 0
