import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from gaussmig.gint import (
    UNITS,
    DomainKind,
    GaussianInt as G,
    canonical_associate,
    divides,
    divrem_principal,
    egcd,
    gcd,
    in_domain,
    is_unit,
    lcm,
    lcm_all,
    mod_principal,
    norm,
)

from oracles import brute_mod, domain_points, in_F

coeff = st.integers(-10**6, 10**6)
gints = st.builds(G, coeff, coeff)
nonzero = gints.filter(bool)
small = st.builds(G, st.integers(-12, 12), st.integers(-12, 12))
small_nonzero = small.filter(bool)


# -- text form ----------------------------------------------------------------

@pytest.mark.parametrize("text, expected", [
    ("70-70i", G(70, -70)),
    ("4", G(4, 0)),
    ("-3-13i", G(-3, -13)),
    ("3 - i", G(3, -1)),
    ("97i", G(0, 97)),
    ("-i", G(0, -1)),
    ("i", G(0, 1)),
    (" 1 + 2 i ", G(1, 2)),
    ("+7", G(7, 0)),
    ("0", G(0, 0)),
])
def test_parse(text, expected):
    assert G.parse(text) == expected


@pytest.mark.parametrize("bad", ["", "i2", "1+", "1+2", "2i+1", "1.5", "3+4j", "--1", "1++i"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        G.parse(bad)


@given(gints)
def test_text_round_trip(z):
    assert G.parse(str(z)) == z


def test_str_forms():
    assert [str(G(*t)) for t in [(3, -1), (0, 1), (0, -1), (-1, 97), (4, 0), (0, 0)]] == \
        ["3-i", "i", "-i", "-1+97i", "4", "0"]


def test_rejects_bool_and_float():
    with pytest.raises(TypeError):
        G(True, 0)
    with pytest.raises(TypeError):
        G(1.5, 0)


def test_int_mixing():
    assert G(1, 2) + 3 == G(4, 2)
    assert 3 - G(1, 2) == G(2, -2)
    assert 2 * G(1, 2) == G(2, 4)
    assert G(5, 0) == 5


# -- norm ---------------------------------------------------------------------

def test_norm_examples():
    assert norm(G(7, 4)) == 65
    assert norm(0) == 0
    assert norm(G(70, -70)) == 9800


@given(gints, gints)
def test_norm_multiplicative(a, b):
    assert norm(a * b) == norm(a) * norm(b)


@given(gints)
def test_norm_zero_iff_zero(z):
    assert (norm(z) == 0) == (not z)
    assert norm(z) >= 0


# -- principal division ------------------------------------------------------

@pytest.mark.parametrize("v, z, r", [
    (G(70, -70), G(7, 4), G(1, 2)),
    (G(70, -70), G(-3, -13), G(4, 0)),
    (G(70, -70), G(11, 8), G(3, -1)),
    (G(1), G(2), G(1)),
    (G(1), G(-2), G(-1)),
])
def test_divrem_examples(v, z, r):
    q, rem = divrem_principal(v, z)
    assert rem == r
    assert z * q + rem == v


def test_divrem_reduced_input():
    for v in domain_points(G(5, 4)):
        assert divrem_principal(v, G(5, 4)) == (G(0), v)


def test_mod_examples():
    assert mod_principal(0, G(3, 7)) == 0
    assert mod_principal(G(70, -70), G(-3, -13)) == 4
    # frozen from brute_mod(10i, 5+4i); the other textbook remainder 3-4i is outside F
    assert brute_mod(G(0, 10), G(5, 4)) == G(-1, 1)
    assert mod_principal(G(0, 10), G(5, 4)) == G(-1, 1)


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem_principal(G(1, 1), 0)
    with pytest.raises(ZeroDivisionError):
        in_domain(1, 0)


@given(gints, nonzero)
def test_divrem_invariants(v, z):
    q, r = divrem_principal(v, z)
    assert z * q + r == v
    assert in_domain(r, z, DomainKind.HALF_OPEN)
    assert in_F(r, z)
    assert 2 * norm(r) <= norm(z)


@given(gints, nonzero)
def test_divrem_unique_in_neighbourhood(v, z):
    q, _ = divrem_principal(v, z)
    for da in range(-2, 3):
        for db in range(-2, 3):
            if da or db:
                assert not in_domain(v - z * (q + G(da, db)), z)


@settings(max_examples=60)
@given(small, small_nonzero)
def test_mod_matches_brute_force(v, z):
    assert mod_principal(v, z) == brute_mod(v, z)


# -- domain membership --------------------------------------------------------

def test_in_domain_examples():
    for kind in DomainKind:
        assert in_domain(0, G(4, 1), kind)
    assert in_domain(G(-1, 97), G(71, -167))
    assert not in_domain(G(70, -70), G(71, -167))
    assert in_domain(1, 2)
    assert not in_domain(-1, 2)


@settings(max_examples=60)
@given(small_nonzero)
def test_domain_kinds_nested_and_counted(z):
    opened = set(domain_points(z, "open"))
    half = set(domain_points(z))
    closed = set(domain_points(z, "closed"))
    assert opened <= half <= closed
    assert len(half) == norm(z)
    for v in closed:
        assert in_domain(v, z, DomainKind.OPEN) == (v in opened)
        assert in_domain(v, z, DomainKind.HALF_OPEN) == (v in half)
        assert in_domain(v, z, DomainKind.CLOSED)


@settings(max_examples=40)
@given(small_nonzero, small_nonzero)
def test_containment_small_domain(v, z):
    assume(2 * norm(v) < norm(z))
    for u in domain_points(v):
        assert in_domain(u, z)


@given(gints, nonzero)
def test_containment_open_domain_bounds(u, z):
    if 4 * norm(u) < norm(z):
        assert in_domain(u, z, DomainKind.OPEN)
    if in_domain(u, z, DomainKind.OPEN):
        assert 2 * norm(u) <= norm(z)


@given(gints, nonzero)
def test_unit_stability(v, z):
    r = mod_principal(v, z)
    for u in UNITS:
        assert in_domain(v, z, DomainKind.OPEN) == in_domain(v, u * z, DomainKind.OPEN)
        assert in_domain(v, z, DomainKind.CLOSED) == in_domain(v, u * z, DomainKind.CLOSED)
        if in_domain(r, z, DomainKind.OPEN):
            assert mod_principal(v, u * z) == r


def test_associates_disagree_on_boundary():
    assert mod_principal(1, 2) == 1
    assert mod_principal(1, -2) == -1


@given(nonzero, gints, st.integers(-3, 3), st.integers(-3, 3))
def test_congruent_representatives(z, v, la, lb):
    v1 = mod_principal(v, z)
    assume(in_domain(v1, z, DomainKind.OPEN))
    v2 = v1 + z * G(la, lb)
    assert v2 == v1 or not in_domain(v2, z, DomainKind.CLOSED)


# -- units, associates, gcd, lcm ----------------------------------------------

def test_units():
    assert is_unit(G(0, 1))
    assert not is_unit(0)
    assert not is_unit(G(1, 1))
    assert {u for u in UNITS} == {G(1), G(-1), G(0, 1), G(0, -1)}


def test_canonical_associate_examples():
    assert canonical_associate(G(-3, -13)) == G(3, 13)
    assert canonical_associate(G(0, 1)) == 1
    assert canonical_associate(2) == 2
    with pytest.raises(ValueError):
        canonical_associate(0)


@given(nonzero)
def test_canonical_associate_properties(z):
    c = canonical_associate(z)
    assert canonical_associate(c) == c
    assert norm(c) == norm(z)
    hits = [u * z for u in UNITS if (u * z).re > 0 and (u * z).im >= 0]
    assert hits == [c]


def test_gcd_examples():
    assert gcd(G(7, 4), G(-3, -13)) == 1
    assert gcd(G(-3, -13), 0) == G(3, 13)
    assert gcd(G(-3, -13), G(-3, -13)) == G(3, 13)
    with pytest.raises(ValueError):
        gcd(0, 0)


@given(gints, gints)
def test_egcd_bezout(a, b):
    assume(a or b)
    g, u, v = egcd(a, b)
    assert u * a + v * b == g
    assert divides(g, a) and divides(g, b)
    assert g == canonical_associate(g)


@given(st.builds(G, st.integers(-300, 300), st.integers(-300, 300)).filter(bool),
       st.builds(G, st.integers(-300, 300), st.integers(-300, 300)),
       st.builds(G, st.integers(-300, 300), st.integers(-300, 300)))
def test_gcd_absorbs_common_divisors(d, x, y):
    assume(x or y)
    assert divides(d, gcd(d * x, d * y))


def test_lcm_examples():
    got = lcm(G(-3, -13), G(11, 8))
    assert got == canonical_associate(G(71, -167)) == G(167, 71)
    assert norm(got) == 32930
    assert lcm(G(-3, -13), 1) == G(3, 13)
    assert lcm(G(-3, -13), G(-3, -13)) == G(3, 13)
    with pytest.raises(ValueError):
        lcm(0, G(1, 1))


@given(nonzero, nonzero, st.builds(G, st.integers(-20, 20), st.integers(-20, 20)).filter(bool))
def test_lcm_properties(a, b, k):
    m = lcm(a, b)
    assert divides(a, m) and divides(b, m)
    # any common multiple, e.g. a*b*k, is a multiple of the lcm
    assert divides(m, a * b * k)
    assert norm(m) * norm(gcd(a, b)) == norm(a) * norm(b)


def test_lcm_all():
    assert lcm_all([G(7, 4)]) == canonical_associate(G(7, 4))
    assert norm(lcm_all([G(7, 4), G(-3, -13), G(11, 8)])) == 65 * 178 * 185
    with pytest.raises(ValueError):
        lcm_all([])
