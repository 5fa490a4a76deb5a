"""Field tower arithmetic: construction, axioms, Frobenius, norms, subfields,
enumeration order, and agreement of the two backends."""

import random

import pytest

from scatlin import make_field, parse_field_spec
from scatlin.errors import (BadSubfield, CtxMismatch, DivisionByZero, NotPrime,
                            TooLarge)
from scatlin.gf import Field


def test_make_field_sizes(f3, f5, f4):
    assert f3.order == 729 and f3.q == 3
    assert f5.order == 15625 and f5.q == 5
    assert f4.order == 4096 and f4.q == 4


def test_make_field_guards():
    with pytest.raises(NotPrime):
        make_field(9, 1)
    with pytest.raises(NotPrime):
        make_field(1, 1)
    with pytest.raises(TooLarge):
        make_field(2, 11)  # 6s = 66 > 64


def test_construction_is_deterministic(f3):
    fresh = Field(3, 1)  # bypass the make_field cache
    assert fresh.modulus == f3.modulus
    assert fresh.gen_coeffs == f3.gen_coeffs
    assert fresh.summary()["fingerprint"] == f3.summary()["fingerprint"]


def test_field_axioms_sampled(f3):
    rng = random.Random(11)
    one, zero = f3.one(), f3.zero()
    for _ in range(100):
        x = f3.elem_at(rng.randrange(730))
        y = f3.elem_at(rng.randrange(730))
        z = f3.elem_at(rng.randrange(730))
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x * (y + z) == x * y + x * z
        assert x + zero == x and x * one == x
        if not x.is_zero():
            assert x * x.inv() == one
    g = f3.gen()
    assert g ** f3.N == one
    assert g ** (f3.N + 5) == g ** 5  # exponent reduced mod group order


def test_division_by_zero(f3):
    with pytest.raises(DivisionByZero):
        f3.zero().inv()
    with pytest.raises(DivisionByZero):
        f3.one() / f3.zero()
    assert (f3.zero() ** 0) == f3.one()
    assert (f3.zero() ** 7).is_zero()


def test_ctx_mismatch(f3, f5):
    with pytest.raises(CtxMismatch):
        f3.one() + f5.one()


def test_h_squared_is_minus_one_at_q5(f5):
    h = f5.from_int(2)
    assert h * h == -f5.one()


def test_frobenius_basics(f3):
    rng = random.Random(3)
    for _ in range(50):
        x = f3.elem_at(rng.randrange(730))
        assert x.frob(0) == x
        assert x.frob(3).frob(3) == x
        assert x.frob(1) == x ** 3


def test_frobenius_is_automorphism(f3, f9):
    for F in (f3, f9):
        rng = random.Random(17)
        for _ in range(60):
            x = F.elem_at(rng.randrange(F.order + 1))
            y = F.elem_at(rng.randrange(F.order + 1))
            for i in (1, 2, 5):
                assert (x + y).frob(i) == x.frob(i) + y.frob(i)
                assert (x * y).frob(i) == x.frob(i) * y.frob(i)


def test_valid_h_norm_condition(f3):
    # the smallest admissible h comes straight from the exponent congruence
    h = f3.from_exp((f3.q**3 - 1) // 2)
    assert h.frob(3) * h == -f3.one()


def test_x_to_q6_fixes_everything(f3):
    for x in f3.elements():
        assert x.frob(6) == x  # frob(6) == frob(0)
        assert x ** (3**6) == x


def test_norm_trace(f3):
    rng = random.Random(5)
    one = f3.one()
    assert f3.norm(one, 1) == one
    for _ in range(40):
        x = f3.elem_at(rng.randrange(730))
        y = f3.elem_at(rng.randrange(730))
        assert f3.norm(x, 3) == x ** (f3.q**3 + 1)
        for m in (1, 2, 3):
            assert f3.in_subfield(f3.norm(x, m), m)
            assert f3.in_subfield(f3.trace(x, m), m)
            assert f3.norm(x, m) * f3.norm(y, m) == f3.norm(x * y, m)
            assert f3.trace(x, m) + f3.trace(y, m) == f3.trace(x + y, m)
    with pytest.raises(BadSubfield):
        f3.norm(one, 4)


def test_in_subfield_via_trinomial_h(f3):
    # h^(q+1) = -1 forces h in F_{q^2}
    for h in f3.elements():
        if h.is_zero():
            continue
        if h ** (f3.q + 1) == -f3.one():
            assert f3.in_subfield(h, 2)


def test_enumeration(f3, f5):
    els = list(f3.elements())
    assert len(els) == 729
    assert els[0].is_zero() and els[1] == f3.one() and els[2] == f3.gen()
    assert len({f3.packed(e) for e in els}) == 729
    assert len(list(f3.subfield_elements(1))) == 3
    assert all(f3.in_subfield(e, 1) for e in f3.subfield_elements(1))
    assert len(list(f3.subfield_elements(2))) == 9
    big = {f5.packed(e) for e in f5.elements()}
    assert len(big) == 15625


def test_enum_index_roundtrip(f3):
    # valid indices are 0 (zero element) through order - 1 (g^(N-1))
    for i in (0, 1, 2, 77, 728):
        assert f3.enum_index(f3.elem_at(i)) == i


def test_element_parsing(f3):
    assert f3.element("0").is_zero()
    assert f3.element("g^5") == f3.gen() ** 5
    assert f3.element(2) == f3.one() + f3.one()
    assert f3.element("2") == f3.from_int(2)
    assert f3.element("poly:0,1") == f3.gen()
    assert parse_field_spec("5^1") == (5, 1)
    assert parse_field_spec("13") == (13, 1)


def test_zech_poly_mode_agreement_q2_full():
    fz = make_field(2, 1)
    fy = make_field(2, 1, mode="poly")
    assert fz.modulus == fy.modulus and fz.gen_coeffs == fy.gen_coeffs
    els_z = list(fz.elements())
    els_y = list(fy.elements())
    assert [fz.packed(a) for a in els_z] == [fy.packed(a) for a in els_y]
    for i, (az, ay) in enumerate(zip(els_z, els_y)):
        for bz, by in zip(els_z, els_y):
            assert fz.packed(az + bz) == fy.packed(ay + by)
            assert fz.packed(az * bz) == fy.packed(ay * by)
        assert fz.packed(az.frob(1)) == fy.packed(ay.frob(1))
        if not az.is_zero():
            assert fz.packed(az.inv()) == fy.packed(ay.inv())


def test_zech_poly_mode_agreement_q3(f3):
    fy = make_field(3, 1, mode="poly")
    # unary operations over the full enumeration
    for i in range(730):
        az, ay = f3.elem_at(i), fy.elem_at(i)
        assert f3.packed(az) == fy.packed(ay)
        assert f3.packed(-az) == fy.packed(-ay)
        for j in (1, 2, 3):
            assert f3.packed(az.frob(j)) == fy.packed(ay.frob(j))
    # binary operations on a seeded grid
    rng = random.Random(23)
    for _ in range(5000):
        i, j = rng.randrange(730), rng.randrange(730)
        az, bz = f3.elem_at(i), f3.elem_at(j)
        ay, by = fy.elem_at(i), fy.elem_at(j)
        assert f3.packed(az + bz) == fy.packed(ay + by)
        assert f3.packed(az * bz) == fy.packed(ay * by)
        if not bz.is_zero():
            assert f3.packed(az / bz) == fy.packed(ay / by)


def test_p_power_automorphisms(f9):
    # x -> x^(p^e): 12 distinct automorphisms at q = 9, frob(i) = p_power(2i)
    rng = random.Random(31)
    for _ in range(30):
        x = f9.elem_at(rng.randrange(f9.order + 1))
        assert f9.p_power(x, 2) == x.frob(1)
        assert f9.p_power(x, f9.deg) == x


def test_summary_schema(f3):
    info = f3.summary()
    for key in ("p", "s", "q", "order", "modulus", "generator", "fingerprint"):
        assert key in info
