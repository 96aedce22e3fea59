import pytest

from coda.algebra import ProbeSet
from coda.lang import parse
from coda.spacelab import (
    CarrierOverflow,
    Endo,
    NotAHomomorphism,
    TooManyEndos,
    carrier_from_function,
    check_carrier_monoid,
    classify,
    compose,
    constant_endo,
    enumerate_endos,
    extract_carrier,
    field_check,
    identity_endo,
    is_cancellative,
    is_commutative,
    is_homomorphism,
    is_idempotent,
    is_subspace,
    iso_check,
    oplus,
    quotient_of_hom,
    render_report,
    render_table,
    saturation_carrier,
    verify_semialgebra,
    zn_carrier,
    zero_endo,
)
from coda.terms import COLON


def bool_carrier():
    return extract_carrier(parse("bool"), ProbeSet(((), (COLON,))), cap=4)


def test_bool_carrier():
    c = bool_carrier()
    assert c.size == 2
    assert c.closed
    assert c.label(c.neutral) == "()"
    assert check_carrier_monoid(c)
    # the sum is logical or
    assert c.add == ((0, 1), (1, 1))


def test_zn_carrier_monoid():
    for n in (2, 3, 4, 6):
        c = zn_carrier(n)
        assert check_carrier_monoid(c)
        assert is_commutative(c)
        assert is_cancellative(c)


def test_saturation_carrier():
    c = saturation_carrier(3)
    assert c.add[2][2] == 2
    assert not is_cancellative(c)


def test_open_carrier_from_function():
    c = carrier_from_function(range(4), lambda x, y: x + y, 0)
    assert not c.closed
    assert c.add[3][3] is None


def test_endo_algebra():
    c = zn_carrier(4)
    f = Endo((0, 2, 0, 2))
    g = identity_endo(c)
    assert compose(f, g) == f
    assert compose(g, f) == f
    assert oplus(f, zero_endo(c), c) == f
    assert is_homomorphism(f, c)
    assert not is_homomorphism(Endo((1, 1, 1, 1)), c)
    assert is_idempotent(constant_endo(c, 2))


def test_enumerate_endos_and_cap():
    c = zn_carrier(3)
    endos = enumerate_endos(c)
    assert len(endos) == 27
    with pytest.raises(TooManyEndos):
        enumerate_endos(zn_carrier(8))


def test_classify_bool():
    c = bool_carrier()
    rep = classify(c, enumerate_endos(c))
    assert len(rep.endos) == 4
    assert len(rep.units()) == 2
    assert len(rep.constants()) == 2
    assert rep.semilattice and rep.algebraic
    assert not rep.neutral_space
    assert rep.field == (True, True)


def test_field_check_verdicts():
    fields = [bool_carrier(), zn_carrier(2), zn_carrier(3), zn_carrier(5)]
    non_fields = [zn_carrier(4), zn_carrier(6), saturation_carrier(3)]
    for c in fields:
        assert field_check(c) == (True, True)
    for c in non_fields:
        sub, hom = field_check(c)
        assert sub == hom == False


def test_subspace_example():
    c = zn_carrier(4)
    assert is_subspace(Endo((0, 1, 0, 1)), c)  # reduction mod 2
    assert not is_subspace(Endo((0, 2, 0, 2)), c)  # a hom, but not idempotent-compatible
    assert is_subspace(identity_endo(c), c)


def test_quotient_of_hom():
    c = zn_carrier(4)
    doubling = Endo((0, 2, 0, 2))
    q = quotient_of_hom(doubling, c)
    assert q.map == (0, 1, 0, 1)
    with pytest.raises(NotAHomomorphism):
        quotient_of_hom(Endo((1, 1, 1, 1)), c)


def test_verify_semialgebra():
    c = zn_carrier(5)
    mapping = {k: Endo(tuple((k * i) % 5 for i in range(5))) for k in range(5)}
    units = [e for e in enumerate_endos(c)
             if is_homomorphism(e, c) and len(set(e.map)) == 5]
    assert verify_semialgebra(c, mapping, central=True, units=units).holds
    bad = dict(mapping)
    bad[7] = mapping[2]
    assert verify_semialgebra(c, bad).refuted


def test_iso_check():
    b = bool_carrier()
    z2 = zn_carrier(2)
    res = iso_check(b, z2)
    assert res is not None and not res.monoid  # or is not cancellative, Z2 is
    assert sorted(res.bijection) == [0, 1]
    assert iso_check(z2, zn_carrier(3)) is None
    same = iso_check(zn_carrier(3), zn_carrier(3))
    assert same.monoid
    with pytest.raises(CarrierOverflow):
        iso_check(zn_carrier(9), zn_carrier(9))


def test_render_table_and_report():
    c = bool_carrier()
    rep = classify(c, enumerate_endos(c))
    txt = render_table(rep, "product")
    assert "f.g" in txt and txt.count("\n") == 5
    tsv = render_table(rep, "sum", fmt="tsv")
    assert "\t" in tsv
    reordered = render_table(rep, "product", order=[1, 0, 2, 3])
    assert reordered != txt
    full = render_report(rep)
    assert "endomorphisms: 4" in full
    assert "field" in full
