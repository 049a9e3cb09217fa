import pytest
from hypothesis import given, strategies as st

from tambarize import build_group, build_monoid, sign_action, trivial_action
from tambarize.errors import MonoidError, SpecError
from tambarize.monoids import GMonoid, is_hom, monoid_homs, submonoid

NAMES = ["trivial", "cyclic:2", "cyclic:3", "nil3", "idem3", "bool", "zmod:4", "zmod:6"]


@pytest.mark.parametrize("name", NAMES)
def test_builtin_monoids_validate(name):
    Q = build_monoid(name)
    Q.validate()
    e = Q.unit
    for a in Q.elements:
        assert Q.mul(e, a) == a
        for b in Q.elements:
            assert Q.mul(a, b) == Q.mul(b, a)


def test_examples():
    C3 = build_monoid("cyclic:3")
    assert C3.power(1, 2) == 2 and C3.power(1, 3) == 0 and C3.prod([1, 1, 2]) == 1
    assert C3.is_group() and not build_monoid("nil3").is_group()
    nil = build_monoid("nil3")
    assert nil.mul(1, 1) == 2 and nil.names == ("1", "a", "0")
    Z4 = build_monoid("zmod:4")
    assert Z4.unit == 1 and Z4.mul(2, 2) == 0


def test_json_and_errors():
    Q = build_monoid({"op": [[0, 1], [1, 0]], "name": "F"})
    assert Q.size == 2 and Q.is_group()
    for bad in ("cyclic:x", "nope", 7, {"op": [[0, 1], [0, 0]]}, {"names": []},
                {"op": [[0, 1], [1, 0]], "size": 3}):
        with pytest.raises((SpecError, MonoidError)):
            build_monoid(bad)


def test_homs():
    C2, C3 = build_monoid("cyclic:2"), build_monoid("cyclic:3")
    assert len(monoid_homs(C2, C3)) == 1
    assert len(monoid_homs(C3, C3)) == 3
    for f in monoid_homs(build_monoid("nil3"), build_monoid("idem3")):
        assert is_hom(f, build_monoid("nil3"), build_monoid("idem3"))
    sub, emb = submonoid(build_monoid("zmod:6"), [1, 5])
    assert sub.size == 2 and sub.is_group()
    with pytest.raises(MonoidError):
        submonoid(build_monoid("zmod:6"), [1, 2])


@given(st.sampled_from(["cyclic:2", "cyclic:4", "symmetric:3", "dihedral:4"]),
       st.sampled_from(["cyclic:2", "cyclic:3", "cyclic:4"]))
def test_sign_action_is_a_g_monoid(gname, qname):
    G, Q = build_group(gname), build_monoid(qname)
    QG = sign_action(G, Q)
    QG.validate()
    assert QG.fixed(G.elements) == [q for q in Q.elements if Q.mul(q, q) == Q.unit]


def test_sign_action_needs_a_group():
    with pytest.raises(MonoidError):
        sign_action(build_group("cyclic:2"), build_monoid("nil3"))
    QG = sign_action(build_group("cyclic:3"), build_monoid("cyclic:3"))
    assert QG.is_trivial_action


def test_bad_actions():
    G, Q = build_group("cyclic:2"), build_monoid("cyclic:3")
    with pytest.raises(MonoidError):
        GMonoid(G, Q, ((0, 1, 2), (0, 1, 1))).validate()
    with pytest.raises(MonoidError):
        GMonoid(G, Q, ((0, 2, 1), (0, 2, 1))).validate()
    assert trivial_action(G, Q).is_trivial_action
