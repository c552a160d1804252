import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swmodp.cyclotomic import CycloNum, galois, root_of_unity
from swmodp.errors import IntegralityError
from swmodp.rep_ring import CharacterVector, RepElement, character, characters, from_characters


@st.composite
def reps(draw):
    p = draw(st.sampled_from([2, 3, 5, 7, 11]))
    mult = draw(st.lists(st.integers(-20, 20), min_size=p, max_size=p))
    return RepElement(p, tuple(mult))


def test_character_examples():
    for p in (2, 3, 5):
        triv = RepElement(p, (1,) + (0,) * (p - 1))
        assert all(character(triv, k) == 1 for k in range(p))
    assert character(RepElement(3, (1, 1, 1)), 1) == 0
    assert character(RepElement(3, (0, 1, 0)), 2) == root_of_unity(3, 2)


def test_from_characters_examples():
    assert from_characters(CharacterVector(3, (0, 0, 0))).mult == (0, 0, 0)
    assert from_characters(CharacterVector(3, (3, 0, 0))).mult == (1, 1, 1)
    with pytest.raises(IntegralityError):
        from_characters(CharacterVector(3, (1, 0, 0)))


def test_irrational_character_rejected():
    with pytest.raises(IntegralityError):
        from_characters(CharacterVector(3, (CycloNum.rational(3, 0), root_of_unity(3, 1), CycloNum.rational(3, 0))))


def test_validation():
    with pytest.raises(ValueError):
        RepElement(4, (0, 0, 0, 0))
    with pytest.raises(ValueError):
        RepElement(3, (0, 0))
    with pytest.raises(TypeError):
        RepElement(2, (1, True))
    with pytest.raises(ValueError):
        CharacterVector(3, (0, 0))


def test_dim_is_character_at_identity():
    r = RepElement(5, (3, -1, 0, 2, 7))
    assert r.dim == 11 == character(r, 0)


@settings(max_examples=300, deadline=None)
@given(reps())
def test_roundtrip(r):
    assert from_characters(characters(r)) == r


@settings(max_examples=200, deadline=None)
@given(reps(), st.integers(1, 10))
def test_conjugation_symmetry(r, k):
    p = r.p
    k = k % p or 1
    assert character(r, p - k) == galois(character(r, k), -1)


@settings(max_examples=200, deadline=None)
@given(reps(), st.integers(-12, 12))
def test_weight_shift(r, c):
    """Tensoring with C_c multiplies the character at g^k by zeta^(ck)."""
    s = r.shifted(c)
    assert s.dim == r.dim
    for k in range(r.p):
        assert character(s, k) == character(r, k) * root_of_unity(r.p, c * k)
