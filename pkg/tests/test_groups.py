"""Presentation DSL, free words, abelianization."""

import pytest
from hypothesis import given, settings, strategies as st

from alexarr.groups import (
    PresentationError,
    Word,
    abelianize,
    free_reduce,
    linking_vector,
    parse_presentation,
    presentation,
    serialize_presentation,
)

letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=16)


def test_parse_commutator_presentation():
    p = parse_presentation("gens: a b\nrel: a b a^-1 b^-1")
    assert p.gens == ("a", "b")
    assert p.relators == (Word([1, 2, -1, -2]),)
    assert p.meridians == (True, True)


def test_parse_free_group():
    p = parse_presentation("gens: a\n")
    assert p.num_gens == 1 and p.num_relators == 0


def test_parse_trefoil_style():
    p = parse_presentation("gens: a b\nrel: a b a b^-1 a^-1 b^-1\n")
    assert p.relators[0] == Word([1, 2, 1, -2, -1, -2])


def test_parse_exponents_and_comments():
    p = parse_presentation("# header\ngens: a b  # trailing\nrel: a^3 b^-2\n")
    assert p.relators[0] == Word([1, 1, 1, -2, -2])


def test_parse_meridians_line():
    p = parse_presentation("gens: a b\nmeridians: b\n")
    assert p.meridians == (False, True)


@pytest.mark.parametrize(
    "text",
    [
        "rel: a\n",                      # rel before gens
        "gens: a a\n",                   # duplicate generator
        "gens:\n",                       # empty generator list
        "gens: a\nrel: b\n",             # unknown generator
        "gens: a\nrel: a^x\n",           # malformed exponent
        "gens: a\nmeridians: b\n",       # unknown meridian
        "gens: a\nwhat: a\n",            # unknown key
        "just text\n",                   # no colon
        "",                              # no gens at all
    ],
)
def test_parse_errors(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_free_reduce_examples():
    assert free_reduce([1, -1]) == ()
    assert free_reduce([1, 2, -2, 1]) == (1, 1)
    assert free_reduce([1, 2, -1]) == (1, 2, -1)


@settings(max_examples=200, deadline=None)
@given(letters)
def test_free_reduce_idempotent_and_nonincreasing(seq):
    once = free_reduce(seq)
    assert free_reduce(once) == once
    assert len(once) <= len(seq)


@settings(max_examples=100, deadline=None)
@given(letters)
def test_word_times_inverse_is_identity(seq):
    w = Word(seq)
    assert (w * w.inverse()).is_identity()


def test_roundtrip_through_serializer():
    text = "gens: a b c\nrel: a b a^-1 b^-1\nrel: b^2 c^-3 a\nmeridians: a c\n"
    p = parse_presentation(text)
    assert parse_presentation(serialize_presentation(p)) == p


def test_abelianize_commutator_is_full_rank():
    p = parse_presentation("gens: a b\nrel: a b a^-1 b^-1\n")
    ab = abelianize(p)
    assert ab.s == 2
    assert ab.quotient_map == ((1, 0), (0, 1))
    assert ab.psi == (1, 1)
    assert not ab.torsion_detected


def test_abelianize_free_group_is_identity():
    p = parse_presentation("gens: a b c\n")
    ab = abelianize(p)
    assert ab.s == 3
    assert ab.quotient_map == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert linking_vector(ab) == (1, 1, 1)


def test_abelianize_trefoil_style_collapses_to_one_variable():
    p = parse_presentation("gens: a b\nrel: a b a b^-1 a^-1 b^-1\n")
    ab = abelianize(p)
    assert ab.s == 1
    assert ab.quotient_map == ((1,), (1,))
    assert ab.psi == (1, 1)


def test_abelianize_detects_torsion():
    p = parse_presentation("gens: a b\nrel: a^2\nmeridians: b\n")
    ab = abelianize(p)
    assert ab.torsion_detected
    assert ab.s == 1


def test_relators_die_in_quotient():
    from alexarr.selftest import corpus_cases

    for case in corpus_cases():
        p = case.build()
        ab = abelianize(p)
        for rel in p.relators:
            assert ab.word_image(rel) == (0,) * ab.s, case.name


def test_linking_vector_of_word_products():
    # the full central product in a pencil maps to the total line count
    from alexarr.arrangements import family_presentation

    p = family_presentation("pencil", 4)
    ab = abelianize(p)
    full = Word([4, 3, 2, 1])
    assert sum(ab.word_image(full)) == 4
    assert sum(ab.word_image(Word.identity())) == 0
