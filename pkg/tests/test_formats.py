import random

import pytest

from lietriple.core import TripleSystem, transform
from lietriple.formats import (
    ParseError,
    parse_lie,
    parse_lts,
    serialize_lie,
    serialize_lts,
)
from lietriple.embed import standard_embedding
from util import random_invertible


def test_round_trip_catalog_entries(entries):
    for e in entries:
        text = serialize_lts(e.system)
        back = parse_lts(text)
        assert back.dim == e.system.dim and back.c == e.system.c, e.label
        assert serialize_lts(back) == text, e.label


def test_round_trip_random_transforms(entries):
    rng = random.Random(59)
    for e in entries:
        T = random_invertible(rng, e.system.dim)
        t = transform(e.system, T)
        assert parse_lts(serialize_lts(t)).c == t.c, e.label


def test_round_trip_lie_files(entries):
    for e in entries:
        emb = standard_embedding(e.system)
        text = serialize_lie(emb.algebra, emb.grading)
        g, grading = parse_lie(text)
        assert g.dim == emb.algebra.dim and g.f == emb.algebra.f
        assert grading == emb.grading
        assert serialize_lie(g, grading) == text


def test_serialized_form_is_sorted_and_ascii(by_label):
    text = serialize_lts(by_label["split-5"].system)
    lines = text.splitlines()
    assert lines[0] == "LTS 3"
    body = lines[1:]
    keys = [tuple(int(x) for x in ln.split()[:4]) for ln in body]
    assert keys == sorted(keys)
    assert text.encode("ascii")
    assert "1 2 2 1 -1/4" in body


def test_parse_accepts_comments_and_blank_lines():
    text = "# a comment\n\nLTS 2\n# another\n1 2 1 2 1\n\n"
    t = parse_lts(text)
    assert t.dim == 2
    assert t.c[0][1][0][1] == 1


def test_parse_lts_errors():
    with pytest.raises(ParseError, match="line 1: missing LTS header"):
        parse_lts("")
    with pytest.raises(ParseError, match="expected header"):
        parse_lts("LTS x\n")
    with pytest.raises(ParseError, match="i<j required"):
        parse_lts("LTS 2\n1 1 2 2 1\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_lts("LTS 2\n2 1 1 1 1\n")
    with pytest.raises(ParseError, match="1..n"):
        parse_lts("LTS 2\n1 2 3 1 1\n")
    with pytest.raises(ParseError, match="duplicate"):
        parse_lts("LTS 2\n1 2 1 2 1\n1 2 1 2 1\n")
    with pytest.raises(ParseError, match="malformed rational"):
        parse_lts("LTS 2\n1 2 1 2 1/-2\n")
    with pytest.raises(ParseError, match="lowest terms"):
        parse_lts("LTS 2\n1 2 1 2 2/4\n")
    with pytest.raises(ParseError, match="zero coordinates"):
        parse_lts("LTS 2\n1 2 1 2 0\n")
    with pytest.raises(ParseError, match="expected 'i j k l q'"):
        parse_lts("LTS 2\n1 2 1 1\n")


def test_parse_lie_grade_handling():
    g, grading = parse_lie("LIE 2\nGRADE - +\n")
    assert g.dim == 2 and grading.signs == (-1, 1)
    g2, none = parse_lie("LIE 2\n1 2 1 1\n")
    assert none is None
    with pytest.raises(ParseError, match="GRADE line must list 2 signs"):
        parse_lie("LIE 2\nGRADE - \n")
    with pytest.raises(ParseError, match="i<j required"):
        parse_lie("LIE 2\n2 2 1 1\n")


def test_lts_serialization_of_empty_system():
    t = TripleSystem.abelian(1)
    assert serialize_lts(t) == "LTS 1\n"
    assert parse_lts("LTS 1\n").dim == 1
