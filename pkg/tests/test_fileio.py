"""Plain-text DGA files: parsing, serialization, bundled data."""

import random
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from legch import ContractError
from legch.algebra import assert_valid
from legch.families import trefoil
from legch.fileio import (
    FileFormatWarning,
    bundled_text,
    format_poly,
    parse_dga,
    serialize_dga,
)
from helpers import poly, random_dga


def test_bundled_trefoil_parses_to_the_family_constructor():
    dga = parse_dga(bundled_text("trefoil.dga"))
    assert dga == trefoil()


def test_comments_blank_lines_and_zero_lines():
    dga = parse_dga(
        """
        # leading comment
        modulus 4   # trailing comment

        gen x 1
        gen y 0
        d x = 0
        """
    )
    assert dga.modulus == 4
    assert dga.generators == ("x", "y")
    assert dga.d("x") == frozenset()
    assert dga.d("y") == frozenset()


def test_parse_reads_unit_terms_and_words():
    dga = parse_dga(
        "modulus 0\ngen a 1\ngen b 0\ngen c 0\nd a = 1 + b + b c b\n"
    )
    assert dga.d("a") == poly((), ("b",), ("b", "c", "b"))


def test_serialize_then_parse_is_identity_on_bundled_text():
    text = bundled_text("trefoil.dga")
    dga = parse_dga(text)
    assert parse_dga(serialize_dga(dga)) == dga
    # canonical form is itself a fixed point
    assert serialize_dga(parse_dga(serialize_dga(dga))) == serialize_dga(dga)


def test_format_poly_orders_terms_canonically():
    dga = trefoil()
    assert format_poly(dga, frozenset()) == "0"
    assert format_poly(dga, dga.d("a1")) == "1 + b1 + b3 + b1 b2 b3"
    assert format_poly(dga, dga.d("a2")) == "1 + b1 + b3 + b3 b2 b1"


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("gen x 1\nmodulus 0", "line 1: expected the modulus line first"),
        ("modulus", "line 1: expected 'modulus"),
        ("modulus two", "not an integer"),
        ("modulus -3", "must be non-negative"),
        ("modulus 0\ngen x", "line 2: expected 'gen"),
        ("modulus 0\ngen 9x 1", "invalid generator name '9x'"),
        ("modulus 0\ngen x 1\ngen x 0", "line 3: duplicate generator declaration: x"),
        ("modulus 0\ngen x 1.5", "degree '1.5' is not an integer"),
        ("modulus 0\ngen x 1\nd x 1", "expected 'd <name> = <poly>'"),
        ("modulus 0\ngen x 1\nd y = 1", "line 3: undeclared generator y"),
        ("modulus 0\ngen x 1\nd x = 1\nd x = 1", "line 4: duplicate differential for x"),
        ("modulus 0\ngen x 1\nd x = b9", "undeclared generator b9 in differential of x"),
        ("modulus 0\ngen x 1\nd x = 1 +", "empty term in differential of x"),
        ("modulus 0\ngen x 1\nd x = 0 + 1", "term 0 must stand alone"),
        ("modulus 0\nspam x", "unrecognized statement 'spam'"),
        ("# nothing here", "missing modulus line"),
        ("", "missing modulus line"),
    ],
)
def test_parse_errors_carry_line_numbers(text, fragment):
    with pytest.raises(ContractError) as err:
        parse_dga(text)
    assert fragment in str(err.value)


def test_duplicate_terms_cancel_with_a_warning():
    with pytest.warns(FileFormatWarning, match="line 3: 1 pair"):
        dga = parse_dga("modulus 0\ngen x 1\nd x = 1 + 1")
    assert dga.d("x") == frozenset()
    with pytest.warns(FileFormatWarning, match="cancelled mod 2 in d x"):
        dga = parse_dga("modulus 0\ngen x 1\ngen b 0\nd x = b + 1 + b")
    assert dga.d("x") == poly(())


def test_clean_files_emit_no_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_dga(bundled_text("trefoil.dga"))


def test_bundled_text_unknown_name():
    with pytest.raises(Exception):
        bundled_text("no_such_file.dga")


@given(st.integers(0, 10**6))
@settings(deadline=None, max_examples=60)
def test_roundtrip_on_random_dgas(seed):
    dga = random_dga(random.Random(seed))
    again = parse_dga(serialize_dga(dga))
    assert again == dga
    assert_valid(again)
