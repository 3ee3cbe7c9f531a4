import pytest

from twisted_descents.algebra import UNIT, ZERO, basis, coproduct, tensor
from twisted_descents.setcomp import SetComposition, enumerate_set_compositions
from twisted_descents.textio import (
    ParseError,
    element_from_json,
    element_to_json,
    parse,
    parse_composition,
    parse_ints,
    parse_permutation,
    render,
    render_blocks,
    render_composition,
    render_permutation,
    render_tensor,
    tensor_from_json,
    tensor_to_json,
)


def test_render_basics():
    assert render(ZERO) == "0"
    assert render(UNIT) == "1*[]"
    assert render(parse("[{3,5}|{1,4}]")) == "1*[{3,5}|{1,4}]"
    assert render(parse("2*[{1}] - 3*[{2}]")) == "2*[{1}] - 3*[{2}]"
    assert render(parse("-[{1}]")) == "-1*[{1}]"


def test_render_orders_by_canonical_key():
    x = parse("[{3,5}|{1,4}] + [{2}]")
    assert render(x) == "1*[{2}] + 1*[{3,5}|{1,4}]"
    # same support size: flattened block sequence decides
    y = parse("[{2}|{1}] + [{1}|{2}] + [{1,2}]")
    assert render(y) == "1*[{1,2}] + 1*[{1}|{2}] + 1*[{2}|{1}]"


def test_parse_round_trip_exhaustive_n3():
    for sub in [(), (1,), (1, 2), (1, 2, 3)]:
        for comp in enumerate_set_compositions(sub):
            x = basis(comp)
            assert parse(render(x)) == x


def test_parse_accepts_whitespace_and_signs():
    assert parse("  1*[{1,2}]  ") == parse("[{1,2}]")
    assert parse("[{1}]   +   [{2}]") == parse("[{1}] + [{2}]")
    with pytest.raises(ParseError):
        parse("[ {1} ]")  # no whitespace inside brackets
    assert parse("+2*[{1}]") == 2 * basis(SetComposition(({1},)))
    assert parse("[{1}] - [{1}]") == ZERO
    assert parse("0") == ZERO
    assert parse(" 0 ") == ZERO


def test_parse_coefficients():
    x = parse("3*[{1}] + [{2}] - 2*[{3}]")
    assert x.coefficient(SetComposition(({1},))) == 3
    assert x.coefficient(SetComposition(({2},))) == 1
    assert x.coefficient(SetComposition(({3},))) == -2


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse("[{1,1}]")
    assert err.value.position == 4
    with pytest.raises(ParseError) as err:
        parse("[{1}|{1}]")
    assert err.value.position == 0
    with pytest.raises(ParseError) as err:
        parse("[{0}]")
    assert err.value.position == 3
    with pytest.raises(ParseError):
        parse("[{2,1}]")  # blocks must be written increasing
    with pytest.raises(ParseError):
        parse("[{1}] junk")
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError):
        parse("[{1}")


def test_render_tensor():
    t = tensor(UNIT, UNIT)
    assert render_tensor(t) == "1*[]⊗[]"
    assert render_tensor(t, ascii_only=True) == "1*[](x)[]"
    d = coproduct(parse("[{1,2}]"))
    assert (
        render_tensor(d)
        == "1*[]⊗[{1,2}] + 1*[{1}]⊗[{2}] + 1*[{2}]⊗[{1}] + 1*[{1,2}]⊗[]"
    )


def test_json_round_trips():
    x = parse("2*[{3,5}|{1,4}] - [{2}]")
    doc = element_to_json(x)
    assert doc == {
        "terms": [
            {"coeff": -1, "blocks": [[2]]},
            {"coeff": 2, "blocks": [[3, 5], [1, 4]]},
        ]
    }
    assert element_from_json(doc) == x
    assert element_from_json(element_to_json(ZERO)) == ZERO

    t = coproduct(parse("[{1}|{2}]"))
    assert tensor_from_json(tensor_to_json(t)) == t
    left0 = tensor_to_json(t)["terms"][0]
    assert set(left0) == {"coeff", "left", "right"}


def test_json_rejects_bad_documents():
    with pytest.raises(ValueError):
        element_from_json({"terms": [{"coeff": 1}]})
    with pytest.raises(ValueError):
        element_from_json({})


def test_small_parsers():
    assert parse_ints("3,1,2", "test") == (3, 1, 2)
    with pytest.raises(ValueError):
        parse_ints("1,x", "test")
    assert parse_permutation("3,1,2") == (3, 1, 2)
    with pytest.raises(ValueError):
        parse_permutation("1,3")
    assert parse_composition("2,1") == (2, 1)
    with pytest.raises(ValueError):
        parse_composition("2,0")
    assert render_permutation((3, 1, 2)) == "3,1,2"
    assert render_composition((1, 1)) == "(1,1)"


def test_render_blocks():
    assert render_blocks(SetComposition(({3, 5}, {1, 4}))) == "[{3,5}|{1,4}]"
    assert render_blocks(SetComposition(())) == "[]"
