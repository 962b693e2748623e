import pytest
from hypothesis import given, strategies as st

from vison.errors import QuerySyntaxError
from vison.queries import (
    And,
    Compare,
    HasValue,
    Named,
    Not,
    Or,
    Some,
    parse_query,
    print_expression,
)


def test_scenario_shaped_conjunction():
    expr = parse_query(
        "hasDataSource value runtime and addressesConcern value performance"
    )
    assert expr == And(
        parts=(
            HasValue(prop="hasdatasource", value="runtime"),
            HasValue(prop="addressesconcern", value="performance"),
        )
    )


def test_not_over_group():
    assert parse_query("not (a or b)") == Not(
        operand=Or(parts=(Named("a"), Named("b")))
    )


def test_compare_and_named():
    assert parse_query("lastUpdate >= 2015 and Tool") == And(
        parts=(Compare(prop="lastupdate", op=">=", value=2015), Named("tool"))
    )


def test_and_binds_tighter_than_or():
    assert parse_query("a and b or c") == Or(
        parts=(And(parts=(Named("a"), Named("b"))), Named("c"))
    )
    assert parse_query("a or b and c") == Or(
        parts=(Named("a"), And(parts=(Named("b"), Named("c"))))
    )


def test_nary_flattening():
    assert parse_query("a and b and c") == And(
        parts=(Named("a"), Named("b"), Named("c"))
    )


def test_some_takes_an_atom():
    assert parse_query("hasMedium some medium") == Some(
        prop="hasmedium", operand=Named("medium")
    )
    assert parse_query("hasMedium some (dimensionality value d3 or medium)") == Some(
        prop="hasmedium",
        operand=Or(parts=(HasValue("dimensionality", "d3"), Named("medium"))),
    )


def test_double_not_without_parens():
    assert parse_query("not not a") == Not(Not(Named("a")))


def test_keywords_case_insensitive():
    assert parse_query("a AND b") == parse_query("a and b")
    assert parse_query("NOT a") == Not(Named("a"))
    assert parse_query("hasMedium VALUE i3d") == HasValue("hasmedium", "i3d")


def test_names_with_keyword_prefixes():
    # "android" starts with "and", "oracle" with "or": maximal-munch names
    assert parse_query("android and oracle") == And(
        parts=(Named("android"), Named("oracle"))
    )


def test_empty_input():
    with pytest.raises(QuerySyntaxError):
        parse_query("")
    with pytest.raises(QuerySyntaxError):
        parse_query("   ")


def test_error_positions():
    with pytest.raises(QuerySyntaxError) as err:
        parse_query("a and")
    assert err.value.position == 5
    with pytest.raises(QuerySyntaxError) as err:
        parse_query("a @ b")
    assert err.value.position == 2
    with pytest.raises(QuerySyntaxError) as err:
        parse_query("(a or b")
    assert err.value.position == 7
    with pytest.raises(QuerySyntaxError) as err:
        parse_query("lastUpdate >= x")
    assert err.value.position == 14
    with pytest.raises(QuerySyntaxError) as err:
        parse_query("a b")
    assert err.value.position == 2


def test_print_examples():
    assert print_expression(And(parts=(Named("a"), Named("b")))) == "a and b"
    assert print_expression(Not(Or(parts=(Named("a"), Named("b"))))) == "not (a or b)"
    assert print_expression(Compare("lastupdate", ">=", 2015)) == "lastupdate >= 2015"
    assert (
        print_expression(Some("hasmedium", Not(Named("scs"))))
        == "hasmedium some (not scs)"
    )
    # same-precedence nesting keeps its grouping
    nested = And(parts=(Named("a"), And(parts=(Named("b"), Named("c")))))
    assert print_expression(nested) == "a and (b and c)"
    assert parse_query(print_expression(nested)) == nested


# -- generated round trips ----------------------------------------------------

names = st.from_regex(r"[a-z][a-z0-9-]{0,8}", fullmatch=True).filter(
    lambda s: s not in {"and", "or", "not", "value", "some"}
)


def expressions(max_depth: int = 4):
    atoms = st.one_of(
        st.builds(Named, name=names),
        st.builds(HasValue, prop=names, value=names),
        st.builds(
            Compare,
            prop=names,
            op=st.sampled_from(["=", ">=", "<="]),
            value=st.integers(min_value=0, max_value=3000),
        ),
    )
    return st.recursive(
        atoms,
        lambda children: st.one_of(
            st.builds(Not, operand=children),
            st.builds(Some, prop=names, operand=children),
            st.builds(
                And, parts=st.lists(children, min_size=2, max_size=4).map(tuple)
            ),
            st.builds(
                Or, parts=st.lists(children, min_size=2, max_size=4).map(tuple)
            ),
        ),
        max_leaves=12,
    )


@given(expressions())
def test_parse_print_round_trip(expr):
    assert parse_query(print_expression(expr)) == expr
