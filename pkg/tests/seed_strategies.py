"""Hypothesis strategies over the seed ontology's vocabulary.

Atoms stay tool-valued (classes under Tool, facet assertions, year
comparisons) so every generated expression denotes a subset of the tool
universe and the boolean-algebra identities are exact.
"""

from hypothesis import strategies as st

from vison.queries import And, Compare, HasValue, Named, Not, Or
from vison.seed import build_seed_snapshot

SNAPSHOT = build_seed_snapshot()
ONTOLOGY = SNAPSHOT.ontology

TOOL_CLASSES = (
    "tool",
    "behavior-tool",
    "structure-tool",
    "evolution-tool",
    "combined-aspect-tool",
    "framework",
)

FACET_PROPERTIES = (
    "aspectis",
    "hasmedium",
    "usestechnique",
    "runsin",
    "evaluatedby",
    "hasdatasource",
    "addressesconcernkeyword",
)

FACET_PAIRS = sorted(
    {
        (prop, target)
        for ind in ONTOLOGY.individuals.values()
        for prop, target in ind.property_assertions
        if prop in FACET_PROPERTIES and isinstance(target, str)
    }
)


def tool_atoms():
    return st.one_of(
        st.sampled_from(TOOL_CLASSES).map(Named),
        st.sampled_from(FACET_PAIRS).map(lambda pt: HasValue(*pt)),
        st.builds(
            Compare,
            prop=st.just("lastupdate"),
            op=st.sampled_from(["=", ">=", "<="]),
            value=st.integers(min_value=2000, max_value=2020),
        ),
    )


def tool_expressions(max_leaves: int = 10):
    return st.recursive(
        tool_atoms(),
        lambda children: st.one_of(
            st.builds(Not, operand=children),
            st.builds(And, parts=st.lists(children, min_size=2, max_size=3).map(tuple)),
            st.builds(Or, parts=st.lists(children, min_size=2, max_size=3).map(tuple)),
        ),
        max_leaves=max_leaves,
    )
