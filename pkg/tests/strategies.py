"""Hypothesis strategies for formulas."""

from hypothesis import strategies as st

from negtrans.formula import And, Atom, Exists, Forall, Imp, Neg, Or, Var

ATOMS = st.sampled_from([Atom("P"), Atom("Q"), Atom("R")])


def propositional(max_leaves: int = 12, negation: bool = True):
    """Closed propositional formulas over P, Q, R."""

    def extend(children):
        binary = st.one_of(
            st.builds(And, children, children),
            st.builds(Or, children, children),
            st.builds(Imp, children, children),
        )
        if not negation:
            return binary
        return st.one_of(binary, st.builds(Neg, children))

    return st.recursive(ATOMS, extend, max_leaves=max_leaves)


@st.composite
def quantified(draw, depth: int = 3, bound=()):
    """Closed negation-free formulas with unary P, Q and 0-ary S."""
    if depth <= 0 or draw(st.integers(0, 3)) == 0:
        if bound and draw(st.booleans()):
            pred = draw(st.sampled_from(["P", "Q"]))
            return Atom(pred, (Var(draw(st.sampled_from(list(bound)))),))
        return Atom("S")
    kind = draw(st.sampled_from(["and", "or", "imp", "forall", "exists"]))
    if kind in ("forall", "exists"):
        var = f"x{len(bound)}"
        body = draw(quantified(depth - 1, bound + (var,)))
        return (Forall if kind == "forall" else Exists)(var, body)
    node = {"and": And, "or": Or, "imp": Imp}[kind]
    return node(draw(quantified(depth - 1, bound)), draw(quantified(depth - 1, bound)))
