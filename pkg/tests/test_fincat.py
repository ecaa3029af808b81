import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ldcbench.fincat import (
    CompositionError, Functor, LawReport, Mor, TableCategory, check_functor,
    is_isomorphism, opposite, product_category, search_inverse, tabulate,
    validate_category,
)
from ldcbench.zoo import make_finpar, make_finrel, make_finset


def walking_arrow():
    return TableCategory(
        ["a", "b"],
        [("1a", "a", "a"), ("1b", "b", "b"), ("f", "a", "b")],
        {"a": "1a", "b": "1b"},
        [("1a", "1a", "1a"), ("1b", "1b", "1b"), ("1a", "f", "f"), ("f", "1b", "f")],
        name="arrow",
    )


def monoid_table(op, n, name="M"):
    # one-object category from a binary operation on range(n); element 0 is the unit
    names = [f"e{i}" for i in range(n)]
    comp = [(names[i], names[j], names[op(i, j)]) for i in range(n) for j in range(n)]
    return TableCategory(["*"], [(m, "*", "*") for m in names], {"*": "e0"}, comp, name)


def by_id(reports):
    return {r.law_id: r for r in reports}


def test_walking_arrow_is_a_category():
    reps = validate_category(walking_arrow())
    assert all(r.passed for r in reps), [r.to_json() for r in reps if not r.passed]


def test_one_object_trivial_category():
    reps = validate_category(monoid_table(lambda i, j: 0, 1))
    assert all(r.passed for r in reps)


def test_broken_associativity_is_caught():
    op = {(i, j): max(i, j) for i in range(3) for j in range(3)}
    op[1, 1], op[1, 2] = 2, 1  # (1;2);1 = 1;1 = 2 but 1;(2;1) = 1;2 = 1
    reps = by_id(validate_category(monoid_table(lambda i, j: op[i, j], 3)))
    r = reps["category.associativity"]
    assert r.failed
    assert r.witness is not None and r.witness.objects == ("*",) * 4


def test_missing_composite_reports_closure():
    C = walking_arrow()
    del C.table["1a", "f"]
    reps = by_id(validate_category(C))
    assert reps["category.closure"].failed


def brute_monoids(n):
    # all associative unital operations on range(n) with unit 0, by brute force
    out = []
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    for vals in itertools.product(range(n), repeat=len(cells)):
        op = {(0, j): j for j in range(n)}
        op.update({(i, 0): i for i in range(n)})
        op.update(dict(zip(cells, vals)))
        if all(op[op[a, b], c] == op[a, op[b, c]]
               for a in range(n) for b in range(n) for c in range(n)):
            out.append(op)
    return out


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_associativity_check_matches_brute_force(vals):
    cells = [(1, 1), (1, 2), (2, 1), (2, 2)]
    op = {(0, j): j for j in range(3)}
    op.update({(i, 0): i for i in range(3)})
    op.update(dict(zip(cells, vals)))
    expected = all(op[op[a, b], c] == op[a, op[b, c]]
                   for a in range(3) for b in range(3) for c in range(3))
    reps = by_id(validate_category(monoid_table(lambda i, j: op[i, j], 3)))
    assert reps["category.associativity"].passed == expected


def test_monoid_count_oracle():
    # labelled 3-element monoids with a fixed unit
    assert len(brute_monoids(3)) == sum(
        by_id(validate_category(monoid_table(lambda i, j, op=op: op[i, j], 3)))
        ["category.associativity"].passed for op in brute_monoids(3))


@pytest.mark.parametrize("make,formula", [
    (make_finset, lambda a, b: b ** a),
    (make_finpar, lambda a, b: (b + 1) ** a),
    (make_finrel, lambda a, b: 2 ** (a * b)),
])
def test_hom_counts(make, formula):
    C = make(2)
    for A in C.objects:
        for B in C.objects:
            assert len(C.hom(A, B)) == formula(A, B) == C.hom_size(A, B)


@pytest.mark.parametrize("make", [make_finset, make_finpar, make_finrel])
def test_engines_validate(make):
    assert all(r.passed for r in validate_category(make(2)))


def test_isomorphisms_in_finset():
    C = make_finset(3)
    isos = [f for f in C.hom(3, 3) if is_isomorphism(C, f) is not None]
    assert len(isos) == 6
    assert is_isomorphism(C, Mor(2, 3, (0, 1))) is None
    f = Mor(3, 3, (2, 0, 1))
    g = search_inverse(C, f)
    assert C.compose(f, g) == C.identity(3)


def test_finrel_isos_are_permutations():
    C = make_finrel(2)
    assert sum(is_isomorphism(C, f) is not None for f in C.hom(2, 2)) == 2


def test_opposite_and_product_validate():
    C = walking_arrow()
    assert all(r.passed for r in validate_category(opposite(C)))
    P = product_category(C, make_finset(1))
    assert all(r.passed for r in validate_category(P))
    assert len(P.objects) == 4


def test_compose_type_mismatch():
    C = make_finset(2)
    with pytest.raises(CompositionError):
        C.compose(Mor(1, 2, (0,)), Mor(1, 1, (0,)))


def test_tabulate_roundtrip():
    T, _ = tabulate(make_finset(2))
    assert all(r.passed for r in validate_category(T))
    T2 = TableCategory.from_dict(T.to_dict())
    assert T2.to_dict() == T.to_dict()


def test_identity_functor_and_mutation():
    C = make_finset(2)
    F = Functor(C, C, lambda A: A, lambda f: f, "id")
    assert all(r.passed for r in check_functor(F))

    def bad(f):
        # send one non-identity map somewhere else
        if f == Mor(2, 2, (1, 0)):
            return Mor(2, 2, (0, 0))
        return f
    G = Functor(C, C, lambda A: A, bad, "bad")
    reps = by_id(check_functor(G))
    assert reps["functor.composition"].failed
    assert reps["functor.composition"].witness is not None


def test_report_shape():
    r = validate_category(walking_arrow())[0]
    assert isinstance(r, LawReport)
    d = r.to_json()
    assert d["id"] == "category.identity_left" and d["status"] == "pass"
