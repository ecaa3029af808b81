import itertools

import pytest

from ldcbench.fincat import Mor
from ldcbench.limits import (
    BiproductWitness, certify_coproduct, certify_product, check_biproduct, check_psi,
    classify_object, find_binary_coproduct, find_binary_product, find_terminal_initial,
    zero_structure,
)
from ldcbench.zoo import (
    finpar_bicartesian, finrel_bicartesian, finset_bicartesian, make_finpar, make_finrel,
    make_finset,
)


def test_finset_terminal_initial():
    C = make_finset(3)
    term, init = find_terminal_initial(C)
    assert term.obj == 1 and init.obj == 0


def test_finrel_product_equals_coproduct():
    C = make_finrel(2)
    for A, B in itertools.product(C.objects, repeat=2):
        if A + B > 2:
            continue
        p = find_binary_product(C, A, B)
        c = find_binary_coproduct(C, A, B)
        assert p.apex == c.apex == A + B


def test_finrel_chosen_witnesses_certify():
    X = finrel_bicartesian(make_finrel(3))
    for A, B in [(1, 1), (1, 2), (0, 3)]:
        tests = [0, 1, 2]
        assert certify_product(X.cat, X.prod(A, B), tests).passed
        assert certify_coproduct(X.cat, X.coprod(A, B), tests).passed


def test_product_with_terminal():
    X = finset_bicartesian(make_finset(3))
    for A in range(4):
        assert X.times(A, X.top) == A


def test_finpar_product_apex():
    X = finpar_bicartesian(make_finpar(3))
    C = X.cat
    w = X.prod(1, 1)
    assert w.apex == 3
    assert certify_product(C, w, [0, 1, 2]).passed


def brute_preinitial(C, A, objs):
    return all(len(C.hom(A, Y)) <= 1 for Y in objs)


@pytest.mark.parametrize("X", [
    finset_bicartesian(make_finset(2)),
    finpar_bicartesian(make_finpar(2)),
    finrel_bicartesian(make_finrel(2)),
])
def test_classify_object_matches_hom_counts(X):
    objs = list(X.cat.objects)
    for A in objs:
        flags = classify_object(X, A)
        assert flags["preinitial"] == brute_preinitial(X.cat, A, objs + [X.plus(A, A)])
    assert classify_object(X, X.bot)["preinitial"]


def test_finset_initial_is_strict():
    X = finset_bicartesian(make_finset(2))
    assert classify_object(X, X.bot)["strict_initial"]
    assert not classify_object(X, X.top)["costrict_terminal"]


def test_finrel_psi_is_identity():
    X = finrel_bicartesian(make_finrel(3))
    zs = zero_structure(X)
    assert zs is not None
    for A, B in [(0, 0), (1, 1), (1, 2), (2, 1)]:
        assert zs.psi(A, B) == X.cat.identity(A + B)
    assert all(r.passed for r in check_psi(zs, [0, 1]))


def test_finset_has_no_zero():
    assert zero_structure(finset_bicartesian(make_finset(2))) is None


def test_finrel_biproduct_passes():
    X = finrel_bicartesian(make_finrel(3))
    zs = zero_structure(X)
    for A, B in [(0, 0), (1, 1), (1, 2)]:
        w = BiproductWitness(A, B, A + B, X.pi0(A, B), X.pi1(A, B),
                             X.iota0(A, B), X.iota1(A, B))
        assert all(r.passed for r in check_biproduct(X.cat, zs, w, [0, 1, 2]))


def test_finpar_disjoint_union_is_not_a_product():
    X = finpar_bicartesian(make_finpar(2))
    C = X.cat
    zs = zero_structure(X)
    # retractions of the coproduct injections
    p0 = Mor(2, 1, (0, -1))
    p1 = Mor(2, 1, (-1, 0))
    w = BiproductWitness(1, 1, 2, p0, p1, X.iota0(1, 1), X.iota1(1, 1))
    reps = {r.law_id: r for r in check_biproduct(C, zs, w, [0, 1, 2])}
    assert reps["biproduct.equations"].passed
    assert reps["biproduct.coproduct"].passed
    bad = reps["biproduct.product"]
    assert bad.failed and bad.witness is not None
