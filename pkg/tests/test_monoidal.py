from ldcbench.fincat import Mor, TableCategory
from ldcbench.ldc import check_ldc_suite
from ldcbench.monoidal import (
    MonoidalStructure, TensorInverseWitness, check_monoidal_laws, check_tensor_inverse,
    degenerate_ldc, derive_cartesian_monoidal, derive_cocartesian_monoidal,
    shifted_tensor_ldc,
)
from ldcbench.zoo import (
    finpar_bicartesian, finrel_bicartesian, finset_bicartesian, make_finpar, make_finrel,
    make_finset,
)


def ok(reports):
    bad = [str(r) for r in reports if r.failed]
    assert not bad, bad
    return True


def test_cartesian_finset():
    X = finset_bicartesian(make_finset(3))
    ok(check_monoidal_laws(derive_cartesian_monoidal(X), bound=3))


def test_cocartesian_finpar():
    X = finpar_bicartesian(make_finpar(2))
    ok(check_monoidal_laws(derive_cocartesian_monoidal(X)))


def test_symmetry_is_involutive_and_unitor_splits():
    X = finset_bicartesian(make_finset(2))
    M = derive_cartesian_monoidal(X)
    C = X.cat
    for A in C.objects:
        assert C.compose(M.sym(A, A), M.sym(A, A)) == C.identity(A * A)
        assert C.compose(M.runit(A), X.pi0(A, X.top)) == C.identity(A)


def Z2():
    # discrete monoidal category on Z/2 with addition as tensor
    C = TableCategory(["0", "1"], [("i0", "0", "0"), ("i1", "1", "1")],
                      {"0": "i0", "1": "i1"},
                      [("i0", "i0", "i0"), ("i1", "i1", "i1")], "Z2")

    def ob(A, B):
        return str((int(A) + int(B)) % 2)

    def ar(f, g):
        return C.identity(ob(f.dom, g.dom))

    idn = lambda *xs: C.identity(ob(xs[0], ob(*xs[1:])) if len(xs) > 1 else xs[0])
    M = MonoidalStructure(C, ob, ar, "0", lambda A, B, D: idn(A, B, D), idn, idn,
                          lambda A, B: C.identity(ob(A, B)), name="z2")
    return C, M


def test_one_object_trivial():
    C = TableCategory(["*"], [("e", "*", "*")], {"*": "e"}, [("e", "e", "e")])
    i = lambda *xs: C.identity("*")
    M = MonoidalStructure(C, lambda A, B: "*", lambda f, g: C.identity("*"), "*",
                          i, i, i, i, name="t")
    ok(check_monoidal_laws(M))


def test_cyclic_group_shifted_tensor():
    C, M = Z2()
    ok(check_monoidal_laws(M))
    w = TensorInverseWitness("1", "1", C.identity("0"), C.identity("0"))
    ok(check_tensor_inverse(M, w))
    L = shifted_tensor_ldc(M, w)
    assert L.bot == "1"
    assert L.par.ob("0", "0") == "1"
    ok(check_ldc_suite(L))


def test_trivially_shifted_tensor_agrees_with_tensor():
    X = finrel_bicartesian(make_finrel(2))
    M = derive_cartesian_monoidal(X)
    C = X.cat
    one = X.top
    w = TensorInverseWitness(one, one, M.runit_inv(one), M.runit_inv(one))
    ok(check_tensor_inverse(M, w))
    L = shifted_tensor_ldc(M, w)
    ok(check_ldc_suite(L, bound=2))
    for A in C.objects:
        for B in C.objects:
            # A x (1 x B) is iso to A x B through the unitor
            assert L.par.ob(A, B) == M.ob(A, M.ob(one, B))


def test_degenerate_ldc_uses_associators():
    X = finset_bicartesian(make_finset(2))
    M = derive_cartesian_monoidal(X)
    L = degenerate_ldc(M)
    ok(check_ldc_suite(L, bound=3))
    assert L.deltaR(1, 2, 2) == M.assoc(1, 2, 2)
    assert L.deltaL(2, 1, 2) == M.assoc_inv(2, 1, 2)


def test_non_natural_associator_fails():
    X = finset_bicartesian(make_finset(2))
    M = derive_cartesian_monoidal(X)
    C = X.cat
    swap = Mor(2, 2, (1, 0))
    bad = M.assoc.mutated((2, 1, 1), lambda a: C.compose(a, swap))
    reps = {r.law_id: r for r in check_monoidal_laws(M.with_family(assoc=bad), bound=3)}
    nat = reps["monoidal.x.naturality"]
    assert nat.failed and nat.witness is not None
