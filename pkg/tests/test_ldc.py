import pytest

from ldcbench.fincat import Family, Mor
from ldcbench.ldc import (
    ComplementationPair, check_complementation_pair, check_frobenius_linear,
    check_ldc_laws, check_ldc_suite, check_sldc_symmetry, complement_adjunction,
    equivalence_witnesses, find_negation, identity_frobenius, mix_analysis, units_pair,
)
from ldcbench.construct import bdl_to_cldc
from ldcbench.monoidal import degenerate_ldc, derive_cartesian_monoidal
from ldcbench import zoo

from conftest import failures


def test_degenerate_ldc_passes():
    X = zoo.finrel_bicartesian(zoo.make_finrel(2))
    assert not failures(check_ldc_suite(degenerate_ldc(derive_cartesian_monoidal(X))))


def test_chain_lattice_passes(c2):
    assert not failures(check_ldc_suite(c2.ldc))


@pytest.mark.parametrize("name", ["finrel2", "b2"])
def test_sldc_symmetry(name, request):
    S = request.getfixturevalue(name)
    assert check_sldc_symmetry(S.ldc).passed


def test_sldc_symmetry_finpar():
    C = zoo.make_finpar(2)
    assert check_sldc_symmetry(zoo.finpar_direct_ldc(C)).passed


def test_finpar_wrong_injection_in_deltaL_is_caught():
    C = zoo.make_finpar(1)
    L = zoo.finpar_direct_ldc(C)
    d = L.deltaL(1, 1, 1)
    # send the image of the third summand to a different place
    data = list(d.data)
    k = next(i for i, x in enumerate(data) if x >= 0)
    data[k] = next(y for y in range(d.cod) if y != data[k])
    bad = L.replace(deltaL=L.deltaL.mutated((1, 1, 1), Mor(d.dom, d.cod, tuple(data))))
    reps = check_ldc_laws(bad) + [check_sldc_symmetry(bad)]
    assert failures(reps)
    assert all(r.witness is not None for r in failures(reps))


def test_mix_kinds(finrel2, b2):
    assert mix_analysis(finrel2.ldc).kind == "compact"
    mx = mix_analysis(b2.ldc)
    assert mx.kind == "mix"
    assert not failures(mx.reports)


def test_finpar_is_isomix():
    L = zoo.finpar_direct_ldc(zoo.make_finpar(2))
    assert mix_analysis(L).kind == "isomix"


@pytest.mark.parametrize("name", ["finrel2", "b2", "c2"])
def test_units_pair(name, request):
    L = request.getfixturevalue(name).ldc
    assert not failures(check_complementation_pair(L, units_pair(L)))


def test_boolean_complement_pair(b2):
    L = b2.ldc
    C = L.cat
    pair = ComplementationPair(1, 2, C.hom(L.tensor.ob(1, 2), L.bot)[0],
                               C.hom(L.one, L.par.ob(1, 2))[0])
    assert not failures(check_complementation_pair(L, pair))
    swapped = ComplementationPair(1, 2, pair.tau, pair.gamma)
    assert failures(check_complementation_pair(L, swapped))


def test_complement_adjunction_counts(b2):
    L = b2.ldc
    C = L.cat
    pair = ComplementationPair(1, 2, C.hom(0, 0)[0], C.hom(3, 3)[0])
    for B in C.objects:
        for D in C.objects:
            _, n, m = complement_adjunction(L, pair, B, D)
            assert n == m
    # unit specialisation: hom(A, D) against hom(1, A^c | D)
    for D in C.objects:
        assert C.hom_size(1, D) == C.hom_size(L.one, L.par.ob(2, D))


def test_unique_map_bottom_squared(finrel2, b2, c2):
    for S in (finrel2, b2, c2):
        L = S.ldc
        C = L.cat
        bot, one = L.bot, L.one
        assert C.hom_size(L.tensor.ob(bot, bot), bot) == 1
        assert C.hom_size(bot, L.par.ob(one, bot)) == 1


def test_negation():
    assert find_negation(bdl_to_cldc(zoo.boolean(2)).ldc) is not None
    assert find_negation(bdl_to_cldc(zoo.chain(3)).ldc) is None
    assert find_negation(bdl_to_cldc(zoo.chain(1)).ldc) is not None


def test_boolean_negation_is_complement():
    neg = find_negation(bdl_to_cldc(zoo.boolean(2)).ldc)
    assert {A: v[0] for A, v in neg.items()} == {0: 3, 1: 2, 2: 1, 3: 0}


def test_identity_frobenius(finrel2, b2):
    for S in (finrel2, b2):
        assert not failures(check_frobenius_linear(identity_frobenius(S.ldc)))


def test_scrambled_frobenius_fails(finrel2):
    L = finrel2.ldc
    C = L.cat
    Fd = identity_frobenius(L)
    base = Fd.n_par.resolver

    def scrambled(A, B):
        if (A, B) == (1, 1):
            return Mor(2, 2, (2, 1))
        return base(A, B)
    Fd.n_par = Family("n|", 2, scrambled)
    bad = failures(check_frobenius_linear(Fd))
    assert bad and bad[0].witness is not None


def test_equivalence_witnesses_finrel(finrel2):
    deg, shifted = equivalence_witnesses(finrel2.ldc)
    assert deg is not None and shifted is not None
    assert not failures(deg.reports)
    assert not failures(shifted.reports)


def test_degenerate_witness_on_degenerate_is_identity():
    X = zoo.finrel_bicartesian(zoo.make_finrel(1))
    L = degenerate_ldc(derive_cartesian_monoidal(X))
    deg, _ = equivalence_witnesses(L)
    C = L.cat
    for A in C.objects:
        for B in C.objects:
            assert deg.forward.n_par(A, B) == C.identity(L.par.ob(A, B))
