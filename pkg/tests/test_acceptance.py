"""Acceptance criteria, one test (and one summary line) per criterion."""
import dataclasses
import functools
import itertools
import time

import pytest

from ldcbench import zoo
from ldcbench import construct as K
from ldcbench.cldc import (
    CldcStructure, DeltaSearchFailed, LawFailure, assemble_cldc, cldc_theorem_suite,
    duoidal_suite,
)
from ldcbench.collapse import (
    POSETAL_GROUP, SEMIADDITIVE_GROUP, classify, posetal_collapse_suite,
    semiadditive_collapse_suite, strict_frobenius,
)
from ldcbench.fincat import Family, Mor, identity_functor, run_path
from ldcbench.ldc import (
    ComplementationPair, check_complementation_pair, check_frobenius_linear, check_ldc_laws,
    check_ldc_suite, check_sldc_symmetry, find_negation, identity_frobenius,
    symmetric_deltaR_path,
)
from ldcbench.monoidal import check_monoidal_laws, derive_cartesian_monoidal

from conftest import failures, record

# pinned limits
LATTICE_MAX = 6
CRIT1_SECONDS = 60.0
CRIT2_SECONDS = 120.0
CRIT4_SECONDS = 600.0
FINREL_MAX = 3
FINPAR_MAX = 2


def lattices():
    return zoo.bdl_generators(f"all:{LATTICE_MAX}")


def summary(reports):
    bad = failures(reports)
    return f"{len(reports)} reports, {len(bad)} failed" + (f" (first: {bad[0]})" if bad else "")


# ---------------------------------------------------------------- 1

def test_criterion_1_lattice_suites():
    t0 = time.perf_counter()
    total, bad = 0, []
    Ls = lattices()
    for L in Ls:
        S = K.bdl_to_cldc(L)
        reps = check_ldc_suite(S.ldc)
        assert any(r.law_id == "sldc.symmetry" for r in reps)
        total += len(reps)
        bad += failures(reps)
    dt = time.perf_counter() - t0
    ok = not bad and dt <= CRIT1_SECONDS
    record(1, ok, f"{len(Ls)} lattices, {total} reports, {len(bad)} failed, "
                  f"{dt:.1f}s (limit {CRIT1_SECONDS:.0f}s)")
    assert not bad, bad[0]
    assert dt <= CRIT1_SECONDS


# ---------------------------------------------------------------- 2

def test_criterion_2_finrel():
    finrel_max.cache_clear()
    t0 = time.perf_counter()
    S = finrel_max()
    cl = classify(S)
    semi = cl.group(SEMIADDITIVE_GROUP)
    pos = cl.group(POSETAL_GROUP)
    C, zs = S.cat, S.zero
    psi_ok = all(
        C.compose(S.mix.mix(A, B), zs.psi(A, B)) == C.identity(A + B)
        and C.compose(zs.psi(A, B), S.mix.mix(A, B)) == C.identity(A + B)
        for A in S.objects for B in S.objects)
    dt = time.perf_counter() - t0
    ok = (S.mix.kind == "compact" and not failures(S.reports) and all(semi.values())
          and not any(pos.values()) and psi_ok and dt <= CRIT2_SECONDS)
    record(2, ok, f"mix={S.mix.kind}, semi-additive group {set(semi.values())}, "
                  f"posetal group {set(pos.values())}, mix^-1 = psi: {psi_ok}, "
                  f"{dt:.1f}s (limit {CRIT2_SECONDS:.0f}s)")
    assert S.mix.kind == "compact"
    assert not failures(S.reports)
    assert all(semi.values()) and not any(pos.values())
    assert psi_ok
    assert dt <= CRIT2_SECONDS


# ---------------------------------------------------------------- 3

def _maps(C, objs):
    return [f for A in objs for B in objs for f in C.hom(A, B)]


def ldc_mismatches(L1, L2, objs, tr=lambda f: f):
    """Count structure components of L1 that differ from L2 after tr."""
    bad = []
    C1 = L1.cat
    maps = _maps(C1, objs)

    def same(tag, f, g):
        if tr(f) != g:
            bad.append((tag, f, g))

    for f in maps:
        for g in maps:
            if f.cod == g.dom:
                same("compose", C1.compose(f, g), L2.cat.compose(tr(f), tr(g)))
            same("tensor", L1.tensor.ar(f, g), L2.tensor.ar(tr(f), tr(g)))
            same("par", L1.par.ar(f, g), L2.par.ar(tr(f), tr(g)))
    for A in objs:
        for M in ("tensor", "par"):
            for fam in ("runit", "lunit", "runit_inv", "lunit_inv"):
                same(f"{M}.{fam}", getattr(getattr(L1, M), fam)(A), getattr(getattr(L2, M), fam)(A))
        for B in objs:
            for M in ("tensor", "par"):
                same(f"{M}.sym", getattr(L1, M).sym(A, B), getattr(L2, M).sym(A, B))
    for t in itertools.product(objs, repeat=3):
        for fam in ("deltaL", "deltaR"):
            same(fam, getattr(L1, fam)(*t), getattr(L2, fam)(*t))
        for M in ("tensor", "par"):
            for fam in ("assoc", "assoc_inv"):
                same(f"{M}.{fam}", getattr(getattr(L1, M), fam)(*t),
                     getattr(getattr(L2, M), fam)(*t))
    return bad


def test_criterion_3_finpar():
    C = zoo.make_finpar(FINPAR_MAX)
    X = zoo.finpar_bicartesian(C)
    direct = zoo.finpar_direct_ldc(C, X)
    M = zoo.finpar_smc(C, X)
    reps, mx = K.wedge_suite(direct, M)
    appendix_ok = not failures(reps) and mx.kind == "isomix"

    W = K.wedge_construction(M)
    objs = list(C.objects)
    wedge_bad = ldc_mismatches(W, direct, objs)

    D = zoo.finset_bicartesian(zoo.make_finset(FINPAR_MAX))
    kd = K.kleisli_exception(D)
    kleisli_bad = ldc_mismatches(kd.ldc, direct, objs, zoo.kleisli_to_finpar)
    kleisli_ok = not failures(kd.reports) and kd.mix.kind == "isomix"

    with pytest.raises(DeltaSearchFailed) as e:
        assemble_cldc(X)
    A, B = e.value.objects
    amp, plus = X.times(A, B), X.plus(A, B)
    witness_ok = (A, B) == (1, 1) and (amp, plus) == (3, 2)
    ob = kd.obstruction
    witness_ok &= ob["objects"] == (1, 1) and (ob["product"], ob["coproduct"]) == (3, 2)

    ok = appendix_ok and not wedge_bad and not kleisli_bad and kleisli_ok and witness_ok
    record(3, ok, f"direct suite {summary(reps)}, mix={mx.kind}; wedge mismatches "
                  f"{len(wedge_bad)}, Kleisli mismatches {len(kleisli_bad)}; search fails at "
                  f"({A},{B}) with |A&B|={amp}, |A+B|={plus}")
    assert appendix_ok, summary(reps)
    assert not wedge_bad, wedge_bad[:3]
    assert kleisli_ok, summary(kd.reports)
    assert not kleisli_bad, kleisli_bad[:3]
    assert witness_ok


# ---------------------------------------------------------------- 4

@pytest.fixture(scope="module")
def double_powerset():
    _, P2 = zoo.powerset_functors(2)
    t0 = time.perf_counter()
    try:
        S = K.grothendieck(P2, strict=True)
        err = None
    except LawFailure as e:
        S, err = None, e
    return S, err, time.perf_counter() - t0


@pytest.mark.xfail(strict=True, raises=LawFailure,
                   reason="the double-powerset functor violates the adjunction its total "
                          "category needs for coproducts, so no CLDC is certified")
def test_criterion_4_double_powerset(double_powerset):
    S, err, dt = double_powerset
    if err is not None:
        bad = failures(err.reports)
        record(4, "UNATTAINABLE", f"certification refused after {dt:.1f}s: "
                                  f"{', '.join(sorted({r.law_id for r in bad}))}")
        raise err
    cl = classify(S)
    ok = (not any(cl.group(POSETAL_GROUP).values())
          and not any(cl.group(SEMIADDITIVE_GROUP).values())
          and cl.mix_kind == "mix" and dt <= CRIT4_SECONDS)
    record(4, ok, f"classified in {dt:.1f}s")
    assert ok


def test_criterion_4_counterexamples_detected(double_powerset):
    _, err, _ = double_powerset
    assert err is not None
    bad = {r.law_id: r for r in failures(err.reports)}
    assert "P2.adjunction" in bad and bad["P2.adjunction"].witness is not None
    assert "limits.coproduct" in bad and bad["limits.coproduct"].witness is not None
    assert bad["P2.adjunction"].witness.objects == (0, 1)
    # same picture one size down, where the full report is cheap
    _, P2 = zoo.powerset_functors(1)
    S = K.grothendieck(P2, strict=False)
    assert {r.law_id for r in failures(S.reports)} == {"P2.adjunction", "limits.coproduct"}
    # brute-force copairing count at the reported objects: some pair of legs
    # has no mediating map (or more than one) out of the chosen sum
    G = K.GrothendieckCategory(P2)
    Xg = K.grothendieck_bicartesian(P2, G)
    A, B, Y = (0, 1), (1, 0), (1, 1)
    AB = Xg.plus(A, B)
    i0, i1 = Xg.iota0(A, B), Xg.iota1(A, B)
    counts = [sum(1 for h in G.hom(AB, Y)
                  if G.compose(i0, h) == f and G.compose(i1, h) == g)
              for f in G.hom(A, Y) for g in G.hom(B, Y)]
    assert any(c != 1 for c in counts)


# ---------------------------------------------------------------- 5

@functools.lru_cache(maxsize=None)
def finrel_max():
    return K.semiadditive_to_cldc(zoo.finrel_bicartesian(zoo.make_finrel(FINREL_MAX)))


@functools.lru_cache(maxsize=None)
def theorem_instances():
    out = [K.bdl_to_cldc(L) for L in lattices()]
    out.append(finrel_max())
    out.append(K.product_cldc(K.bdl_to_cldc(zoo.chain(2)),
                              K.semiadditive_to_cldc(zoo.finrel_bicartesian(zoo.make_finrel(1)))))
    return tuple(out)


def test_criterion_5_theorems_as_properties():
    n, bad = 0, []
    for S in theorem_instances():
        cl = classify(S, strict=False)
        reps = cl.reports + cldc_theorem_suite(S, strict=False)
        reps += posetal_collapse_suite(S, strict=False)
        reps += semiadditive_collapse_suite(S, strict=False)
        n += 1
        bad += [(S.name, r) for r in failures(reps)]
    record(5, not bad, f"{n} instances, {len(bad)} failing reports"
                       + (f" (first: {bad[0][0]}: {bad[0][1]})" if bad else ""))
    assert not bad, bad[:3]


# ---------------------------------------------------------------- 6

DUOIDAL_IDS = ([f"duoidal.distributor_interchange.{k}" for k in range(1, 5)]
               + ["duoidal.flip_mix.1", "duoidal.flip_mix.2",
                  "duoidal.braiding.1", "duoidal.braiding.2"])


def test_criterion_6_duoidal():
    lines, ok = [], True
    for S in (K.semiadditive_to_cldc(zoo.finrel_bicartesian(zoo.make_finrel(2))),
              K.bdl_to_cldc(zoo.boolean(2))):
        reps = {r.law_id: r for r in duoidal_suite(S)}
        here = all(reps[i].passed and "sampled" not in reps[i].note for i in DUOIDAL_IDS)
        ok &= here
        lines.append(f"{S.name}: {sum(reps[i].checked for i in DUOIDAL_IDS)} instances "
                     f"{'pass' if here else 'FAIL'}")
    record(6, ok, "; ".join(lines))
    assert ok


# ---------------------------------------------------------------- 7

def complemented(L):
    """Every element has a complement, by direct search."""
    return all(any(L.meet(a, b) == L.bottom and L.join(a, b) == L.top for b in L.elements)
               for a in L.elements)


def test_criterion_7_negation():
    Ls = lattices() + zoo.bdl_generators("chain:3;boolean:3;divisors:12")
    wrong, found, posetal_bad = [], 0, []
    for L in Ls:
        S = K.bdl_to_cldc(L)
        neg = find_negation(S.ldc)
        if (neg is not None) != complemented(L):
            wrong.append(L.name)
        if neg is not None:
            found += 1
            if not classify(S).posetal:
                posetal_bad.append(L.name)
    c3 = find_negation(K.bdl_to_cldc(zoo.chain(3)).ldc)
    ok = not wrong and not posetal_bad and c3 is None
    record(7, ok, f"{len(Ls)} lattices, negation on {found} (all Boolean: {not wrong}), "
                  f"C3 none: {c3 is None}, posetal where found: {not posetal_bad}")
    assert not wrong and not posetal_bad and c3 is None


# ---------------------------------------------------------------- 8

def test_criterion_8_sz_and_slices():
    bad = []
    insts = theorem_instances()
    for S in insts:
        Z = K.sz_subcategory(S)
        if failures(Z.reports) or not classify(Z).posetal:
            bad.append(f"SZ[{S.name}]")
        data = K.slice_coslice(S)
        ids = {r.law_id: r for r in data.slice.reports}
        if (failures(data.reports) or not ids["slice.semi_additive"].passed
                or not ids["slice.psi_inverse_mix"].passed):
            bad.append(f"{S.name}/bot")
        if getattr(S, "zero", None) is not None and classify(S).semi_additive:
            if not K.semiadditive_slice_iso(S, data.slice).passed:
                bad.append(f"{S.name} = {S.name}/bot")
    record(8, not bad, f"{len(insts)} instances" + (f", failing: {bad}" if bad else ""))
    assert not bad


# ---------------------------------------------------------------- 9

def _finrel(n=2):
    return K.semiadditive_to_cldc(zoo.finrel_bicartesian(zoo.make_finrel(n)))


def _twist(f):
    """Swap the first two rows of a 3-point endomorphism."""
    d = f.data
    return Mor(f.dom, f.cod, (d[1], d[0]) + tuple(d[2:]))


def m_wrong_injection():
    L = zoo.finpar_direct_ldc(zoo.make_finpar(1))
    d = L.deltaL(1, 1, 1)
    data = list(d.data)
    k = data.index(next(x for x in data if x >= 0))
    data[k] = next(y for y in range(d.cod) if y != data[k])
    bad = L.replace(deltaL=L.deltaL.mutated((1, 1, 1), Mor(d.dom, d.cod, tuple(data))))
    return check_ldc_laws(bad) + [check_sldc_symmetry(bad)]


def m_dropped_sigma():
    S = _finrel()
    L = S.ldc
    steps = [s for s in symmetric_deltaR_path(L, 1, 1, 1) if s[0] != "1*s|"]
    bad = L.replace(deltaR=L.deltaR.mutated((1, 1, 1), run_path(L.cat, steps)))
    return [check_sldc_symmetry(bad)]


def m_unitor():
    X = zoo.finset_bicartesian(zoo.make_finset(2))
    M = derive_cartesian_monoidal(X)
    swap = Mor(2, 2, (1, 0))
    bad = M.runit.mutated((2,), lambda u: X.cat.compose(u, swap))
    return check_monoidal_laws(M.with_family(runit=bad), bound=3)


def m_associator():
    X = zoo.finset_bicartesian(zoo.make_finset(2))
    M = derive_cartesian_monoidal(X)
    swap = Mor(2, 2, (1, 0))
    bad = M.assoc.mutated((2, 1, 1), lambda a: X.cat.compose(a, swap))
    return check_monoidal_laws(M.with_family(assoc=bad), bound=3)


def m_symmetry():
    L = zoo.finpar_direct_ldc(zoo.make_finpar(1))
    T = L.tensor
    bad = T.sym.mutated((1, 1), L.cat.identity(T.ob(1, 1)))
    return check_monoidal_laws(T.with_family(sym=bad, sym_inv=bad))


def m_mix():
    S = _finrel()
    mx = S.mix
    bad_mix = dataclasses.replace(mx, mix=mx.mix.mutated((1, 1), _twist(mx.mix(1, 1))))
    S2 = CldcStructure(S.X, S.ldc, bad_mix, S.name, S.objects)
    return semiadditive_collapse_suite(S2, strict=False)


def m_duoidal():
    S = _finrel()
    L = S.ldc.replace(deltaL=S.deltaL.mutated((1, 1, 1), _twist))
    S2 = CldcStructure(S.X, L, S.mix, S.name, S.objects)
    return duoidal_suite(S2)


def m_frobenius():
    L = _finrel().ldc
    Fd = identity_frobenius(L)
    Fd.n_par = Fd.n_par.mutated((1, 1), Mor(2, 2, (2, 1)))
    return check_frobenius_linear(Fd)


def m_complement():
    L = K.bdl_to_cldc(zoo.boolean(2)).ldc
    C = L.cat
    g, tau = C.hom(L.tensor.ob(1, 2), L.bot)[0], C.hom(L.one, L.par.ob(1, 2))[0]
    return check_complementation_pair(L, ComplementationPair(1, 2, tau, g))


def m_theorem():
    S = _finrel()
    L = S.ldc.replace(deltaR=S.deltaR.mutated((1, 1, 1), _twist))
    S2 = CldcStructure(S.X, L, S.mix, S.name, S.objects)
    return cldc_theorem_suite(S2, strict=False)


MUTATIONS = [
    ("wrong injection leg in a left distributor component", m_wrong_injection),
    ("dropped symmetry in the right distributor", m_dropped_sigma),
    ("tensor unitor component twisted by an automorphism", m_unitor),
    ("non-natural associator component", m_associator),
    ("tensor symmetry component replaced by the identity", m_symmetry),
    ("mix component twisted", m_mix),
    ("left distributor twisted under the interchange", m_duoidal),
    ("par comparison of a Frobenius functor scrambled", m_frobenius),
    ("complementation unit and counit swapped", m_complement),
    ("right distributor routed through the wrong injection", m_theorem),
]


@pytest.mark.parametrize("label,mutation", MUTATIONS, ids=[m[1].__name__ for m in MUTATIONS])
def test_criterion_9_mutation_detected(label, mutation):
    bad = failures(mutation())
    ok = bool(bad) and all(r.witness is not None for r in bad)
    record(9, ok, f"{label}: " + (f"caught by {bad[0].law_id}" if bad else "NOT caught"))
    assert bad, label
    assert all(r.witness is not None for r in bad)


def test_criterion_9_count():
    assert len(MUTATIONS) == 10
