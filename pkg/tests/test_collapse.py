import pytest

from ldcbench import zoo
from ldcbench.collapse import (
    POSETAL_GROUP, SEMIADDITIVE_GROUP, check_semiadditive_functor, classify,
    distributivity_maps, posetal_collapse_suite, right_inverse, semiadditive_collapse_suite,
    slice_functor, strict_frobenius,
)
from ldcbench.construct import bdl_to_cldc, product_cldc, slice_over_bottom
from ldcbench.fincat import Family, Functor, Mor, identity_functor, is_isomorphism

from conftest import failures


def test_boolean_is_posetal(b2):
    cl = classify(b2)
    assert all(cl.group(POSETAL_GROUP).values())
    assert not any(cl.group(SEMIADDITIVE_GROUP).values())
    assert cl.mix_kind == "mix"


def test_finrel_is_semiadditive(finrel2):
    cl = classify(finrel2)
    assert all(cl.group(SEMIADDITIVE_GROUP).values())
    assert not any(cl.group(POSETAL_GROUP).values())
    assert cl.compact and not cl.posetal


def test_trivial_is_both():
    cl = classify(bdl_to_cldc(zoo.chain(1)))
    assert all(cl.group(POSETAL_GROUP).values())
    assert all(cl.group(SEMIADDITIVE_GROUP).values())
    assert cl.trivial


def test_chain_times_finrel_is_neither(c2):
    S1 = bdl_to_cldc(zoo.chain(2))
    from ldcbench.construct import semiadditive_to_cldc
    S2 = semiadditive_to_cldc(zoo.finrel_bicartesian(zoo.make_finrel(1)))
    cl = classify(product_cldc(S1, S2))
    flags = {k: v for k, v in cl.to_dict().items() if k != "mix_kind"}
    assert not any(f["value"] for f in flags.values())
    assert cl.mix_kind == "mix"


def test_classification_json_has_witnesses(finrel2):
    d = classify(finrel2).to_dict()
    assert d["posetal"]["value"] is False
    assert "witness" in d["posetal"]


def test_posetal_dL_top_top_inverse(c2):
    dm = distributivity_maps(c2)
    C = c2.cat
    top = c2.X.top
    for A in c2.objects:
        f = dm.dL(A, top, top)
        assert right_inverse(C, f) is not None


def test_finrel_dL_top_top_has_no_right_inverse(finrel2):
    dm = distributivity_maps(finrel2)
    C = finrel2.cat
    f = dm.dL(1, 0, 0)
    # brute force: no g with f;g = 1
    one = C.identity(f.dom)
    assert not any(C.compose(f, g) == one for g in C.hom(f.cod, f.dom))
    assert right_inverse(C, f) is None


def test_dL_flat_on_posetal(b2, c2):
    for S in (b2, c2):
        reps = {r.law_id: r for r in posetal_collapse_suite(S)}
        assert reps["posetal.dL_flat_inverse"].passed
        assert not failures(reps.values())


def test_posetal_suite_finrel(finrel2):
    assert not failures(posetal_collapse_suite(finrel2))


def test_semiadditive_suite(finrel2, b2):
    reps = {r.law_id: r for r in semiadditive_collapse_suite(finrel2)}
    assert reps["semiadd.partial_inverts_deltaL"].passed
    assert reps["semiadd.mix_inverse_is_psi"].passed
    assert not failures(reps.values())
    reps = {r.law_id: r for r in semiadditive_collapse_suite(b2)}
    assert reps["semiadd.partial_inverts_deltaL"].status == "skipped"
    assert not failures(reps.values())


def test_semiadditive_identity_functor(finrel2):
    Fd = strict_frobenius(finrel2, finrel2, identity_functor(finrel2.cat), "Id")
    assert not failures(check_semiadditive_functor(Fd))


def test_psi_incompatible_functor_fails(finrel2):
    Fd = strict_frobenius(finrel2, finrel2, identity_functor(finrel2.cat), "Id")
    base = Fd.m_tensor.resolver
    Fd.m_tensor = Family("m*", 2, lambda A, B: Mor(2, 2, (2, 1)) if (A, B) == (1, 1)
                         else base(A, B))
    reps = {r.law_id: r for r in check_semiadditive_functor(Fd)}
    assert reps["semiadd_functor.psi_square"].failed
    assert reps["semiadd_functor.frobenius_equivalence"].passed


def test_slice_restriction_of_projection():
    from ldcbench.construct import semiadditive_to_cldc
    S1 = bdl_to_cldc(zoo.chain(2))
    S2 = semiadditive_to_cldc(zoo.finrel_bicartesian(zoo.make_finrel(1)))
    P = product_cldc(S1, S2)
    proj = Functor(P.cat, S1.cat, lambda A: A[0], lambda f: f.data[0],
                   "pi")
    Fd = strict_frobenius(P, S1, proj, "pi")
    Fd.source, Fd.target = P.ldc, S1.ldc
    Pl, Sl = slice_over_bottom(P), slice_over_bottom(S1)
    G = slice_functor(Fd, Pl, Sl)
    assert not failures(check_semiadditive_functor(G))


def test_strict_mode_raises_on_disagreement(finrel2):
    from ldcbench.collapse import Classification, Flag
    from ldcbench.fincat import HardFailure
    import ldcbench.collapse as col
    orig = col._semiadditive_flags

    def broken(*a):
        out = orig(*a)
        out["compact"] = Flag(False)
        return out
    col._semiadditive_flags = broken
    try:
        with pytest.raises(HardFailure):
            classify(finrel2)
        cl = classify(finrel2, strict=False)
        assert any(r.failed for r in cl.reports)
    finally:
        col._semiadditive_flags = orig
