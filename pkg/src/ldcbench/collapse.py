"""Collapse results for CLDCs as classifiers and checkable implications.

Two groups of properties are computed independently and then compared:

* posetal group: posetal distributive, posetal, distributive, strict
  initial, costrict terminal;
* semi-additive group: semi-additive, compact, invertible distributors,
  isomix.

Within a group every flag must agree.  A disagreement means either the
instance is not a CLDC or the checker is broken, so it is a HardFailure.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .fincat import (Family, HardFailure, LawCheck, Mor, is_isomorphism, obj_label,
                     skipped)
from .ldc import FrobeniusFunctorData, check_frobenius_linear
from .limits import zero_structure
from .monoidal import derive_cartesian_monoidal, derive_cocartesian_monoidal

POSETAL_GROUP = ("posetal_distributive", "posetal", "distributive", "strict_initial",
                 "costrict_terminal")
SEMIADDITIVE_GROUP = ("semi_additive", "compact", "invertible_distributors", "isomix")


@dataclass
class Flag:
    value: bool
    witness: object = None

    def __bool__(self):
        return self.value


@dataclass
class Classification:
    flags: dict
    mix_kind: str | None = None
    reports: list = field(default_factory=list)

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name].value
        raise AttributeError(name)

    def group(self, names):
        return {k: self.flags[k].value for k in names}

    def to_dict(self):
        out = {}
        for k, f in self.flags.items():
            out[k] = {"value": f.value}
            if f.witness is not None:
                out[k]["witness"] = _witness_json(f.witness)
        out["mix_kind"] = self.mix_kind
        return out


def _witness_json(w):
    if isinstance(w, Mor):
        return {"dom": obj_label(w.dom), "cod": obj_label(w.cod), "data": repr(w.data)}
    if isinstance(w, tuple):
        return [_witness_json(x) for x in w]
    return obj_label(w) if not isinstance(w, (int, str, bool)) else w


@dataclass
class DistributivityMaps:
    """The canonical comparison d^L, d^R, the candidate inverse of d^L built
    from the linear distributors, and (when the mix map is invertible) the
    inverse of the left distributor."""
    dL: Family
    dR: Family
    dL_flat: Family
    partialR: Family | None = None


def distributivity_maps(S):
    X, L = S.X, S.ldc
    C = X.cat
    T = derive_cartesian_monoidal(X)
    i = C.identity

    def dL(A, B, D):
        return X.copair(T.idl(A, X.iota0(B, D)), T.idl(A, X.iota1(B, D)))

    def dR(A, B, D):
        return X.copair(T.idr(X.iota0(A, B), D), T.idr(X.iota1(A, B), D))

    def flat(A, B, D):
        BD = X.plus(B, D)
        return C.then(X.fx(X.diag(A), i(BD)), T.assoc(A, A, BD),
                      T.idl(A, L.deltaL(A, B, D)), T.sym(A, X.plus(X.times(A, B), D)),
                      L.deltaR(X.times(A, B), D, A), X.fp(i(X.times(A, B)), T.sym(D, A)))

    partial = None
    m_inv = is_isomorphism(C, X.b(X.top))
    if m_inv is not None:
        def zero(A, B):
            return C.then(X.t(A), m_inv, X.b(B))

        def partial_fn(A, B, D):
            left = X.copair(X.pi0(A, B), zero(D, A))
            right = X.fp(X.pi1(A, B), i(D))
            return X.pair(left, right)
        partial = Family("dR'", 3, partial_fn)
    return DistributivityMaps(Family("dL", 3, dL), Family("dR", 3, dR),
                              Family("dL_flat", 3, flat), partial)


def _objs(S, objects):
    return list(S.objects if objects is None else objects)


def _first_failure(pred, items):
    for t in items:
        if not pred(t):
            return t
    return None


def _posetal_flags(S, objs, dm):
    X = S.X
    C = X.cat
    pairs = [(A, B) for A in objs for B in objs]
    trip = list(itertools.product(objs, repeat=3))

    w = _first_failure(lambda p: C.hom_size(*p) <= 1, pairs)
    posetal = Flag(w is None, w)
    w = _first_failure(lambda t: is_isomorphism(C, dm.dL(*t)) is not None, trip)
    distributive = Flag(w is None, w)
    bot, top = X.bot, X.top
    w = None
    for A in objs:
        for f in C.hom(A, bot):
            if is_isomorphism(C, f) is None:
                w = f
                break
        if w is not None:
            break
    strict = Flag(w is None, w)
    w = None
    for A in objs:
        for f in C.hom(top, A):
            if is_isomorphism(C, f) is None:
                w = f
                break
        if w is not None:
            break
    costrict = Flag(w is None, w)
    pd = Flag(posetal.value and distributive.value, posetal.witness or distributive.witness)
    return {"posetal_distributive": pd, "posetal": posetal, "distributive": distributive,
            "strict_initial": strict, "costrict_terminal": costrict}


def _semiadditive_flags(S, objs, mixdata):
    X, L = S.X, S.ldc
    C = X.cat
    pairs = [(A, B) for A in objs for B in objs]
    zs = zero_structure(X)
    if zs is None:
        semi = Flag(False, (X.bot, X.top))
    else:
        w = _first_failure(lambda p: zs.psi_inv(*p) is not None, pairs)
        semi = Flag(w is None, w)
    m = X.b(X.top)
    isomix = Flag(is_isomorphism(C, m) is not None, None if zs else m)
    w = _first_failure(lambda p: is_isomorphism(C, mixdata.mix(*p)) is not None, pairs)
    compact = Flag(isomix.value and w is None, w)
    trip = list(itertools.product(objs, repeat=3))
    w = _first_failure(lambda t: is_isomorphism(C, L.deltaL(*t)) is not None
                       and is_isomorphism(C, L.deltaR(*t)) is not None, trip)
    inv = Flag(w is None, w)
    return {"semi_additive": semi, "compact": compact, "invertible_distributors": inv,
            "isomix": isomix}


def classify(S, objects=None, bound=12, strict=True):
    """Classification of a certified CLDC.  With ``strict`` a disagreement
    inside either equivalence group raises HardFailure."""
    from .cldc import cldc_mix
    objs = _objs(S, objects)
    C = S.cat
    mixdata = S.mix or cldc_mix(S, objs, bound)
    dm = distributivity_maps(S)
    flags = _posetal_flags(S, objs, dm)
    flags.update(_semiadditive_flags(S, objs, mixdata))
    w = _first_failure(lambda p: C.hom_size(*p) == 1, [(A, B) for A in objs for B in objs])
    flags["trivial"] = Flag(w is None, w)
    cl = Classification(flags, mixdata.kind)
    for gid, names in (("classify.posetal_group", POSETAL_GROUP),
                       ("classify.semiadditive_group", SEMIADDITIVE_GROUP)):
        chk = LawCheck(gid, C)
        vals = cl.group(names)
        chk.claim((), len(set(vals.values())) == 1,
                  [f"{k}={v}" for k, v in vals.items()], ["all equal"])
        rep = chk.report()
        cl.reports.append(rep)
        if strict and rep.failed:
            raise HardFailure(f"{S.name}: {gid} disagrees: {vals}", rep)
    return cl


# ---------------------------------------------------------------- posetal collapse

def right_inverse(C, f):
    """Some g with f;g = 1, by exhaustive search."""
    one = C.identity(f.dom)
    for g in C.hom(f.cod, f.dom):
        if C.eq(C.compose(f, g), one):
            return g
    return None


def posetal_collapse_suite(S, objects=None, strict=True):
    X, L = S.X, S.ldc
    C = X.cat
    objs = _objs(S, objects)
    T = derive_cartesian_monoidal(X)
    P = derive_cocartesian_monoidal(X)
    dm = distributivity_maps(S)
    top = X.top
    i = C.identity
    reps = []

    posetal = all(C.hom_size(A, B) <= 1 for A in objs for B in objs)
    ri = LawCheck("posetal.dL_top_top_right_inverse", C)
    found = {}
    for A in objs:
        found[A] = right_inverse(C, dm.dL(A, top, top))
    every = all(g is not None for g in found.values())
    missing = [A for A, g in found.items() if g is None]
    ri.claim(tuple(missing[:1]), every == posetal,
             [f"right inverse for every A: {every}"], [f"posetal: {posetal}"])
    reps.append(ri.report())

    lem = LawCheck("posetal.strict_initial_lemma", C)
    for A, B, D in itertools.product(objs, repeat=3):
        lhs = C.then(T.idl(A, X.iota0(B, D)), T.sym(A, X.plus(B, D)), L.deltaR(B, D, A),
                     P.idl(B, T.sym(D, A)))
        rhs = C.compose(X.pi1(A, B), X.iota0(B, X.times(A, D)))
        if not C.eq(lhs, rhs):
            continue
        d, fl = dm.dL(A, B, D), dm.dL_flat(A, B, D)
        lem.compare((A, B, D), [("dL", d), ("dL_flat", fl)], [("1", i(d.dom))])
    reps.append(lem.report())

    si = LawCheck("posetal.strict_initial_iff", C)
    strict_init = all(is_isomorphism(C, f) is not None for A in objs for f in C.hom(A, X.bot))
    si.claim((), strict_init == posetal, [f"strict initial: {strict_init}"],
             [f"posetal: {posetal}"])
    reps.append(si.report())

    if posetal:
        fi = LawCheck("posetal.dL_flat_inverse", C)
        for t in itertools.product(objs, repeat=3):
            d, fl = dm.dL(*t), dm.dL_flat(*t)
            fi.compare(t, [("dL_flat", fl), ("dL", d)], [("1", i(fl.dom))])
        reps.append(fi.report())
    _raise_on(strict, S, reps)
    return reps


def _raise_on(strict, S, reps):
    bad = [r for r in reps if r.failed]
    if strict and bad:
        raise HardFailure(f"{S.name}: {bad[0]}", bad[0])


# ---------------------------------------------------------------- semi-additive collapse

def semiadditive_collapse_suite(S, objects=None, strict=True):
    from .cldc import cldc_mix
    X, L = S.X, S.ldc
    C = X.cat
    objs = _objs(S, objects)
    i = C.identity
    dm = distributivity_maps(S)
    reps = []
    mixdata = S.mix or cldc_mix(S, objs)

    if dm.partialR is not None:
        inv = LawCheck("semiadd.partial_inverts_deltaL", C)
        for t in itertools.product(objs, repeat=3):
            d, p = L.deltaL(*t), dm.partialR(*t)
            inv.compare(t, [("dL", d), ("d'", p)], [("1", i(d.dom))])
            inv.compare(t, [("d'", p), ("dL", d)], [("1", i(p.dom))])
        reps.append(inv.report())
        zs = zero_structure(X)
        mp = LawCheck("semiadd.mix_inverse_is_psi", C)
        for A in objs:
            for B in objs:
                mx, psi = mixdata.mix(A, B), zs.psi(A, B)
                mp.compare((A, B), [("mix", mx), ("psi", psi)], [("1", i(mx.dom))])
                mp.compare((A, B), [("psi", psi), ("mix", mx)], [("1", i(psi.dom))])
        reps.append(mp.report())
    else:
        note = "m is not invertible"
        reps += [skipped("semiadd.partial_inverts_deltaL", note),
                 skipped("semiadd.mix_inverse_is_psi", note)]

    trip = list(itertools.product(objs, repeat=3))
    invertible = all(is_isomorphism(C, L.deltaL(*t)) is not None
                     and is_isomorphism(C, L.deltaR(*t)) is not None for t in trip)
    tb = LawCheck("semiadd.invertible_forces_zero", C)
    if invertible:
        tb.claim((X.bot,), is_isomorphism(C, X.t(X.bot)) is not None,
                 ["distributors invertible"], ["t_bot iso"], X.t(X.bot))
    reps.append(tb.report())

    orth = LawCheck("semiadd.orthogonality", C)
    posetal = all(C.hom_size(A, B) <= 1 for A in objs for B in objs)
    semi = dm.partialR is not None and all(
        zero_structure(X).psi_inv(A, B) is not None for A in objs for B in objs)
    if posetal and semi:
        for A in objs:
            orth.claim((A,), C.hom_size(A, X.bot) == 1
                       and is_isomorphism(C, X.t(A)) is not None,
                       ["posetal and semi-additive"], [f"{obj_label(A)} is a zero object"])
    reps.append(orth.report())
    _raise_on(strict, S, reps)
    return reps


# ---------------------------------------------------------------- functors

def check_semiadditive_functor(Fd, objects=None, bound=12, prefix="semiadd_functor"):
    """Monoidality of (F, m) for products and (F, n) for coproducts, the two
    psi squares, and agreement with the Frobenius linear check on the same
    data.  Returns a list of reports; the equivalence report fails when one
    check passes and the other does not."""
    Sx, Sy = Fd.source, Fd.target
    F = Fd.functor
    X, Y = Sx.X, Sy.X
    D = Y.cat
    objs = list(Sx.objects if objects is None else objects)
    zx, zy = zero_structure(X), zero_structure(Y)
    if zx is None or zy is None:
        raise HardFailure("semi-additive functor check needs zero objects on both sides")
    Ld = FrobeniusFunctorData(Sx.ldc, Sy.ldc, F, Fd.m_one, Fd.m_tensor, Fd.n_bot,
                              Fd.n_par, Fd.name)
    frob = check_frobenius_linear(Ld, objs, bound, prefix=f"{prefix}.frobenius")
    mono = [r for r in frob if r.law_id.split(".")[-1].startswith(("lax", "colax"))]
    sq1 = LawCheck(f"{prefix}.psi_square", D)
    sq2 = LawCheck(f"{prefix}.psi_inverse_square", D)
    Fo, Fm = F.obj, F.mor
    for A in objs:
        for B in objs:
            FA, FB = Fo(A), Fo(B)
            sq1.compare((A, B), [(("n+", (A, B)), Fd.n_par(A, B)), ("psi", zy.psi(FA, FB)),
                                 (("mx", (A, B)), Fd.m_tensor(A, B))],
                        [("F(psi)", Fm(zx.psi(A, B)))])
            sq2.compare((A, B), [(("mx", (A, B)), Fd.m_tensor(A, B)),
                                 ("F(psi^-1)", Fm(zx.psi_inv(A, B))),
                                 (("n+", (A, B)), Fd.n_par(A, B))],
                        [("psi^-1", zy.psi_inv(FA, FB))])
    own = mono + [sq1.report(), sq2.report()]
    eq = LawCheck(f"{prefix}.frobenius_equivalence", D)
    a = all(r.passed for r in own)
    b = all(r.passed for r in frob)
    eq.claim((), a == b, [f"semi-additive: {a}"], [f"Frobenius linear: {b}"])
    return own + [eq.report()]


def slice_functor(Fd, Sx_slice, Sy_slice):
    """Restriction of a Frobenius cartesian linear functor to the slices over
    the par units; products and coproducts are inherited, so only the unit
    comparison changes."""
    Y = Sy_slice.X
    m_one = Y.b(Fd.functor.obj(Sx_slice.X.top))
    return FrobeniusFunctorData(Sx_slice, Sy_slice, Fd.functor, m_one, Fd.m_tensor,
                                Fd.n_bot, Fd.n_par, f"{Fd.name}/bot")


def strict_frobenius(S1, S2, functor, name="F"):
    """Frobenius data with identity comparison maps, for functors that
    preserve the chosen structure on the nose."""
    Y = S2.X
    D = Y.cat
    i = D.identity
    return FrobeniusFunctorData(
        S1, S2, functor, i(Y.top),
        Family("m*", 2, lambda A, B: i(Y.times(functor.obj(A), functor.obj(B)))),
        i(Y.bot), Family("n|", 2, lambda A, B: i(Y.plus(functor.obj(A), functor.obj(B)))),
        name)
