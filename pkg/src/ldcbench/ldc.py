"""Linearly distributive structure: laws, mix, complements, Frobenius functors.

The usual par maps are expressed through the stored par families:
    A par (B par C) -> (A par B) par C   is  par.assoc_inv
    A par bot -> A                       is  par.runit_inv
    bot par A -> A                       is  par.lunit_inv
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .fincat import (CompositionError, Family, FamilyTypeError, Functor,
                     HardFailure, LawCheck, Mor, compose_functors,
                     identity_functor, is_isomorphism, run_path, skipped,
                     tuple_plan)
from .monoidal import (TensorInverseWitness, check_monoidal_laws,
                       check_tensor_inverse, degenerate_ldc, mark_sampled,
                       shifted_tensor_ldc)


class LdcStructure:
    def __init__(self, cat, tensor, par, deltaL, deltaR, name="ldc", objects=None):
        self.cat = cat
        self.tensor = tensor
        self.par = par
        self.name = name
        self.objects = tuple(cat.objects if objects is None else objects)
        T, P = tensor.ob, par.ob
        self.deltaL = _family(deltaL, "dL", lambda A, B, C: T(A, P(B, C)),
                              lambda A, B, C: P(T(A, B), C))
        self.deltaR = _family(deltaR, "dR", lambda A, B, C: T(P(A, B), C),
                              lambda A, B, C: P(A, T(B, C)))

    @property
    def symmetric(self):
        return self.tensor.symmetric and self.par.symmetric

    @property
    def one(self):
        return self.tensor.unit

    @property
    def bot(self):
        return self.par.unit

    def replace(self, **kw):
        args = dict(cat=self.cat, tensor=self.tensor, par=self.par, deltaL=self.deltaL,
                    deltaR=self.deltaR, name=self.name, objects=self.objects)
        args.update(kw)
        return LdcStructure(**args)


def _family(f, name, dom, cod):
    if isinstance(f, Family):
        if f.dom is None:
            f.dom, f.cod = dom, cod
        return f
    return Family(name, 3, f, dom, cod)


def _objs(L, objects):
    return list(L.objects if objects is None else objects)


# ---------------------------------------------------------------- axioms

LDC_LAW_IDS = [f"ldc.unit.{i}" for i in range(1, 5)] + \
              [f"ldc.assoc.{i}" for i in range(1, 5)] + \
              ["ldc.leftright.1", "ldc.leftright.2"]


def check_ldc_laws(L, objects=None, bound=12):
    """One report per distributor axiom: four unit, four associator and two
    left/right compatibility equations."""
    try:
        return _ldc_laws(L, _objs(L, objects), bound)
    except FamilyTypeError as e:
        raise HardFailure(str(e)) from e


def _ldc_laws(L, objs, bound):
    checks = [LawCheck(x, L.cat) for x in LDC_LAW_IDS]
    instances, sampled = ldc_law_instances(L, objs, bound)
    for k, w, thunk in instances:
        checks[k].compare(w, thunk)
    note = f"sampled {len(tuple_plan(objs, 4, bound)[0])} of {len(objs)} objects" if sampled else ""
    return ([c.report() for c in checks[:4]]
            + [mark_sampled(c.report(note), sampled) for c in checks[4:]])


def ldc_law_instances(L, objs, bound=12):
    """Every instance of the ten distributor axioms as (law index, objects,
    thunk); the thunk builds both step lists on demand, so a partially
    tabulated distributor only fails on the instances that touch it."""
    C, T, P = L.cat, L.tensor, L.par
    t, p = T.ob, P.ob
    one, bot = L.one, L.bot
    dL, dR = L.deltaL, L.deltaR
    aT = T.assoc
    aP = P.assoc_inv            # A par (B par C) -> (A par B) par C
    uRP, uLP = P.runit_inv, P.lunit_inv
    i = C.identity
    out = []

    def pairs(A, B):
        return [
            (0, lambda: ([T.lunit.step(p(A, B)), dL.step(one, A, B)],
                         [("uL*|1", P.ar(T.lunit(A), i(B)))])),
            (1, lambda: ([T.runit.step(p(A, B)), dR.step(A, B, one)],
                         [("1|uR*", P.ar(i(A), T.runit(B)))])),
            (2, lambda: ([dL.step(A, B, bot), uRP.step(t(A, B))],
                         [("1*uR|", T.ar(i(A), uRP(B)))])),
            (3, lambda: ([dR.step(bot, A, B), uLP.step(t(A, B))],
                         [("uL|*1", T.ar(uLP(A), i(B)))])),
        ]

    def quads(A, B, Cc, D):
        return [
            (4, lambda: ([dL.step(t(A, B), Cc, D), ("a*|1", P.ar(aT(A, B, Cc), i(D)))],
                         [aT.step(A, B, p(Cc, D)), ("1*dL", T.ar(i(A), dL(B, Cc, D))),
                          dL.step(A, t(B, Cc), D)])),
            (5, lambda: ([("a|*1", T.ar(aP(A, B, Cc), i(D))), dR.step(p(A, B), Cc, D)],
                         [dR.step(A, p(B, Cc), D), ("1|dR", P.ar(i(A), dR(B, Cc, D))),
                          (("a|", (A, B, t(Cc, D))), aP(A, B, t(Cc, D)))])),
            (6, lambda: ([aT.step(p(A, B), Cc, D), dR.step(A, B, t(Cc, D))],
                         [("dR*1", T.ar(dR(A, B, Cc), i(D))), dR.step(A, t(B, Cc), D),
                          ("1|a*", P.ar(i(A), aT(B, Cc, D)))])),
            (7, lambda: ([dL.step(A, B, p(Cc, D)),
                          (("a|", (t(A, B), Cc, D)), aP(t(A, B), Cc, D))],
                         [("1*a|", T.ar(i(A), aP(B, Cc, D))), dL.step(A, p(B, Cc), D),
                          ("dL|1", P.ar(dL(A, B, Cc), i(D)))])),
            (8, lambda: ([dL.step(p(A, B), Cc, D), ("dR|1", P.ar(dR(A, B, Cc), i(D)))],
                         [dR.step(A, B, p(Cc, D)), ("1|dL", P.ar(i(A), dL(B, Cc, D))),
                          (("a|", (A, t(B, Cc), D)), aP(A, t(B, Cc), D))])),
            (9, lambda: ([("dL*1", T.ar(dL(A, B, Cc), i(D))), dR.step(t(A, B), Cc, D)],
                         [aT.step(A, p(B, Cc), D), ("1*dR", T.ar(i(A), dR(B, Cc, D))),
                          dL.step(A, B, t(Cc, D))])),
        ]

    for A in objs:
        for B in objs:
            out += [(k, (A, B), th) for k, th in pairs(A, B)]
    quad, sampled = tuple_plan(objs, 4, bound)
    for A in quad:
        for B in quad:
            for Cc in quad:
                for D in quad:
                    out += [(k, (A, B, Cc, D), th) for k, th in quads(A, B, Cc, D)]
    return out, sampled


def check_distributor_naturality(L, objects=None, bound=12):
    C, T, P = L.cat, L.tensor, L.par
    objs = _objs(L, objects)
    tri, sampled = tuple_plan(objs, 4, bound)
    i = C.identity
    reps = []
    for fam, name, build in (
            (L.deltaL, "ldc.deltaL.natural",
             lambda fA, fB, fC: (T.ar(fA, P.ar(fB, fC)), P.ar(T.ar(fA, fB), fC))),
            (L.deltaR, "ldc.deltaR.natural",
             lambda fA, fB, fC: (T.ar(P.ar(fA, fB), fC), P.ar(fA, T.ar(fB, fC))))):
        chk = LawCheck(name, C)
        arrows = [f for A in tri for B in tri for f in C.hom(A, B)]
        for f in arrows:
            for X in tri:
                for Y in tri:
                    for pos in range(3):
                        legs = [i(X), i(Y)]
                        legs.insert(pos, f)
                        src = [g.dom for g in legs]
                        tgt = [g.cod for g in legs]
                        before, after = build(*legs)
                        chk.compare(tuple(src) + (f.cod,),
                                    [("F(f)", before), fam.step(*tgt)],
                                    [fam.step(*src), ("G(f)", after)])
        note = f"sampled {len(tri)} of {len(objs)} objects" if sampled else ""
        reps.append(mark_sampled(chk.report(note), sampled))
    return reps


def check_sldc_symmetry(L, objects=None, bound=12):
    """dR equals the symmetry conjugate of dL."""
    if not L.symmetric:
        return skipped("sldc.symmetry", "structures not symmetric")
    C = L.cat
    objs = _objs(L, objects)
    tri, sampled = tuple_plan(objs, 3, bound)
    chk = LawCheck("sldc.symmetry", C)
    for A in tri:
        for B in tri:
            for D in tri:
                chk.compare((A, B, D), [L.deltaR.step(A, B, D)], symmetric_deltaR_path(L, A, B, D))
    return mark_sampled(chk.report(), sampled)


def symmetric_deltaR_path(L, A, B, D):
    C, T, P = L.cat, L.tensor, L.par
    return [T.sym.step(P.ob(A, B), D),
            ("1*s|", T.ar(C.identity(D), P.sym(A, B))),
            L.deltaL.step(D, B, A),
            ("s*|1", P.ar(T.sym(D, B), C.identity(A))),
            P.sym.step(T.ob(B, D), A)]


def deltaR_from_deltaL(L, memo=True):
    """The right distributor determined by the left one and the symmetries."""
    return Family("dR", 3, lambda A, B, D: run_path(L.cat, symmetric_deltaR_path(L, A, B, D)),
                  memo=memo)


def check_ldc_suite(L, objects=None, bound=12, symmetric=True):
    objs = _objs(L, objects)
    reps = check_monoidal_laws(L.tensor, objs, bound, "tensor")
    reps += check_monoidal_laws(L.par, objs, bound, "par")
    reps += check_distributor_naturality(L, objs, bound)
    reps += check_ldc_laws(L, objs, bound)
    if symmetric and L.symmetric:
        reps.append(check_sldc_symmetry(L, objs, bound))
    return reps


# ---------------------------------------------------------------- mix

@dataclass
class MixData:
    m: Mor
    mix: Family
    kind: str = "mix"
    reports: list = field(default_factory=list)


def mix_top(L, m, A, B):
    C, T, P = L.cat, L.tensor, L.par
    i = C.identity
    return [("1*uL|^-1", T.ar(i(A), P.lunit(B))),
            ("1*(m|1)", T.ar(i(A), P.ar(m, i(B)))),
            L.deltaL.step(A, L.one, B),
            ("uR*^-1|1", P.ar(L.tensor.runit_inv(A), i(B)))]


def mix_bottom(L, m, A, B):
    C, T, P = L.cat, L.tensor, L.par
    i = C.identity
    return [("uR|^-1*1", T.ar(P.runit(A), i(B))),
            ("(1|m)*1", T.ar(P.ar(i(A), m), i(B))),
            L.deltaR.step(A, L.one, B),
            ("1|uL*^-1", P.ar(i(A), L.tensor.lunit_inv(B)))]


def mix_family(L, m):
    C = L.cat
    return Family("mix", 2, lambda A, B: run_path(C, mix_top(L, m, A, B)),
                  lambda A, B: L.tensor.ob(A, B), lambda A, B: L.par.ob(A, B))


def check_mix_square(L, m, objects=None, law_id="mix.square"):
    chk = LawCheck(law_id, L.cat)
    for A in _objs(L, objects):
        for B in _objs(L, objects):
            chk.compare((A, B), mix_top(L, m, A, B), mix_bottom(L, m, A, B))
    return chk.report()


def _unit_cases(L):
    one, bot = L.one, L.bot
    return [(one, one), (bot, bot), (bot, one), (one, bot)]


def find_mix(L, objects=None):
    """Nullary mix maps located with the unit-instance shortcut and then
    confirmed on every bounded pair."""
    C = L.cat
    for m in C.hom(L.bot, L.one):
        hits = [C.eq(_run(C, mix_top(L, m, A, B)), _run(C, mix_bottom(L, m, A, B)))
                for A, B in _unit_cases(L)]
        if not any(hits):
            continue
        full = check_mix_square(L, m, objects)
        if full.failed or not all(hits):
            raise HardFailure(
                f"mix shortcut accepted {C.mor_label(m)} but the square fails: {full}", full)
        return m, full
    return None, None


def _run(C, steps):
    return run_path(C, steps)


def check_mix_associators(L, mix, objects=None, bound=12):
    C, T, P = L.cat, L.tensor, L.par
    i = C.identity
    objs = _objs(L, objects)
    tri, sampled = tuple_plan(objs, 3, bound)
    ids = ["mix.assoc.left_top", "mix.assoc.left_bottom",
           "mix.assoc.right_top", "mix.assoc.right_bottom"]
    c = [LawCheck(x, C) for x in ids]
    t, p = T.ob, P.ob
    for A in tri:
        for B in tri:
            for D in tri:
                w = (A, B, D)
                c[0].compare(w, [("1*mix", T.ar(i(A), mix(B, D))), L.deltaL.step(A, B, D)],
                             [T.assoc_inv.step(A, B, D), mix.step(t(A, B), D)])
                c[1].compare(w, [L.deltaL.step(A, B, D), ("mix|1", P.ar(mix(A, B), i(D)))],
                             [mix.step(A, p(B, D)), (("a|", w), P.assoc_inv(A, B, D))])
                c[2].compare(w, [T.assoc.step(A, B, D), mix.step(A, t(B, D))],
                             [("mix*1", T.ar(mix(A, B), i(D))), L.deltaR.step(A, B, D)])
                c[3].compare(w, [L.deltaR.step(A, B, D), ("1|mix", P.ar(i(A), mix(B, D)))],
                             [mix.step(p(A, B), D), (("a|^-1", w), P.assoc(A, B, D))])
    return [mark_sampled(x.report(), sampled) for x in c]


def check_mix_naturality(L, mix, objects=None):
    C, T, P = L.cat, L.tensor, L.par
    i = C.identity
    objs = _objs(L, objects)
    chk = LawCheck("mix.natural", C)
    for f in [f for A in objs for B in objs for f in C.hom(A, B)]:
        for X in objs:
            chk.compare((f.dom, f.cod, X), [("f*1", T.ar(f, i(X))), mix.step(f.cod, X)],
                        [mix.step(f.dom, X), ("f|1", P.ar(f, i(X)))])
            chk.compare((X, f.dom, f.cod), [("1*f", T.ar(i(X), f)), mix.step(X, f.cod)],
                        [mix.step(X, f.dom), ("1|f", P.ar(i(X), f))])
    return chk.report()


def mix_analysis(L, objects=None, bound=12):
    """MixData with kind in {mix, isomix, compact}, or None when no nullary
    mix map exists."""
    C = L.cat
    m, square = find_mix(L, objects)
    if m is None:
        return None
    mix = mix_family(L, m)
    reps = [square, check_mix_naturality(L, mix, objects)]
    reps += check_mix_associators(L, mix, objects, bound)
    kind = "mix"
    if is_isomorphism(C, m) is not None:
        kind = "isomix"
        objs = _objs(L, objects)
        if all(is_isomorphism(C, mix(A, B)) is not None for A in objs for B in objs):
            kind = "compact"
    return MixData(m, mix, kind, reps)


# ---------------------------------------------------------------- complements

@dataclass
class ComplementationPair:
    A: Any
    Ac: Any
    gamma: Mor
    tau: Mor


def check_complementation_pair(L, pair, law_id="complement"):
    C, T, P = L.cat, L.tensor, L.par
    i = C.identity
    A, Ac, g, tau = pair.A, pair.Ac, pair.gamma, pair.tau
    s1 = LawCheck(f"{law_id}.snake.1", C)
    s2 = LawCheck(f"{law_id}.snake.2", C)
    try:
        s1.compare((A, Ac), [T.runit.step(A), ("1*tau", T.ar(i(A), tau)),
                             L.deltaL.step(A, Ac, A), ("gamma|1", P.ar(g, i(A))),
                             P.lunit_inv.step(A)], [("1", i(A))])
        s2.compare((A, Ac), [T.lunit.step(Ac), ("tau*1", T.ar(tau, i(Ac))),
                             L.deltaR.step(Ac, A, Ac), ("1|gamma", P.ar(i(Ac), g)),
                             P.runit_inv.step(Ac)], [("1", i(Ac))])
    except (CompositionError, FamilyTypeError) as e:      # ill-typed candidate
        s1.claim((A, Ac), False, ["ill-typed"], [str(e)])
    return [s1.report(), s2.report()]


def pair_ok(L, pair):
    return all(r.passed for r in check_complementation_pair(L, pair))


def units_pair(L):
    return ComplementationPair(L.bot, L.one, L.tensor.runit_inv(L.bot), L.par.runit(L.one))


def complement_adjunction(L, pair, B, Cobj):
    """Forward and backward maps between hom(A*B, C) and hom(B, A^c | C),
    checked to be mutually inverse."""
    C, T, P = L.cat, L.tensor, L.par
    i = C.identity
    A, Ac = pair.A, pair.Ac

    def fwd(f):
        return C.then(T.lunit(B), T.ar(pair.tau, i(B)), L.deltaR(Ac, A, B), P.ar(i(Ac), f))

    def bwd(g):
        return C.then(T.ar(i(A), g), L.deltaL(A, Ac, Cobj), P.ar(pair.gamma, i(Cobj)),
                      P.lunit_inv(Cobj))

    left = C.hom(T.ob(A, B), Cobj)
    right = C.hom(B, P.ob(Ac, Cobj))
    table = {f: fwd(f) for f in left}
    for f, g in table.items():
        if bwd(g) != f:
            raise HardFailure(f"complement round trip fails at {C.mor_label(f)}")
    for g in right:
        if fwd(bwd(g)) != g:
            raise HardFailure(f"complement round trip fails at {C.mor_label(g)}")
    return table, len(left), len(right)


def find_negation(L, objects=None):
    """Assign to every object A a (A', gammaR, tauR) whose two induced pairs
    certify, or return None."""
    if not L.symmetric:
        return None
    C, T, P = L.cat, L.tensor, L.par
    objs = _objs(L, objects)
    out = {}
    for A in objs:
        found = None
        for B in objs:
            for g in C.hom(T.ob(A, B), L.bot):
                gL = C.compose(T.sym(B, A), g)
                for tau in C.hom(L.one, P.ob(A, B)):
                    tL = C.compose(tau, P.sym(A, B))
                    if (pair_ok(L, ComplementationPair(A, B, g, tL))
                            and pair_ok(L, ComplementationPair(B, A, gL, tau))):
                        found = (B, g, tau)
                        break
                if found:
                    break
            if found:
                break
        if found is None:
            return None
        out[A] = found
    return out


# ---------------------------------------------------------------- functors

@dataclass
class FrobeniusFunctorData:
    source: LdcStructure
    target: LdcStructure
    functor: Functor
    m_one: Mor
    m_tensor: Any
    n_bot: Mor
    n_par: Any
    name: str = "F"


def check_frobenius_linear(Fd, objects=None, bound=12, prefix="frobenius"):
    X, Y = Fd.source, Fd.target
    F = Fd.functor
    C, D = X.cat, Y.cat
    i = D.identity
    objs = _objs(X, objects)
    XT, XP, YT, YP = X.tensor, X.par, Y.tensor, Y.par
    Fo, Fm = F.obj, F.mor
    m, n = Fd.m_tensor, Fd.n_par
    ids = ["lax_assoc", "lax_unit_right", "lax_unit_left", "lax_natural",
           "colax_assoc", "colax_unit_right", "colax_unit_left", "colax_natural",
           "deltaL_square", "deltaR_square"]
    c = {k: LawCheck(f"{prefix}.{k}", D) for k in ids}
    tri, sampled = tuple_plan(objs, 3, bound)
    try:
        for A in objs:
            c["lax_unit_right"].compare(
                (A,), [YT.runit.step(Fo(A)), ("1*m1", YT.ar(i(Fo(A)), Fd.m_one)),
                       (("m*", (A, X.one)), m(A, X.one))],
                [("F(uR*)", Fm(XT.runit(A)))])
            c["lax_unit_left"].compare(
                (A,), [YT.lunit.step(Fo(A)), ("m1*1", YT.ar(Fd.m_one, i(Fo(A)))),
                       (("m*", (X.one, A)), m(X.one, A))],
                [("F(uL*)", Fm(XT.lunit(A)))])
            c["colax_unit_right"].compare(
                (A,), [("F(uR|)", Fm(XP.runit(A))), (("n|", (A, X.bot)), n(A, X.bot)),
                       ("1|n0", YP.ar(i(Fo(A)), Fd.n_bot))],
                [YP.runit.step(Fo(A))])
            c["colax_unit_left"].compare(
                (A,), [("F(uL|)", Fm(XP.lunit(A))), (("n|", (X.bot, A)), n(X.bot, A)),
                       ("n0|1", YP.ar(Fd.n_bot, i(Fo(A))))],
                [YP.lunit.step(Fo(A))])
        arrows = [f for A in tri for B in tri for f in C.hom(A, B)]
        for f in arrows:
            for Z in tri:
                fZ, Zf = (f, C.identity(Z)), (C.identity(Z), f)
                for a, b in (fZ, Zf):
                    c["lax_natural"].compare(
                        (a.dom, b.dom, a.cod, b.cod),
                        [("Ff*Fg", YT.ar(Fm(a), Fm(b))), (("m*", (a.cod, b.cod)), m(a.cod, b.cod))],
                        [(("m*", (a.dom, b.dom)), m(a.dom, b.dom)), ("F(f*g)", Fm(XT.ar(a, b)))])
                    c["colax_natural"].compare(
                        (a.dom, b.dom, a.cod, b.cod),
                        [("F(f|g)", Fm(XP.ar(a, b))), (("n|", (a.cod, b.cod)), n(a.cod, b.cod))],
                        [(("n|", (a.dom, b.dom)), n(a.dom, b.dom)), ("Ff|Fg", YP.ar(Fm(a), Fm(b)))])
        for A in tri:
            for B in tri:
                for E in tri:
                    w = (A, B, E)
                    FA, FB, FE = Fo(A), Fo(B), Fo(E)
                    c["lax_assoc"].compare(
                        w, [("m*1", YT.ar(m(A, B), i(FE))), (("m*", (XT.ob(A, B), E)), m(XT.ob(A, B), E)),
                            ("F(a*)", Fm(XT.assoc(A, B, E)))],
                        [YT.assoc.step(FA, FB, FE), ("1*m", YT.ar(i(FA), m(B, E))),
                         (("m*", (A, XT.ob(B, E))), m(A, XT.ob(B, E)))])
                    c["colax_assoc"].compare(
                        w, [("F(a|)", Fm(XP.assoc(A, B, E))), (("n|", (A, XP.ob(B, E))), n(A, XP.ob(B, E))),
                            ("1|n", YP.ar(i(FA), n(B, E)))],
                        [(("n|", (XP.ob(A, B), E)), n(XP.ob(A, B), E)), ("n|1", YP.ar(n(A, B), i(FE))),
                         YP.assoc.step(FA, FB, FE)])
                    c["deltaL_square"].compare(
                        w, [(("m*", (A, XP.ob(B, E))), m(A, XP.ob(B, E))),
                            ("F(dL)", Fm(X.deltaL(A, B, E))),
                            (("n|", (XT.ob(A, B), E)), n(XT.ob(A, B), E))],
                        [("1*n", YT.ar(i(FA), n(B, E))), Y.deltaL.step(FA, FB, FE),
                         ("m|1", YP.ar(m(A, B), i(FE)))])
                    c["deltaR_square"].compare(
                        w, [(("m*", (XP.ob(A, B), E)), m(XP.ob(A, B), E)),
                            ("F(dR)", Fm(X.deltaR(A, B, E))),
                            (("n|", (A, XT.ob(B, E))), n(A, XT.ob(B, E)))],
                        [("n*1", YT.ar(n(A, B), i(FE))), Y.deltaR.step(FA, FB, FE),
                         ("1|m", YP.ar(i(FA), m(B, E)))])
    except FamilyTypeError as e:
        raise HardFailure(str(e)) from e
    out = []
    for k in ids:
        r = c[k].report()
        if k in ("lax_assoc", "colax_assoc", "deltaL_square", "deltaR_square",
                 "lax_natural", "colax_natural"):
            mark_sampled(r, sampled)
        out.append(r)
    return out


def check_mix_frobenius(Fd, mx_source, mx_target, objects=None, prefix="frobenius"):
    Y = Fd.target
    D = Y.cat
    F = Fd.functor
    unit = LawCheck(f"{prefix}.mix_unit", D)
    unit.compare((Fd.source.bot,), [("n0", Fd.n_bot), ("m", mx_target.m), ("m1", Fd.m_one)],
                 [("F(m)", F.mor(mx_source.m))])
    pres = LawCheck(f"{prefix}.mix_preserved", D)
    for A in _objs(Fd.source, objects):
        for B in _objs(Fd.source, objects):
            pres.compare((A, B), [(("m*", (A, B)), Fd.m_tensor(A, B)),
                                  ("F(mix)", F.mor(mx_source.mix(A, B))),
                                  (("n|", (A, B)), Fd.n_par(A, B))],
                         [mx_target.mix.step(F.obj(A), F.obj(B))])
    return [unit.report(), pres.report()]


def identity_frobenius(L):
    C = L.cat
    i = C.identity
    return FrobeniusFunctorData(
        L, L, identity_functor(C), i(L.one),
        Family("m*", 2, lambda A, B: i(L.tensor.ob(A, B))), i(L.bot),
        Family("n|", 2, lambda A, B: i(L.par.ob(A, B))), "Id")


def compose_frobenius(F, G):
    """F then G."""
    D = G.target.cat
    Fo, Gm = F.functor.obj, G.functor.mor
    m1 = D.compose(G.m_one, Gm(F.m_one))
    n0 = D.compose(Gm(F.n_bot), G.n_bot)
    mt = Family("m*", 2, lambda A, B: D.compose(G.m_tensor(Fo(A), Fo(B)), Gm(F.m_tensor(A, B))))
    nt = Family("n|", 2, lambda A, B: D.compose(Gm(F.n_par(A, B)), G.n_par(Fo(A), Fo(B))))
    return FrobeniusFunctorData(F.source, G.target, compose_functors(F.functor, G.functor),
                                m1, mt, n0, nt, f"{F.name};{G.name}")


def is_identity_frobenius(Fd, objects=None):
    """Underlying functor the identity and all structure maps identities."""
    X = Fd.source
    C = X.cat
    objs = _objs(X, objects)
    i = C.identity
    if Fd.m_one != i(X.one) or Fd.n_bot != i(X.bot):
        return False
    for A in objs:
        if Fd.functor.obj(A) != A:
            return False
        for B in objs:
            if Fd.m_tensor(A, B) != i(X.tensor.ob(A, B)):
                return False
            if Fd.n_par(A, B) != i(X.par.ob(A, B)):
                return False
            for f in C.hom(A, B):
                if Fd.functor.mor(f) != f:
                    return False
    return True


# ---------------------------------------------------------------- equivalences

def distributors_invertible(L, objects=None):
    C = L.cat
    objs = _objs(L, objects)
    for A in objs:
        for B in objs:
            for D in objs:
                if is_isomorphism(C, L.deltaL(A, B, D)) is None:
                    return False
                if is_isomorphism(C, L.deltaR(A, B, D)) is None:
                    return False
    return True


def tensor_inverse_from_ldc(L):
    """bot^-1 := 1 | 1 with sL, sR built from the distributors."""
    C, T, P = L.cat, L.tensor, L.par
    one, bot = L.one, L.bot
    i = C.identity
    N = P.ob(one, one)
    sL = C.then(L.deltaL(bot, one, one), P.ar(T.runit_inv(bot), i(one)), P.lunit_inv(one))
    sR = C.then(L.deltaR(one, one, bot), P.ar(i(one), T.lunit_inv(bot)), P.runit_inv(one))
    return TensorInverseWitness(bot, N, sL, sR)


def beta(L, A, B):
    """A * ((1|1) * B) -> A | B."""
    C, T, P = L.cat, L.tensor, L.par
    one = L.one
    return C.then(T.ar(C.identity(A), L.deltaR(one, one, B)),
                  L.deltaL(A, one, T.ob(one, B)),
                  P.ar(T.runit_inv(A), T.lunit_inv(B)))


@dataclass
class EquivalenceWitness:
    forward: FrobeniusFunctorData
    backward: FrobeniusFunctorData
    reports: list


def _identity_carried(src, tgt, m_one, m_tensor, n_bot, n_par, name):
    return FrobeniusFunctorData(src, tgt, identity_functor(src.cat), m_one,
                                Family("m*", 2, m_tensor), n_bot, Family("n|", 2, n_par), name)


def _certify_pair(fwd, bwd, objects, bound):
    reps = check_frobenius_linear(fwd, objects, bound, f"{fwd.name}")
    reps += check_frobenius_linear(bwd, objects, bound, f"{bwd.name}")
    for a, b, name in ((fwd, bwd, "there_and_back"), (bwd, fwd, "back_and_there")):
        chk = LawCheck(f"{fwd.name}.{name}", fwd.source.cat)
        chk.claim((), is_identity_frobenius(compose_frobenius(a, b), objects),
                  [f"{a.name};{b.name}"], ["identity"])
        reps.append(chk.report())
    return reps


def equivalence_witnesses(L, objects=None, bound=12, mixdata=None):
    """Identity-carried Frobenius functors exhibiting L as degenerate (when
    compact) and as shifted (when the distributors are invertible)."""
    C = L.cat
    i = C.identity
    objs = _objs(L, objects)
    mx = mixdata if mixdata is not None else mix_analysis(L, objs, bound)
    deg = shifted = None
    if mx is not None and mx.kind == "compact":
        D = degenerate_ldc(L.tensor)
        D.objects = L.objects
        m_inv = is_isomorphism(C, mx.m)
        mix_inv = Family("mix^-1", 2, lambda A, B: is_isomorphism(C, mx.mix(A, B)))
        fwd = _identity_carried(D, L, i(L.one), lambda A, B: i(L.tensor.ob(A, B)),
                                m_inv, lambda A, B: mx.mix(A, B), "degenerate.forward")
        bwd = _identity_carried(L, D, i(L.one), lambda A, B: i(L.tensor.ob(A, B)),
                                mx.m, lambda A, B: mix_inv(A, B), "degenerate.backward")
        deg = EquivalenceWitness(fwd, bwd, _certify_pair(fwd, bwd, objs, bound))
    if distributors_invertible(L, objs):
        w = tensor_inverse_from_ldc(L)
        reps = check_tensor_inverse(L.tensor, w)
        if all(r.passed for r in reps):
            S = shifted_tensor_ldc(L.tensor, w)
            S.objects = L.objects
            b = Family("beta", 2, lambda A, B: beta(L, A, B))
            b_inv = Family("beta^-1", 2, lambda A, B: is_isomorphism(C, b(A, B)))
            fwd = _identity_carried(L, S, i(L.one), lambda A, B: i(L.tensor.ob(A, B)),
                                    i(L.bot), lambda A, B: b_inv(A, B), "shifted.forward")
            bwd = _identity_carried(S, L, i(L.one), lambda A, B: i(L.tensor.ob(A, B)),
                                    i(L.bot), lambda A, B: b(A, B), "shifted.backward")
            shifted = EquivalenceWitness(fwd, bwd, reps + _certify_pair(fwd, bwd, objs, bound))
        else:
            shifted = EquivalenceWitness(None, None, reps)
    return deg, shifted

