"""Cartesian linearly distributive categories.

A CLDC here is a bicartesian engine whose tensor is the chosen product and
whose par is the chosen coproduct, together with a left distributor; the
right distributor is its symmetry conjugate unless given explicitly.
"""
from __future__ import annotations

import itertools
import json
import sys
from dataclasses import dataclass, field

from .fincat import (BudgetExceeded, CategoryError, Family, HardFailure, LawCheck,
                     Mor, TableCategory, Undefined, is_isomorphism,
                     obj_label, run_path, tuple_plan)
from .ldc import (LdcStructure, MixData, check_ldc_suite, check_mix_associators,
                  check_mix_naturality, check_mix_square,
                  ldc_law_instances, mix_family, symmetric_deltaR_path)
from .limits import (Bicartesian, CoproductWitness, InitialWitness, ProductWitness,
                     TerminalWitness, classify_object, search_copairing, search_pairing,
                     zero_structure)
from .monoidal import (derive_cartesian_monoidal, derive_cocartesian_monoidal,
                       mark_sampled)


class LawFailure(CategoryError):
    """Certification found a failing law; ``reports`` holds the full run."""

    def __init__(self, message, reports):
        super().__init__(message)
        self.reports = reports


class DeltaSearchFailed(CategoryError):
    def __init__(self, message, triple=None, law_id=None, objects=None, reason="search"):
        super().__init__(message)
        self.triple = triple
        self.law_id = law_id
        self.objects = objects
        self.reason = reason


class CldcStructure:
    def __init__(self, X, ldc, mix=None, name=None, objects=None, reports=None, search=None):
        self.X = X
        self.ldc = ldc
        self.mix = mix
        self.name = name or ldc.name
        self.objects = tuple(X.cat.objects if objects is None else objects)
        self.reports = list(reports or [])
        self.search = search

    @property
    def cat(self):
        return self.X.cat

    @property
    def deltaL(self):
        return self.ldc.deltaL

    @property
    def deltaR(self):
        return self.ldc.deltaR


# ---------------------------------------------------------------- search

@dataclass
class SearchResult:
    table: dict
    solutions: int
    nodes: int
    universe: tuple
    unique: bool | None = None


def _screens(X, T, P, A, B, D):
    """Necessary conditions on a single component, used to prune candidates."""
    C = X.cat
    i = C.identity
    out = [
        lambda d: C.eq(C.compose(d, X.fp(X.pi1(A, B), i(D))), X.pi1(A, X.plus(B, D))),
        lambda d: C.eq(C.compose(X.fx(i(A), X.iota0(B, D)), d), X.iota0(X.times(A, B), D)),
    ]
    if A == X.top:
        lhs = T.lunit(P.ob(B, D))
        rhs = P.ar(T.lunit(B), i(D))
        out.append(lambda d: C.eq(C.compose(lhs, d), rhs))
    if D == X.bot:
        post = P.runit_inv(T.ob(A, B))
        rhs = T.ar(i(A), P.runit_inv(B))
        out.append(lambda d: C.eq(C.compose(d, post), rhs))
    return out


def _naturality_instances(L, U):
    C, T, P = L.cat, L.tensor, L.par
    i = C.identity
    dL = L.deltaL
    out = []
    arrows = [f for A in U for B in U for f in C.hom(A, B) if not (A == B and f == i(A))]
    for f in arrows:
        for Y in U:
            for Z in U:
                for pos in range(3):
                    legs = [i(Y), i(Z)]
                    legs.insert(pos, f)
                    src = tuple(g.dom for g in legs)
                    tgt = tuple(g.cod for g in legs)

                    def thunk(legs=legs, src=src, tgt=tgt):
                        fA, fB, fC = legs
                        return ([("F(f)", T.ar(fA, P.ar(fB, fC))), dL.step(*tgt)],
                                [dL.step(*src), ("G(f)", P.ar(T.ar(fA, fB), fC))])
                    out.append(("ldc.deltaL.natural", src + (f.cod,), thunk))
    return out


def search_deltaL(X, universe=None, budget=1 << 14, max_solutions=1):
    """Backtracking search for a left distributor tabulated on universe^3.

    Candidates per triple are the hom elements passing the screens.  Each
    law instance waits on the first untabulated component it touches and is
    re-evaluated when that component is assigned; naturality instances are
    tried before the coherence equations.
    """
    C = X.cat
    U = tuple(C.objects if universe is None else universe)
    T, P = derive_cartesian_monoidal(X), derive_cocartesian_monoidal(X)
    table = {}

    def resolve(*objs):
        m = table.get(objs)
        if m is None:
            raise Undefined("dL", objs)
        return m

    dL = Family("dL", 3, resolve, memo=False)
    L = LdcStructure(C, T, P, dL, Family("dR", 3, lambda *o: run_path(
        C, symmetric_deltaR_path(L, *o)), memo=False), name="search", objects=U)

    triples = list(itertools.product(U, repeat=3))
    dom = {k: T.ob(k[0], P.ob(k[1], k[2])) for k in triples}
    cod = {k: P.ob(T.ob(k[0], k[1]), k[2]) for k in triples}
    triples.sort(key=lambda k: C.hom_size(dom[k], cod[k]))
    pos = {k: n for n, k in enumerate(triples)}

    insts = _naturality_instances(L, U)
    laws, _ = ldc_law_instances(L, list(U), bound=len(U))
    insts += [(f"law{k}", w, th) for k, w, th in laws]

    def evaluate(th):
        try:
            lhs, rhs = th()
            return C.eq(run_path(C, lhs), run_path(C, rhs))
        except Undefined as e:
            return e.objs

    waits = {}
    for inst in insts:
        r = evaluate(inst[2])
        if r is False:
            raise DeltaSearchFailed(f"{inst[0]} fails before any distributor is chosen",
                                    law_id=inst[0], objects=inst[1])
        if r is not True and r in pos:
            waits.setdefault(r, []).append(inst)

    domains = {}
    solutions = []
    state = {"nodes": 0, "deepest": -1, "why": None}

    def domain(key):
        if key not in domains:
            size = C.hom_size(dom[key], cod[key])
            if size > budget:
                raise BudgetExceeded(f"delta search: |hom({obj_label(dom[key])},"
                                     f"{obj_label(cod[key])})| = {size} exceeds {budget}")
            tests = _screens(X, T, P, *key)
            domains[key] = [d for d in C.hom(dom[key], cod[key])
                            if all(s(d) for s in tests)]
            if not domains[key]:
                raise DeltaSearchFailed(
                    f"no candidate for dL[{obj_label(key)}] passes the screens",
                    triple=key, reason="screens")
        return domains[key]

    def solve(k):
        if k == len(triples):
            solutions.append(dict(table))
            return len(solutions) >= max_solutions
        key = triples[k]
        W = waits.pop(key, [])
        W.sort(key=lambda inst: not inst[0].endswith("natural"))
        for cand in domain(key):
            state["nodes"] += 1
            table[key] = cand
            moved = []
            ok = True
            for inst in W:
                r = evaluate(inst[2])
                if r is True:
                    continue
                if r is False:
                    ok = False
                    if k >= state["deepest"]:
                        state["deepest"] = k
                        state["why"] = (key, inst[0], inst[1])
                    break
                if r in pos:
                    waits.setdefault(r, []).append(inst)
                    moved.append(r)
            if ok and solve(k + 1):
                return True
            for r in reversed(moved):
                waits[r].pop()
            del table[key]
        waits[key] = W
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(triples) + 200))
    try:
        solve(0)
    finally:
        sys.setrecursionlimit(limit)
    if not solutions:
        key, law, objs = state["why"] or (None, None, None)
        name = law if law is None or law.endswith("natural") else _law_name(law)
        raise DeltaSearchFailed(
            f"no distributor on {len(U)} objects: every candidate for dL[{obj_label(key)}] "
            f"violates {name} at {obj_label(tuple(objs or ()))}",
            triple=key, law_id=name, objects=objs)
    return SearchResult(solutions[0], len(solutions), state["nodes"], U)


def _law_name(tag):
    from .ldc import LDC_LAW_IDS
    return LDC_LAW_IDS[int(tag[3:])]


def delta_table_family(table, name="dL"):
    def resolve(*objs):
        m = table.get(objs)
        if m is None:
            raise Undefined(name, objs)
        return m
    return Family(name, 3, resolve)


def zero_obstruction(X, objects):
    """If the initial and terminal objects coincide, a CLDC on X would be
    isomix and therefore have invertible psi.  Returns a witness pair where
    psi is not invertible, or None."""
    zs = zero_structure(X)
    if zs is None:
        return None
    C = X.cat
    for A in objects:
        for B in objects:
            if zs.psi_inv(A, B) is None:
                P, S = X.times(A, B), X.plus(A, B)
                iso = any(is_isomorphism(C, f) is not None for f in C.hom(S, P))
                return {"objects": (A, B), "product": P, "coproduct": S,
                        "isomorphic": iso}
    return None


# ---------------------------------------------------------------- assembly

def assemble_cldc(X, deltaL=None, deltaR=None, objects=None, universe=None,
                  search_budget=1 << 14, bound=12, certify=True, name=None,
                  unique=False):
    """Build the CLDC on a bicartesian engine, searching for the distributor
    when none is given, and certify the full symmetric suite."""
    C = X.cat
    objs = tuple(C.objects if objects is None else objects)
    T, P = derive_cartesian_monoidal(X), derive_cocartesian_monoidal(X)
    search = None
    if deltaL is None:
        U = tuple(objs if universe is None else universe)
        ob = zero_obstruction(X, U)
        if ob is not None:
            A, B = ob["objects"]
            raise DeltaSearchFailed(
                f"initial and terminal coincide but psi[{obj_label(A)},{obj_label(B)}] is not "
                f"invertible: {obj_label(A)} x {obj_label(B)} = {obj_label(ob['product'])}, "
                f"{obj_label(A)} + {obj_label(B)} = {obj_label(ob['coproduct'])}"
                + ("" if ob["isomorphic"] else ", not isomorphic"),
                objects=(A, B), reason="obstruction", law_id="cldc.zero_forces_psi")
        search = search_deltaL(X, U, search_budget, 2 if unique else 1)
        if unique:
            search.unique = search.solutions == 1
        deltaL = delta_table_family(search.table)
    if deltaR is None:
        def deltaR(A, B, D):
            return run_path(C, symmetric_deltaR_path(L, A, B, D))
    L = LdcStructure(C, T, P, deltaL, deltaR, name=name or f"cldc({C.name})", objects=objs)
    S = CldcStructure(X, L, None, L.name, objs, search=search)
    if certify:
        reps = check_ldc_suite(L, objs, bound)
        S.reports = reps
        bad = [r for r in reps if r.failed]
        if bad:
            raise LawFailure(f"{L.name}: {bad[0]}", reps)
        S.mix = cldc_mix(S, bound=bound)
    return S


def cldc_mix(S, objects=None, bound=12):
    """The mix map b_top = t_bot and its family, with the mix laws checked."""
    X, L = S.X, S.ldc
    C = X.cat
    objs = list(S.objects if objects is None else objects)
    m = X.b(X.top)
    if not C.eq(m, X.t(X.bot)):
        raise HardFailure(f"b_top and t_bot differ in {C.name}")
    mix = mix_family(L, m)
    reps = [check_mix_square(L, m, objs, "mix.square"), check_mix_naturality(L, mix, objs)]
    reps += check_mix_associators(L, mix, objs, bound)
    bad = [r for r in reps if r.failed]
    if bad:
        raise HardFailure(f"CLDC mix law fails: {bad[0]}", bad[0])
    kind = "mix"
    if is_isomorphism(C, m) is not None:
        kind = "isomix"
        if all(is_isomorphism(C, mix(A, B)) is not None for A in objs for B in objs):
            kind = "compact"
    return MixData(m, mix, kind, reps)


# ---------------------------------------------------------------- theorems

def cldc_theorem_suite(S, objects=None, strict=True):
    X = S.X
    C = X.cat
    L = S.ldc
    objs = list(S.objects if objects is None else objects)
    mix = (S.mix or cldc_mix(S, objs)).mix
    i = C.identity
    dL, dR = L.deltaL, L.deltaR
    ids = ["cldc.deltaL_projection", "cldc.deltaL_injection",
           "cldc.deltaR_projection", "cldc.deltaR_injection"]
    c = [LawCheck(x, C) for x in ids]
    for A in objs:
        for B in objs:
            for D in objs:
                w = (A, B, D)
                c[0].compare(w, lambda: ([dL.step(A, B, D), ("p1+1", X.fp(X.pi1(A, B), i(D)))],
                                         [("p1", X.pi1(A, X.plus(B, D)))]))
                c[1].compare(w, lambda: ([("1xi0", X.fx(i(A), X.iota0(B, D))), dL.step(A, B, D)],
                                         [("i0", X.iota0(X.times(A, B), D))]))
                c[2].compare(w, lambda: ([dR.step(A, B, D), ("1+p0", X.fp(i(A), X.pi0(B, D)))],
                                         [("p0", X.pi0(X.plus(A, B), D))]))
                c[3].compare(w, lambda: ([("i1x1", X.fx(X.iota1(A, B), i(D))), dR.step(A, B, D)],
                                         [("i1", X.iota1(A, X.times(B, D)))]))
    reps = [x.report() for x in c]

    sub = LawCheck("cldc.bot_subterminal", C)
    pre = LawCheck("cldc.top_preinitial", C)
    to_bot = LawCheck("cldc.map_to_bot_iff_projection_iso", C)
    from_top = LawCheck("cldc.map_from_top_iff_injection_iso", C)
    bot, top = X.bot, X.top
    for A in objs:
        n = C.hom_size(A, bot)
        sub.claim((A, bot), n <= 1, [f"|hom(A,bot)| = {n}"], ["<= 1"])
        n = C.hom_size(top, A)
        pre.claim((top, A), n <= 1, [f"|hom(top,A)| = {n}"], ["<= 1"])
        has = C.hom_size(A, bot) > 0
        iso = is_isomorphism(C, X.pi0(A, bot)) is not None
        to_bot.claim((A,), has == iso, [f"map to bot: {has}"], [f"p0[A,bot] iso: {iso}"])
        has = C.hom_size(top, A) > 0
        iso = is_isomorphism(C, X.iota0(A, top)) is not None
        from_top.claim((A,), has == iso, [f"map from top: {has}"], [f"i0[A,top] iso: {iso}"])
    reps += [sub.report(), pre.report(), to_bot.report(), from_top.report()]

    lem_pre = LawCheck("cldc.preinitial_iff_codiagonal_mix", C)
    lem_sub = LawCheck("cldc.subterminal_iff_diagonal_mix", C)
    coin = LawCheck("cldc.preinitial_subterminal_mix_factor", C)
    for A in objs:
        flags = classify_object(X, A, objs)
        dl, nb = X.diag(A), X.codiag(A)
        mx = mix(A, A)
        e1 = C.eq(C.then(dl, mx, nb), i(A))
        e2 = C.eq(C.then(nb, dl, mx), i(X.plus(A, A)))
        e3 = C.eq(C.then(mx, nb, dl), i(X.times(A, A)))
        lem_pre.claim((A,), flags["preinitial"] == (e1 and e2),
                      [f"preinitial: {flags['preinitial']}"], [f"D;mix;N = 1 and N;D;mix = 1: {e1 and e2}"])
        lem_sub.claim((A,), flags["subterminal"] == (e1 and e3),
                      [f"subterminal: {flags['subterminal']}"], [f"D;mix;N = 1 and mix;N;D = 1: {e1 and e3}"])
        f0 = C.eq(mx, C.compose(X.pi0(A, A), X.iota0(A, A)))
        f1 = C.eq(mx, C.compose(X.pi1(A, A), X.iota1(A, A)))
        fact = f0 and f1
        coin.claim((A,), flags["preinitial"] == flags["subterminal"] == fact,
                   [f"preinitial: {flags['preinitial']}", f"subterminal: {flags['subterminal']}"],
                   [f"mix = p0;i0 = p1;i1: {fact}"])
    reps += [lem_pre.report(), lem_sub.report(), coin.report()]
    bad = [r for r in reps if r.failed]
    if strict and bad:
        raise HardFailure(f"CLDC theorem violated: {bad[0]}", bad[0])
    return reps


# ---------------------------------------------------------------- duoidal

@dataclass
class DuoidalData:
    delta_bot: Mor
    nabla_top: Mor
    m: Mor
    mu: Family
    tau_x: Family
    tau_p: Family
    reports: list = field(default_factory=list)


def duoidal_data(X):
    C = X.cat
    i = C.identity
    bot, top = X.bot, X.top

    def mu(A, B, Cc, D):
        return X.copair(X.fx(X.iota0(A, Cc), X.iota0(B, D)),
                        X.fx(X.iota1(A, Cc), X.iota1(B, D)))

    def tau_x(W, Xo, Y, Z):
        return X.pair(X.fx(X.pi0(W, Xo), X.pi0(Y, Z)), X.fx(X.pi1(W, Xo), X.pi1(Y, Z)))

    def tau_p(W, Xo, Y, Z):
        return X.copair(X.fp(X.iota0(W, Y), X.iota0(Xo, Z)), X.fp(X.iota1(W, Y), X.iota1(Xo, Z)))

    return DuoidalData(X.pair(i(bot), i(bot)), X.copair(i(top), i(top)), X.t(bot),
                       Family("mu", 4, mu), Family("tau_x", 4, tau_x),
                       Family("tau_p", 4, tau_p))


def mu_pairing(X, A, B, Cc, D):
    return X.pair(X.fp(X.pi0(A, B), X.pi0(Cc, D)), X.fp(X.pi1(A, B), X.pi1(Cc, D)))


def duoidal_suite(S, objects=None, bound=12, wide_bound=6):
    """Interchange presentations, unit maps, the four distributor/interchange
    equations, the two mix/flip squares and the two symmetry squares."""
    X, L = S.X, S.ldc
    C = X.cat
    T, P = L.tensor, L.par
    i = C.identity
    objs = list(S.objects if objects is None else objects)
    mix = (S.mix or cldc_mix(S, objs)).mix
    dd = duoidal_data(X)
    mu, tx, tp = dd.mu, dd.tau_x, dd.tau_p
    dL, dR = L.deltaL, L.deltaR
    t, p = X.times, X.plus

    units = LawCheck("duoidal.units", C)
    bot, top = X.bot, X.top
    units.compare((bot,), [("<1,1>", dd.delta_bot)], [("b", X.b(t(bot, bot)))])
    units.compare((top,), [("[1,1]", dd.nabla_top)], [("t", X.t(p(top, top)))])
    units.compare((bot, top), [("t_bot", dd.m)], [("b_top", X.b(top))])
    reps = [units.report()]

    quad, sq = tuple_plan(objs, 4, bound)
    names = ["duoidal.interchange_presentations", "duoidal.flip_mix.1", "duoidal.flip_mix.2",
             "duoidal.braiding.1", "duoidal.braiding.2"]
    c = [LawCheck(x, C) for x in names]
    for A, B, Cc, D in itertools.product(quad, repeat=4):
        w = (A, B, Cc, D)
        c[0].compare(w, [mu.step(*w)], [("<p0+p0,p1+p1>", mu_pairing(X, *w))])
        c[1].compare(w, lambda: ([mu.step(*w), mix.step(p(A, Cc), p(B, D))],
                                 [("mix+mix", X.fp(mix(A, B), mix(Cc, D))), tp.step(*w)]))
        c[2].compare(w, lambda: ([tx.step(*w), ("mix x mix", X.fx(mix(A, Cc), mix(B, D)))],
                                 [mix.step(t(A, B), t(Cc, D)), mu.step(*w)]))
        c[3].compare(w, [mu.step(*w), (("sx", (p(A, Cc), p(B, D))), X.swap_x(p(A, Cc), p(B, D)))],
                     [("sx+sx", X.fp(X.swap_x(A, B), X.swap_x(Cc, D))), mu.step(B, A, D, Cc)])
        c[4].compare(w, [mu.step(*w), ("s+ x s+", X.fx(X.swap_p(A, Cc), X.swap_p(B, D)))],
                     [(("s+", (t(A, B), t(Cc, D))), X.swap_p(t(A, B), t(Cc, D))),
                      mu.step(Cc, D, A, B)])
    note = f"sampled {len(quad)} of {len(objs)} objects" if sq else ""
    reps += [mark_sampled(x.report(note), sq) for x in c]

    wide, sw = tuple_plan(objs, 5, wide_bound)
    e = [LawCheck(f"duoidal.distributor_interchange.{k}", C) for k in range(1, 5)]
    for Xo, A, B, Cc, D in itertools.product(wide, repeat=5):
        w = (Xo, A, B, Cc, D)
        e[0].compare(w, lambda: (
            [("1 x mu", X.fx(i(Xo), mu(A, B, Cc, D))),
             T.assoc_inv.step(Xo, p(A, Cc), p(B, D)),
             ("dL x 1", X.fx(dL(Xo, A, Cc), i(p(B, D))))],
            [dL.step(Xo, t(A, B), t(Cc, D)),
             ("a^-1 + 1", X.fp(T.assoc_inv(Xo, A, B), i(t(Cc, D)))),
             mu.step(t(Xo, A), B, Cc, D)]))
        e[1].compare(w, lambda: (
            [("1 + dL", X.fp(i(t(A, B)), dL(Cc, D, Xo))),
             P.assoc_inv.step(t(A, B), t(Cc, D), Xo),
             ("mu + 1", X.fp(mu(A, B, Cc, D), i(Xo)))],
            [mu.step(A, B, Cc, p(D, Xo)),
             ("1 x a+", X.fx(i(p(A, Cc)), P.assoc_inv(B, D, Xo))),
             dL.step(p(A, Cc), p(B, D), Xo)]))
        e[2].compare(w, lambda: (
            [("mu x 1", X.fx(mu(A, B, Cc, D), i(Xo))),
             T.assoc.step(p(A, Cc), p(B, D), Xo),
             ("1 x dR", X.fx(i(p(A, Cc)), dR(B, D, Xo)))],
            [dR.step(t(A, B), t(Cc, D), Xo),
             ("1 + a", X.fp(i(t(A, B)), T.assoc(Cc, D, Xo))),
             mu.step(A, B, Cc, t(D, Xo))]))
        e[3].compare(w, lambda: (
            [("dR + 1", X.fp(dR(Xo, A, B), i(t(Cc, D)))),
             P.assoc.step(Xo, t(A, B), t(Cc, D)),
             ("1 + mu", X.fp(i(Xo), mu(A, B, Cc, D)))],
            [mu.step(p(Xo, A), B, Cc, D),
             ("a+^-1 x 1", X.fx(P.assoc(Xo, A, Cc), i(p(B, D)))),
             dR.step(Xo, p(A, Cc), p(B, D))]))
    note = f"sampled {len(wide)} of {len(objs)} objects" if sw else ""
    reps += [mark_sampled(x.report(note), sw) for x in e]
    dd.reports = reps
    return reps


# ---------------------------------------------------------------- files

def _bicartesian_from_dict(C, d):
    def need(key):
        if key not in d:
            raise ValueError(f"missing field '{key}'")
        return d[key]

    def mor(name, where):
        if name not in C.types:
            raise ValueError(f"{where}: unknown morphism {name!r}")
        return C.mor(name)

    prods, cops = {}, {}
    for k, row in enumerate(need("products")):
        where = f"products[{k}]"
        try:
            a, b, apex = row["left"], row["right"], row["apex"]
            p0, p1 = mor(row["pi0"], where), mor(row["pi1"], where)
        except KeyError as e:
            raise ValueError(f"{where}: missing {e}") from None
        prods[a, b] = ProductWitness(a, b, apex, p0, p1, search_pairing(C, apex, p0, p1))
    for k, row in enumerate(need("coproducts")):
        where = f"coproducts[{k}]"
        try:
            a, b, apex = row["left"], row["right"], row["apex"]
            i0, i1 = mor(row["iota0"], where), mor(row["iota1"], where)
        except KeyError as e:
            raise ValueError(f"{where}: missing {e}") from None
        cops[a, b] = CoproductWitness(a, b, apex, i0, i1, search_copairing(C, apex, i0, i1))
    term, init = need("terminal"), need("initial")

    def bang_out(A):
        hs = C.hom(A, term)
        if len(hs) != 1:
            raise ValueError(f"terminal: |hom({A},{term})| = {len(hs)}")
        return hs[0]

    def bang_in(A):
        hs = C.hom(init, A)
        if len(hs) != 1:
            raise ValueError(f"initial: |hom({init},{A})| = {len(hs)}")
        return hs[0]
    def lookup(table, what):
        def get(A, B):
            w = table.get((A, B))
            if w is None:
                raise Undefined(what, (A, B))
            return w
        return get
    return Bicartesian(C, lookup(prods, "products"), TerminalWitness(term, bang_out),
                       lookup(cops, "coproducts"), InitialWitness(init, bang_in), C.name)


def _delta_from_rows(C, rows, name):
    table = {}
    for k, row in enumerate(rows):
        try:
            objs, m = tuple(row["objects"]), row["mor"]
        except (KeyError, TypeError):
            raise ValueError(f"{name}[{k}]: need objects and mor") from None
        if len(objs) != 3 or m not in C.types:
            raise ValueError(f"{name}[{k}]: bad entry")
        table[objs] = C.mor(m)
    return delta_table_family(table, name)


def load_cldc(d, name="cldc", **kw):
    """Assemble from a dict in the CLDC file format."""
    C = TableCategory.from_dict(d, name)
    X = _bicartesian_from_dict(C, d)
    dL = _delta_from_rows(C, d["deltaL"], "deltaL") if "deltaL" in d else None
    dR = _delta_from_rows(C, d["deltaR"], "deltaR") if "deltaR" in d else None
    return assemble_cldc(X, dL, dR, name=name, **kw)


def load_cldc_file(path, **kw):
    with open(path) as fh:
        try:
            d = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: line {e.lineno}: {e.msg}") from None
    return load_cldc(d, str(path), **kw)


def cldc_to_dict(S, objects=None):
    """Freeze a CLDC on a closed set of objects into the file format.
    Witnesses whose apex falls outside the set are left out."""
    X = S.X
    C = X.cat
    objs = list(S.objects if objects is None else objects)
    names = {}
    morphisms, comp = [], []
    for A in objs:
        for B in objs:
            for k, f in enumerate(C.hom(A, B)):
                n = f"{obj_label(A)}>{obj_label(B)}#{k}"
                names[f] = n
                morphisms.append({"name": n, "dom": obj_label(A), "cod": obj_label(B)})
    for A in objs:
        for B in objs:
            for f in C.hom(A, B):
                for D in objs:
                    for g in C.hom(B, D):
                        comp.append([names[f], names[g], names[C.compose(f, g)]])
    lab = obj_label
    inside = set(objs)
    prods, cops = [], []
    for A in objs:
        for B in objs:
            if X.times(A, B) in inside:
                prods.append({"left": lab(A), "right": lab(B), "apex": lab(X.times(A, B)),
                              "pi0": names[X.pi0(A, B)], "pi1": names[X.pi1(A, B)]})
            if X.plus(A, B) in inside:
                cops.append({"left": lab(A), "right": lab(B), "apex": lab(X.plus(A, B)),
                             "iota0": names[X.iota0(A, B)], "iota1": names[X.iota1(A, B)]})
    dl, dr = [], []
    for w in itertools.product(objs, repeat=3):
        for rows, fam in ((dl, S.deltaL), (dr, S.deltaR)):
            try:
                f = fam(*w)
            except (Undefined, ValueError):
                continue
            if f in names:
                rows.append({"objects": [lab(o) for o in w], "mor": names[f]})
    return {
        "objects": [lab(o) for o in objs],
        "morphisms": morphisms,
        "identities": {lab(A): names[C.identity(A)] for A in objs},
        "composition": comp,
        "terminal": lab(X.top), "initial": lab(X.bot),
        "products": prods, "coproducts": cops,
        "deltaL": dl, "deltaR": dr,
    }


def all_reports(S, objects=None, bound=12):
    """Everything certified about a CLDC, in a stable order."""
    reps = list(S.reports)
    if S.mix is not None:
        reps += S.mix.reports
    reps += cldc_theorem_suite(S, objects, strict=False)
    return reps

