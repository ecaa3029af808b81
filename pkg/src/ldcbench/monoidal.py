"""Monoidal structures over an engine and their coherence checks.

Directions used throughout:
    assoc   (A*B)*C -> A*(B*C)
    runit   A -> A*I
    lunit   A -> I*A
    sym     A*B -> B*A
Each has an ``_inv`` partner.  A par structure stores the same directions;
its customary unitors A*I -> A are the ``_inv`` families.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .fincat import (Family, FamilyTypeError, Functor, HardFailure, LawCheck,
                     Mor, ProductCategory, is_isomorphism, tuple_plan)


def _inverse_family(C, fam, name, arity):
    def resolve(*objs):
        g = is_isomorphism(C, fam(*objs))
        if g is None:
            raise HardFailure(f"{fam.name} component at {objs} is not invertible")
        return g
    return Family(name, arity, resolve)


class MonoidalStructure:
    def __init__(self, cat, ob, ar, unit, assoc, runit, lunit, sym=None,
                 assoc_inv=None, runit_inv=None, lunit_inv=None, sym_inv=None,
                 name="tensor"):
        self.cat = cat
        self._ob = ob
        self._ar = ar
        self.unit = unit
        self.name = name
        self._obs = {}
        self._ars = {}
        self.assoc = self._typed(assoc, f"a{name}", 3,
                                 lambda A, B, C: self.ob(self.ob(A, B), C),
                                 lambda A, B, C: self.ob(A, self.ob(B, C)))
        self.runit = self._typed(runit, f"uR{name}", 1, lambda A: A, lambda A: self.ob(A, unit))
        self.lunit = self._typed(lunit, f"uL{name}", 1, lambda A: A, lambda A: self.ob(unit, A))
        self.sym = None if sym is None else self._typed(
            sym, f"s{name}", 2, lambda A, B: self.ob(A, B), lambda A, B: self.ob(B, A))
        self.assoc_inv = self._inv(assoc_inv, self.assoc, f"a{name}^-1", 3)
        self.runit_inv = self._inv(runit_inv, self.runit, f"uR{name}^-1", 1)
        self.lunit_inv = self._inv(lunit_inv, self.lunit, f"uL{name}^-1", 1)
        if self.sym is not None:
            self.sym_inv = (Family(f"s{name}", 2, lambda A, B: self.sym(B, A))
                            if sym_inv is None else self._typed(sym_inv, f"s{name}^-1", 2))

    @property
    def symmetric(self):
        return self.sym is not None

    def _typed(self, f, name, arity, dom=None, cod=None):
        if isinstance(f, Family):
            if dom is not None and f.dom is None:
                f.dom, f.cod = dom, cod
            return f
        return Family(name, arity, f, dom, cod)

    def _inv(self, given, fam, name, arity):
        if given is None:
            return _inverse_family(self.cat, fam, name, arity)
        return self._typed(given, name, arity)

    def ob(self, A, B):
        key = (A, B)
        r = self._obs.get(key)
        if r is None:
            r = self._ob(A, B)
            self._obs[key] = r
        return r

    def ar(self, f, g):
        key = (f, g)
        r = self._ars.get(key)
        if r is None:
            r = self._ar(f, g)
            self._ars[key] = r
        return r

    def idl(self, A, g):
        """1_A * g"""
        return self.ar(self.cat.identity(A), g)

    def idr(self, f, B):
        """f * 1_B"""
        return self.ar(f, self.cat.identity(B))

    def functor(self):
        P = ProductCategory(self.cat, self.cat)
        return Functor(P, self.cat, lambda AB: self.ob(*AB),
                       lambda fg: self.ar(*fg.data), self.name)

    def with_family(self, ar=None, **replace):
        """Copy with some structure families swapped (used for mutations)."""
        kw = dict(assoc=self.assoc, runit=self.runit, lunit=self.lunit, sym=self.sym,
                  assoc_inv=self.assoc_inv, runit_inv=self.runit_inv,
                  lunit_inv=self.lunit_inv,
                  sym_inv=self.sym_inv if self.sym is not None else None)
        kw.update(replace)
        return MonoidalStructure(self.cat, self._ob, ar or self._ar, self.unit,
                                 name=self.name, **kw)


@dataclass
class TensorInverseWitness:
    bot: Any
    inv: Any
    sL: Mor
    sR: Mor


# ---------------------------------------------------------------- laws

def _arrows(C, objs):
    return [f for A in objs for B in objs for f in C.hom(A, B)]


def check_monoidal_laws(M, objects=None, bound=12, prefix=None):
    """Bifunctoriality, naturality, invertibility and coherence of M."""
    try:
        return _monoidal_laws(M, objects, bound, prefix or f"monoidal.{M.name}")
    except FamilyTypeError as e:
        raise HardFailure(str(e)) from e


def _monoidal_laws(M, objects, bound, prefix):
    C = M.cat
    objs = list(C.objects if objects is None else objects)
    arrows = _arrows(C, objs)
    t, I = M.ob, M.unit
    one = C.identity

    quad, sampled = tuple_plan(objs, 4, bound)
    qarrows = arrows if not sampled else _arrows(C, quad)
    bif = LawCheck(f"{prefix}.bifunctor", C)
    for A in objs:
        for B in objs:
            bif.compare((A, B), [("1*1", M.ar(one(A), one(B)))], [("1", one(t(A, B)))])
    for f in qarrows:
        for g in qarrows:
            bif.compare((f.dom, f.cod, g.dom, g.cod), [("f*g", M.ar(f, g))],
                        [("f*1", M.idr(f, g.dom)), ("1*g", M.idl(f.cod, g))])
            bif.compare((f.dom, f.cod, g.dom, g.cod), [("f*g", M.ar(f, g))],
                        [("1*g", M.idl(f.dom, g)), ("f*1", M.idr(f, g.cod))])
    for A in quad:
        for B in quad:
            for D in quad:
                for f in C.hom(A, B):
                    for g in C.hom(B, D):
                        fg = C.compose(f, g)
                        for X in quad:
                            bif.compare((A, B, D, X), [("(f;g)*1", M.idr(fg, X))],
                                        [("f*1", M.idr(f, X)), ("g*1", M.idr(g, X))])
                            bif.compare((X, A, B, D), [("1*(f;g)", M.idl(X, fg))],
                                        [("1*f", M.idl(X, f)), ("1*g", M.idl(X, g))])

    nat = LawCheck(f"{prefix}.naturality", C)
    for f in arrows:
        A, A2 = f.dom, f.cod
        nat.compare((A, A2), [("f", f), M.runit.step(A2)],
                    [M.runit.step(A), ("f*1", M.idr(f, I))])
        nat.compare((A, A2), [("f", f), M.lunit.step(A2)],
                    [M.lunit.step(A), ("1*f", M.idl(I, f))])
        for B in objs:
            for D in objs:
                nat.compare((A, A2, B, D), [("(f*1)*1", M.idr(M.idr(f, B), D)),
                                            M.assoc.step(A2, B, D)],
                            [M.assoc.step(A, B, D), ("f*(1*1)", M.idr(f, t(B, D)))])
                nat.compare((B, A, A2, D), [("(1*f)*1", M.idr(M.idl(B, f), D)),
                                            M.assoc.step(B, A2, D)],
                            [M.assoc.step(B, A, D), ("1*(f*1)", M.idl(B, M.idr(f, D)))])
                nat.compare((B, D, A, A2), [("1*f", M.idl(t(B, D), f)),
                                            M.assoc.step(B, D, A2)],
                            [M.assoc.step(B, D, A), ("1*(1*f)", M.idl(B, M.idl(D, f)))])
            if M.symmetric:
                nat.compare((A, A2, B), [("f*1", M.idr(f, B)), M.sym.step(A2, B)],
                            [M.sym.step(A, B), ("1*f", M.idl(B, f))])

    iso = LawCheck(f"{prefix}.invertible", C)
    for A in objs:
        for fam, inv in ((M.runit, M.runit_inv), (M.lunit, M.lunit_inv)):
            iso.compare((A,), [fam.step(A), inv.step(A)], [("1", one(A))])
            iso.compare((A,), [inv.step(A), fam.step(A)], [("1", one(fam(A).cod))])
        for B in objs:
            for D in objs:
                a = M.assoc(A, B, D)
                iso.compare((A, B, D), [M.assoc.step(A, B, D), M.assoc_inv.step(A, B, D)],
                            [("1", one(a.dom))])
                iso.compare((A, B, D), [M.assoc_inv.step(A, B, D), M.assoc.step(A, B, D)],
                            [("1", one(a.cod))])

    tri = LawCheck(f"{prefix}.triangle", C)
    for A in objs:
        for B in objs:
            tri.compare((A, B), [M.assoc.step(A, I, B), ("1*uL^-1", M.idl(A, M.lunit_inv(B)))],
                        [("uR^-1*1", M.idr(M.runit_inv(A), B))])

    pent = LawCheck(f"{prefix}.pentagon", C)
    for A in quad:
        for B in quad:
            for D in quad:
                for E in quad:
                    pent.compare((A, B, D, E),
                                 [M.assoc.step(t(A, B), D, E), M.assoc.step(A, B, t(D, E))],
                                 [("a*1", M.idr(M.assoc(A, B, D), E)),
                                  M.assoc.step(A, t(B, D), E),
                                  ("1*a", M.idl(A, M.assoc(B, D, E)))])
    note = _sample_note(sampled, len(quad), len(objs))
    reports = [mark_sampled(bif.report(note), sampled), nat.report(), iso.report(),
               tri.report(), mark_sampled(pent.report(note), sampled)]

    if M.symmetric:
        hexa = LawCheck(f"{prefix}.hexagon", C)
        inv = LawCheck(f"{prefix}.involution", C)
        unit_sym = LawCheck(f"{prefix}.unit_symmetry", C)
        for A in objs:
            unit_sym.compare((A,), [M.runit.step(A), M.sym.step(A, I)], [M.lunit.step(A)])
            for B in objs:
                inv.compare((A, B), [M.sym.step(A, B), M.sym.step(B, A)], [("1", one(t(A, B)))])
                for D in objs:
                    hexa.compare((A, B, D),
                                 [M.assoc.step(A, B, D), M.sym.step(A, t(B, D)),
                                  M.assoc.step(B, D, A)],
                                 [("s*1", M.idr(M.sym(A, B), D)), M.assoc.step(B, A, D),
                                  ("1*s", M.idl(B, M.sym(A, D)))])
        reports += [hexa.report(), inv.report(), unit_sym.report()]
    return reports


def mark_sampled(report, sampled):
    """A sampled check that found nothing is reported as skipped, never pass."""
    if sampled and report.status == "pass":
        report.status = "skipped"
    return report


def _sample_note(sampled, k, n):
    if not sampled:
        return ""
    return f"sampled {k} of {n} objects; remaining tuples not checked"


# ---------------------------------------------------------------- derived

def derive_cartesian_monoidal(X, name="x"):
    """Products as a symmetric monoidal structure."""
    C = X.cat

    def assoc(A, B, D):
        AB = X.times(A, B)
        p0, p1 = X.pi0(AB, D), X.pi1(AB, D)
        return X.pair(C.compose(p0, X.pi0(A, B)),
                      X.pair(C.compose(p0, X.pi1(A, B)), p1))

    def assoc_inv(A, B, D):
        BD = X.times(B, D)
        p0, p1 = X.pi0(A, BD), X.pi1(A, BD)
        return X.pair(X.pair(p0, C.compose(p1, X.pi0(B, D))),
                      C.compose(p1, X.pi1(B, D)))

    def runit(A):
        return X.pair(C.identity(A), X.t(A))

    def lunit(A):
        return X.pair(X.t(A), C.identity(A))

    return MonoidalStructure(
        C, X.times, X.fx, X.top, assoc, runit, lunit, X.swap_x,
        assoc_inv=assoc_inv,
        runit_inv=lambda A: X.pi0(A, X.top),
        lunit_inv=lambda A: X.pi1(X.top, A),
        name=name)


def derive_cocartesian_monoidal(X, name="+"):
    """Coproducts as a symmetric monoidal structure."""
    C = X.cat

    def assoc(A, B, D):
        BD = X.plus(B, D)
        i0, i1 = X.iota0(A, BD), X.iota1(A, BD)
        return X.copair(X.copair(i0, C.compose(X.iota0(B, D), i1)),
                        C.compose(X.iota1(B, D), i1))

    def assoc_inv(A, B, D):
        AB = X.plus(A, B)
        i0, i1 = X.iota0(AB, D), X.iota1(AB, D)
        return X.copair(C.compose(X.iota0(A, B), i0),
                        X.copair(C.compose(X.iota1(A, B), i0), i1))

    return MonoidalStructure(
        C, X.plus, X.fp, X.bot, assoc,
        lambda A: X.iota0(A, X.bot), lambda A: X.iota1(X.bot, A), X.swap_p,
        assoc_inv=assoc_inv,
        runit_inv=lambda A: X.copair(C.identity(A), X.b(A)),
        lunit_inv=lambda A: X.copair(X.b(A), C.identity(A)),
        name=name)


# ---------------------------------------------------------------- shifts

def check_tensor_inverse(M, w):
    C = M.cat
    chk = LawCheck("shifted.triangle", C)
    N, B = w.inv, w.bot
    chk.compare((B, N), [("sR*1", M.idr(w.sR, N)), M.lunit_inv.step(N)],
                [M.assoc.step(N, B, N), ("1*sL", M.idl(N, w.sL)), M.runit_inv.step(N)])
    iso = LawCheck("shifted.s_invertible", C)
    for s in (w.sL, w.sR):
        iso.claim((B, N), is_isomorphism(C, s) is not None, ["s"], ["an isomorphism"], s)
    return [chk.report(), iso.report()]


def shifted_par(M, w, name="shift"):
    """The par structure A (x) (N (x) B) with unit the inverted object."""
    C = M.cat
    N = w.inv
    t = M.ob

    def ob(A, B):
        return t(A, t(N, B))

    def ar(f, g):
        return M.ar(f, M.idl(N, g))

    def assoc(A, B, D):
        return C.compose(M.assoc(A, t(N, B), t(N, D)), M.idl(A, M.assoc(N, B, t(N, D))))

    def assoc_inv(A, B, D):
        return C.compose(M.idl(A, M.assoc_inv(N, B, t(N, D))),
                         M.assoc_inv(A, t(N, B), t(N, D)))

    def runit_inv(A):
        return C.compose(M.idl(A, w.sR), M.runit_inv(A))

    def runit(A):
        return C.compose(M.runit(A), M.idl(A, is_isomorphism(C, w.sR)))

    def lunit_inv(A):
        return C.then(M.assoc_inv(w.bot, N, A), M.idr(w.sL, A), M.lunit_inv(A))

    def lunit(A):
        return C.then(M.lunit(A), M.idr(is_isomorphism(C, w.sL), A), M.assoc(w.bot, N, A))

    return MonoidalStructure(C, ob, ar, w.bot, assoc, runit, lunit,
                             assoc_inv=assoc_inv, runit_inv=runit_inv,
                             lunit_inv=lunit_inv, name=name)


def shifted_tensor_ldc(M, w):
    """Shifted-tensor LDC of M at a certified tensor inverse."""
    from .ldc import LdcStructure

    reps = check_tensor_inverse(M, w)
    if any(r.failed for r in reps):
        raise ValueError(f"tensor inverse witness rejected: {reps[0]}")
    C = M.cat
    N = w.inv
    t = M.ob
    P = shifted_par(M, w)

    def dR(A, B, D):
        return C.compose(M.assoc(A, t(N, B), D), M.idl(A, M.assoc(N, B, D)))

    def dL(A, B, D):
        return M.assoc_inv(A, B, t(N, D))

    return LdcStructure(C, M, P, dL, dR, name="shifted")


def degenerate_ldc(M):
    """Degenerate LDC: par equals tensor, distributors are associators."""
    from .ldc import LdcStructure
    return LdcStructure(M.cat, M, M, lambda A, B, D: M.assoc_inv(A, B, D),
                        lambda A, B, D: M.assoc(A, B, D), name="degenerate")
