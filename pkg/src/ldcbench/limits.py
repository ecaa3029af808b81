"""Universal properties: terminal/initial objects, binary (co)products,
zero objects, biproducts and object classification."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .fincat import HardFailure, LawCheck, Mor, is_isomorphism, obj_label


@dataclass(frozen=True)
class ProductWitness:
    left: Any
    right: Any
    apex: Any
    pi0: Mor
    pi1: Mor
    pair: Callable = field(compare=False, repr=False)


@dataclass(frozen=True)
class CoproductWitness:
    left: Any
    right: Any
    apex: Any
    iota0: Mor
    iota1: Mor
    copair: Callable = field(compare=False, repr=False)


@dataclass(frozen=True)
class TerminalWitness:
    obj: Any
    bang: Callable = field(compare=False, repr=False)


@dataclass(frozen=True)
class InitialWitness:
    obj: Any
    bang: Callable = field(compare=False, repr=False)


@dataclass(frozen=True)
class BiproductWitness:
    left: Any
    right: Any
    apex: Any
    pi0: Mor
    pi1: Mor
    iota0: Mor
    iota1: Mor


def search_pairing(C, apex, pi0, pi1):
    def pair(f, g):
        for h in C.hom(f.dom, apex):
            if C.compose(h, pi0) == f and C.compose(h, pi1) == g:
                return h
        raise ValueError("no mediating morphism")
    return pair


def search_copairing(C, apex, iota0, iota1):
    def copair(f, g):
        for h in C.hom(apex, f.cod):
            if C.compose(iota0, h) == f and C.compose(iota1, h) == g:
                return h
        raise ValueError("no mediating morphism")
    return copair


# ---------------------------------------------------------------- search

def find_terminal_initial(C, objects=None):
    objs = list(C.objects if objects is None else objects)
    term = init = None
    for T in objs:
        if term is None and all(C.hom_size(A, T) == 1 for A in objs):
            term = TerminalWitness(T, lambda A, T=T: C.hom(A, T)[0])
        if init is None and all(C.hom_size(T, A) == 1 for A in objs):
            init = InitialWitness(T, lambda A, T=T: C.hom(T, A)[0])
    return term, init


def _is_product(C, P, p0, p1, tests):
    for X in tests:
        seen = {}
        for h in C.hom(X, P):
            key = (C.compose(h, p0), C.compose(h, p1))
            if key in seen:
                return False
            seen[key] = h
        if len(seen) != C.hom_size(X, p0.cod) * C.hom_size(X, p1.cod):
            return False
    return True


def _is_coproduct(C, P, i0, i1, tests):
    for X in tests:
        seen = {}
        for h in C.hom(P, X):
            key = (C.compose(i0, h), C.compose(i1, h))
            if key in seen:
                return False
            seen[key] = h
        if len(seen) != C.hom_size(i0.dom, X) * C.hom_size(i1.dom, X):
            return False
    return True


def find_binary_product(C, A, B, candidates=None, tests=None):
    """First certified product of A and B in canonical object order."""
    cands = list(C.objects if candidates is None else candidates)
    tests = cands if tests is None else list(tests)
    for P in cands:
        for p0 in C.hom(P, A):
            for p1 in C.hom(P, B):
                if _is_product(C, P, p0, p1, tests):
                    return ProductWitness(A, B, P, p0, p1, search_pairing(C, P, p0, p1))
    return None


def find_binary_coproduct(C, A, B, candidates=None, tests=None):
    cands = list(C.objects if candidates is None else candidates)
    tests = cands if tests is None else list(tests)
    for P in cands:
        for i0 in C.hom(A, P):
            for i1 in C.hom(B, P):
                if _is_coproduct(C, P, i0, i1, tests):
                    return CoproductWitness(A, B, P, i0, i1, search_copairing(C, P, i0, i1))
    return None


def certify_product(C, w, tests, hom_limit=1 << 16):
    """Exhaustive universal-property check of a chosen product witness."""
    chk = LawCheck("limits.product", C)
    skipped_any = False
    for X in tests:
        if C.hom_size(X, w.apex) > hom_limit:
            skipped_any = True
            continue
        table = {}
        for h in C.hom(X, w.apex):
            key = (C.compose(h, w.pi0), C.compose(h, w.pi1))
            chk.claim((w.left, w.right, X), key not in table, ["distinct mediators"],
                      ["same legs"], table.get(key), h)
            table[key] = h
        for f in C.hom(X, w.left):
            for g in C.hom(X, w.right):
                h = w.pair(f, g)
                ok = table.get((f, g)) == h
                chk.claim((w.left, w.right, X), ok, ["pair;pi"], ["legs"], h)
    return chk.report("partial: large hom-sets skipped" if skipped_any else "")


def certify_coproduct(C, w, tests, hom_limit=1 << 16):
    chk = LawCheck("limits.coproduct", C)
    skipped_any = False
    for X in tests:
        if C.hom_size(w.apex, X) > hom_limit:
            skipped_any = True
            continue
        table = {}
        for h in C.hom(w.apex, X):
            key = (C.compose(w.iota0, h), C.compose(w.iota1, h))
            chk.claim((w.left, w.right, X), key not in table, ["distinct mediators"],
                      ["same legs"], table.get(key), h)
            table[key] = h
        for f in C.hom(w.left, X):
            for g in C.hom(w.right, X):
                h = w.copair(f, g)
                chk.claim((w.left, w.right, X), table.get((f, g)) == h,
                          ["iota;copair"], ["legs"], h)
    return chk.report("partial: large hom-sets skipped" if skipped_any else "")


# ---------------------------------------------------------------- structure

class Bicartesian:
    """Chosen finite products and coproducts on an engine."""

    def __init__(self, cat, product, terminal, coproduct, initial, name=None):
        self.cat = cat
        self._product = product
        self._coproduct = coproduct
        self.terminal = terminal
        self.initial = initial
        self.name = name or cat.name
        self._pw = {}
        self._cw = {}
        self._memo = {}

    # products
    def prod(self, A, B):
        w = self._pw.get((A, B))
        if w is None:
            w = self._product(A, B)
            if w is None:
                raise ValueError(f"no chosen product for {obj_label(A)}, {obj_label(B)}")
            self._pw[A, B] = w
        return w

    def times(self, A, B):
        return self.prod(A, B).apex

    def pi0(self, A, B):
        return self.prod(A, B).pi0

    def pi1(self, A, B):
        return self.prod(A, B).pi1

    def pair(self, f, g):
        return self.prod(f.cod, g.cod).pair(f, g)

    @property
    def top(self):
        return self.terminal.obj

    def t(self, A):
        return self.terminal.bang(A)

    # coproducts
    def coprod(self, A, B):
        w = self._cw.get((A, B))
        if w is None:
            w = self._coproduct(A, B)
            if w is None:
                raise ValueError(f"no chosen coproduct for {obj_label(A)}, {obj_label(B)}")
            self._cw[A, B] = w
        return w

    def plus(self, A, B):
        return self.coprod(A, B).apex

    def iota0(self, A, B):
        return self.coprod(A, B).iota0

    def iota1(self, A, B):
        return self.coprod(A, B).iota1

    def copair(self, f, g):
        return self.coprod(f.dom, g.dom).copair(f, g)

    @property
    def bot(self):
        return self.initial.obj

    def b(self, A):
        return self.initial.bang(A)

    # derived maps
    def fx(self, f, g):
        key = ("x", f, g)
        m = self._memo.get(key)
        if m is None:
            C = self.cat
            m = self.pair(C.compose(self.pi0(f.dom, g.dom), f),
                          C.compose(self.pi1(f.dom, g.dom), g))
            self._memo[key] = m
        return m

    def fp(self, f, g):
        key = ("+", f, g)
        m = self._memo.get(key)
        if m is None:
            C = self.cat
            m = self.copair(C.compose(f, self.iota0(f.cod, g.cod)),
                            C.compose(g, self.iota1(f.cod, g.cod)))
            self._memo[key] = m
        return m

    def diag(self, A):
        i = self.cat.identity(A)
        return self.pair(i, i)

    def codiag(self, A):
        i = self.cat.identity(A)
        return self.copair(i, i)

    def swap_x(self, A, B):
        return self.pair(self.pi1(A, B), self.pi0(A, B))

    def swap_p(self, A, B):
        return self.copair(self.iota1(B, A), self.iota0(B, A))


# ---------------------------------------------------------------- objects

def _at_most_one_out(C, A, objs):
    return all(C.hom_size(A, X) <= 1 for X in objs)


def _at_most_one_in(C, A, objs):
    return all(C.hom_size(X, A) <= 1 for X in objs)


def classify_object(X, A, objects=None):
    """Flags for an object of a bicartesian engine, cross-checked against the
    diagonal/codiagonal characterizations."""
    C = X.cat
    objs = list(C.objects if objects is None else objects)
    ex_in = objs + [X.plus(A, A)]
    ex_out = objs + [X.times(A, A)]
    pre = _at_most_one_out(C, A, ex_in)
    sub = _at_most_one_in(C, A, ex_out)
    pre_inj = X.iota0(A, A) == X.iota1(A, A)
    pre_nab = is_isomorphism(C, X.codiag(A)) is not None
    sub_pro = X.pi0(A, A) == X.pi1(A, A)
    sub_del = is_isomorphism(C, X.diag(A)) is not None
    if not (pre == pre_inj == pre_nab):
        raise HardFailure(f"preinitial characterizations disagree at {obj_label(A)}: "
                          f"direct={pre} injections={pre_inj} codiagonal={pre_nab}")
    if not (sub == sub_pro == sub_del):
        raise HardFailure(f"subterminal characterizations disagree at {obj_label(A)}: "
                          f"direct={sub} projections={sub_pro} diagonal={sub_del}")
    strict = costrict = False
    if A == X.bot:
        strict = all(is_isomorphism(C, f) is not None for Y in objs for f in C.hom(Y, A))
    if A == X.top:
        costrict = all(is_isomorphism(C, f) is not None for Y in objs for f in C.hom(A, Y))
    return {"preinitial": pre, "subterminal": sub, "semizero": pre and sub,
            "strict_initial": strict, "costrict_terminal": costrict}


# ---------------------------------------------------------------- zero

class ZeroStructure:
    def __init__(self, X, m_inv):
        self.X = X
        self.obj = X.bot
        self._m_inv = m_inv
        self._memo = {}

    def zero(self, A, B):
        key = ("0", A, B)
        z = self._memo.get(key)
        if z is None:
            X = self.X
            z = X.cat.then(X.t(A), self._m_inv, X.b(B))
            self._memo[key] = z
        return z

    def psi(self, A, B):
        """[<1,0>,<0,1>] : A+B -> AxB."""
        key = ("psi", A, B)
        p = self._memo.get(key)
        if p is None:
            X, C = self.X, self.X.cat
            ia, ib = C.identity(A), C.identity(B)
            p = X.copair(X.pair(ia, self.zero(A, B)), X.pair(self.zero(B, A), ib))
            self._memo[key] = p
        return p

    def psi_pairing(self, A, B):
        """<[1,0],[0,1]> : A+B -> AxB."""
        X, C = self.X, self.X.cat
        ia, ib = C.identity(A), C.identity(B)
        return X.pair(X.copair(ia, self.zero(B, A)), X.copair(self.zero(A, B), ib))

    def psi_inv(self, A, B):
        key = ("psi-1", A, B)
        if key not in self._memo:
            self._memo[key] = is_isomorphism(self.X.cat, self.psi(A, B))
        return self._memo[key]


def zero_structure(X):
    """Zero structure when the initial and terminal objects are isomorphic."""
    m = X.t(X.bot)
    m_inv = is_isomorphism(X.cat, m)
    if m_inv is None:
        return None
    return ZeroStructure(X, m_inv)


def check_psi(zs, objects):
    """Both presentations of psi agree, and the zero maps absorb."""
    C = zs.X.cat
    pres = LawCheck("zero.psi_presentations", C)
    absorb = LawCheck("zero.absorbing", C)
    for A in objects:
        for B in objects:
            pres.compare((A, B), [("[<1,0>,<0,1>]", zs.psi(A, B))],
                         [("<[1,0],[0,1]>", zs.psi_pairing(A, B))])
            for Y in objects:
                for f in C.hom(B, Y):
                    absorb.compare((A, B, Y), [(("0", (A, B)), zs.zero(A, B)), ("f", f)],
                                   [(("0", (A, Y)), zs.zero(A, Y))])
                for f in C.hom(Y, A):
                    absorb.compare((Y, A, B), [("f", f), (("0", (A, B)), zs.zero(A, B))],
                                   [(("0", (Y, B)), zs.zero(Y, B))])
    return [pres.report(), absorb.report()]


def check_biproduct(C, zs, w, tests, hom_limit=1 << 16):
    eqs = LawCheck("biproduct.equations", C)
    A, B = w.left, w.right
    ia, ib = C.identity(A), C.identity(B)
    eqs.compare((A, B), [("i0", w.iota0), ("p0", w.pi0)], [("1", ia)])
    eqs.compare((A, B), [("i1", w.iota1), ("p1", w.pi1)], [("1", ib)])
    eqs.compare((A, B), [("i0", w.iota0), ("p1", w.pi1)], [("0", zs.zero(A, B))])
    eqs.compare((A, B), [("i1", w.iota1), ("p0", w.pi0)], [("0", zs.zero(B, A))])
    prod = _universal_report("biproduct.product", C, _is_product, w.apex, w.pi0, w.pi1,
                             tests, lambda X: C.hom_size(X, w.apex) > hom_limit)
    cop = _universal_report("biproduct.coproduct", C, _is_coproduct, w.apex, w.iota0,
                            w.iota1, tests, lambda X: C.hom_size(w.apex, X) > hom_limit)
    return [eqs.report(), prod, cop]


def _universal_report(law_id, C, test, P, a, b, tests, too_big):
    chk = LawCheck(law_id, C)
    skipped_any = False
    for X in tests:
        if too_big(X):
            skipped_any = True
            continue
        ok = test(C, P, a, b, [X])
        chk.claim((P, X), ok,
                  ["unique mediator"], ["none or several"])
    return chk.report("partial: large hom-sets skipped" if skipped_any else "")
