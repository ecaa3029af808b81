"""Constructions that produce CLDCs and related structures.

Lattices, semi-additive categories, semizero subcategories, slices and
coslices, products, Grothendieck total categories, the Kleisli category of
the exception monad, and the either-or-both tensor on a distributive
symmetric monoidal category with a zero object.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any

from .cldc import CldcStructure, LawFailure, assemble_cldc, cldc_mix
from .fincat import (BudgetExceeded, Category, CompositionError, Family, Functor,
                     HardFailure, LawCheck, Mor, NaturalTransformation, OpenCategory,
                     ProductCategory, check_functor, check_natural, is_isomorphism,
                     obj_label, run_path)
from .ldc import check_ldc_suite
from .limits import (Bicartesian, CoproductWitness, InitialWitness, ProductWitness,
                     TerminalWitness, certify_coproduct, certify_product,
                     classify_object, zero_structure)


class LatticeError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------- posets

class PosetCategory(Category):
    """A preorder as a category: one morphism a -> b exactly when a <= b."""

    def __init__(self, elements, leq, name="poset"):
        super().__init__(elements, name)
        self.leq = leq

    def identity(self, A):
        return Mor(A, A, None)

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError(f"{self.name}: {f.cod!r} != {g.dom!r}")
        return Mor(f.dom, g.cod, None)

    def _hom_list(self, A, B):
        return [Mor(A, B, None)] if self.leq(A, B) else []

    def hom_size(self, A, B):
        return 1 if self.leq(A, B) else 0

    def contains(self, f):
        return self.has_object(f.dom) and self.has_object(f.cod) and self.leq(f.dom, f.cod)

    def fast_inverse(self, f):
        return Mor(f.cod, f.dom, None) if self.leq(f.cod, f.dom) else None

    def mor_label(self, f):
        return f"{obj_label(f.dom)}<={obj_label(f.cod)}"


class FiniteBDL:
    """A finite bounded distributive lattice given by its order.

    ``leq`` may be any generating set of pairs; the reflexive-transitive
    closure is taken, then antisymmetry, existence of meets and joins and
    both distributive laws are checked.
    """

    def __init__(self, elements, leq, name="L"):
        self.elements = list(elements)
        self.name = name
        if len(set(self.elements)) != len(self.elements):
            raise LatticeError(f"{name}: repeated elements")
        if not self.elements:
            raise LatticeError(f"{name}: a bounded lattice has at least one element")
        idx = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        up = [1 << i for i in range(n)]
        for a, b in leq:
            if a not in idx or b not in idx:
                raise LatticeError(f"{name}: order mentions unknown element {a if a not in idx else b!r}")
            up[idx[a]] |= 1 << idx[b]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in range(n):
                    if acc >> j & 1:
                        acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in range(i + 1, n):
                if up[i] >> j & 1 and up[j] >> i & 1:
                    raise LatticeError(f"{name}: order is not antisymmetric",
                                       (self.elements[i], self.elements[j]))
        self._up = up
        self._idx = idx
        self._meet = {}
        self._join = {}
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                self._meet[a, b] = self._bound(i, j, lower=True)
                self._join[a, b] = self._bound(i, j, lower=False)
        self.top = self._extreme(lambda x: all(self.leq(y, x) for y in self.elements))
        self.bottom = self._extreme(lambda x: all(self.leq(x, y) for y in self.elements))
        bad = self.nondistributivity_witness()
        if bad is not None:
            a, b, c, which = bad
            raise LatticeError(f"{name}: not distributive at {(a, b, c)} ({which})", bad)

    def _bound(self, i, j, lower):
        n = len(self.elements)
        if lower:
            cands = [k for k in range(n) if self._up[k] >> i & 1 and self._up[k] >> j & 1]
            best = [k for k in cands if all(self._up[c] >> k & 1 for c in cands)]
        else:
            cands = [k for k in range(n) if self._up[i] >> k & 1 and self._up[j] >> k & 1]
            best = [k for k in cands if all(self._up[k] >> c & 1 for c in cands)]
        if not best:
            a, b = self.elements[i], self.elements[j]
            raise LatticeError(f"{self.name}: no {'meet' if lower else 'join'} of {a!r} and {b!r}",
                               (a, b))
        return self.elements[best[0]]

    def _extreme(self, pred):
        for x in self.elements:
            if pred(x):
                return x
        raise LatticeError(f"{self.name}: not bounded")

    def leq(self, a, b):
        return bool(self._up[self._idx[a]] >> self._idx[b] & 1)

    def meet(self, a, b):
        return self._meet[a, b]

    def join(self, a, b):
        return self._join[a, b]

    def nondistributivity_witness(self):
        E = self.elements
        for a, b, c in itertools.product(E, repeat=3):
            if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)):
                return (a, b, c, "meet over join")
            if self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), self.join(a, c)):
                return (a, b, c, "join over meet")
        return None

    def __len__(self):
        return len(self.elements)

    def covers(self):
        """Hasse diagram edges."""
        out = []
        for a in self.elements:
            for b in self.elements:
                if a != b and self.leq(a, b) and not any(
                        c not in (a, b) and self.leq(a, c) and self.leq(c, b)
                        for c in self.elements):
                    out.append((a, b))
        return out

    @classmethod
    def from_dict(cls, d, name=None):
        if not isinstance(d, dict) or "elements" not in d or "leq" not in d:
            raise LatticeError("lattice file needs 'elements' and 'leq'")
        elements = [e if not isinstance(e, list) else tuple(e) for e in d["elements"]]
        leq = [tuple(p) for p in d["leq"]]
        if any(len(p) != 2 for p in leq):
            raise LatticeError("each 'leq' entry is a pair [x, y]")
        return cls(elements, leq, name or d.get("name", "L"))

    def to_dict(self):
        return {"name": self.name, "elements": list(self.elements),
                "leq": [list(p) for p in self.covers()]}

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def __repr__(self):
        return f"<FiniteBDL {self.name} |{len(self)}|>"


def lattice_bicartesian(L):
    C = PosetCategory(L.elements, L.leq, L.name)

    def product(a, b):
        m = L.meet(a, b)
        return ProductWitness(a, b, m, Mor(m, a, None), Mor(m, b, None),
                              lambda f, g: Mor(f.dom, m, None))

    def coproduct(a, b):
        j = L.join(a, b)
        return CoproductWitness(a, b, j, Mor(a, j, None), Mor(b, j, None),
                                lambda f, g: Mor(j, f.cod, None))

    term = TerminalWitness(L.top, lambda A: Mor(A, L.top, None))
    init = InitialWitness(L.bottom, lambda A: Mor(L.bottom, A, None))
    return Bicartesian(C, product, term, coproduct, init, L.name)


def _unique_arrow(C, A, B, what):
    hs = C.hom(A, B)
    if len(hs) != 1:
        raise HardFailure(f"{what}: expected exactly one arrow {obj_label(A)} -> {obj_label(B)}")
    return hs[0]


def bdl_to_cldc(L, bound=12, certify=True):
    """The posetal CLDC of a distributive lattice; the distributors are the
    unique comparisons."""
    X = lattice_bicartesian(L)
    C = X.cat
    m, j = L.meet, L.join

    def dL(A, B, D):
        return _unique_arrow(C, m(A, j(B, D)), j(m(A, B), D), "deltaL")

    def dR(A, B, D):
        return _unique_arrow(C, m(j(A, B), D), j(A, m(B, D)), "deltaR")

    return assemble_cldc(X, dL, dR, bound=bound, certify=certify, name=f"bdl({L.name})")


# ---------------------------------------------------------------- semi-additive

def semiadditive_distributors(X, zs):
    """Both routes for each distributor, through the product and through the
    coproduct associator."""
    from .monoidal import derive_cartesian_monoidal, derive_cocartesian_monoidal
    C = X.cat
    T, P = derive_cartesian_monoidal(X), derive_cocartesian_monoidal(X)
    psi, psiinv = zs.psi, zs.psi_inv
    ident = C.identity

    def dR_times(A, B, D):
        return [("psi*1", X.fx(psi(A, B), ident(D))), T.assoc.step(A, B, D),
                ("psi^-1", psiinv(A, X.times(B, D)))]

    def dR_plus(A, B, D):
        return [("psi^-1", psiinv(X.plus(A, B), D)), P.assoc.step(A, B, D),
                ("1+psi", X.fp(ident(A), psi(B, D)))]

    def dL_times(A, B, D):
        return [("1*psi", X.fx(ident(A), psi(B, D))), T.assoc_inv.step(A, B, D),
                ("psi^-1", psiinv(X.times(A, B), D))]

    def dL_plus(A, B, D):
        return [("psi^-1", psiinv(A, X.plus(B, D))), P.assoc_inv.step(A, B, D),
                ("psi+1", X.fp(psi(A, B), ident(D)))]

    return {"dL": (dL_times, dL_plus), "dR": (dR_times, dR_plus)}


def semiadditive_to_cldc(X, objects=None, bound=12, certify=True, name=None):
    """The CLDC of a semi-additive category; its mix is the inverse of psi."""
    C = X.cat
    objs = list(C.objects if objects is None else objects)
    zs = zero_structure(X)
    if zs is None:
        raise ValueError(f"{C.name}: initial and terminal objects are not isomorphic")
    for A in objs:
        for B in objs:
            if zs.psi_inv(A, B) is None:
                raise ValueError(f"{C.name}: psi[{obj_label(A)},{obj_label(B)}] is not invertible")
    routes = semiadditive_distributors(X, zs)
    reps = []
    for key in ("dL", "dR"):
        via_x, via_p = routes[key]
        chk = LawCheck(f"semiadd.{key}_routes", C)
        for t in itertools.product(objs, repeat=3):
            chk.compare(t, via_x(*t), via_p(*t))
        reps.append(chk.report())
    dL = Family("dL", 3, lambda *t: run_path(C, routes["dL"][0](*t)))
    dR = Family("dR", 3, lambda *t: run_path(C, routes["dR"][0](*t)))
    S = assemble_cldc(X, dL, dR, objects=objs, bound=bound, certify=certify,
                      name=name or f"semiadd({C.name})")
    S.zero = zs
    if certify:
        inv = LawCheck("semiadd.mix_inverse_psi", C)
        for A in objs:
            for B in objs:
                mx, p = S.mix.mix(A, B), zs.psi(A, B)
                inv.compare((A, B), [("mix", mx), ("psi", p)], [("1", C.identity(X.times(A, B)))])
                inv.compare((A, B), [("psi", p), ("mix", mx)], [("1", C.identity(X.plus(A, B)))])
        reps.append(inv.report())
    S.reports = reps + S.reports
    bad = [r for r in reps if r.failed]
    if bad:
        raise HardFailure(f"{S.name}: {bad[0]}", bad[0])
    return S


# ---------------------------------------------------------------- subcategories

class FullSubcategory(OpenCategory):
    """Full subcategory cut out by a predicate; ``objects`` is the filtered
    index set of the base."""

    def __init__(self, base, predicate, name=None, objects=None):
        self.base = base
        self._pred = predicate
        self._seen = {}
        src = base.objects if objects is None else objects
        super().__init__([A for A in src if self.valid_object(A)],
                         name or f"sub({base.name})")
        self.max_hom = base.max_hom

    def valid_object(self, A):
        r = self._seen.get(A)
        if r is None:
            r = bool(self.base.has_object(A) and self._pred(A))
            self._seen[A] = r
        return r

    def identity(self, A):
        return self.base.identity(A)

    def compose(self, f, g):
        return self.base.compose(f, g)

    def _hom_list(self, A, B):
        return self.base.hom(A, B)

    def hom_size(self, A, B):
        return self.base.hom_size(A, B)

    def eq(self, f, g):
        return self.base.eq(f, g)

    def contains(self, f):
        return self.base.contains(f) and self.valid_object(f.dom) and self.valid_object(f.cod)

    def fast_inverse(self, f):
        return self.base.fast_inverse(f)

    def mor_label(self, f):
        return self.base.mor_label(f)


def _restricted(X, sub, terminal=None, initial=None):
    return Bicartesian(sub, X.prod, terminal or X.terminal, X.coprod,
                       initial or X.initial, sub.name)


def _restricted_cldc(S, sub, name, terminal=None, initial=None, bound=12, certify=True):
    Xs = _restricted(S.X, sub, terminal, initial)
    return assemble_cldc(Xs, lambda *t: S.deltaL(*t), lambda *t: S.deltaR(*t),
                         bound=bound, certify=certify, name=name)


def _closure_report(law_id, X, sub, objs):
    chk = LawCheck(law_id, sub)
    chk.claim((), sub.has_object(X.top), ["top"], ["in subcategory"])
    chk.claim((), sub.has_object(X.bot), ["bot"], ["in subcategory"])
    for A in objs:
        for B in objs:
            for op, P in (("x", X.times(A, B)), ("+", X.plus(A, B))):
                chk.claim((A, B), sub.has_object(P), [f"{obj_label(A)}{op}{obj_label(B)}"],
                          ["in subcategory"])
    return chk.report()


def _posetal_report(law_id, C, objs):
    chk = LawCheck(law_id, C)
    for A in objs:
        for B in objs:
            n = C.hom_size(A, B)
            chk.claim((A, B), n <= 1, [f"|hom| = {n}"], ["at most 1"])
    return chk.report()


def semizero_objects(S, objects=None):
    objs = list(S.objects if objects is None else objects)
    return [A for A in objs if classify_object(S.X, A, objs)["semizero"]]


def sz_subcategory(S, bound=12):
    """The full subcategory of semizero objects, certified as a posetal CLDC."""
    X = S.X
    objs = list(S.objects)
    memo = {}

    def semizero(A):
        if A not in memo:
            memo[A] = classify_object(X, A, objs)["semizero"]
        return memo[A]

    sub = FullSubcategory(X.cat, semizero, f"SZ[{X.cat.name}]", objs)
    pre = [_closure_report("sz.closed", X, sub, list(sub.objects))]
    Z = _restricted_cldc(S, sub, f"SZ[{S.name}]", bound=bound)
    Z.reports = pre + [_posetal_report("sz.posetal", sub, list(sub.objects))] + Z.reports
    return Z


def _strict_object_maps(L, X, targets, image_ok=None):
    """Object maps from a lattice that send the lattice operations to the
    chosen (co)products on the nose."""
    E = L.elements
    for img in itertools.product(targets, repeat=len(E)):
        F = dict(zip(E, img))
        if F[L.top] != X.top or F[L.bottom] != X.bot:
            continue
        ok = True
        for a in E:
            for b in E:
                if (F[L.meet(a, b)] != X.times(F[a], F[b])
                        or F[L.join(a, b)] != X.plus(F[a], F[b])):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield F


def _strict_cartesian_linear_functors(L, S, targets, budget=1 << 16):
    """Enumerate functors from the lattice category that preserve the chosen
    products, coproducts, bangs and distributors strictly."""
    X = S.X
    C = X.cat
    E = L.elements
    arrows = [(a, b) for a in E for b in E if L.leq(a, b) and a != b]
    for F in _strict_object_maps(L, X, targets):
        choices = [C.hom(F[a], F[b]) for a, b in arrows]
        total = 1
        for c in choices:
            total *= len(c)
        if total > budget:
            raise BudgetExceeded(f"functor enumeration: {total} morphism assignments")
        for pick in itertools.product(*choices):
            M = dict(zip(arrows, pick))
            for a in E:
                M[a, a] = C.identity(F[a])
            if _strictly_structural(L, S, F, M):
                yield F, M


def _strictly_structural(L, S, F, M):
    X = S.X
    C = X.cat
    E = L.elements
    for a, b, c in itertools.product(E, repeat=3):
        if L.leq(a, b) and L.leq(b, c) and C.compose(M[a, b], M[b, c]) != M[a, c]:
            return False
    for a in E:
        for b in E:
            m, j = L.meet(a, b), L.join(a, b)
            if M[m, a] != X.pi0(F[a], F[b]) or M[m, b] != X.pi1(F[a], F[b]):
                return False
            if M[a, j] != X.iota0(F[a], F[b]) or M[b, j] != X.iota1(F[a], F[b]):
                return False
        if M[a, L.top] != X.t(F[a]) or M[L.bottom, a] != X.b(F[a]):
            return False
    for a, b, c in itertools.product(E, repeat=3):
        m, j = L.meet, L.join
        if M[m(a, j(b, c)), j(m(a, b), c)] != S.deltaL(F[a], F[b], F[c]):
            return False
        if M[m(j(a, b), c), j(a, m(b, c))] != S.deltaR(F[a], F[b], F[c]):
            return False
    return True


def sz_adjunction_counts(L, S, Z=None):
    """Count lattice maps into SZ[X] and strict Frobenius cartesian linear
    functors into X; the two counts agree."""
    Z = Z or sz_subcategory(S)
    left = sum(1 for F in _strict_object_maps(L, S.X, list(Z.objects))
               if all(Z.cat.hom_size(F[a], F[b]) == 1
                      for a in L.elements for b in L.elements if L.leq(a, b)))
    right = list(_strict_cartesian_linear_functors(L, S, list(S.objects)))
    land = all(Z.cat.has_object(F[a]) for F, _ in right for a in L.elements)
    chk = LawCheck("sz.adjunction", S.cat)
    chk.claim((L.name,), left == len(right), [f"maps into SZ: {left}"],
              [f"functors into X: {len(right)}"])
    chk.claim((L.name,), land, ["functors into X"], ["land in SZ"])
    return {"left": left, "right": len(right), "report": chk.report()}


# ---------------------------------------------------------------- slices

@dataclass
class EquivalenceData:
    forward: Functor
    backward: Functor
    unit: NaturalTransformation
    counit: NaturalTransformation
    reports: list = field(default_factory=list)


@dataclass
class SliceData:
    slice: CldcStructure
    coslice: CldcStructure
    slice_equivalence: EquivalenceData
    coslice_equivalence: EquivalenceData
    reports: list = field(default_factory=list)


def _iso_report(law_id, C, eta, objs):
    chk = LawCheck(law_id, C)
    for A in objs:
        c = eta.component(A)
        chk.claim((A,), is_isomorphism(C, c) is not None, [f"{eta.name}[{obj_label(A)}]"],
                  ["an isomorphism"], c)
    return chk.report()


def _equivalence_reports(prefix, E, objsA, objsB):
    reps = []
    for tag, F, objs in (("forward", E.forward, objsA), ("backward", E.backward, objsB)):
        for r in check_functor(F, objs):
            r.law_id = f"{prefix}.{tag}.{r.law_id}"
            reps.append(r)
    for tag, eta, objs in (("unit", E.unit, objsA), ("counit", E.counit, objsB)):
        C = eta.source.target
        for r in check_natural(eta, objs):
            r.law_id = f"{prefix}.{tag}.{r.law_id}"
            reps.append(r)
        reps.append(_iso_report(f"{prefix}.{tag}.iso", C, eta, objs))
    return reps


def _psi_mix_reports(prefix, Sx, zs, objs):
    X, C = Sx.X, Sx.cat
    semi = LawCheck(f"{prefix}.semi_additive", C)
    inv = LawCheck(f"{prefix}.psi_inverse_mix", C)
    for A in objs:
        for B in objs:
            p = zs.psi(A, B)
            semi.claim((A, B), is_isomorphism(C, p) is not None, ["psi"], ["an isomorphism"], p)
            mx = Sx.mix.mix(A, B)
            inv.compare((A, B), [("psi", p), ("mix", mx)], [("1", C.identity(X.plus(A, B)))])
            inv.compare((A, B), [("mix", mx), ("psi", p)], [("1", C.identity(X.times(A, B)))])
    return [semi.report(), inv.report()]


def slice_over_bottom(S, bound=12):
    """Objects admitting a map to the par unit; it is terminal there."""
    X = S.X
    C = X.cat
    bot = X.bot
    sub = FullSubcategory(C, lambda A: C.hom_size(A, bot) > 0, f"{C.name}/bot", S.objects)
    term = TerminalWitness(bot, lambda A: C.hom(A, bot)[0])
    Sl = _restricted_cldc(S, sub, f"{S.name}/bot", terminal=term, bound=bound)
    zs = zero_structure(Sl.X)
    if zs is None:
        raise HardFailure(f"{sub.name}: terminal and initial objects differ")
    Sl.zero = zs
    Sl.reports = _psi_mix_reports("slice", Sl, zs, list(sub.objects)) + Sl.reports
    return Sl


def coslice_under_top(S, bound=12):
    """Objects admitting a map from the tensor unit; it is initial there."""
    X = S.X
    C = X.cat
    top = X.top
    sub = FullSubcategory(C, lambda A: C.hom_size(top, A) > 0, f"top/{C.name}", S.objects)
    init = InitialWitness(top, lambda A: C.hom(top, A)[0])
    Sl = _restricted_cldc(S, sub, f"top/{S.name}", initial=init, bound=bound)
    zs = zero_structure(Sl.X)
    if zs is None:
        raise HardFailure(f"{sub.name}: terminal and initial objects differ")
    Sl.zero = zs
    Sl.reports = _psi_mix_reports("coslice", Sl, zs, list(sub.objects)) + Sl.reports
    return Sl


def slice_equivalence(S, Sl):
    """X/bot is equivalent to the full subcategory on the objects A x bot."""
    X = S.X
    C = X.cat
    bot = X.bot
    objs = list(Sl.objects)
    images = {X.times(A, bot) for A in S.objects}
    E = FullSubcategory(C, lambda B: B in images, f"{C.name}x bot", sorted(images, key=repr))
    ident = C.identity
    F = Functor(Sl.cat, E, lambda A: X.times(A, bot), lambda f: X.fx(f, ident(bot)), "-x bot")
    G = Functor(E, Sl.cat, lambda A: A, lambda f: f, "incl")
    unit = NaturalTransformation(Functor(Sl.cat, Sl.cat, lambda A: A, lambda f: f, "Id"),
                                 _compose(F, G), lambda A: X.pair(ident(A), C.hom(A, bot)[0]),
                                 "alpha")
    counit = NaturalTransformation(_compose(G, F), Functor(E, E, lambda A: A, lambda f: f, "Id"),
                                   lambda B: X.pi0(B, bot), "beta")
    data = EquivalenceData(F, G, unit, counit)
    data.reports = _equivalence_reports("slice.equivalence", data, objs, list(E.objects))
    return data


def coslice_equivalence(S, Sl):
    """top/X is equivalent to the full subcategory on the objects A + top."""
    X = S.X
    C = X.cat
    top = X.top
    objs = list(Sl.objects)
    images = {X.plus(A, top) for A in S.objects}
    E = FullSubcategory(C, lambda B: B in images, f"{C.name}+top", sorted(images, key=repr))
    ident = C.identity
    F = Functor(Sl.cat, E, lambda A: X.plus(A, top), lambda f: X.fp(f, ident(top)), "-+top")
    G = Functor(E, Sl.cat, lambda A: A, lambda f: f, "incl")
    unit = NaturalTransformation(Functor(Sl.cat, Sl.cat, lambda A: A, lambda f: f, "Id"),
                                 _compose(F, G), lambda A: _inverse(C, X.copair(ident(A), C.hom(top, A)[0])),
                                 "alpha")
    counit = NaturalTransformation(_compose(G, F), Functor(E, E, lambda A: A, lambda f: f, "Id"),
                                   lambda B: _inverse(C, X.iota0(B, top)), "beta")
    data = EquivalenceData(F, G, unit, counit)
    data.reports = _equivalence_reports("coslice.equivalence", data, objs, list(E.objects))
    return data


def _inverse(C, f):
    g = is_isomorphism(C, f)
    if g is None:
        raise HardFailure(f"{C.mor_label(f)} is not invertible")
    return g


def _compose(F, G):
    return Functor(F.source, G.target, lambda A: G.obj(F.obj(A)),
                   lambda f: G.mor(F.mor(f)), f"{F.name};{G.name}")


def slice_coslice(S, bound=12):
    Sl, Co = slice_over_bottom(S, bound), coslice_under_top(S, bound)
    se, ce = slice_equivalence(S, Sl), coslice_equivalence(S, Co)
    return SliceData(Sl, Co, se, ce, Sl.reports + Co.reports + se.reports + ce.reports)


def semiadditive_slice_iso(S, Sl):
    """For semi-additive X every object maps to bot, so X/bot has the same
    objects and morphisms."""
    C = S.cat
    chk = LawCheck("slice.semiadditive_iso", C)
    for A in S.objects:
        chk.claim((A,), Sl.cat.has_object(A), [obj_label(A)], ["in X/bot"])
        for B in S.objects:
            chk.claim((A, B), C.hom(A, B) == Sl.cat.hom(A, B), ["hom in X"], ["hom in X/bot"])
    return chk.report()


# ---------------------------------------------------------------- products

def product_cldc(S1, S2, bound=12, certify=True):
    """Componentwise CLDC structure on the product category."""
    X1, X2 = S1.X, S2.X
    P = ProductCategory(S1.cat, S2.cat)

    def mk(d, c, f, g):
        return Mor(d, c, (f, g))

    def product(A, B):
        apex = (X1.times(A[0], B[0]), X2.times(A[1], B[1]))

        def pair(f, g):
            return mk(f.dom, apex, X1.pair(f.data[0], g.data[0]), X2.pair(f.data[1], g.data[1]))
        return ProductWitness(A, B, apex,
                              mk(apex, A, X1.pi0(A[0], B[0]), X2.pi0(A[1], B[1])),
                              mk(apex, B, X1.pi1(A[0], B[0]), X2.pi1(A[1], B[1])), pair)

    def coproduct(A, B):
        apex = (X1.plus(A[0], B[0]), X2.plus(A[1], B[1]))

        def copair(f, g):
            return mk(apex, f.cod, X1.copair(f.data[0], g.data[0]),
                      X2.copair(f.data[1], g.data[1]))
        return CoproductWitness(A, B, apex,
                                mk(A, apex, X1.iota0(A[0], B[0]), X2.iota0(A[1], B[1])),
                                mk(B, apex, X1.iota1(A[0], B[0]), X2.iota1(A[1], B[1])), copair)

    top, bot = (X1.top, X2.top), (X1.bot, X2.bot)
    term = TerminalWitness(top, lambda A: mk(A, top, X1.t(A[0]), X2.t(A[1])))
    init = InitialWitness(bot, lambda A: mk(bot, A, X1.b(A[0]), X2.b(A[1])))
    X = Bicartesian(P, product, term, coproduct, init, P.name)

    def delta(which):
        def resolve(A, B, D):
            f = getattr(S1, which)(A[0], B[0], D[0])
            g = getattr(S2, which)(A[1], B[1], D[1])
            return mk((f.dom, g.dom), (f.cod, g.cod), f, g)
        return resolve

    return assemble_cldc(X, delta("deltaL"), delta("deltaR"), bound=bound, certify=certify,
                         name=f"{S1.name}x{S2.name}")


# ---------------------------------------------------------------- Grothendieck

class BitsetLattice:
    """The powerset of ``n`` points, elements as bitmasks."""

    def __init__(self, n, name=None):
        self.n = n
        self.top = (1 << n) - 1
        self.bottom = 0
        self.name = name or f"2^{n}"

    @property
    def elements(self):
        return range(1 << self.n)

    def __len__(self):
        return 1 << self.n

    def contains(self, x):
        return isinstance(x, int) and 0 <= x <= self.top

    def leq(self, a, b):
        return a & ~b == 0

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        return a | b


def _lattice_contains(Lat, x):
    if hasattr(Lat, "contains"):
        return Lat.contains(x)
    return x in Lat.elements


class LatticeValuedFunctor:
    """A contravariant functor from a semi-additive CLDC to lattices.

    ``act(f, b)`` is F(f) applied to b in F(cod f), landing in F(dom f).
    """

    def __init__(self, base, fiber, act, name="F"):
        self.base = base
        self._fiber = fiber
        self._act = act
        self.name = name
        self._fibers = {}
        self._memo = {}

    def fiber(self, A):
        Lat = self._fibers.get(A)
        if Lat is None:
            Lat = self._fiber(A)
            self._fibers[A] = Lat
        return Lat

    def __call__(self, f, b):
        key = (f, b)
        r = self._memo.get(key)
        if r is None:
            r = self._act(f, b)
            self._memo[key] = r
        return r


def constant_functor(base, name="const"):
    one = FiniteBDL([0], [], "1")
    return LatticeValuedFunctor(base, lambda A: one, lambda f, b: 0, name)


def check_lattice_functor(F, objects=None):
    """Functoriality and lattice-homomorphism laws, exhaustively over the
    index objects, plus the adjunction F(psi;pi^j) -| F(iota^j)."""
    S = F.base
    C = S.cat
    X = S.X
    objs = list(S.objects if objects is None else objects)
    ident = LawCheck(f"{F.name}.identity", C)
    comp = LawCheck(f"{F.name}.composition", C)
    hom = LawCheck(f"{F.name}.homomorphism", C)
    adj = LawCheck(f"{F.name}.adjunction", C)
    for A in objs:
        for x in F.fiber(A).elements:
            ident.claim((A,), F(C.identity(A), x) == x, [f"F(1)({x})"], [str(x)])
    for A in objs:
        for B in objs:
            LA, LB = F.fiber(A), F.fiber(B)
            for f in C.hom(A, B):
                ok = (F(f, LB.top) == LA.top and F(f, LB.bottom) == LA.bottom)
                for b1 in LB.elements:
                    if not ok:
                        break
                    if not _lattice_contains(LA, F(f, b1)):
                        ok = False
                    for b2 in LB.elements:
                        if (F(f, LB.meet(b1, b2)) != LA.meet(F(f, b1), F(f, b2))
                                or F(f, LB.join(b1, b2)) != LA.join(F(f, b1), F(f, b2))):
                            ok = False
                            break
                hom.claim((A, B), ok, [f"F({C.mor_label(f)})"], ["a lattice homomorphism"])
                for D in objs:
                    LD = F.fiber(D)
                    for g in C.hom(B, D):
                        fg = C.compose(f, g)
                        for d in LD.elements:
                            comp.claim((A, B, D), F(fg, d) == F(f, F(g, d)),
                                       [f"F(f;g)({d})"], [f"F(f)(F(g)({d}))"])
    zs = getattr(S, "zero", None) or zero_structure(X)
    if zs is None:
        raise HardFailure(f"{C.name}: base is not semi-additive")
    for A in objs:
        for B in objs:
            S_AB = X.plus(A, B)
            LS = F.fiber(S_AB)
            for j, (src, proj, inj) in enumerate(((A, X.pi0(A, B), X.iota0(A, B)),
                                                   (B, X.pi1(A, B), X.iota1(A, B)))):
                into = C.compose(zs.psi(A, B), proj)
                for a in F.fiber(src).elements:
                    lifted = F(into, a)
                    for c in LS.elements:
                        adj.claim((A, B), LS.leq(lifted, c) == F.fiber(src).leq(a, F(inj, c)),
                                  [f"F(psi;pi{j})({a}) <= {c}"], [f"{a} <= F(iota{j})({c})"])
    return [ident.report(), comp.report(), hom.report(), adj.report()]


class GrothendieckCategory(OpenCategory):
    """Objects (A, a) with a in F(A); a morphism (A, a) -> (B, b) is a base
    morphism f with a <= F(f)(b)."""

    def __init__(self, F, name=None):
        self.F = F
        self.base = F.base.cat
        self._ids = {}
        objs = [(A, a) for A in F.base.objects for a in F.fiber(A).elements]
        super().__init__(objs, name or f"int {F.name}")

    def valid_object(self, P):
        return (isinstance(P, tuple) and len(P) == 2 and self.base.has_object(P[0])
                and _lattice_contains(self.F.fiber(P[0]), P[1]))

    def lift(self, P, Q, f):
        return Mor(P, Q, f.data)

    def lower(self, f):
        return Mor(f.dom[0], f.cod[0], f.data)

    def allowed(self, P, Q, f):
        return self.F.fiber(P[0]).leq(P[1], self.F(f, Q[1]))

    def identity(self, P):
        m = self._ids.get(P)
        if m is None:
            m = self._ids[P] = Mor(P, P, self.base.identity(P[0]).data)
        return m

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError(f"{self.name}: {obj_label(f.cod)} != {obj_label(g.dom)}")
        B = f.cod[0]
        h = self.base.compose(Mor(f.dom[0], B, f.data), Mor(B, g.cod[0], g.data))
        return Mor(f.dom, g.cod, h.data)

    def _hom_list(self, P, Q):
        return [self.lift(P, Q, f) for f in self.base.hom(P[0], Q[0]) if self.allowed(P, Q, f)]

    def contains(self, f):
        return (self.valid_object(f.dom) and self.valid_object(f.cod)
                and self.base.contains(self.lower(f)) and self.allowed(f.dom, f.cod, self.lower(f)))

    def fast_inverse(self, f):
        g = self.base.fast_inverse(self.lower(f))
        if g is NotImplemented or g is None:
            return g
        return self.lift(f.cod, f.dom, g) if self.allowed(f.cod, f.dom, g) else None

    def mor_label(self, f):
        return f"{f.data}:{obj_label(f.dom)}->{obj_label(f.cod)}"


def grothendieck_bicartesian(F, G=None):
    S = F.base
    X = S.X
    G = G or GrothendieckCategory(F)
    zs = getattr(S, "zero", None) or zero_structure(X)
    if zs is None:
        raise HardFailure(f"{S.cat.name}: base is not semi-additive")
    C = S.cat
    lift, lower = G.lift, G.lower

    def product(P, Q):
        (A, a), (B, b) = P, Q
        p0, p1 = X.pi0(A, B), X.pi1(A, B)
        apex = (X.times(A, B), F.fiber(X.times(A, B)).meet(F(p0, a), F(p1, b)))

        def pair(f, g):
            return lift(f.dom, apex, X.pair(lower(f), lower(g)))
        return ProductWitness(P, Q, apex, lift(apex, P, p0), lift(apex, Q, p1), pair)

    def coproduct(P, Q):
        (A, a), (B, b) = P, Q
        psi = zs.psi(A, B)
        S_ = X.plus(A, B)
        fib = F.fiber(S_).join(F(C.compose(psi, X.pi0(A, B)), a),
                               F(C.compose(psi, X.pi1(A, B)), b))
        apex = (S_, fib)

        def copair(f, g):
            return lift(apex, f.cod, X.copair(lower(f), lower(g)))
        return CoproductWitness(P, Q, apex, lift(P, apex, X.iota0(A, B)),
                                lift(Q, apex, X.iota1(A, B)), copair)

    zero = X.bot
    top = (zero, F.fiber(zero).top)
    bot = (zero, F.fiber(zero).bottom)
    term = TerminalWitness(top, lambda P: lift(P, top, X.t(P[0])))
    init = InitialWitness(bot, lambda P: lift(bot, P, X.b(P[0])))
    return Bicartesian(G, product, term, coproduct, init, G.name)


def grothendieck(F, bound=12, certify=True, strict=True, objects=None, hom_limit=1 << 12):
    """The total category of F with the base distributors.

    Certification covers the functor laws, the universal properties of the
    chosen (co)products, that every distributor component is a morphism of
    the total category, and the symmetric LDC suite.  With ``strict`` any
    failure raises LawFailure carrying every report; otherwise the failing
    reports stay on the returned structure and ``mix`` is left unset.
    """
    S = F.base
    G = GrothendieckCategory(F)
    Xg = grothendieck_bicartesian(F, G)

    def delta(which, dom, cod):
        def resolve(P, Q, R):
            f = getattr(S, which)(P[0], Q[0], R[0])
            return G.lift(dom(P, Q, R), cod(P, Q, R), f)
        return resolve

    t, p = Xg.times, Xg.plus
    dL = delta("deltaL", lambda P, Q, R: t(P, p(Q, R)), lambda P, Q, R: p(t(P, Q), R))
    dR = delta("deltaR", lambda P, Q, R: t(p(P, Q), R), lambda P, Q, R: p(P, t(Q, R)))
    out = assemble_cldc(Xg, dL, dR, objects=objects, bound=bound, certify=False,
                        name=f"int {F.name}")
    if not certify:
        return out
    objs = list(out.objects)
    reps = check_lattice_functor(F)
    reps += universal_reports(Xg, objs, hom_limit)
    reps.append(_hom_membership_report(G, objs))
    reps.append(_delta_typed_report(out, objs))
    if strict and any(r.failed for r in reps):
        # the LDC suite is by far the slowest part; its preconditions already fail
        out.reports = reps
        bad = [r for r in reps if r.failed]
        raise LawFailure(f"{out.name}: {bad[0]}", reps)
    reps += check_ldc_suite(out.ldc, objs, bound)
    out.reports = reps
    if not any(r.failed for r in reps):
        out.mix = cldc_mix(out, bound=bound)
    elif strict:
        bad = [r for r in reps if r.failed]
        raise LawFailure(f"{out.name}: {bad[0]}", reps)
    return out


def universal_reports(X, objs, hom_limit=1 << 12):
    """Universal properties of every chosen binary (co)product of index
    objects, tested against every index object."""
    C = X.cat
    prod = LawCheck("limits.product", C)
    cop = LawCheck("limits.coproduct", C)
    big = False
    for A in objs:
        for B in objs:
            for chk, rep in ((prod, certify_product(C, X.prod(A, B), objs, hom_limit)),
                             (cop, certify_coproduct(C, X.coprod(A, B), objs, hom_limit))):
                chk.checked += rep.checked
                big = big or bool(rep.note)
                if rep.failed and chk.witness is None:
                    chk.witness = rep.witness
    term = LawCheck("limits.terminal", C)
    init = LawCheck("limits.initial", C)
    for A in objs:
        n, m = C.hom_size(A, X.top), C.hom_size(X.bot, A)
        term.claim((A,), n == 1, [f"|hom({obj_label(A)},top)| = {n}"], ["1"])
        init.claim((A,), m == 1, [f"|hom(bot,{obj_label(A)})| = {m}"], ["1"])
    note = "partial: large hom-sets skipped" if big else ""
    return [term.report(), init.report(), prod.report(note), cop.report(note)]


def _delta_typed_report(S, objs):
    C = S.cat
    chk = LawCheck("groth.delta_is_morphism", C)
    for t in itertools.product(objs, repeat=3):
        for fam in (S.deltaL, S.deltaR):
            f = fam(*t)
            chk.claim(t, C.contains(f), [f"{fam.name}[{obj_label(t)}]"],
                      ["a morphism of the total category"], f)
    return chk.report()


def _hom_membership_report(G, objs):
    """Membership decided by the order equals membership decided by meets."""
    chk = LawCheck("groth.hom_membership", G)
    F = G.F
    for P in objs:
        LA = F.fiber(P[0])
        for Q in objs:
            listed = set(G.hom(P, Q))
            for f in G.base.hom(P[0], Q[0]):
                via_meet = LA.meet(P[1], F(f, Q[1])) == P[1]
                chk.claim((P, Q), (G.lift(P, Q, f) in listed) == via_meet,
                          [G.base.mor_label(f)], ["membership agrees"])
    return chk.report()


# ---------------------------------------------------------------- Kleisli

class KleisliCategory(OpenCategory):
    """Kleisli category of the exception monad A -> A + top on a
    bicartesian engine ``D``.  A morphism A -> B carries its underlying
    D-morphism A -> B + top as data, so equality is equality in D."""

    def __init__(self, D, name=None):
        self.D = D
        self.E = D.cat
        self._mu = {}
        super().__init__(self.E.objects, name or f"Kl({self.E.name})")
        self.max_hom = self.E.max_hom

    def valid_object(self, A):
        return self.E.has_object(A)

    def T(self, B):
        return self.D.plus(B, self.D.top)

    def mu(self, B):
        m = self._mu.get(B)
        if m is None:
            D = self.D
            m = self._mu[B] = D.copair(self.E.identity(self.T(B)), D.iota1(B, D.top))
        return m

    def lift(self, g):
        return Mor(g.dom, g.cod, self.E.compose(g, self.D.iota0(g.cod, self.D.top)))

    def identity(self, A):
        return Mor(A, A, self.D.iota0(A, self.D.top))

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError(f"{self.name}: {obj_label(f.cod)} != {obj_label(g.dom)}")
        E, D = self.E, self.D
        h = E.then(f.data, D.fp(g.data, E.identity(D.top)), self.mu(g.cod))
        return Mor(f.dom, g.cod, h)

    def _hom_list(self, A, B):
        return [Mor(A, B, h) for h in self.E.hom(A, self.T(B))]

    def hom_size(self, A, B):
        return self.E.hom_size(A, self.T(B))

    def contains(self, f):
        d = f.data
        return (isinstance(d, Mor) and self.E.contains(d) and d.dom == f.dom
                and d.cod == self.T(f.cod))

    def total_part(self, f):
        """The D-morphism g with g;iota0 = f, or None; NotImplemented when
        that cannot be decided cheaply."""
        E = self.E
        hook = getattr(E, "restrict_codomain", None)
        if hook is not None:
            return hook(f.data, f.cod)
        if E.hom_size(f.dom, f.cod) > 1 << 12:
            return NotImplemented
        for g in E.hom(f.dom, f.cod):
            if self.lift(g).data == f.data:
                return g
        return None

    def fast_inverse(self, f):
        g = self.total_part(f)
        if g is None or g is NotImplemented:
            return g
        h = is_isomorphism(self.E, g)
        return None if h is None else self.lift(h)

    def mor_label(self, f):
        return f"[{self.E.mor_label(f.data)}]"


def _inv(C, f):
    g = is_isomorphism(C, f)
    if g is None:
        raise HardFailure(f"{C.mor_label(f)} is not invertible")
    return g


def kleisli_pairing_iso(D, A, B):
    """(A+top) x (B+top) -> ((A+B)+(AxB))+top, as the inverse of its copairing
    presentation."""
    E = D.cat
    top = D.top
    iA, iB = D.iota0(A, top), D.iota0(B, top)
    eA, eB = D.iota1(A, top), D.iota1(B, top)
    legA = D.pair(iA, E.compose(D.t(A), eB))
    legB = D.pair(E.compose(D.t(B), eA), iB)
    legAB = D.fx(iA, iB)
    legT = D.pair(eA, eB)
    return _inv(E, D.copair(D.copair(D.copair(legA, legB), legAB), legT))


def kleisli_bicartesian(K):
    D, E = K.D, K.E
    top, bot = D.top, D.bot
    memo = {}

    def coproduct(A, B):
        apex = D.plus(A, B)

        def copair(f, g):
            return Mor(apex, f.cod, D.copair(f.data, g.data))
        return CoproductWitness(A, B, apex, K.lift(D.iota0(A, B)), K.lift(D.iota1(A, B)), copair)

    def product(A, B):
        apex = D.plus(D.plus(A, B), D.times(A, B))
        p0 = D.copair(D.copair(D.iota0(A, top), E.compose(D.t(B), D.iota1(A, top))),
                      E.compose(D.pi0(A, B), D.iota0(A, top)))
        p1 = D.copair(D.copair(E.compose(D.t(A), D.iota1(B, top)), D.iota0(B, top)),
                      E.compose(D.pi1(A, B), D.iota0(B, top)))

        def pair(f, g):
            k = memo.get((A, B))
            if k is None:
                k = memo[A, B] = kleisli_pairing_iso(D, A, B)
            return Mor(f.dom, apex, E.compose(D.pair(f.data, g.data), k))
        return ProductWitness(A, B, apex, Mor(apex, A, p0), Mor(apex, B, p1), pair)

    term = TerminalWitness(bot, lambda A: Mor(A, bot, E.compose(D.t(A), D.iota1(bot, top))))
    init = InitialWitness(bot, lambda A: Mor(bot, A, D.b(K.T(A))))
    return Bicartesian(K, product, term, coproduct, init, K.name)


def tau_plus(D, W, X, Y, Z):
    """(W+X)+(Y+Z) -> (W+Y)+(X+Z)"""
    return D.copair(D.fp(D.iota0(W, Y), D.iota0(X, Z)), D.fp(D.iota1(W, Y), D.iota1(X, Z)))


def d_left(X, M, A, B, Cc):
    """[1*iota0, 1*iota1] : (A*B)+(A*C) -> A*(B+C) for a monoidal M."""
    return X.copair(M.idl(A, X.iota0(B, Cc)), M.idl(A, X.iota1(B, Cc)))


def d_right(X, M, A, B, Cc):
    """[iota0*1, iota1*1] : (A*C)+(B*C) -> (A+B)*C"""
    return X.copair(M.idr(X.iota0(A, B), Cc), M.idr(X.iota1(A, B), Cc))


def kleisli_plus_map(K, f, g):
    """Coproduct of Kleisli maps through the flip and the collapse of top+top."""
    D, E = K.D, K.E
    top = D.top
    A2, B2 = f.cod, g.cod
    h = E.then(D.fp(f.data, g.data), tau_plus(D, A2, top, B2, top),
               D.fp(E.identity(D.plus(A2, B2)), D.t(D.plus(top, top))))
    return Mor(D.plus(f.dom, g.dom), D.plus(A2, B2), h)


def kleisli_times_map(K, f, g, Tx=None, Pp=None):
    """The restriction product of Kleisli maps."""
    from .monoidal import derive_cartesian_monoidal, derive_cocartesian_monoidal
    D, E = K.D, K.E
    Tx = Tx or derive_cartesian_monoidal(D)
    Pp = Pp or derive_cocartesian_monoidal(D)
    top = D.top
    A2, B2 = f.cod, g.cod
    Bt = D.plus(B2, top)
    dR = _inv(E, d_right(D, Tx, A2, top, Bt))
    dL = _inv(E, d_left(D, Tx, A2, B2, top))
    rest = D.plus(D.times(A2, top), D.times(top, Bt))
    h = E.then(D.fx(f.data, g.data), dR, D.fp(dL, E.identity(D.times(top, Bt))),
               Pp.assoc(D.times(A2, B2), D.times(A2, top), D.times(top, Bt)),
               D.fp(E.identity(D.times(A2, B2)), D.t(rest)))
    return Mor(D.times(f.dom, g.dom), D.times(A2, B2), h)


@dataclass
class DistributiveSmcWithZero:
    """Coproducts plus a symmetric monoidal structure distributing over them,
    with the initial object also terminal."""
    X: Any
    smc: Any
    name: str = "M"

    @property
    def cat(self):
        return self.X.cat

    @property
    def zero(self):
        return self.X.bot

    def dL(self, A, B, Cc):
        return d_left(self.X, self.smc, A, B, Cc)

    def dR(self, A, B, Cc):
        return d_right(self.X, self.smc, A, B, Cc)

    def uL(self, A):
        return self.X.b(self.smc.ob(self.zero, A))

    def uR(self, A):
        return self.X.b(self.smc.ob(A, self.zero))


def certify_distributive_smc(M, objects=None, bound=12):
    from .monoidal import check_monoidal_laws
    X, C = M.X, M.cat
    objs = list(C.objects if objects is None else objects)
    reps = check_monoidal_laws(M.smc, objs, bound, f"{M.name}.smc")
    zero = LawCheck(f"{M.name}.zero_object", C)
    zero.claim((), X.top == X.bot, [f"top = {obj_label(X.top)}"], [f"bot = {obj_label(X.bot)}"])
    for A in objs:
        zero.claim((A,), C.hom_size(A, X.bot) == 1 and C.hom_size(X.bot, A) == 1,
                   [f"maps {obj_label(A)} <-> zero"], ["exactly one each way"])
    reps.append(zero.report())
    for name, fam, arity in (("dL", M.dL, 3), ("dR", M.dR, 3), ("uL", M.uL, 1), ("uR", M.uR, 1)):
        chk = LawCheck(f"{M.name}.canonical_{name}_iso", C)
        for t in itertools.product(objs, repeat=arity):
            f = fam(*t)
            chk.claim(t, is_isomorphism(C, f) is not None, [name], ["an isomorphism"], f)
        reps.append(chk.report())
    return reps


def kleisli_smc(K, X=None):
    """The restriction product as a symmetric monoidal structure on the
    Kleisli category, with the base terminal as unit."""
    from .monoidal import MonoidalStructure, derive_cartesian_monoidal, derive_cocartesian_monoidal
    D = K.D
    X = X or kleisli_bicartesian(K)
    Tx, Pp = derive_cartesian_monoidal(D), derive_cocartesian_monoidal(D)
    lift = K.lift
    smc = MonoidalStructure(
        K, D.times, lambda f, g: kleisli_times_map(K, f, g, Tx, Pp), D.top,
        lambda A, B, Cc: lift(Tx.assoc(A, B, Cc)), lambda A: lift(Tx.runit(A)),
        lambda A: lift(Tx.lunit(A)), lambda A, B: lift(Tx.sym(A, B)),
        assoc_inv=lambda A, B, Cc: lift(Tx.assoc_inv(A, B, Cc)),
        runit_inv=lambda A: lift(Tx.runit_inv(A)), lunit_inv=lambda A: lift(Tx.lunit_inv(A)),
        name="x")
    return DistributiveSmcWithZero(X, smc, f"{K.name}.restriction")


# ---------------------------------------------------------------- either-or-both

def wedge_tensor(M, ar=None, name="v"):
    """A v B = (A+B)+(A*B) with the coherence isomorphisms built from legs."""
    from .monoidal import MonoidalStructure
    X, O = M.X, M.smc
    C = X.cat
    z = M.zero
    p, o = X.plus, O.ob
    i0, i1, cp = X.iota0, X.iota1, X.copair
    ident = C.identity

    def ob(A, B):
        return p(p(A, B), o(A, B))

    def wedge_ar(f, g):
        return X.fp(X.fp(f, g), O.ar(f, g))

    def into_left(A, B):
        """A+B -> A v B"""
        return i0(p(A, B), o(A, B))

    def runit(A):
        return C.compose(i0(A, z), into_left(A, z))

    def lunit(A):
        return C.compose(i1(z, A), into_left(z, A))

    def runit_inv(A):
        return cp(cp(ident(A), X.b(A)), C.compose(X.t(o(A, z)), X.b(A)))

    def lunit_inv(A):
        return cp(cp(X.b(A), ident(A)), C.compose(X.t(o(z, A)), X.b(A)))

    def sym(A, B):
        return X.fp(X.swap_p(A, B), O.sym(A, B))

    def assoc(A, B, Cc):
        BC = ob(B, Cc)
        tgt_l = into_left(A, BC)
        to_r = i1(p(A, BC), o(A, BC))
        bc_l = into_left(B, Cc)
        leg_a = C.compose(i0(A, BC), tgt_l)
        leg_b = C.then(i0(B, Cc), bc_l, i1(A, BC), tgt_l)
        leg_c = C.then(i1(B, Cc), bc_l, i1(A, BC), tgt_l)
        leg_ab = C.then(O.idl(A, i0(B, Cc)), O.idl(A, bc_l), to_r)
        leg_ac = C.then(O.idl(A, i1(B, Cc)), O.idl(A, bc_l), to_r)
        leg_bc = C.then(i1(p(B, Cc), o(B, Cc)), i1(A, BC), tgt_l)
        leg_abc = C.then(O.assoc(A, B, Cc), O.idl(A, i1(p(B, Cc), o(B, Cc))), to_r)
        chi = cp(cp(leg_ac, leg_bc), leg_abc)
        dR_outer = _inv(C, M.dR(p(A, B), o(A, B), Cc))
        dR_inner = _inv(C, M.dR(A, B, Cc))
        from_wedge_c = C.then(dR_outer, X.fp(dR_inner, ident(o(o(A, B), Cc))), chi)
        return cp(cp(cp(cp(leg_a, leg_b), leg_ab), leg_c), from_wedge_c)

    return MonoidalStructure(C, ob, ar or wedge_ar, z, assoc, runit, lunit, sym,
                             runit_inv=runit_inv, lunit_inv=lunit_inv, name=name)


def wedge_distributors(M, W):
    X, O = M.X, M.smc
    C = X.cat
    p, o = X.plus, O.ob
    i0, i1, cp = X.iota0, X.iota1, X.copair
    ident = C.identity
    u_r = lambda B: cp(ident(B), X.b(B))     # B+0 -> B
    u_l = lambda B: cp(X.b(B), ident(B))     # 0+B -> B

    def dL(A, B, Cc):
        AB = W.ob(A, B)
        into = C.compose(i0(p(A, B), o(A, B)), i0(AB, Cc))
        leg_a = C.compose(i0(A, B), into)
        leg_b = C.compose(i1(A, B), into)
        leg_c = i1(AB, Cc)
        leg_o = C.then(O.idl(A, X.fp(ident(B), X.t(Cc))), O.idl(A, u_r(B)),
                       i1(p(A, B), o(A, B)), i0(AB, Cc))
        return cp(cp(leg_a, cp(leg_b, leg_c)), leg_o)

    def dR(A, B, Cc):
        BC = W.ob(B, Cc)
        into = C.compose(i0(p(B, Cc), o(B, Cc)), i1(A, BC))
        leg_a = i0(A, BC)
        leg_b = C.compose(i0(B, Cc), into)
        leg_c = C.compose(i1(B, Cc), into)
        leg_o = C.then(O.idr(X.fp(X.t(A), ident(B)), Cc), O.idr(u_l(B), Cc),
                       i1(p(B, Cc), o(B, Cc)), i1(A, BC))
        return cp(cp(cp(leg_a, leg_b), leg_c), leg_o)

    return dL, dR


def wedge_construction(M, name=None):
    """The isomix SLDC with tensor v and par the coproduct."""
    from .ldc import LdcStructure
    from .monoidal import derive_cocartesian_monoidal
    W = wedge_tensor(M)
    dL, dR = wedge_distributors(M, W)
    return LdcStructure(M.cat, W, derive_cocartesian_monoidal(M.X), dL, dR,
                        name=name or f"wedge({M.name})")


def wedge_suite(L, M=None, objects=None, bound=12):
    """Distributive-SMC certification of M, the symmetric LDC suite of L and
    its mix analysis (which must come out isomix)."""
    from .ldc import mix_analysis
    objs = list(L.objects if objects is None else objects)
    reps = certify_distributive_smc(M, objs, bound) if M is not None else []
    reps += check_ldc_suite(L, objs, bound)
    mx = mix_analysis(L, objs, bound)
    chk = LawCheck("wedge.isomix", L.cat)
    chk.claim((), mx is not None and mx.kind in ("isomix", "compact"),
              ["mix kind"], ["isomix"], None if mx is None else mx.m)
    if mx is not None:
        reps += mx.reports
    reps.append(chk.report())
    return reps, mx


@dataclass
class KleisliData:
    kleisli: KleisliCategory
    X: Bicartesian
    M: DistributiveSmcWithZero
    wedge: Any
    ldc: Any
    reports: list = field(default_factory=list)
    obstruction: dict | None = None


def kleisli_vee_map(K, f, g, kx=None):
    kx = kx or (lambda a, b: kleisli_times_map(K, a, b))
    return kleisli_plus_map(K, kleisli_plus_map(K, f, g), kx(f, g))


def kleisli_deltaL(K, A, B, Cc):
    """Copairing of the four legs into ((A v B)+C)+top."""
    D, E = K.D, K.E
    top = D.top
    p, x = D.plus, D.times
    i0, i1 = D.iota0, D.iota1
    AB = p(p(A, B), x(A, B))
    tgt = p(AB, Cc)
    into = E.then(i0(p(A, B), x(A, B)), i0(AB, Cc), i0(tgt, top))
    leg_a = E.compose(i0(A, B), into)
    leg_b = E.compose(i1(A, B), into)
    leg_c = E.compose(i1(AB, Cc), i0(tgt, top))
    from .monoidal import derive_cartesian_monoidal
    Tx = derive_cartesian_monoidal(D)
    dLinv = _inv(E, d_left(D, Tx, A, B, Cc))
    leg_x = E.then(dLinv, D.fp(E.identity(x(A, B)), D.t(x(A, Cc))),
                   D.fp(i1(p(A, B), x(A, B)), E.identity(top)),
                   D.fp(i0(AB, Cc), E.identity(top)))
    h = D.copair(D.copair(leg_a, D.copair(leg_b, leg_c)), leg_x)
    dom = p(p(A, p(B, Cc)), x(A, p(B, Cc)))
    return Mor(dom, tgt, h)


def kleisli_exception(D, objects=None, bound=12, certify=True):
    """Kleisli category of the exception monad on a distributive category,
    with its isomix SLDC structure (tensor v, par the coproduct)."""
    from .ldc import LdcStructure, deltaR_from_deltaL
    from .monoidal import derive_cocartesian_monoidal
    E = D.cat
    objs = list(E.objects if objects is None else objects)
    dist = LawCheck("kleisli.base_distributive", E)
    from .monoidal import derive_cartesian_monoidal
    Tx = derive_cartesian_monoidal(D)
    for t in itertools.product(objs, repeat=3):
        f = d_left(D, Tx, *t)
        dist.claim(t, is_isomorphism(E, f) is not None, ["dL"], ["an isomorphism"], f)
    base = [dist.report()]
    if base[0].failed:
        raise ValueError(f"{E.name} is not distributive: {base[0]}")
    K = KleisliCategory(D)
    X = kleisli_bicartesian(K)
    M = kleisli_smc(K, X)
    wedge = wedge_construction(M, f"wedge({K.name})")
    kx = M.smc.ar
    tensor = wedge_tensor(M, ar=lambda f, g: kleisli_vee_map(K, f, g, kx), name="v")
    prelim = LdcStructure(K, tensor, derive_cocartesian_monoidal(X),
                          lambda A, B, Cc: kleisli_deltaL(K, A, B, Cc),
                          lambda A, B, Cc: wedge.deltaR(A, B, Cc), name=f"{K.name}")
    L = prelim.replace(deltaR=deltaR_from_deltaL(prelim))
    data = KleisliData(K, X, M, wedge, L, base)
    data.obstruction = kleisli_obstruction(X, objs)
    if certify:
        reps, mx = wedge_suite(L, M, objs, bound)
        data.mix = mx
        data.reports = base + kleisli_formula_reports(data, objs) + reps
    return data


def kleisli_formula_reports(data, objs):
    """Displayed formulas against the generic constructions: the coproduct of
    maps, the v tensor on maps, and the left distributor."""
    K, X, M, W, L = data.kleisli, data.X, data.M, data.wedge, data.ldc
    plus = LawCheck("kleisli.plus_formula", K)
    vee = LawCheck("kleisli.vee_formula", K)
    arrows = [f for A in objs for B in objs for f in K.hom(A, B)]
    for f in arrows:
        for g in arrows:
            t = (f.dom, f.cod, g.dom, g.cod)
            plus.compare(t, [("[f]+[g] formula", kleisli_plus_map(K, f, g))],
                         [("copairing", X.fp(f, g))])
            vee.compare(t, [("(f+g)+(fxg)", L.tensor.ar(f, g))], [("generic", W.tensor.ar(f, g))])
    dl = LawCheck("kleisli.deltaL_legs", K)
    dr = LawCheck("kleisli.deltaR_generic", K)
    for t in itertools.product(objs, repeat=3):
        dl.compare(t, [L.deltaL.step(*t)], [W.deltaL.step(*t)])
        dr.compare(t, [L.deltaR.step(*t)], [W.deltaR.step(*t)])
    return [plus.report(), vee.report(), dl.report(), dr.report()]


def kleisli_obstruction(X, objs):
    """The zero object forces any CLDC structure to be semi-additive; find a
    pair whose product and coproduct differ in size and are not isomorphic."""
    C = X.cat
    zero = X.top == X.bot
    for A in objs:
        for B in objs:
            P, S = X.times(A, B), X.plus(A, B)
            if P != S and not any(is_isomorphism(C, f) is not None for f in C.hom(S, P)):
                return {"zero_object": zero, "objects": (A, B), "product": P, "coproduct": S}
    return None
