"""Finite category engines.

A category is anything exposing ``objects``, ``identity``, ``compose`` and
``hom``.  Composition is diagrammatic throughout: ``compose(f, g)`` is
"first f, then g".  Morphisms are :class:`Mor` triples whose ``data`` field
is a canonical normal form, so equality of morphisms is tuple equality.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Any, Callable, NamedTuple


class Mor(NamedTuple):
    dom: Any
    cod: Any
    data: Any


class CategoryError(Exception):
    pass


class CompositionError(CategoryError):
    pass


class UnknownObject(CategoryError):
    pass


class FamilyTypeError(CategoryError):
    pass


class Undefined(CategoryError):
    """A table-backed family was asked for a component it does not store."""

    def __init__(self, family, objs):
        super().__init__(f"{family}[{','.join(obj_label(o) for o in objs)}] is not tabulated")
        self.family = family
        self.objs = objs


class BudgetExceeded(Exception):
    pass


class HardFailure(Exception):
    """An implication that must hold on every instance did not."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------- reports

def obj_label(A) -> str:
    if isinstance(A, tuple):
        return "(" + ",".join(obj_label(a) for a in A) + ")"
    return str(A)


def step_label(label) -> str:
    if isinstance(label, str):
        return label
    name, args = label
    return name + "[" + ",".join(obj_label(a) for a in args) + "]"


@dataclass
class Witness:
    objects: tuple
    lhs_path: list
    rhs_path: list
    lhs: Any = None
    rhs: Any = None

    def to_json(self):
        return {
            "objects": [obj_label(o) for o in self.objects],
            "lhs_path": list(self.lhs_path),
            "rhs_path": list(self.rhs_path),
        }


@dataclass
class LawReport:
    law_id: str
    status: str
    witness: Witness | None = None
    checked: int = 0
    note: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    @property
    def failed(self):
        return self.status == "fail"

    def to_json(self):
        out = {"id": self.law_id, "status": self.status,
               "witness": self.witness.to_json() if self.witness else None}
        if self.note:
            out["note"] = self.note
        return out

    def __str__(self):
        mark = {"pass": "✓", "fail": "✗"}.get(self.status, "-")
        line = f"{mark} {self.law_id} [{self.status}, {self.checked} checked]"
        if self.note:
            line += f" {self.note}"
        if self.witness is not None:
            w = self.witness
            line += (f" at {obj_label(tuple(w.objects))}: "
                     f"{' ; '.join(w.lhs_path)} != {' ; '.join(w.rhs_path)}")
        return line


def run_path(C, steps):
    """Compose a list of (label, morphism) steps."""
    m = steps[0][1]
    for label, f in steps[1:]:
        if m.cod != f.dom:
            raise CompositionError(
                f"cannot compose into {step_label(label)}: {m.cod!r} != {f.dom!r}")
        m = C.compose(m, f)
    return m


class LawCheck:
    """Accumulates instances of one equation and keeps the first counterexample."""

    def __init__(self, law_id, C):
        self.law_id = law_id
        self.C = C
        self.checked = 0
        self.undefined = 0
        self.witness = None

    def compare(self, objects, lhs, rhs=None):
        """Step lists, or a single thunk returning both (evaluated lazily)."""
        self.checked += 1
        if self.witness is not None:
            return False
        try:
            if rhs is None:
                lhs, rhs = lhs()
            a = run_path(self.C, lhs)
            b = run_path(self.C, rhs)
        except Undefined:
            self.undefined += 1
            return None
        if (a.dom, a.cod) != (b.dom, b.cod):
            raise FamilyTypeError(
                f"{self.law_id}: sides have different types at {obj_label(tuple(objects))}")
        if self.C.eq(a, b):
            return True
        self.witness = Witness(tuple(objects), [step_label(s[0]) for s in lhs],
                               [step_label(s[0]) for s in rhs], a, b)
        return False

    def claim(self, objects, ok, lhs_path=(), rhs_path=(), lhs=None, rhs=None):
        """Record a boolean claim (for properties that are not equations)."""
        self.checked += 1
        if ok or self.witness is not None:
            return bool(ok)
        self.witness = Witness(tuple(objects), list(lhs_path), list(rhs_path), lhs, rhs)
        return False

    def report(self, note=""):
        status = "fail" if self.witness is not None else "pass"
        if status == "pass" and self.undefined:
            status = "skipped"
            extra = f"partial: {self.undefined} of {self.checked} tuples need untabulated components"
            note = f"{note}; {extra}" if note else extra
        return LawReport(self.law_id, status, self.witness, self.checked, note)


def skipped(law_id, note):
    return LawReport(law_id, "skipped", None, 0, note)


def sample_objects(objects, bound):
    """All objects if there are at most ``bound``, else a uniformly strided sample."""
    objects = list(objects)
    n = len(objects)
    if n <= bound:
        return objects
    if bound <= 1:
        return objects[:bound]
    idx = sorted({round(i * (n - 1) / (bound - 1)) for i in range(bound)})
    return [objects[i] for i in idx]


def tuple_plan(objects, k, bound):
    """Objects to range over for a k-indexed law, and whether that is a sample."""
    objects = list(objects)
    if k < 4 or len(objects) <= bound:
        return objects, False
    return sample_objects(objects, bound), True


def summarize(reports):
    """Overall status: fail beats skipped beats pass."""
    st = {r.status for r in reports}
    if "fail" in st:
        return "fail"
    if "skipped" in st:
        return "skipped"
    return "pass"


# ---------------------------------------------------------------- engines

class Category:
    """Base engine.  Subclasses implement identity, compose and _hom_list."""

    name = "category"
    max_hom = 1 << 20

    def __init__(self, objects, name=None):
        self.objects = tuple(objects)
        self._objset = set(self.objects)
        self._hom = {}
        if name is not None:
            self.name = name

    def has_object(self, A):
        return A in self._objset

    def require(self, A):
        if not self.has_object(A):
            raise UnknownObject(f"{self.name}: unknown object {A!r}")

    def identity(self, A):
        raise NotImplementedError

    def compose(self, f, g):
        raise NotImplementedError

    def _hom_list(self, A, B):
        raise NotImplementedError

    def hom_size(self, A, B):
        return len(self.hom(A, B))

    def hom(self, A, B):
        key = (A, B)
        hs = self._hom.get(key)
        if hs is None:
            self.require(A)
            self.require(B)
            hs = list(self._hom_list(A, B))
            self._hom[key] = hs
        return hs

    def eq(self, f, g):
        return f == g

    def contains(self, f):
        return self.has_object(f.dom) and self.has_object(f.cod)

    def fast_inverse(self, f):
        """Decide invertibility without search; NotImplemented if unsupported."""
        return NotImplemented

    def then(self, *fs):
        m = fs[0]
        for f in fs[1:]:
            m = self.compose(m, f)
        return m

    def mor_label(self, f):
        return f"{f.data}:{obj_label(f.dom)}->{obj_label(f.cod)}"

    def morphisms(self, objects=None):
        objects = self.objects if objects is None else objects
        for A in objects:
            for B in objects:
                yield from self.hom(A, B)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class OpenCategory(Category):
    """Engine whose objects form an infinite family; ``objects`` is only the
    enumerated index set used by law checks."""

    def has_object(self, A):
        return self.valid_object(A)

    def valid_object(self, A):
        raise NotImplementedError


def hom_enumerate(C, A, B):
    return list(C.hom(A, B))


def search_inverse(C, f):
    """Brute-force inverse search over hom(cod f, dom f)."""
    ida, idb = C.identity(f.dom), C.identity(f.cod)
    for g in C.hom(f.cod, f.dom):
        if C.eq(C.compose(f, g), ida) and C.eq(C.compose(g, f), idb):
            return g
    return None


def is_isomorphism(C, f):
    g = C.fast_inverse(f)
    if g is not NotImplemented:
        return g
    return search_inverse(C, f)


# ---------------------------------------------------------------- tables

class TableCategory(Category):
    """A category given by explicit tables of names."""

    def __init__(self, objects, morphisms, identities, composition, name="table"):
        super().__init__(objects, name)
        self.types = {m: (d, c) for m, d, c in morphisms}
        self.order = [m for m, _, _ in morphisms]
        self.ids = dict(identities)
        self.table = {(f, g): h for f, g, h in composition}

    def mor(self, name):
        d, c = self.types[name]
        return Mor(d, c, name)

    def identity(self, A):
        return self.mor(self.ids[A])

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError(f"{f.data};{g.data} not composable")
        h = self.table.get((f.data, g.data))
        if h is None:
            raise CompositionError(f"{f.data};{g.data} missing from table")
        d, c = self.types[h]
        return Mor(d, c, h)

    def _hom_list(self, A, B):
        return [Mor(A, B, m) for m in self.order if self.types[m] == (A, B)]

    def contains(self, f):
        return self.types.get(f.data) == (f.dom, f.cod)

    def mor_label(self, f):
        return str(f.data)

    @classmethod
    def from_dict(cls, d, name="table"):
        for key in ("objects", "morphisms", "identities", "composition"):
            if key not in d:
                raise ValueError(f"missing field '{key}'")
        morphisms = []
        for i, m in enumerate(d["morphisms"]):
            try:
                morphisms.append((m["name"], m["dom"], m["cod"]))
            except (KeyError, TypeError):
                raise ValueError(f"morphisms[{i}]: need name, dom, cod") from None
        comp = []
        for i, row in enumerate(d["composition"]):
            if not isinstance(row, (list, tuple)) or len(row) != 3:
                raise ValueError(f"composition[{i}]: expected [f, g, fg]")
            comp.append(tuple(row))
        return cls(d["objects"], morphisms, d["identities"], comp, name)

    def to_dict(self):
        return {
            "objects": list(self.objects),
            "morphisms": [{"name": m, "dom": self.types[m][0], "cod": self.types[m][1]}
                          for m in self.order],
            "identities": dict(self.ids),
            "composition": [[f, g, h] for (f, g), h in self.table.items()],
        }

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh), name=str(path))


def tabulate(C, objects=None, name=None):
    """Freeze a (small, closed) engine into a TableCategory."""
    objects = list(C.objects if objects is None else objects)
    names = {}
    morphisms = []
    for A in objects:
        for B in objects:
            for k, f in enumerate(C.hom(A, B)):
                n = f"{obj_label(A)}>{obj_label(B)}#{k}"
                names[f] = n
                morphisms.append((n, A, B))
    ids = {A: names[C.identity(A)] for A in objects}
    comp = []
    for A in objects:
        for B in objects:
            for f in C.hom(A, B):
                for Cc in objects:
                    for g in C.hom(B, Cc):
                        comp.append((names[f], names[g], names[C.compose(f, g)]))
    T = TableCategory(objects, morphisms, ids, comp, name or C.name)
    return T, names


# ---------------------------------------------------------------- derived

class Opposite(Category):
    def __init__(self, C):
        super().__init__(C.objects, f"{C.name}^op")
        self.base = C

    def has_object(self, A):
        return self.base.has_object(A)

    def identity(self, A):
        return Mor(A, A, self.base.identity(A))

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError("op: not composable")
        h = self.base.compose(g.data, f.data)
        return Mor(f.dom, g.cod, h)

    def _hom_list(self, A, B):
        return [Mor(A, B, f) for f in self.base.hom(B, A)]

    def contains(self, f):
        return self.base.contains(f.data)

    def fast_inverse(self, f):
        g = self.base.fast_inverse(f.data)
        if g is NotImplemented or g is None:
            return g
        return Mor(f.cod, f.dom, g)


def opposite(C):
    return Opposite(C)


class ProductCategory(Category):
    def __init__(self, C, D):
        objs = [(A, X) for A in C.objects for X in D.objects]
        super().__init__(objs, f"{C.name}x{D.name}")
        self.left, self.right = C, D

    def has_object(self, P):
        return (isinstance(P, tuple) and len(P) == 2
                and self.left.has_object(P[0]) and self.right.has_object(P[1]))

    def identity(self, P):
        return Mor(P, P, (self.left.identity(P[0]), self.right.identity(P[1])))

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError("product: not composable")
        return Mor(f.dom, g.cod, (self.left.compose(f.data[0], g.data[0]),
                                  self.right.compose(f.data[1], g.data[1])))

    def _hom_list(self, P, Q):
        return [Mor(P, Q, (f, g)) for f in self.left.hom(P[0], Q[0])
                for g in self.right.hom(P[1], Q[1])]

    def hom_size(self, P, Q):
        return self.left.hom_size(P[0], Q[0]) * self.right.hom_size(P[1], Q[1])

    def pair(self, f, g):
        return Mor((f.dom, g.dom), (f.cod, g.cod), (f, g))

    def contains(self, f):
        return self.left.contains(f.data[0]) and self.right.contains(f.data[1])

    def fast_inverse(self, f):
        a = self.left.fast_inverse(f.data[0])
        b = self.right.fast_inverse(f.data[1])
        if a is NotImplemented or b is NotImplemented:
            return NotImplemented
        if a is None or b is None:
            return None
        return Mor(f.cod, f.dom, (a, b))


def product_category(C, D):
    return ProductCategory(C, D)


# ---------------------------------------------------------------- checks

def validate_category(C, bound=12, max_triples=2_000_000):
    ids = ["category.identity_left", "category.identity_right",
           "category.associativity", "category.closure"]
    if len(C.objects) > bound:
        note = f"{len(C.objects)} objects exceed bound {bound}"
        return [skipped(i, note) for i in ids]
    left, right, assoc, closure = (LawCheck(i, C) for i in ids)
    objs = list(C.objects)
    homs = {(A, B): C.hom(A, B) for A in objs for B in objs}
    members = {k: set(v) for k, v in homs.items()}
    name = C.mor_label

    for (A, B), fs in homs.items():
        for f in fs:
            ia, ib = C.identity(A), C.identity(B)
            try:
                l, r = C.compose(ia, f), C.compose(f, ib)
            except CompositionError:
                closure.claim((A, B), False, [name(ia), name(f)], ["undefined"])
                continue
            left.claim((A, B), C.eq(l, f), [name(ia), name(f)], [name(f)], l, f)
            right.claim((A, B), C.eq(r, f), [name(f), name(ib)], [name(f)], r, f)

    composite = {}
    for A in objs:
        for B in objs:
            for Cc in objs:
                for f in homs[A, B]:
                    for g in homs[B, Cc]:
                        try:
                            h = C.compose(f, g)
                        except CompositionError:
                            closure.claim((A, B, Cc), False, [name(f), name(g)], ["undefined"])
                            continue
                        ok = (h.dom, h.cod) == (A, Cc) and h in members[A, Cc]
                        closure.claim((A, B, Cc), ok, [name(f), name(g)], ["a morphism"], h)
                        composite[f, g] = h

    count = sum(len(homs[A, B]) * len(homs[B, Cc]) * len(homs[Cc, D])
                for A in objs for B in objs for Cc in objs for D in objs)
    if count > max_triples:
        reports = [left.report(), right.report(),
                   skipped(ids[2], f"{count} triples exceed budget {max_triples}"),
                   closure.report()]
        return reports
    for A, B, Cc, D in itertools.product(objs, repeat=4):
        for f in homs[A, B]:
            for g in homs[B, Cc]:
                fg = composite.get((f, g))
                if fg is None:
                    continue
                for h in homs[Cc, D]:
                    gh = composite.get((g, h))
                    if gh is None:
                        continue
                    lhs, rhs = composite.get((fg, h)), composite.get((f, gh))
                    if lhs is None or rhs is None:
                        continue
                    assoc.claim((A, B, Cc, D), C.eq(lhs, rhs),
                                [f"({name(f)};{name(g)})", name(h)],
                                [name(f), f"({name(g)};{name(h)})"], lhs, rhs)
    return [left.report(), right.report(), assoc.report(), closure.report()]


@dataclass
class Functor:
    source: Any
    target: Any
    obj_map: Callable
    mor_map: Callable
    name: str = "F"

    def obj(self, A):
        return self.obj_map(A)

    def mor(self, f):
        return self.mor_map(f)


def identity_functor(C):
    return Functor(C, C, lambda A: A, lambda f: f, "Id")


def compose_functors(F, G):
    return Functor(F.source, G.target, lambda A: G.obj(F.obj(A)),
                   lambda f: G.mor(F.mor(f)), f"{F.name};{G.name}")


def _source_morphisms(C, objects, max_pairs):
    objs = list(C.objects if objects is None else objects)
    homs = {(A, B): C.hom(A, B) for A in objs for B in objs}
    return objs, homs


def check_functor(F, objects=None, max_pairs=500_000):
    S, T = F.source, F.target
    typing = LawCheck("functor.typing", T)
    ident = LawCheck("functor.identity", T)
    comp = LawCheck("functor.composition", T)
    objs, homs = _source_morphisms(S, objects, max_pairs)
    for A in objs:
        FA = F.obj(A)
        if not T.has_object(FA):
            typing.claim((A,), False, [f"F({obj_label(A)})"], ["an object"])
            continue
        lhs = F.mor(S.identity(A))
        ident.claim((A,), T.eq(lhs, T.identity(FA)), [f"F(id {obj_label(A)})"],
                    [f"id F({obj_label(A)})"], lhs, T.identity(FA))
    for (A, B), fs in homs.items():
        for f in fs:
            Ff = F.mor(f)
            ok = (Ff.dom, Ff.cod) == (F.obj(A), F.obj(B)) and T.contains(Ff)
            typing.claim((A, B), ok, [f"F({S.mor_label(f)})"], ["typed morphism"], Ff)
    pairs = 0
    for A, B, Cc in itertools.product(objs, repeat=3):
        for f in homs[A, B]:
            for g in homs[B, Cc]:
                pairs += 1
                if pairs > max_pairs:
                    return [typing.report(), ident.report(),
                            skipped("functor.composition", "pair budget exceeded")]
                lhs = F.mor(S.compose(f, g))
                rhs = T.compose(F.mor(f), F.mor(g))
                comp.claim((A, B, Cc), T.eq(lhs, rhs),
                           [f"F({S.mor_label(f)};{S.mor_label(g)})"],
                           [f"F({S.mor_label(f)})", f"F({S.mor_label(g)})"], lhs, rhs)
    return [typing.report(), ident.report(), comp.report()]


@dataclass
class NaturalTransformation:
    source: Functor
    target: Functor
    component: Callable
    name: str = "eta"


def check_natural(eta, objects=None):
    F, G = eta.source, eta.target
    S, T = F.source, F.target
    typing = LawCheck("natural.typing", T)
    square = LawCheck("natural.square", T)
    objs, homs = _source_morphisms(S, objects, None)
    for A in objs:
        c = eta.component(A)
        typing.claim((A,), (c.dom, c.cod) == (F.obj(A), G.obj(A)),
                     [f"{eta.name}[{obj_label(A)}]"], ["F(A)->G(A)"], c)
    for (A, B), fs in homs.items():
        for f in fs:
            lhs = T.compose(F.mor(f), eta.component(B))
            rhs = T.compose(eta.component(A), G.mor(f))
            square.claim((A, B), T.eq(lhs, rhs),
                         [f"F({S.mor_label(f)})", f"{eta.name}[{obj_label(B)}]"],
                         [f"{eta.name}[{obj_label(A)}]", f"G({S.mor_label(f)})"], lhs, rhs)
    return [typing.report(), square.report()]


# ---------------------------------------------------------------- families

class Family:
    """An object-tuple-indexed morphism family, memoized per tuple.

    ``dom``/``cod`` give the declared type scheme; a resolved component of the
    wrong type raises FamilyTypeError.
    """

    def __init__(self, name, arity, resolver, dom=None, cod=None, memo=True):
        self.name = name
        self.arity = arity
        self.resolver = resolver
        self.dom = dom
        self.cod = cod
        self.memo = memo
        self._cache = {}

    def __call__(self, *objs):
        m = self._cache.get(objs)
        if m is None:
            m = self.resolver(*objs)
            if self.dom is not None:
                want = (self.dom(*objs), self.cod(*objs))
                if (m.dom, m.cod) != want:
                    raise FamilyTypeError(
                        f"{self.name}[{','.join(obj_label(o) for o in objs)}] has type "
                        f"{obj_label(m.dom)}->{obj_label(m.cod)}, expected "
                        f"{obj_label(want[0])}->{obj_label(want[1])}")
            if self.memo:
                self._cache[objs] = m
        return m

    def step(self, *objs):
        return ((self.name, objs), self(*objs))

    def mutated(self, objs, replacement, name=None):
        """Copy of this family with one component replaced."""
        base = self.resolver
        objs = tuple(objs)

        def resolver(*xs):
            if xs == objs:
                return replacement(base(*xs)) if callable(replacement) else replacement
            return base(*xs)
        return Family(name or self.name, self.arity, resolver, self.dom, self.cod, self.memo)
