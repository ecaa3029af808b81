"""Concrete instances: FinSet, FinPar, FinRel, powerset functors, lattices.

Objects of the set-like engines are sizes: ``k`` stands for {0, ..., k-1}.
Coproducts put the left summand first; products use lexicographic pairs
``(i, j) -> i * |B| + j``.
"""
from __future__ import annotations

import itertools

from .fincat import BudgetExceeded, CompositionError, Mor, OpenCategory
from .limits import (Bicartesian, CoproductWitness, InitialWitness,
                     ProductWitness, TerminalWitness)

MAX_SIZE = 3
UNDEF = -1


def _check_size(n, limit):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"size must be a non-negative integer, got {n!r}")
    if n > limit:
        raise ValueError(f"size {n} exceeds the configured maximum {limit}")


class _SizedEngine(OpenCategory):
    def __init__(self, n, name):
        super().__init__(range(n + 1), name)
        self.n = n

    def valid_object(self, A):
        return isinstance(A, int) and not isinstance(A, bool) and A >= 0

    def _budget(self, A, B):
        size = self.hom_size(A, B)
        if size > self.max_hom:
            raise BudgetExceeded(f"{self.name}: |hom({A},{B})| = {size}")

    def _typed(self, f, g):
        if f.cod != g.dom:
            raise CompositionError(f"{self.name}: {f.cod} != {g.dom}")


# ---------------------------------------------------------------- FinSet

class FinSet(_SizedEngine):
    def __init__(self, n):
        super().__init__(n, f"FinSet({n})")

    def identity(self, A):
        return Mor(A, A, tuple(range(A)))

    def compose(self, f, g):
        self._typed(f, g)
        gd = g.data
        return Mor(f.dom, g.cod, tuple(gd[x] for x in f.data))

    def hom_size(self, A, B):
        return B ** A

    def _hom_list(self, A, B):
        self._budget(A, B)
        return [Mor(A, B, d) for d in itertools.product(range(B), repeat=A)]

    def contains(self, f):
        return (self.valid_object(f.dom) and self.valid_object(f.cod)
                and len(f.data) == f.dom and all(0 <= x < f.cod for x in f.data))

    def fast_inverse(self, f):
        if f.dom != f.cod or sorted(f.data) != list(range(f.dom)):
            return None
        inv = [0] * f.dom
        for i, x in enumerate(f.data):
            inv[x] = i
        return Mor(f.cod, f.dom, tuple(inv))

    def restrict_codomain(self, f, B):
        """f as a map into the first B points, or None if it leaves them."""
        if all(x < B for x in f.data):
            return Mor(f.dom, B, f.data)
        return None


def finset_bicartesian(C):
    def product(a, b):
        p0 = Mor(a * b, a, tuple(k // b for k in range(a * b)))
        p1 = Mor(a * b, b, tuple(k % b for k in range(a * b)))

        def pair(f, g):
            return Mor(f.dom, a * b, tuple(x * b + y for x, y in zip(f.data, g.data)))
        return ProductWitness(a, b, a * b, p0, p1, pair)

    def coproduct(a, b):
        i0 = Mor(a, a + b, tuple(range(a)))
        i1 = Mor(b, a + b, tuple(range(a, a + b)))

        def copair(f, g):
            return Mor(a + b, f.cod, f.data + g.data)
        return CoproductWitness(a, b, a + b, i0, i1, copair)

    term = TerminalWitness(1, lambda A: Mor(A, 1, (0,) * A))
    init = InitialWitness(0, lambda A: Mor(0, A, ()))
    return Bicartesian(C, product, term, coproduct, init)


# ---------------------------------------------------------------- FinPar

class FinPar(_SizedEngine):
    """Partial functions; ``-1`` marks an undefined point."""

    def __init__(self, n):
        super().__init__(n, f"FinPar({n})")

    def identity(self, A):
        return Mor(A, A, tuple(range(A)))

    def compose(self, f, g):
        self._typed(f, g)
        gd = g.data
        return Mor(f.dom, g.cod, tuple(gd[x] if x >= 0 else UNDEF for x in f.data))

    def hom_size(self, A, B):
        return (B + 1) ** A

    def _hom_list(self, A, B):
        self._budget(A, B)
        return [Mor(A, B, d) for d in itertools.product(range(-1, B), repeat=A)]

    def contains(self, f):
        return (self.valid_object(f.dom) and self.valid_object(f.cod)
                and len(f.data) == f.dom and all(-1 <= x < f.cod for x in f.data))

    def fast_inverse(self, f):
        if f.dom != f.cod or sorted(f.data) != list(range(f.dom)):
            return None
        inv = [0] * f.dom
        for i, x in enumerate(f.data):
            inv[x] = i
        return Mor(f.cod, f.dom, tuple(inv))

    def graph(self, f):
        return sorted((i, x) for i, x in enumerate(f.data) if x >= 0)


def amp_size(a, b):
    return a + b + a * b


def finpar_bicartesian(C):
    """Coproducts are disjoint unions; the product of a and b is laid out as
    a, then b, then the pairs a x b."""

    def product(a, b):
        n = amp_size(a, b)
        p0 = Mor(n, a, tuple(range(a)) + (UNDEF,) * b
                 + tuple(k // b for k in range(a * b)))
        p1 = Mor(n, b, (UNDEF,) * a + tuple(range(b))
                 + tuple(k % b for k in range(a * b)))

        def pair(f, g):
            out = []
            for x, y in zip(f.data, g.data):
                if x >= 0 and y >= 0:
                    out.append(a + b + x * b + y)
                elif x >= 0:
                    out.append(x)
                elif y >= 0:
                    out.append(a + y)
                else:
                    out.append(UNDEF)
            return Mor(f.dom, n, tuple(out))
        return ProductWitness(a, b, n, p0, p1, pair)

    def coproduct(a, b):
        i0 = Mor(a, a + b, tuple(range(a)))
        i1 = Mor(b, a + b, tuple(range(a, a + b)))

        def copair(f, g):
            return Mor(a + b, f.cod, f.data + g.data)
        return CoproductWitness(a, b, a + b, i0, i1, copair)

    term = TerminalWitness(0, lambda A: Mor(A, 0, (UNDEF,) * A))
    init = InitialWitness(0, lambda A: Mor(0, A, ()))
    return Bicartesian(C, product, term, coproduct, init)


# ---------------------------------------------------------------- FinRel

class FinRel(_SizedEngine):
    """Relations as tuples of row bitmasks: bit j of row i means i R j."""

    def __init__(self, n):
        super().__init__(n, f"FinRel({n})")

    def identity(self, A):
        return Mor(A, A, tuple(1 << i for i in range(A)))

    def compose(self, f, g):
        self._typed(f, g)
        gd = g.data
        rows = []
        for r in f.data:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc |= gd[j]
                r >>= 1
                j += 1
            rows.append(acc)
        return Mor(f.dom, g.cod, tuple(rows))

    def hom_size(self, A, B):
        return 1 << (A * B)

    def _hom_list(self, A, B):
        self._budget(A, B)
        return [Mor(A, B, d) for d in itertools.product(range(1 << B), repeat=A)]

    def contains(self, f):
        return (self.valid_object(f.dom) and self.valid_object(f.cod)
                and len(f.data) == f.dom and all(0 <= r < (1 << f.cod) for r in f.data))

    def fast_inverse(self, f):
        n = f.dom
        if n != f.cod:
            return None
        inv = [0] * n
        seen = 0
        for i, r in enumerate(f.data):
            if r == 0 or r & (r - 1):
                return None
            seen |= r
            inv[r.bit_length() - 1] = 1 << i
        if seen != (1 << n) - 1:
            return None
        return Mor(n, n, tuple(inv))

    def transpose(self, f):
        rows = [0] * f.cod
        for i, r in enumerate(f.data):
            for j in range(f.cod):
                if r >> j & 1:
                    rows[j] |= 1 << i
        return Mor(f.cod, f.dom, tuple(rows))

    def pairs(self, f):
        return sorted((i, j) for i, r in enumerate(f.data) for j in range(f.cod) if r >> j & 1)


def finrel_bicartesian(C):
    """Disjoint union serves as both product and coproduct."""

    def product(a, b):
        p0 = Mor(a + b, a, tuple(1 << i for i in range(a)) + (0,) * b)
        p1 = Mor(a + b, b, (0,) * a + tuple(1 << j for j in range(b)))

        def pair(f, g):
            return Mor(f.dom, a + b, tuple(x | (y << a) for x, y in zip(f.data, g.data)))
        return ProductWitness(a, b, a + b, p0, p1, pair)

    def coproduct(a, b):
        i0 = Mor(a, a + b, tuple(1 << i for i in range(a)))
        i1 = Mor(b, a + b, tuple(1 << (a + j) for j in range(b)))

        def copair(f, g):
            return Mor(a + b, f.cod, f.data + g.data)
        return CoproductWitness(a, b, a + b, i0, i1, copair)

    term = TerminalWitness(0, lambda A: Mor(A, 0, (0,) * A))
    init = InitialWitness(0, lambda A: Mor(0, A, ()))
    return Bicartesian(C, product, term, coproduct, init)


# ---------------------------------------------------------------- factories

def make_finset(n, limit=MAX_SIZE):
    _check_size(n, limit)
    return FinSet(n)


def make_finpar(n, limit=MAX_SIZE):
    _check_size(n, limit)
    return FinPar(n)


def make_finrel(n, limit=MAX_SIZE):
    _check_size(n, limit)
    return FinRel(n)


# ---------------------------------------------------------------- powersets

def _image(R, U):
    acc = 0
    x = 0
    while U:
        if U & 1:
            acc |= R.data[x]
        U >>= 1
        x += 1
    return acc


def powerset_act(R, V):
    """Preimage {x | some y in V with x R y} as a bitmask."""
    out = 0
    for x, row in enumerate(R.data):
        if row & V:
            out |= 1 << x
    return out


def double_powerset_act(R, VV):
    """{U | R(U) in VV}, with VV a bitmask over the subsets of cod R."""
    out = 0
    for U in range(1 << R.dom):
        if VV >> _image(R, U) & 1:
            out |= 1 << U
    return out


def powerset_functors(n, limit=2, base=None):
    """P and its double P^2 over FinRel(n) as lattice-valued functors."""
    from .construct import BitsetLattice, LatticeValuedFunctor, semiadditive_to_cldc
    _check_size(n, limit)
    if base is None:
        base = semiadditive_to_cldc(finrel_bicartesian(FinRel(n)))
    P = LatticeValuedFunctor(base, BitsetLattice, powerset_act, "P")
    P2 = LatticeValuedFunctor(base, lambda A: BitsetLattice(1 << A), double_powerset_act, "P2")
    return P, P2


# ---------------------------------------------------------------- FinPar as an isomix SLDC

def vee_decode(e, a, b):
    """Element of a v b = a + b + a*b as a partial pair (x or None, y or None)."""
    if e < a:
        return e, None
    if e < a + b:
        return None, e - a
    k = e - a - b
    return k // b, k % b


def vee_encode(x, y, a, b):
    if x is None and y is None:
        return None
    if y is None:
        return x
    if x is None:
        return a + y
    return a + b + x * b + y


def _table(dom, cod, fn):
    out = []
    for e in range(dom):
        v = fn(e)
        out.append(UNDEF if v is None else v)
    return Mor(dom, cod, tuple(out))


def finpar_smc(C, X=None):
    """Set product of partial functions, defined where both factors are."""
    from .construct import DistributiveSmcWithZero
    from .monoidal import MonoidalStructure
    X = X or finpar_bicartesian(C)

    def ar(f, g):
        b2 = g.cod
        out = tuple(UNDEF if x < 0 or y < 0 else x * b2 + y for x in f.data for y in g.data)
        return Mor(f.dom * g.dom, f.cod * b2, out)

    def ident(A):
        return Mor(A, A, tuple(range(A)))

    def sym(A, B):
        return Mor(A * B, B * A, tuple(y * A + x for x in range(A) for y in range(B)))

    smc = MonoidalStructure(C, lambda a, b: a * b, ar, 1,
                            lambda A, B, D: ident(A * B * D), ident, ident, sym,
                            assoc_inv=lambda A, B, D: ident(A * B * D),
                            runit_inv=ident, lunit_inv=ident, sym_inv=lambda A, B: sym(B, A),
                            name="o")
    return DistributiveSmcWithZero(X, smc, f"{C.name}.set_product")


def finpar_direct_ldc(C, X=None):
    """The either-or-both SLDC on FinPar written out as element tables."""
    from .ldc import LdcStructure
    from .monoidal import MonoidalStructure, derive_cocartesian_monoidal
    X = X or finpar_bicartesian(C)
    ob = amp_size

    def ar(f, g):
        a, b, a2, b2 = f.dom, g.dom, f.cod, g.cod

        def fn(e):
            x, y = vee_decode(e, a, b)
            fx = None if x is None else f.data[x]
            gy = None if y is None else g.data[y]
            if (x is not None and fx < 0) or (y is not None and gy < 0):
                return None
            return vee_encode(fx, gy, a2, b2)
        return _table(ob(a, b), ob(a2, b2), fn)

    def assoc(A, B, D):
        def fn(e):
            u, z = vee_decode(e, ob(A, B), D)
            x, y = (None, None) if u is None else vee_decode(u, A, B)
            return vee_encode(x, vee_encode(y, z, B, D), A, ob(B, D))
        return _table(ob(ob(A, B), D), ob(A, ob(B, D)), fn)

    def assoc_inv(A, B, D):
        def fn(e):
            x, v = vee_decode(e, A, ob(B, D))
            y, z = (None, None) if v is None else vee_decode(v, B, D)
            return vee_encode(vee_encode(x, y, A, B), z, ob(A, B), D)
        return _table(ob(A, ob(B, D)), ob(ob(A, B), D), fn)

    def sym(A, B):
        def fn(e):
            x, y = vee_decode(e, A, B)
            return vee_encode(y, x, B, A)
        return _table(ob(A, B), ob(B, A), fn)

    def ident(A):
        return Mor(A, A, tuple(range(A)))

    T = MonoidalStructure(C, ob, ar, 0, assoc, ident, ident, sym, assoc_inv=assoc_inv,
                          runit_inv=ident, lunit_inv=ident, sym_inv=lambda A, B: sym(B, A),
                          name="v")

    def dL(A, B, D):
        def fn(e):
            x, w = vee_decode(e, A, B + D)
            if w is not None and w >= B:
                return None if x is not None else ob(A, B) + w - B
            return vee_encode(x, w, A, B)
        return _table(ob(A, B + D), ob(A, B) + D, fn)

    def dR(A, B, D):
        def fn(e):
            w, z = vee_decode(e, A + B, D)
            if w is not None and w < A:
                return None if z is not None else w
            return A + vee_encode(None if w is None else w - A, z, B, D)
        return _table(ob(A + B, D), A + ob(B, D), fn)

    return LdcStructure(C, T, derive_cocartesian_monoidal(X), dL, dR, name=f"{C.name}.either")


def kleisli_to_finpar(f):
    """Kleisli map A -> B + 1 over FinSet as a partial function A -> B."""
    B = f.cod
    return Mor(f.dom, B, tuple(UNDEF if v == B else v for v in f.data.data))


def finpar_amp(f, g):
    """f & g on FinPar by cases: a lone leg or a defined pair passes through,
    a pair keeps whichever side is defined."""
    a, b, a2, b2 = f.dom, g.dom, f.cod, g.cod

    def fn(e):
        x, y = vee_decode(e, a, b)
        fx = None if x is None or f.data[x] < 0 else f.data[x]
        gy = None if y is None or g.data[y] < 0 else g.data[y]
        return vee_encode(fx, gy, a2, b2)
    return _table(amp_size(a, b), amp_size(a2, b2), fn)


# ---------------------------------------------------------------- lattices

def chain(n):
    from .construct import FiniteBDL
    els = [str(i) for i in range(n)]
    return FiniteBDL(els, [(els[i], els[i + 1]) for i in range(n - 1)], f"C{n}")


def boolean(n):
    from .construct import FiniteBDL
    els = list(range(1 << n))
    covers = [(x, x | (1 << i)) for x in els for i in range(n) if not x >> i & 1]
    return FiniteBDL(els, covers, f"B{n}")


def divisors(n):
    from .construct import FiniteBDL
    if n < 1:
        raise ValueError("divisor lattice needs n >= 1")
    els = [d for d in range(1, n + 1) if n % d == 0]
    return FiniteBDL(els, [(d, e) for d in els for e in els if e % d == 0], f"Div{n}")


def lattice_product(L1, L2):
    from .construct import FiniteBDL
    els = [(x, y) for x in L1.elements for y in L2.elements]
    leq = [(p, q) for p in els for q in els if L1.leq(p[0], q[0]) and L2.leq(p[1], q[1])]
    return FiniteBDL(els, leq, f"{L1.name}x{L2.name}")


def transitive_orders(n):
    """Strict orders on 0..n-1 contained in the natural order; every finite
    poset is isomorphic to one of these."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if bits >> k & 1}
        if all((i, k) in rel for (i, j) in rel for (j2, k) in rel if j == j2):
            yield rel


def _canonical_order(n, rel):
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((perm[i], perm[j]) for i, j in rel))
        if best is None or key < best:
            best = key
    return best


def down_set_lattice(n, rel, name=None):
    """Down-sets of a poset on 0..n-1 ordered by inclusion, as bitmasks."""
    from .construct import FiniteBDL
    below = [0] * n
    for i, j in rel:
        below[j] |= 1 << i
    downs = [m for m in range(1 << n)
             if all(below[j] & m == below[j] for j in range(n) if m >> j & 1)]
    leq = [(x, y) for x in downs for y in downs if x & y == x]
    return FiniteBDL(downs, leq, name or f"O{n}")


def distributive_lattices(max_size):
    """One representative of every distributive lattice with at most
    ``max_size`` elements, via down-set lattices of posets."""
    out, seen = [], set()
    for n in range(max_size):
        for rel in transitive_orders(n):
            key = (n, _canonical_order(n, rel))
            if key in seen:
                continue
            seen.add(key)
            L = down_set_lattice(n, rel)
            if len(L) <= max_size:
                out.append(L)
    out.sort(key=lambda L: (len(L), L.name))
    for k, L in enumerate(out):
        L.name = f"D{len(L)}.{k}"
    return out


def bdl_generators(spec):
    """Lattices from a spec string: ``chain:n``, ``boolean:n``,
    ``divisors:n``, ``product:<spec>*<spec>`` or ``all:k``.  Several specs
    can be joined with ``;``."""
    out = []
    for part in str(spec).split(";"):
        part = part.strip()
        if not part:
            continue
        kind, _, arg = part.partition(":")
        if kind == "product":
            left, sep, right = arg.partition("*")
            if not sep:
                raise ValueError(f"product spec needs two factors: {part!r}")
            for L1 in bdl_generators(left):
                for L2 in bdl_generators(right):
                    out.append(lattice_product(L1, L2))
            continue
        try:
            n = int(arg)
        except ValueError:
            raise ValueError(f"bad lattice spec {part!r}") from None
        if kind == "chain":
            out.append(chain(n))
        elif kind == "boolean":
            out.append(boolean(n))
        elif kind == "divisors":
            out.append(divisors(n))
        elif kind == "all":
            out.extend(distributive_lattices(n))
        else:
            raise ValueError(f"unknown lattice family {kind!r}")
    return out
