import itertools

import pytest
from hypothesis import given, strategies as st

from ldcbench import zoo
from ldcbench.fincat import Mor


def brute_distributive_counts(max_size):
    """Distributive lattices by size, straight from the definition: every
    partial order on 0..k-1, keep the lattices that distribute, identify
    isomorphic ones by relabelling."""
    counts = {}
    for k in range(1, max_size + 1):
        pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
        seen = set()
        # any poset has a linear extension, so relations inside i < j suffice
        upper = [(i, j) for i, j in pairs if i < j]
        for bits in range(1 << len(upper)):
            le = {(i, i) for i in range(k)}
            le |= {upper[b] for b in range(len(upper)) if bits >> b & 1}
            if any((a, c) not in le for (a, b) in le for (b2, c) in le if b == b2):
                continue
            meet = _bounds(k, le, lower=True)
            join = _bounds(k, le, lower=False)
            if meet is None or join is None:
                continue
            if any(meet[a, join[b, c]] != join[meet[a, b], meet[a, c]]
                   for a in range(k) for b in range(k) for c in range(k)):
                continue
            canon = min(tuple(sorted((p[a], p[b]) for a, b in le))
                        for p in itertools.permutations(range(k)))
            seen.add(canon)
        counts[k] = len(seen)
    return counts


def _bounds(k, le, lower):
    out = {}
    for a in range(k):
        for b in range(k):
            if lower:
                cs = [c for c in range(k) if (c, a) in le and (c, b) in le]
                best = [c for c in cs if all((d, c) in le for d in cs)]
            else:
                cs = [c for c in range(k) if (a, c) in le and (b, c) in le]
                best = [c for c in cs if all((c, d) in le for d in cs)]
            if len(best) != 1:
                return None
            out[a, b] = best[0]
    return out


def test_distributive_lattice_counts_match_brute_force():
    found = zoo.distributive_lattices(5)
    by_size = {}
    for L in found:
        by_size[len(L)] = by_size.get(len(L), 0) + 1
    assert by_size == brute_distributive_counts(5)


def test_distributive_lattice_counts_six():
    found = zoo.distributive_lattices(6)
    assert sum(len(L) == 6 for L in found) == brute_distributive_counts(6)[6]


def test_chain_and_boolean():
    c2, b1 = zoo.chain(2), zoo.boolean(1)
    assert len(c2) == len(b1) == 2
    assert c2.leq(c2.bottom, c2.top) and b1.leq(b1.bottom, b1.top)
    assert len(zoo.boolean(3)) == 8


def test_divisors_twelve():
    L = zoo.divisors(12)
    assert sorted(L.elements) == [1, 2, 3, 4, 6, 12]
    assert L.meet(4, 6) == 2 and L.join(4, 6) == 12
    assert L.nondistributivity_witness() is None


def test_generator_specs():
    Ls = zoo.bdl_generators("chain:3; boolean:2;product:chain:2*chain:2")
    assert [len(L) for L in Ls] == [3, 4, 4]
    with pytest.raises(ValueError):
        zoo.bdl_generators("bogus:2")


def test_finpar_hom_single_points():
    C = zoo.make_finpar(1)
    assert sorted(f.data for f in C.hom(1, 1)) == [(-1,), (0,)]


def test_size_limit():
    with pytest.raises(ValueError):
        zoo.make_finset(99)


@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_vee_codec_roundtrip(a, b, data):
    n = zoo.amp_size(a, b)
    if n == 0:
        return
    e = data.draw(st.integers(0, n - 1))
    x, y = zoo.vee_decode(e, a, b)
    assert zoo.vee_encode(x, y, a, b) == e


def partial_maps(a, b):
    return [Mor(a, b, d) for d in itertools.product(range(-1, b), repeat=a)]


def test_amp_is_the_chosen_product_map():
    X = zoo.finpar_bicartesian(zoo.make_finpar(2))
    for a, b, a2, b2 in itertools.product(range(3), repeat=4):
        for f in partial_maps(a, a2):
            for g in partial_maps(b, b2):
                assert zoo.finpar_amp(f, g) == X.fx(f, g)


def test_vee_and_amp_case_tables():
    L = zoo.finpar_direct_ldc(zoo.make_finpar(1))
    f = Mor(1, 1, (0,))
    g = Mor(1, 1, (-1,))
    pair = zoo.vee_encode(0, 0, 1, 1)
    assert L.tensor.ar(f, g).data[pair] == -1
    assert zoo.finpar_amp(f, g).data[pair] == 0


def test_powerset_functors():
    P, P2 = zoo.powerset_functors(2)
    C = P.base.cat
    for A in C.objects:
        for U in range(1 << A):
            assert P(C.identity(A), U) == U
        for B in C.objects:
            for R in C.hom(A, B):
                assert P(R, 0) == 0
            empty = Mor(A, B, (0,) * A)
            # R(U) is empty for every U, so every U lands in {empty}
            assert P2(empty, 1) == (1 << (1 << A)) - 1


def test_finset_is_distributive():
    from ldcbench.construct import d_left
    from ldcbench.fincat import is_isomorphism
    from ldcbench.monoidal import derive_cartesian_monoidal
    X = zoo.finset_bicartesian(zoo.make_finset(2))
    T = derive_cartesian_monoidal(X)
    for t in itertools.product(range(3), repeat=3):
        assert is_isomorphism(X.cat, d_left(X, T, *t)) is not None
