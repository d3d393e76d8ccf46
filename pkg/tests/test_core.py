import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewlat.core import (
    SkewLattice,
    chain,
    direct_product,
    dual,
    from_json,
    mirror,
    rectangular,
    to_json,
    validate,
)
from skewlat.errors import (
    DimensionMismatch,
    EntryOutOfRange,
    NotASkewLattice,
)


def test_chain_is_valid_and_commutative():
    s = chain(3)
    assert s.n == 3
    for x in range(3):
        for y in range(3):
            assert s.m(x, y) == s.m(y, x) == min(x, y)
            assert s.j(x, y) == s.j(y, x) == max(x, y)


def test_rectangular_tables():
    s = rectangular(2, 3)
    assert s.n == 6
    for x in range(6):
        for y in range(6):
            # meet keeps the row of x and the column of y; join flips
            assert s.m(x, y) == s.j(y, x)
            assert s.m(x, y, x) == x
            assert s.j(x, y, x) == x


def test_validate_rejects_broken_absorption():
    s = chain(2)
    join = [list(r) for r in s.join.entries]
    join[0][1] = 0  # breaks x v (x ^ y) = x at (1, 0)
    rep = validate(s.meet.entries, join)
    assert not rep.valid
    assert rep.failures


def test_validate_rejects_bad_shapes():
    with pytest.raises(DimensionMismatch):
        validate([[0, 0], [0, 1]], [[0]])
    with pytest.raises(EntryOutOfRange):
        validate([[0, 5], [0, 1]], [[0, 1], [1, 1]])


def test_checked_constructor_raises_with_report():
    with pytest.raises(NotASkewLattice):
        SkewLattice.checked([[1, 0], [0, 1]], [[0, 1], [1, 1]])


def test_direct_product_order_and_validity():
    a, b = chain(2), rectangular(2, 2)
    s = direct_product(a, b)
    assert s.n == a.n * b.n
    assert validate(s.meet.entries, s.join.entries).valid


def test_dual_and_mirror_are_involutions(samples):
    for s in samples.values():
        assert dual(dual(s)) == s
        assert mirror(mirror(s)) == s
        assert validate(dual(s).meet.entries, dual(s).join.entries).valid
        assert validate(mirror(s).meet.entries, mirror(s).join.entries).valid


def test_mirror_swaps_argument_order(samples):
    s = samples["nc5-right"]
    t = mirror(s)
    for x in range(s.n):
        for y in range(s.n):
            assert t.m(x, y) == s.m(y, x)
            assert t.j(x, y) == s.j(y, x)


def test_json_round_trip(samples):
    for s in samples.values():
        t, names = from_json(to_json(s))
        assert t == s and names is None
    t, names = from_json(to_json(samples["chain3"], names=["a", "b", "c"]))
    assert names == ["a", "b", "c"]


def test_json_keys_sorted(samples):
    text = to_json(samples["rect22"])
    assert json.loads(text) == json.loads(
        json.dumps(json.loads(text), sort_keys=True)
    )


@given(st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=16, deadline=None)
def test_rectangular_always_validates(l, r):
    s = rectangular(l, r)
    assert validate(s.meet.entries, s.join.entries).valid


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_validate_never_crashes_on_arbitrary_tables(data):
    n = data.draw(st.integers(1, 3))
    table = lambda: [
        [data.draw(st.integers(0, n - 1)) for _ in range(n)] for _ in range(n)
    ]
    rep = validate(table(), table())
    assert isinstance(rep.valid, bool)


def test_regularity_follows_from_axioms(catalogs):
    # the sandwich law x ^ y ^ x ^ z ^ x = x ^ y ^ z ^ x, and dually
    for cat in catalogs.values():
        for s in cat.algebras:
            rep = validate(s.meet.entries, s.join.entries)
            assert rep.valid and rep.meet_regular and rep.join_regular
