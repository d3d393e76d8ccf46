from itertools import product

import pytest

from skewlat.cosets import (
    DClassPair,
    comparable_pairs,
    coset_bijection,
    coset_intersection,
    coset_system_to_json,
    delta_decomposition,
    delta_decomposition_up,
    flat_cosets,
    full_coset_join,
    full_coset_meet,
    image_sets,
    induced_subalgebra,
    kimura_diagram_check,
    left_coset_meet,
    linking_elements,
    right_coset_meet,
)
from skewlat.core import validate
from skewlat.errors import ElementNotInClass


def _all_algebras(catalogs, samples):
    out = [s for c in catalogs.values() for s in c.algebras]
    out += list(samples.values())
    return out


def test_flat_cosets_verify_on_every_comparable_pair(catalogs, samples):
    # flat_cosets performs its own partition/refinement/transversal audit
    # and raises on any inconsistency
    total = 0
    for s in _all_algebras(catalogs, samples):
        for pair in comparable_pairs(s):
            flat_cosets(s, pair)
            total += 1
    assert total > 0


def test_coset_blocks_within_a_side_are_equipotent(samples):
    for s in samples.values():
        for pair in comparable_pairs(s):
            sys = flat_cosets(s, pair)
            for blocks in (
                sys.full_cosets_in_lower,
                sys.full_cosets_in_upper,
                sys.right_cosets_in_lower,
                sys.left_cosets_in_lower,
                sys.right_cosets_in_upper,
                sys.left_cosets_in_upper,
            ):
                assert len({len(b) for b in blocks}) == 1


def test_full_coset_size_is_product_of_flat_sizes(catalogs, samples):
    for s in _all_algebras(catalogs, samples):
        for pair in comparable_pairs(s):
            for x in sorted(pair.lower):
                dec = delta_decomposition(s, pair, x)
                assert len(dec.domain) == len(dec.left_block) * len(
                    dec.right_block
                )
            for y in sorted(pair.upper):
                dec = delta_decomposition_up(s, pair, y)
                assert len(dec.domain) == len(dec.left_block) * len(
                    dec.right_block
                )


def test_delta_rejects_misplaced_element(nc5_right):
    pair = comparable_pairs(nc5_right)[0]
    outside = next(iter(pair.upper))
    with pytest.raises(ElementNotInClass):
        delta_decomposition(nc5_right, pair, outside)


@pytest.mark.parametrize("kind", ["full", "right", "left"])
def test_coset_bijections_cover_every_pair(samples, kind):
    for s in samples.values():
        for pair in comparable_pairs(s):
            for a in sorted(pair.upper):
                for b in sorted(pair.lower):
                    bij = coset_bijection(s, pair, a, b, kind)
                    assert bij.kind == kind
                    xs = [x for x, _ in bij.mapping]
                    ys = [y for _, y in bij.mapping]
                    assert sorted(set(xs)) == sorted(xs)
                    assert sorted(set(ys)) == sorted(ys)


def test_full_bijection_pairs_by_natural_order(samples):
    for s in samples.values():
        leq = [
            [s.m(x, y) == y and s.m(y, x) == y for y in range(s.n)]
            for x in range(s.n)
        ]
        for pair in comparable_pairs(s):
            for a in sorted(pair.upper):
                for b in sorted(pair.lower):
                    bij = coset_bijection(s, pair, a, b, "full")
                    for x, y in bij.mapping:
                        assert leq[x][y]  # y <= x


def test_coset_intersection(samples):
    for s in samples.values():
        for pair in comparable_pairs(s):
            lower = sorted(pair.lower)
            for x, xp in product(lower, repeat=2):
                inter = coset_intersection(s, pair, x, xp)
                same_full = full_coset_meet(s, pair.upper, x) == full_coset_meet(
                    s, pair.upper, xp
                )
                # the two flat cosets meet exactly in x ^ x' iff the full
                # cosets coincide (verified internally); None otherwise
                assert inter == (s.m(x, xp) if same_full else None)


def test_image_sets_transversal(samples):
    # image_sets internally audits both the order description and the
    # one-point-per-coset transversal law; here we check types and sides
    for s in samples.values():
        for pair in comparable_pairs(s):
            for b in sorted(pair.lower):
                img = image_sets(s, pair, b)
                assert img <= pair.upper
            for a in sorted(pair.upper):
                img = image_sets(s, pair, a)
                assert img <= pair.lower


def test_kimura_diagram_commutes_everywhere(catalogs, samples):
    for s in _all_algebras(catalogs, samples):
        for pair in comparable_pairs(s):
            for a in sorted(pair.upper):
                for b in sorted(pair.lower):
                    ok, witness = kimura_diagram_check(s, pair, a, b)
                    assert ok, (pair, a, b, witness)


def test_linking_elements(samples):
    for s in samples.values():
        for pair in comparable_pairs(s):
            lower = sorted(pair.lower)
            for x, y in product(lower, repeat=2):
                link = linking_elements(s, pair, x, y)
                same_full = full_coset_meet(
                    s, pair.upper, x
                ) == full_coset_meet(s, pair.upper, y)
                if same_full:
                    assert link == (s.m(x, y), s.m(y, x))
                else:
                    assert link is None


def test_induced_subalgebra_is_valid(samples):
    s = samples["nc5-right"]
    pair = comparable_pairs(s)[0]
    elems = sorted(pair.upper | pair.lower)
    sub = induced_subalgebra(s, elems)
    assert validate(sub.meet.entries, sub.join.entries).valid
    assert sub.n == len(elems)


def test_flat_vs_full_correspondence_agrees(catalogs, samples):
    from skewlat.cosets import flat_vs_full_correspondence

    for s in _all_algebras(catalogs, samples):
        for pair in comparable_pairs(s):
            for side in (pair.lower, pair.upper):
                for x, y in product(sorted(side), repeat=2):
                    res = flat_vs_full_correspondence(s, pair, x, y)
                    for name, clause in res.items():
                        assert clause["agree"], (name, pair, x, y)


def test_coset_system_json_shape(nc5_right):
    sys = flat_cosets(nc5_right, comparable_pairs(nc5_right)[0])
    d = coset_system_to_json(sys)
    assert {
        "upper",
        "lower",
        "full_cosets_in_lower",
        "right_cosets_in_upper",
    } <= set(d)
