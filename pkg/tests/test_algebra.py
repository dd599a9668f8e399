from fractions import Fraction

import pytest
from hypothesis import given, settings

from planar_rook.algebra import (
    AlgebraElement,
    embed,
    format_element,
    from_diagram,
    identity,
    left_action_x,
    right_action_x,
    subdiagrams,
    to_x_coordinates,
    unit_diagram,
    x_of,
    x_pair_diagram,
    x_pair_product,
    zero,
)
from planar_rook.diagrams import (
    Diagram,
    MismatchError,
    NonPlanarError,
    Profile,
    bottom_profile,
    compositions,
    multiply,
    profiles_with_sizes,
)

from conftest import elements_st, pool


def test_add_scale_and_zero_cleanup():
    d = Diagram(1, 1, [(1, 1, 1)])
    g = from_diagram(d, Fraction(2, 3))
    assert (g + g.scale(-1)).is_zero
    assert g.scale(3).coefficient(d) == 2
    assert (-g).coefficient(d) == Fraction(-2, 3)
    assert 2 * g == g.scale(2)


def test_float_coefficients_rejected():
    d = Diagram(1, 1, [(1, 1, 1)])
    with pytest.raises(TypeError):
        from_diagram(d, 0.5)
    with pytest.raises(TypeError):
        from_diagram(d).scale(1.5)


def test_elements_reject_nonplanar_terms():
    crossing = Diagram(2, 1, [(1, 2, 1), (2, 1, 1)])
    with pytest.raises(NonPlanarError):
        from_diagram(crossing)


def test_shape_mismatch_arithmetic():
    with pytest.raises(MismatchError):
        zero(1, 1) + zero(2, 1)
    with pytest.raises(MismatchError):
        zero(1, 1) * zero(1, 2)


def test_mul_extends_diagram_product():
    # The first factor of the worked three-vertex example is not planar, so
    # it has no element form; on planar diagrams the element product is the
    # diagram product with coefficient 1.
    for a in pool(2, 2):
        for b in pool(2, 2):
            assert from_diagram(a) * from_diagram(b) == from_diagram(multiply(a, b))


def test_mul_by_zero():
    g = from_diagram(Diagram(2, 2, [(1, 1, 1)])) + from_diagram(Diagram(2, 2, []), 3)
    assert (g * zero(2, 2)).is_zero
    assert (zero(2, 2) * g).is_zero


@settings(max_examples=60, deadline=None)
@given(elements_st(3, 2), elements_st(3, 2), elements_st(3, 2))
def test_mul_distributes(g1, g2, g3):
    assert g1 * (g2 + g3) == g1 * g2 + g1 * g3
    assert (g1 + g2) * g3 == g1 * g3 + g2 * g3


def test_identity_one_column_one_color():
    assert identity(1, 1) == from_diagram(Diagram(1, 1, [(1, 1, 1)]))


def test_identity_one_column_two_colors():
    expected = (
        from_diagram(Diagram(1, 2, [(1, 1, 1)]))
        + from_diagram(Diagram(1, 2, [(1, 1, 2)]))
        + from_diagram(Diagram(1, 2, []), -1)
    )
    assert identity(1, 2) == expected


def test_identity_is_two_sided_unit():
    unit = identity(3, 2)
    for d in pool(3, 2):
        g = from_diagram(d)
        assert unit * g == g
        assert g * unit == g


def test_identity_width_zero():
    assert identity(0, 2) == from_diagram(Diagram(0, 2, []))


def test_x_of_empty_and_single_edge():
    empty = Diagram(1, 1, [])
    assert x_of(empty) == from_diagram(empty)
    edge = Diagram(1, 1, [(1, 1, 1)])
    assert x_of(edge) == from_diagram(edge) - from_diagram(empty)


def test_x_of_rejects_nonplanar():
    with pytest.raises(NonPlanarError):
        x_of(Diagram(2, 1, [(1, 2, 1), (2, 1, 1)]))


def test_x_inversion_identity_exhaustive():
    for d in pool(3, 2):
        total = zero(3, 2)
        for sub in subdiagrams(d):
            total += x_of(sub)
        assert total == from_diagram(d)


def test_x_coordinates_of_x_and_of_diagram():
    for d in pool(2, 2):
        assert to_x_coordinates(x_of(d)) == {d: Fraction(1)}
        assert to_x_coordinates(from_diagram(d)) == {sub: Fraction(1) for sub in subdiagrams(d)}


@settings(max_examples=60, deadline=None)
@given(elements_st(2, 2), elements_st(2, 2))
def test_x_coordinates_linear(g1, g2):
    combined = to_x_coordinates(g1 + g2)
    merged = dict(to_x_coordinates(g1))
    for d, q in to_x_coordinates(g2).items():
        merged[d] = merged.get(d, Fraction(0)) + q
    assert combined == {d: q for d, q in merged.items() if q}


def test_left_action_identity_shaped():
    d = Diagram(1, 1, [(1, 1, 1)])
    assert left_action_x(d, d) == d


def test_left_action_empty_annihilates_edges():
    empty = Diagram(1, 1, [])
    edge = Diagram(1, 1, [(1, 1, 1)])
    assert left_action_x(empty, edge) is None


def test_left_action_matches_expansion_exhaustive():
    for d in pool(2, 2):
        for a in pool(2, 2):
            expansion = from_diagram(d) * x_of(a)
            fast = left_action_x(d, a)
            assert expansion == (zero(2, 2) if fast is None else x_of(fast))


def test_right_action_mirrors():
    d = Diagram(1, 1, [(1, 1, 1)])
    assert right_action_x(d, d) == d
    assert right_action_x(Diagram(1, 1, [(1, 1, 1)]), Diagram(1, 1, [])) is None
    for d in pool(2, 2):
        for a in pool(2, 2):
            expansion = x_of(a) * from_diagram(d)
            fast = right_action_x(a, d)
            assert expansion == (zero(2, 2) if fast is None else x_of(fast))


def test_nonzero_action_preserves_bottom_profile():
    for d in pool(2, 2):
        for a in pool(2, 2):
            image = left_action_x(d, a)
            if image is not None:
                assert bottom_profile(image) == bottom_profile(a)
                assert image.size == a.size


def _same_size_pairs(n, c):
    for sizes in compositions(n, c):
        profiles = list(profiles_with_sizes(n, c, sizes))
        for s in profiles:
            for t in profiles:
                yield s, t


def test_x_pair_product_matches_expansion_exhaustive():
    pairs = list(_same_size_pairs(2, 2))
    for s, t in pairs:
        for u, v in pairs:
            fast = x_pair_product(s, t, u, v)
            assert (fast == (s, v)) if t == u else (fast is None)
            expansion = x_of(x_pair_diagram(s, t)) * x_of(x_pair_diagram(u, v))
            expected = x_of(x_pair_diagram(s, v)) if t == u else zero(2, 2)
            assert expansion == expected


def test_x_pair_product_idempotent():
    t = Profile(2, 2, ((2,), (1,), ()))
    assert x_pair_product(t, t, t, t) == (t, t)
    e = x_of(x_pair_diagram(t, t))
    assert e * e == e


def test_x_pair_product_size_precondition():
    s = Profile(2, 1, ((1,), (2,)))
    t = Profile(2, 1, ((1, 2), ()))
    with pytest.raises(ValueError):
        x_pair_product(s, t, s, s)


def test_embed_single_color_is_plain_concatenation():
    d = Diagram(2, 1, [(1, 2, 1)])
    assert embed(from_diagram(d)) == from_diagram(Diagram(3, 1, [(1, 2, 1), (3, 3, 1)]))


def test_embed_worked_example_coefficients():
    d = Diagram(2, 2, [(1, 2, 2), (2, 1, 1)])
    d_tilde = Diagram(2, 2, [(1, 1, 1)])
    g = from_diagram(d) + from_diagram(d_tilde, 5)
    embedded = embed(g)
    expected = {
        Diagram(3, 2, [(1, 2, 2), (2, 1, 1), (3, 3, 1)]): Fraction(1),
        Diagram(3, 2, [(1, 1, 1), (3, 3, 1)]): Fraction(5),
        Diagram(3, 2, [(1, 2, 2), (2, 1, 1), (3, 3, 2)]): Fraction(1),
        Diagram(3, 2, [(1, 1, 1), (3, 3, 2)]): Fraction(5),
        Diagram(3, 2, [(1, 2, 2), (2, 1, 1)]): Fraction(-1),
        Diagram(3, 2, [(1, 1, 1)]): Fraction(-5),
    }
    assert dict(embedded.terms) == expected


def test_embed_preserves_unit():
    for n, c in [(0, 1), (1, 1), (0, 2), (1, 2), (2, 2)]:
        assert embed(identity(n, c)) == identity(n + 1, c)


@settings(max_examples=40, deadline=None)
@given(elements_st(2, 2), elements_st(2, 2))
def test_embed_is_homomorphism(g1, g2):
    assert embed(g1 * g2) == embed(g1) * embed(g2)
    assert embed(g1) == g1.tensor(identity(1, 2))


def test_unit_diagram():
    assert unit_diagram(2, 0) == Diagram(1, 2, [])
    assert unit_diagram(2, 2) == Diagram(1, 2, [(1, 1, 2)])


def test_format_element():
    assert format_element(zero(2, 1)) == "0"
    g = from_diagram(Diagram(1, 2, [(1, 1, 1)])) + from_diagram(Diagram(1, 2, []), Fraction(-1, 2))
    assert format_element(g) == "-1/2 * n=1 c=2 [] + 1 * n=1 c=2 [1-1:1]"
