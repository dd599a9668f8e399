import math
from fractions import Fraction

import pytest

from planar_rook.algebra import from_diagram, identity
from planar_rook.diagrams import (
    Diagram,
    NonPlanarError,
    Profile,
    bottom_profile,
    cardinality,
    compositions,
    multinomial,
    multiply,
    profiles_with_sizes,
    vertical_subdiagram,
)
from planar_rook.matrices import RationalMatrix
from planar_rook.representations import (
    IrrepLabel,
    action_matrix,
    action_matrix_elem,
    action_trace,
    all_bottom_profiles,
    all_labels,
    are_isomorphic,
    character,
    character_table,
    character_table_csv,
    diagram_action,
    fixed_size_span,
    label_module,
    module_space,
    regular_decomposition,
    restriction_adapted_space,
    restriction_decomposition,
    verify_character_table,
    verify_irreducible,
    verify_isomorphism_claim,
    verify_matrix_algebra,
    verify_regular_decomposition,
    verify_restriction,
)

from conftest import pool


def test_label_basics():
    label = IrrepLabel((1, 2, 0))
    assert label.n == 3
    assert label.c == 2
    assert label.dimension() == 3
    assert label.encode() == "1|2|0"
    assert label.representative().parts == ((1,), (2, 3), ())
    assert [child.sizes for child in label.children()] == [(0, 2, 0), (1, 1, 0)]


def test_label_children_drop_empty_parts():
    assert [child.sizes for child in IrrepLabel((1, 0, 0)).children()] == [(0, 0, 0)]


def test_module_space_dimension_one():
    space = module_space(1, 1, Profile(1, 1, ((), (1,))))
    assert space.dimension == 1
    assert space.top_profiles()[0].parts == ((), (1,))


def test_module_space_dimension_two():
    space = module_space(2, 1, Profile(2, 1, ((2,), (1,))))
    assert space.dimension == math.comb(2, 1)


def test_module_dimensions_are_multinomials():
    for c in (1, 2):
        for n in range(5):
            for profile in all_bottom_profiles(n, c):
                assert module_space(n, c, profile).dimension == multinomial(profile.sizes)


def test_unit_acts_as_identity_matrix():
    for c in (1, 2):
        for n in range(3):
            unit = identity(n, c)
            for profile in all_bottom_profiles(n, c):
                space = module_space(n, c, profile)
                assert action_matrix_elem(unit, space) == RationalMatrix.identity(space.dimension)


def test_empty_diagram_acts_as_zero_on_colored_modules():
    space = module_space(2, 2, Profile(2, 2, ((2,), (1,), ())))
    matrix = action_matrix(Diagram(2, 2, []), space)
    assert matrix == RationalMatrix.zero(space.dimension, space.dimension)


def test_action_is_multiplicative_exhaustive_small():
    for profile in all_bottom_profiles(2, 2):
        space = module_space(2, 2, profile)
        for d1 in pool(2, 2):
            m1 = action_matrix(d1, space)
            for d2 in pool(2, 2):
                assert m1 @ action_matrix(d2, space) == action_matrix(multiply(d1, d2), space)


def test_action_rejects_nonplanar():
    space = module_space(2, 1, Profile(2, 1, ((1, 2), ())))
    with pytest.raises(NonPlanarError):
        diagram_action(Diagram(2, 1, [(1, 2, 1), (2, 1, 1)]), space)


def test_action_columns_are_unit_or_zero():
    for profile in all_bottom_profiles(2, 2):
        space = module_space(2, 2, profile)
        for d in pool(2, 2):
            for column in zip(*action_matrix(d, space).rows):
                nonzero = [v for v in column if v]
                assert nonzero in ([], [Fraction(1)])


def test_irreducibility_of_all_small_modules():
    for c in (1, 2):
        for n in range(3):
            for profile in all_bottom_profiles(n, c):
                assert verify_irreducible(module_space(n, c, profile))


def test_fixed_size_span_is_reducible():
    outcome = verify_irreducible(fixed_size_span(2, 2, 1))
    assert not outcome
    assert outcome.failures


def test_lonely_full_matching_span_is_irreducible():
    # With one color the only planar full matching is the identity, so the
    # span of all size-n vectors is one-dimensional and irreducible.
    span = fixed_size_span(2, 1, 2)
    assert span.dimension == 1
    assert verify_irreducible(span)


def test_isomorphism_same_module():
    space = module_space(2, 1, Profile(2, 1, ((2,), (1,))))
    result = are_isomorphic(space, space)
    assert result.isomorphic
    assert result.intertwiner == Diagram(2, 1, [(1, 1, 1)])  # identity-shaped on part 1


def test_isomorphism_detects_size_mismatch():
    m1 = module_space(1, 1, Profile(1, 1, ((1,), ())))
    m2 = module_space(1, 1, Profile(1, 1, ((), (1,))))
    result = are_isomorphic(m1, m2)
    assert not result.isomorphic
    assert result.distinguisher is not None


def test_isomorphism_iff_sizes_with_validated_witnesses():
    profiles = list(all_bottom_profiles(2, 2))
    for p1 in profiles:
        for p2 in profiles:
            m1, m2 = module_space(2, 2, p1), module_space(2, 2, p2)
            assert are_isomorphic(m1, m2).isomorphic == (p1.sizes == p2.sizes)
            assert verify_isomorphism_claim(m1, m2)


def test_regular_decomposition_width_zero():
    assert regular_decomposition(0, 2) == [(IrrepLabel((0, 0, 0)), 1)]


def test_regular_decomposition_two_by_one():
    decomposition = regular_decomposition(2, 1)
    assert decomposition == [
        (IrrepLabel((2, 0)), 1),
        (IrrepLabel((1, 1)), 2),
        (IrrepLabel((0, 2)), 1),
    ]
    assert sum(mult * label.dimension() for label, mult in decomposition) == 6


def _multinomial_by_factorials(sizes):
    out = math.factorial(sum(sizes))
    for s in sizes:
        out //= math.factorial(s)
    return out


def test_squared_multinomials_sum_to_cardinality():
    for c in (1, 2, 3):
        for n in range(6):
            total = sum(
                _multinomial_by_factorials(sizes) ** 2 for sizes in compositions(n, c)
            )
            assert total == cardinality(n, c)


def test_regular_blocks_partition_the_basis():
    for c in (1, 2):
        for n in range(4):
            assert verify_regular_decomposition(n, c)


def test_matrix_algebra_trivial_label():
    assert verify_matrix_algebra(2, 2, IrrepLabel((2, 0, 0)))


def test_matrix_algebra_two_by_two():
    assert verify_matrix_algebra(2, 1, IrrepLabel((1, 1)))


def test_matrix_algebra_all_labels_small():
    for label in all_labels(2, 2):
        assert verify_matrix_algebra(2, 2, label)


def test_character_zero_without_verticals():
    d = Diagram(2, 1, [(1, 2, 1)])
    assert character(d, IrrepLabel((1, 1))) == 0


def test_character_of_two_verticals():
    d = Diagram(2, 1, [(1, 1, 1), (2, 2, 1)])
    label = IrrepLabel((1, 1))
    assert character(d, label) == 2
    assert action_trace(d, label_module(label)) == 2


def test_character_matches_trace_and_vertical_drop():
    labels = all_labels(2, 2)
    spaces = [label_module(label) for label in labels]
    for d in pool(2, 2):
        for label, space in zip(labels, spaces):
            assert character(d, label) == action_trace(d, space)
            assert action_trace(vertical_subdiagram(d), space) == action_trace(d, space)


def test_character_table_two_by_one():
    rows, labels, values = character_table(2, 1)
    assert rows == [(0,), (1,), (2,)]
    assert [label.sizes for label in labels] == [(2, 0), (1, 1), (0, 2)]
    column = [row[1] for row in values]
    assert column == [0, 1, 2]
    trivial_column = [row[0] for row in values]
    assert trivial_column == [1, 1, 1]


def test_character_table_csv_frozen():
    expected = b"verticals,2|0,1|1,0|2\n0,1,0,0\n1,1,1,0\n2,1,2,1\n"
    assert character_table_csv(2, 1) == expected
    assert character_table_csv(2, 1) == character_table_csv(2, 1)


def test_character_table_verifies_by_trace():
    assert verify_character_table(3, 2)
    assert verify_character_table(4, 1)


def test_restriction_of_width_one():
    space = label_module(IrrepLabel((1, 0, 0)))
    assert [label.sizes for label in restriction_decomposition(space)] == [(0, 0, 0)]


def test_restriction_drops_and_orders():
    space = label_module(IrrepLabel((0, 1, 1)))
    assert [label.sizes for label in restriction_decomposition(space)] == [(0, 0, 1), (0, 1, 0)]
    assert space.dimension == 2 == 1 + 1


def test_restriction_dimension_recursion():
    for label in all_labels(3, 2):
        children = restriction_decomposition(label_module(label))
        assert label.dimension() == sum(child.dimension() for child in children)


def test_restriction_verifies_small():
    for c in (1, 2):
        for n in (1, 2):
            for profile in all_bottom_profiles(n, c):
                assert verify_restriction(module_space(n, c, profile))


def test_restriction_adapted_blocks():
    space = label_module(IrrepLabel((1, 1, 1)))
    adapted, block_sizes = restriction_adapted_space(space)
    assert set(adapted.basis) == set(space.basis)
    assert block_sizes == [2, 2, 2]
    from planar_rook.algebra import embed

    for d in pool(2, 2):
        matrix = action_matrix_elem(embed(from_diagram(d)), adapted)
        assert matrix.is_block_diagonal(block_sizes)


def test_restriction_requires_positive_width():
    space = module_space(0, 1, Profile(0, 1, ((), ())))
    with pytest.raises(ValueError):
        restriction_decomposition(space)
