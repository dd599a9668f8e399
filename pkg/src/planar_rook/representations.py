"""Irreducible modules, action matrices, characters, and finite verification.

The module with bottom profile T is spanned by the x-basis vectors of all
planar diagrams whose bottom profile is T; a diagram acts on such a vector
as another basis vector or as zero, so its action matrix has unit-or-zero
columns.  Isomorphism classes are labeled by the part-size composition
(n_0, ..., n_c), and the dimension of a class is its multinomial
coefficient.

Every structural claim used downstream has a finite verifier here that
returns explicit failure witnesses rather than a bare boolean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional

from .algebra import AlgebraElement, embed, from_diagram, left_action_x, x_of, to_x_coordinates
from .diagrams import (
    DEFAULT_DIAGRAM_CAP,
    CapExceededError,
    Diagram,
    MismatchError,
    NonPlanarError,
    Profile,
    bottom_colors,
    bottom_profile,
    cardinality,
    compositions,
    ensure_within_cap,
    enumerate_planar,
    format_diagram,
    from_profiles,
    is_planar,
    multinomial,
    multiply,
    profiles_with_sizes,
    sorted_profile,
    top_profile,
    vertical_color_counts,
    vertical_diagram,
)
from .matrices import RationalMatrix


@dataclass
class VerifyResult:
    """Outcome of a finite verification: truthiness plus failure witnesses."""

    ok: bool
    checked: int
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    @staticmethod
    def collect(checked: int, failures: list[str]) -> "VerifyResult":
        return VerifyResult(not failures, checked, failures)


@dataclass(frozen=True)
class IrrepLabel:
    """An isomorphism class of irreducible modules: a composition of n."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) < 2 or any(s < 0 for s in self.sizes):
            raise ValueError(f"invalid composition {self.sizes}")
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def c(self) -> int:
        return len(self.sizes) - 1

    def dimension(self) -> int:
        return multinomial(self.sizes)

    def representative(self) -> Profile:
        """The canonical bottom profile of this class (consecutive blocks)."""
        return sorted_profile(self.n, self.sizes)

    def children(self) -> tuple["IrrepLabel", ...]:
        """Restriction summands one level down: decrement each nonzero part."""
        out = []
        for j, s in enumerate(self.sizes):
            if s > 0:
                reduced = list(self.sizes)
                reduced[j] -= 1
                out.append(IrrepLabel(tuple(reduced)))
        return tuple(out)

    def encode(self) -> str:
        return "|".join(str(s) for s in self.sizes)


def all_labels(n: int, c: int) -> tuple[IrrepLabel, ...]:
    """Every isomorphism class for width n, in colex order."""
    return tuple(IrrepLabel(sizes) for sizes in compositions(n, c))


@dataclass(frozen=True)
class ModuleSpace:
    """An ordered x-basis span; basis vectors are labeled by diagrams.

    For the irreducible module of bottom profile T the basis runs over all
    top profiles with matching part sizes, in enumeration order, realized
    as the planar diagrams from_profiles(S, T).  ``bottom`` is None for
    inhomogeneous spans (used to exhibit reducibility).
    """

    n: int
    c: int
    bottom: Optional[Profile]
    basis: tuple[Diagram, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def label(self) -> IrrepLabel:
        if self.bottom is None:
            raise ValueError("inhomogeneous span has no single class label")
        return IrrepLabel(self.bottom.sizes)

    def index_of(self, d: Diagram) -> int:
        return _basis_index(self)[d]

    def top_profiles(self) -> tuple[Profile, ...]:
        return tuple(top_profile(a) for a in self.basis)


def _basis_index(space: ModuleSpace) -> dict[Diagram, int]:
    memo = space.__dict__.get("_index")
    if memo is None:
        memo = {a: i for i, a in enumerate(space.basis)}
        object.__setattr__(space, "_index", memo)
    return memo


def module_space(n: int, c: int, bottom: Profile) -> ModuleSpace:
    """The irreducible module with the given bottom profile."""
    if bottom.n != n or bottom.c != c:
        raise MismatchError("profile does not match (n, c)")
    basis = tuple(
        from_profiles(top, bottom) for top in profiles_with_sizes(n, c, bottom.sizes)
    )
    assert len(basis) == multinomial(bottom.sizes)
    return ModuleSpace(n, c, bottom, basis)


def label_module(label: IrrepLabel) -> ModuleSpace:
    """The canonical representative module of an isomorphism class."""
    return module_space(label.n, label.c, label.representative())


def fixed_size_span(n: int, c: int, k: int, cap: int = DEFAULT_DIAGRAM_CAP) -> ModuleSpace:
    """The span of all x-vectors of diagrams with exactly k edges.

    Invariant under the action but reducible for k >= 1 and n >= 2: the
    action preserves bottom profiles, so transitivity fails across them.
    """
    ensure_within_cap(n, c, cap)
    basis = tuple(d for d in enumerate_planar(n, c) if d.size == k)
    return ModuleSpace(n, c, None, basis)


def all_bottom_profiles(n: int, c: int) -> Iterator[Profile]:
    """Every realizable bottom profile (all profiles are), in canonical order."""
    for sizes in compositions(n, c):
        yield from profiles_with_sizes(n, c, sizes)


# ---------------------------------------------------------------------------
# Actions.

def diagram_action(d: Diagram, space: ModuleSpace) -> tuple[Optional[int], ...]:
    """Column map of a diagram action: basis index -> image index or None.

    Column j is the basis index of d * x_(a_j) when the per-color endpoint
    containment holds, else None (the zero column).
    """
    if d.n != space.n or d.c != space.c:
        raise MismatchError("diagram does not match the module's (n, c)")
    if not is_planar(d):
        raise NonPlanarError(f"{format_diagram(d)} is not planar")
    idx = _basis_index(space)
    below = bottom_colors(d)
    column: list[Optional[int]] = []
    for a in space.basis:
        if all(below.get(t) == k for (t, _, k) in a.edges):
            image = multiply(d, a)
            try:
                column.append(idx[image])
            except KeyError:
                raise ValueError(
                    f"action of {format_diagram(d)} leaves the span at basis vector {format_diagram(a)}"
                )
        else:
            column.append(None)
    return tuple(column)


def compose_column_maps(
    outer: tuple[Optional[int], ...], inner: tuple[Optional[int], ...]
) -> tuple[Optional[int], ...]:
    """Column map of `outer after inner` (apply inner first)."""
    return tuple(None if j is None else outer[j] for j in inner)


def action_matrix(d: Diagram, space: ModuleSpace) -> RationalMatrix:
    """The 0/1 action matrix of a single diagram."""
    cols = [({i: Fraction(1)} if i is not None else {}) for i in diagram_action(d, space)]
    return RationalMatrix.from_columns(cols, space.dimension)


def element_action_columns(g: AlgebraElement, space: ModuleSpace) -> list[dict[int, Fraction]]:
    """Sparse action columns of a general element, exact coefficients."""
    cols: list[dict[int, Fraction]] = [dict() for _ in space.basis]
    for d, coeff in g.terms.items():
        for j, i in enumerate(diagram_action(d, space)):
            if i is not None:
                cols[j][i] = cols[j].get(i, Fraction(0)) + coeff
    return [{i: v for i, v in col.items() if v} for col in cols]


def action_matrix_elem(g: AlgebraElement, space: ModuleSpace) -> RationalMatrix:
    return RationalMatrix.from_columns(element_action_columns(g, space), space.dimension)


def action_trace(d: Diagram, space: ModuleSpace) -> int:
    """Trace of the diagram action: the number of fixed basis vectors."""
    return sum(1 for j, i in enumerate(diagram_action(d, space)) if i == j)


# ---------------------------------------------------------------------------
# Irreducibility and isomorphism classification.

def verify_irreducible(space: ModuleSpace, cap: int = DEFAULT_DIAGRAM_CAP) -> VerifyResult:
    """Check that the span has no proper nonzero invariant subspace.

    For a single-bottom-profile module this is constructive: the diagram
    that projects onto one basis vector and the diagram that transports any
    basis vector to any other are built from profiles and then verified
    through their action columns.  For inhomogeneous spans transitivity is
    searched exhaustively; failure witnesses name an unreachable pair.
    """
    ensure_within_cap(space.n, space.c, cap)
    failures: list[str] = []
    checked = 0
    if space.bottom is not None:
        for a_idx, a in enumerate(space.basis):
            ta = top_profile(a)
            projector = from_profiles(ta, ta)
            col = diagram_action(projector, space)
            expected = tuple(a_idx if j == a_idx else None for j in range(space.dimension))
            checked += 1
            if col != expected:
                failures.append(
                    f"projector {format_diagram(projector)} is not the unit projection at {format_diagram(a)}"
                )
            for b_idx, b in enumerate(space.basis):
                transporter = from_profiles(top_profile(b), ta)
                checked += 1
                if diagram_action(transporter, space)[a_idx] != b_idx:
                    failures.append(
                        f"transport {format_diagram(transporter)} fails to map "
                        f"{format_diagram(a)} to {format_diagram(b)}"
                    )
        return VerifyResult.collect(checked, failures)

    monoid = list(enumerate_planar(space.n, space.c))
    for a in space.basis:
        for b in space.basis:
            checked += 1
            if not any(left_action_x(d, a) == b for d in monoid):
                failures.append(
                    f"no diagram maps x at {format_diagram(a)} to x at {format_diagram(b)}"
                )
    return VerifyResult.collect(checked, failures)


@dataclass(frozen=True)
class IsoResult:
    """Answer to 'are these two modules isomorphic?', with a proof object.

    When isomorphic, ``intertwiner`` is the diagram whose right action maps
    the first basis bijectively onto the second.  Otherwise
    ``distinguisher`` is a projection diagram that acts nonzero on the
    module with the smaller color part and as zero on the other;
    ``annihilated`` records which argument (1 or 2) it kills.
    """

    isomorphic: bool
    intertwiner: Optional[Diagram] = None
    distinguisher: Optional[Diagram] = None
    annihilated: Optional[int] = None

    def __bool__(self) -> bool:
        return self.isomorphic


def are_isomorphic(space1: ModuleSpace, space2: ModuleSpace) -> IsoResult:
    """Modules are isomorphic iff their bottom part sizes agree; witnessed."""
    if space1.bottom is None or space2.bottom is None:
        raise ValueError("isomorphism classification needs single-profile modules")
    if (space1.n, space1.c) != (space2.n, space2.c):
        raise MismatchError("modules live over different monoids")
    t, s = space1.bottom, space2.bottom
    if t.sizes == s.sizes:
        return IsoResult(True, intertwiner=from_profiles(t, s))
    smaller, annihilated = (t, 2) if _first_smaller_part(t, s) else (s, 1)
    return IsoResult(False, distinguisher=from_profiles(smaller, smaller), annihilated=annihilated)


def _first_smaller_part(t: Profile, s: Profile) -> bool:
    """True if at the first differing color part, t has the smaller size."""
    for i in range(1, t.c + 1):
        if t.sizes[i] != s.sizes[i]:
            return t.sizes[i] < s.sizes[i]
    raise AssertionError("profiles with equal color part sizes are equal-sized everywhere")


def verify_isomorphism_claim(
    space1: ModuleSpace, space2: ModuleSpace, cap: int = DEFAULT_DIAGRAM_CAP
) -> VerifyResult:
    """Validate the witness returned by :func:`are_isomorphic` by acting.

    Isomorphic case: right multiplication by the intertwiner is a basis
    bijection commuting with every diagram action.  Non-isomorphic case:
    the distinguisher acts nonzero on one module and as zero on the other.
    """
    result = are_isomorphic(space1, space2)
    ensure_within_cap(space1.n, space1.c, cap)
    monoid = list(enumerate_planar(space1.n, space1.c))
    failures: list[str] = []
    checked = 0

    if result.isomorphic:
        d = result.intertwiner
        assert d is not None
        phi = [space2.index_of(multiply(a, d)) for a in space1.basis]
        if sorted(phi) != list(range(space2.dimension)):
            failures.append(f"intertwiner {format_diagram(d)} is not a basis bijection")
        for g in monoid:
            act1 = diagram_action(g, space1)
            act2 = diagram_action(g, space2)
            for a_idx in range(space1.dimension):
                checked += 1
                lhs = None if act1[a_idx] is None else phi[act1[a_idx]]
                rhs = act2[phi[a_idx]]
                if lhs != rhs:
                    failures.append(
                        f"{format_diagram(g)} does not commute with the intertwiner at basis {a_idx}"
                    )
        return VerifyResult.collect(checked, failures)

    d = result.distinguisher
    assert d is not None
    nonzero_space, zero_space = (space1, space2) if result.annihilated == 2 else (space2, space1)
    checked += 1
    if all(i is None for i in diagram_action(d, nonzero_space)):
        failures.append(f"distinguisher {format_diagram(d)} acts as zero on both modules")
    checked += 1
    if any(i is not None for i in diagram_action(d, zero_space)):
        failures.append(f"distinguisher {format_diagram(d)} fails to annihilate the other module")
    return VerifyResult.collect(checked, failures)


# ---------------------------------------------------------------------------
# The regular representation and the matrix-algebra structure.

def regular_decomposition(n: int, c: int) -> list[tuple[IrrepLabel, int]]:
    """Isomorphism classes with multiplicities in the regular representation.

    Each class occurs with multiplicity equal to its dimension, and the
    squared dimensions add up to the number of diagrams.
    """
    decomposition = [(label, label.dimension()) for label in all_labels(n, c)]
    assert sum(mult * label.dimension() for label, mult in decomposition) == cardinality(n, c)
    return decomposition


def verify_regular_decomposition(n: int, c: int, cap: int = DEFAULT_DIAGRAM_CAP) -> VerifyResult:
    """Check the x-basis partitions into bottom-profile blocks of the right sizes."""
    ensure_within_cap(n, c, cap)
    by_bottom: dict[Profile, int] = {}
    total = 0
    for d in enumerate_planar(n, c):
        by_bottom[bottom_profile(d)] = by_bottom.get(bottom_profile(d), 0) + 1
        total += 1
    failures: list[str] = []
    checked = 0
    for profile in all_bottom_profiles(n, c):
        checked += 1
        expected = multinomial(profile.sizes)
        got = by_bottom.pop(profile, 0)
        if got != expected:
            failures.append(f"bottom profile {profile.parts} spans {got} vectors, expected {expected}")
    if by_bottom:
        failures.append(f"unexpected bottom profiles: {sorted(p.parts for p in by_bottom)}")
    if total != cardinality(n, c):
        failures.append(f"enumerated {total} diagrams, formula gives {cardinality(n, c)}")
    return VerifyResult.collect(checked, failures)


def verify_matrix_algebra(
    n: int, c: int, label: IrrepLabel, dim_cap: int = 12, cap: int = DEFAULT_DIAGRAM_CAP
) -> VerifyResult:
    """Check one block behaves as a full matrix algebra, by full expansion.

    Indexes the bottom profiles of the class, multiplies the profile-pair
    x-elements as fully expanded linear combinations, and compares with the
    corresponding elementary-matrix products.  Also checks the block is a
    two-sided ideal: multiplying by any diagram keeps x-supports inside the
    class.
    """
    if (label.n, label.c) != (n, c):
        raise MismatchError(f"label {label.sizes} does not match (n={n}, c={c})")
    m = label.dimension()
    if m > dim_cap:
        raise CapExceededError(f"class dimension {m} exceeds the cap of {dim_cap}")
    ensure_within_cap(n, c, cap)

    profiles = list(profiles_with_sizes(n, c, label.sizes))
    x_elems = {
        (i, j): x_of(from_profiles(profiles[i], profiles[j]))
        for i in range(m)
        for j in range(m)
    }
    failures: list[str] = []
    checked = 0

    for i in range(m):
        for j in range(m):
            for l in range(m):
                for k in range(m):
                    checked += 1
                    product = x_elems[i, j] * x_elems[l, k]
                    expected = x_elems[i, k] if j == l else AlgebraElement.zero(n, c)
                    matrix_side = RationalMatrix.unit(m, i, j) @ RationalMatrix.unit(m, l, k)
                    matrix_expected = (
                        RationalMatrix.unit(m, i, k) if j == l else RationalMatrix.zero(m, m)
                    )
                    if product != expected or matrix_side != matrix_expected:
                        failures.append(f"x-pair product ({i},{j})*({l},{k}) deviates from the matrix law")

    for g in enumerate_planar(n, c):
        g_elem = from_diagram(g)
        for i in range(m):
            for j in range(m):
                checked += 1
                for side in (g_elem * x_elems[i, j], x_elems[i, j] * g_elem):
                    for d in to_x_coordinates(side):
                        if bottom_profile(d).sizes != label.sizes:
                            failures.append(
                                f"ideal escape: {format_diagram(g)} times x-pair ({i},{j}) "
                                f"reaches class {bottom_profile(d).sizes}"
                            )
    return VerifyResult.collect(checked, failures)


# ---------------------------------------------------------------------------
# Characters.

def character(d: Diagram, label: IrrepLabel) -> int:
    """Closed-form irreducible character of a diagram.

    Only vertical edges contribute: with l_i vertical edges of color i the
    value is the product over colors of C(l_i, n_i) (zero as soon as some
    n_i exceeds l_i).
    """
    if (d.n, d.c) != (label.n, label.c):
        raise MismatchError(f"diagram shape does not match label {label.sizes}")
    if not is_planar(d):
        raise NonPlanarError(f"{format_diagram(d)} is not planar")
    verticals = vertical_color_counts(d)
    out = 1
    for l_i, n_i in zip(verticals, label.sizes[1:]):
        out *= math.comb(l_i, n_i)
    return out


def vertical_count_rows(n: int, c: int) -> list[tuple[int, ...]]:
    """All vertical-count vectors, ordered by total then colex."""
    rows = []
    for total in range(n + 1):
        rows.extend(compositions(total, c - 1))
    return rows


def character_table(n: int, c: int) -> tuple[list[tuple[int, ...]], list[IrrepLabel], list[list[int]]]:
    """Rows (vertical-count vectors), columns (labels), and values."""
    rows = vertical_count_rows(n, c)
    labels = list(all_labels(n, c))
    values = [[character(vertical_diagram(n, row), label) for label in labels] for row in rows]
    return rows, labels, values


def character_table_csv(n: int, c: int) -> bytes:
    """Deterministic CSV export of the character table."""
    rows, labels, values = character_table(n, c)
    lines = ["verticals," + ",".join(label.encode() for label in labels)]
    for row, row_values in zip(rows, values):
        lines.append("|".join(str(v) for v in row) + "," + ",".join(str(v) for v in row_values))
    return ("\n".join(lines) + "\n").encode("utf-8")


def verify_character_table(n: int, c: int, cap: int = DEFAULT_DIAGRAM_CAP) -> VerifyResult:
    """Recompute every table entry as a trace on a representative module."""
    ensure_within_cap(n, c, cap)
    rows, labels, values = character_table(n, c)
    spaces = [label_module(label) for label in labels]
    failures: list[str] = []
    checked = 0
    for row, row_values in zip(rows, values):
        d = vertical_diagram(n, row)
        for label, space, value in zip(labels, spaces, row_values):
            checked += 1
            if action_trace(d, space) != value:
                failures.append(f"entry ({row}, {label.encode()}) differs from the trace")
    return VerifyResult.collect(checked, failures)


# ---------------------------------------------------------------------------
# Restriction to one column fewer.

def _last_vertex_part(a: Diagram) -> int:
    """Index of the top-profile part containing the last top vertex."""
    for part_index, part in enumerate(top_profile(a).parts):
        if a.n in part:
            return part_index
    raise AssertionError("the last vertex belongs to some part")


def restriction_groups(space: ModuleSpace) -> list[tuple[int, list[int]]]:
    """Basis indices grouped by where the last top vertex sits, part index ascending."""
    if space.bottom is None:
        raise ValueError("restriction needs a single-profile module")
    if space.n < 1:
        raise ValueError("restriction needs n >= 1")
    groups: dict[int, list[int]] = {}
    for idx, a in enumerate(space.basis):
        groups.setdefault(_last_vertex_part(a), []).append(idx)
    return sorted(groups.items())


def restriction_decomposition(space: ModuleSpace) -> list[IrrepLabel]:
    """Restriction summands, computed from the basis grouping.

    Grouping the basis by the part holding the last top vertex realizes the
    direct-sum decomposition under the embedded smaller algebra; the group
    for part j contributes the label with its j-th size decremented.
    Group sizes are checked against the multinomial recursion.
    """
    label = space.label()
    out = []
    for j, indices in restriction_groups(space):
        reduced = list(label.sizes)
        reduced[j] -= 1
        child = IrrepLabel(tuple(reduced))
        assert len(indices) == child.dimension()
        out.append(child)
    return out


def restriction_adapted_space(space: ModuleSpace) -> tuple[ModuleSpace, list[int]]:
    """Reorder the basis by restriction group; returns the space and block sizes."""
    groups = restriction_groups(space)
    order = [idx for _, indices in groups for idx in indices]
    basis = tuple(space.basis[i] for i in order)
    return ModuleSpace(space.n, space.c, space.bottom, basis), [len(g) for _, g in groups]


def _strip_last_top_vertex(profile: Profile, part_index: int) -> Profile:
    parts = list(profile.parts)
    if profile.n not in parts[part_index]:
        raise ValueError(f"vertex {profile.n} is not in part {part_index}")
    parts[part_index] = tuple(v for v in parts[part_index] if v != profile.n)
    return Profile(profile.n - 1, profile.c, tuple(parts))


def verify_restriction(space: ModuleSpace, cap: int = DEFAULT_DIAGRAM_CAP) -> VerifyResult:
    """Check the three restriction claims on one module.

    (a) each group span is invariant under the embedded action of every
    smaller diagram, (b) dropping the last column intertwines that action
    with the smaller module's action, and (c) group sizes reproduce the
    multinomial recursion.
    """
    label = space.label()
    n, c = space.n, space.c
    ensure_within_cap(n - 1, c, cap)
    groups = restriction_groups(space)
    failures: list[str] = []
    checked = 0

    # (c) dimensions
    children = restriction_decomposition(space)
    checked += 1
    if space.dimension != sum(child.dimension() for child in children):
        failures.append(f"dimension of {label.encode()} does not match the sum over summands")

    # phi per group: strip the last top vertex, land in the canonical child module.
    targets: dict[int, ModuleSpace] = {}
    phi: dict[int, Diagram] = {}
    for j, indices in groups:
        reduced = list(label.sizes)
        reduced[j] -= 1
        child_space = label_module(IrrepLabel(tuple(reduced)))
        targets[j] = child_space
        for idx in indices:
            a = space.basis[idx]
            stripped = _strip_last_top_vertex(top_profile(a), j)
            phi[idx] = from_profiles(stripped, child_space.bottom)

    members = {j: set(indices) for j, indices in groups}

    for d in enumerate_planar(n - 1, c):
        cols = element_action_columns(embed(from_diagram(d)), space)
        for j, indices in groups:
            child_space = targets[j]
            for idx in indices:
                checked += 1
                col = cols[idx]
                if any(i not in members[j] for i in col):
                    failures.append(
                        f"group {j} of {label.encode()} is not invariant under {format_diagram(d)}"
                    )
                    continue
                mapped = {child_space.index_of(phi[i]): q for i, q in col.items()}
                image = left_action_x(d, phi[idx])
                expected = {} if image is None else {child_space.index_of(image): Fraction(1)}
                if mapped != expected:
                    failures.append(
                        f"column drop does not intertwine {format_diagram(d)} on "
                        f"{label.encode()} group {j} basis {idx}"
                    )
    return VerifyResult.collect(checked, failures)
