"""Finite verification suite for every structural claim the engine relies on.

Each check sweeps an exhaustive range (clipped by the configured caps) or a
seeded random sample, and reports an explicit witness for every failure.
All arithmetic is exact, so a check either passes identically or names a
counterexample.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import algebra, bratteli, representations
from .diagrams import (
    DEFAULT_DIAGRAM_CAP,
    Diagram,
    bottom_profile,
    cardinality,
    ensure_within_cap,
    enumerate_planar,
    format_diagram,
    from_profiles,
    is_planar,
    multinomial,
    multiply,
    profiles_with_sizes,
    to_matrix,
    top_profile,
    vertical_color_counts,
    vertical_subdiagram,
)
from .matrices import RationalMatrix
from .representations import (
    all_bottom_profiles,
    all_labels,
    action_matrix,
    action_matrix_elem,
    action_trace,
    are_isomorphic,
    compose_column_maps,
    diagram_action,
    fixed_size_span,
    label_module,
    module_space,
    regular_decomposition,
    restriction_adapted_space,
    restriction_decomposition,
    verify_irreducible,
    verify_matrix_algebra,
    verify_regular_decomposition,
    verify_restriction,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    checked: int
    witnesses: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked, "witnesses": self.witnesses}


@dataclass(frozen=True)
class VerifyConfig:
    """Caps and sampling parameters for one verification run."""

    n_cap: int = 3
    c_cap: int = 2
    diagram_cap: int = DEFAULT_DIAGRAM_CAP
    samples: int = 1000
    seed: int = 12345


Scope = tuple[int, int]


def _result(name: str, checked: int, witnesses: list[str]) -> CheckResult:
    return CheckResult(name, not witnesses, checked, witnesses)


@lru_cache(maxsize=None)
def _all_planar(n: int, c: int) -> tuple[Diagram, ...]:
    return tuple(enumerate_planar(n, c))


def _pool(n: int, c: int, cap: int) -> tuple[Diagram, ...]:
    ensure_within_cap(n, c, cap)
    return _all_planar(n, c)


def _shapes(scope: Scope):
    n_max, c_max = scope
    for c in range(1, c_max + 1):
        for n in range(n_max + 1):
            yield n, c


def _random_element(rng: random.Random, pool, n: int, c: int) -> algebra.AlgebraElement:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        d = rng.choice(pool)
        terms[d] = terms.get(d, Fraction(0)) + coeff
    return algebra.AlgebraElement(n, c, terms)


# ---------------------------------------------------------------------------
# Diagram-level checks.

def check_enumeration_count(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Enumeration yields each planar diagram exactly once, matching the formula."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        checked += 1
        if any(not is_planar(d) for d in pool):
            witnesses.append(f"(n={n}, c={c}): enumeration produced a non-planar diagram")
        if len(set(pool)) != len(pool):
            witnesses.append(f"(n={n}, c={c}): enumeration repeated a diagram")
        if len(pool) != cardinality(n, c):
            witnesses.append(
                f"(n={n}, c={c}): enumerated {len(pool)} diagrams, formula gives {cardinality(n, c)}"
            )
    return _result("diagram.enumeration-count", checked, witnesses)


def check_associativity(
    exhaustive: Scope, sampled: Scope, samples: int, seed: int, cap: int = DEFAULT_DIAGRAM_CAP
) -> CheckResult:
    witnesses = []
    checked = 0
    for n, c in _shapes(exhaustive):
        pool = _pool(n, c, cap)
        for a in pool:
            for b in pool:
                ab = multiply(a, b)
                for d in pool:
                    checked += 1
                    if multiply(ab, d) != multiply(a, multiply(b, d)):
                        witnesses.append(
                            f"({format_diagram(a)}) * ({format_diagram(b)}) * ({format_diagram(d)})"
                        )
    rng = random.Random(seed)
    n, c = sampled
    pool = _pool(n, c, cap)
    for _ in range(samples):
        a, b, d = (rng.choice(pool) for _ in range(3))
        checked += 1
        if multiply(multiply(a, b), d) != multiply(a, multiply(b, d)):
            witnesses.append(
                f"sampled ({format_diagram(a)}) * ({format_diagram(b)}) * ({format_diagram(d)})"
            )
    return _result("diagram.associativity", checked, witnesses)


def check_rook_closure(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Products never place two edges on one vertex."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        for a in pool:
            for b in pool:
                checked += 1
                product = multiply(a, b)
                tops = [t for t, _, _ in product.edges]
                bottoms = [x for _, x, _ in product.edges]
                if len(set(tops)) != len(tops) or len(set(bottoms)) != len(bottoms):
                    witnesses.append(f"({format_diagram(a)}) * ({format_diagram(b)})")
    return _result("diagram.rook-closure", checked, witnesses)


def check_planarity_closure(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        for a in pool:
            for b in pool:
                checked += 1
                if not is_planar(multiply(a, b)):
                    witnesses.append(f"({format_diagram(a)}) * ({format_diagram(b)}) is not planar")
    return _result("diagram.planarity-closure", checked, witnesses)


def check_size_monotonicity(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        for a in pool:
            for b in pool:
                checked += 1
                if multiply(a, b).size > min(a.size, b.size):
                    witnesses.append(f"({format_diagram(a)}) * ({format_diagram(b)}) grew")
    return _result("diagram.size-monotonicity", checked, witnesses)


def check_profile_roundtrip(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Profiles determine planar diagrams; the two rows have equal part sizes."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        for d in _pool(n, c, cap):
            checked += 1
            top, bottom = top_profile(d), bottom_profile(d)
            if top.sizes != bottom.sizes:
                witnesses.append(f"{format_diagram(d)}: row part sizes differ")
            if from_profiles(top, bottom) != d:
                witnesses.append(f"{format_diagram(d)}: profile round trip failed")
    return _result("diagram.profile-roundtrip", checked, witnesses)


def _bitmask_matrix(d: Diagram) -> list[list[int]]:
    return [[0 if k == 0 else 1 << (k - 1) for k in row] for row in to_matrix(d)]


def _bitmask_product(m1: list[list[int]], m2: list[list[int]]) -> list[list[int]]:
    # Entry ring: componentwise product is AND, componentwise sum is XOR.
    size = len(m1)
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            acc = 0
            for m in range(size):
                acc ^= m1[i][m] & m2[m][j]
            out[i][j] = acc
    return out


def check_matrix_semantics(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Diagram composition agrees with matrix multiplication over the color ring."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        masks = {d: _bitmask_matrix(d) for d in pool}
        for a in pool:
            for b in pool:
                checked += 1
                if _bitmask_product(masks[a], masks[b]) != _bitmask_matrix(multiply(a, b)):
                    witnesses.append(f"({format_diagram(a)}) * ({format_diagram(b)})")
    return _result("diagram.matrix-semantics", checked, witnesses)


# ---------------------------------------------------------------------------
# Algebra-level checks.

def check_identity_unit(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        unit = algebra.identity(n, c)
        for d in _pool(n, c, cap):
            checked += 1
            as_elem = algebra.from_diagram(d)
            if unit * as_elem != as_elem or as_elem * unit != as_elem:
                witnesses.append(f"unit fails on {format_diagram(d)}")
    return _result("algebra.identity-unit", checked, witnesses)


def check_x_inversion(scope: Scope, samples: int, seed: int, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """The alternating-sum basis change inverts exactly, and linearly."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        for d in pool:
            checked += 1
            total = algebra.zero(n, c)
            for sub in algebra.subdiagrams(d):
                total += algebra.x_of(sub)
            if total != algebra.from_diagram(d):
                witnesses.append(f"sum of x over subdiagrams of {format_diagram(d)} is not d")
            if algebra.to_x_coordinates(algebra.x_of(d)) != {d: Fraction(1)}:
                witnesses.append(f"x-coordinates of x_d differ from a unit vector at {format_diagram(d)}")
            expected = {sub: Fraction(1) for sub in algebra.subdiagrams(d)}
            if algebra.to_x_coordinates(algebra.from_diagram(d)) != expected:
                witnesses.append(f"x-coordinates of {format_diagram(d)} are not its subdiagram indicators")
    rng = random.Random(seed)
    n, c = scope
    pool = _pool(n, c, cap)
    for _ in range(samples):
        g1 = _random_element(rng, pool, n, c)
        g2 = _random_element(rng, pool, n, c)
        alpha = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        checked += 1
        left = algebra.to_x_coordinates(g1.scale(alpha) + g2)
        right: dict[Diagram, Fraction] = {}
        for d_key, q in algebra.to_x_coordinates(g1).items():
            right[d_key] = right.get(d_key, Fraction(0)) + alpha * q
        for d_key, q in algebra.to_x_coordinates(g2).items():
            right[d_key] = right.get(d_key, Fraction(0)) + q
        if left != {k: v for k, v in right.items() if v}:
            witnesses.append("x-coordinates are not linear on a sampled pair")
    return _result("algebra.x-basis-inversion", checked, witnesses)


def _action_mismatch_left(d: Diagram, a: Diagram) -> bool:
    expansion = algebra.from_diagram(d) * algebra.x_of(a)
    fast = algebra.left_action_x(d, a)
    expected = algebra.zero(d.n, d.c) if fast is None else algebra.x_of(fast)
    return expansion != expected


def _action_mismatch_right(a: Diagram, d: Diagram) -> bool:
    expansion = algebra.x_of(a) * algebra.from_diagram(d)
    fast = algebra.right_action_x(a, d)
    expected = algebra.zero(d.n, d.c) if fast is None else algebra.x_of(fast)
    return expansion != expected


def check_left_action(
    exhaustive: Scope, sampled: Scope, samples: int, seed: int, cap: int = DEFAULT_DIAGRAM_CAP
) -> CheckResult:
    """The containment fast path reproduces the full bilinear expansion."""
    witnesses = []
    checked = 0
    for n, c in _shapes(exhaustive):
        pool = _pool(n, c, cap)
        for d in pool:
            for a in pool:
                checked += 1
                if _action_mismatch_left(d, a):
                    witnesses.append(f"d={format_diagram(d)}, a={format_diagram(a)}")
    rng = random.Random(seed)
    n, c = sampled
    pool = _pool(n, c, cap)
    for _ in range(samples):
        d, a = rng.choice(pool), rng.choice(pool)
        checked += 1
        if _action_mismatch_left(d, a):
            witnesses.append(f"sampled d={format_diagram(d)}, a={format_diagram(a)}")
    return _result("algebra.x-action-left", checked, witnesses)


def check_right_action(
    exhaustive: Scope, sampled: Scope, samples: int, seed: int, cap: int = DEFAULT_DIAGRAM_CAP
) -> CheckResult:
    witnesses = []
    checked = 0
    for n, c in _shapes(exhaustive):
        pool = _pool(n, c, cap)
        for d in pool:
            for a in pool:
                checked += 1
                if _action_mismatch_right(a, d):
                    witnesses.append(f"a={format_diagram(a)}, d={format_diagram(d)}")
    rng = random.Random(seed)
    n, c = sampled
    pool = _pool(n, c, cap)
    for _ in range(samples):
        d, a = rng.choice(pool), rng.choice(pool)
        checked += 1
        if _action_mismatch_right(a, d):
            witnesses.append(f"sampled a={format_diagram(a)}, d={format_diagram(d)}")
    return _result("algebra.x-action-right", checked, witnesses)


def check_block_preservation(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """A nonzero left action fixes the bottom profile and the edge count."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        for d in pool:
            for a in pool:
                checked += 1
                image = algebra.left_action_x(d, a)
                if image is None:
                    continue
                if bottom_profile(image) != bottom_profile(a) or image.size != a.size:
                    witnesses.append(f"d={format_diagram(d)}, a={format_diagram(a)}")
    return _result("algebra.block-preservation", checked, witnesses)


def check_embed(scope: Scope, samples: int, seed: int, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Appending a unit column is a unital algebra homomorphism."""
    witnesses = []
    checked = 0
    rng = random.Random(seed)
    for n, c in _shapes(scope):
        checked += 1
        if algebra.embed(algebra.identity(n, c)) != algebra.identity(n + 1, c):
            witnesses.append(f"embedding does not preserve the unit at (n={n}, c={c})")
        pool = _pool(n, c, cap)
        for _ in range(max(1, samples // 10)):
            g1 = _random_element(rng, pool, n, c)
            g2 = _random_element(rng, pool, n, c)
            checked += 1
            if algebra.embed(g1 * g2) != algebra.embed(g1) * algebra.embed(g2):
                witnesses.append(f"embedding is not multiplicative at (n={n}, c={c})")
            if algebra.embed(g1) != g1.tensor(algebra.identity(1, c)):
                witnesses.append(f"embedding differs from tensoring the unit column at (n={n}, c={c})")
    return _result("algebra.embed-homomorphism", checked, witnesses)


# ---------------------------------------------------------------------------
# Module-level checks.

def check_rho_homomorphism(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Actions are unital on every module and multiplicative on class representatives."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        unit = algebra.identity(n, c)
        for profile in all_bottom_profiles(n, c):
            space = module_space(n, c, profile)
            checked += 1
            if action_matrix_elem(unit, space) != RationalMatrix.identity(space.dimension):
                witnesses.append(f"unit does not act as identity on bottom {profile.parts}")
        for label in all_labels(n, c):
            space = label_module(label)
            maps = {d: diagram_action(d, space) for d in pool}
            for d1 in pool:
                for d2 in pool:
                    checked += 1
                    if compose_column_maps(maps[d1], maps[d2]) != maps[multiply(d1, d2)]:
                        witnesses.append(
                            f"action of product differs from composed actions: "
                            f"{format_diagram(d1)}, {format_diagram(d2)} on {label.encode()}"
                        )
    return _result("modules.rho-homomorphism", checked, witnesses)


def check_column_structure(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Single-diagram action matrices have unit-or-zero columns."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        for label in all_labels(n, c):
            space = label_module(label)
            for d in _pool(n, c, cap):
                checked += 1
                matrix = action_matrix(d, space)
                for j in range(space.dimension):
                    column = [matrix.rows[i][j] for i in range(space.dimension)]
                    nonzero = [v for v in column if v]
                    if len(nonzero) > 1 or any(v != 1 for v in nonzero):
                        witnesses.append(f"{format_diagram(d)} on {label.encode()} column {j}")
    return _result("modules.column-structure", checked, witnesses)


def check_character(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Closed form equals trace; traces see only vertical edges, via their counts."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        labels = all_labels(n, c)
        spaces = [label_module(label) for label in labels]
        traces = {d: tuple(action_trace(d, space) for space in spaces) for d in pool}
        by_verticals: dict[tuple[int, ...], tuple[int, ...]] = {}
        for d in pool:
            row = traces[d]
            for label, value in zip(labels, row):
                checked += 1
                if representations.character(d, label) != value:
                    witnesses.append(f"character of {format_diagram(d)} at {label.encode()}")
            if traces[vertical_subdiagram(d)] != row:
                witnesses.append(f"trace of {format_diagram(d)} changes when non-vertical edges drop")
            key = vertical_color_counts(d)
            if by_verticals.setdefault(key, row) != row:
                witnesses.append(f"trace of {format_diagram(d)} disagrees within vertical class {key}")
    return _result("modules.character-trace", checked, witnesses)


def check_multiplicity_count(scope: Scope) -> CheckResult:
    """Each class label is realized by multinomially many bottom profiles."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        for label in all_labels(n, c):
            checked += 1
            count = sum(1 for _ in profiles_with_sizes(n, c, label.sizes))
            if count != multinomial(label.sizes):
                witnesses.append(f"label {label.encode()}: {count} profiles")
    return _result("modules.multiplicity-count", checked, witnesses)


def check_irreducibility(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Single-profile modules are irreducible; mixed-profile spans are not."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        for profile in all_bottom_profiles(n, c):
            checked += 1
            outcome = verify_irreducible(module_space(n, c, profile), cap)
            if not outcome:
                witnesses.append(f"module at bottom {profile.parts}: {outcome.failures[:1]}")
        if n >= 2:
            for k in range(1, n + 1):
                span = fixed_size_span(n, c, k, cap)
                # Reducible exactly when the span mixes bottom profiles (for
                # c = 1, k = n the identity matching is alone and the span is
                # a one-dimensional module).
                mixed = len({bottom_profile(a) for a in span.basis}) > 1
                checked += 1
                if bool(verify_irreducible(span, cap)) == mixed:
                    witnesses.append(
                        f"span of all size-{k} vectors at (n={n}, c={c}) has the wrong reducibility"
                    )
    return _result("modules.irreducibility", checked, witnesses)


def check_isomorphism_classification(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Isomorphism holds iff part sizes match, and every witness validates."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        pool = _pool(n, c, cap)
        profiles = list(all_bottom_profiles(n, c))
        spaces = {p: module_space(n, c, p) for p in profiles}
        maps = {
            p: {d: diagram_action(d, spaces[p]) for d in pool} for p in profiles
        }
        for p1 in profiles:
            for p2 in profiles:
                checked += 1
                result = are_isomorphic(spaces[p1], spaces[p2])
                if result.isomorphic != (p1.sizes == p2.sizes):
                    witnesses.append(f"classification differs from size criterion: {p1.parts} vs {p2.parts}")
                    continue
                if result.isomorphic:
                    d = result.intertwiner
                    phi = [spaces[p2].index_of(multiply(a, d)) for a in spaces[p1].basis]
                    if sorted(phi) != list(range(len(phi))):
                        witnesses.append(f"intertwiner is not a bijection: {p1.parts} vs {p2.parts}")
                        continue
                    for g in pool:
                        act1, act2 = maps[p1][g], maps[p2][g]
                        if any(
                            (None if act1[i] is None else phi[act1[i]]) != act2[phi[i]]
                            for i in range(len(phi))
                        ):
                            witnesses.append(
                                f"intertwiner does not commute with {format_diagram(g)}: "
                                f"{p1.parts} vs {p2.parts}"
                            )
                            break
                else:
                    d = result.distinguisher
                    live, dead = (p1, p2) if result.annihilated == 2 else (p2, p1)
                    if all(i is None for i in maps[live][d]):
                        witnesses.append(f"distinguisher acts as zero on both: {p1.parts} vs {p2.parts}")
                    if any(i is not None for i in maps[dead][d]):
                        witnesses.append(f"distinguisher does not annihilate: {p1.parts} vs {p2.parts}")
    return _result("modules.isomorphism-classification", checked, witnesses)


def check_matrix_algebra(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        for label in all_labels(n, c):
            checked += 1
            outcome = verify_matrix_algebra(n, c, label, cap=cap)
            if not outcome:
                witnesses.append(f"label {label.encode()} at (n={n}, c={c}): {outcome.failures[:1]}")
    return _result("modules.matrix-algebra", checked, witnesses)


def check_regular_decomposition(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Multiplicity-weighted dimensions exhaust the algebra, block by block."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        checked += 1
        decomposition = regular_decomposition(n, c)
        total = sum(mult * label.dimension() for label, mult in decomposition)
        if total != cardinality(n, c):
            witnesses.append(f"(n={n}, c={c}): multiplicities sum to {total}")
        outcome = verify_regular_decomposition(n, c, cap)
        if not outcome:
            witnesses.append(f"(n={n}, c={c}): {outcome.failures[:1]}")
    return _result("modules.regular-decomposition", checked, witnesses)


def check_restriction(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Column-drop restriction: invariance, intertwining, dimensions, block shape."""
    witnesses = []
    checked = 0
    for n, c in _shapes(scope):
        if n < 1:
            continue
        smaller = _pool(n - 1, c, cap)
        for profile in all_bottom_profiles(n, c):
            space = module_space(n, c, profile)
            checked += 1
            outcome = verify_restriction(space, cap)
            if not outcome:
                witnesses.append(f"bottom {profile.parts}: {outcome.failures[:1]}")
            adapted, block_sizes = restriction_adapted_space(space)
            for d in smaller:
                embedded = algebra.embed(algebra.from_diagram(d))
                if not action_matrix_elem(embedded, adapted).is_block_diagonal(block_sizes):
                    witnesses.append(
                        f"embedded {format_diagram(d)} is not block diagonal on bottom {profile.parts}"
                    )
                    break
    return _result("modules.restriction-blocks", checked, witnesses)


# ---------------------------------------------------------------------------
# Tower checks.

def check_tower_levels(scope: Scope) -> CheckResult:
    witnesses = []
    checked = 0
    n_max, c_max = scope
    for c in range(1, c_max + 1):
        graph = bratteli.build(c, n_max)
        for n in range(n_max + 1):
            checked += 1
            if len(graph.level(n)) != bratteli.vertex_count(n, c):
                witnesses.append(f"level {n} at c={c} has {len(graph.level(n))} vertices")
    return _result("bratteli.level-sizes", checked, witnesses)


def check_tower_degrees(scope: Scope) -> CheckResult:
    """Down-degree histograms match the closed-form adjacency counts."""
    witnesses = []
    checked = 0
    n_max, c_max = scope
    for c in range(1, c_max + 1):
        graph = bratteli.build(c, n_max)
        for n in range(1, n_max + 1):
            histogram = bratteli.down_degree_histogram(graph, n)
            for x in range(1, c + 2):
                checked += 1
                if histogram.get(x, 0) != bratteli.adjacency_count(n, c, x):
                    witnesses.append(f"c={c}, level {n}, degree {x}")
            if sum(histogram.values()) != bratteli.vertex_count(n, c):
                witnesses.append(f"c={c}, level {n}: histogram does not cover the level")
    return _result("bratteli.degree-histogram", checked, witnesses)


def check_tower_recursion(scope: Scope) -> CheckResult:
    witnesses = []
    checked = 0
    n_max, c_max = scope
    for c in range(1, c_max + 1):
        outcome = bratteli.verify_multinomial_recursion(bratteli.build(c, n_max))
        checked += outcome.checked
        if not outcome:
            witnesses.append(f"c={c}: {outcome.failures[:1]}")
    return _result("bratteli.recursion", checked, witnesses)


def check_tower_restriction_consistency(scope: Scope, cap: int = DEFAULT_DIAGRAM_CAP) -> CheckResult:
    """Componentwise tower edges agree with the module-level restriction."""
    witnesses = []
    checked = 0
    n_max, c_max = scope
    for c in range(1, c_max + 1):
        graph = bratteli.build(c, n_max)
        for n in range(1, n_max + 1):
            ensure_within_cap(n - 1, c, cap)
            for idx, label in enumerate(graph.level(n)):
                checked += 1
                from_graph = {graph.level(n - 1)[i] for i in graph.children_of(n, idx)}
                from_modules = set(restriction_decomposition(label_module(label)))
                if from_graph != from_modules:
                    witnesses.append(f"c={c}, label {label.encode()}")
    return _result("bratteli.restriction-consistency", checked, witnesses)


def check_pascal_triangle(n_max: int) -> CheckResult:
    """The one-color tower is Pascal's triangle with the binomial recursion."""
    witnesses = []
    checked = 0
    graph = bratteli.build(1, n_max)
    for n in range(n_max + 1):
        checked += 1
        if len(graph.level(n)) != n + 1:
            witnesses.append(f"level {n} is not a triangle row")
        dims = [label.dimension() for label in graph.level(n)]
        expected = [math.comb(n, k) for k in range(n + 1)]
        if dims != expected:
            witnesses.append(f"level {n} dimensions are not binomials")
        if n >= 1:
            for idx, label in enumerate(graph.level(n)):
                child_sum = sum(
                    graph.level(n - 1)[i].dimension() for i in graph.children_of(n, idx)
                )
                checked += 1
                if child_sum != label.dimension():
                    witnesses.append(f"binomial recursion fails at level {n}, index {idx}")
    return _result("bratteli.pascal-triangle", checked, witnesses)


# ---------------------------------------------------------------------------
# The full suite.

def run_verification(config: VerifyConfig = VerifyConfig()) -> list[CheckResult]:
    """Run every check, exhaustive ranges clipped to the configured caps."""

    def clip(n_max: int, c_max: int) -> Scope:
        return (min(n_max, config.n_cap), min(c_max, config.c_cap))

    cap = config.diagram_cap
    samples = config.samples
    seed = config.seed
    results = [
        check_enumeration_count(clip(5, 3), cap),
        check_associativity(clip(2, 2), clip(4, 3), samples, seed, cap),
        check_rook_closure(clip(3, 2), cap),
        check_planarity_closure(clip(3, 2), cap),
        check_size_monotonicity(clip(3, 2), cap),
        check_profile_roundtrip(clip(4, 2), cap),
        check_matrix_semantics(clip(3, 2), cap),
        check_identity_unit(clip(4, 3), cap),
        check_x_inversion(clip(3, 2), samples, seed, cap),
        check_left_action(clip(2, 2), clip(3, 2), samples, seed, cap),
        check_right_action(clip(2, 2), clip(3, 2), samples, seed, cap),
        check_block_preservation(clip(3, 2), cap),
        check_embed(clip(2, 2), samples, seed, cap),
        check_rho_homomorphism(clip(3, 2), cap),
        check_column_structure(clip(3, 2), cap),
        check_character(clip(4, 2), cap),
        check_multiplicity_count(clip(4, 2)),
        check_irreducibility(clip(3, 2), cap),
        check_isomorphism_classification(clip(3, 2), cap),
        check_matrix_algebra(clip(2, 2), cap),
        check_regular_decomposition(clip(3, 2), cap),
        check_restriction(clip(3, 2), cap),
        check_tower_levels(clip(6, 4)),
        check_tower_degrees(clip(6, 4)),
        check_tower_recursion(clip(12, 4)),
        check_tower_restriction_consistency(clip(4, 2), cap),
        check_pascal_triangle(config.n_cap),
    ]
    results.sort(key=lambda r: r.name)
    return results
