"""Colored planar rook diagrams and their semigroup arithmetic.

A diagram on two rows of ``n`` vertices connects top vertices to bottom
vertices by edges carrying one of ``c`` colors, with at most one edge
incident to each vertex (the rook condition).  A diagram is *planar* when
no two edges of the *same* color cross; differently colored edges may cross
freely.  Planar diagrams are closed under the path-composition product and
are determined uniquely by their two row profiles: the partition of each
row into the isolated vertices and the per-color edge endpoints.

Everything here is immutable and exact; enumeration orders are fixed so
that all higher layers (algebra, modules, towers) are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

#: Refuse exhaustive sweeps over monoids larger than this many diagrams.
DEFAULT_DIAGRAM_CAP = 10**6

Edge = tuple[int, int, int]


class InvalidDiagramError(ValueError):
    """An edge list violates the rook, range, or color constraints."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


class MismatchError(ValueError):
    """Operands disagree on vertex count or color count."""


class NonPlanarError(ValueError):
    """A representation-theoretic operation received a non-planar diagram."""


class CapExceededError(RuntimeError):
    """An exhaustive sweep would exceed the configured diagram cap."""


class ParseError(ValueError):
    """A diagram literal failed to parse; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _canonical_edges(n: int, c: int, edges: Iterable[Edge]) -> tuple[Edge, ...]:
    seen_top: dict[int, Edge] = {}
    seen_bottom: dict[int, Edge] = {}
    out = []
    for edge in edges:
        try:
            top, bottom, color = edge
        except (TypeError, ValueError):
            raise InvalidDiagramError("edge-shape", f"edge {edge!r} is not a (top, bottom, color) triple")
        if not (1 <= top <= n and 1 <= bottom <= n):
            raise InvalidDiagramError("vertex-range", f"edge {edge!r}: vertex index out of range 1..{n}")
        if not 1 <= color <= c:
            raise InvalidDiagramError("color-range", f"edge {edge!r}: color out of range 1..{c}")
        if top in seen_top:
            raise InvalidDiagramError(
                "duplicate-top", f"duplicate top index {top}: edges {seen_top[top]!r} and {edge!r}"
            )
        if bottom in seen_bottom:
            raise InvalidDiagramError(
                "duplicate-bottom", f"duplicate bottom index {bottom}: edges {seen_bottom[bottom]!r} and {edge!r}"
            )
        seen_top[top] = edge
        seen_bottom[bottom] = edge
        out.append((int(top), int(bottom), int(color)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Diagram:
    """A c-colored rook diagram on two rows of ``n`` vertices.

    Edges are stored canonically, sorted by top index, so equality, hashing
    and serialization are deterministic.  Vertices are 1-based, colors run
    1..c; an absent edge is simply absent (there is no color 0).
    """

    n: int
    c: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidDiagramError("vertex-range", f"n must be non-negative, got {self.n}")
        if self.c < 1:
            raise InvalidDiagramError("color-range", f"c must be positive, got {self.c}")
        object.__setattr__(self, "edges", _canonical_edges(self.n, self.c, self.edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def __mul__(self, other: "Diagram") -> "Diagram":
        return multiply(self, other)

    def __matmul__(self, other: "Diagram") -> "Diagram":
        return tensor(self, other)

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True)
class Profile:
    """A partition of one row's vertices into isolated and per-color parts.

    ``parts[0]`` holds the isolated vertices, ``parts[k]`` the endpoints of
    color-k edges.  Parts are disjoint and together cover {1..n}.
    """

    n: int
    c: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts)
        if len(parts) != self.c + 1:
            raise ValueError(f"expected {self.c + 1} parts, got {len(parts)}")
        seen: set[int] = set()
        for part in parts:
            for v in part:
                if not 1 <= v <= self.n:
                    raise ValueError(f"vertex {v} out of range 1..{self.n}")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two parts")
                seen.add(v)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise ValueError(f"parts do not cover vertices {missing}")
        object.__setattr__(self, "parts", parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


# ---------------------------------------------------------------------------
# Cached per-diagram lookups.  Diagrams are immutable, so unbounded caches
# are safe; they stay small because everything here runs at desk scale.

@lru_cache(maxsize=None)
def top_colors(d: Diagram) -> dict[int, int]:
    """Map top vertex -> color of its incident edge."""
    return {t: k for (t, _, k) in d.edges}


@lru_cache(maxsize=None)
def bottom_colors(d: Diagram) -> dict[int, int]:
    """Map bottom vertex -> color of its incident edge."""
    return {b: k for (_, b, k) in d.edges}


@lru_cache(maxsize=None)
def _edges_from_top(d: Diagram) -> dict[int, tuple[int, int]]:
    return {t: (b, k) for (t, b, k) in d.edges}


@lru_cache(maxsize=None)
def is_planar(d: Diagram) -> bool:
    """True iff no two edges of the same color cross.

    Two same-colored edges (t1, b1), (t2, b2) cross exactly when
    (t1 - t2) * (b1 - b2) < 0; different colors never conflict.
    """
    by_color: dict[int, list[int]] = {}
    for t, b, k in d.edges:  # edges are sorted by top index
        by_color.setdefault(k, []).append(b)
    return all(
        all(x < y for x, y in zip(bottoms, bottoms[1:]))
        for bottoms in by_color.values()
    )


@lru_cache(maxsize=None)
def top_profile(d: Diagram) -> Profile:
    """Partition of the top row: isolated vertices, then color-k endpoints."""
    parts: list[list[int]] = [[] for _ in range(d.c + 1)]
    used = set()
    for t, _, k in d.edges:
        parts[k].append(t)
        used.add(t)
    parts[0] = [v for v in range(1, d.n + 1) if v not in used]
    return Profile(d.n, d.c, tuple(tuple(p) for p in parts))


@lru_cache(maxsize=None)
def bottom_profile(d: Diagram) -> Profile:
    """Partition of the bottom row: isolated vertices, then color-k endpoints."""
    parts: list[list[int]] = [[] for _ in range(d.c + 1)]
    used = set()
    for _, b, k in d.edges:
        parts[k].append(b)
        used.add(b)
    parts[0] = [v for v in range(1, d.n + 1) if v not in used]
    return Profile(d.n, d.c, tuple(tuple(sorted(p)) for p in parts))


def _require_same_shape(d1: Diagram, d2: Diagram) -> None:
    if d1.n != d2.n:
        raise MismatchError(f"vertex counts differ: {d1.n} vs {d2.n}")
    if d1.c != d2.c:
        raise MismatchError(f"color counts differ: {d1.c} vs {d2.c}")


def multiply(d1: Diagram, d2: Diagram) -> Diagram:
    """Compose diagrams: keep the monochromatic top-of-d1 to bottom-of-d2 paths.

    Stacking d1 over d2 and fusing the middle rows, an edge (t, b, k)
    survives exactly when d1 carries (t, m, k) and d2 carries (m, b, k) for
    some middle vertex m.  This is matrix multiplication over the entry
    semantics u_i * u_j = u_i if i == j else 0.
    """
    _require_same_shape(d1, d2)
    lower = _edges_from_top(d2)
    edges = []
    for t, m, k in d1.edges:
        hit = lower.get(m)
        if hit is not None and hit[1] == k:
            edges.append((t, hit[0], k))
    product = Diagram(d1.n, d1.c, tuple(edges))
    if is_planar(d1) and is_planar(d2):
        assert is_planar(product), "product of planar diagrams must be planar"
    return product


def tensor(d1: Diagram, d2: Diagram) -> Diagram:
    """Concatenate ``d2`` to the right of ``d1``, shifting its indices."""
    if d1.c != d2.c:
        raise MismatchError(f"color counts differ: {d1.c} vs {d2.c}")
    shifted = tuple((t + d1.n, b + d1.n, k) for (t, b, k) in d2.edges)
    return Diagram(d1.n + d2.n, d1.c, d1.edges + shifted)


def vertical_subdiagram(d: Diagram) -> Diagram:
    """Keep exactly the edges whose top and bottom indices coincide."""
    return Diagram(d.n, d.c, tuple(e for e in d.edges if e[0] == e[1]))


def vertical_color_counts(d: Diagram) -> tuple[int, ...]:
    """Number of vertical edges of each color, as a length-c tuple."""
    counts = [0] * d.c
    for t, b, k in d.edges:
        if t == b:
            counts[k - 1] += 1
    return tuple(counts)


def vertical_diagram(n: int, counts: tuple[int, ...]) -> Diagram:
    """The leftmost-packed diagram with the given vertical color counts."""
    if sum(counts) > n:
        raise ValueError(f"{sum(counts)} vertical edges do not fit in n={n}")
    edges = []
    v = 1
    for color, cnt in enumerate(counts, start=1):
        for _ in range(cnt):
            edges.append((v, v, color))
            v += 1
    return Diagram(n, len(counts), tuple(edges))


def from_profiles(top: Profile, bottom: Profile) -> Diagram:
    """The unique planar diagram with the given top and bottom profiles.

    For each color the r-th smallest top endpoint joins the r-th smallest
    bottom endpoint; this is the only same-color non-crossing matching.
    """
    if top.n != bottom.n or top.c != bottom.c:
        raise MismatchError("profiles have different (n, c)")
    edges = []
    for k in range(1, top.c + 1):
        if len(top.parts[k]) != len(bottom.parts[k]):
            raise MismatchError(
                f"color {k}: {len(top.parts[k])} top endpoints vs {len(bottom.parts[k])} bottom endpoints"
            )
        edges.extend((t, b, k) for t, b in zip(top.parts[k], bottom.parts[k]))
    result = Diagram(top.n, top.c, tuple(edges))
    assert is_planar(result), "increasing matchings cannot cross"
    return result


# ---------------------------------------------------------------------------
# Enumeration.  Compositions come in colex order, profiles in lexicographic
# order on their sorted part contents; the nesting below realizes exactly
# the (composition, top profile, bottom profile) order used everywhere.

def compositions(n: int, c: int) -> Iterator[tuple[int, ...]]:
    """All (c+1)-part compositions of n, in colex order."""
    if c == 0:
        yield (n,)
        return
    for last in range(n + 1):
        for head in compositions(n - last, c - 1):
            yield head + (last,)


def multinomial(parts: Iterable[int]) -> int:
    """Exact multinomial coefficient of the composition ``parts``."""
    total, out = 0, 1
    for p in parts:
        total += p
        out *= math.comb(total, p)
    return out


def profiles_with_sizes(n: int, c: int, sizes: tuple[int, ...]) -> Iterator[Profile]:
    """All profiles with the given part sizes, in lexicographic order."""
    if len(sizes) != c + 1 or sum(sizes) != n:
        raise ValueError(f"sizes {sizes} is not a (c+1)-part composition of {n}")

    def rec(remaining: tuple[int, ...], left: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not left:
            yield ()
            return
        for part in combinations(remaining, left[0]):
            chosen = set(part)
            rest = tuple(v for v in remaining if v not in chosen)
            for tail in rec(rest, left[1:]):
                yield (part,) + tail

    for parts in rec(tuple(range(1, n + 1)), tuple(sizes)):
        yield Profile(n, c, parts)


def sorted_profile(n: int, sizes: tuple[int, ...]) -> Profile:
    """The canonical profile with consecutive blocks: part 0 first, then part 1, ..."""
    parts = []
    start = 1
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    return Profile(n, len(sizes) - 1, tuple(parts))


def enumerate_planar(n: int, c: int) -> Iterator[Diagram]:
    """Yield every planar diagram exactly once, in the canonical order."""
    for sizes in compositions(n, c):
        tops = list(profiles_with_sizes(n, c, sizes))
        for top in tops:
            for bottom in profiles_with_sizes(n, c, sizes):
                yield from_profiles(top, bottom)


def cardinality(n: int, c: int) -> int:
    """Number of planar diagrams: the sum of squared multinomials."""
    return sum(multinomial(sizes) ** 2 for sizes in compositions(n, c))


def ensure_within_cap(n: int, c: int, cap: int = DEFAULT_DIAGRAM_CAP) -> int:
    """Guard exhaustive sweeps; returns the monoid size if acceptable."""
    count = cardinality(n, c)
    if count > cap:
        raise CapExceededError(f"|P_{{{n},{c}}}| = {count} exceeds the cap of {cap}")
    return count


def diagram_sort_key(d: Diagram):
    """Sort key realizing the canonical enumeration order."""
    t = top_profile(d)
    b = bottom_profile(d)
    return (tuple(reversed(t.sizes)), t.parts, b.parts)


# ---------------------------------------------------------------------------
# Text grammar: `n=<int> c=<int> [<top>-<bottom>:<color>, ...]`, whitespace
# insensitive, mutually inverse with format_diagram on canonical forms.

def format_diagram(d: Diagram) -> str:
    body = ", ".join(f"{t}-{b}:{k}" for (t, b, k) in d.edges)
    return f"n={d.n} c={d.c} [{body}]"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise ParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def done(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected trailing input {self.text[self.pos:]!r}", self.pos)


def parse_diagram(text: str) -> Diagram:
    """Parse a diagram literal such as ``n=3 c=2 [1-2:1, 3-1:2]``."""
    s = _Scanner(text)
    s.expect("n=")
    n = s.integer()
    s.expect("c=")
    c = s.integer()
    s.expect("[")
    edges = []
    if not s.peek("]"):
        while True:
            t = s.integer()
            s.expect("-")
            b = s.integer()
            s.expect(":")
            k = s.integer()
            edges.append((t, b, k))
            if s.peek("]"):
                break
            s.expect(",")
    s.expect("]")
    s.done()
    return Diagram(n, c, tuple(edges))


# ---------------------------------------------------------------------------
# Matrix view: entry 0 means no edge, entry k means an edge of color k from
# top (row) i to bottom (column) j.

def to_matrix(d: Diagram) -> tuple[tuple[int, ...], ...]:
    rows = [[0] * d.n for _ in range(d.n)]
    for t, b, k in d.edges:
        rows[t - 1][b - 1] = k
    return tuple(tuple(r) for r in rows)


def from_matrix(c: int, rows: Iterable[Iterable[int]]) -> Diagram:
    rows = [tuple(r) for r in rows]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    edges = []
    for i, row in enumerate(rows, start=1):
        for j, entry in enumerate(row, start=1):
            if entry:
                edges.append((i, j, entry))
    return Diagram(n, c, tuple(edges))


def format_matrix(d: Diagram) -> str:
    lines = []
    for row in to_matrix(d):
        lines.append(" ".join("0" if e == 0 else f"u{e}" for e in row))
    return "\n".join(lines)
