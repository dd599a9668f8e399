"""Exact linear combinations of planar diagrams.

Elements are finite formal sums of planar diagrams with rational
coefficients; the diagram product extends bilinearly.  Coefficients are
``fractions.Fraction`` values throughout and floats are rejected, so every
identity the verification suite checks is bit-exact.

The alternating-sum basis ``x_d = sum over subdiagrams d' of d of
(-1)^(size d - size d') d'`` turns left and right multiplication by a
diagram into unit-or-zero maps; the fast-path predicates below decide those
actions without expanding, while ``x_of`` provides the full expansion used
as the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from typing import Iterator, Mapping, Optional

from .diagrams import (
    Diagram,
    MismatchError,
    NonPlanarError,
    Profile,
    bottom_colors,
    bottom_profile,
    diagram_sort_key,
    format_diagram,
    from_profiles,
    is_planar,
    multiply,
    tensor,
    top_colors,
    top_profile,
)

Rational = Fraction | int


def _coeff(value: Rational) -> Fraction:
    if isinstance(value, float):
        raise TypeError("coefficients must be exact rationals, not floats")
    return Fraction(value)


@dataclass(frozen=True)
class AlgebraElement:
    """A formal rational combination of planar diagrams of one shape (n, c).

    ``terms`` maps canonical diagrams to nonzero coefficients; the zero
    element is the empty map (distinct from the empty *diagram*, which is a
    basis element with its own coefficient).
    """

    n: int
    c: int
    terms: Mapping[Diagram, Fraction]

    def __post_init__(self):
        clean = {}
        for d, coeff in self.terms.items():
            q = _coeff(coeff)
            if q == 0:
                continue
            if d.n != self.n or d.c != self.c:
                raise MismatchError(f"term {format_diagram(d)} does not live in (n={self.n}, c={self.c})")
            if not is_planar(d):
                raise NonPlanarError(f"term {format_diagram(d)} is not planar")
            clean[d] = q
        object.__setattr__(self, "terms", clean)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int, c: int) -> "AlgebraElement":
        return AlgebraElement(n, c, {})

    @staticmethod
    def from_diagram(d: Diagram, coeff: Rational = 1) -> "AlgebraElement":
        return AlgebraElement(d.n, d.c, {d: _coeff(coeff)})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: Diagram) -> Fraction:
        return self.terms.get(d, Fraction(0))

    def support(self) -> tuple[Diagram, ...]:
        return tuple(sorted(self.terms, key=diagram_sort_key))

    # -- arithmetic ----------------------------------------------------------

    def _require_compatible(self, other: "AlgebraElement") -> None:
        if self.n != other.n or self.c != other.c:
            raise MismatchError(
                f"elements live in different algebras: (n={self.n}, c={self.c}) vs (n={other.n}, c={other.c})"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._require_compatible(other)
        terms = dict(self.terms)
        for d, q in other.terms.items():
            terms[d] = terms.get(d, Fraction(0)) + q
        return AlgebraElement(self.n, self.c, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, self.c, {d: -q for d, q in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, scalar: Rational) -> "AlgebraElement":
        q = _coeff(scalar)
        return AlgebraElement(self.n, self.c, {d: q * v for d, v in self.terms.items()})

    def __rmul__(self, scalar: Rational) -> "AlgebraElement":
        return self.scale(scalar)

    def __mul__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._require_compatible(other)
        terms: dict[Diagram, Fraction] = {}
        for d1, q1 in self.terms.items():
            for d2, q2 in other.terms.items():
                prod = multiply(d1, d2)
                terms[prod] = terms.get(prod, Fraction(0)) + q1 * q2
        return AlgebraElement(self.n, self.c, terms)

    def tensor(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.c != other.c:
            raise MismatchError(f"color counts differ: {self.c} vs {other.c}")
        terms: dict[Diagram, Fraction] = {}
        for d1, q1 in self.terms.items():
            for d2, q2 in other.terms.items():
                prod = tensor(d1, d2)
                terms[prod] = terms.get(prod, Fraction(0)) + q1 * q2
        return AlgebraElement(self.n + other.n, self.c, terms)

    def __str__(self) -> str:
        return format_element(self)


def zero(n: int, c: int) -> AlgebraElement:
    return AlgebraElement.zero(n, c)


def from_diagram(d: Diagram, coeff: Rational = 1) -> AlgebraElement:
    return AlgebraElement.from_diagram(d, coeff)


def unit_diagram(c: int, color: int) -> Diagram:
    """The width-1 diagram with one vertical edge of ``color`` (0 = no edge)."""
    if color == 0:
        return Diagram(1, c, ())
    return Diagram(1, c, ((1, 1, color),))


def identity(n: int, c: int) -> AlgebraElement:
    """The unit of the width-n algebra.

    For one column the unit is (sum of all single vertical edges) minus
    (c - 1) times the isolated pair; the width-n unit is its n-fold
    concatenation power.
    """
    if n == 0:
        return from_diagram(Diagram(0, c, ()))
    e1 = AlgebraElement(1, c, {unit_diagram(c, i): Fraction(1) for i in range(1, c + 1)})
    e1 += from_diagram(unit_diagram(c, 0), -(c - 1))
    return reduce(lambda acc, _: acc.tensor(e1), range(n - 1), e1)


# ---------------------------------------------------------------------------
# The x-basis.

def subdiagrams(d: Diagram) -> Iterator[Diagram]:
    """All diagrams obtained by deleting edges of ``d`` (including d itself)."""
    for r in range(d.size + 1):
        for chosen in combinations(d.edges, r):
            yield Diagram(d.n, d.c, chosen)


def x_of(d: Diagram) -> AlgebraElement:
    """Expand the alternating-sum basis element labeled by ``d``."""
    if not is_planar(d):
        raise NonPlanarError(f"{format_diagram(d)} is not planar")
    k = d.size
    terms = {sub: Fraction(-1 if (k - sub.size) % 2 else 1) for sub in subdiagrams(d)}
    return AlgebraElement(d.n, d.c, terms)


def to_x_coordinates(g: AlgebraElement) -> dict[Diagram, Fraction]:
    """Coordinates of ``g`` in the x-basis.

    Inverting the alternating sum is summation over the subdiagram order:
    the x-coordinate at ``a`` is the sum of the diagram coefficients of all
    supports containing ``a``.
    """
    coords: dict[Diagram, Fraction] = {}
    for d, coeff in g.terms.items():
        for sub in subdiagrams(d):
            coords[sub] = coords.get(sub, Fraction(0)) + coeff
    return {a: q for a, q in coords.items() if q}


def from_x_coordinates(n: int, c: int, coords: Mapping[Diagram, Rational]) -> AlgebraElement:
    """Assemble the element with the given x-basis coordinates."""
    out = zero(n, c)
    for a, q in coords.items():
        out += x_of(a).scale(q)
    return out


def left_action_x(d: Diagram, a: Diagram) -> Optional[Diagram]:
    """Left action of a diagram on an x-basis vector, decided without expanding.

    ``d * x_a`` equals ``x_(d a)`` when, for every color, the top endpoints
    of ``a`` sit among the bottom endpoints of ``d`` of the same color
    (isolated vertices are unconstrained); otherwise the action is zero and
    None is returned.
    """
    _require_planar_pair(d, a)
    below = bottom_colors(d)
    if all(below.get(t) == k for (t, _, k) in a.edges):
        return multiply(d, a)
    return None


def right_action_x(a: Diagram, d: Diagram) -> Optional[Diagram]:
    """Right action mirror of :func:`left_action_x`: ``x_a * d``."""
    _require_planar_pair(d, a)
    above = top_colors(d)
    if all(above.get(b) == k for (_, b, k) in a.edges):
        return multiply(a, d)
    return None


def _require_planar_pair(d: Diagram, a: Diagram) -> None:
    if d.n != a.n or d.c != a.c:
        raise MismatchError("diagrams live in different monoids")
    if not is_planar(d) or not is_planar(a):
        raise NonPlanarError("x-basis actions are defined for planar diagrams only")


def x_pair_product(
    s: Profile, t: Profile, u: Profile, v: Profile
) -> Optional[tuple[Profile, Profile]]:
    """Product of two profile-pair x-elements: (S,T) * (U,V).

    Profile-pair elements multiply like elementary matrices: the product is
    (S, V) when T equals U and zero (None) otherwise.
    """
    for left, right, who in ((s, t, "first"), (u, v, "second")):
        if left.n != right.n or left.c != right.c:
            raise MismatchError(f"{who} profile pair has mismatched (n, c)")
        if left.sizes != right.sizes:
            raise ValueError(f"{who} profile pair has part sizes {left.sizes} vs {right.sizes}")
    if s.n != u.n or s.c != u.c:
        raise MismatchError("profile pairs live in different monoids")
    if t == u:
        return (s, v)
    return None


def x_pair_diagram(s: Profile, t: Profile) -> Diagram:
    """The diagram labeling the profile-pair x-element (S, T)."""
    return from_profiles(s, t)


def embed(g: AlgebraElement) -> AlgebraElement:
    """Unital embedding of a width-(n-1) element into width n.

    Appends one column in every possible state: the sum of g concatenated
    with each single vertical edge, minus (c - 1) times g concatenated with
    an isolated pair.  Equivalently, g tensored with the width-1 unit.
    """
    c = g.c
    out = zero(g.n + 1, c)
    for i in range(1, c + 1):
        out += g.tensor(from_diagram(unit_diagram(c, i)))
    out += g.tensor(from_diagram(unit_diagram(c, 0))).scale(-(c - 1))
    return out


def format_element(g: AlgebraElement) -> str:
    """Render ``<rational> * <diagram-literal> + ...`` in enumeration order."""
    if g.is_zero:
        return "0"
    return " + ".join(f"{g.terms[d]} * {format_diagram(d)}" for d in g.support())
