from fractions import Fraction
from functools import lru_cache

from hypothesis import strategies as st

from planar_rook.algebra import AlgebraElement
from planar_rook.diagrams import enumerate_planar


@lru_cache(maxsize=None)
def pool(n: int, c: int):
    return tuple(enumerate_planar(n, c))


def diagrams_st(n: int, c: int):
    return st.sampled_from(pool(n, c))


def coefficients_st():
    return st.fractions(min_value=-5, max_value=5, max_denominator=4)


def elements_st(n: int, c: int, max_terms: int = 3):
    def build(pairs):
        terms = {}
        for d, q in pairs:
            terms[d] = terms.get(d, Fraction(0)) + q
        return AlgebraElement(n, c, terms)

    return st.lists(
        st.tuples(diagrams_st(n, c), coefficients_st()), min_size=0, max_size=max_terms
    ).map(build)
