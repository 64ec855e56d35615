import math
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from sympy import Matrix, Poly, Symbol, ZZ, cyclotomic_poly, divisors, expand, resultant
from sympy.polys.matrices import DomainMatrix

from . import errors
from ._braid import BraidLetter, BraidWord

t = Symbol('t')
_RING = ZZ[t]


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in t, stored as sorted (exponent, coefficient) pairs without zeros"""
    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, coefficients: Dict[int, int]) -> 'LaurentPoly':
        return cls(tuple(sorted((int(e), int(c)) for e, c in coefficients.items() if c != 0)))

    @classmethod
    def from_poly(cls, poly: Poly, shift: int = 0) -> 'LaurentPoly':
        """Laurent polynomial t^shift * poly"""
        return cls.from_mapping({monom[0] + shift: int(c) for monom, c in poly.terms()})

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self.terms)

    def to_sympy(self):
        return sum((c * t ** e for e, c in self.terms), 0)

    def to_poly(self) -> Poly:
        """Polynomial obtained by clearing the lowest power of t"""
        if not self.terms:
            return Poly(0, t)

        low = self.terms[0][0]
        return Poly(sum((c * t ** (e - low) for e, c in self.terms), 0), t)

    def evaluate_at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return '0'

        text = ''
        for exponent, coefficient in reversed(self.terms):
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                monomial = 't' if exponent == 1 else f't^{exponent}'
                body = monomial if abs(coefficient) == 1 else f'{abs(coefficient)}*{monomial}'

            if not text:
                text = body if coefficient > 0 else f'-{body}'
            else:
                text += f' + {body}' if coefficient > 0 else f' - {body}'

        return text


def _generator_rows(letter: BraidLetter, size: int) -> List[List]:
    """Reduced Burau matrix of a generator; for an inverse, t times the inverse matrix

    Both have -t (resp. -1) at (i, i), t at (i-1, i) and 1 at (i+1, i); the remaining
    diagonal is 1 (resp. t).
    """
    one, zero = _RING.one, _RING.zero
    t_ = _RING.from_sympy(t)
    i = letter.index - 1

    filler = one if letter.sign > 0 else t_
    rows = [[filler if r == c else zero for c in range(size)] for r in range(size)]
    rows[i][i] = -t_ if letter.sign > 0 else -one
    if i > 0:
        rows[i - 1][i] = t_
    if i < size - 1:
        rows[i + 1][i] = one

    return rows


def _burau_polynomial(b: BraidWord) -> Tuple[DomainMatrix, int]:
    """Polynomial matrix P and shift s with Burau(b) = t^-s P"""
    if b.strands < 2:
        raise errors.CoverParamsError(f'The reduced Burau representation needs at least 2 strands, got {b.strands}')

    size = b.strands - 1
    product = DomainMatrix(
        [[_RING.one if r == c else _RING.zero for c in range(size)] for r in range(size)], (size, size), _RING
    )
    shift = 0
    for letter in b.letters:
        product = product * DomainMatrix(_generator_rows(letter, size), (size, size), _RING)
        if letter.sign < 0:
            shift += 1

    return product, shift


def burau_reduced(b: BraidWord) -> Matrix:
    """Reduced Burau matrix of the word, entries Laurent polynomials in `t`

    Generator matrices are multiplied in word order.
    """
    product, shift = _burau_polynomial(b)
    return (product.to_Matrix() * t ** -shift).applyfunc(expand)


def _check_knot(b: BraidWord) -> None:
    components = b.component_count()
    if components != 1:
        raise errors.NotAKnotError(f'The closure of {b} has {components} components, expected a knot')


def alexander_poly(b: BraidWord) -> LaurentPoly:
    """Symmetric Alexander polynomial of the closed braid, normalized so that its value at 1 is 1"""
    _check_knot(b)
    if b.strands == 1:
        return LaurentPoly.from_mapping({0: 1})

    product, shift = _burau_polynomial(b)
    size = b.strands - 1
    t_ = _RING.from_sympy(t)
    scaled_identity = DomainMatrix(
        [[t_ ** shift if r == c else _RING.zero for c in range(size)] for r in range(size)], (size, size), _RING
    )

    determinant = Poly(_RING.to_sympy((scaled_identity - product).det()), t)
    quotient, remainder = determinant.div(Poly(sum(t ** k for k in range(b.strands)), t))
    if not remainder.is_zero:
        raise ArithmeticError(f'Burau determinant of {b} is not divisible by the strand polynomial')

    delta = LaurentPoly.from_poly(quotient)
    low, high = delta.terms[0][0], delta.terms[-1][0]
    delta = LaurentPoly.from_mapping({e - (low + high) // 2: c for e, c in delta.terms})
    if delta.evaluate_at_one() < 0:
        delta = LaurentPoly.from_mapping({e: -c for e, c in delta.terms})

    return delta


def h1_order_fox(b: BraidWord, p: int) -> Union[int, float]:
    """Order of H1 of the p-fold cyclic branched cover of a knot, from Fox's formula

    The product of the Alexander polynomial over the nontrivial p-th roots of unity is
    evaluated exactly, as a product of resultants with cyclotomic polynomials.

    Returns
    -------
    Union[int, float]
        The order, or `math.inf` when H1 is infinite.
    """
    if p < 2:
        raise errors.CoverParamsError(f'Cover degree must be at least 2, got {p}')

    delta = alexander_poly(b).to_poly()
    order = 1
    for d in divisors(p):
        if d > 1:
            order *= int(resultant(cyclotomic_poly(d, t), delta.as_expr(), t))

    return math.inf if order == 0 else abs(order)
