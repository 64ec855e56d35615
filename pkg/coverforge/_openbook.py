import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from . import errors
from ._braid import BraidLetter, BraidWord

RIGHT = 1
LEFT = -1


@dataclass(frozen=True)
class CoverParams:
    """Degree `p` of the cyclic cover and strand count `n` of the braid"""
    p: int
    n: int

    def __post_init__(self):
        if self.p < 2:
            raise errors.CoverParamsError(f'Cover degree p must be at least 2, got {self.p}')
        if self.n < 2:
            raise errors.CoverParamsError(f'Strand count n must be at least 2, got {self.n}')

    @property
    def curve_count(self) -> int:
        return (self.p - 1) * (self.n - 1)

    def curves(self) -> Tuple['CurveLabel', ...]:
        """All curve labels, strand-major: the basis order used for homology"""
        return tuple(
            CurveLabel(sheet, strand)
            for strand in range(1, self.n)
            for sheet in range(1, self.p)
        )

    def basis_index(self, label: 'CurveLabel') -> int:
        self.check_label(label)
        return (label.strand - 1) * (self.p - 1) + (label.sheet - 1)

    def check_label(self, label: 'CurveLabel') -> None:
        if not 1 <= label.sheet <= self.p - 1:
            raise errors.CoverParamsError(f'Sheet {label.sheet} out of range 1..{self.p - 1}')
        if not 1 <= label.strand <= self.n - 1:
            raise errors.CoverParamsError(f'Strand {label.strand} out of range 1..{self.n - 1}')


@dataclass(frozen=True, order=True)
class CurveLabel:
    """Lifted arc alpha_sheet^strand, running from branch point x_strand to x_(strand+1)"""
    sheet: int
    strand: int

    def __str__(self) -> str:
        return f'a{self.sheet}^{self.strand}'


@dataclass(frozen=True)
class LiftedPage:
    params: CoverParams
    euler_char: int
    boundary_components: int
    genus: int
    curves: Tuple[CurveLabel, ...]


@dataclass(frozen=True)
class SignedTwist:
    curve: CurveLabel
    handedness: int = RIGHT

    def __post_init__(self):
        if self.handedness not in (RIGHT, LEFT):
            raise errors.CoverParamsError(f'Twist handedness must be +1 or -1, got {self.handedness}')

    def inverse(self) -> 'SignedTwist':
        return SignedTwist(self.curve, -self.handedness)


@dataclass(frozen=True)
class TwistWord:
    """Dehn twists in application order: the first element is applied first"""
    params: CoverParams
    twists: Tuple[SignedTwist, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'twists', tuple(self.twists))
        for twist in self.twists:
            self.params.check_label(twist.curve)

    def __len__(self) -> int:
        return len(self.twists)

    def __add__(self, other: 'TwistWord') -> 'TwistWord':
        if other.params != self.params:
            raise errors.CoverParamsError('Cannot concatenate twist words on different pages')

        return TwistWord(self.params, self.twists + other.twists)

    def inverse(self) -> 'TwistWord':
        return TwistWord(self.params, tuple(twist.inverse() for twist in reversed(self.twists)))

    def free_reduce(self) -> 'TwistWord':
        stack: List[SignedTwist] = []
        for twist in self.twists:
            if stack and stack[-1] == twist.inverse():
                stack.pop()
            else:
                stack.append(twist)

        return TwistWord(self.params, tuple(stack))

    def to_list(self) -> List[Dict[str, int]]:
        return [
            {'sheet': t.curve.sheet, 'strand': t.curve.strand, 'handedness': t.handedness}
            for t in self.twists
        ]

    @classmethod
    def from_list(cls, params: CoverParams, data: List[Dict[str, int]]) -> 'TwistWord':
        twists = tuple(
            SignedTwist(CurveLabel(int(i['sheet']), int(i['strand'])), int(i['handedness'])) for i in data
        )
        return cls(params, twists)


def lifted_page(params: CoverParams) -> LiftedPage:
    """Page of the lifted open book: p disks glued along n-1 slits

    Parameters
    ----------
    params
        Cover degree and strand count.

    Returns
    -------
    LiftedPage
        Page data, the Seifert surface of the (p, n) torus link.
    """
    euler_char = params.p + params.n - params.p * params.n
    boundary_components = math.gcd(params.n, params.p)
    genus = (2 - euler_char - boundary_components) // 2

    return LiftedPage(
        params=params,
        euler_char=euler_char,
        boundary_components=boundary_components,
        genus=genus,
        curves=params.curves(),
    )


def lift_letter(letter: BraidLetter, params: CoverParams) -> TwistWord:
    """Lift a half twist to the cover

    The lift of s_j applies the right twists about sheets p-1, ..., 1 in that order;
    the lift of s_j^-1 is its inverse.
    """
    if letter.index > params.n - 1:
        raise errors.BraidIndexError(f'Generator s{letter.index} is out of range for {params.n} strands')

    positive = tuple(
        SignedTwist(CurveLabel(sheet, letter.index), RIGHT) for sheet in range(params.p - 1, 0, -1)
    )
    lift = TwistWord(params, positive)

    return lift if letter.sign > 0 else lift.inverse()


def lift_monodromy(b: BraidWord, p: int) -> TwistWord:
    params = CoverParams(p, b.strands)
    twists: List[SignedTwist] = []
    for letter in b.letters:
        twists.extend(lift_letter(letter, params).twists)

    return TwistWord(params, tuple(twists))


def page_linking(a: CurveLabel, b: CurveLabel) -> int:
    """Linking number of `a` with the push-off of `b` off the page

    This is the page's Seifert form; `a` sits on the earlier page.
    """
    k, j = a.sheet, a.strand
    target = (b.sheet, b.strand)

    if target in ((k, j), (k - 1, j + 1)):
        return -1
    if target in ((k - 1, j), (k, j + 1)):
        return 1

    return 0


def page_intersection(a: CurveLabel, b: CurveLabel) -> int:
    """Algebraic intersection number of two curve classes on the page"""
    return page_linking(a, b) - page_linking(b, a)


def _identity_rows(size: int) -> List[List]:
    return [[ZZ(1) if r == col else ZZ(0) for col in range(size)] for r in range(size)]


def twist_matrix(twist: SignedTwist, params: CoverParams) -> DomainMatrix:
    """Transvection x -> x + handedness * <x, c> c on the page homology"""
    size = params.curve_count
    c = params.basis_index(twist.curve)
    rows = _identity_rows(size)

    for col, label in enumerate(params.curves()):
        rows[c][col] += ZZ(twist.handedness * page_intersection(label, twist.curve))

    return DomainMatrix(rows, (size, size), ZZ)


def homology_action(w: TwistWord, params: CoverParams) -> DomainMatrix:
    """Integer matrix of the twist word acting on H1 of the page

    Columns are images of the basis curves, ordered as `CoverParams.curves`.
    """
    size = params.curve_count
    action = DomainMatrix(_identity_rows(size), (size, size), ZZ)
    for twist in w.twists:
        action = twist_matrix(twist, params) * action

    return action


def verify_lift_relations(params: CoverParams) -> bool:
    """Check the braid relations among the lifted generators on homology"""
    generators = {
        i: homology_action(lift_letter(BraidLetter(i), params), params) for i in range(1, params.n)
    }

    for i in range(1, params.n):
        for j in range(i + 1, params.n):
            a, b = generators[i], generators[j]
            if j == i + 1:
                if a * b * a != b * a * b:
                    return False
            elif a * b != b * a:
                return False

    return True
