import logging
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from . import errors, util
from ._braid import (
    BraidWord,
    QuasipositivityCertificate,
    cyclic_rotate,
    free_reduce,
    is_positive,
    pure_negative_level,
    self_linking,
    verify_quasipositive,
)
from ._forms import signature, smith_normal_form
from ._surgery import OVERTWISTED_SPHERE, UNLINKED_PLUS, SpecialBlock, SurgeryDiagram, build_diagram, \
    detect_special_blocks

logger = logging.getLogger(__name__)

TWO_TORSION_CAVEAT = (
    'H1 has 2-torsion: equal c1 = 0 and d3 do not by themselves pin down the homotopy class '
    'of the plane field, since the Spin^c structures could differ.'
)
ISOTOPY_CAVEAT = (
    'Contactomorphism follows from the classification of overtwisted structures only if the two '
    'closures are smoothly isotopic; that hypothesis is not checked.'
)
UNLINKED_PLUS_NOTE = (
    'A trivial extra strand is usually quoted as a sum with p copies of S1xS2, '
    'but its surgery block has p-1 unlinked +1 components; the count p-1 is reported.'
)


class Flag(Enum):
    """Classification of the contact structure on the cover"""
    stein_fillable = 'stein_fillable'
    overtwisted = 'overtwisted'
    unknown = 'unknown'


class Conclusion(Enum):
    invariants_distinguish = 'invariants_distinguish'
    invariants_agree = 'invariants_agree'
    contactomorphic_if_overtwisted = 'contactomorphic_if_overtwisted'


@dataclass(frozen=True)
class InvariantReport:
    """Invariants of the p-fold cyclic branched cover of a transverse closed braid"""
    braid: BraidWord
    p: int
    sl: int
    h1_factors: Tuple[int, ...]
    b1: int
    signature: int
    euler_char_X: int
    plus_count: int
    d3: Fraction
    flags: FrozenSet[Flag]
    summand_tags: Tuple[SpecialBlock, ...] = ()
    notes: Tuple[str, ...] = ()
    c1_zero: bool = True
    diagram: Optional[SurgeryDiagram] = field(default=None, compare=False, repr=False)

    @property
    def components(self) -> int:
        return self.euler_char_X - 1

    @property
    def h1_order(self) -> Union[int, float]:
        """Order of H1, `math.inf` when b1 > 0"""
        if self.b1 > 0:
            return math.inf

        return math.prod(self.h1_factors)

    def describe_h1(self) -> str:
        parts = [f'Z/{factor}' for factor in self.h1_factors]
        if self.b1 == 1:
            parts.insert(0, 'Z')
        elif self.b1 > 1:
            parts.insert(0, f'Z^{self.b1}')

        return ' + '.join(parts) if parts else '0'

    def to_dict(self) -> Dict:
        return {
            'braid': self.braid.to_dict(),
            'p': self.p,
            'sl': self.sl,
            'h1_factors': list(self.h1_factors),
            'b1': self.b1,
            'signature': self.signature,
            'euler_char_X': self.euler_char_X,
            'plus_count': self.plus_count,
            'd3': util.fraction_to_dict(self.d3),
            'c1_zero': self.c1_zero,
            'flags': sorted(flag.value for flag in self.flags),
            'summand_tags': [tag.to_dict() for tag in self.summand_tags],
            'notes': list(self.notes),
        }

    def to_text(self) -> str:
        lines = [
            f'braid:      {self.braid} ({self.braid.strands} strands)',
            f'p:          {self.p}',
            f'sl:         {self.sl}',
            f'H1:         {self.describe_h1()}',
            f'b1:         {self.b1}',
            f'signature:  {self.signature}',
            f'chi(X):     {self.euler_char_X}',
            f'm:          {self.plus_count}',
            f'd3:         {util.format_fraction(self.d3)}',
            f'flags:      {", ".join(sorted(flag.value for flag in self.flags))}',
        ]
        lines.extend(f'summand:    {tag.description}' for tag in self.summand_tags)
        lines.extend(f'note:       {note}' for note in self.notes)

        return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class ComparisonVerdict:
    left: InvariantReport
    right: InvariantReport
    smooth_match: bool
    homotopy_match: bool
    conclusion: Conclusion
    caveats: Tuple[str, ...] = field(default=())

    def to_dict(self) -> Dict:
        return {
            'left': self.left.to_dict(),
            'right': self.right.to_dict(),
            'smooth_match': self.smooth_match,
            'homotopy_match': self.homotopy_match,
            'conclusion': self.conclusion.value,
            'caveats': list(self.caveats),
        }

    def to_text(self) -> str:
        lines = [
            f'left:           {self.left.braid} | sl {self.left.sl} | H1 {self.left.describe_h1()} '
            f'| d3 {util.format_fraction(self.left.d3)}',
            f'right:          {self.right.braid} | sl {self.right.sl} | H1 {self.right.describe_h1()} '
            f'| d3 {util.format_fraction(self.right.d3)}',
            f'smooth match:   {self.smooth_match}',
            f'homotopy match: {self.homotopy_match}',
            f'conclusion:     {self.conclusion.value}',
        ]
        lines.extend(f'caveat:         {caveat}' for caveat in self.caveats)

        return '\n'.join(lines) + '\n'


def d3_invariant(d: SurgeryDiagram, sig: int) -> Fraction:
    """d3 of the contact structure given by a (+-1)-surgery diagram with c1 = 0

    Parameters
    ----------
    d
        Surgery diagram. The 4-manifold X has Euler characteristic 1 + #components.
    sig
        Signature of the linking matrix.

    Returns
    -------
    Fraction
        (-2 chi(X) - 3 sig) / 4 + m, with m the number of contact +1 components.
    """
    euler_char = 1 + len(d)
    return Fraction(-2 * euler_char - 3 * sig, 4) + d.plus_count


def tight_lens_d3(k: int) -> Fraction:
    """d3 of the tight structure on L(k, k-1), the reference for the double cover of s1^-k"""
    return Fraction(-k, 2)


def overtwisted_level(b: BraidWord) -> Optional[int]:
    """Pure negative level of the reduced word or of any of its cyclic rotations"""
    reduced = free_reduce(b)
    levels = [pure_negative_level(reduced)]
    levels.extend(pure_negative_level(cyclic_rotate(reduced, shift)) for shift in range(1, len(reduced)))

    found = [level for level in levels if level is not None]
    return min(found) if found else None


def classify(b: BraidWord,
             d: SurgeryDiagram,
             certificate: Optional[QuasipositivityCertificate] = None,
             tags: Optional[Sequence[SpecialBlock]] = None) -> FrozenSet[Flag]:
    """Stein fillable / overtwisted classification of the cover

    Parameters
    ----------
    b
        The user's braid word. Syntactic criteria are applied to its free reduction.
    d
        Surgery diagram of the cover.
    certificate
        Optional quasipositivity certificate for `b`.
    tags
        Special blocks of `d`, detected when not given.

    Returns
    -------
    FrozenSet[Flag]
        Exactly one of stein_fillable, overtwisted or unknown.
    """
    if tags is None:
        tags = detect_special_blocks(d, b)

    positive = is_positive(b)
    certified = False
    if certificate is not None:
        if positive:
            warnings.warn('A quasipositivity certificate was given for a braid word that is already positive',
                          stacklevel=2)
        certified = verify_quasipositive(b, certificate)
        if not certified:
            logger.debug('Quasipositivity certificate does not multiply out to %s', b)

    level = overtwisted_level(b)
    has_ot_block = any(tag.kind == OVERTWISTED_SPHERE for tag in tags)

    if certified and (level is not None or has_ot_block):
        raise errors.InconsistentClassificationError(
            f'The certificate says {b} is quasipositive, but the word '
            + (f'has a pure negative level s{level}' if level is not None else 'splits off an overtwisted sphere')
        )

    # the empty product of conjugates is quasipositive
    trivial = not free_reduce(b).letters
    if positive or certified or trivial:
        return frozenset({Flag.stein_fillable})
    if level is not None or has_ot_block:
        return frozenset({Flag.overtwisted})

    return frozenset({Flag.unknown})


def analyze(b: BraidWord, p: int, certificate: Optional[QuasipositivityCertificate] = None) -> InvariantReport:
    """Compute the invariants of the p-fold cyclic branched cover

    Parameters
    ----------
    b
        Braid word presenting a transverse link.
    p
        Cover degree, at most `COVERFORGE_MAX_P`.
    certificate
        Optional quasipositivity certificate.

    Returns
    -------
    InvariantReport
    """
    util.check_cover_degree(p)
    diagram = build_diagram(b, p)

    factors, rank = smith_normal_form(diagram.linking)
    sig = signature(diagram.linking)
    tags = detect_special_blocks(diagram, b)
    flags = classify(b, diagram, certificate, tags)

    notes = []
    if any(tag.kind == UNLINKED_PLUS for tag in tags):
        notes.append(UNLINKED_PLUS_NOTE)

    reduced = free_reduce(b)
    if p == 2 and b.strands == 2 and reduced.letters and reduced.n_plus == 0:
        k = len(reduced)
        notes.append(
            f'tight reference: the tight structure on L({k},{k - 1}) has d3 = '
            f'{util.format_fraction(tight_lens_d3(k))}'
        )

    report = InvariantReport(
        braid=b,
        p=p,
        sl=self_linking(b),
        h1_factors=tuple(factors),
        b1=len(diagram) - rank,
        signature=sig,
        euler_char_X=1 + len(diagram),
        plus_count=diagram.plus_count,
        d3=d3_invariant(diagram, sig),
        flags=flags,
        summand_tags=tuple(tags),
        notes=tuple(notes),
        diagram=diagram,
    )
    logger.debug('Analyzed %s at p=%d: H1 %s, d3 %s', b, p, report.describe_h1(), report.d3)

    return report


def compare(b1: BraidWord, b2: BraidWord, p: int) -> ComparisonVerdict:
    left = analyze(b1, p)
    right = analyze(b2, p)

    smooth_match = left.h1_factors == right.h1_factors and left.b1 == right.b1
    homotopy_match = smooth_match and left.d3 == right.d3

    caveats = []
    both_overtwisted = Flag.overtwisted in left.flags and Flag.overtwisted in right.flags
    if not homotopy_match:
        conclusion = Conclusion.invariants_distinguish
    elif both_overtwisted:
        conclusion = Conclusion.contactomorphic_if_overtwisted
        caveats.append(ISOTOPY_CAVEAT)
    else:
        conclusion = Conclusion.invariants_agree

    if homotopy_match and any(factor % 2 == 0 for factor in left.h1_factors):
        caveats.append(TWO_TORSION_CAVEAT)
        if conclusion is Conclusion.contactomorphic_if_overtwisted:
            warnings.warn(TWO_TORSION_CAVEAT, stacklevel=2)

    logger.debug('Compared %s and %s at p=%d: %s', b1, b2, p, conclusion.value)

    return ComparisonVerdict(
        left=left,
        right=right,
        smooth_match=smooth_match,
        homotopy_match=homotopy_match,
        conclusion=conclusion,
        caveats=tuple(caveats),
    )


def _compare_pair(arguments: Tuple[BraidWord, BraidWord, int]) -> ComparisonVerdict:
    return compare(*arguments)


def compare_many(pairs: Iterable[Tuple[BraidWord, BraidWord]], p: int, jobs: int = 1) -> List[ComparisonVerdict]:
    """Compare several braid pairs, optionally in worker processes

    Results come back in the order of `pairs`.
    """
    tasks = [(left, right, p) for left, right in pairs]
    if jobs <= 1 or len(tasks) <= 1:
        return [_compare_pair(task) for task in tasks]

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(_compare_pair, tasks))
