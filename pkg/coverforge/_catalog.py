import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import errors, util
from ._braid import BraidLetter, BraidWord, flip_indices, negative_stabilize, parse_braid, reverse_word
from ._invariants import Conclusion, InvariantReport, analyze, compare
from ._oracle import h1_order_fox

logger = logging.getLogger(__name__)

Expectation = Callable[[int], Dict[str, Any]]

NGOT_L1 = 's3^-1 s2 s3 s1 s1 s3 s2^-1 s1 s2 s1^-2'
NGOT_L2 = 's3 s2 s1 s3^-1 s1 s2^-1 s1 s2 s1^-2 s3'
NGOT_L1_ISOTOPED = 's2 s1 s3 s3 s1 s2^-1 s3 s2 s3^-2 s1^-1'
NGOT_L2_ISOTOPED = 's1 s2 s3 s3 s1^-1 s2^-1 s3 s2 s3^-2 s1'
NGOT5_L1 = 's4^-1 s3 s4 s2 s1 s4 s2 s1 s2 s3^-1 s2 s3 s2^-1 s1^-1 s2^-1 s1^-1'
NGOT5_L2 = 's4 s3 s2 s1 s4^-1 s2 s1 s2 s3^-1 s2 s3 s2^-1 s1^-1 s2^-1 s1^-1 s4'
NGOT5_L1_ISOTOPED = 's2 s1 s3 s4 s1 s3 s4 s3 s2^-1 s3 s2 s3^-1 s4^-1 s3^-1 s4^-1 s1^-1'
NGOT5_L2_ISOTOPED = 's1 s2 s3 s4 s1^-1 s3 s4 s3 s2^-1 s3 s2 s3^-1 s4^-1 s3^-1 s4^-1 s1'


@dataclass(frozen=True)
class CatalogEntry:
    """A braid, or a pair of braids to compare, with what their covers should satisfy

    `expected` and `expected_right` map a cover degree to a partial report for the first
    and second word. The special keys `sl_shift` and `d3_shift` of `expected_right` are
    differences right minus left.
    """
    name: str
    family: str
    words: Tuple[BraidWord, ...]
    provenance: str
    expected: Optional[Expectation] = None
    expected_right: Optional[Expectation] = None
    agree: Optional[bool] = None
    degrees: Tuple[int, ...] = (2, 3)

    def __post_init__(self):
        if len(self.words) not in (1, 2):
            raise errors.CatalogError(f'Catalog entry {self.name} needs one or two words')
        if (self.expected is not None or self.expected_right is not None) and not self.provenance:
            raise errors.CatalogError(f'Catalog entry {self.name} has expectations but no provenance')

    @property
    def is_pair(self) -> bool:
        return len(self.words) == 2

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'family': self.family,
            'words': [{'braid': str(word), 'strands': word.strands} for word in self.words],
            'provenance': self.provenance,
            'degrees': list(self.degrees),
        }


@dataclass(frozen=True)
class CatalogResult:
    name: str
    p: int
    passed: bool
    detail: str

    @property
    def status(self) -> str:
        return 'PASS' if self.passed else 'FAIL'

    def to_dict(self) -> Dict:
        return {'name': self.name, 'p': self.p, 'status': self.status, 'detail': self.detail}


def _word(letters: Sequence[Tuple[int, int]], strands: int) -> BraidWord:
    return BraidWord(strands, tuple(BraidLetter(index, sign) for index, sign in letters))


def _power(index: int, exponent: int) -> List[Tuple[int, int]]:
    sign = 1 if exponent > 0 else -1
    return [(index, sign)] * abs(exponent)


def _bm_pair(u: int, v: int, w: int) -> Tuple[BraidWord, BraidWord]:
    left = _power(1, u) + _power(2, v) + _power(1, w) + _power(2, -1)
    right = _power(1, u) + _power(2, -1) + _power(1, w) + _power(2, v)
    return _word(left, 3), _word(right, 3)


def _standard_sphere(p: int) -> Dict[str, Any]:
    return {'h1_factors': (), 'b1': 0, 'd3': Fraction(-1, 2), 'flags': {'stein_fillable'}}


def unknot_family(n: int) -> List[CatalogEntry]:
    word = _word([(i, 1) for i in range(1, n)], n)
    return [CatalogEntry(
        name=f'unknot-{n}',
        family='unknot',
        words=(word,),
        provenance='base unknot: its cover carries the torus link open book of the standard 3-sphere',
        expected=_standard_sphere,
        degrees=(2, 3, 4, 5),
    )]


def lens_family(k: int) -> List[CatalogEntry]:
    def expected(p: int) -> Dict[str, Any]:
        values: Dict[str, Any] = {'flags': {'overtwisted'}}
        if p == 2:
            values.update({
                'h1_factors': (k,) if k > 1 else (),
                'signature': k - 1,
                'd3': Fraction(3 - k, 4),
            })
        return values

    return [CatalogEntry(
        name=f'lens-{k}',
        family='lens',
        words=(_word(_power(1, -k), 2),),
        provenance='double cover of s1^-k: overtwisted structure on the lens space L(k, k-1)',
        expected=expected,
        degrees=(2,),
    )]


def torus_family(q: int, r: int) -> List[CatalogEntry]:
    word = _word([(i, 1) for i in range(1, q)] * r, q)
    sl = (q - 1) * r - q

    return [
        CatalogEntry(
            name=f'torus-{q}-{r}',
            family='torus',
            words=(word,),
            provenance=f'torus link T({q},{r}): cover is the Brieskorn manifold, Stein filled by the positive braid',
            expected=lambda p: {'flags': {'stein_fillable'}, 'sl': sl},
            degrees=(2, 3, 4, 5),
        ),
        CatalogEntry(
            name=f'torus-{q}-{r}-stabilized',
            family='torus',
            words=(word, negative_stabilize(word)),
            provenance='below maximal self-linking the torus cover is overtwisted with a different d3',
            expected_right=lambda p: {'flags': {'overtwisted'}, 'sl_shift': -2, 'd3_shift': p - 1},
            agree=False,
            degrees=(2, 3),
        ),
    ]


def bm_family(u: int, v: int, w: int) -> List[CatalogEntry]:
    return [CatalogEntry(
        name=f'bm-{u}-{v}-{w}',
        family='bm',
        words=_bm_pair(u, v, w),
        provenance='Birman-Menasco negative flype pair: covers are contactomorphic for all p',
        agree=True,
    )]


def reverse_family(u: int, v: int, w: int) -> List[CatalogEntry]:
    word = _bm_pair(u, v, w)[0]
    return [CatalogEntry(
        name=f'reverse-{u}-{v}-{w}',
        family='reverse',
        words=(word, reverse_word(word)),
        provenance='reading the braid backwards gives the conjugate contact structure',
        agree=True,
    )]


def flip_family(u: int, v: int, w: int) -> List[CatalogEntry]:
    word = _bm_pair(u, v, w)[0]
    return [CatalogEntry(
        name=f'flip-{u}-{v}-{w}',
        family='flip',
        words=(word, flip_indices(word)),
        provenance='s_j -> s_(n-j) is conjugation by the half twist',
        agree=True,
    )]


def flype_family(m: int, a: int, b: int) -> List[CatalogEntry]:
    left = _power(1, m) + _power(2, a) + _power(1, -1) + _power(2, b)
    right = _power(1, -1) + _power(2, a) + _power(1, m) + _power(2, b)
    return [CatalogEntry(
        name=f'flype-{m}-{a}-{b}',
        family='flype',
        words=(_word(left, 3), _word(right, 3)),
        provenance='3-braids related by a negative flype: covers are contactomorphic',
        agree=True,
        degrees=(2,),
    )]


def _ngot_entries(family: str, strands: int, words: Dict[str, str], provenance: str) -> List[CatalogEntry]:
    parsed = {name: parse_braid(text, strands) for name, text in words.items()}
    pairs = [('L1', 'L2'), ('L1', 'L1-isotoped'), ('L2', 'L2-isotoped')]

    return [
        CatalogEntry(
            name=f'{family}-{left}-{right}',
            family=family,
            words=(parsed[left], parsed[right]),
            provenance=provenance,
            expected=lambda p: {'sl': -1},
            agree=True,
            degrees=(2,),
        )
        for left, right in pairs
    ]


def ngot_family() -> List[CatalogEntry]:
    words = {'L1': NGOT_L1, 'L2': NGOT_L2, 'L1-isotoped': NGOT_L1_ISOTOPED, 'L2-isotoped': NGOT_L2_ISOTOPED}
    return _ngot_entries(
        'ngot', 4, words,
        'Ng-Ozsvath-Thurston transverse push-offs of the pretzel knot P(-4,-3,3): double covers agree',
    )


def ngot5_family() -> List[CatalogEntry]:
    words = {'L1': NGOT5_L1, 'L2': NGOT5_L2, 'L1-isotoped': NGOT5_L1_ISOTOPED, 'L2-isotoped': NGOT5_L2_ISOTOPED}
    return _ngot_entries(
        'ngot5', 5, words,
        'Ng-Ozsvath-Thurston transverse push-offs of the pretzel knot P(-6,-3,3): double covers agree',
    )


def stabilization_family(k: int) -> List[CatalogEntry]:
    word = _word(_power(1, k), 2)
    inserted = _word([(1, 1), (2, 1)] + _power(1, k - 1), 3)

    return [
        CatalogEntry(
            name=f'stabilization-negative-{k}',
            family='stabilization',
            words=(word, negative_stabilize(word)),
            provenance='negative stabilization splits off an overtwisted sphere: sl drops by 2, d3 rises by p-1',
            expected_right=lambda p: {'flags': {'overtwisted'}, 'sl_shift': -2, 'd3_shift': p - 1},
            agree=False,
        ),
        CatalogEntry(
            name=f'stabilization-positive-{k}',
            family='stabilization',
            words=(word, inserted),
            provenance='positive stabilization leaves the surgery diagram unchanged',
            expected_right=lambda p: {'sl_shift': 0, 'd3_shift': 0},
            agree=True,
        ),
    ]


def legendrian_family() -> List[CatalogEntry]:
    return [CatalogEntry(
        name='legendrian-s1^4',
        family='legendrian',
        words=(_word(_power(1, 4), 2),),
        provenance='cover of T(2,4): Legendrian surgery on every component, 12 of them at p=5',
        expected=lambda p: {'components': 3 * (p - 1), 'plus_count': 0, 'flags': {'stein_fillable'}},
        degrees=(5,),
    )]


FAMILIES: Dict[str, Tuple[Callable[..., List[CatalogEntry]], Tuple[int, ...], str]] = {
    'unknot': (unknot_family, (3,), 'n: base unknot s1 ... s_(n-1)'),
    'lens': (lens_family, (3,), 'k: s1^-k on 2 strands'),
    'torus': (torus_family, (2, 3), 'q,r: torus braid (s1 ... s_(q-1))^r and its negative stabilization'),
    'bm': (bm_family, (3, 2, 3), 'u,v,w: Birman-Menasco flype pair'),
    'reverse': (reverse_family, (3, 2, 3), 'u,v,w: flype word against its reverse'),
    'flip': (flip_family, (3, 2, 3), 'u,v,w: flype word against its index flip'),
    'flype': (flype_family, (2, 1, 1), 'm,a,b: s1^m s2^a s1^-1 s2^b against s1^-1 s2^a s1^m s2^b'),
    'ngot': (ngot_family, (), 'Ng-Ozsvath-Thurston 4-braids'),
    'ngot5': (ngot5_family, (), 'Ng-Ozsvath-Thurston 5-braids'),
    'stabilization': (stabilization_family, (3,), 'k: s1^k against its stabilizations'),
    'legendrian': (legendrian_family, (), 's1^4 at p=5'),
}


def build_family(family: str, params: Optional[Sequence[int]] = None) -> List[CatalogEntry]:
    """Instantiate a catalog family

    Parameters
    ----------
    family
        Family name, one of `FAMILIES`.
    params
        Integer parameters; the family defaults are used when None.

    Returns
    -------
    List[CatalogEntry]
    """
    if family not in FAMILIES:
        raise errors.CatalogError(f'Unknown catalog family {family!r}; known families: {", ".join(FAMILIES)}')

    builder, defaults, _ = FAMILIES[family]
    params = tuple(defaults if params is None else params)
    if len(params) != len(defaults):
        raise errors.CatalogError(
            f'Family {family!r} takes {len(defaults)} parameters, got {len(params)}'
        )

    return builder(*params)


def default_catalog() -> List[CatalogEntry]:
    entries = []
    for family in FAMILIES:
        entries.extend(build_family(family))

    return entries


def _mismatches(report: InvariantReport, expected: Dict[str, Any], left: Optional[InvariantReport] = None) -> List[str]:
    problems = []
    for key, value in expected.items():
        if key == 'sl_shift':
            actual = report.sl - left.sl
        elif key == 'd3_shift':
            actual = report.d3 - left.d3
        elif key == 'flags':
            actual = {flag.value for flag in report.flags}
            value = set(value)
        elif key == 'h1_factors':
            actual, value = tuple(report.h1_factors), tuple(value)
        else:
            actual = getattr(report, key)

        if actual != value:
            problems.append(f'{key}: expected {value}, got {actual}')

    return problems


def _oracle_mismatches(report: InvariantReport) -> List[str]:
    if report.braid.component_count() != 1:
        return []

    fox = h1_order_fox(report.braid, report.p)
    if fox != report.h1_order:
        return [f'|H1| of {report.braid} is {report.h1_order} but Fox gives {fox}']

    return []


def run_entry(entry: CatalogEntry, p: int) -> CatalogResult:
    """Analyze (or compare) an entry at one cover degree and check its expectations"""
    problems: List[str] = []

    if entry.is_pair:
        verdict = compare(entry.words[0], entry.words[1], p)
        reports = [verdict.left, verdict.right]
        if entry.agree is not None:
            agreed = verdict.conclusion is not Conclusion.invariants_distinguish
            if agreed != entry.agree:
                problems.append(f'conclusion {verdict.conclusion.value}')
            if not verdict.smooth_match:
                problems.append('H1 differs')
        summary = verdict.conclusion.value
    else:
        reports = [analyze(entry.words[0], p)]
        summary = f'H1 {reports[0].describe_h1()}, d3 {reports[0].d3}'

    if entry.expected is not None:
        problems.extend(_mismatches(reports[0], entry.expected(p)))
    if entry.expected_right is not None and entry.is_pair:
        problems.extend(_mismatches(reports[1], entry.expected_right(p), left=reports[0]))
    for report in reports:
        problems.extend(_oracle_mismatches(report))

    logger.debug('Catalog entry %s at p=%d: %s', entry.name, p, problems or 'ok')

    return CatalogResult(entry.name, p, not problems, '; '.join(problems) if problems else summary)


def _run_task(task: Tuple[str, Optional[Tuple[int, ...]], int, int]) -> CatalogResult:
    family, params, index, p = task
    return run_entry(build_family(family, params)[index], p)


def run_catalog(families: Optional[Sequence[str]] = None,
                params: Optional[Sequence[int]] = None,
                degrees: Optional[Sequence[int]] = None,
                jobs: int = 1,
                progress: bool = False) -> List[CatalogResult]:
    """Run catalog entries and return one result per (entry, cover degree)

    Parameters
    ----------
    families
        Families to run, all of them when None.
    params
        Parameters for the family; only allowed with a single family.
    degrees
        Cover degrees; each entry's own degrees when None.
    jobs
        Number of worker processes.
    progress
        Show a progress bar (requires the optional `tqdm` dependency).

    Returns
    -------
    List[CatalogResult]
        In catalog order, then degree order.
    """
    families = list(FAMILIES) if families is None else list(families)
    if params is not None and len(families) != 1:
        raise errors.CatalogError('Parameters can only be given for a single family')

    max_p = util.max_cover_degree()
    tasks = []
    for family in families:
        family_params = tuple(params) if params is not None else None
        for index, entry in enumerate(build_family(family, family_params)):
            for p in (degrees or entry.degrees):
                if p > max_p:
                    logger.warning('Skipping %s at p=%d: above %s=%d', entry.name, p, util.MAX_P_ENV_VAR, max_p)
                    continue
                tasks.append((family, family_params, index, p))

    if progress:
        try:
            from tqdm import tqdm
        except ModuleNotFoundError:
            raise ModuleNotFoundError(
                'Optional dependency tqdm have to be installed for the progress indicator. '
                'Install with `pip install coverforge[progress]` or `pip install coverforge[all]`'
            )
    else:
        tqdm = None

    if jobs <= 1:
        iterator = map(_run_task, tasks)
        if tqdm is not None:
            iterator = tqdm(iterator, total=len(tasks), desc='catalog')
        return list(iterator)

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        iterator = executor.map(_run_task, tasks)
        if tqdm is not None:
            iterator = tqdm(iterator, total=len(tasks), desc='catalog')
        return list(iterator)
