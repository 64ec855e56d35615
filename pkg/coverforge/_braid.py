import json
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import errors

_TOKEN_PATTERN = re.compile(r'^(-?)s(\d+)(?:\^(-?\d+))?$')


@dataclass(frozen=True)
class BraidLetter:
    """Standard generator sigma_index (sign=1) or its inverse (sign=-1)"""
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise errors.BraidParseError(f'Letter sign must be +1 or -1, got {self.sign}')
        if self.index < 1:
            raise errors.BraidIndexError(f'Generator index must be positive, got {self.index}')

    def inverse(self) -> 'BraidLetter':
        return BraidLetter(self.index, -self.sign)

    def __str__(self) -> str:
        return f"{'-' if self.sign < 0 else ''}s{self.index}"


@dataclass(frozen=True)
class BraidWord:
    """Word in the standard generators of the braid group on `strands` strands

    The closure of the word is the transverse link it presents.
    """
    strands: int
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise errors.BraidParseError(f'A braid needs at least one strand, got {self.strands}')

        object.__setattr__(self, 'letters', tuple(self.letters))
        for letter in self.letters:
            if letter.index > self.strands - 1:
                raise errors.BraidIndexError(
                    f'Generator s{letter.index} is out of range for {self.strands} strands '
                    f'(valid indices: 1..{self.strands - 1})'
                )

    @property
    def n_plus(self) -> int:
        return sum(1 for letter in self.letters if letter.sign > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for letter in self.letters if letter.sign < 0)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: 'BraidWord') -> 'BraidWord':
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise errors.BraidIndexError(
                f'Cannot concatenate braids on {self.strands} and {other.strands} strands'
            )

        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return format_braid(self)

    def inverse(self) -> 'BraidWord':
        return BraidWord(self.strands, tuple(letter.inverse() for letter in reversed(self.letters)))

    def permutation(self) -> List[int]:
        """Image of each starting position after running along the braid (0-based)"""
        positions = list(range(self.strands))
        for letter in self.letters:
            i = letter.index - 1
            positions[i], positions[i + 1] = positions[i + 1], positions[i]

        return positions

    def component_count(self) -> int:
        """Number of components of the closure"""
        permutation = self.permutation()
        seen = set()
        count = 0
        for start in range(self.strands):
            if start in seen:
                continue
            count += 1
            position = start
            while position not in seen:
                seen.add(position)
                position = permutation[position]

        return count

    def to_dict(self) -> Dict:
        return {
            'strands': self.strands,
            'letters': [{'index': letter.index, 'sign': letter.sign} for letter in self.letters],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'BraidWord':
        try:
            letters = tuple(BraidLetter(int(i['index']), int(i['sign'])) for i in data['letters'])
            return cls(int(data['strands']), letters)
        except (KeyError, TypeError) as error:
            raise errors.BraidParseError(f'Malformed braid JSON: {error}')


@dataclass(frozen=True)
class QuasipositivityCertificate:
    """Factorization of a braid as a product of conjugates w_i s_(k_i) w_i^-1

    Each factor is a pair (conjugator word, generator index).
    """
    strands: int
    factors: Tuple[Tuple[BraidWord, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'factors', tuple((w, int(k)) for w, k in self.factors))
        for conjugator, generator in self.factors:
            if conjugator.strands != self.strands:
                raise errors.CertificateError(
                    f'Conjugator {conjugator} lives on {conjugator.strands} strands, '
                    f'certificate is for {self.strands}'
                )
            if not 1 <= generator <= self.strands - 1:
                raise errors.CertificateError(
                    f'Generator s{generator} is out of range for {self.strands} strands'
                )

    @classmethod
    def trivial(cls, word: BraidWord) -> 'QuasipositivityCertificate':
        """One unconjugated factor per letter; only a valid certificate for positive words"""
        empty = BraidWord(word.strands)
        return cls(word.strands, tuple((empty, letter.index) for letter in word.letters))

    def product(self) -> BraidWord:
        letters = []
        for conjugator, generator in self.factors:
            letters.extend(conjugator.letters)
            letters.append(BraidLetter(generator, 1))
            letters.extend(conjugator.inverse().letters)

        return BraidWord(self.strands, tuple(letters))

    def to_dict(self) -> Dict:
        return {
            'strands': self.strands,
            'factors': [
                {'conjugator': format_braid(conjugator), 'generator': generator}
                for conjugator, generator in self.factors
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'QuasipositivityCertificate':
        try:
            strands = int(data['strands'])
            factors = tuple(
                (parse_braid(factor['conjugator'], strands), int(factor['generator']))
                for factor in data['factors']
            )
        except (KeyError, TypeError, errors.BraidParseError, errors.BraidIndexError) as error:
            raise errors.CertificateError(f'Malformed quasipositivity certificate: {error}')

        return cls(strands, factors)


def load_certificate(path: str) -> QuasipositivityCertificate:
    """Read a quasipositivity certificate from a JSON file

    Parameters
    ----------
    path
        File holding `{"strands": n, "factors": [{"conjugator": "<braid>", "generator": k}, ...]}`.

    Returns
    -------
    QuasipositivityCertificate
    """
    try:
        with open(path) as file_handler:
            data = json.load(file_handler)
    except (OSError, json.JSONDecodeError) as error:
        raise errors.CertificateError(f'Cannot read certificate file {path!r}: {error}')

    return QuasipositivityCertificate.from_dict(data)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse a braid word

    Tokens are whitespace separated: `s<k>` for a generator, `-s<k>` for its
    inverse, with an optional power suffix `^<m>` (m may be negative).

    Parameters
    ----------
    text
        Braid text (e.g. 's1 s2^2 -s1').
    strands
        Number of strands.

    Returns
    -------
    BraidWord
        Word with powers expanded, letters in reading order.
    """
    if strands < 1:
        raise errors.BraidParseError(f'A braid needs at least one strand, got {strands}')

    letters = []
    for token in text.split():
        match = _TOKEN_PATTERN.match(token)
        if match is None:
            raise errors.BraidParseError(f'Malformed braid token {token!r}')

        sign = -1 if match.group(1) else 1
        index = int(match.group(2))
        power = int(match.group(3)) if match.group(3) is not None else 1
        if index < 1 or index > strands - 1:
            raise errors.BraidIndexError(
                f'Generator s{index} is out of range for {strands} strands (valid indices: 1..{strands - 1})'
            )

        if power < 0:
            sign, power = -sign, -power
        letters.extend([BraidLetter(index, sign)] * power)

    return BraidWord(strands, tuple(letters))


def format_braid(word: BraidWord) -> str:
    tokens = []
    letters = list(word.letters)
    position = 0
    while position < len(letters):
        run = 1
        while position + run < len(letters) and letters[position + run] == letters[position]:
            run += 1

        token = str(letters[position])
        tokens.append(token if run == 1 else f'{token}^{run}')
        position += run

    return ' '.join(tokens)


def self_linking(b: BraidWord) -> int:
    """Self-linking number n+ - n- - strands of the closed braid"""
    return b.n_plus - b.n_minus - b.strands


def positive_stabilize(b: BraidWord) -> BraidWord:
    return _stabilize(b, 1)


def negative_stabilize(b: BraidWord) -> BraidWord:
    return _stabilize(b, -1)


def _stabilize(b: BraidWord, sign: int) -> BraidWord:
    return BraidWord(b.strands + 1, b.letters + (BraidLetter(b.strands, sign),))


def conjugate(b: BraidWord, g: BraidLetter) -> BraidWord:
    """Return g b g^-1"""
    if g.index > b.strands - 1:
        raise errors.BraidIndexError(f'Generator s{g.index} is out of range for {b.strands} strands')

    return BraidWord(b.strands, (g,) + b.letters + (g.inverse(),))


def free_reduce(b: BraidWord) -> BraidWord:
    stack: List[BraidLetter] = []
    for letter in b.letters:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)

    return BraidWord(b.strands, tuple(stack))


def cyclic_reduce(b: BraidWord) -> BraidWord:
    """Free reduction followed by cancellation across the ends of the closed word"""
    letters = list(free_reduce(b).letters)
    while len(letters) >= 2 and letters[0] == letters[-1].inverse():
        letters = letters[1:-1]

    return BraidWord(b.strands, tuple(letters))


def cyclic_rotate(b: BraidWord, shift: int) -> BraidWord:
    if not b.letters:
        return b

    shift %= len(b.letters)
    return BraidWord(b.strands, b.letters[shift:] + b.letters[:shift])


def reverse_word(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(reversed(b.letters)))


def flip_indices(b: BraidWord) -> BraidWord:
    """Send every generator s_j to s_(n-j)"""
    return BraidWord(b.strands, tuple(BraidLetter(b.strands - i.index, i.sign) for i in b.letters))


def is_positive(b: BraidWord) -> bool:
    reduced = free_reduce(b)
    return reduced.n_minus == 0 and reduced.n_plus >= 1


def pure_negative_level(b: BraidWord) -> Optional[int]:
    """Smallest i such that s_i^-1 occurs in the reduced word while s_i does not"""
    reduced = free_reduce(b)
    positive = {i.index for i in reduced.letters if i.sign > 0}
    negative = {i.index for i in reduced.letters if i.sign < 0}

    levels = sorted(negative - positive)
    return levels[0] if levels else None


def verify_quasipositive(b: BraidWord, cert: QuasipositivityCertificate) -> bool:
    """Check, at the word level, that the certificate multiplies out to `b`

    Both sides are freely and cyclically reduced, then compared up to cyclic rotation.
    No braid relations are applied.
    """
    if cert.strands != b.strands:
        raise errors.CertificateError(
            f'Certificate is for {cert.strands} strands but the braid has {b.strands}'
        )

    target = cyclic_reduce(b).letters
    product = cyclic_reduce(cert.product()).letters
    if len(target) != len(product):
        return False

    return _is_rotation(target, product)


def _is_rotation(first: Sequence[BraidLetter], second: Sequence[BraidLetter]) -> bool:
    if not first:
        return not second

    doubled = tuple(first) + tuple(first)
    second = tuple(second)
    return any(doubled[shift:shift + len(second)] == second for shift in range(len(first)))
