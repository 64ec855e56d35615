import json
import os
from fractions import Fraction
from typing import Any, Dict, List

from . import errors

MAX_P_ENV_VAR = 'COVERFORGE_MAX_P'
DEFAULT_MAX_P = 6


def max_cover_degree() -> int:
    """Largest cover degree accepted, read from `COVERFORGE_MAX_P` (default 6)"""
    value = os.environ.get(MAX_P_ENV_VAR)
    if value is None or value.strip() == '':
        return DEFAULT_MAX_P

    try:
        max_p = int(value)
    except ValueError:
        raise errors.ConfigurationError(f'{MAX_P_ENV_VAR} must be an integer, got {value!r}')

    if max_p < 2:
        raise errors.ConfigurationError(f'{MAX_P_ENV_VAR} must be at least 2, got {max_p}')

    return max_p


def check_cover_degree(p: int) -> int:
    if p < 2:
        raise errors.CoverDegreeError(f'Cover degree must be at least 2, got {p}')

    max_p = max_cover_degree()
    if p > max_p:
        raise errors.CoverDegreeError(
            f'Cover degree {p} exceeds the limit {max_p}. Raise {MAX_P_ENV_VAR} to allow larger covers.'
        )

    return p


def parse_degree_range(text: str) -> List[int]:
    """Parse a cover degree given as `P` or as an inclusive range `A..B`

    Parameters
    ----------
    text
        Degree specification (e.g. '3' or '2..5').

    Returns
    -------
    List[int]
        Degrees in increasing order.
    """
    try:
        if '..' in text:
            start, stop = text.split('..', 1)
            degrees = list(range(int(start), int(stop) + 1))
        else:
            degrees = [int(text)]
    except ValueError:
        raise errors.CoverParamsError(f'Invalid cover degree specification: {text!r}')

    if not degrees:
        raise errors.CoverParamsError(f'Empty cover degree range: {text!r}')

    return degrees


def fraction_to_dict(value: Fraction) -> Dict[str, int]:
    return {'num': value.numerator, 'den': value.denominator}


def fraction_from_dict(data: Dict[str, int]) -> Fraction:
    return Fraction(int(data['num']), int(data['den']))


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)

    return f'{value.numerator}/{value.denominator}'


def dumps(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent and a trailing newline"""
    return json.dumps(data, sort_keys=True, indent=2) + '\n'
