import json
import os
from typing import Union

from . import errors, util
from ._invariants import ComparisonVerdict, InvariantReport
from ._surgery import SurgeryDiagram

FORMATS = ('json', 'dot')


def export_diagram(d: SurgeryDiagram, format: str = 'json') -> str:
    """Serialize a surgery diagram

    Parameters
    ----------
    d
        Surgery diagram.
    format
        'json' for the full component list and linking matrix,
        'dot' for the linking graph (framings on nodes, linking numbers on edges).

    Returns
    -------
    str
        Deterministic text.
    """
    if format == 'json':
        return util.dumps(d.to_dict())
    if format == 'dot':
        return _to_dot(d)

    raise errors.ExportFormatError(f'Unknown diagram format {format!r}, expected one of {", ".join(FORMATS)}')


def _to_dot(d: SurgeryDiagram) -> str:
    lines = [f'graph surgery_p{d.params.p}_n{d.params.n} {{']
    for i, component in enumerate(d.components):
        label = f'{component.curve} t={component.time} ({component.smooth_framing})'
        lines.append(f'  c{i} [label="{label}"];')

    for i, row in enumerate(d.linking):
        for j in range(i + 1, len(row)):
            if row[j] != 0:
                lines.append(f'  c{i} -- c{j} [label="{row[j]:+d}"];')

    lines.append('}')
    return '\n'.join(lines) + '\n'


def load_diagram(text: str) -> SurgeryDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise errors.ExportFormatError(f'Diagram is not valid JSON: {error}')

    return SurgeryDiagram.from_dict(data)


def write_diagram(d: SurgeryDiagram, path: str, format: str = 'json') -> None:
    _write(path, export_diagram(d, format))


def write_report(result: Union[InvariantReport, ComparisonVerdict], path: str) -> None:
    """Write a report or comparison verdict as canonical JSON, creating parent directories"""
    _write(path, util.dumps(result.to_dict()))


def _write(path: str, text: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    with open(path, 'w') as file_handler:
        file_handler.write(text)
