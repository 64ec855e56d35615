import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from . import errors
from ._braid import BraidLetter, BraidWord, free_reduce
from ._openbook import CoverParams, CurveLabel, page_linking

logger = logging.getLogger(__name__)

OVERTWISTED_SPHERE = 'u_ot'
UNLINKED_PLUS = 'u_minus'


@dataclass(frozen=True)
class SurgeryComponent:
    """Legendrian unknot on a page copy of `curve`, with contact coefficient +1 or -1

    `time` is the global index of the page the copy sits on.
    """
    curve: CurveLabel
    time: int
    contact_coeff: int

    def __post_init__(self):
        if self.contact_coeff not in (1, -1):
            raise errors.SurgeryError(f'Contact coefficient must be +1 or -1, got {self.contact_coeff}')
        if self.time < 0:
            raise errors.SurgeryError(f'Time slot must be non-negative, got {self.time}')

    @property
    def tb(self) -> int:
        return -1

    @property
    def rotation(self) -> int:
        return 0

    @property
    def smooth_framing(self) -> int:
        return self.tb + self.contact_coeff

    def to_dict(self) -> Dict[str, int]:
        return {
            'sheet': self.curve.sheet,
            'strand': self.curve.strand,
            'time': self.time,
            'contact': self.contact_coeff,
        }


@dataclass(frozen=True)
class SurgeryDiagram:
    params: CoverParams
    components: Tuple[SurgeryComponent, ...]
    linking: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'components', tuple(self.components))
        object.__setattr__(self, 'linking', tuple(tuple(row) for row in self.linking))

    def __len__(self) -> int:
        return len(self.components)

    @property
    def plus_count(self) -> int:
        return sum(1 for c in self.components if c.contact_coeff > 0)

    def linking_graph(self) -> nx.Graph:
        """Components as nodes, joined when their linking number is nonzero"""
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.components)))
        for i, row in enumerate(self.linking):
            for j in range(i + 1, len(row)):
                if row[j] != 0:
                    graph.add_edge(i, j, lk=row[j])

        return graph

    def submatrix(self, indices: Sequence[int]) -> List[List[int]]:
        return [[self.linking[i][j] for j in indices] for i in indices]

    def restrict(self, indices: Sequence[int]) -> 'SurgeryDiagram':
        """Sub-diagram on the given components, in the given order"""
        return SurgeryDiagram(
            self.params,
            tuple(self.components[i] for i in indices),
            tuple(tuple(row) for row in self.submatrix(indices)),
        )

    def split(self) -> List['SurgeryDiagram']:
        """Sub-diagrams on the connected pieces of the linking graph"""
        pieces = sorted(nx.connected_components(self.linking_graph()), key=min)
        return [self.restrict(sorted(piece)) for piece in pieces]

    def to_dict(self) -> Dict:
        return {
            'params': {'p': self.params.p, 'n': self.params.n},
            'components': [c.to_dict() for c in self.components],
            'linking': [list(row) for row in self.linking],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'SurgeryDiagram':
        try:
            params = CoverParams(int(data['params']['p']), int(data['params']['n']))
            components = tuple(
                SurgeryComponent(CurveLabel(int(c['sheet']), int(c['strand'])), int(c['time']), int(c['contact']))
                for c in data['components']
            )
            linking = tuple(tuple(int(v) for v in row) for row in data['linking'])
        except (KeyError, TypeError, ValueError) as error:
            raise errors.ExportFormatError(f'Malformed diagram JSON: {error}')

        if len(linking) != len(components) or any(len(row) != len(components) for row in linking):
            raise errors.ExportFormatError('Linking matrix does not match the component list')

        return cls(params, components, linking)


@dataclass(frozen=True)
class SpecialBlock:
    """Detached piece of a diagram recognised as a connected summand"""
    kind: str
    components: Tuple[int, ...]
    description: str

    def to_dict(self) -> Dict:
        return {'kind': self.kind, 'components': list(self.components), 'description': self.description}


def prefix_normalize(b: BraidWord) -> Tuple[bool, BraidWord]:
    """Split off the base unknot s1 s2 ... s_(n-1)

    If `b` does not begin with the base word, the trivial word
    s1 ... s_(n-1) s_(n-1)^-1 ... s1^-1 is put in front of it first.

    Returns
    -------
    Tuple[bool, BraidWord]
        Whether the base was found literally, and the rest of the word.
    """
    if b.strands < 2:
        raise errors.CoverParamsError(f'Surgery diagrams need at least 2 strands, got {b.strands}')

    base = tuple(BraidLetter(i, 1) for i in range(1, b.strands))
    if b.letters[:len(base)] == base:
        return True, BraidWord(b.strands, b.letters[len(base):])

    base_inverse = tuple(BraidLetter(i, -1) for i in range(b.strands - 1, 0, -1))
    return False, BraidWord(b.strands, base_inverse + b.letters)


def linking_rule(earlier: SurgeryComponent, later: SurgeryComponent) -> int:
    if earlier.time >= later.time:
        raise errors.SurgeryError(
            f'Linking is defined from an earlier to a later page (got times {earlier.time} and {later.time})'
        )

    return page_linking(earlier.curve, later.curve)


def letter_components(letter: BraidLetter, p: int, start: int) -> List[SurgeryComponent]:
    """Surgery components contributed by one letter, occupying times start .. start+p-2"""
    if letter.sign > 0:
        sheets = range(p - 1, 0, -1)
        coefficient = -1
    else:
        sheets = range(1, p)
        coefficient = 1

    return [
        SurgeryComponent(CurveLabel(sheet, letter.index), start + offset, coefficient)
        for offset, sheet in enumerate(sheets)
    ]


def build_diagram(b: BraidWord, p: int) -> SurgeryDiagram:
    """Contact surgery diagram of the p-fold cyclic branched cover of the closure of `b`

    Parameters
    ----------
    b
        Braid word on at least 2 strands.
    p
        Cover degree.

    Returns
    -------
    SurgeryDiagram
        Components in time order and their linking matrix.
    """
    params = CoverParams(p, b.strands)
    base_consumed, remainder = prefix_normalize(b)
    remainder = free_reduce(remainder)

    components: List[SurgeryComponent] = []
    for letter in remainder.letters:
        components.extend(letter_components(letter, p, len(components)))

    size = len(components)
    linking = [[0] * size for _ in range(size)]
    for i, earlier in enumerate(components):
        linking[i][i] = earlier.smooth_framing
        for j in range(i + 1, size):
            value = linking_rule(earlier, components[j])
            linking[i][j] = linking[j][i] = value

    logger.debug(
        'Built diagram for p=%d, n=%d: base %s, %d letters, %d components',
        p, b.strands, 'consumed' if base_consumed else 'inserted', len(remainder), size
    )

    return SurgeryDiagram(params, tuple(components), tuple(tuple(row) for row in linking))


def letter_block(d: SurgeryDiagram, component: int) -> int:
    """Index of the letter that produced a component"""
    return d.components[component].time // (d.params.p - 1)


def detect_special_blocks(d: SurgeryDiagram, b: BraidWord) -> List[SpecialBlock]:
    """Find detached overtwisted-sphere blocks and unlinked S1xS2 blocks

    A connected piece of the linking graph made of exactly the two letter blocks of
    consecutive s_j^-1 letters is an overtwisted 3-sphere summand. A letter block of
    +1 components meeting nothing at all contributes p-1 copies of S1xS2.
    """
    if b.strands != d.params.n:
        raise errors.SurgeryError(f'Braid has {b.strands} strands but the diagram was built for {d.params.n}')

    graph = d.linking_graph()
    blocks: Dict[int, List[int]] = {}
    for index in range(len(d.components)):
        blocks.setdefault(letter_block(d, index), []).append(index)

    found = []
    for piece in sorted(nx.connected_components(graph), key=min):
        piece_blocks = sorted({letter_block(d, i) for i in piece})
        if len(piece_blocks) != 2 or piece_blocks[1] != piece_blocks[0] + 1:
            continue

        members = blocks[piece_blocks[0]] + blocks[piece_blocks[1]]
        if set(members) != set(piece):
            continue
        if any(d.components[i].contact_coeff < 0 for i in members):
            continue
        if len({d.components[i].curve.strand for i in members}) != 1:
            continue

        found.append(SpecialBlock(OVERTWISTED_SPHERE, tuple(sorted(members)), 'overtwisted S³ summand'))

    for block_index, members in sorted(blocks.items()):
        if any(d.components[i].contact_coeff < 0 or graph.degree(i) > 0 for i in members):
            continue

        description = f'#_{d.params.p - 1}(S¹×S²) summand'
        found.append(SpecialBlock(UNLINKED_PLUS, tuple(members), description))

    found.sort(key=lambda block: block.components)
    logger.debug('Detected %d special blocks', len(found))

    return found
