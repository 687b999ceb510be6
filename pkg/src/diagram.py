from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .common import log
from .model.formulas import sink_lower_bound
from .model.model import ModelError, ReducedModel
from .model.serialization import ParseError, parse_rational
from .polynomial import BivarPoly, divide_by_line, format_rational

_log = partial(log, "diagram")

Cell = Tuple[int, int]


class DiagramError(ModelError):

    """Newton diagram of something that is not a model"""

    pass


class Label(Enum):
    ZERO = "0"
    POS = "P"
    NEG = "N"


def _sign_label(value: Fraction) -> Label:
    if value > 0:
        return Label.POS
    if value < 0:
        return Label.NEG
    return Label.ZERO


@dataclass(frozen=True)
class NewtonDiagram:
    """Sign grid of g_M over the cells a, b >= 0, a + b <= d"""

    d: int
    labels: Dict[Cell, Label]

    def label(self, a: int, b: int) -> Label:
        """Get a label, cells off the grid are ZERO"""
        return self.labels.get((a, b), Label.ZERO)

    def cells(self) -> List[Cell]:
        return [
            (a, b) for b in range(self.d + 1) for a in range(self.d + 1 - b)
        ]


def diagram_from_cofactor(g: BivarPoly, d: int) -> NewtonDiagram:
    labels = {
        (a, b): _sign_label(g.coefficient(a, b))
        for b in range(d + 1)
        for a in range(d + 1 - b)
    }
    return NewtonDiagram(d, labels)


def diagram_of(m: ReducedModel) -> NewtonDiagram:
    """Newton diagram of a model

    Raises:
        DiagramError: f_M is not one on the line x + y = 1
    """
    g, remainder = divide_by_line(m.polynomial())
    if not remainder.is_zero():
        raise DiagramError(f"nonzero remainder {remainder} for {m}")
    return diagram_from_cofactor(g, m.degree)


def _neighbourhood(diag: NewtonDiagram, a: int, b: int) -> Tuple[Label, ...]:
    return diag.label(a, b), diag.label(a - 1, b), diag.label(a, b - 1)


def is_sink(diag: NewtonDiagram, a: int, b: int) -> bool:
    """The cell is not P, its left and lower neighbours are not N and not
    all three are 0"""
    cell, left, below = _neighbourhood(diag, a, b)
    return (
        cell is not Label.POS
        and left is not Label.NEG
        and below is not Label.NEG
        and (cell, left, below) != (Label.ZERO,) * 3
    )


def is_source(diag: NewtonDiagram, a: int, b: int) -> bool:
    """Sink pattern with all signs reversed"""
    cell, left, below = _neighbourhood(diag, a, b)
    return (
        cell is not Label.NEG
        and left is not Label.POS
        and below is not Label.POS
        and (cell, left, below) != (Label.ZERO,) * 3
    )


def _axis_cutoff(labels: List[Label]) -> Optional[int]:
    """First zero of an axis if the axis reads P...P0...0, else None"""
    cutoff = next(
        (i for i, label in enumerate(labels) if label is not Label.POS),
        len(labels),
    )
    if cutoff == 0 or any(l is not Label.ZERO for l in labels[cutoff:]):
        return None
    return cutoff


@dataclass(frozen=True)
class SinkReport:
    sinks: List[Cell]
    sources: List[Cell]
    axis_cutoffs: Optional[Tuple[int, int]]


def find_sinks(diag: NewtonDiagram) -> SinkReport:
    """Locate sinks, sources and the axis cutoffs A and B"""
    cells = sorted(diag.cells())
    sinks = [cell for cell in cells if is_sink(diag, *cell)]
    sources = [cell for cell in cells if is_source(diag, *cell)]
    a_cut = _axis_cutoff([diag.label(a, 0) for a in range(diag.d + 1)])
    b_cut = _axis_cutoff([diag.label(0, b) for b in range(diag.d + 1)])
    cutoffs = None if a_cut is None or b_cut is None else (a_cut, b_cut)
    return SinkReport(sinks, sources, cutoffs)


@dataclass(frozen=True)
class StructureReport:
    """Structure checks of a model's Newton diagram

    sinks_positive: every sink carries a positive scaling
    unique_source: the origin is the only source
    axis_pattern: both axes read P...P0...0 and the cutoffs are sinks
    sink_bound: at least 2 + ceil((d - 1) / 2) sinks
    support_bound: no more sinks than support points
    """

    sinks: List[Cell]
    sources: List[Cell]
    sinks_positive: bool
    unique_source: bool
    axis_pattern: bool
    sink_bound: bool
    support_bound: bool

    @property
    def ok(self) -> bool:
        return not self.failures()

    def failures(self) -> List[str]:
        checks = (
            "sinks_positive",
            "unique_source",
            "axis_pattern",
            "sink_bound",
            "support_bound",
        )
        return [check for check in checks if not getattr(self, check)]


def check_structure(m: ReducedModel) -> StructureReport:
    report = find_sinks(diagram_of(m))
    d = m.degree
    axis_pattern = report.axis_cutoffs is not None and all(
        cell in report.sinks
        for cell in ((report.axis_cutoffs[0], 0), (0, report.axis_cutoffs[1]))
    )
    structure = StructureReport(
        sinks=report.sinks,
        sources=report.sources,
        sinks_positive=all(m.coefficient(s) > 0 for s in report.sinks),
        unique_source=report.sources == [(0, 0)],
        axis_pattern=axis_pattern,
        sink_bound=len(report.sinks) >= sink_lower_bound(d),
        support_bound=len(m) >= len(report.sinks),
    )
    if not structure.ok:
        _log(f"{m} fails {structure.failures()}")
    return structure


def sharp_point_allowed(pair: Cell, d: int) -> bool:
    """Whether a sharp model of degree d may use the pair

    Excludes the degree-d pairs off the axes, the axis pairs below degree d
    and the pairs (j, d - 1 - j) with even j.
    """
    a, b = pair
    if a + b == d:
        return a == 0 or b == 0
    if a == 0 or b == 0:
        return False
    if a + b == d - 1:
        return a % 2 == 1
    return True


def sharp_support_violations(support: Iterable[Cell], d: int) -> List[str]:
    """Support properties every sharp model of degree d has

    Returns:
        List[str]: names of the failed properties among "(i)" corners
            (d, 0) and (0, d) present, "(ii)" no other degree-d pair,
            "(iii)" no other axis pair, "(iv)" some pair of degree d - 1,
            "(v)" no (j, d - 1 - j) with even j
    """
    pairs = set(tuple(p) for p in support)
    failures = list()
    if (d, 0) not in pairs or (0, d) not in pairs:
        failures.append("(i)")
    if any(a + b == d and a and b for a, b in pairs):
        failures.append("(ii)")
    if any((a == 0) != (b == 0) and a + b < d for a, b in pairs):
        failures.append("(iii)")
    if not any(a + b == d - 1 for a, b in pairs):
        failures.append("(iv)")
    if any(a + b == d - 1 and a % 2 == 0 for a, b in pairs):
        failures.append("(v)")
    return failures


def sharp_support_ok(support: Iterable[Cell], d: int) -> bool:
    return not sharp_support_violations(support, d)


def _render_grid(d: int, cell_text: Callable[[int, int], str]) -> str:
    """Triangle with row b = d on top, cells right-aligned per column"""
    rows = [
        [cell_text(a, b) for a in range(d + 1 - b)] for b in range(d, -1, -1)
    ]
    widths = [
        max(len(row[a]) for row in rows if a < len(row)) for a in range(d + 1)
    ]
    return "\n".join(
        " ".join(text.rjust(widths[a]) for a, text in enumerate(row))
        for row in rows
    )


def render_chips(m: ReducedModel, stars: bool = False) -> str:
    """Chip configuration: scalings on the grid, '.' for empty cells and -1
    at the origin

    Args:
        m (ReducedModel): model
        stars (bool, optional): print '*' instead of nonzero scalings
    """
    scalings = m.as_dict()

    def cell_text(a: int, b: int) -> str:
        if (a, b) == (0, 0):
            return "-1"
        c = scalings.get((a, b))
        if c is None:
            return "."
        return "*" if stars else format_rational(c)

    return _render_grid(m.degree, cell_text)


def parse_chips(text: str) -> ReducedModel:
    """Read a chip configuration back

    Raises:
        ParseError: malformed grid or cells that do not form a model
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    d = len(rows) - 1
    if d < 1:
        raise ParseError("chip configuration needs at least two rows")
    entries: Dict[Cell, Fraction] = dict()
    for top, cells in enumerate(rows):
        b = d - top
        if len(cells) != d + 1 - b:
            raise ParseError(f"row {b} has {len(cells)} cells")
        for a, token in enumerate(cells):
            if (a, b) == (0, 0):
                if token != "-1":
                    raise ParseError("origin cell must read -1")
            elif token != ".":
                entries[(a, b)] = parse_rational(token)
    try:
        return ReducedModel(entries)
    except ModelError as e:
        raise ParseError(str(e)) from e


def render_diagram(diag: NewtonDiagram, marks: bool = False) -> str:
    """Letter grid of a Newton diagram

    Args:
        diag (NewtonDiagram): diagram
        marks (bool, optional): suffix sinks with '*' and sources with '!'
    """

    def cell_text(a: int, b: int) -> str:
        text = diag.label(a, b).value
        if marks and is_sink(diag, a, b):
            text += "*"
        elif marks and is_source(diag, a, b):
            text += "!"
        return text

    return _render_grid(diag.d, cell_text)


def format_cells(cells: Iterable[Cell]) -> str:
    return " ".join(f"({a},{b})" for a, b in cells)


def parse_diagram(text: str) -> NewtonDiagram:
    """Read a letter grid back, the top row holds the cell (0, d)

    Raises:
        ParseError: malformed grid or unknown letters
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    d = len(rows) - 1
    labels: Dict[Cell, Label] = dict()
    for top, cells in enumerate(rows):
        b = d - top
        if len(cells) != d + 1 - b:
            raise ParseError(f"row {b} has {len(cells)} cells")
        for a, token in enumerate(cells):
            try:
                labels[(a, b)] = Label(token)
            except ValueError as e:
                raise ParseError(f"unknown label '{token}'") from e
    return NewtonDiagram(d, labels)
