import json
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from ..polynomial import format_rational
from .model import ExponentPair, ModelError, ReducedModel

catalog_separator = "---"


class ParseError(ValueError):

    """Malformed model, catalog, support or counts text"""

    pass


def parse_rational(token: str) -> Fraction:
    """Read "p/q" or an integer, decimals are rejected"""
    token = token.strip()
    if not token or "." in token or "e" in token.lower():
        raise ParseError(f"invalid rational '{token}'")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"invalid rational '{token}'") from e


def _parse_int(token: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise ParseError(f"invalid integer '{token}'") from e


def _content_lines(text: str) -> List[str]:
    lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def format_model(m: ReducedModel) -> str:
    """Canonical text: "n d", then one "nu mu c" line per entry in
    graded-lex order"""
    lines = [f"{m.n} {m.degree}"]
    lines.extend(
        f"{pair.nu} {pair.mu} {format_rational(c)}" for pair, c in m
    )
    return "\n".join(lines) + "\n"


def _entries_from_lines(
    lines: Sequence[str],
) -> Tuple[int, int, List[Tuple[ExponentPair, Fraction]]]:
    if not lines:
        raise ParseError("empty model")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"expected 'n d' header, got '{lines[0]}'")
    n, d = (_parse_int(token) for token in header)
    entries: List[Tuple[ExponentPair, Fraction]] = list()
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected 'nu mu c', got '{line}'")
        pair = ExponentPair(_parse_int(tokens[0]), _parse_int(tokens[1]))
        entries.append((pair, parse_rational(tokens[2])))
    if len(entries) != n + 1:
        raise ParseError(
            f"header announces {n + 1} entries, got {len(entries)}"
        )
    return n, d, entries


def _model_from_lines(lines: Sequence[str]) -> ReducedModel:
    _, d, entries = _entries_from_lines(lines)
    try:
        model = ReducedModel(entries)
    except ModelError as e:
        raise ParseError(str(e)) from e
    if model.degree != d:
        raise ParseError(f"header degree {d}, entries degree {model.degree}")
    return model


def parse_model(text: str) -> ReducedModel:
    """Read a model in the canonical text format, '#' starts a comment

    Raises:
        ParseError: malformed text or entries that are no reduced model
    """
    return _model_from_lines(_content_lines(text))


def entry_order(text: str) -> List[ExponentPair]:
    """Support pairs of a model text in the order its lines list them"""
    _, _, entries = _entries_from_lines(_content_lines(text))
    return [pair for pair, _ in entries]


def format_catalog(models: Iterable[ReducedModel]) -> str:
    """Model records separated by '---' lines"""
    return f"{catalog_separator}\n".join(format_model(m) for m in models)


def parse_catalog(text: str) -> List[ReducedModel]:
    models = list()
    record: List[str] = list()
    for line in _content_lines(text) + [catalog_separator]:
        if line == catalog_separator:
            if record:
                models.append(_model_from_lines(record))
            record = list()
        else:
            record.append(line)
    return models


def model_record(m: ReducedModel) -> dict:
    return {
        "n": m.n,
        "d": m.degree,
        "entries": [[p.nu, p.mu, format_rational(c)] for p, c in m],
    }


def format_catalog_json(
    n: int, d: int, models: Sequence[ReducedModel], up_to_swap: int
) -> str:
    document = {
        "n": n,
        "d": d,
        "count": len(models),
        "count_up_to_swap": up_to_swap,
        "models": [model_record(m) for m in models],
    }
    return json.dumps(document, sort_keys=True) + "\n"


def parse_catalog_json(text: str) -> List[ReducedModel]:
    try:
        document = json.loads(text)
        records = document["models"]
        entries = [
            [((nu, mu), parse_rational(c)) for nu, mu, c in record["entries"]]
            for record in records
        ]
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"malformed catalog document: {e}") from e
    try:
        return [ReducedModel(e) for e in entries]
    except ModelError as e:
        raise ParseError(str(e)) from e


def parse_support(text: str) -> List[ExponentPair]:
    """Read "nu,mu;nu,mu;..." """
    pairs = list()
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        tokens = item.split(",")
        if len(tokens) != 2:
            raise ParseError(f"expected 'nu,mu', got '{item}'")
        pairs.append(ExponentPair(*(_parse_int(t) for t in tokens)))
    if not pairs:
        raise ParseError("empty support")
    return pairs


def parse_counts(text: str) -> List[Fraction]:
    """Read "u0,u1,..." with integer or p/q entries"""
    counts = [parse_rational(token) for token in text.split(",")]
    if any(u < 0 for u in counts):
        raise ParseError("negative counts")
    return counts


def counts_by_pair(
    order: Sequence[ExponentPair], counts: Sequence[Fraction]
) -> Dict[ExponentPair, Fraction]:
    """Attach positional counts to the pairs they were written against

    Raises:
        ParseError: count and pair numbers differ
    """
    if len(counts) != len(order):
        raise ParseError(f"expected {len(order)} counts, got {len(counts)}")
    return dict(zip(order, counts))
