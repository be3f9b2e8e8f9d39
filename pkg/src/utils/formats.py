"""
Plain-text formats for matrices, codebooks and key = value config files.

Matrix: first line K, then K rows of whitespace-separated numbers.
Codebook: one line per user, comma-separated ascending integers.
Blank lines and lines starting with '#' are ignored everywhere.
"""
from math import isfinite
from typing import Dict, Iterator, List, Sequence, Tuple

from src.errors import ParseError


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield number, raw


def _tokens(raw: str, separator=None) -> Iterator[Tuple[int, str]]:
    """Tokens with their 1-based column."""
    position = 0
    parts = raw.split(separator) if separator else raw.split()
    for part in parts:
        token = part.strip()
        position = raw.index(part, position)
        column = position + (len(part) - len(part.lstrip())) + 1
        position += len(part)
        yield column, token


def _number(token: str, line: int, column: int, real: bool):
    kind = "number" if real else "integer"
    try:
        value = float(token) if real else int(token)
    except ValueError:
        raise ParseError(f"expected an {kind}, got {token!r}", line, column) from None
    if real and not isfinite(value):
        raise ParseError(f"expected a finite {kind}, got {token!r}", line, column)
    return value


def parse_matrix(text: str, *, real: bool = False) -> List[List]:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty matrix file", 1)

    # 1. Dimension
    number, raw = lines[0]
    header = list(_tokens(raw))
    if len(header) != 1:
        raise ParseError("first line must hold only K", number, header[1][0] if len(header) > 1 else 1)
    K = _number(header[0][1], number, header[0][0], real=False)
    if K < 1:
        raise ParseError(f"K must be positive, got {K}", number, header[0][0])

    # 2. Rows
    rows = lines[1:]
    if len(rows) != K:
        last = rows[-1][0] if rows else number
        raise ParseError(f"expected {K} rows, found {len(rows)}", last + (len(rows) < K))
    matrix = []
    for number, raw in rows:
        tokens = list(_tokens(raw))
        if len(tokens) != K:
            column = tokens[K][0] if len(tokens) > K else len(raw.rstrip()) + 1
            raise ParseError(f"expected {K} entries, found {len(tokens)}", number, column)
        matrix.append([_number(token, number, column, real) for column, token in tokens])
    return matrix


def parse_codebook(text: str) -> List[List[int]]:
    sets = []
    for number, raw in _lines(text):
        values = []
        for column, token in _tokens(raw, ","):
            value = _number(token, number, column, real=False)
            if values and value <= values[-1]:
                raise ParseError(f"{value} breaks the ascending order", number, column)
            values.append(value)
        sets.append(values)
    if not sets:
        raise ParseError("empty codebook file", 1)
    return sets


def format_matrix(entries: Sequence[Sequence]) -> str:
    lines = [str(len(entries))] + [" ".join(str(value) for value in row) for row in entries]
    return "\n".join(lines) + "\n"


def format_codebook(sets: Sequence[Sequence[int]]) -> str:
    return "\n".join(",".join(str(value) for value in values) for values in sets) + "\n"


def parse_key_values(text: str) -> Dict[str, str]:
    """key = value lines; repeated keys are an error."""
    pairs: Dict[str, str] = {}
    for number, raw in _lines(text):
        if "=" not in raw:
            raise ParseError("expected 'key = value'", number, len(raw) - len(raw.lstrip()) + 1)
        key, value = raw.split("=", 1)
        key = key.strip()
        if not key:
            raise ParseError("missing key", number, 1)
        if key in pairs:
            raise ParseError(f"duplicate key {key!r}", number, raw.index(key) + 1)
        pairs[key] = value.strip()
    return pairs
