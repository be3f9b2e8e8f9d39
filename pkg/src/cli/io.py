from pathlib import Path
from typing import Dict, List

from pydantic import ValidationError

from src.errors import ParseError
from src.schemas import ChannelMatrix, Codebook, RealChannelMatrix, SearchBounds, SimulationFile
from src.utils.formats import parse_codebook, parse_key_values, parse_matrix

LIST_KEYS = {"snr_db", "powers", "noises"}


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", 1) from exc


def _validated(model, data: Dict, where: str):
    try:
        return model(**data)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ParseError(f"{where}: {location}: {first['msg']}", 1) from exc


def load_matrix(path) -> ChannelMatrix:
    return _validated(ChannelMatrix, {"entries": parse_matrix(read_text(path))}, str(path))


def load_real_matrix(path) -> List[List[float]]:
    return _validated(RealChannelMatrix, {"entries": parse_matrix(read_text(path), real=True)}, str(path)).entries


def load_codebook(path) -> Codebook:
    return _validated(Codebook, {"sets": parse_codebook(read_text(path))}, str(path))


def load_search_bounds(path) -> Dict:
    return parse_key_values(read_text(path))


def load_simulation_file(path) -> SimulationFile:
    pairs = parse_key_values(read_text(path))
    data: Dict = {}
    for key, value in pairs.items():
        data[key] = [part.strip() for part in value.split(",") if part.strip()] if key in LIST_KEYS else value
    unknown = set(data) - set(SimulationFile.model_fields)
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", 1)

    sim = _validated(SimulationFile, data, str(path))
    matrix = Path(sim.matrix)
    if not matrix.is_absolute():
        matrix = Path(path).parent / matrix
    return sim.model_copy(update={"matrix": str(matrix)})


def search_bounds(overrides: Dict, config_path=None) -> SearchBounds:
    data = load_search_bounds(config_path) if config_path else {}
    unknown = set(data) - set(SearchBounds.model_fields)
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", 1)
    data.update({key: value for key, value in overrides.items() if value is not None})
    return _validated(SearchBounds, data, "search bounds")
