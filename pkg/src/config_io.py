"""
Configuration Files - flagtwist

Reads and writes conic configurations as JSON:

    {"conics": [{"q": [GaussRat, GaussRat, GaussRat], "m": [...]}, ...]}

with GaussRat = {"re": "num/den", "im": "num/den"}. Twistor fibers may omit
"m". Coordinates are canonicalized on load, so a save/load round trip is
lossless.
"""

import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.curves import Conic
from src.errors import ConfigParseError, FlagTwistError
from src.flag_geometry import Configuration, classify_config, make_twistor_fiber
from src.gaussrat import GaussRat
from src.proj_point import ProjPoint
from src.validation import validate_fraction_string

logger = logging.getLogger(__name__)


class GaussRatRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    re: str
    im: str

    @field_validator("re", "im")
    @classmethod
    def _fraction(cls, value: str) -> str:
        if not validate_fraction_string(value):
            raise ValueError(f"not a 'num/den' fraction with nonzero denominator: {value!r}")
        return value

    def to_gaussrat(self) -> GaussRat:
        return GaussRat.from_record({"re": self.re, "im": self.im})


class ConicRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    q: List[GaussRatRecord] = Field(min_length=3, max_length=3)
    m: Optional[List[GaussRatRecord]] = Field(default=None, min_length=3, max_length=3)

    def to_conic(self) -> Conic:
        q = ProjPoint([x.to_gaussrat() for x in self.q])
        if self.m is None:
            return make_twistor_fiber(q)
        return Conic(q, ProjPoint([x.to_gaussrat() for x in self.m]))


class ConfigurationRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")

    conics: List[ConicRecord] = Field(min_length=1)


def _field_path(location: tuple) -> str:
    path = ""
    for part in location:
        path += f"[{part}]" if isinstance(part, int) else (f".{part}" if path else str(part))
    return path


def parse_config(text: str, source: str = "<string>") -> Configuration:
    """
    Parse configuration JSON text.

    Raises:
        ConfigParseError: With line/column for JSON syntax errors, the field
            path for schema errors, or the conic index for geometric errors
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigParseError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc

    try:
        record = ConfigurationRecord.model_validate(data)
    except ValidationError as exc:
        problems = "; ".join(f"{_field_path(e['loc'])}: {e['msg']}" for e in exc.errors())
        raise ConfigParseError(f"{source}: {problems}") from exc

    conics = []
    for index, conic_record in enumerate(record.conics):
        try:
            conics.append(conic_record.to_conic())
        except FlagTwistError as exc:
            raise ConfigParseError(f"{source}: conics[{index}]: {exc}") from exc
    try:
        return classify_config(conics)
    except FlagTwistError as exc:
        raise ConfigParseError(f"{source}: {exc}") from exc


def load_config(path: Union[str, Path]) -> Configuration:
    """Read and parse a configuration file."""
    path = Path(path)
    logger.debug("loading configuration from %s", path)
    return parse_config(path.read_text(encoding="utf-8"), source=str(path))


def config_to_record(config: Configuration) -> dict:
    """Canonical record; m is always written out."""
    return {"conics": [c.to_record() for c in config]}


def dump_config(config: Configuration) -> str:
    return json.dumps(config_to_record(config), indent=2, sort_keys=True) + "\n"


def save_config(config: Configuration, path: Union[str, Path]) -> Path:
    """Write config as canonical JSON and return the path."""
    path = Path(path)
    path.write_text(dump_config(config), encoding="utf-8")
    logger.info("wrote %d conics to %s", config.n, path)
    return path
