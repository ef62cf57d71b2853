import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import IO, Any, Callable, Optional

from pydantic import BaseModel, ConfigDict, TypeAdapter, ValidationError

from app.core.classes.errors import (
    CapExceededError,
    InvalidParamsError,
    MalformedInputError,
    NotPrimeError,
)
from app.core.Interfaces.params_interface import ParamVector
from app.infra.config import RunConfig

logger = logging.getLogger(__name__)

VERSION = "0.1.0"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class VectorRequest(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    p: int
    m: int
    n1: int
    n2: int
    o1: int
    o2: int
    o1p: int
    o2p: int
    u1: int
    u2: int


def parse_vector(text: str) -> ParamVector:
    """A vector from a JSON object with named entries or a JSON list of ten integers."""
    try:
        raw = json.loads(text)
        if isinstance(raw, list):
            raw = dict(zip(VectorRequest.model_fields, raw, strict=True))
        request = VectorRequest.model_validate(raw)
    except (ValueError, ValidationError) as error:
        raise MalformedInputError(f"cannot read a vector from {text!r}") from error
    return ParamVector(**request.model_dump())


def read_vectors(args: argparse.Namespace) -> list[ParamVector]:
    texts: list[str] = list(args.vector or [])
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as handle:
                texts += [line for line in handle if line.strip()]
        except OSError as error:
            raise MalformedInputError(str(error)) from error
    if not texts:
        raise MalformedInputError("no vector given, use --vector or --file")
    return [parse_vector(text) for text in texts]


def to_json(value: Any) -> Any:
    return TypeAdapter(type(value)).dump_python(value, mode="json")


def vector_json(vector: ParamVector) -> dict[str, int]:
    return dict(to_json(vector))


@dataclass
class Output:
    """JSON lines sink; stdout unless a path is configured."""

    stream: IO[str] = field(default_factory=lambda: sys.stdout)

    def emit(self, payload: dict[str, Any]) -> None:
        line = json.dumps(
            payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False
        )
        self.stream.write(line + "\n")

    def provenance(self, config: RunConfig) -> dict[str, Any]:
        return {"config": config.model_dump(), "version": VERSION}


Command = Callable[[argparse.Namespace, RunConfig, Output], int]


def run_command(
    command: Command, args: argparse.Namespace, config: RunConfig
) -> int:
    """Runs a command and turns domain errors into exit codes."""
    handle: Optional[IO[str]] = None
    try:
        if config.out:
            handle = open(config.out, "w", encoding="utf-8")
            output = Output(handle)
        else:
            output = Output()
        return command(args, config, output)
    except (MalformedInputError, NotPrimeError) as error:
        logger.error("malformed input: %s", error)
        return EXIT_INPUT
    except InvalidParamsError as error:
        logger.error("invalid parameters: %s", error)
        return EXIT_NEGATIVE
    except CapExceededError as error:
        logger.error("resource cap: %s", error)
        return EXIT_CAP
    finally:
        if handle is not None:
            handle.close()
