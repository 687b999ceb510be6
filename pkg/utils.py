import json
import sys
from os import path
from typing import Tuple

from src.model.model import ReducedModel
from src.model.serialization import ParseError, parse_model

config_keys = ("jobs", "budget", "no_prune", "long_run", "format")


def parse_input(filename: str) -> dict:
    """Read a JSON configuration file

    Raises:
        ValueError: missing file, malformed JSON or unknown keys
    """
    if not path.isfile(filename):
        raise ValueError(f"file {filename} not found")
    with open(filename, "r", encoding="utf-8") as fp:
        try:
            config = json.load(fp)
        except json.JSONDecodeError as e:
            raise ValueError(f"malformed configuration {filename}: {e}")
    if not isinstance(config, dict):
        raise ValueError(f"configuration {filename} is not an object")
    unknown = sorted(set(config) - set(config_keys))
    if unknown:
        raise ValueError(f"unknown configuration keys {unknown}")
    return config


def read_text(filename: str) -> str:
    """Read a file, '-' reads standard input"""
    if filename == "-":
        return sys.stdin.read()
    if not path.isfile(filename):
        raise ValueError(f"file {filename} not found")
    with open(filename, "r", encoding="utf-8") as fp:
        return fp.read()


def read_model(filename: str) -> ReducedModel:
    return parse_model(read_text(filename))


def parse_point(text: str) -> Tuple[int, int]:
    """Read "a,b" """
    tokens = text.split(",")
    try:
        if len(tokens) != 2:
            raise ValueError
        a, b = (int(token) for token in tokens)
    except ValueError:
        raise ParseError(f"expected 'a,b', got '{text}'") from None
    return a, b
