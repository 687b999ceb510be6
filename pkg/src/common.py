import sys
from typing import Any, Callable, Tuple

_verbose = False


def set_verbose(enabled: bool) -> None:
    """Switch diagnostic logging on or off

    Args:
        enabled (bool): whether log lines are written
    """
    global _verbose
    _verbose = enabled


def verbose() -> bool:
    return _verbose


def log(scope: str, msg: str) -> None:
    """Write a diagnostic line to stderr when verbose mode is on, stdout is
    reserved for deterministic command output

    Args:
        scope (str): prefix naming the emitting module
        msg (str): message
    """
    if _verbose:
        print(f"{scope}: {msg}", file=sys.stderr)


class ValidatingFixedMap:

    """Dictionary with a fixed key set whose values are validated on insert"""

    def __init__(self, keys: Tuple[Any]):
        """ValidatingFixedMap constructor

        Args:
            keys (Tuple[Any]): allowed keys, all initially unset
        """
        self.__values = dict.fromkeys(keys, None)

    def __iter__(self):
        return self.__values.__iter__()

    def __getitem__(self, key):
        return self.__values[key]

    def __setitem__(self, key, item: Tuple[Any, Callable, str]):
        """Insert an element

        Args:
            key (TYPE): key, must be one of the constructor keys
            item (Tuple[Any, Callable, str]): tuple consisting of an inserted
                value, validator and error message

        Raises:
            KeyError: unknown key
            ValueError: validation failed
        """
        if key not in self.__values:
            raise KeyError(f"no '{key}' field")
        value, validator, err_msg = item
        if not validator(value):
            raise ValueError(err_msg)
        self.__values[key] = value

    def __str__(self) -> str:
        return str(self.__values)

    def __repr__(self) -> str:
        return self.__values.__repr__()

    def __len__(self) -> int:
        return len(self.__values)

    def keys(self):
        return self.__values.keys()

    def initialized(self) -> bool:
        """Check if all fields have values

        Returns:
            bool: check result
        """
        return all(item is not None for item in self.__values.values())
