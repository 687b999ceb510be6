from typing import FrozenSet, Iterable

from ..common import ValidatingFixedMap

# P1 degree reachable, P2 points on both axes, P3 sharp support filter,
# P4 incremental rank, P5 support size reachable, P6 closed row prefix
pruning_rules = ("P1", "P2", "P3", "P4", "P5", "P6")

search_modes = ("collect", "count-only")

default_budget = 10**9


class SearchSpec:
    """Parameters of one enumeration cell"""

    def __init__(self):
        """SearchSpec constructor, only n and d start unset"""
        self.__values = ValidatingFixedMap(
            (
                "n",
                "d",
                "mode",
                "symmetry_report",
                "worker_count",
                "budget",
                "rules",
                "long_run",
            )
        )
        self.mode = "collect"
        self.symmetry_report = False
        self.worker_count = 1
        self.budget = default_budget
        self.rules = pruning_rules
        self.long_run = False

    @property
    def values(self):
        return self.__values

    def __str__(self):
        return str(self.__values)

    def initialized(self) -> bool:
        """Check if all fields have values

        Returns:
            bool: check result
        """
        return self.__values.initialized()

    @property
    def n(self) -> int:
        """Get simplex dimension, the support has n + 1 points

        Returns:
            int: simplex dimension
        """
        return self.__values["n"]

    @n.setter
    def n(self, value: int):
        self.__values["n"] = (
            value,
            lambda x: isinstance(x, int) and x >= 1,
            f"invalid simplex dimension '{value}'",
        )

    @property
    def d(self) -> int:
        """Get model degree

        Returns:
            int: degree
        """
        return self.__values["d"]

    @d.setter
    def d(self, value: int):
        self.__values["d"] = (
            value,
            lambda x: isinstance(x, int) and x >= 1,
            f"invalid degree '{value}'",
        )

    @property
    def mode(self) -> str:
        """Get search mode, "collect" keeps the models and "count-only"
        keeps only the counts"""
        return self.__values["mode"]

    @mode.setter
    def mode(self, value: str):
        self.__values["mode"] = (
            value,
            lambda x: x in search_modes,
            f"unknown search mode '{value}'",
        )

    @property
    def collect(self) -> bool:
        return self.mode == "collect"

    @property
    def symmetry_report(self) -> bool:
        """Get whether the swap-class count is reported"""
        return self.__values["symmetry_report"]

    @symmetry_report.setter
    def symmetry_report(self, value: bool):
        self.__values["symmetry_report"] = (
            value,
            lambda x: isinstance(x, bool),
            f"invalid symmetry report flag '{value}'",
        )

    @property
    def worker_count(self) -> int:
        return self.__values["worker_count"]

    @worker_count.setter
    def worker_count(self, value: int):
        """Set worker process count

        Args:
            value (int): process count, 1 runs in the calling process
        """
        self.__values["worker_count"] = (
            value,
            lambda x: isinstance(x, int) and x >= 1,
            f"invalid worker count '{value}'",
        )

    @property
    def budget(self) -> int:
        """Get node budget

        Returns:
            int: largest number of partial supports the search may visit
        """
        return self.__values["budget"]

    @budget.setter
    def budget(self, value: int):
        self.__values["budget"] = (
            value,
            lambda x: isinstance(x, int) and x >= 1,
            f"invalid node budget '{value}'",
        )

    @property
    def rules(self) -> FrozenSet[str]:
        """Get enabled pruning rules

        Returns:
            FrozenSet[str]: subset of pruning_rules
        """
        return self.__values["rules"]

    @rules.setter
    def rules(self, value: Iterable[str]):
        value = frozenset(value)
        self.__values["rules"] = (
            value,
            lambda x: x <= frozenset(pruning_rules),
            f"unknown pruning rules {sorted(value - set(pruning_rules))}",
        )

    def disable(self, rules: Iterable[str]):
        """Switch pruning rules off

        Args:
            rules (Iterable[str]): rule names

        Raises:
            ValueError: unknown rule name
        """
        rules = frozenset(rules)
        unknown = rules - frozenset(pruning_rules)
        if unknown:
            raise ValueError(f"unknown pruning rules {sorted(unknown)}")
        self.rules = self.rules - rules

    @property
    def long_run(self) -> bool:
        """Get whether cells beyond the desk-scale range are allowed"""
        return self.__values["long_run"]

    @long_run.setter
    def long_run(self, value: bool):
        self.__values["long_run"] = (
            value,
            lambda x: isinstance(x, bool),
            f"invalid long run flag '{value}'",
        )
