import os
from typing import Callable, Optional

from .input import SearchSpec

max_jobs_variable = "R1D_MAX_JOBS"

# largest simplex dimension searched without the long-run flag
desk_scale_n = 5


class ConstraintsComplianceError(Exception):

    """Failed input validation error"""

    pass


class IConstraints:

    """Input constraints classes interface"""

    def __init__(self):
        """IConstraints constructor"""
        self.__constraints = list()

    def validate(self, spec: SearchSpec):
        """Validate search parameters

        Args:
            spec (SearchSpec): search parameters

        Raises:
            ConstraintsComplianceError: validation failed
        """
        for validator, err_msg_cb in self.__constraints:
            if not validator(spec):
                raise ConstraintsComplianceError(err_msg_cb(spec))

    def add(
        self,
        validator: Callable[[SearchSpec], bool],
        err_msg_cb: Callable[[SearchSpec], str] = lambda spec: str(),
    ):
        """Add constraint

        Args:
            validator (Callable[[SearchSpec], bool]): constraint's validator
                callback
            err_msg_cb (Callable[[SearchSpec], str], optional): error message
                callback
        """
        self.__constraints.append((validator, err_msg_cb))


def max_jobs() -> Optional[int]:
    """Worker cap from the environment

    Raises:
        ConstraintsComplianceError: the variable is not a positive integer
    """
    value = os.environ.get(max_jobs_variable)
    if value is None:
        return None
    try:
        cap = int(value)
    except ValueError:
        cap = 0
    if cap < 1:
        raise ConstraintsComplianceError(
            f"invalid {max_jobs_variable} value '{value}'"
        )
    return cap


class SearchSpecConstraints(IConstraints):

    """Cross-field rules of an enumeration request"""

    def __init__(self, jobs_cap: Optional[int] = None):
        """SearchSpecConstraints constructor

        Args:
            jobs_cap (Optional[int], optional): largest worker count allowed
        """
        super().__init__()
        self.add(
            lambda spec: spec.initialized(),
            lambda spec: f"incomplete search parameters {spec}",
        )
        self.add(
            lambda spec: spec.n <= desk_scale_n or spec.long_run,
            lambda spec: f"n = {spec.n} exceeds {desk_scale_n}, the search "
            "needs the long-run flag",
        )
        if jobs_cap is not None:
            self.add(
                lambda spec: spec.worker_count <= jobs_cap,
                lambda spec: f"{spec.worker_count} workers exceed the cap "
                f"of {jobs_cap}",
            )
