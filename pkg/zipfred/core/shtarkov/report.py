"""ShtarkovReport: log2 of a Shtarkov sum and the reference bounds around it."""

from dataclasses import dataclass
from typing import Any, Dict, Optional

METHODS = ("exhaustive", "profile_grouped")


@dataclass(frozen=True)
class ShtarkovReport:
    """Worst-case redundancy R_hat = log2 S(P) of a class at block length n.

    Attributes:
        log_sum: log2 S(P). For envelope classes this is the upper end of
            the bracket.
        class_description: Serialized class.
        n: Block length.
        method: "exhaustive" or "profile_grouped".
        zipf_lower_bound: n log((k-n)/(n^alpha C)) for Zipf bases, when it applies.
        upper_bound_logkfact: log2 k!.
        lower_log_sum: Lower end of an envelope bracket.
        upper_log_sum: Upper end of an envelope bracket.
    """

    log_sum: float
    class_description: Dict[str, Any]
    n: int
    method: str
    zipf_lower_bound: Optional[float] = None
    upper_bound_logkfact: Optional[float] = None
    lower_log_sum: Optional[float] = None
    upper_log_sum: Optional[float] = None

    @property
    def is_bracket(self) -> bool:
        return self.lower_log_sum is not None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "class": self.class_description,
            "n": self.n,
            "log2_S": self.log_sum,
            "method": self.method,
            "lower_bound_thm1": self.zipf_lower_bound,
            "upper_bound_logkfact": self.upper_bound_logkfact,
        }
        if self.is_bracket:
            data["bracket"] = {"lower": self.lower_log_sum, "upper": self.upper_log_sum}
        return data
