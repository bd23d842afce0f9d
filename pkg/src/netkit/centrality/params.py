from dataclasses import dataclass

from ..validation import check_positive_int


@dataclass(frozen=True)
class ApproxParams:
    """Sampling parameters shared by the approximate kernels.

    ``s`` is the number of sampled sources / pivots / wedges, ``epsilon`` and
    ``delta`` the additive error bound and failure probability of the
    guaranteed betweenness estimator, ``c`` its sample-size constant.
    """

    s: int = 42
    seed: object = None
    epsilon: float = 0.05
    delta: float = 0.1
    c: float = 0.5

    def __post_init__(self):
        check_positive_int(self.s, "s")
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if not 0.0 < self.delta < 1.0:
            raise ValueError(f"delta must lie in (0, 1), got {self.delta}")
        if self.c <= 0:
            raise ValueError(f"c must be positive, got {self.c}")


@dataclass(frozen=True)
class PowerIterParams:
    """Stopping rule and model constants for the power-iteration kernels."""

    tol: float = 1e-9
    max_iter: int = 1000
    damping: float = 0.85
    alpha: float = 0.1

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        check_positive_int(self.max_iter, "max_iter")
        if not 0.0 < self.damping < 1.0:
            raise ValueError(f"damping must lie in (0, 1), got {self.damping}")
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
