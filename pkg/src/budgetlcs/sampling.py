"""Subsampling primitives: approximate queries and the geometric-decay decision."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .budget import BudgetMeter
from .exact import HSIndex, exact_lcs_fast
from .rng import RngStream
from .strings import SymbolString, count_matching_pairs

__all__ = [
    "WhpConfig",
    "Decision",
    "log2ceil",
    "subsample_string",
    "basic_approx_query",
    "generalized_basic_approx",
    "basic_decision",
]


@dataclass(frozen=True)
class WhpConfig:
    """Tuning for high-probability guarantees.

    ``c`` is the exponent in the 1 - n^-c failure bound; ``repetition_multiplier``
    scales the log-many boosting repetitions of the estimators.
    """

    c: int = 2
    repetition_multiplier: int = 3

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError("c must be >= 1")
        if self.repetition_multiplier < 1:
            raise ValueError("repetition_multiplier must be >= 1")


class Decision(Enum):
    GEQ = "GEQ"
    LT = "LT"


def log2ceil(n: int) -> int:
    """ceil(log2(n + 1)); equals 1 at n = 1 so log factors never vanish."""
    return max(1, int(math.ceil(math.log2(n + 1))))


def smooth_log2(n: int) -> float:
    """log2(n + 1) as a real; the subsampling rate uses the un-rounded value."""
    return math.log2(n + 1)


def subsample_string(
    x: SymbolString,
    p: float,
    rng: RngStream,
    meter: BudgetMeter | None = None,
) -> SymbolString:
    """Keep each position independently with probability p, via geometric skips.

    Work is proportional to the output length plus one, not to |x|.
    """
    if not 0.0 < p <= 1.0:
        raise ValueError("p must be in (0, 1]")
    n = len(x)
    if p == 1.0 or n == 0:
        if meter is not None:
            meter.charge(1)
        return x
    # cumulative sums of Geom(p) skips are the kept 1-based positions
    expect = p * n
    batch = max(16, int(expect + 6.0 * math.sqrt(expect + 1.0) + 4))
    gaps = rng.geometric_array(p, batch)
    pos = np.cumsum(gaps)
    while pos.size and pos[-1] <= n:
        gaps = rng.geometric_array(p, batch)
        pos = np.concatenate((pos, pos[-1] + np.cumsum(gaps)))
    keep = pos[pos <= n] - 1
    if meter is not None:
        meter.charge(int(keep.size) + 1)
    return SymbolString(x.symbols[keep.astype(np.intp)], x.alphabet_size)


def _approx_query(
    x: SymbolString,
    idx: HSIndex,
    beta: float,
    cfg: WhpConfig,
    rng: RngStream,
    meter: BudgetMeter | None = None,
    pairs_hint: int | None = None,
) -> tuple[int, bool]:
    """Core of the basic approximation; also reports whether the result is exact."""
    if beta < 1:
        raise ValueError("beta must be >= 1")
    n = max(len(x), idx.y_length, 1)
    scale = 8.0 * cfg.c * smooth_log2(n)
    if beta <= scale:
        return exact_lcs_fast(x, idx, meter, pairs_hint), True
    p = scale / beta  # <= 1 by the branch condition
    sub = subsample_string(x, p, rng, meter)
    hint = None if pairs_hint is None else max(1, int(pairs_hint * p))
    return exact_lcs_fast(sub, idx, meter, hint), False


def basic_approx_query(
    x: SymbolString,
    idx: HSIndex,
    beta: float,
    cfg: WhpConfig,
    rng: RngStream,
    meter: BudgetMeter | None = None,
) -> int:
    """Estimate L(x, y) within factor beta, never exceeding the true length.

    For beta up to 8*c*log2(n+1) the exact query runs (the subsampling rate
    would exceed 1 there); otherwise x is subsampled with rate 8*c*log2(n+1)/beta
    first.  Either way the result is the exact LCS of a subsequence of x
    against y, hence a lower bound.
    """
    value, _ = _approx_query(x, idx, beta, cfg, rng, meter)
    return value


def generalized_basic_approx(
    x: SymbolString,
    y: SymbolString,
    beta: float,
    cfg: WhpConfig,
    rng: RngStream,
    meter: BudgetMeter | None = None,
    idx: HSIndex | None = None,
    pairs: int | None = None,
) -> int:
    """Basic approximation with the matching-pair floor.

    Any matching pair witnesses a common subsequence of length 1, which removes
    the additive loss of the plain query for tiny LCS values.
    """
    from .exact import hs_preprocess

    if pairs is None:
        pairs = count_matching_pairs(x, y)
        if meter is not None:
            meter.charge(len(x) + len(y) + 1)
    if idx is None:
        idx = hs_preprocess(y)
        if meter is not None:
            meter.charge(len(y) + 1)
    value = basic_approx_query(x, idx, beta, cfg, rng, meter)
    if pairs > 0:
        value = max(value, 1)
    return value


def basic_decision(
    x: SymbolString,
    idx: HSIndex,
    ell: float,
    cfg: WhpConfig,
    rng: RngStream,
    meter: BudgetMeter | None = None,
    pairs_hint: int | None = None,
) -> Decision:
    """Decide whether L(x, y) >= ell with no false positives.

    Runs the approximate query with halving beta; a GEQ answer is always
    backed by a witnessed common subsequence.  Once a query takes the exact
    path its value equals L, so the loop can settle immediately.
    """
    n = max(len(x), idx.y_length, 1)
    if not 1 <= ell <= n:
        raise ValueError("ell must satisfy 1 <= ell <= n")
    beta = n
    while True:
        value, exact = _approx_query(x, idx, float(beta), cfg, rng, meter, pairs_hint)
        if exact:
            return Decision.GEQ if value >= ell else Decision.LT
        if value >= ell:
            return Decision.GEQ
        if value <= ell / beta - 1:
            return Decision.LT
        if beta == 1:  # unreachable: beta = 1 always takes the exact path
            return Decision.LT
        beta = max(1, beta // 2)
