"""Seeded Monte Carlo estimation of the zero-product probability.

Simulates the defining experiment directly: draw ordered pairs (x, y)
uniformly with replacement from Z_n and count products equal to zero.
Draws come from splitmix64 with rejection (see zeroprod.kernels), so a
given (n, samples, seed) triple reproduces bit for bit on any platform.
The deviation test against the exact value is done in exact rational
arithmetic: the estimate is within 3 standard errors iff

    (hits/samples - P)^2 <= 9 * P(1-P) / samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from zeroprod import kernels
from zeroprod.arith import as_natural, rat_make
from zeroprod.errors import ExcludedRingError, InvalidInputError
from zeroprod.formulas import p_zn

DEFAULT_SEED = 12345

_SAMPLER_LIMIT = 1 << 64


@dataclass(frozen=True)
class MonteCarloResult:
    n: int
    samples: int
    seed: int
    hits: int
    estimate: Fraction
    exact: Fraction
    abs_deviation: Fraction
    std_error_sq: Fraction
    within_3se: bool


def estimate_zero_pairs(
    n: int, samples: int, seed: int = DEFAULT_SEED
) -> MonteCarloResult:
    """Run the sampling experiment and compare against the exact value."""
    if as_natural(n, "n") < 2:
        raise ExcludedRingError(
            f"Zn({n}) is excluded: the zero ring and rings without an "
            "identity distinct from 0 are exempt"
        )
    if n >= _SAMPLER_LIMIT:
        raise InvalidInputError("the 64-bit sampler supports n < 2**64 only")
    if as_natural(samples, "samples") < 1:
        raise InvalidInputError("samples must be >= 1")
    as_natural(seed, "seed")
    hits = kernels.mc_zero_pairs_zn(n, samples, seed)
    estimate = rat_make(hits, samples)
    exact = p_zn(n)
    deviation = abs(estimate - exact)
    se_sq = exact * (1 - exact) / samples
    within = deviation * deviation <= 9 * se_sq
    return MonteCarloResult(
        n=n,
        samples=samples,
        seed=seed,
        hits=hits,
        estimate=estimate,
        exact=exact,
        abs_deviation=deviation,
        std_error_sq=se_sq,
        within_3se=within,
    )
