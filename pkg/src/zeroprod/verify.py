"""Self-verification suites: oracles and bound invariants over a range.

Four named checks run for every n in [2, max_n]:

  triple-oracle       closed form == gcd-sum oracle == measured brute
                      count (pair enumeration additionally cross-checks
                      the gcd fast path for small n)
  ann-buckets         |Ann(0)| = l, zero-divisors have size >= 2 and
                      units size 1, k <= l - 2, and m <= l/2 when k > 0
  bounds-chain        lower <= exact <= upper <= 1/2 + 1/l^2 <= 3/4
  prime-power-profile measured annihilator profile matches the
                      valuation-partition prediction when n = p^k

A failure is reported, never raised: the caller decides the exit code.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from zeroprod.arith import rat_str
from zeroprod.errors import InvalidInputError
from zeroprod.factor import factorize
from zeroprod.formulas import (
    GLOBAL_CAP,
    ann_profile_zpk,
    lower_bound,
    p_zn_from_factorization,
    refined_cap,
    upper_bound,
)
from zeroprod.rings import (
    Caps,
    DEFAULT_CAPS,
    Zn,
    ann_profile,
    gcd_sum,
    prob_brute,
    ring_order,
)

# Pair enumeration is quadratic, so the triple-oracle check runs it only
# up to this bound by default; the gcd-sum and closed-form legs cover the
# whole range.
PAIRWISE_ORACLE_BOUND = 300


@dataclass(frozen=True)
class CheckFailure:
    check: str
    n: int
    detail: str


@dataclass
class VerifyReport:
    max_n: int
    rings_checked: int = 0
    checks_run: int = 0
    failures: list[CheckFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_n(n: int, caps: Caps, pairwise_bound: int) -> tuple[int, list[CheckFailure]]:
    failures = []
    spec = Zn(n)
    order = ring_order(spec)
    checks = 0

    closed = p_zn_from_factorization(factorize(n))
    gsum = Fraction(gcd_sum(n), n * n)
    paranoid = n <= min(pairwise_bound, caps.pairwise)
    measured = prob_brute(spec, paranoid=paranoid, caps=caps)
    checks += 1
    if not closed == gsum == measured:
        failures.append(
            CheckFailure(
                "triple-oracle",
                n,
                f"closed={rat_str(closed)} gcd-sum={rat_str(gsum)} "
                f"measured={rat_str(measured)}",
            )
        )

    profile = ann_profile(spec, caps)
    zcount = sum(profile.zdiv.values())
    maxann = max(profile.zdiv, default=None)
    checks += 1
    if profile.zero != {order: 1}:
        failures.append(
            CheckFailure("ann-buckets", n, f"zero bucket is {profile.zero}")
        )
    elif any(size < 2 for size in profile.zdiv):
        failures.append(
            CheckFailure("ann-buckets", n, f"zdiv sizes {sorted(profile.zdiv)}")
        )
    elif profile.rest != {1: order - 1 - zcount}:
        failures.append(
            CheckFailure("ann-buckets", n, f"rest bucket is {profile.rest}")
        )
    elif zcount > order - 2:
        failures.append(
            CheckFailure("ann-buckets", n, f"k = {zcount} > l - 2 = {order - 2}")
        )
    elif maxann is not None and 2 * maxann > order:
        failures.append(
            CheckFailure("ann-buckets", n, f"m = {maxann} > l/2")
        )

    lower = lower_bound(order, zcount)
    upper = upper_bound(order, zcount, maxann if maxann is not None else 1)
    checks += 1
    if not (
        lower <= measured <= upper <= refined_cap(order) <= GLOBAL_CAP
    ):
        failures.append(
            CheckFailure(
                "bounds-chain",
                n,
                f"lower={rat_str(lower)} exact={rat_str(measured)} "
                f"upper={rat_str(upper)}",
            )
        )

    f = factorize(n)
    if len(f) == 1:
        p, k = f[0]
        checks += 1
        if ann_profile_zpk(p, k) != profile:
            failures.append(
                CheckFailure(
                    "prime-power-profile",
                    n,
                    f"predicted {ann_profile_zpk(p, k)} measured {profile}",
                )
            )
    return checks, failures


def _verify_worker(args: tuple[int, Caps, int]) -> tuple[int, list[CheckFailure]]:
    n, caps, pairwise_bound = args
    return _check_n(n, caps, pairwise_bound)


def run_verify(
    max_n: int,
    caps: Caps = DEFAULT_CAPS,
    jobs: int = 1,
    pairwise_bound: int = PAIRWISE_ORACLE_BOUND,
) -> VerifyReport:
    """Run every check for 2 <= n <= max_n and collect failures."""
    if max_n < 2:
        raise InvalidInputError("max_n must be >= 2")
    report = VerifyReport(max_n=max_n)
    if jobs <= 1:
        results = (_check_n(n, caps, pairwise_bound) for n in range(2, max_n + 1))
        for checks, failures in results:
            report.rings_checked += 1
            report.checks_run += checks
            report.failures.extend(failures)
        return report
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        work = ((n, caps, pairwise_bound) for n in range(2, max_n + 1))
        for checks, failures in pool.map(_verify_worker, work, chunksize=32):
            report.rings_checked += 1
            report.checks_run += checks
            report.failures.extend(failures)
    return report
