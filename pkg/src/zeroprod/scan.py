"""Range scans: closed-form probability plus measured bounds per modulus."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from zeroprod.errors import InvalidInputError
from zeroprod.factor import Factorization, factorization_str, factorize
from zeroprod.formulas import (
    GLOBAL_CAP,
    lower_bound,
    p_zn_from_factorization,
    refined_cap,
    upper_bound,
)
from zeroprod.rings import Caps, DEFAULT_CAPS, Zn, max_ann_size, zero_divisor_count


@dataclass(frozen=True)
class ScanRow:
    n: int
    factorization: Factorization
    exact: Fraction
    lower: Fraction
    upper: Fraction
    zcount: int
    maxann: int | None
    bounds_hold: bool

    @property
    def factorization_text(self) -> str:
        return factorization_str(self.factorization)


def scan_row(n: int, caps: Caps = DEFAULT_CAPS) -> ScanRow:
    """One row: exact P(Z_n) from the closed form, k and m measured."""
    f = factorize(n)
    exact = p_zn_from_factorization(f)
    spec = Zn(n)
    zcount = zero_divisor_count(spec, caps)
    maxann = max_ann_size(spec, caps)
    lower = lower_bound(n, zcount)
    upper = upper_bound(n, zcount, maxann if maxann is not None else 1)
    hold = (
        lower <= exact <= upper
        and exact <= refined_cap(n)
        and exact <= GLOBAL_CAP
    )
    return ScanRow(
        n=n,
        factorization=f,
        exact=exact,
        lower=lower,
        upper=upper,
        zcount=zcount,
        maxann=maxann,
        bounds_hold=hold,
    )


def _scan_worker(args: tuple[int, Caps]) -> ScanRow:
    n, caps = args
    return scan_row(n, caps)


def scan_rows(lo: int, hi: int, caps: Caps = DEFAULT_CAPS, jobs: int = 1):
    """Yield rows for n = lo..hi ascending; jobs > 1 parallelizes over n.

    Rows are emitted in ascending order regardless of worker count, so
    output bytes never depend on the jobs setting.
    """
    if lo < 2 or lo > hi:
        raise InvalidInputError(f"need 2 <= lo <= hi, got lo={lo} hi={hi}")
    if jobs <= 1:
        for n in range(lo, hi + 1):
            yield scan_row(n, caps)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        work = ((n, caps) for n in range(lo, hi + 1))
        yield from pool.map(_scan_worker, work, chunksize=64)
