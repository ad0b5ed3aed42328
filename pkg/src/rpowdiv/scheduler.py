"""Full r-power divisor search: brute-force head plus dyadic lattice ranges.

Candidates p in [2, 2^k] are tested directly. Above that, [2^k, N^(1/r)]
is split into dyadic ranges [2^j, 2^(j+1)], each with its own (d, m, H),
and every range is tiled by windows [P - H, P + H] searched with the
lattice method.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coppersmith import SearchParams, WindowResult, search_window
from .errors import InputError, InvariantError
from .poly import ceil_log2, integer_kth_root


@dataclass(frozen=True)
class IntervalParams:
    d: int
    m: int
    H: int


@dataclass(frozen=True)
class RangeSpec:
    T: int
    T_end: int
    params: IntervalParams
    windows: tuple[tuple[int, int], ...]  # (P, H) per window


@dataclass(frozen=True)
class RangePlan:
    N: int
    r: int
    k: int
    root: int
    ranges: tuple[RangeSpec, ...]

    @property
    def head_bound(self) -> int:
        return 1 << self.k

    @property
    def interval_count(self) -> int:
        return sum(len(rs.windows) for rs in self.ranges)


@dataclass
class DivisorReport:
    n: int
    r: int
    divisors: tuple[int, ...]
    interval_count: int = 0
    lll_calls: int = 0
    lattice_dim: int = 0
    head_bound: int = 0
    ms: float = 0.0
    windows: list[WindowResult] = field(default_factory=list, repr=False, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        stats = {
            "intervals": self.interval_count,
            "lll_calls": self.lll_calls,
            "d": self.lattice_dim,
            "head_bound": self.head_bound,
        }
        if timing:
            stats["ms"] = round(self.ms, 3)
        return {"n": self.n, "r": self.r, "divisors": list(self.divisors), "stats": stats}


def _check_nr(N: int, r: int) -> None:
    if N < 2:
        raise InputError(f"N must be >= 2, got {N}")
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")


def head_exponent(N: int, r: int) -> int:
    """Least k with k^2 r >= 4 ceil(lg N), i.e. ceil(2 sqrt(ceil(lg N)/r))."""
    L = ceil_log2(N)
    k = integer_kth_root(4 * L // r, 2)
    while k * k * r < 4 * L:
        k += 1
    while k > 1 and (k - 1) ** 2 * r >= 4 * L:
        k -= 1
    return max(k, 1)


def lattice_shape(N: int, r: int, T: int) -> tuple[int, int]:
    """d = ceil(lg N) + 1 and the largest m with N^m <= T^(d-1)."""
    d = ceil_log2(N) + 1
    bound = T ** (d - 1)
    lo, hi = 0, d - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if N**mid <= bound:
            lo = mid
        else:
            hi = mid - 1
    return d, lo


def range_lower_bound_ok(N: int, r: int, T: int) -> bool:
    """Sufficient exact test of T >= 4^sqrt(lg N / r): floor(lg T)^2 r >= 4 ceil(lg N).

    Exact when T is a power of two, which is the only case the scheduler uses.
    """
    t = T.bit_length() - 1
    return t * t * r >= 4 * ceil_log2(N)


def compute_interval_params(N: int, r: int, T: int) -> IntervalParams:
    """(d, m, H) for a range starting at T; H is the largest integer below
    Htilde, where Htilde^(d(d-1)) = T^(2drm) / (d^d 2^(d(d-1)/2) N^(rm(m+1)))."""
    _check_nr(N, r)
    if (1 << r) > N:
        raise InputError(f"need 2^r <= N (r={r})")
    if T < 2 or T**r > N:
        raise InputError(f"need 2 <= T <= N^(1/r), got T={T}")
    if not range_lower_bound_ok(N, r, T):
        raise InputError(f"T={T} is below 4^sqrt(lg N / r)")
    d, m = lattice_shape(N, r, T)
    num = T ** (2 * d * r * m)
    den = d**d * N ** (r * m * (m + 1)) << (d * (d - 1) // 2)
    e = d * (d - 1)
    H = integer_kth_root(num // den, e)
    while (H + 1) ** e * den < num:
        H += 1
    while H > 0 and H**e * den >= num:
        H -= 1
    if H < 2 or m * r > d - 1:
        raise InvariantError(f"parameter choice failed for T={T}: m={m}, H={H}")
    return IntervalParams(d, m, H)


def _range_windows(T: int, T_end: int, H: int, root: int) -> tuple[tuple[int, int], ...]:
    count = -(-(T_end - T) // (2 * H))
    out = []
    for j in range(count):
        P = T + (2 * j + 1) * H
        Hw = H
        if j == count - 1 and P > root:
            P = root
            Hw = min(H, P - T)
        out.append((P, Hw))
    return tuple(out)


def plan_range(N: int, r: int, T: int, T_end: int) -> RangeSpec:
    root = integer_kth_root(N, r)
    if not T < T_end <= root:
        raise InputError(f"need T < T' <= floor(N^(1/r)), got T={T}, T'={T_end}")
    params = compute_interval_params(N, r, T)
    return RangeSpec(T, T_end, params, _range_windows(T, T_end, params.H, root))


def plan(N: int, r: int) -> RangePlan:
    _check_nr(N, r)
    if (1 << r) > N:
        raise InputError(f"need 2^r <= N (r={r})")
    k = head_exponent(N, r)
    root = integer_kth_root(N, r)
    ranges = []
    j = k
    while (1 << j) < root:
        T = 1 << j
        ranges.append(plan_range(N, r, T, min(T << 1, root)))
        j += 1
    result = RangePlan(N, r, k, root, tuple(ranges))
    _check_coverage(result)
    return result


def _check_coverage(pl: RangePlan) -> None:
    covered = min(pl.head_bound, pl.root)
    for rs in pl.ranges:
        for P, H in rs.windows:
            if P - H > covered:
                raise InvariantError(f"gap in coverage below {P - H}")
            covered = max(covered, P + H)
    if covered < pl.root:
        raise InvariantError(f"coverage stops at {covered} < {pl.root}")


def brute_force_head(N: int, r: int, k: int) -> set[int]:
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    top = min(1 << k, integer_kth_root(N, r))
    return {p for p in range(2, top + 1) if N % p**r == 0}


def _window_task(args: tuple) -> WindowResult:
    N, r, d, m, P, H, backend = args
    params = SearchParams(N, r, m, d, P, H)
    try:
        params.validate()
    except InputError as exc:
        raise InvariantError(f"scheduler built an invalid window: {exc}") from exc
    return search_window(params, backend)


def _run_windows(tasks: list[tuple], workers: int) -> list[WindowResult]:
    if workers <= 1 or len(tasks) <= 1:
        return [_window_task(t) for t in tasks]
    chunk = max(1, len(tasks) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_window_task, tasks, chunksize=chunk))


def _tasks(N: int, r: int, ranges, backend: str) -> list[tuple]:
    return [
        (N, r, rs.params.d, rs.params.m, P, H, backend)
        for rs in ranges
        for P, H in rs.windows
    ]


def search_range(
    N: int, r: int, T: int, T_end: int, *, workers: int = 1, backend: str = "auto"
) -> set[int]:
    """All p in [T, T'] with p^r | N."""
    rs = plan_range(N, r, T, T_end)
    found: set[int] = set()
    for res in _run_windows(_tasks(N, r, [rs], backend), workers):
        found.update(p for p in res.divisors if T <= p <= T_end)
    return found


def find_r_power_divisors(
    N: int,
    r: int,
    *,
    workers: int = 1,
    include_one: bool = False,
    keep_windows: bool = False,
    backend: str = "auto",
) -> DivisorReport:
    """Every p >= 2 with p^r | N (plus 1 when ``include_one``)."""
    _check_nr(N, r)
    start = time.perf_counter()
    extra = {1} if include_one else set()
    if (1 << r) > N:
        return DivisorReport(N, r, tuple(sorted(extra)), ms=(time.perf_counter() - start) * 1e3)

    pl = plan(N, r)
    found = brute_force_head(N, r, pl.k) | extra
    results = _run_windows(_tasks(N, r, pl.ranges, backend), workers)
    for res in results:
        found.update(res.divisors)
    return DivisorReport(
        n=N,
        r=r,
        divisors=tuple(sorted(found)),
        interval_count=pl.interval_count,
        lll_calls=len(results),
        lattice_dim=pl.ranges[0].params.d if pl.ranges else 0,
        head_bound=pl.head_bound,
        ms=(time.perf_counter() - start) * 1e3,
        windows=results if keep_windows else [],
    )


def smallest_r_power_divisor(N: int, r: int, *, backend: str = "auto") -> int | None:
    """Least p >= 2 with p^r | N, or None.

    Scans the head, then windows in ascending order of P, and stops at
    the first window that reports anything. The windows seen so far cover
    [2^k, P + H] without gaps and each window is complete, so nothing
    smaller can turn up later.
    """
    _check_nr(N, r)
    if (1 << r) > N:
        return None
    pl = plan(N, r)
    head = brute_force_head(N, r, pl.k)
    if head:
        return min(head)
    for task in _tasks(N, r, pl.ranges, backend):
        res = _window_task(task)
        if res.divisors:
            return min(res.divisors)
    return None
