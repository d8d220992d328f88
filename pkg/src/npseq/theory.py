"""Closed-form necessary conditions and nonexistence bounds.

Everything here is exact integer arithmetic: counting identities a classified
difference multiset must satisfy, the distinct-coefficient bounds, feasibility
of vanishing root-of-unity sums, and the floor bound B on gamma2 with its
verdict logic and table generator.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass

from .cyclotomic import _require_prime
from .diffset import GroupSubset, PdpdsParams


def dpds_counting_identity(N: int, p: int, n: int, lambda1: int, mu: int) -> bool:
    """Global count over the three-class partition, period N = n + s:

    (N - 1) * (lambda1 + mu*(p-1)) == n^2 - n.
    """
    if N < n:
        raise ValueError("period N must be at least n")
    return (N - 1) * (lambda1 + mu * (p - 1)) == n * n - n


def consecutive_constraint(s: int, n: int, lambda1: int, mu: int, p: int) -> bool:
    """Per-shift count for a consecutive zero run of length s.

    Each of the first s shifts forces n - i = lambda1 + mu*(p-1); the right
    side is fixed, so the constraint is satisfiable only for s <= 1. For s = 0
    the full-strength n = lambda1 + mu*(p-1) must hold instead.
    """
    if s < 0:
        raise ValueError("s must be nonnegative")
    rhs = lambda1 + mu * (p - 1)
    if s == 0:
        return n == rhs
    if s == 1:
        return n - 1 == rhs
    return False


def pdpds_counting_identity(params: PdpdsParams, p: int) -> bool:
    """Global count over the five-class partition with k nonzero symbols:

    (k - 1) * (lambda1 + (p-1)*mu1) + 2 * (lambda3 + (p-1)*mu2) == k^2 - k.
    """
    k = params.k
    lhs = (k - 1) * (params.lambda1 + (p - 1) * params.mu1) + 2 * (
        params.lambda3 + (p - 1) * params.mu2
    )
    return lhs == k * k - k


def second_component_counts(R: GroupSubset) -> tuple[int, ...]:
    """s_j = number of elements of R whose second component equals j."""
    counts = [0] * R.p
    for _, g in R.elements:
        counts[g] += 1
    return tuple(counts)


@dataclass(frozen=True)
class SecondComponentReport:
    """Pass/fail results of the quadratic identities on the s_j counts."""

    applicable: bool
    square_sum_ok: bool
    cross_ok: dict[int, bool]  # per shift i = 1 .. ceil((p-1)/2)
    combined_ok: dict[int, bool]  # (cross sum)*(p-1) + square sum == n^2

    @property
    def all_ok(self) -> bool:
        return (
            self.applicable
            and self.square_sum_ok
            and all(self.cross_ok.values())
            and all(self.combined_ok.values())
        )


def second_component_identities(
    s_counts: tuple[int, ...] | list[int],
    n: int,
    p: int,
    gamma1: int,
    gamma2: int,
) -> SecondComponentReport:
    """Check the quadratic constraints the s_j counts of a type-(g1,g2) set obey.

    With mu1 = (n - gamma2 - 2)/p and mu2 = (n - gamma1 - 1)/p:

        sum s_j^2             == (mu1 + gamma2)*(n-1) + (mu2 + gamma1)*2 + n
        sum s_j * s_{j-i}     == mu1*(n-1) + mu2*2          for each i
        (cross)*(p-1) + (sq)  == n^2                        for each i

    subscripts mod p, i = 1 .. ceil((p-1)/2). Inapplicable (all False except
    the flag) when the divisibility preconditions fail.
    """
    _require_prime(p)
    s_counts = tuple(s_counts)
    if len(s_counts) != p:
        raise ValueError(f"expected {p} counts, got {len(s_counts)}")
    a = n - gamma2 - 2
    c = n - gamma1 - 1
    if n > 0 and (a % p != 0 or c % p != 0):
        return SecondComponentReport(False, False, {}, {})
    mu1 = a // p if n > 0 else 0
    mu2 = c // p if n > 0 else 0
    lambda1 = mu1 + gamma2
    lambda3 = mu2 + gamma1
    square_sum = sum(s * s for s in s_counts)
    square_ok = square_sum == lambda1 * (n - 1) + lambda3 * 2 + n if n > 0 else (
        square_sum == 0
    )
    cross_ok: dict[int, bool] = {}
    combined_ok: dict[int, bool] = {}
    for i in range(1, p // 2 + 1):  # p // 2 == ceil((p-1)/2)
        cross = sum(s_counts[j] * s_counts[(j - i) % p] for j in range(p))
        expected_cross = mu1 * (n - 1) + mu2 * 2 if n > 0 else 0
        cross_ok[i] = cross == expected_cross
        combined_ok[i] = cross * (p - 1) + square_sum == n * n
    return SecondComponentReport(True, square_ok, cross_ok, combined_ok)


def ell_bounds(n: int, s: int, p: int) -> tuple[int, int]:
    """Bounds on the distinct out-of-phase coefficient count for a sequence
    with n nonzero symbols and s >= 1 consecutive zero-symbols:

    min{s, p, n} <= ell <= n - 1 + min{n, s}.
    """
    if n < 1 or s < 1:
        raise ValueError("bounds require n >= 1 and s >= 1")
    return min(s, p, n), n - 1 + min(n, s)


def lam_leung_feasible(m: int, v: int) -> bool:
    """Can v m-th roots of unity sum to zero? Necessary condition:

    v must be a nonnegative integer combination of the distinct primes
    dividing m.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if v < 0:
        raise ValueError("v must be nonnegative")
    primes = []
    rest = m
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            primes.append(d)
            while rest % d == 0:
                rest //= d
        d += 1
    if rest > 1:
        primes.append(rest)
    reachable = [False] * (v + 1)
    reachable[0] = True
    for q in primes:
        for x in range(q, v + 1):
            if reachable[x - q]:
                reachable[x] = True
    return reachable[v]


def gamma2_upper_bound(n: int, gamma1: int, gamma2: int) -> int | None:
    """The integer bound B such that a type-(gamma1, gamma2) sequence of
    period n+2 with two consecutive zero-symbols cannot exist when
    gamma2 <= B.

    With A = n - gamma2 - 2 and C = n - gamma1 - 1 the discriminant is
    D = A^2 - 4A + 8C and B = floor((-A - 4 + sqrt(D)) / 2). Returns None
    when D < 0 (the underlying quadratic constraint is vacuous and yields no
    bound). The floor is exact: math.isqrt gives floor(sqrt(D)), and since
    0 <= sqrt(D) - isqrt(D) < 1, floor((x + sqrt(D))/2) == (x + isqrt(D)) // 2
    for any integer x.
    """
    a = n - gamma2 - 2
    c = n - gamma1 - 1
    d = a * a - 4 * a + 8 * c
    if d < 0:
        return None
    return (-a - 4 + math.isqrt(d)) // 2


class VerdictStatus(enum.Enum):
    DIVISIBILITY_FAIL = "divisibility-fail"
    BOUND_FAIL = "bound-fail"
    GLOBAL_BOUND_FAIL = "global-bound-fail"  # gamma2 <= -3 never attainable
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class NonexistenceVerdict:
    status: VerdictStatus
    bound_B: int | None
    details: str

    @property
    def exists_ruled_out(self) -> bool:
        return self.status is not VerdictStatus.UNDECIDED


def nonexistence_verdict(
    n: int, p: int, gamma1: int, gamma2: int
) -> NonexistenceVerdict:
    """Apply the necessary conditions for a type-(gamma1, gamma2) sequence of
    period n+2 with two consecutive zero-symbols, in order of strength:

    1. p must divide both n - gamma2 - 2 and n - gamma1 - 1;
    2. gamma2 must exceed the floor bound B;
    3. gamma2 must exceed -3 (B is never below -3, so this is the residual
       catch-all when divisibility and the bound both pass).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    _require_prime(p)
    a = n - gamma2 - 2
    c = n - gamma1 - 1
    bound = gamma2_upper_bound(n, gamma1, gamma2)
    if a % p != 0 or c % p != 0:
        bad = []
        if a % p != 0:
            bad.append(f"{p} does not divide n-gamma2-2 = {a}")
        if c % p != 0:
            bad.append(f"{p} does not divide n-gamma1-1 = {c}")
        return NonexistenceVerdict(
            VerdictStatus.DIVISIBILITY_FAIL, bound, "; ".join(bad)
        )
    if bound is not None and gamma2 <= bound:
        return NonexistenceVerdict(
            VerdictStatus.BOUND_FAIL, bound, f"gamma2 = {gamma2} <= B = {bound}"
        )
    if gamma2 <= -3:
        return NonexistenceVerdict(
            VerdictStatus.GLOBAL_BOUND_FAIL, bound, f"gamma2 = {gamma2} <= -3"
        )
    return NonexistenceVerdict(VerdictStatus.UNDECIDED, bound, "no condition violated")


@dataclass(frozen=True)
class BoundTableRow:
    gamma1: int
    gamma2: int
    B: int | None
    not_exist: bool


def generate_bound_table(
    n: int, gamma1_list: list[int], gamma2_list: list[int]
) -> list[BoundTableRow]:
    """One row per (gamma1, gamma2) pair, lexicographic order.

    B is computed directly from A = n-gamma2-2 and C = n-gamma1-1 with no
    divisibility filter (published tables include rows where divisibility
    fails); the not_exist flag is gamma2 <= B.
    """
    rows = []
    for g1 in sorted(set(gamma1_list)):
        for g2 in sorted(set(gamma2_list)):
            b = gamma2_upper_bound(n, g1, g2)
            rows.append(BoundTableRow(g1, g2, b, b is not None and g2 <= b))
    return rows


def table_to_csv(rows: list[BoundTableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["gamma1", "gamma2", "B", "verdict"])
    for row in rows:
        writer.writerow(
            [
                row.gamma1,
                row.gamma2,
                "" if row.B is None else row.B,
                "not exist" if row.not_exist else "",
            ]
        )
    return buf.getvalue()


def table_to_json(rows: list[BoundTableRow]) -> str:
    return json.dumps(
        [
            {
                "gamma1": row.gamma1,
                "gamma2": row.gamma2,
                "B": row.B,
                "not_exist": row.not_exist,
            }
            for row in rows
        ],
        indent=None,
        separators=(",", ":"),
    )
