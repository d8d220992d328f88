"""Difference multisets in Z_N x Z_p and their parameter classifications.

The ambient group is written additively as Z_N x Z_p (isomorphic to the
multiplicative <h> x <g> product). A sequence's nonzero positions induce the
subset R_a = {(i, b_i)}; its multiset of nonidentity differences is stored as
a dense N x p grid, which makes every classification and residual check
bit-exact.

Two classifications are supported over the nonidentity cells:

* direct-product classification (three classes): H-pure / P-pure / mixed,
  with constant multiplicities (lambda1, lambda2, mu);
* partial classification (five classes): the H-pure and mixed classes split
  into a near part {1, N-1} (multiplicities lambda3 / mu2) and a far part
  {2, ..., N-2} (lambda1 / mu1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .cyclotomic import _require_prime
from .sequence import AlmostParySequence

GroupElement = tuple[int, int]  # (h_exp mod N, g_exp mod p)


@dataclass(frozen=True)
class GroupSubset:
    """A subset of Z_N x Z_p, no duplicates."""

    N: int
    p: int
    elements: frozenset[GroupElement]

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("group order N must be positive")
        _require_prime(self.p)
        for h, g in self.elements:
            if not (0 <= h < self.N and 0 <= g < self.p):
                raise ValueError(f"element ({h},{g}) out of range for Z_{self.N} x Z_{self.p}")

    @property
    def k(self) -> int:
        return len(self.elements)


def parse_subset(N: int, p: int, text: str) -> GroupSubset:
    """Parse semicolon-separated "(h,g)" pairs, e.g. "(2,1);(3,1);(4,1)"."""
    elements: set[GroupElement] = set()
    text = text.strip()
    if text:
        for part in text.split(";"):
            part = part.strip()
            if not (part.startswith("(") and part.endswith(")")):
                raise ValueError(f"bad subset element {part!r}")
            try:
                h_str, g_str = part[1:-1].split(",")
                elements.add((int(h_str), int(g_str)))
            except ValueError:
                raise ValueError(f"bad subset element {part!r}") from None
    return GroupSubset(N, p, frozenset(elements))


def build_ra(seq: AlmostParySequence) -> GroupSubset:
    """The subset {(i, b_i) : a_i nonzero} of Z_period x Z_p."""
    return GroupSubset(
        seq.period,
        seq.p,
        frozenset((i, b) for i, b in enumerate(seq.symbols) if b is not None),
    )


@dataclass(frozen=True)
class DifferenceMultiset:
    """Multiplicity grid of all nonidentity ordered differences of a subset."""

    N: int
    p: int
    counts: tuple[tuple[int, ...], ...]  # counts[d_h][d_g]

    @cached_property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def count(self, d_h: int, d_g: int) -> int:
        return self.counts[d_h % self.N][d_g % self.p]


def difference_multiset(R: GroupSubset) -> DifferenceMultiset:
    """Count r1 - r2 over all ordered pairs of distinct elements of R."""
    grid = [[0] * R.p for _ in range(R.N)]
    elems = sorted(R.elements)
    for h1, g1 in elems:
        for h2, g2 in elems:
            if (h1, g1) == (h2, g2):
                continue
            grid[(h1 - h2) % R.N][(g1 - g2) % R.p] += 1
    return DifferenceMultiset(R.N, R.p, tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class DpdsParams:
    """Constant multiplicities of the three-class difference partition."""

    n: int  # order of the first factor (the sequence period)
    m: int  # order of the second factor
    k: int
    lambda1: int
    lambda2: int
    mu: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.n, self.m, self.k, self.lambda1, self.lambda2, self.mu)


@dataclass(frozen=True)
class PdpdsParams:
    """Constant multiplicities of the five-class (near/far split) partition."""

    n: int  # order of the first factor (the sequence period)
    m: int  # order of the second factor
    k: int
    lambda1: int
    lambda2: int
    lambda3: int
    mu1: int
    mu2: int
    # True when N = 3 leaves the far classes empty, so lambda1/mu1 are
    # reported as unconstrained zeros.
    far_class_empty: bool = field(default=False, compare=False)

    def as_tuple(self) -> tuple[int, ...]:
        return (
            self.n,
            self.m,
            self.k,
            self.lambda1,
            self.lambda2,
            self.lambda3,
            self.mu1,
            self.mu2,
        )


def _constant(values: list[int]) -> int | None:
    """The common value of a nonempty list, or None if not constant."""
    first = values[0]
    return first if all(v == first for v in values) else None


def classify_dpds(R: GroupSubset) -> DpdsParams | None:
    """Three-class classification; None unless every class is constant."""
    N, p = R.N, R.p
    grid = difference_multiset(R).counts
    h_pure = [grid[d][0] for d in range(1, N)]
    p_pure = [grid[0][e] for e in range(1, p)]
    mixed = [grid[d][e] for d in range(1, N) for e in range(1, p)]
    lambda1 = _constant(h_pure) if h_pure else 0
    lambda2 = _constant(p_pure) if p_pure else 0
    mu = _constant(mixed) if mixed else 0
    if lambda1 is None or lambda2 is None or mu is None:
        return None
    return DpdsParams(N, p, R.k, lambda1, lambda2, mu)


def classify_pdpds(R: GroupSubset) -> PdpdsParams | None:
    """Five-class classification; None unless every class is constant.

    The near class is {1, N-1} in the first coordinate (adjacent to the
    identity); the far class is {2, ..., N-2}. When N = 3 the far classes are
    empty: lambda1 and mu1 are then reported as zero with far_class_empty set.
    """
    N, p = R.N, R.p
    if N < 3:
        raise ValueError("partial classification needs N >= 3")
    grid = difference_multiset(R).counts
    near = (1, N - 1)
    far = range(2, N - 1)
    far_pure = [grid[d][0] for d in far]
    p_pure = [grid[0][e] for e in range(1, p)]
    near_pure = [grid[d][0] for d in near]
    far_mixed = [grid[d][e] for d in far for e in range(1, p)]
    near_mixed = [grid[d][e] for d in near for e in range(1, p)]
    far_empty = not far_pure
    lambda1 = 0 if far_empty else _constant(far_pure)
    lambda2 = _constant(p_pure) if p_pure else 0
    lambda3 = _constant(near_pure)
    mu1 = 0 if far_empty else _constant(far_mixed)
    mu2 = _constant(near_mixed) if near_mixed else 0
    if None in (lambda1, lambda2, lambda3, mu1, mu2):
        return None
    return PdpdsParams(
        N, p, R.k, lambda1, lambda2, lambda3, mu1, mu2, far_class_empty=far_empty
    )


def expected_pdpds_params(
    n: int, p: int, gamma1: int, gamma2: int
) -> PdpdsParams | None:
    """Parameter tuple a type-(gamma1, gamma2) sequence of period n+2 must produce.

    Defined only when p divides both n - gamma2 - 2 and n - gamma1 - 1;
    returns None otherwise (no such sequence can exist).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    _require_prime(p)
    a = n - gamma2 - 2
    c = n - gamma1 - 1
    if a % p != 0 or c % p != 0:
        return None
    mu1 = a // p
    mu2 = c // p
    return PdpdsParams(n + 2, p, n, mu1 + gamma2, 0, mu2 + gamma1, mu1, mu2)


def group_ring_residual(
    R: GroupSubset, params: PdpdsParams
) -> tuple[tuple[int, ...], ...]:
    """Cellwise difference between the five-class model grid and the actual one.

    The model evaluates, at every cell of Z_N x Z_p including the identity,

        (k - l1 - l2 + m1) * [identity] + (l1 - m1) * [H-row] + (l2 - m1) * [P-column]
        + m1 * [everywhere] + (l3 - l1) * [near, pure] + (m2 - m1) * [near, mixed]

    and subtracts the actual difference multiset plus k at the identity cell.
    An all-zero grid is equivalent to R matching params on every class.
    """
    N, p = R.N, R.p
    if N < 3:
        raise ValueError("residual check needs N >= 3")
    grid = difference_multiset(R).counts
    k, l1, l2, l3 = params.k, params.lambda1, params.lambda2, params.lambda3
    m1, m2 = params.mu1, params.mu2
    near = {1, N - 1}
    residual = []
    for d_h in range(N):
        row = []
        for d_g in range(p):
            model = m1
            if d_g == 0:
                model += l1 - m1
            if d_h == 0:
                model += l2 - m1
            if d_h == 0 and d_g == 0:
                model += k - l1 - l2 + m1
            if d_h in near:
                if d_g == 0:
                    model += l3 - l1
                else:
                    model += m2 - m1
            actual = grid[d_h][d_g]
            if d_h == 0 and d_g == 0:
                actual += k
            row.append(model - actual)
        residual.append(tuple(row))
    return tuple(residual)


def residual_is_zero(residual: tuple[tuple[int, ...], ...]) -> bool:
    return all(v == 0 for row in residual for v in row)
