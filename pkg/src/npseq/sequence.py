"""Almost p-ary sequences and their exact autocorrelation profiles.

A sequence of period N holds symbols that are either the zero-symbol
(modelled as None) or a p-th root of unity zeta_p^b (modelled as the
exponent b). Autocorrelation coefficients are computed exactly in Z[zeta_p]:

    C(t) = sum over i of a_i * conj(a_{i+t}),  indices cyclic mod N,

where zero-symbol positions contribute nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cyclotomic import CyclotomicInt, _canonicalize, _require_prime

Symbol = int | None  # None = zero-symbol, int = root exponent in [0, p)


@dataclass(frozen=True)
class AlmostParySequence:
    """Period-N symbol list over {zero-symbol} union {zeta_p^b}."""

    p: int
    symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        _require_prime(self.p)
        if not self.symbols:
            raise ValueError("sequence must have at least one symbol")
        for sym in self.symbols:
            if sym is not None and not 0 <= sym < self.p:
                raise ValueError(f"exponent {sym} out of range for p={self.p}")

    @property
    def period(self) -> int:
        return len(self.symbols)

    @cached_property
    def zero_positions(self) -> tuple[int, ...]:
        return tuple(i for i, sym in enumerate(self.symbols) if sym is None)

    @property
    def s(self) -> int:
        """Number of zero-symbols."""
        return len(self.zero_positions)

    @property
    def n(self) -> int:
        """Number of nonzero (root of unity) symbols."""
        return self.period - self.s

    @cached_property
    def has_consecutive_zeros(self) -> bool:
        """True iff the zero positions form one cyclic run of length s."""
        s = self.s
        if s == 0 or s == self.period:
            return True
        # a cyclic run of length s starting at r covers {r, ..., r+s-1} mod N
        zeros = set(self.zero_positions)
        start = self.zero_positions[0]
        for r in self.zero_positions:
            if {(r + j) % self.period for j in range(s)} == zeros:
                return True
        return False


def parse_sequence(p: int, text: str) -> AlmostParySequence:
    """Parse comma-separated tokens: "Z" for the zero-symbol, else an exponent.

    Example: parse_sequence(3, "Z,Z,1,1,1").
    """
    _require_prime(p)
    tokens = [tok.strip() for tok in text.split(",")]
    if tokens == [""]:
        raise ValueError("empty sequence text")
    symbols: list[Symbol] = []
    for tok in tokens:
        if tok.upper() == "Z":
            symbols.append(None)
            continue
        try:
            b = int(tok)
        except ValueError:
            raise ValueError(f"bad sequence token {tok!r}") from None
        if not 0 <= b < p:
            raise ValueError(f"exponent {b} out of range for p={p}")
        symbols.append(b)
    return AlmostParySequence(p, tuple(symbols))


def rotate(seq: AlmostParySequence, r: int) -> AlmostParySequence:
    """Cyclic left rotation by r positions (autocorrelation-invariant)."""
    N = seq.period
    r %= N
    return AlmostParySequence(seq.p, seq.symbols[r:] + seq.symbols[:r])


def shift_phase(seq: AlmostParySequence, c: int) -> AlmostParySequence:
    """Multiply every nonzero symbol by zeta_p^c (autocorrelation-invariant)."""
    return AlmostParySequence(
        seq.p,
        tuple(None if b is None else (b + c) % seq.p for b in seq.symbols),
    )


def normalize_leading_zeros(seq: AlmostParySequence) -> AlmostParySequence:
    """Rotate a consecutive-zero sequence so its zero run starts at index 0."""
    if not seq.has_consecutive_zeros:
        raise ValueError("zero-symbols are not cyclically consecutive")
    if seq.s in (0, seq.period):
        return seq
    zeros = set(seq.zero_positions)
    for r in seq.zero_positions:
        if {(r + j) % seq.period for j in range(seq.s)} == zeros:
            return rotate(seq, r)
    raise AssertionError("unreachable: has_consecutive_zeros held")


def _shift_counts(seq: AlmostParySequence, t: int) -> tuple[int, ...]:
    """Canonical coefficient vector of C(t), computed as exponent-difference counts."""
    p, N, symbols = seq.p, seq.period, seq.symbols
    counts = [0] * p
    for i in range(N):
        bi = symbols[i]
        if bi is None:
            continue
        bj = symbols[(i + t) % N]
        if bj is None:
            continue
        counts[(bi - bj) % p] += 1
    return _canonicalize(tuple(counts))


def autocorrelation(seq: AlmostParySequence, t: int) -> CyclotomicInt:
    """Exact autocorrelation coefficient C(t) for 0 <= t < period."""
    if not 0 <= t < seq.period:
        raise ValueError(f"shift {t} out of range for period {seq.period}")
    return CyclotomicInt(seq.p, _shift_counts(seq, t))


@dataclass(frozen=True)
class AutocorrelationProfile:
    """All out-of-phase coefficients C(1) .. C(N-1) plus summary flags."""

    values: tuple[CyclotomicInt, ...]
    ell: int
    all_integral: bool
    integral_values: tuple[int, ...] | None

    def value(self, t: int) -> CyclotomicInt:
        """C(t) for 1 <= t <= N-1."""
        return self.values[t - 1]


def profile(seq: AlmostParySequence) -> AutocorrelationProfile:
    """Compute C(t) for all out-of-phase shifts and the distinct-value count."""
    N = seq.period
    if N < 2:
        raise ValueError("profile needs period >= 2")
    vectors = [_shift_counts(seq, t) for t in range(1, N)]
    values = tuple(CyclotomicInt(seq.p, v) for v in vectors)
    ell = len(set(vectors))
    ints = [v.as_int() for v in values]
    all_integral = all(c is not None for c in ints)
    return AutocorrelationProfile(
        values=values,
        ell=ell,
        all_integral=all_integral,
        integral_values=tuple(ints) if all_integral else None,  # type: ignore[arg-type]
    )


@dataclass(frozen=True)
class NpsType:
    """Nearly-perfect classification: gamma1 at shifts {1, N-1}, gamma2 elsewhere."""

    gamma1: int
    gamma2: int

    @property
    def uniform(self) -> bool:
        return self.gamma1 == self.gamma2


def classify_nps(seq: AlmostParySequence) -> NpsType | None:
    """Positional nearly-perfect classification.

    Succeeds when every out-of-phase coefficient is a rational integer,
    C(1) = C(N-1) (automatic once integral, by conjugate symmetry), and all
    remaining shifts share one value gamma2. For N = 3 there are no remaining
    shifts and the type degenerates to (gamma1, gamma1).
    """
    N = seq.period
    if N < 3:
        raise ValueError("classification needs period >= 3")
    prof = profile(seq)
    if not prof.all_integral:
        return None
    ints = prof.integral_values
    assert ints is not None
    gamma1 = ints[0]
    if ints[N - 2] != gamma1:
        return None
    rest = ints[1 : N - 2]
    if not rest:
        return NpsType(gamma1, gamma1)
    gamma2 = rest[0]
    if any(v != gamma2 for v in rest):
        return None
    return NpsType(gamma1, gamma2)


def two_valued_set(seq: AlmostParySequence) -> frozenset[int] | None:
    """Relaxed check: at most two distinct integer out-of-phase values, any positions.

    Returns the value set when it applies, None otherwise. This covers
    sequences whose zero-symbols are not consecutive, where the positional
    classification above may fail.
    """
    prof = profile(seq)
    if not prof.all_integral:
        return None
    assert prof.integral_values is not None
    distinct = frozenset(prof.integral_values)
    return distinct if len(distinct) <= 2 else None
