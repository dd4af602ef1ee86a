# Author: Victor
# Page name: fastseries.py
# Page purpose: Binary splitting for sum (A + n) (6n)!/((3n)! n!^3) (sign/C)^n and the pi computation
# Date of creation: 2026-10-16
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

import gmpy2
import mpmath
from gmpy2 import mpz
from mpmath import mpf

from errors import DivergenceError, ParameterError
from kernel import PrecisionContext, ap_rational, make_context

logger = logging.getLogger(__name__)

# t_{n+1}/t_n -> 12^3/|C|
LIMIT_BASE = 1728
EXTRA_TERMS = 8
# chunks per worker in the parallel split
CHUNKS_PER_WORKER = 4
MIN_CHUNK = 64

CHUDNOVSKY_SLOPE = 545140134
CHUDNOVSKY_CONSTANT = 13591409
CHUDNOVSKY_BASE = 640320


@dataclass(frozen=True)
class SeriesTermSpec:
    """sum over n of (offset + n) t_n, t_n = (6n)!/((3n)! n!^3) (sign/base)^n."""

    offset: Fraction
    base: Fraction
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "offset", Fraction(self.offset))
        object.__setattr__(self, "base", Fraction(self.base))
        if self.sign not in (1, -1):
            raise ParameterError(f"sign must be +1 or -1, got {self.sign}")
        if self.base == 0:
            raise ParameterError("series base must be nonzero")

    @property
    def converges(self) -> bool:
        return abs(self.base) > LIMIT_BASE

    def ratio(self, n: int) -> Fraction:
        """t_{n+1}/t_n, exact."""
        return Fraction(8 * (6 * n + 1) * (6 * n + 3) * (6 * n + 5) * self.sign, (n + 1) ** 3) / self.base

    def term(self, n: int) -> Fraction:
        """t_n from factorials, exact."""
        weight = Fraction(math.factorial(6 * n), math.factorial(3 * n) * math.factorial(n) ** 3)
        return weight * (Fraction(self.sign) / self.base) ** n

    def leaf_constants(self) -> Tuple[int, int, int, int]:
        """(p, q, offset numerator, offset denominator) with p/q = 8 sign/base in lowest terms."""
        p = 8 * self.base.denominator * self.sign
        q = self.base.numerator
        if q < 0:
            p, q = -p, -q
        g = math.gcd(p, q)
        return p // g, q // g, self.offset.numerator, self.offset.denominator

    def terms_for_bits(self, working_bits: int) -> int:
        if not self.converges:
            raise DivergenceError(f"|C| = {abs(self.base)} does not exceed 12^3; the series diverges")
        decay = math.log(abs(self.base) / LIMIT_BASE)
        return math.ceil(working_bits * math.log(2) / decay) + EXTRA_TERMS


@dataclass(frozen=True)
class SplitNode:
    """Exact state of the range [start, stop): P/Q = t_{stop-1}/t_{start-1}, T/(Q denA) = partial sum."""

    P: mpz
    Q: mpz
    T: mpz

    def merge(self, right: "SplitNode") -> "SplitNode":
        return SplitNode(self.P * right.P, self.Q * right.Q, right.Q * self.T + self.P * right.T)

    def bit_length(self) -> int:
        return max(self.P.bit_length(), self.Q.bit_length(), self.T.bit_length())

    def normalized(self) -> "SplitNode":
        """Divide out gcd(P, Q, T); P/Q and T/Q are unchanged."""
        g = gmpy2.gcd(gmpy2.gcd(self.P, self.Q), self.T)
        if g <= 1:
            return self
        return SplitNode(self.P // g, self.Q // g, self.T // g)

    def to_bytes(self) -> Tuple[bytes, bytes, bytes]:
        return gmpy2.to_binary(self.P), gmpy2.to_binary(self.Q), gmpy2.to_binary(self.T)

    @classmethod
    def from_bytes(cls, payload: Tuple[bytes, bytes, bytes]) -> "SplitNode":
        return cls(*(gmpy2.from_binary(part) for part in payload))


def _leaf(k: int, p: int, q: int, a_num: int, a_den: int) -> SplitNode:
    if k == 0:
        return SplitNode(mpz(1), mpz(1), mpz(a_num))
    big_p = mpz(6 * k - 5) * (6 * k - 3) * (6 * k - 1) * p
    big_q = mpz(k) ** 3 * q
    return SplitNode(big_p, big_q, big_p * (a_num + k * a_den))


def _split(start: int, stop: int, constants: Tuple[int, int, int, int], reduce_bits: Optional[int]) -> SplitNode:
    if stop - start == 1:
        return _leaf(start, *constants)
    middle = (start + stop) // 2
    node = _split(start, middle, constants, reduce_bits).merge(_split(middle, stop, constants, reduce_bits))
    if reduce_bits is not None and node.bit_length() > reduce_bits:
        node = node.normalized()
    return node


def binary_split(spec: SeriesTermSpec, start: int, stop: int, reduce_bits: Optional[int] = None) -> SplitNode:
    if start < 0 or stop <= start:
        raise ParameterError(f"binary_split needs 0 <= start < stop, got [{start}, {stop})")
    return _split(start, stop, spec.leaf_constants(), reduce_bits)


def _split_worker(args) -> Tuple[bytes, bytes, bytes]:
    start, stop, constants = args
    # mpz is sent back as bytes
    return _split(start, stop, constants, None).to_bytes()


def _chunks(start: int, stop: int, workers: int) -> List[Tuple[int, int]]:
    count = min(workers * CHUNKS_PER_WORKER, max(1, (stop - start) // MIN_CHUNK))
    size = -(-(stop - start) // count)
    return [(lo, min(lo + size, stop)) for lo in range(start, stop, size)]


def binary_split_parallel(spec: SeriesTermSpec, start: int, stop: int, workers: int) -> SplitNode:
    """binary_split over chunks in a process pool, merged pairwise in index order."""
    if start < 0 or stop <= start:
        raise ParameterError(f"binary_split needs 0 <= start < stop, got [{start}, {stop})")
    chunks = _chunks(start, stop, workers) if workers > 1 else []
    if len(chunks) <= 1:
        return binary_split(spec, start, stop)
    constants = spec.leaf_constants()
    logger.info("Splitting [%d, %d) into %d chunks on %d workers", start, stop, len(chunks), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        payloads = list(executor.map(_split_worker, [(lo, hi, constants) for lo, hi in chunks]))
    nodes = [SplitNode.from_bytes(payload) for payload in payloads]
    while len(nodes) > 1:
        merged = [nodes[i].merge(nodes[i + 1]) for i in range(0, len(nodes) - 1, 2)]
        if len(nodes) % 2:
            merged.append(nodes[-1])
        nodes = merged
    return nodes[0]


def split_node_value(node: SplitNode, spec: SeriesTermSpec) -> Fraction:
    return Fraction(int(node.T), int(node.Q) * spec.offset.denominator)


def direct_sum(spec: SeriesTermSpec, start: int, stop: int) -> Fraction:
    """sum_{start <= n < stop} (A + n) t_n / t_{start-1}, term by term."""
    scale = spec.term(start - 1) if start > 0 else Fraction(1)
    return sum(((spec.offset + n) * spec.term(n) for n in range(start, stop)), Fraction(0)) / scale


def sum_series(
    spec: SeriesTermSpec,
    ctx: PrecisionContext,
    terms: Optional[int] = None,
    workers: int = 1,
) -> mpf:
    """The full series to ctx precision; the only rounding is the final division."""
    if terms is None:
        terms = spec.terms_for_bits(ctx.working_bits)
    elif terms < 1:
        raise ParameterError(f"at least one term is needed, got {terms}")
    elif not spec.converges:
        raise DivergenceError(f"|C| = {abs(spec.base)} does not exceed 12^3; the series diverges")
    node = binary_split_parallel(spec, 0, terms, workers)
    logger.debug("Summed %d terms for base %s", terms, spec.base)
    with ctx.workprec():
        return mpf(int(node.T)) / (mpf(int(node.Q)) * spec.offset.denominator)


CHUDNOVSKY_SPEC = SeriesTermSpec(
    offset=Fraction(CHUDNOVSKY_CONSTANT, CHUDNOVSKY_SLOPE),
    base=Fraction(CHUDNOVSKY_BASE ** 3),
    sign=-1,
)
# tau = (-1 + sqrt(-67))/2: 880 sqrt(330)/(130851 pi)
CROSS_CHECK_SPEC = SeriesTermSpec(offset=Fraction(10177, 261702), base=Fraction(5280 ** 3), sign=-1)


def chudnovsky_pi(ctx: PrecisionContext, workers: int = 1) -> mpf:
    """pi = 640320^(3/2) / (12 * 545140134 * S)."""
    total = sum_series(CHUDNOVSKY_SPEC, ctx, workers=workers)
    with ctx.workprec():
        root = CHUDNOVSKY_BASE * mpmath.sqrt(CHUDNOVSKY_BASE)
        return root / (12 * CHUDNOVSKY_SLOPE * total)


def cross_check_pi_value(ctx: PrecisionContext) -> mpf:
    total = sum_series(CROSS_CHECK_SPEC, ctx)
    with ctx.workprec():
        return 880 * mpmath.sqrt(330) / (130851 * total)


@lru_cache(maxsize=16)
def _pi_at(working_bits: int, digits: int, target_bits: int) -> mpf:
    ctx = PrecisionContext(digits=digits, target_bits=target_bits, guard_bits=working_bits - target_bits)
    return chudnovsky_pi(ctx)


def pi_value(ctx: PrecisionContext) -> mpf:
    """pi at ctx precision from the binary-split series, cached per precision."""
    value = _pi_at(ctx.working_bits, ctx.digits, ctx.target_bits)
    with ctx.workprec():
        return +value


def truncated_digits(value: mpf, decimal_digits: int, ctx: PrecisionContext) -> str:
    """First decimal_digits significant digits of a value in [1, 10), truncated."""
    with ctx.workprec():
        scaled = int(mpmath.floor(value * mpf(10) ** (decimal_digits - 1)))
    text = str(scaled)
    if decimal_digits == 1:
        return text
    return f"{text[0]}.{text[1:]}"


def _validate_digits(decimal_digits: int):
    if isinstance(decimal_digits, bool) or not isinstance(decimal_digits, int) or decimal_digits < 1:
        raise ParameterError(f"decimal_digits must be a positive integer, got {decimal_digits!r}")


def compute_pi(decimal_digits: int, workers: int = 1) -> str:
    """pi to decimal_digits significant digits: "3" for 1, "3.141592653" for 10."""
    _validate_digits(decimal_digits)
    ctx = make_context(decimal_digits)
    return truncated_digits(chudnovsky_pi(ctx, workers=workers), decimal_digits, ctx)


def cross_check_pi(decimal_digits: int) -> str:
    """pi from the independent N = 67 series, same format as compute_pi."""
    _validate_digits(decimal_digits)
    ctx = make_context(decimal_digits)
    return truncated_digits(cross_check_pi_value(ctx), decimal_digits, ctx)


def first_term_inverse_pi(ctx: PrecisionContext) -> mpf:
    """12 * 13591409 / 640320^(3/2), the one-term approximation of 1/pi."""
    with ctx.workprec():
        return 12 * ap_rational(CHUDNOVSKY_CONSTANT) / (CHUDNOVSKY_BASE * mpmath.sqrt(CHUDNOVSKY_BASE))
