"""Outer multiplicities of the tensor square, computed two independent ways.

The combinatorial route enumerates (or counts) congruence-chain shapes and
buckets them by component label.  The analytic route assembles a matrix of
shifted theta series, one row per quadratic-residue class of exponents,
and solves for the generating functions by Cramer's rule.  Both routes
must agree; the package's tests and the `verify` CLI exercise exactly that
agreement.

The matrix construction is proven for an odd prime modulus and for twice 1
or twice an odd prime.  For other moduli the same formulas are applied
only in conjecture mode, and results are reported rather than asserted.
"""

import functools
from dataclasses import dataclass

from . import qseries as qs
from .qseries import QSeries
from .weightlat import classify_maximal
from .young import Partition, enumerate_maximal_shapes

__all__ = [
    "TableEntry",
    "MultiplicityTable",
    "ThetaMatrix",
    "UnsupportedModulusError",
    "NonUnitDeterminantError",
    "theta_branch",
    "multiplicity_table",
    "count_by_component",
    "count_maximal_shapes",
    "gf_comb",
    "gf_theta",
    "master_coefficient",
    "residue_block",
    "coefficient_matrix",
    "entry_via_separation",
    "master_discrepancy",
    "verify_master",
]


class UnsupportedModulusError(ValueError):
    """Theta pipeline requested for a modulus outside the proven branches."""


class NonUnitDeterminantError(ValueError):
    """The assembled matrix cannot be inverted exactly over the integers."""


# -- combinatorial route ---------------------------------------------------


@dataclass(frozen=True)
class TableEntry:
    count: int
    witnesses: tuple[Partition, ...]
    omitted: int = 0


@dataclass
class MultiplicityTable:
    """Map (i, k) -> multiplicity with witness shapes; treat as immutable."""

    n: int
    max_k: int
    entries: dict[tuple[int, int], TableEntry]

    def rows(self):
        """Entries ordered by (i, k)."""
        for key in sorted(self.entries):
            yield key, self.entries[key]


def multiplicity_table(n: int, max_k: int, witness_cap: int | None = None) -> MultiplicityTable:
    """Enumerate and classify every chain shape with k up to max_k."""
    if n < 2 or max_k < 0:
        raise ValueError("need n >= 2 and max_k >= 0")
    entries: dict[tuple[int, int], TableEntry] = {}
    for i in range(n // 2 + 1):
        for k in range(i, max_k + 1):
            boxes = i * i + (k - i) * n
            members = enumerate_maximal_shapes(n, boxes)
            witnesses = tuple(p for p in members if classify_maximal(p, n).i == i)
            kept = witnesses if witness_cap is None else witnesses[:witness_cap]
            entries[(i, k)] = TableEntry(len(witnesses), kept, len(witnesses) - len(kept))
    return MultiplicityTable(n, max_k, entries)


class _ChainCounter:
    """Counts chain shapes by component index without materializing them.

    The congruence chain forces every multiplicity from the part sequence,
    so the recursion branches on parts only; subtree counts depend only on
    (previous part, previous multiplicity, remaining boxes, rows mod n)
    and are memoized across box counts.
    """

    def __init__(self, n: int):
        self.n = n
        self.classes = n // 2 + 1
        self.memo: dict[tuple[int, int, int, int], tuple[int, ...]] = {}

    def _component(self, part: int, mult: int, rows_before: int) -> int:
        n = self.n
        return min((part - rows_before) % n, (-(rows_before + mult)) % n)

    def per_class(self, boxes: int) -> tuple[int, ...]:
        n = self.n
        totals = [0] * self.classes
        if boxes < 0:
            return tuple(totals)
        if boxes == 0:
            totals[0] = 1
            return tuple(totals)
        for part in range(boxes, 0, -1):
            mult = part % n
            if mult == 0:
                continue
            cost = part * mult
            if cost > boxes:
                continue
            if cost == boxes:
                totals[self._component(part, mult, 0)] += 1
            else:
                for idx, c in enumerate(self._complete(part, mult, boxes - cost, mult % n)):
                    totals[idx] += c
        return tuple(totals)

    def _complete(self, prev_part: int, prev_mult: int, rem: int, rows: int) -> tuple[int, ...]:
        key = (prev_part, prev_mult, rem, rows)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        n = self.n
        totals = [0] * self.classes
        for part in range(min(prev_part - 1, rem), 0, -1):
            mult = (-(prev_mult + prev_part - part)) % n
            if mult == 0:
                continue
            cost = part * mult
            if cost > rem:
                continue
            if cost == rem:
                totals[self._component(part, mult, rows)] += 1
            else:
                for idx, c in enumerate(self._complete(part, mult, rem - cost, (rows + mult) % n)):
                    totals[idx] += c
        result = tuple(totals)
        self.memo[key] = result
        return result


@functools.lru_cache(maxsize=None)
def _chain_counter(n: int) -> _ChainCounter:
    return _ChainCounter(n)


def count_by_component(n: int, boxes: int) -> tuple[int, ...]:
    """Chain-shape counts at one box count, indexed by component index."""
    if n < 2:
        raise ValueError("modulus n must be at least 2")
    return _chain_counter(n).per_class(boxes)


def count_maximal_shapes(n: int, boxes: int) -> int:
    """Total number of chain shapes with the given box count (0 if negative)."""
    return sum(count_by_component(n, boxes))


def gf_comb(i: int, n: int, order: int) -> QSeries:
    """Multiplicity generating function from enumeration:
    coefficient of q^m is the count at i^2 + m*n boxes in component i."""
    if not 0 <= i <= n // 2:
        raise ValueError("component index out of range")
    if order < 1:
        raise ValueError("order must be at least 1")
    counter = _chain_counter(n)
    coeffs = [counter.per_class(i * i + m * n)[i] for m in range(order)]
    return QSeries.from_coeffs(coeffs, order)


# -- theta route -----------------------------------------------------------


@dataclass(frozen=True)
class ThetaMatrix:
    n: int
    branch: str
    order: int
    entries: tuple[tuple[QSeries, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def minor(self, row: int, col: int) -> tuple[tuple[QSeries, ...], ...]:
        return tuple(
            tuple(entry for j, entry in enumerate(r) if j != col)
            for idx, r in enumerate(self.entries)
            if idx != row
        )


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def theta_branch(n: int) -> tuple[str, bool]:
    """Branch name and whether the matrix construction is proven for n."""
    if n < 2:
        raise ValueError("modulus n must be at least 2")
    if n % 2:
        return ("odd-prime", True) if _is_prime(n) else ("odd-conjectured", False)
    half = n // 2
    if half == 1 or (half % 2 == 1 and _is_prime(half)):
        return ("two-p", True)
    return ("even-conjectured", False)


def residue_block(i: int, j: int, n: int, order: int) -> QSeries:
    """Theta block carrying the exponent class of (i + j)^2 in the
    residue decomposition; plus-signed for even n, alternating for odd."""
    a = n * (n + 3) // 2 - 2 * i - (n + 2) * j
    b = n * (n + 1) // 2 + 2 * i + (n + 2) * j
    if a + b <= 0:
        raise ValueError("degenerate block exponents")
    build = qs.theta_f if n % 2 == 0 else qs.theta_g
    return build(a, b, order)


def master_coefficient(i: int, n: int, order: int) -> QSeries:
    """q^(i^2) times the theta factor pairing with the i-th generating
    function in the product identity."""
    shift = i * i
    return qs.theta_g(2 * i + 1, n + 1 - 2 * i, order - shift).shift(shift)


def _entry_terms(j: int, i: int, n: int):
    """Class indices t contributing to matrix entry (j, i), with the sign
    (-1)^t and the exponent prefactor t(t-1)/2 + floor((t+i)^2 / n)."""
    for t in sorted({(j - i) % n, (-j - i) % n}):
        yield t, (-1 if t % 2 else 1), t * (t - 1) // 2 + ((t + i) ** 2) // n


def coefficient_matrix(n: int, order: int, conjecture: bool = False) -> ThetaMatrix:
    """Assemble the linear system's coefficient matrix at the given order.

    Row j collects the blocks whose exponents lie in the class of j^2;
    every assembled entry must come out with nonnegative valuation.
    """
    branch, proven = theta_branch(n)
    if not proven and not conjecture:
        raise UnsupportedModulusError(
            f"matrix construction for n={n} is conjectural; pass conjecture=True to build it"
        )
    size = n // 2 + 1
    rows = []
    for j in range(size):
        row = []
        for i in range(size):
            entry = QSeries.zero(order)
            for t, sign, shift in _entry_terms(j, i, n):
                block = residue_block(i, t, n, order - shift).shift(shift)
                entry = entry + (block if sign > 0 else -block)
            if not entry.is_zero and entry.lowest < 0:
                raise ValueError(f"entry ({j}, {i}) for n={n} has negative valuation")
            row.append(entry)
        rows.append(tuple(row))
    return ThetaMatrix(n, branch, order, tuple(rows))


def entry_via_separation(j: int, i: int, n: int, order: int) -> QSeries:
    """Matrix entry rebuilt through the explicit residue-class separation.

    Terms are assembled in the original variable, checked to live in the
    exponent class of j^2 modulo n, stripped of that residue, and pushed
    through the checked exponent division q^n -> q.  Must equal the entry
    produced by `coefficient_matrix`.
    """
    residue = (j * j) % n
    pre_order = n * order + residue
    pre = QSeries.zero(pre_order)
    for t, sign, _ in _entry_terms(j, i, n):
        shift = n * t * (t - 1) // 2 + (t + i) ** 2
        block_order = -(-(pre_order - shift) // n)
        term = residue_block(i, t, n, block_order).expand(n).shift(shift).truncate(pre_order)
        pre = pre + (term if sign > 0 else -term)
    if not pre.is_zero:
        for idx, c in enumerate(pre.coeffs):
            if c and (pre.lowest + idx) % n != residue:
                raise ValueError(
                    f"exponent {pre.lowest + idx} escapes class {residue} mod {n}"
                )
    return pre.shift(-residue).contract(n)


def gf_theta(i: int, n: int, order: int, conjecture: bool = False) -> QSeries:
    """Multiplicity generating function from the theta-matrix route.

    Solves by Cramer's rule with exact integer division.  The determinant
    may carry a positive power of q (its leading row can be divisible by
    q, as happens for n = 6); that power must also divide the numerator
    and is cancelled before inverting, so only a non-unit leading
    coefficient is an error.
    """
    if not 0 <= i <= n // 2:
        raise ValueError("component index out of range")
    if order < 1:
        raise ValueError("order must be at least 1")
    # Work with enough headroom to see past the determinant's valuation,
    # which is invisible when it reaches the truncation bound itself.
    extra = 0
    while True:
        matrix = coefficient_matrix(n, order + extra, conjecture)
        full_det = qs.det(matrix.entries)
        if not full_det.is_zero and full_det.lowest <= extra:
            break
        if extra >= 32:
            raise NonUnitDeterminantError(
                f"determinant for n={n} vanishes to high order; system is singular"
            )
        extra = max(2 * extra, 8)
    if full_det.coeffs[0] not in (1, -1):
        raise NonUnitDeterminantError(
            f"determinant for n={n} has leading coefficient other than +-1; "
            "cannot divide exactly"
        )
    valuation = full_det.lowest
    numerator = qs.euler_phi(matrix.order) * qs.det(matrix.minor(0, i))
    if i % 2:
        numerator = -numerator
    if not numerator.is_zero and numerator.lowest < valuation:
        raise NonUnitDeterminantError(
            f"numerator valuation below determinant valuation for n={n}, i={i}"
        )
    quotient = numerator.shift(-valuation) * full_det.shift(-valuation).invert()
    return quotient.truncate(order)


# -- consistency identity ---------------------------------------------------


def master_discrepancy(
    n: int,
    order: int,
    series: list[QSeries] | None = None,
    method: str = "comb",
    conjecture: bool = False,
) -> tuple[int, int, int] | None:
    """First failing exponent of the product identity, or None if it holds.

    The identity equates the stride-n Euler product with the sum over
    components of the master coefficient times the generating function
    evaluated at q^n.  Generating functions come from `method` unless an
    explicit list is supplied.
    """
    if n < 2 or order < 1:
        raise ValueError("need n >= 2 and order >= 1")
    if series is None:
        sub_order = -(-order // n)
        if method == "comb":
            series = [gf_comb(i, n, sub_order) for i in range(n // 2 + 1)]
        elif method == "theta":
            series = [gf_theta(i, n, sub_order, conjecture) for i in range(n // 2 + 1)]
        else:
            raise ValueError("method must be 'comb' or 'theta'")
    if len(series) != n // 2 + 1:
        raise ValueError("one generating function per component index is required")
    lhs = qs.euler_phi(order, stride=n)
    total = QSeries.zero(order)
    for i, s in enumerate(series):
        if s.order * n < order:
            raise ValueError("supplied series are too short for the requested order")
        total = total + master_coefficient(i, n, order) * s.expand(n).truncate(order)
    return qs.first_difference(lhs, total)


def verify_master(
    n: int,
    order: int,
    series: list[QSeries] | None = None,
    method: str = "comb",
    conjecture: bool = False,
) -> bool:
    """True when the product identity holds coefficient-wise to the order."""
    return master_discrepancy(n, order, series, method, conjecture) is None
