"""Exact truncated Laurent series over Python integers.

A series knows its coefficients for every exponent in [lowest, order) and
nothing beyond; `order` is the truncation bound, fixed per computation.
Coefficients are exact arbitrary-precision integers throughout: no floats,
no modular shortcuts.

The canonical form has a nonzero leading coefficient (the zero series is
stored as lowest=0 with no coefficients), which makes structural equality
of the dataclass coincide with coefficient-wise equality at equal order.

Products are exact: when a factor has negative valuation, coefficients of
the product near the truncation bound would need tail data that a
truncated factor does not carry, so multiplication lowers the bound of
the result accordingly instead of fabricating those coefficients.
"""

from dataclasses import dataclass
from math import isqrt

__all__ = [
    "QSeries",
    "OrderMismatchError",
    "NonUnitConstantError",
    "euler_phi",
    "theta_f",
    "theta_g",
    "triple_product_f",
    "triple_product_g",
    "transform_check",
    "restricted_partition_gf",
    "det",
    "first_difference",
]


class OrderMismatchError(ValueError):
    """Arithmetic between series with different truncation orders."""


class NonUnitConstantError(ValueError):
    """Inversion of a series whose constant term is not a unit."""


@dataclass(frozen=True)
class QSeries:
    lowest: int
    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.coeffs:
            if self.coeffs[0] == 0:
                raise ValueError("leading coefficient must be nonzero")
            if self.lowest + len(self.coeffs) != self.order:
                raise ValueError("coefficient window must span [lowest, order)")
        elif self.lowest != 0:
            raise ValueError("the zero series has lowest = 0")

    # -- construction -----------------------------------------------------

    @staticmethod
    def _new(lowest: int, raw: list[int], order: int) -> "QSeries":
        """Normalize a dense window starting at `lowest` (may exceed order)."""
        del raw[max(0, order - lowest):]
        lead = 0
        while lead < len(raw) and raw[lead] == 0:
            lead += 1
        if lead == len(raw):
            return QSeries(0, (), order)
        if lead:
            del raw[:lead]
        return QSeries(lowest + lead, tuple(raw), order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(0, (), order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, coeff: int, exponent: int, order: int) -> "QSeries":
        if coeff == 0 or exponent >= order:
            return cls.zero(order)
        window = [coeff] + [0] * (order - exponent - 1)
        return cls(exponent, tuple(window), order)

    @classmethod
    def from_coeffs(cls, coeffs, order: int, lowest: int = 0) -> "QSeries":
        raw = list(coeffs)
        if lowest + len(raw) > order:
            raise ValueError("coefficients extend past the truncation order")
        raw += [0] * (order - lowest - len(raw))
        return cls._new(lowest, raw, order)

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, exponent: int) -> int:
        """Coefficient at an exponent below the truncation order."""
        if exponent >= self.order:
            raise ValueError(f"exponent {exponent} is beyond truncation order {self.order}")
        if exponent < self.lowest:
            return 0
        return self.coeffs[exponent - self.lowest]

    def coefficient_list(self, start: int = 0) -> list[int]:
        """Dense coefficients for exponents start..order-1."""
        return [self.coeff(e) for e in range(start, self.order)]

    def __str__(self) -> str:
        if self.is_zero:
            return f"0 + O(q^{self.order})"
        terms = []
        for idx, c in enumerate(self.coeffs):
            if c == 0 or len(terms) >= 8:
                continue
            e = self.lowest + idx
            term = str(c) if e == 0 else (f"{c}*q^{e}" if e != 1 else f"{c}*q")
            terms.append(term)
        body = " + ".join(terms).replace("+ -", "- ")
        return f"{body} + ... + O(q^{self.order})"

    def _check_order(self, other: "QSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(f"orders differ: {self.order} != {other.order}")

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_order(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.lowest, other.lowest)
        out = [0] * (self.order - lo)
        for src in (self, other):
            base = src.lowest - lo
            for idx, c in enumerate(src.coeffs):
                out[base + idx] += c
        return QSeries._new(lo, out, self.order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __neg__(self) -> "QSeries":
        return QSeries(self.lowest if self.coeffs else 0, tuple(-c for c in self.coeffs), self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_order(other)
        bound = self.order + min(0, self.lowest, other.lowest)
        if self.is_zero or other.is_zero:
            return QSeries.zero(bound)
        lo = self.lowest + other.lowest
        width = bound - lo
        if width <= 0:
            return QSeries.zero(bound)
        out = [0] * width
        b_coeffs = other.coeffs
        for ia, ca in enumerate(self.coeffs):
            if not ca:
                continue
            jmax = min(len(b_coeffs), width - ia)
            for jb in range(jmax):
                cb = b_coeffs[jb]
                if cb:
                    out[ia + jb] += ca * cb
        return QSeries._new(lo, out, bound)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            raise ValueError("negative powers are not supported; invert first")
        result = QSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def scaled(self, c: int) -> "QSeries":
        if c == 0:
            return QSeries.zero(self.order)
        if self.is_zero:
            return self
        return QSeries(self.lowest, tuple(c * a for a in self.coeffs), self.order)

    def shift(self, m: int) -> "QSeries":
        """Multiply by q^m; exact, the truncation bound moves with it."""
        if self.is_zero:
            return QSeries.zero(self.order + m)
        return QSeries(self.lowest + m, self.coeffs, self.order + m)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        if self.is_zero or order <= self.lowest:
            return QSeries.zero(order)
        return QSeries(self.lowest, self.coeffs[: order - self.lowest], order)

    def invert(self) -> "QSeries":
        """Inverse of a series with constant term +-1 and lowest = 0."""
        if self.is_zero or self.lowest != 0 or self.coeffs[0] not in (1, -1):
            raise NonUnitConstantError("inversion needs lowest = 0 and constant term +-1")
        c0 = self.coeffs[0]
        a = self.coeffs
        out = [0] * (self.order)
        out[0] = c0  # 1/c0 == c0 for units
        support = [j for j in range(1, len(a)) if a[j]]
        for e in range(1, self.order):
            acc = 0
            for j in support:
                if j > e:
                    break
                acc += a[j] * out[e - j]
            if acc:
                out[e] = -c0 * acc
        return QSeries._new(0, out, self.order)

    # -- exponent substitutions -------------------------------------------

    def expand(self, k: int) -> "QSeries":
        """Substitute q -> q^k; the truncation bound scales to k * order."""
        if k < 1:
            raise ValueError("expansion factor must be positive")
        if self.is_zero:
            return QSeries.zero(self.order * k)
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for idx, c in enumerate(self.coeffs):
            out[idx * k] = c
        return QSeries.from_coeffs(out, self.order * k, self.lowest * k)

    def contract(self, k: int) -> "QSeries":
        """Substitute q^k -> q; every retained exponent must be divisible by k."""
        if k < 1:
            raise ValueError("contraction factor must be positive")
        new_order = -(-self.order // k)
        if self.is_zero:
            return QSeries.zero(new_order)
        for idx, c in enumerate(self.coeffs):
            if c and (self.lowest + idx) % k != 0:
                raise ValueError(
                    f"exponent {self.lowest + idx} is not divisible by {k}"
                )
        return QSeries._new(self.lowest // k, list(self.coeffs[::k]), new_order)


def first_difference(a: QSeries, b: QSeries) -> tuple[int, int, int] | None:
    """First exponent where two same-order series disagree, with both values."""
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} != {b.order}")
    lo = min(a.lowest if a.coeffs else a.order, b.lowest if b.coeffs else b.order)
    for e in range(lo, a.order):
        ca, cb = a.coeff(e), b.coeff(e)
        if ca != cb:
            return (e, ca, cb)
    return None


# -- product constructors ------------------------------------------------


def _mul_binomial_inplace(window: list[int], exponent: int, sign: int) -> None:
    """Multiply a dense window (lowest 0) by (1 + sign * q^exponent)."""
    for x in range(len(window) - 1, exponent - 1, -1):
        c = window[x - exponent]
        if c:
            window[x] += sign * c


def euler_phi(order: int, stride: int = 1) -> QSeries:
    """Product of (1 - q^(stride * j)) over j >= 1, truncated."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if stride < 1:
        raise ValueError("stride must be positive")
    window = [0] * order
    window[0] = 1
    j = 1
    while stride * j < order:
        _mul_binomial_inplace(window, stride * j, -1)
        j += 1
    return QSeries._new(0, window, order)


def restricted_partition_gf(excluded, modulus: int, order: int) -> QSeries:
    """Generating function for partitions avoiding part sizes in the
    given residue classes modulo `modulus`."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if modulus < 1:
        raise ValueError("modulus must be positive")
    banned = {r % modulus for r in excluded}
    window = [0] * order
    window[0] = 1
    for j in range(1, order):
        if j % modulus in banned:
            continue
        # multiply by 1 / (1 - q^j)
        for x in range(j, order):
            window[x] += window[x - j]
    return QSeries._new(0, window, order)


def _theta(r: int, s: int, order: int, alternating: bool) -> QSeries:
    if r + s <= 0:
        raise ValueError("theta series need r + s > 0")
    # Term exponent at index j is (r+s) j^2 / 2 + (s-r) j / 2, a parabola
    # opening upward, so only finitely many terms fall below the order.
    d = s - r
    jbound = (abs(d) + isqrt(d * d + 8 * (r + s) * max(order, 1))) // (2 * (r + s)) + 2
    acc: dict[int, int] = {}
    for j in range(-jbound, jbound + 1):
        e = (r * j * (j - 1) + s * j * (j + 1)) // 2
        if e < order:
            acc[e] = acc.get(e, 0) + (-1 if (alternating and j % 2) else 1)
    acc = {e: c for e, c in acc.items() if c}
    if not acc:
        return QSeries.zero(order)
    lo = min(acc)
    window = [0] * (order - lo)
    for e, c in acc.items():
        window[e - lo] = c
    return QSeries._new(lo, window, order)


def theta_f(r: int, s: int, order: int) -> QSeries:
    """Bilateral sum of q^(r j(j-1)/2 + s j(j+1)/2), all signs +1."""
    return _theta(r, s, order, alternating=False)


def theta_g(r: int, s: int, order: int) -> QSeries:
    """Bilateral sum of (-1)^j q^(r j(j-1)/2 + s j(j+1)/2)."""
    return _theta(r, s, order, alternating=True)


def _triple_product(r: int, s: int, order: int, sign: int) -> QSeries:
    if r < 0 or s < 0:
        raise ValueError("product form needs nonnegative exponents")
    if r + s <= 0:
        raise ValueError("product form needs r + s > 0")
    if order < 1:
        raise ValueError("order must be at least 1")
    window = [0] * order
    window[0] = 1
    j = 1
    while True:
        exponents = (j * (r + s), (j - 1) * r + j * s, j * r + (j - 1) * s)
        signs = (-1, sign, sign)
        if min(exponents) >= order:
            break
        for e, sg in zip(exponents, signs):
            if e >= order:
                continue
            if e == 0:
                # Degenerate factor (1 + sg): doubles the series or kills it.
                if sg == -1:
                    return QSeries.zero(order)
                window = [2 * c for c in window]
            else:
                _mul_binomial_inplace(window, e, sg)
        j += 1
    return QSeries._new(0, window, order)


def triple_product_f(r: int, s: int, order: int) -> QSeries:
    """Product form (1-q^(j(r+s)))(1+q^((j-1)r+js))(1+q^(jr+(j-1)s)) over j >= 1."""
    return _triple_product(r, s, order, +1)


def triple_product_g(r: int, s: int, order: int) -> QSeries:
    """Product form with minus signs in the two odd factor families."""
    return _triple_product(r, s, order, -1)


def transform_check(r: int, s: int, order: int) -> bool:
    """Verify the index shift (r, s) -> (2r + s, -r) with prefactor q^r.

    The f-series picks up the prefactor directly, the g-series also flips
    sign.  Both comparisons are exact to the given order.
    """
    if r + s <= 0:
        raise ValueError("transformation needs r + s > 0")
    lhs_f = theta_f(r, s, order)
    rhs_f = theta_f(2 * r + s, -r, order - r).shift(r)
    if lhs_f != rhs_f:
        return False
    lhs_g = theta_g(r, s, order)
    rhs_g = -(theta_g(2 * r + s, -r, order - r).shift(r))
    return lhs_g == rhs_g


# -- determinants ---------------------------------------------------------


def det(matrix) -> QSeries:
    """Determinant of a small square matrix of same-order series.

    Laplace expansion along rows with memoization on the active column
    set; matrices up to 6 x 6 are supported.
    """
    rows = [list(r) for r in matrix]
    size = len(rows)
    if size == 0:
        raise ValueError("empty matrix")
    if any(len(r) != size for r in rows):
        raise ValueError("matrix must be square")
    if size > 6:
        raise ValueError("determinants are supported up to size 6")
    order = rows[0][0].order
    for r in rows:
        for entry in r:
            if entry.order != order:
                raise OrderMismatchError("matrix entries must share one truncation order")

    cache: dict[tuple[int, ...], QSeries] = {}

    def expand_over(row: int, cols: tuple[int, ...]) -> QSeries:
        if not cols:
            return QSeries.one(order)
        hit = cache.get(cols)
        if hit is not None:
            return hit
        acc = QSeries.zero(order)
        for pos, col in enumerate(cols):
            entry = rows[row][col]
            if entry.is_zero:
                continue
            sub = expand_over(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        cache[cols] = acc
        return acc

    return expand_over(0, tuple(range(size)))
