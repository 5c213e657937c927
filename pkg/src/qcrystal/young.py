"""Partitions, colored Young diagrams, and congruence-constrained shapes.

Diagrams use English convention: row 1 on top, column 1 at the left, row
lengths weakly decreasing downward.  The cell in row r, column c of a
diagram of charge t carries color (c - r + t) mod n; colors increase left
to right along a row and decrease down a column.
"""

import functools
from dataclasses import dataclass

__all__ = [
    "Partition",
    "ColoredDiagram",
    "EMPTY",
    "color_of",
    "color_counts",
    "is_n_regular",
    "is_maximal_shape",
    "enumerate_maximal_shapes",
]


@dataclass(frozen=True)
class Partition:
    """Decreasing integer partition stored as (part, multiplicity) pairs.

    ``pairs = ((l1, f1), ..., (lj, fj))`` encodes the partition with f1
    rows of length l1, then f2 rows of length l2, and so on, with parts
    strictly decreasing.  The empty tuple is the null partition.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = None
        for part, mult in self.pairs:
            if part < 1 or mult < 1:
                raise ValueError(f"invalid (part, multiplicity) pair ({part}, {mult})")
            if prev is not None and part >= prev:
                raise ValueError("parts must be strictly decreasing")
            prev = part

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Normalize a flat iterable of positive parts, given in any order."""
        flat = sorted((int(p) for p in parts), reverse=True)
        pairs: list[tuple[int, int]] = []
        for p in flat:
            if pairs and pairs[-1][0] == p:
                pairs[-1] = (p, pairs[-1][1] + 1)
            else:
                pairs.append((p, 1))
        return cls(tuple(pairs))

    @property
    def parts(self) -> tuple[int, ...]:
        """Row lengths, weakly decreasing."""
        return tuple(p for p, f in self.pairs for _ in range(f))

    @property
    def boxes(self) -> int:
        return sum(p * f for p, f in self.pairs)

    @property
    def num_rows(self) -> int:
        return sum(f for _, f in self.pairs)

    def prefix_row_counts(self) -> tuple[int, ...]:
        """Partial sums (f1, f1+f2, ...) of the row multiplicities."""
        out: list[int] = []
        total = 0
        for _, f in self.pairs:
            total += f
            out.append(total)
        return tuple(out)

    def __str__(self) -> str:
        if not self.pairs:
            return "()"
        bits = [f"{p}^{f}" if f > 1 else str(p) for p, f in self.pairs]
        return "(" + ",".join(bits) + ")"


EMPTY = Partition()


@dataclass(frozen=True)
class ColoredDiagram:
    """A partition shape together with a modulus n and a charge.

    The charge is the color of the (virtual) cell in row 1, column 1.
    """

    shape: Partition
    n: int
    charge: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("modulus n must be at least 2")
        if not 0 <= self.charge < self.n:
            raise ValueError("charge must be a residue modulo n")

    def rows(self) -> tuple[int, ...]:
        return self.shape.parts

    @property
    def boxes(self) -> int:
        return self.shape.boxes


def color_of(row: int, col: int, charge: int, n: int) -> int:
    """Color of the cell in the given (1-based) row and column."""
    if row < 1 or col < 1:
        raise ValueError("row and column indices are 1-based")
    if n < 2 or not 0 <= charge < n:
        raise ValueError("charge must be a residue modulo n >= 2")
    return (col - row + charge) % n


def color_counts(d: ColoredDiagram) -> tuple[int, ...]:
    """Number of cells of each color, indexed by residue 0..n-1."""
    n = d.n
    counts = [0] * n
    row = 0
    for length, mult in d.shape.pairs:
        for _ in range(mult):
            row += 1
            # Row r is a run of `length` consecutive residues starting
            # at color_of(r, 1): `length // n` full cycles plus a tail.
            full, tail = divmod(length, n)
            if full:
                for t in range(n):
                    counts[t] += full
            start = (1 - row + d.charge) % n
            for off in range(tail):
                counts[(start + off) % n] += 1
    return tuple(counts)


def is_n_regular(p: Partition, n: int) -> bool:
    """True when no n rows share the same length, i.e. every f_k <= n-1."""
    if n < 2:
        raise ValueError("modulus n must be at least 2")
    return all(f < n for _, f in p.pairs)


def is_maximal_shape(p: Partition, n: int) -> bool:
    """Membership test for the congruence-chain family of shapes.

    A partition ((l1,f1),...,(lj,fj)) belongs to the family when every
    f_k < n, f1 = l1 (mod n), and f_k + f_{k+1} + l_k - l_{k+1} = 0
    (mod n) for k < j.  These are exactly the shapes of maximal elements
    in the tensor square of the charge-0 crystal; the null partition
    qualifies vacuously.
    """
    if n < 2:
        raise ValueError("modulus n must be at least 2")
    pairs = p.pairs
    if not pairs:
        return True
    if any(f >= n for _, f in pairs):
        return False
    if (pairs[0][0] - pairs[0][1]) % n != 0:
        return False
    for (l1, f1), (l2, f2) in zip(pairs, pairs[1:]):
        if (f1 + f2 + l1 - l2) % n != 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _maximal_shapes(n: int, boxes: int) -> tuple[Partition, ...]:
    if boxes == 0:
        return (EMPTY,)
    out: list[Partition] = []

    def extend(prefix, prev_part, prev_mult, remaining):
        # The chain congruence forces each multiplicity, so the search
        # branches on the next part only.
        for part in range(min(prev_part - 1, remaining), 0, -1):
            mult = (-(prev_mult + prev_part - part)) % n
            if mult == 0:
                continue
            cost = part * mult
            if cost > remaining:
                continue
            pair = prefix + ((part, mult),)
            if cost == remaining:
                out.append(Partition(pair))
            else:
                extend(pair, part, mult, remaining - cost)

    for part in range(boxes, 0, -1):
        mult = part % n
        if mult == 0:
            continue
        cost = part * mult
        if cost > boxes:
            continue
        pair = ((part, mult),)
        if cost == boxes:
            out.append(Partition(pair))
        else:
            extend(pair, part, mult, boxes - cost)
    return tuple(out)


def enumerate_maximal_shapes(n: int, boxes: int) -> tuple[Partition, ...]:
    """All chain-family members with the given box count.

    Results are duplicate-free and listed in descending lexicographic
    order of the flattened part list.  Depth-first search over parts with
    forced multiplicities emits exactly that order, so no sort is needed.
    """
    if n < 2:
        raise ValueError("modulus n must be at least 2")
    if boxes < 0:
        raise ValueError("box count must be nonnegative")
    return _maximal_shapes(n, boxes)
