"""Integer weight and partition combinatorics for GL(m) Schur functors.

A weight is a fixed-length tuple of integers.  Non-increasing weights are
the highest weights of the irreducible GL(m) representations, equivalently
the Schur functors of a rank-m vector bundle.  The rho-shifted transposition
action defined here drives the cohomology walk in the `bott` module.

All values are immutable and every operation is a pure function.
"""

from dataclasses import dataclass

Weight = tuple[int, ...]


def as_weight(entries) -> Weight:
    """Coerce an iterable of integers to a weight tuple."""
    w = tuple(int(x) for x in entries)
    if not w:
        raise ValueError("a weight needs at least one entry")
    return w


def rho(m: int) -> Weight:
    """The staircase (m-1, m-2, ..., 0)."""
    if m < 1:
        raise ValueError("rho needs length >= 1")
    return tuple(range(m - 1, -1, -1))


def is_non_increasing(w) -> bool:
    """True iff w[0] >= w[1] >= ... >= w[-1]."""
    return all(a >= b for a, b in zip(w, w[1:]))


def tilde_transpose(w, l: int) -> Weight:
    """Apply the rho-shifted adjacent transposition at position l (1-based).

    Positions l, l+1 of w are replaced by (w[l+1]-1, w[l]+1); this is the
    plain transposition conjugated by the rho shift, so applying it twice
    returns the input, and w is a fixed point exactly when
    w[l+1] == w[l] + 1.
    """
    w = tuple(w)
    if not 1 <= l <= len(w) - 1:
        raise IndexError(f"transposition position {l} out of range for length {len(w)}")
    a, b = w[l - 1], w[l]
    return w[: l - 1] + (b - 1, a + 1) + w[l + 1:]


def dual_weight(w) -> Weight:
    """Weight of the dual: Sigma^w(E) has dual Sigma^{dual_weight(w)}(E).

    Negates and reverses, so non-increasing weights stay non-increasing
    and the operation is an involution.
    """
    return tuple(-x for x in reversed(tuple(w)))


def det_twist(w, c: int) -> Weight:
    """Add c to every entry (tensoring with the c-th determinant power)."""
    return tuple(x + c for x in w)


@dataclass(frozen=True)
class Partition:
    """A non-increasing sequence of non-negative parts with an ambient length.

    The ambient length is the rank of the bundle the Schur functor is applied
    to; construction rejects more nonzero parts than fit.  Trailing zeros in
    `parts` are dropped on construction.
    """

    parts: Weight
    length: int

    def __init__(self, parts, length: int | None = None):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if length is None:
            length = len(parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if not is_non_increasing(parts):
            raise ValueError(f"parts {parts} are not non-increasing")
        if len(parts) > length:
            raise ValueError(f"{parts} has more than {length} nonzero parts")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "length", int(length))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def padded(self) -> Weight:
        """The parts padded with zeros to the ambient length."""
        return self.parts + (0,) * (self.length - len(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)}, length={self.length})"


def partitions_of(total: int, max_rows: int):
    """Yield all partitions of `total` with at most `max_rows` parts.

    Partitions come out as bare tuples without trailing zeros, in
    lexicographically decreasing order.
    """
    if total < 0:
        return
    if total == 0:
        yield ()
        return
    if max_rows <= 0:
        return

    def rec(remaining, bound, rows_left):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    yield from rec(total, total, max_rows)
