"""Cohomology of line bundles on the full flag variety of GL(m).

A weight Delta in Z^m labels the line bundle O(Delta) on the variety of
complete flags in an m-dimensional space, normalized so that a
non-increasing Delta has H^0 equal to the irreducible representation with
highest weight Delta and no higher cohomology.  Bott's theorem computes the
general case by a rho-shifted sorting walk:

  * if Delta + rho has a repeated entry, every cohomology group vanishes;
  * otherwise the cohomology is concentrated in a single degree, equal to
    the number of inversions of Delta + rho (the number of rho-shifted
    adjacent transpositions needed to sort Delta), with value the
    irreducible representation attached to the sorted weight.

`bott` takes the fast route (sort and count inversions); `bott_by_walk`
replays the transposition walk literally, one adjacent step at a time, and
is used to cross-check the shortcut.  `euler_characteristic` is the
independent product oracle: it equals the signed dimension of the single
surviving cohomology group, or 0 when everything vanishes.

Dimensions are exact unbounded integers throughout.
"""

from dataclasses import dataclass
from fractions import Fraction

from .weights import Weight, as_weight, is_non_increasing


@dataclass(frozen=True)
class BottResult:
    """Outcome of the Bott algorithm: total vanishing, or one nonzero group.

    In the concentrated case `degree` is the cohomological degree, `dominant`
    the non-increasing weight of the surviving representation and `dimension`
    its dimension.  For total vanishing all three are None/0.
    """

    degree: int | None
    dominant: Weight | None
    dimension: int

    @property
    def vanishes(self) -> bool:
        return self.degree is None

    @staticmethod
    def vanishing() -> "BottResult":
        return BottResult(None, None, 0)

    @staticmethod
    def concentrated(degree: int, dominant: Weight, dimension: int) -> "BottResult":
        return BottResult(degree, tuple(dominant), dimension)

    def h(self, i: int) -> int:
        """dim H^i for the bundle this result describes."""
        return self.dimension if i == self.degree else 0

    def signed_dimension(self) -> int:
        """Euler characteristic: 0 if vanishing, else (-1)^degree * dimension."""
        if self.vanishes:
            return 0
        return -self.dimension if self.degree % 2 else self.dimension

    def to_jsonable(self):
        if self.vanishes:
            return {"vanishes": True}
        # dimension as a decimal string so consumers need not parse bigints
        return {
            "degree": self.degree,
            "dominant": list(self.dominant),
            "dim": str(self.dimension),
        }

    @staticmethod
    def from_jsonable(obj) -> "BottResult":
        if obj.get("vanishes"):
            return BottResult.vanishing()
        return BottResult.concentrated(
            int(obj["degree"]), tuple(obj["dominant"]), int(obj["dim"])
        )


def weyl_dim(w) -> int:
    """Dimension of the irreducible GL(m) representation with highest weight w.

    Weyl's product formula: prod over i<j of (w_i - w_j + j - i)/(j - i).
    Requires w non-increasing; the result is always a positive integer.
    """
    w = as_weight(w)
    if not is_non_increasing(w):
        raise ValueError(f"{w} is not non-increasing")
    m = len(w)
    p = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            p *= Fraction(w[i] - w[j] + j - i, j - i)
    assert p.denominator == 1
    return int(p)


def flag_dim(m: int) -> int:
    """Dimension m(m-1)/2 of the full flag variety, the maximal degree."""
    return m * (m - 1) // 2


def bott(delta, debug: bool = False) -> BottResult:
    """H^*(flag variety, O(delta)) by the shifted-sort shortcut.

    With `debug=True` the literal transposition walk is replayed as well and
    both routes are asserted to agree.
    """
    delta = as_weight(delta)
    result = _bott_sorted(delta)
    if debug:
        walked = bott_by_walk(delta)
        assert walked == result, (delta, walked, result)
    return result


def _bott_sorted(delta: Weight) -> BottResult:
    m = len(delta)
    shifted = [delta[i] + m - 1 - i for i in range(m)]
    if len(set(shifted)) < m:
        return BottResult.vanishing()
    inversions = sum(
        1 for i in range(m) for j in range(i + 1, m) if shifted[i] < shifted[j]
    )
    dominant = tuple(
        x - (m - 1 - i) for i, x in enumerate(sorted(shifted, reverse=True))
    )
    return BottResult.concentrated(inversions, dominant, weyl_dim(dominant))


def bott_by_walk(delta) -> BottResult:
    """H^*(flag variety, O(delta)) by replaying the transposition walk.

    Repeatedly applies the rho-shifted adjacent transposition at the leftmost
    ascent.  Hitting an ascent of gap exactly one (a fixed point of the
    shifted transposition) forces total vanishing; otherwise the walk sorts
    delta in at most m(m-1)/2 steps and the step count is the degree.
    """
    w = list(as_weight(delta))
    m = len(w)
    steps = 0
    while True:
        for l in range(m - 1):
            if w[l] < w[l + 1]:
                if w[l + 1] == w[l] + 1:
                    return BottResult.vanishing()
                w[l], w[l + 1] = w[l + 1] - 1, w[l] + 1
                steps += 1
                break
        else:
            dominant = tuple(w)
            return BottResult.concentrated(steps, dominant, weyl_dim(dominant))
        assert steps <= flag_dim(m), "walk exceeded the longest-element length"


def euler_characteristic(delta) -> int:
    """Signed product oracle: the alternating sum of cohomology dimensions.

    The same product as Weyl's formula but without requiring dominance.  It
    vanishes exactly when some factor is zero (a repeat in delta + rho) and
    otherwise equals (-1)^degree * dimension of the concentrated group, which
    is the primary cross-check of `bott`.
    """
    delta = as_weight(delta)
    m = len(delta)
    p = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            p *= Fraction(delta[i] - delta[j] + j - i, j - i)
    assert p.denominator == 1
    return int(p)


def cech_p1_oracle(d: int) -> tuple[int, int]:
    """(h^0, h^1) of O(d) on the projective line, by monomial counting.

    Sections of O(d) are degree-d monomials in two variables, so
    h^0 = max(d+1, 0); dually h^1 = max(-d-1, 0).  The flag variety of a
    2-dimensional space is the projective line with O(d1, d2) = O(d1 - d2),
    which makes this an independent ground truth for `bott` at m = 2.
    """
    return (max(d + 1, 0), max(-d - 1, 0))


def canonical_weight(m: int) -> Weight:
    """Weight of the canonical bundle of the flag variety: entry i is 2i-m-1.

    For m = 2 this is (-1, 1), i.e. O(-2) on the projective line.
    """
    return tuple(2 * i - m - 1 for i in range(1, m + 1))


def serre_dual(delta) -> Weight:
    """The weight whose cohomology is Serre-dual to that of delta.

    With kappa the canonical weight and N = m(m-1)/2, the pairing is
    h^i(delta) = h^{N-i}(serre_dual(delta)), where
    serre_dual(delta)_i = kappa_i + delta_{m+1-i}.  (The reversal composes
    plain Serre duality, kappa - delta, with the cohomology-preserving
    symmetry that exchanges a flag with its annihilator.)
    """
    delta = as_weight(delta)
    kappa = canonical_weight(len(delta))
    return tuple(k + d for k, d in zip(kappa, reversed(delta)))
