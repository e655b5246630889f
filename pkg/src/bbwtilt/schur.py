"""Tensor products of Schur functors of a fixed-rank bundle.

`lr_coefficients` decomposes Sigma^lam tensor Sigma^mu for partitions by the
classical Littlewood-Richardson rule (horizontal strips subject to the
ballot condition).  `tensor_weights` extends this to arbitrary non-increasing
integer weights by twisting both factors into partitions with a determinant
power, expanding, and twisting back.

The independent oracle route computes Schur polynomials as semistandard
tableau sums, multiplies them monomially, and greedily peels the product
back into Schur polynomials; `lr_coefficients` must reproduce that
decomposition exactly.
"""

from collections import Counter
from functools import lru_cache

from .bott import weyl_dim
from .weights import Partition, Weight, as_weight, det_twist, is_non_increasing


def _parts(p) -> Weight:
    """Coerce a Partition or bare sequence to a trimmed partition tuple."""
    if isinstance(p, Partition):
        return p.parts
    p = tuple(int(x) for x in p)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 0 for x in p) or not is_non_increasing(p):
        raise ValueError(f"{p} is not a partition")
    return p


def lr_coefficients(lam, mu, m: int) -> dict[Weight, int]:
    """Expansion of Sigma^lam tensor Sigma^mu for a rank-m bundle.

    Keys are partitions nu padded to length m (at most m rows, with
    |nu| = |lam| + |mu|); values are the Littlewood-Richardson coefficients.
    Raises if either factor needs more than m rows.
    """
    lam, mu = _parts(lam), _parts(mu)
    if len(lam) > m:
        raise ValueError(f"{lam} has more than {m} rows")
    if len(mu) > m:
        raise ValueError(f"{mu} has more than {m} rows")
    out: Counter[Weight] = Counter()
    start = lam + (0,) * (m - len(lam))

    # Place the letters of mu one at a time: letter i adds a horizontal strip
    # of size mu[i] to the shape, and the ballot condition caps the count of
    # letter i within rows 1..r by the count of letter i-1 within rows 1..r-1.
    def place(letter: int, shape: Weight, prev_cum: tuple[int, ...]):
        if letter == len(mu):
            out[shape] += 1
            return

        def rows(r: int, left: int, new_shape: list[int], cum: list[int]):
            if left == 0:
                final = tuple(new_shape) + shape[r:]
                pad = cum[-1] if cum else 0
                place(letter + 1, final, tuple(cum) + (pad,) * (m - r))
                return
            if r == m:
                return
            hi = left
            if r >= 1:
                hi = min(hi, shape[r - 1] - shape[r])  # horizontal strip
            if letter >= 1:
                prev_through = prev_cum[r - 1] if r >= 1 else 0
                hi = min(hi, prev_through - (cum[-1] if cum else 0))  # ballot
            for add in range(hi + 1):
                new_shape.append(shape[r] + add)
                cum.append((cum[-1] if cum else 0) + add)
                rows(r + 1, left - add, new_shape, cum)
                new_shape.pop()
                cum.pop()

        rows(0, mu[letter], [], [])

    place(0, start, (0,) * m)
    return {nu: out[nu] for nu in sorted(out)}


def tensor_weights(a, b, m: int) -> dict[Weight, int]:
    """Expansion of Sigma^a tensor Sigma^b for non-increasing length-m weights.

    Both factors are normalized to partitions by the determinant twist
    c = -min(entries) (so keys are reproducible bit-exactly), expanded with
    `lr_coefficients`, and the keys shifted back.  The total dimension is
    checked against the product of the factor dimensions on every call.
    """
    a, b = as_weight(a), as_weight(b)
    if len(a) != m or len(b) != m:
        raise ValueError(f"factors must have length {m}")
    if not is_non_increasing(a) or not is_non_increasing(b):
        raise ValueError("tensor factors must be non-increasing")
    ca, cb = -a[-1], -b[-1]
    expansion = lr_coefficients(det_twist(a, ca), det_twist(b, cb), m)
    shift = -(ca + cb)
    result = {det_twist(nu, shift): c for nu, c in expansion.items()}
    assert sum(c * weyl_dim(nu) for nu, c in result.items()) == weyl_dim(a) * weyl_dim(b)
    return result


Polynomial = dict[Weight, int]


@lru_cache(maxsize=None)
def _schur_poly_cached(lam: Weight, m: int) -> tuple[tuple[Weight, int], ...]:
    rows = [r for r in lam if r > 0]
    if len(rows) > m:
        return ()
    out: Counter[Weight] = Counter()
    content = [0] * m

    def fill_row(r: int, prev_row):
        if r == len(rows):
            out[tuple(content)] += 1
            return
        width = rows[r]
        row = [0] * width

        def fill_cell(c: int, lo: int):
            if c == width:
                fill_row(r + 1, row)
                return
            low = lo
            if prev_row is not None and c < len(prev_row):
                low = max(low, prev_row[c] + 1)  # strict down columns
            for v in range(low, m + 1):
                row[c] = v
                content[v - 1] += 1
                fill_cell(c + 1, v)
                content[v - 1] -= 1

        fill_cell(0, 1)

    fill_row(0, None)
    return tuple(sorted(out.items()))


def schur_poly(lam, m: int) -> Polynomial:
    """The Schur polynomial of lam in m variables, as {exponent: coefficient}.

    Computed as the sum over semistandard tableaux of shape lam with entries
    in 1..m (rows weakly increase, columns strictly increase); zero when lam
    has more than m rows.
    """
    return dict(_schur_poly_cached(_parts(lam), m))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    """Product of exponent-vector polynomials."""
    out: Counter[Weight] = Counter()
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return dict(out)


def decompose_schur(poly: Polynomial, m: int) -> dict[Weight, int]:
    """Write a symmetric, Schur-positive polynomial as a sum of Schur polynomials.

    Greedy peeling: the lexicographically greatest exponent of such a
    polynomial is a partition and its coefficient the multiplicity of that
    Schur polynomial; subtract and repeat.  Keys come back padded to length m.
    """
    work = Counter({e: c for e, c in poly.items() if c})
    out: dict[Weight, int] = {}
    while work:
        e = max(work)
        c = work[e]
        if not is_non_increasing(e) or c < 0:
            raise ValueError("polynomial is not a positive sum of Schur polynomials")
        out[e] = c
        for e2, c2 in _schur_poly_cached(_parts(e), m):
            work[e2] -= c * c2
            if work[e2] == 0:
                del work[e2]
    return {nu: out[nu] for nu in sorted(out)}


def lr_by_polynomials(lam, mu, m: int) -> dict[Weight, int]:
    """Oracle route for `lr_coefficients`: multiply Schur polynomials and peel."""
    return decompose_schur(poly_mul(schur_poly(lam, m), schur_poly(mu, m)), m)


def expansion_to_jsonable(expansion: dict[Weight, int]):
    """Deterministic JSON form: list sorted lexicographically by weight."""
    return [
        {"weight": list(nu), "mult": str(expansion[nu])} for nu in sorted(expansion)
    ]


def expansion_from_jsonable(obj) -> dict[Weight, int]:
    return {tuple(item["weight"]): int(item["mult"]) for item in obj}
