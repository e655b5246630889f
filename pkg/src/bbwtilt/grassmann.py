"""Cohomology of Schur-functor bundles on the Grassmannian G(k, V).

Conventions, fixed once and used everywhere:

  * U is the tautological rank-k subbundle of the trivial bundle V; Uperp is
    the dual of the quotient (V/U)^dual, of rank n-k.
  * Hom^i(A, B) = H^i(A^dual tensor B).
  * Every bundle expression is normalized to Schur functors of U^dual on the
    subbundle side and of Uperp on the quotient side (two `dual_weight`
    calls) before reduction, since U, U^dual, Uperp and Uperp^dual are all
    mixed freely in practice.

With non-increasing weights a (length k) on U^dual and b (length n-k)
on Uperp, the cohomology of Sigma^a(U^dual) tensor Sigma^b(Uperp) equals
the flag-variety cohomology of the concatenated weight (a, b), so `bott`
finishes the computation.  The tangent bundle is U^dual tensor Uperp^dual,
and the Cauchy identity grades its symmetric powers by partitions, which is
what `hom_grassmann` sums over.
"""

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .bott import BottResult, bott
from .schur import tensor_weights
from .weights import (
    Partition,
    Weight,
    as_weight,
    dual_weight,
    is_non_increasing,
    partitions_of,
)


@dataclass(frozen=True)
class GrassmannContext:
    """The Grassmannian of k-dimensional subspaces of an n-dimensional space."""

    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"need 1 <= k <= n-1, got k={self.k}, n={self.n}")

    @property
    def quotient_rank(self) -> int:
        return self.n - self.k

    @property
    def dim(self) -> int:
        """Dimension k(n-k); no cohomology lives above it."""
        return self.k * (self.n - self.k)

    def to_jsonable(self):
        return {"k": self.k, "n": self.n}


class MixedBundle(NamedTuple):
    """Sigma^{u_dual}(U^dual) tensor Sigma^{uperp}(Uperp), both non-increasing."""

    u_dual: Weight
    uperp: Weight


def kapranov_reduce(ctx: GrassmannContext, bundle: MixedBundle) -> Weight:
    """Flag weight whose cohomology equals that of the mixed bundle on G(k, V).

    Concatenates the U^dual-side weight and the Uperp-side weight; feeding the
    result to `bott` computes H^*(G, Sigma^a(U^dual) tensor Sigma^b(Uperp)).
    """
    a = as_weight(bundle[0])
    b = as_weight(bundle[1])
    if len(a) != ctx.k or len(b) != ctx.quotient_rank:
        raise ValueError(
            f"weight lengths ({len(a)}, {len(b)}) do not match ranks "
            f"({ctx.k}, {ctx.quotient_rank})"
        )
    if not is_non_increasing(a) or not is_non_increasing(b):
        raise ValueError("both weights must be non-increasing")
    return a + b


def sym_tangent_cauchy(
    ctx: GrassmannContext, n_deg: int
) -> list[tuple[Partition, tuple[Weight, Weight]]]:
    """Cauchy grading of Sym^{n_deg} of the tangent bundle of G(k, V).

    Sym^n(A tensor B) splits as the sum over partitions lam of size n of
    Sigma^lam(A) tensor Sigma^lam(B); with A = U^dual and B = Uperp^dual the
    partitions are capped at min(k, n-k) rows.  Each entry is
    (lam, (weight of Sigma^lam on U^dual, weight of Sigma^lam on Uperp^dual)),
    the weights padded to their ambient ranks.
    """
    if n_deg < 0:
        raise ValueError("symmetric-power degree must be non-negative")
    rows = min(ctx.k, ctx.quotient_rank)
    result = []
    for lam in partitions_of(n_deg, rows):
        p = Partition(lam, rows)
        u_side = lam + (0,) * (ctx.k - len(lam))
        q_side = lam + (0,) * (ctx.quotient_rank - len(lam))
        result.append((p, (u_side, q_side)))
    return result


def hom_grassmann_terms(
    ctx: GrassmannContext, alpha, beta, n_deg: int
) -> Iterator[tuple[Partition, int, Weight, BottResult]]:
    """Irreducible summands of Hom(Sigma^alpha U, Sigma^beta U tensor Sym^n T).

    The graded piece in symmetric degree n_deg is the sum over Cauchy
    partitions lam of
    H^*(G, Sigma^alpha(U^dual) tensor Sigma^beta(U) tensor Sigma^lam(U^dual)
    tensor Sigma^lam(Uperp^dual)).  The U-side triple product is expanded
    into irreducibles of U^dual and each summand reduced to a flag weight.
    Yields (lam, multiplicity, flag weight, bott result) per summand.
    """
    alpha, beta = as_weight(alpha), as_weight(beta)
    if len(alpha) != ctx.k or len(beta) != ctx.k:
        raise ValueError(f"alpha and beta must have length k={ctx.k}")
    base = tensor_weights(alpha, dual_weight(beta), ctx.k)
    for lam, (u_side, q_side) in sym_tangent_cauchy(ctx, n_deg):
        uperp_weight = dual_weight(q_side)
        for nu, c0 in base.items():
            for term, c1 in tensor_weights(nu, u_side, ctx.k).items():
                delta = kapranov_reduce(ctx, MixedBundle(term, uperp_weight))
                yield lam, c0 * c1, delta, bott(delta)


def hom_grassmann(ctx: GrassmannContext, alpha, beta, n_deg: int) -> dict[int, int]:
    """Dimensions {degree: dim} of Hom^i(Sigma^alpha U, Sigma^beta U tensor Sym^n T).

    Zero entries are omitted; nonzero degrees never exceed dim G = k(n-k).
    """
    acc: dict[int, int] = {}
    for _lam, mult, _delta, res in hom_grassmann_terms(ctx, alpha, beta, n_deg):
        if not res.vanishes:
            acc[res.degree] = acc.get(res.degree, 0) + mult * res.dimension
    return dict(sorted(acc.items()))


def hom_grassmann_to_jsonable(ctx, alpha, beta, n_deg, h: dict[int, int]):
    return {
        "context": ctx.to_jsonable(),
        "alpha": list(alpha),
        "beta": list(beta),
        "sym_degree": n_deg,
        "h": {str(i): str(d) for i, d in sorted(h.items())},
    }
