"""Dense edges of the arrangements handled here: braid arrangements and lines in C^2."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class DenseEdge:
    codim: int
    multiplicity: int  # m_X, the number of hyperplanes containing X
    count: int
    shape: tuple[int, ...] = ()
    center: bool = False


@dataclass(frozen=True)
class DenseEdgeSummary:
    rank: int
    edges: tuple[DenseEdge, ...]

    def proper(self) -> tuple[DenseEdge, ...]:
        """Dense edges of positive dimension."""
        return tuple(e for e in self.edges if not e.center)

    def center(self) -> DenseEdge | None:
        return next((e for e in self.edges if e.center), None)

    def by_shape(self, shape) -> DenseEdge | None:
        return next((e for e in self.edges if e.shape == tuple(shape)), None)


def dense_edges_braid(ell: int) -> DenseEdgeSummary:
    """A_ell in C^ell: an edge of shape (k, 1, ..., 1) is dense, the others are not.

    It has codimension k - 1, lies on binomial(k, 2) hyperplanes and there are
    binomial(ell + 1, k) of them; k = ell + 1 is the origin.
    """
    if ell < 2:
        raise ValueError("the braid arrangement needs ell >= 2")
    n = ell + 1
    edges = tuple(
        DenseEdge(codim=k - 1, multiplicity=comb(k, 2), count=comb(n, k),
                  shape=(k,) + (1,) * (n - k), center=(k == n))
        for k in range(2, n + 1)
    )
    return DenseEdgeSummary(ell, edges)


def dense_edges_rank2(d: int) -> DenseEdgeSummary:
    """d lines through the origin of C^2."""
    if d < 2:
        raise ValueError("need at least two lines")
    return DenseEdgeSummary(2, (DenseEdge(1, 1, d), DenseEdge(2, d, 1, center=True)))
