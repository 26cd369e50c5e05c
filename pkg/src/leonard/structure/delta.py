"""
The graph Delta on the primitive idempotents of A.

Vertices are 0..d in the context's eigen ordering; i ~ j iff i != j and
E_i A* E_j != 0. Also covers tails, Q-polynomial orderings and the
correspondence between Delta's cuts and subspaces invariant under A and A*.
"""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Any

import networkx as nx

from leonard.algebra.matrix import ExactSubspace
from leonard.algebra.spectral import line_of
from leonard.config.constants import MAX_BITMASK_DEGREE, MAX_SUBSET_SWEEP_DEGREE
from leonard.core.errors import (
    CriterionMismatchError,
    DimensionLimitError,
    InvalidPairError,
    NotInvariantError,
    SymmetryViolationError,
)
from leonard.structure.context import Context, verify_leonard_system
from leonard.structure.paths import path_traversals


logger = logging.getLogger(__name__)


# =============================================================================
# Graph
# =============================================================================


@dataclass(slots=True)
class DeltaGraph:
    """Simple undirected graph on 0..n_vertices-1."""

    n_vertices: int
    graph: nx.Graph

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[tuple[int, int]]) -> "DeltaGraph":
        graph = nx.Graph()
        graph.add_nodes_from(range(n_vertices))
        for i, j in edges:
            if i == j:
                raise InvalidPairError(f"loop at vertex {i}")
            graph.add_edge(i, j)
        return cls(n_vertices, graph)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.graph.has_edge(i, j))

    def neighbors(self, i: int) -> set[int]:
        return set(self.graph.neighbors(i))

    def adjacency(self) -> list[list[bool]]:
        return [[self.adjacent(i, j) for j in range(self.n_vertices)] for i in range(self.n_vertices)]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((min(i, j), max(i, j)) for i, j in self.graph.edges)

    def degree(self, i: int) -> int:
        return int(self.graph.degree(i))

    def to_dict(self) -> dict[str, Any]:
        return {"vertices": self.n_vertices, "edges": [list(e) for e in self.edges()]}

    def to_dot(self, name: str = "delta") -> str:
        """DOT text for Graphviz."""
        dot = nx.nx_pydot.to_pydot(self.graph)
        dot.set_name(name)
        return str(dot.to_string())


def build_delta(ctx: Context) -> DeltaGraph:
    """
    Adjacency from the exact products E_i A* E_j.

    Raises:
        SymmetryViolationError: E_i A* E_j and E_j A* E_i disagree on being zero.
    """
    astar_e = [ctx.Astar @ ctx.E(j) for j in range(ctx.n)]
    nonzero = [[not (ctx.E(i) @ astar_e[j]).is_zero() for j in range(ctx.n)] for i in range(ctx.n)]

    edges = []
    for i in range(ctx.n):
        for j in range(i + 1, ctx.n):
            if nonzero[i][j] != nonzero[j][i]:
                logger.error(f"Delta adjacency asymmetric at ({i}, {j})")
                raise SymmetryViolationError(f"E_{i}A*E_{j} and E_{j}A*E_{i} disagree on zero")
            if nonzero[i][j]:
                edges.append((i, j))

    delta = DeltaGraph.from_edges(ctx.n, edges)
    logger.debug(f"Delta on {ctx.n} vertices with {len(edges)} edges")
    return delta


# =============================================================================
# Tails & Q-polynomial Orderings
# =============================================================================


@dataclass(slots=True, frozen=True)
class TailReport:
    """
    Tail test for the ordered pair (i, j).

    ``offending_i`` lists neighbors of i other than j; ``offending_j``
    lists neighbors of j other than i (at most one is allowed).
    """

    pair: tuple[int, int]
    is_tail: bool
    clause_i: bool
    clause_ii: bool
    offending_i: tuple[int, ...]
    offending_j: tuple[int, ...]
    adjacent: bool

    @property
    def non_adjacent_tail(self) -> bool:
        """Tail whose two vertices are not joined in Delta."""
        return self.is_tail and not self.adjacent

    def to_dict(self) -> dict[str, Any]:
        return {
            "pair": list(self.pair),
            "is_tail": self.is_tail,
            "clause_i": self.clause_i,
            "clause_ii": self.clause_ii,
            "offending_i": list(self.offending_i),
            "offending_j": list(self.offending_j),
            "non_adjacent": self.non_adjacent_tail,
        }


def _check_pair(g: DeltaGraph, i: int, j: int) -> None:
    if i == j:
        raise InvalidPairError(f"pair ({i}, {j}) needs distinct vertices")
    if not (0 <= i < g.n_vertices and 0 <= j < g.n_vertices):
        raise InvalidPairError(f"pair ({i}, {j}) outside 0..{g.n_vertices - 1}")


def is_tail(g: DeltaGraph, i: int, j: int) -> TailReport:
    """
    (i) i has no neighbor besides j; (ii) j has at most one neighbor besides i.

    i and j need not be adjacent.
    """
    _check_pair(g, i, j)
    offending_i = tuple(sorted(g.neighbors(i) - {j}))
    offending_j = tuple(sorted(g.neighbors(j) - {i}))
    clause_i = not offending_i
    clause_ii = len(offending_j) <= 1
    report = TailReport(
        pair=(i, j),
        is_tail=clause_i and clause_ii,
        clause_i=clause_i,
        clause_ii=clause_ii,
        offending_i=offending_i,
        offending_j=offending_j,
        adjacent=g.adjacent(i, j),
    )
    if report.non_adjacent_tail:
        logger.warning(f"pair ({i}, {j}) is a tail but {i} and {j} are not adjacent")
    return report


def q_polynomial_orderings(g: DeltaGraph) -> list[tuple[int, ...]]:
    """The two end-to-end traversals when Delta is a path, otherwise none."""
    return path_traversals(g.graph)


def q_polynomial_certificates(ctx: Context, g: DeltaGraph | None = None) -> dict[tuple[int, int], tuple[int, ...]]:
    """Q-polynomial pairs mapped to the ordering that witnesses them."""
    delta = g if g is not None else build_delta(ctx)
    certificates: dict[tuple[int, int], tuple[int, ...]] = {}
    for ordering in q_polynomial_orderings(delta):
        if len(ordering) > 1 and verify_leonard_system(ctx, ordering).is_system:
            certificates.setdefault((ordering[0], ordering[1]), ordering)
    return dict(sorted(certificates.items()))


def q_polynomial_pairs(ctx: Context, g: DeltaGraph | None = None) -> list[tuple[int, int]]:
    """First two vertices of every Q-polynomial ordering."""
    return list(q_polynomial_certificates(ctx, g))


def connectivity(g: DeltaGraph) -> tuple[bool, list[list[int]]]:
    """Whether Delta is connected, and its components in ascending order."""
    components = sorted(sorted(c) for c in nx.connected_components(g.graph))
    return len(components) == 1, components


# =============================================================================
# Invariant Subspaces
# =============================================================================


def subset_from_mask(mask: int, n: int) -> frozenset[int]:
    return frozenset(h for h in range(n) if mask >> h & 1)


def all_subsets(n: int) -> Iterator[frozenset[int]]:
    """Every subset of 0..n-1 by bitmask."""
    if n - 1 > MAX_BITMASK_DEGREE:
        raise DimensionLimitError(f"bitmask subsets need d <= {MAX_BITMASK_DEGREE}")
    for mask in range(1 << n):
        yield subset_from_mask(mask, n)


def invariant_subspace_A(ctx: Context, subset: Iterable[int]) -> ExactSubspace:
    """U = sum over h in S of E_h V."""
    chosen = sorted(set(subset))
    if any(not 0 <= h < ctx.n for h in chosen):
        raise InvalidPairError(f"subset {chosen} outside 0..{ctx.d}")
    lines = [[x.value for x in line_of(ctx.E(h))] for h in chosen]
    return ExactSubspace.span(ctx.field, ctx.n, lines)


def classify_A_invariant(ctx: Context, u: ExactSubspace) -> frozenset[int]:
    """
    Recover S from an A-invariant subspace U.

    Raises:
        NotInvariantError: A U is not contained in U.
    """
    if not u.is_invariant(ctx.A):
        raise NotInvariantError(f"subspace of dimension {u.dim} is not A-invariant")
    chosen = frozenset(h for h in range(ctx.n) if u.contains(line_of(ctx.E(h))))
    if len(chosen) != u.dim:
        raise NotInvariantError(f"eigenlines in U span dimension {len(chosen)}, expected {u.dim}")
    return chosen


def crosses_cut(g: DeltaGraph, subset: Iterable[int]) -> bool:
    """Whether some Delta edge joins S to its complement."""
    inside = set(subset)
    return any((i in inside) != (j in inside) for i, j in g.graph.edges)


def astar_invariance_test(ctx: Context, subset: Iterable[int], g: DeltaGraph | None = None) -> bool:
    """
    Direct A* U <= U test, cross-checked against the cut criterion on Delta.

    Raises:
        CriterionMismatchError: the two answers differ.
    """
    chosen = frozenset(subset)
    delta = g if g is not None else build_delta(ctx)
    direct = invariant_subspace_A(ctx, chosen).is_invariant(ctx.Astar)
    criterion = not crosses_cut(delta, chosen)
    if direct != criterion:
        logger.error(f"A*-invariance of S={sorted(chosen)}: direct={direct}, cut criterion={criterion}")
        raise CriterionMismatchError(f"A*-invariance of {sorted(chosen)} disagrees with the Delta cut")
    return direct


def invariant_subspace_sweep(ctx: Context, g: DeltaGraph | None = None) -> int:
    """
    Run ``astar_invariance_test`` and the S -> U -> S round trip on every subset.

    Returns the number of subsets checked.
    """
    if ctx.d > MAX_SUBSET_SWEEP_DEGREE:
        raise DimensionLimitError(f"exhaustive subset sweep needs d <= {MAX_SUBSET_SWEEP_DEGREE}")
    delta = g if g is not None else build_delta(ctx)
    checked = 0
    for subset in all_subsets(ctx.n):
        astar_invariance_test(ctx, subset, delta)
        u = invariant_subspace_A(ctx, subset)
        if classify_A_invariant(ctx, u) != subset:
            raise CriterionMismatchError(f"subset {sorted(subset)} not recovered from its subspace")
        checked += 1
    logger.debug(f"invariant subspace sweep: {checked} subsets")
    return checked


def common_invariant_subspace(
    ctx: Context, g: DeltaGraph | None = None
) -> tuple[frozenset[int], ExactSubspace] | None:
    """
    Nonzero proper subspace invariant under both A and A*, if Delta is disconnected.

    Built from the component containing vertex 0.
    """
    delta = g if g is not None else build_delta(ctx)
    connected, components = connectivity(delta)
    if connected:
        return None
    subset = frozenset(components[0])
    u = invariant_subspace_A(ctx, subset)
    if not (u.is_invariant(ctx.A) and u.is_invariant(ctx.Astar)):
        raise CriterionMismatchError(f"component {sorted(subset)} does not give a common invariant subspace")
    return subset, u
