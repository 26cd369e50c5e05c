"""
Unit tests for the graph Delta, tails and invariant subspaces.
"""

import networkx as nx
import pytest

from leonard.algebra.field import FieldSpec
from leonard.algebra.matrix import ExactSubspace
from leonard.core.errors import InvalidPairError, NotInvariantError
from leonard.structure.context import Context
from leonard.structure.delta import (
    DeltaGraph,
    astar_invariance_test,
    build_delta,
    classify_A_invariant,
    common_invariant_subspace,
    connectivity,
    crosses_cut,
    invariant_subspace_A,
    invariant_subspace_sweep,
    is_tail,
    q_polynomial_certificates,
    q_polynomial_orderings,
    q_polynomial_pairs,
)
from leonard.structure.paths import is_path_graph, path_traversals


class TestBuildDelta:
    """Tests for the adjacency of Delta."""

    def test_krawtchouk_path(self, krawtchouk3: Context) -> None:
        """Test that Delta is the path 0-1-2-3."""
        assert build_delta(krawtchouk3).edges() == [(0, 1), (1, 2), (2, 3)]

    def test_triangle(self, k3_context: Context) -> None:
        """Test the complete graph on three vertices."""
        assert build_delta(k3_context).edges() == [(0, 1), (0, 2), (1, 2)]

    def test_repeated_dual(self, repeated_dual_context: Context) -> None:
        """Test the two disjoint edges."""
        g = build_delta(repeated_dual_context)
        assert g.edges() == [(0, 2), (1, 3)]
        assert g.degree(0) == 1

    def test_symmetric_on_random_context(self, random_gf_context: Context) -> None:
        """Test that the adjacency matrix is symmetric with an empty diagonal."""
        adjacency = build_delta(random_gf_context).adjacency()
        n = random_gf_context.n
        assert all(not adjacency[i][i] for i in range(n))
        assert all(adjacency[i][j] == adjacency[j][i] for i in range(n) for j in range(n))

    def test_to_dot(self, krawtchouk3: Context) -> None:
        """Test DOT export."""
        text = build_delta(krawtchouk3).to_dot()
        assert "graph" in text
        assert "--" in text

    def test_to_dict(self, krawtchouk2: Context) -> None:
        """Test the JSON-ready form."""
        assert build_delta(krawtchouk2).to_dict() == {"vertices": 3, "edges": [[0, 1], [1, 2]]}


class TestTails:
    """Tests for is_tail."""

    def test_path_ends(self, krawtchouk3: Context) -> None:
        """Test that both ends of the path are tails towards their neighbor."""
        g = build_delta(krawtchouk3)
        assert is_tail(g, 0, 1).is_tail
        assert is_tail(g, 3, 2).is_tail

    def test_interior_vertex(self, krawtchouk3: Context) -> None:
        """Test that an interior vertex fails clause (i)."""
        report = is_tail(build_delta(krawtchouk3), 1, 0)
        assert not report.is_tail
        assert not report.clause_i
        assert report.offending_i == (2,)

    def test_clause_ii(self) -> None:
        """Test a star whose center has two other neighbors."""
        g = DeltaGraph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
        report = is_tail(g, 0, 1)
        assert report.clause_i
        assert not report.clause_ii
        assert report.offending_j == (2, 3)

    def test_non_adjacent_tail(self) -> None:
        """Test an isolated vertex paired with a leaf."""
        g = DeltaGraph.from_edges(3, [(1, 2)])
        report = is_tail(g, 0, 1)
        assert report.is_tail
        assert report.non_adjacent_tail
        assert report.to_dict()["non_adjacent"] is True

    def test_triangle_has_no_tails(self, k3_context: Context) -> None:
        """Test every ordered pair of K3."""
        g = build_delta(k3_context)
        assert not any(is_tail(g, i, j).is_tail for i in range(3) for j in range(3) if i != j)

    def test_invalid_pairs(self, krawtchouk3: Context) -> None:
        """Test equal vertices, out-of-range vertices and loops."""
        g = build_delta(krawtchouk3)
        with pytest.raises(InvalidPairError):
            is_tail(g, 1, 1)
        with pytest.raises(InvalidPairError):
            is_tail(g, 0, 9)
        with pytest.raises(InvalidPairError):
            DeltaGraph.from_edges(2, [(1, 1)])


class TestOrderings:
    """Tests for Q-polynomial orderings and pairs."""

    def test_krawtchouk(self, krawtchouk3: Context) -> None:
        """Test both traversals and their certificates."""
        g = build_delta(krawtchouk3)
        assert q_polynomial_orderings(g) == [(0, 1, 2, 3), (3, 2, 1, 0)]
        assert q_polynomial_certificates(krawtchouk3, g) == {
            (0, 1): (0, 1, 2, 3),
            (3, 2): (3, 2, 1, 0),
        }
        assert q_polynomial_pairs(krawtchouk3) == [(0, 1), (3, 2)]

    def test_non_path_graphs(self, k3_context: Context, repeated_dual_context: Context) -> None:
        """Test that a triangle and a disconnected graph have no orderings."""
        assert q_polynomial_orderings(build_delta(k3_context)) == []
        assert q_polynomial_pairs(k3_context) == []
        assert q_polynomial_pairs(repeated_dual_context) == []

    def test_path_helpers(self) -> None:
        """Test path detection on small graphs."""
        assert not is_path_graph(nx.Graph())
        assert is_path_graph(nx.path_graph(1))
        assert not is_path_graph(nx.cycle_graph(4))
        assert path_traversals(nx.path_graph(1)) == [(0,)]
        assert path_traversals(nx.star_graph(3)) == []


class TestConnectivity:
    """Tests for components and common invariant subspaces."""

    def test_connected(self, krawtchouk3: Context) -> None:
        """Test a connected Delta has no common invariant subspace."""
        g = build_delta(krawtchouk3)
        assert connectivity(g) == (True, [[0, 1, 2, 3]])
        assert common_invariant_subspace(krawtchouk3, g) is None

    def test_disconnected(self, repeated_dual_context: Context) -> None:
        """Test the subspace built from the component of vertex 0."""
        g = build_delta(repeated_dual_context)
        assert connectivity(g) == (False, [[0, 2], [1, 3]])
        found = common_invariant_subspace(repeated_dual_context, g)
        assert found is not None
        subset, u = found
        assert subset == frozenset({0, 2})
        assert u.dim == 2
        assert u.is_invariant(repeated_dual_context.A)
        assert u.is_invariant(repeated_dual_context.Astar)


class TestInvariantSubspaces:
    """Tests for the subset to subspace correspondence."""

    def test_round_trip(self, krawtchouk3: Context) -> None:
        """Test S -> U -> S for one subset."""
        u = invariant_subspace_A(krawtchouk3, {1, 3})
        assert u.dim == 2
        assert classify_A_invariant(krawtchouk3, u) == frozenset({1, 3})

    def test_astar_invariance(self, krawtchouk3: Context) -> None:
        """Test the cut criterion on the path."""
        g = build_delta(krawtchouk3)
        assert not crosses_cut(g, {0, 1, 2, 3})
        assert astar_invariance_test(krawtchouk3, set(), g)
        assert astar_invariance_test(krawtchouk3, {0, 1, 2, 3}, g)
        assert not astar_invariance_test(krawtchouk3, {0, 1}, g)

    def test_component_is_invariant(self, repeated_dual_context: Context) -> None:
        """Test that a component of Delta gives an A*-invariant subspace."""
        assert astar_invariance_test(repeated_dual_context, {1, 3})
        assert not astar_invariance_test(repeated_dual_context, {0, 1})

    def test_sweep_counts(
        self, krawtchouk3: Context, k3_context: Context, repeated_dual_context: Context
    ) -> None:
        """Test that the sweep visits every subset."""
        assert invariant_subspace_sweep(krawtchouk3) == 16
        assert invariant_subspace_sweep(k3_context) == 8
        assert invariant_subspace_sweep(repeated_dual_context) == 16

    def test_sweep_random(self, random_gf_context: Context) -> None:
        """Test the sweep over GF(101)."""
        assert invariant_subspace_sweep(random_gf_context) == 16

    def test_not_invariant(self, krawtchouk3: Context, rational: FieldSpec) -> None:
        """Test that a coordinate line is not A-invariant."""
        u = ExactSubspace.span(rational, 4, [[1, 0, 0, 0]])
        with pytest.raises(NotInvariantError):
            classify_A_invariant(krawtchouk3, u)

    def test_subset_out_of_range(self, krawtchouk3: Context) -> None:
        """Test that vertices outside 0..d are rejected."""
        with pytest.raises(InvalidPairError):
            invariant_subspace_A(krawtchouk3, {4})
