"""Path-graph detection on networkx graphs."""

import networkx as nx


def is_path_graph(graph: nx.Graph) -> bool:
    """
    Connected, acyclic and of maximum degree at most 2.

    A single vertex counts as a (trivial) path.
    """
    n = graph.number_of_nodes()
    if n == 0:
        return False
    if graph.number_of_edges() != n - 1:
        return False
    if any(deg > 2 for _, deg in graph.degree()):
        return False
    return bool(nx.is_connected(graph))


def path_traversals(graph: nx.Graph) -> list[tuple[int, ...]]:
    """
    Both end-to-end traversals of a path graph, sorted; empty otherwise.

    A single vertex yields one traversal.
    """
    if not is_path_graph(graph):
        return []
    if graph.number_of_nodes() == 1:
        return [tuple(graph.nodes)]
    ends = sorted(v for v, deg in graph.degree() if deg == 1)
    forward = tuple(nx.shortest_path(graph, ends[0], ends[1]))
    return sorted([forward, forward[::-1]])
