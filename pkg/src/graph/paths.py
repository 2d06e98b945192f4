from typing import Dict, List, Sequence, Set, Tuple
from src.graph.colored_graph import Color, ColoredGraph
from src.utils.errors import DuplicateEdge, LoopEdge


def _color_adjacency(g: ColoredGraph, color: Color) -> Dict[int, List[int]]:
    def build() -> Dict[int, List[int]]:
        adj: Dict[int, List[int]] = {}
        for u, v in g.colored_edges(color):
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        for nbrs in adj.values():
            nbrs.sort()
        return adj
    return g.cached(f'adj-{color.name}', build)


def _component(adj: Dict[int, List[int]], start: int, blocked: Set[int]) -> int:
    """Counts the vertices reachable from start without entering `blocked`."""
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj.get(u, ()):
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return len(seen)


def _components(adj: Dict[int, List[int]]) -> List[List[int]]:
    seen: Set[int] = set()
    parts = []
    for root in sorted(adj):
        if root in seen:
            continue
        part = [root]
        seen.add(root)
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    part.append(w)
                    stack.append(w)
        parts.append(sorted(part))
    return parts


def _longest_in_component(adj: Dict[int, List[int]], part: List[int], stop_at: int) -> List[int]:
    """
    Exact longest simple path inside one component by DFS with a reachability bound.
    Returns as soon as a path with `stop_at` vertices is found.
    """
    size = len(part)
    goal = min(size, stop_at)
    best: List[int] = [part[0]]
    # low-degree vertices first: they are the likely path ends
    starts = sorted(part, key=lambda u: (len(adj[u]), u))

    for start in starts:
        path = [start]
        on_path = {start}

        def extend(u: int) -> bool:
            nonlocal best
            if len(path) > len(best):
                best = list(path)
                if len(best) >= goal:
                    return True
            if len(path) + _component(adj, u, on_path - {u}) - 1 <= len(best):
                return False
            for w in adj[u]:
                if w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                if extend(w):
                    return True
                path.pop()
                on_path.discard(w)
            return False

        if extend(start):
            break
    return best


def longest_path(g: ColoredGraph, color: Color, stop_at: int = 0) -> Tuple[int, List[int]]:
    """
    Longest simple path of one color as (order, witness).

    Order 0 for a board without vertices, 1 when vertices exist but no edge of
    that color does. With stop_at > 0 the search stops once that order is reached.
    """
    if g.vertex_count == 0:
        return 0, []
    adj = _color_adjacency(g, color)
    if not adj:
        return 1, [0]
    limit = stop_at if stop_at > 0 else g.vertex_count
    best: List[int] = []
    for part in sorted(_components(adj), key=len, reverse=True):
        if len(part) <= len(best):
            break
        found = _longest_in_component(adj, part, limit)
        if len(found) > len(best):
            best = found
        if len(best) >= limit:
            break
    return len(best), best


def longest_blue_path(g: ColoredGraph) -> Tuple[int, List[int]]:
    return g.cached('longest-blue', lambda: longest_path(g, Color.BLUE))


def has_path_of_order(g: ColoredGraph, color: Color, m: int) -> bool:
    if m <= 1:
        return g.vertex_count >= m and g.vertex_count > 0
    adj = _color_adjacency(g, color)
    if not any(len(part) >= m for part in _components(adj)):
        return False
    order, _ = longest_path(g, color, stop_at=m)
    return order >= m


def has_red_path_of_order(g: ColoredGraph, m: int) -> bool:
    """True iff the red subgraph contains a simple path on m vertices."""
    return g.cached(f'red-path-{m}', lambda: has_path_of_order(g, Color.RED, m))


def has_blue_path_of_order(g: ColoredGraph, m: int) -> bool:
    return g.cached(f'blue-path-{m}', lambda: has_path_of_order(g, Color.BLUE, m))


def _check_candidate(g: ColoredGraph, u: int, v: int) -> None:
    if u == v:
        raise LoopEdge(f"Loop at vertex {u}")
    if g.has_edge(u, v):
        raise DuplicateEdge(f"Edge {u}-{v} already drawn")


def would_create_red_p4(g: ColoredGraph, u: int, v: int) -> bool:
    """
    True iff coloring the new edge uv red yields a red P4.

    Vertices beyond the board are treated as fresh (no red neighbors).
    """
    _check_candidate(g, u, v)
    ru = [w for w in g.neighbors(u, Color.RED) if w != v]
    rv = [w for w in g.neighbors(v, Color.RED) if w != u]
    # a - u - v - b
    if any(a != b for a in ru for b in rv):
        return True
    # a - b - u - v  or  u - v - b - a
    for x, rx, other in ((u, ru, v), (v, rv, u)):
        for b in rx:
            if any(a not in (x, other) for a in g.neighbors(b, Color.RED)):
                return True
    return False


def would_create_red_cycle(g: ColoredGraph, u: int, v: int) -> bool:
    """True iff u and v already lie in the same red component."""
    _check_candidate(g, u, v)
    adj = _color_adjacency(g, Color.RED)
    if u not in adj or v not in adj:
        return False
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return True
        for w in adj[x]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def red_components(g: ColoredGraph) -> List[List[int]]:
    return _components(_color_adjacency(g, Color.RED))


def is_red_star_forest(g: ColoredGraph) -> bool:
    """Every red component is a star (no red cycle, no red P4)."""
    adj = _color_adjacency(g, Color.RED)
    for part in _components(adj):
        edges = sum(len(adj[u]) for u in part) // 2
        if edges != len(part) - 1:
            return False
        if len(part) > 2 and max(len(adj[u]) for u in part) != len(part) - 1:
            return False
    return True


def is_blue_path(g: ColoredGraph, sequence: Sequence[int]) -> bool:
    if len(set(sequence)) != len(sequence):
        return False
    return all(g.color(a, b) is Color.BLUE for a, b in zip(sequence, sequence[1:]))
