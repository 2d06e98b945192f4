from enum import IntEnum
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple
from src.utils.errors import DuplicateEdge, LoopEdge, UnknownVertex

Edge = Tuple[int, int]


class Color(IntEnum):
    """Edge colors. The integer order (Red < Blue) is the canonical tie-break order."""
    RED = 1
    BLUE = 2

    @property
    def letter(self) -> str:
        return 'r' if self is Color.RED else 'b'

    @classmethod
    def parse(cls, text: str) -> 'Color':
        value = text.strip().lower()
        if value in ('r', 'red'):
            return cls.RED
        if value in ('b', 'blue'):
            return cls.BLUE
        raise ValueError(f"Unknown color: {text!r}")


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """
    Append-only red/blue board.

    Vertices are the integers 0..vertex_count-1, handed out by a monotone counter;
    a vertex that was never touched is a fresh vertex of the infinite board.
    Instances are never mutated: add_vertex / add_edge return new graphs.
    """

    __slots__ = ('_n', '_edges', '_adj', '_cache')

    def __init__(self, vertex_count: int = 0, edges: Optional[Mapping[Edge, Color]] = None) -> None:
        self._n = vertex_count
        self._edges: Dict[Edge, Color] = {}
        self._adj: List[Dict[int, Color]] = [dict() for _ in range(vertex_count)]
        self._cache: Dict[str, object] = {}
        for (u, v), color in (edges or {}).items():
            self._check_new_edge(u, v)
            key = edge_key(u, v)
            self._edges[key] = Color(color)
            self._adj[u][v] = Color(color)
            self._adj[v][u] = Color(color)

    # construction -------------------------------------------------------

    @classmethod
    def empty(cls) -> 'ColoredGraph':
        return cls(0)

    def _copy(self, vertex_count: int) -> 'ColoredGraph':
        clone = ColoredGraph.__new__(ColoredGraph)
        clone._n = vertex_count
        clone._edges = dict(self._edges)
        clone._adj = [dict(nbrs) for nbrs in self._adj]
        clone._adj.extend(dict() for _ in range(vertex_count - self._n))
        clone._cache = {}
        return clone

    def add_vertex(self) -> Tuple['ColoredGraph', int]:
        """Allocates the next fresh vertex and returns (new graph, its id)."""
        return self._copy(self._n + 1), self._n

    def ensure_vertices(self, upto: int) -> 'ColoredGraph':
        """Returns a graph whose vertex set contains every id up to `upto`."""
        if upto < self._n:
            return self
        return self._copy(upto + 1)

    def _check_new_edge(self, u: int, v: int) -> None:
        if u == v:
            raise LoopEdge(f"Loop at vertex {u}")
        for w in (u, v):
            if not 0 <= w < self._n:
                raise UnknownVertex(f"Vertex {w} is not on the board (vertex_count={self._n})")
        if edge_key(u, v) in self._edges:
            raise DuplicateEdge(f"Edge {u}-{v} already drawn")

    def add_edge(self, u: int, v: int, color: Color) -> 'ColoredGraph':
        """Returns a new graph with the edge uv colored `color`; this graph is unchanged."""
        self._check_new_edge(u, v)
        clone = self._copy(self._n)
        clone._edges[edge_key(u, v)] = Color(color)
        clone._adj[u][v] = Color(color)
        clone._adj[v][u] = Color(color)
        return clone

    # queries ------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Mapping[Edge, Color]:
        return MappingProxyType(self._edges)

    def vertices(self) -> range:
        return range(self._n)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edges

    def color(self, u: int, v: int) -> Optional[Color]:
        return self._edges.get(edge_key(u, v))

    def neighbors(self, u: int, color: Optional[Color] = None) -> List[int]:
        if not 0 <= u < self._n:
            return []
        return [w for w, c in self._adj[u].items() if color is None or c is color]

    def degree(self, u: int) -> int:
        return len(self._adj[u]) if 0 <= u < self._n else 0

    def colored_edges(self, color: Color) -> Iterator[Edge]:
        return (e for e, c in self._edges.items() if c is color)

    def is_legal(self, u: int, v: int) -> bool:
        return u != v and u >= 0 and v >= 0 and not self.has_edge(u, v)

    def induced(self, vertices) -> Dict[Edge, Color]:
        chosen = set(vertices)
        return {e: c for e, c in self._edges.items() if e[0] in chosen and e[1] in chosen}

    def cached(self, name: str, compute):
        """Memoizes a derived value on this (immutable) instance."""
        if name not in self._cache:
            self._cache[name] = compute()
        return self._cache[name]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        body = ', '.join(f"{u}-{v}:{c.letter}" for (u, v), c in sorted(self._edges.items()))
        return f"ColoredGraph(n={self._n}, {{{body}}})"
