from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple
from src.graph.colored_graph import ColoredGraph, Edge, edge_key
from src.utils.config import SPARE_ISOLATED

CanonicalKey = bytes
Permutation = Dict[int, int]


@dataclass(frozen=True)
class CanonicalForm:
    """
    Result of canonical labeling of the non-isolated part of a board.

    order[i] is the vertex placed at canonical index i. For two boards with the
    same key, order_a[i] -> order_b[i] is a color-preserving isomorphism.
    generators generate the full automorphism group of the labeled part.
    """
    key: CanonicalKey
    order: Tuple[int, ...]
    generators: Tuple[Permutation, ...]

    def index_of(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


# --- single connected component ------------------------------------------------


def _refine(colors: List[int], nbrs: List[List[Tuple[int, int]]]) -> List[int]:
    """Color refinement by (own color, multiset of (edge code, neighbor color))."""
    cells = len(set(colors))
    while True:
        sigs = [
            (colors[i], tuple(sorted((code, colors[j]) for j, code in nbrs[i])))
            for i in range(len(colors))
        ]
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        refined = [ranking[s] for s in sigs]
        if len(ranking) == cells:
            return refined
        colors, cells = refined, len(ranking)


def _encode(order: Sequence[int], codes: Mapping[Edge, int]) -> bytes:
    out = bytearray()
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            out.append(codes.get(edge_key(a, b), 0))
    return bytes(out)


def _twin_classes(size: int, nbrs: List[List[Tuple[int, int]]]) -> List[int]:
    """Vertices with the same colored neighborhood (ignoring each other) share a class id."""
    profile = [frozenset(nbrs[i]) for i in range(size)]
    twin_of = list(range(size))
    for i in range(size):
        if twin_of[i] != i:
            continue
        for j in range(i + 1, size):
            if twin_of[j] != j:
                continue
            code = next((c for w, c in nbrs[i] if w == j), 0)
            if profile[i] - {(j, code)} == profile[j] - {(i, code)}:
                twin_of[j] = i
    return twin_of


def _label_component(size: int, codes: Mapping[Edge, int]) -> Tuple[bytes, Tuple[int, ...], List[Permutation]]:
    """
    Individualization-refinement over local ids 0..size-1 keeping the
    lexicographically least adjacency encoding. Children that only differ by a
    twin swap are skipped; those swaps are returned as extra generators.
    """
    nbrs: List[List[Tuple[int, int]]] = [[] for _ in range(size)]
    for (u, v), code in codes.items():
        nbrs[u].append((v, code))
        nbrs[v].append((u, code))
    twin_of = _twin_classes(size, nbrs)

    best: List[Optional[bytes]] = [None]
    leaves: List[Tuple[int, ...]] = []

    def search(colors: List[int]) -> None:
        colors = _refine(colors, nbrs)
        if len(set(colors)) == size:
            order = tuple(sorted(range(size), key=colors.__getitem__))
            enc = _encode(order, codes)
            if best[0] is None or enc < best[0]:
                best[0] = enc
                leaves.clear()
                leaves.append(order)
            elif enc == best[0]:
                leaves.append(order)
            return
        sizes: Dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((n, c) for c, n in sizes.items() if n > 1)[1]
        tried: Set[int] = set()
        for v in range(size):
            if colors[v] != target or twin_of[v] in tried:
                continue
            tried.add(twin_of[v])
            search([2 * c + (1 if c == target and i != v else 0) for i, c in enumerate(colors)])

    search([0] * size)
    first = leaves[0]
    generators = [{first[t]: leaf[t] for t in range(size)} for leaf in leaves[1:]]
    for j, i in enumerate(twin_of):
        if i != j:
            swap = {x: x for x in range(size)}
            swap[i], swap[j] = j, i
            generators.append(swap)
    return best[0], first, generators


# --- whole board ---------------------------------------------------------------


def _connected_parts(vertices: Sequence[int], codes: Mapping[Edge, int]) -> List[List[int]]:
    adj: Dict[int, List[int]] = {v: [] for v in vertices}
    for u, v in codes:
        adj[u].append(v)
        adj[v].append(u)
    seen: Set[int] = set()
    parts = []
    for root in vertices:
        if root in seen:
            continue
        seen.add(root)
        part, stack = [root], [root]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    part.append(w)
                    stack.append(w)
        parts.append(part)
    return parts


def canonical_form_of(vertices: Sequence[int], codes: Mapping[Edge, int]) -> CanonicalForm:
    """
    Canonical labeling of the graph on `vertices` whose edges carry small positive
    integer codes. Components are labeled one by one and sorted by their keys.
    """
    chosen = set(vertices)
    codes = {e: c for e, c in codes.items() if e[0] in chosen and e[1] in chosen}
    labeled = []
    for part in _connected_parts(list(vertices), codes):
        index = {v: i for i, v in enumerate(part)}
        local = {edge_key(index[u], index[v]): c for (u, v), c in codes.items() if u in index}
        enc, order, gens = _label_component(len(part), local)
        comp_key = len(part).to_bytes(2, 'big') + enc
        labeled.append((comp_key, [part[i] for i in order],
                        [{part[a]: part[b] for a, b in g.items()} for g in gens]))
    labeled.sort(key=lambda item: item[0])

    key = len(labeled).to_bytes(2, 'big') + b''.join(item[0] for item in labeled)
    order: List[int] = []
    generators: List[Permutation] = []
    for pos, (comp_key, comp_order, gens) in enumerate(labeled):
        order.extend(comp_order)
        generators.extend(gens)
        if pos and labeled[pos - 1][0] == comp_key:
            prev = labeled[pos - 1][1]
            swap = {}
            for a, b in zip(prev, comp_order):
                swap[a], swap[b] = b, a
            generators.append(swap)
    return CanonicalForm(key=key, order=tuple(order), generators=tuple(generators))


def _non_isolated(g: ColoredGraph) -> List[int]:
    return [v for v in g.vertices() if g.degree(v) > 0]


def canonical_form(g: ColoredGraph) -> CanonicalForm:
    """Canonical form of the non-isolated part of the board."""
    def compute() -> CanonicalForm:
        codes = {e: int(c) for e, c in g.edges.items()}
        return canonical_form_of(_non_isolated(g), codes)
    return g.cached('canonical-form', compute)


def canonical_key(g: ColoredGraph, spare_isolated: Optional[int] = None) -> CanonicalKey:
    """
    Isomorphism-invariant key of a colored board. Isolated vertices beyond
    `spare_isolated` are folded away, so on the infinite board the key only
    records whether a spare fresh vertex is present.
    """
    spare = SPARE_ISOLATED if spare_isolated is None else spare_isolated
    isolated = g.vertex_count - len(_non_isolated(g))
    return bytes([min(isolated, spare, 255)]) + canonical_form(g).key


# --- orbits ----------------------------------------------------------------------


def vertex_orbits(vertices: Iterable[int], generators: Sequence[Permutation]) -> List[List[int]]:
    """Partition of `vertices` into orbits of the group spanned by `generators`."""
    parent = {v: v for v in vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in generators:
        for a, b in perm.items():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[int, List[int]] = {}
    for v in parent:
        groups.setdefault(find(v), []).append(v)
    return sorted(sorted(group) for group in groups.values())


def pair_orbit_representatives(pairs: Iterable[Edge], generators: Sequence[Permutation]) -> List[Edge]:
    """One representative (the first met) per orbit of unordered pairs."""
    remaining = {edge_key(*p) for p in pairs}
    reps = []
    for pair in sorted(remaining):
        if pair not in remaining:
            continue
        reps.append(pair)
        frontier = [pair]
        remaining.discard(pair)
        while frontier:
            a, b = frontier.pop()
            for perm in generators:
                image = edge_key(perm.get(a, a), perm.get(b, b))
                if image in remaining:
                    remaining.discard(image)
                    frontier.append(image)
    return reps
