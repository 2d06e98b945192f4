from typing import Dict, List, Tuple
from src.graph.colored_graph import Color, ColoredGraph, Edge, edge_key
from src.graph.canonical import canonical_form_of
from src.builder.plan import Gadget, GadgetKind, Kind, UnitKind

R, B = Color.RED, Color.BLUE
RoleEdge = Tuple[str, str, Color]


def _path(roles: List[str], color: Color = B) -> List[RoleEdge]:
    return [(a, b, color) for a, b in zip(roles, roles[1:])]


_UNIT_IV = [('v0', 'v1', B), ('v1', 'v2', R), ('v2', 'v3', B),
            ('v4', 'v5', B), ('v5', 'v6', R), ('v6', 'v7', B), ('v8', 'v9', R)]
_UNIT_VI = [('w0', 'w1', B), ('w1', 'w2', R), ('w2', 'w3', B), ('w4', 'w5', R)]
_UNIT_VII = [('w6', 'w7', B), ('w7', 'w8', R), ('w9', 'w10', R)]
_UNIT_III = [('v0', 'v1', B), ('v1', 'v2', R), ('v3', 'v4', B)]
_G2_PREFIX = [('z1', 'z2', B), ('z2', 'z3', R), ('z3', 'z4', B), ('z4', 'z5', B), ('z6', 'z7', B)]
_G17_PREFIX = [('z1', 'z2', B), ('z2', 'z3', R), ('z3', 'z4', R), ('z4', 'z5', B), ('z6', 'z7', B)]

TEMPLATES: Dict[Kind, List[RoleEdge]] = {
    UnitKind.I: _path(['v1', 'v2', 'v3']),
    UnitKind.II: [('v0', 'v1', B), ('v1', 'v2', R), ('v2', 'v3', R)],
    UnitKind.III: _UNIT_III,
    UnitKind.IV: _UNIT_IV,
    UnitKind.V: [('v0', 'v1', R)],
    UnitKind.VI: _UNIT_VI,
    UnitKind.VII: _UNIT_VII,
    GadgetKind.G1: _UNIT_VI,
    GadgetKind.G2: _UNIT_VII,
    GadgetKind.G3: _path(['v0', 'v1', 'v2', 'v3', 'v4']),
    GadgetKind.G4: [('v0', 'v1', R), ('v3', 'v4', R), ('v0', 'v3', B), ('v1', 'v4', B)]
                   + _path(['v1', 'v2', 'v3']),
    GadgetKind.G5: [('v0', 'v1', R), ('v4', 'v5', R), ('v0', 'v4', B)] + _path(['v1', 'v2', 'v3', 'v4']),
    GadgetKind.G6: [('v0', 'v1', R)] + _path(['v1', 'v2', 'v3', 'v4', 'v5']),
    GadgetKind.G7: [('v0', 'v1', B), ('v1', 'v2', R), ('v2', 'v3', R), ('v1', 'v4', B), ('v3', 'v4', B)],
    GadgetKind.G8: _UNIT_III + [('v2', 'v3', B), ('v0', 'v4', B)],
    GadgetKind.G9: _UNIT_III + [('v2', 'v3', B), ('v0', 'v4', R), ('v1', 'v4', B)],
    GadgetKind.G10: _UNIT_IV + [('v3', 'v8', R), ('v7', 'v9', B), ('v0', 'v3', B),
                                ('v2', 'v8', B), ('v5', 'v8', B), ('v4', 'v9', B)],
    GadgetKind.G11: _UNIT_IV + [('v3', 'v8', B), ('v7', 'v9', B), ('v1', 'v8', B),
                                ('v2', 'v9', B), ('v0', 'v4', B)],
    GadgetKind.G12: _UNIT_IV + [('v3', 'v8', B), ('v7', 'v9', B), ('v1', 'v8', B),
                                ('v2', 'v9', B), ('v0', 'v4', R), ('v0', 'v5', B)],
    GadgetKind.G13: _G2_PREFIX + [('z5', 'z6', B), ('z1', 'z7', B)],
    GadgetKind.G14: _G2_PREFIX + [('z5', 'z6', B), ('z1', 'z7', R), ('z2', 'z7', B)],
    GadgetKind.G15: _G2_PREFIX + [('z5', 'z6', R), ('z3', 'z6', B), ('z1', 'z7', B)],
    GadgetKind.G16: _G2_PREFIX + [('z5', 'z6', R), ('z3', 'z6', B), ('z1', 'z7', R), ('z1', 'z5', B)],
    GadgetKind.G17: _G17_PREFIX + [('z5', 'z6', R), ('z1', 'z4', B), ('z2', 'z7', B), ('z3', 'z6', B)],
    GadgetKind.G18: _G17_PREFIX + [('z5', 'z6', B), ('z2', 'z7', B)],
}


def _template_key(kind: Kind) -> bytes:
    edges = TEMPLATES[kind]
    names = sorted({a for a, _, _ in edges} | {b for _, b, _ in edges})
    index = {name: i for i, name in enumerate(names)}
    codes = {edge_key(index[a], index[b]): int(c) for a, b, c in edges}
    return canonical_form_of(range(len(names)), codes).key


TEMPLATE_KEYS: Dict[Kind, bytes] = {kind: _template_key(kind) for kind in TEMPLATES}


def contracted_edges(board: ColoredGraph, gadget: Gadget) -> Dict[Edge, Color]:
    """
    Board edges induced on the gadget, with its shrunk vertices merged into the
    one of them that carries a role.
    """
    merge = {}
    if gadget.shrunk:
        named = [v for v in gadget.shrunk if v in gadget.roles.values()]
        target = named[0] if named else gadget.shrunk[0]
        merge = {v: target for v in gadget.shrunk}
    edges: Dict[Edge, Color] = {}
    for (u, v), color in board.induced(gadget.vertices).items():
        a, b = merge.get(u, u), merge.get(v, v)
        if a != b:
            edges[edge_key(a, b)] = color
    return edges


def matches_template(board: ColoredGraph, gadget: Gadget) -> bool:
    """Role-wise color check plus isomorphism with the kind's template."""
    edges = contracted_edges(board, gadget)
    roles = gadget.roles
    for a, b, color in TEMPLATES[gadget.kind]:
        if edges.get(edge_key(roles[a], roles[b])) is not color:
            return False
    vertices = sorted({v for e in edges for v in e})
    codes = {e: int(c) for e, c in edges.items()}
    return canonical_form_of(vertices, codes).key == TEMPLATE_KEYS[gadget.kind]
