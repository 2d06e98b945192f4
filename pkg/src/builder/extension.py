from typing import Dict, Generator, List, Sequence
from src.graph.colored_graph import Color, Edge
from src.builder.plan import BuilderPlan, Gadget, GadgetKind, UnitKind
from src.builder.units import unit_ii, unit_iii

R, B = Color.RED, Color.BLUE


def _core_roles(core: Sequence[int], shrunk: Sequence[int]) -> Dict[str, int]:
    """v1, v2, v3 of a type-I core, which may carry a shrunk blue tail."""
    middle = [v for v in core[1:-1] if v not in shrunk]
    return {'v1': core[0], 'v2': middle[0], 'v3': core[-1]}


class ExtensionMixin:
    """Second stage: every unit grows into one of the gadgets G1-G12."""

    plan: BuilderPlan

    def _register(self, gadget: Gadget) -> None:
        self.plan.gadgets.append(gadget)
        self.logger.debug(f"Gadget {gadget}")

    def _extend_all(self) -> Generator[Edge, Color, None]:
        units = list(self.plan.units)
        if self.plan.bad is not None:
            units.append(self.plan.bad)
        for unit in units:
            yield from self._extend(unit)

    def _extend(self, unit: Gadget) -> Generator[Edge, Color, None]:
        kind = unit.kind
        if kind is UnitKind.I:
            yield from self._extend_i(list(unit.path), unit.shrunk)
        elif kind is UnitKind.II:
            yield from self._extend_ii(unit.roles)
        elif kind is UnitKind.III:
            yield from self._extend_iii(unit.roles)
        elif kind is UnitKind.IV:
            yield from self._extend_iv(dict(unit.roles))
        elif kind is UnitKind.V:
            yield from self._extend_v(unit.roles)
        elif kind is UnitKind.VI:
            self._register(Gadget(GadgetKind.G1, dict(unit.roles)))
        else:
            self._register(Gadget(GadgetKind.G2, dict(unit.roles)))

    def _extend_i(self, core: List[int], shrunk) -> Generator[Edge, Color, None]:
        v0, v4 = self._fresh(), self._fresh()
        c01 = yield from self._draw(v0, core[0])
        c34 = yield from self._draw(core[-1], v4)
        if c01 is B and c34 is B:
            roles = {'v0': v0, **_core_roles(core, shrunk), 'v4': v4}
            self._register(Gadget(GadgetKind.G3, roles, path=tuple([v0] + core + [v4]), shrunk=shrunk))
            return
        if c01 is R and c34 is R:
            yield from self._force(v0, core[-1])
            yield from self._force(core[0], v4)
            roles = {'v0': v0, **_core_roles(core, shrunk), 'v4': v4}
            self._register(Gadget(GadgetKind.G4, roles, path=tuple([v0] + core[::-1] + [v4]), shrunk=shrunk))
            return
        if c01 is B:
            v0, v4, core = v4, v0, core[::-1]
        # v0 hangs on a red edge, v4 on a blue one
        v5 = self._fresh()
        c45 = yield from self._draw(v4, v5)
        roles = {'v0': v0, **_core_roles(core, shrunk), 'v4': v4, 'v5': v5}
        if c45 is R:
            yield from self._force(v0, v4)
            self._register(Gadget(GadgetKind.G5, roles, path=tuple(core + [v4, v0]), shrunk=shrunk))
        else:
            self._register(Gadget(GadgetKind.G6, roles, path=tuple(core + [v4, v5]), shrunk=shrunk))

    def _g7(self, v0: int, v1: int, v2: int, v3: int, v4: int) -> Gadget:
        roles = {'v0': v0, 'v1': v1, 'v2': v2, 'v3': v3, 'v4': v4}
        return Gadget(GadgetKind.G7, roles, path=(v0, v1, v4, v3), center=v2)

    def _extend_ii(self, v: Dict[str, int]) -> Generator[Edge, Color, None]:
        v4 = self._fresh()
        yield from self._force(v['v1'], v4)
        yield from self._force(v['v3'], v4)
        self._register(self._g7(v['v0'], v['v1'], v['v2'], v['v3'], v4))

    def _extend_iii(self, v: Dict[str, int]) -> Generator[Edge, Color, None]:
        c23 = yield from self._draw(v['v2'], v['v3'])
        if c23 is R:
            yield from self._force(v['v1'], v['v4'])
            self._register(self._g7(v['v0'], v['v1'], v['v2'], v['v3'], v['v4']))
            return
        c04 = yield from self._draw(v['v0'], v['v4'])
        if c04 is B:
            path = (v['v1'], v['v0'], v['v4'], v['v3'], v['v2'])
            self._register(Gadget(GadgetKind.G8, dict(v), path=path))
        else:
            yield from self._force(v['v1'], v['v4'])
            path = (v['v0'], v['v1'], v['v4'], v['v3'], v['v2'])
            self._register(Gadget(GadgetKind.G9, dict(v), path=path))

    def _extend_iv(self, v: Dict[str, int]) -> Generator[Edge, Color, None]:
        c38 = yield from self._draw(v['v3'], v['v8'])
        if c38 is R:
            yield from self._force(v['v7'], v['v9'])
            one_blue = True
        else:
            c79 = yield from self._draw(v['v7'], v['v9'])
            one_blue = c79 is R
            if one_blue:
                # swap the two brb paths and the ends of the red edge
                v = {'v0': v['v4'], 'v1': v['v5'], 'v2': v['v6'], 'v3': v['v7'],
                     'v4': v['v0'], 'v5': v['v1'], 'v6': v['v2'], 'v7': v['v3'],
                     'v8': v['v9'], 'v9': v['v8']}
        if one_blue:
            for a, b in (('v0', 'v3'), ('v2', 'v8'), ('v5', 'v8'), ('v4', 'v9')):
                yield from self._force(v[a], v[b])
            order = ('v1', 'v0', 'v3', 'v2', 'v8', 'v5', 'v4', 'v9', 'v7', 'v6')
            self._register(Gadget(GadgetKind.G10, v, path=tuple(v[r] for r in order)))
            return
        yield from self._force(v['v1'], v['v8'])
        yield from self._force(v['v2'], v['v9'])
        c04 = yield from self._draw(v['v0'], v['v4'])
        if c04 is B:
            order = ('v5', 'v4', 'v0', 'v1', 'v8', 'v3', 'v2', 'v9', 'v7', 'v6')
            self._register(Gadget(GadgetKind.G11, v, path=tuple(v[r] for r in order)))
        else:
            yield from self._force(v['v0'], v['v5'])
            order = ('v4', 'v5', 'v0', 'v1', 'v8', 'v3', 'v2', 'v9', 'v7', 'v6')
            self._register(Gadget(GadgetKind.G12, v, path=tuple(v[r] for r in order)))

    def _extend_v(self, v: Dict[str, int]) -> Generator[Edge, Color, None]:
        v0, v1 = v['v0'], v['v1']
        v2 = self._fresh()
        c12 = yield from self._draw(v1, v2)
        if c12 is R:
            v3 = self._fresh()
            yield from self._force(v2, v3)
            yield from self._extend_ii(unit_ii(v3, v2, v1, v0).roles)
            return
        v3, v4 = self._fresh(), self._fresh()
        c34 = yield from self._draw(v3, v4)
        if c34 is B:
            yield from self._extend_iii(unit_iii(v2, v1, v0, v3, v4).roles)
        else:
            roles = {'w6': v2, 'w7': v1, 'w8': v0, 'w9': v3, 'w10': v4}
            self._register(Gadget(GadgetKind.G2, roles))
