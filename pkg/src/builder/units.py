from typing import Generator, Tuple
from src.graph.colored_graph import Color, Edge
from src.builder.plan import BuilderPlan, Gadget, UnitKind

R, B = Color.RED, Color.BLUE
P3 = Tuple[int, int, int, Color, Color]


def unit_i(path) -> Gadget:
    return Gadget(UnitKind.I, {'v1': path[0], 'v2': path[1], 'v3': path[2]}, path=tuple(path))


def unit_ii(v0: int, v1: int, v2: int, v3: int) -> Gadget:
    return Gadget(UnitKind.II, {'v0': v0, 'v1': v1, 'v2': v2, 'v3': v3})


def unit_iii(v0: int, v1: int, v2: int, v3: int, v4: int) -> Gadget:
    return Gadget(UnitKind.III, {'v0': v0, 'v1': v1, 'v2': v2, 'v3': v3, 'v4': v4})


def unit_vi(w0: int, w1: int, w2: int, w3: int, w4: int, w5: int) -> Gadget:
    return Gadget(UnitKind.VI, {'w0': w0, 'w1': w1, 'w2': w2, 'w3': w3, 'w4': w4, 'w5': w5})


def unit_vii(w6: int, w7: int, w8: int, w9: int, w10: int) -> Gadget:
    return Gadget(UnitKind.VII, {'w6': w6, 'w7': w7, 'w8': w8, 'w9': w9, 'w10': w10})


class UnitCreationMixin:
    """First stage: k good units, or k-1 good units and a nonempty bad unit."""

    plan: BuilderPlan

    def _p3(self) -> Generator[Edge, Color, P3]:
        """A new P3 v1v2v3; a pending blue edge is reused as v1v2."""
        if self.plan.pending_blue is not None:
            v1, v2 = self.plan.pending_blue
            self.plan.pending_blue = None
            v3 = self._fresh()
            c23 = yield from self._draw(v2, v3)
            return v1, v2, v3, B, c23
        v1, v2, v3 = self._fresh(), self._fresh(), self._fresh()
        c12 = yield from self._draw(v1, v2)
        c23 = yield from self._draw(v2, v3)
        return v1, v2, v3, c12, c23

    def _add_unit(self, unit: Gadget) -> None:
        self.plan.units.append(unit)
        self.logger.debug(f"Unit {unit} (count {self.plan.unit_count})")

    def _set_bad(self, unit) -> None:
        self.plan.bad = unit
        self.logger.debug(f"Bad unit is now {unit}")

    def _create_units(self) -> Generator[Edge, Color, None]:
        plan = self.plan
        k = plan.k
        while True:
            count = plan.unit_count
            if count >= k or (count == k - 1 and plan.bad is not None):
                return
            last = count == k - 1
            v1, v2, v3, c12, c23 = yield from self._p3()

            if c12 is B and c23 is B:
                self._add_unit(unit_i((v1, v2, v3)))
                continue
            if c12 is R and c23 is R:
                v4 = self._fresh()
                yield from self._force(v3, v4)
                self._add_unit(unit_ii(v4, v3, v2, v1))
                continue
            if c12 is R:
                v1, v3 = v3, v1
            # v1v2 blue, v2v3 red from here on

            if last:
                v4, v5 = self._fresh(), self._fresh()
                c45 = yield from self._draw(v4, v5)
                if c45 is B:
                    self._add_unit(unit_iii(v1, v2, v3, v4, v5))
                else:
                    self._set_bad(unit_vii(v1, v2, v3, v4, v5))
                continue

            if plan.bad is None:
                v4, v5 = self._fresh(), self._fresh()
                c45 = yield from self._draw(v4, v5)
                if c45 is B:
                    self._add_unit(unit_iii(v1, v2, v3, v4, v5))
                    continue
                v6 = self._fresh()
                c36 = yield from self._draw(v3, v6)
                if c36 is R:
                    self._add_unit(unit_ii(v1, v2, v3, v6))
                    self._set_bad(Gadget(UnitKind.V, {'v0': v4, 'v1': v5}))
                else:
                    self._set_bad(unit_vi(v1, v2, v3, v6, v4, v5))
                continue

            v6 = self._fresh()
            c36 = yield from self._draw(v3, v6)
            if c36 is R:
                self._add_unit(unit_ii(v1, v2, v3, v6))
            elif plan.bad.kind is UnitKind.V:
                bad = plan.bad.roles
                self._set_bad(unit_vi(v1, v2, v3, v6, bad['v0'], bad['v1']))
            else:
                w = plan.bad.roles
                roles = {'v0': w['w0'], 'v1': w['w1'], 'v2': w['w2'], 'v3': w['w3'],
                         'v4': v1, 'v5': v2, 'v6': v3, 'v7': v6, 'v8': w['w4'], 'v9': w['w5']}
                self._add_unit(Gadget(UnitKind.IV, roles))
                self._set_bad(None)
