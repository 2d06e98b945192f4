from typing import Generator
from src.graph.colored_graph import Color, Edge
from src.builder.plan import BuilderPlan, Gadget, GadgetKind
from src.builder.units import unit_i, unit_iii

R, B = Color.RED, Color.BLUE


class PreambleMixin:
    """
    Opening of the P_{5k+2} game: disjoint edges until one red edge or three
    blue edges show up.
    """

    plan: BuilderPlan

    def _preamble(self) -> Generator[Edge, Color, None]:
        plan = self.plan
        e1 = (self._fresh(), self._fresh())
        c1 = yield from self._draw(*e1)
        if c1 is R:
            plan.red_edge = e1
            return
        e2 = (self._fresh(), self._fresh())
        c2 = yield from self._draw(*e2)
        if c2 is R:
            plan.red_edge = e2
            plan.pending_blue = e1
            return
        e3 = (self._fresh(), self._fresh())
        c3 = yield from self._draw(*e3)
        if c3 is R:
            plan.red_edge = e3
            (z3, z4), (z5, z6) = e1, e2
            z7 = self._fresh()
            c47 = yield from self._draw(z4, z7)
            if c47 is R:
                self._add_unit(unit_iii(z3, z4, z7, z5, z6))
            else:
                self._add_unit(unit_i((z3, z4, z7)))
                plan.pending_blue = (z5, z6)
            return
        yield from self._three_blue(e1, e2, e3)

    def _three_blue(self, e1: Edge, e2: Edge, e3: Edge) -> Generator[Edge, Color, None]:
        plan = self.plan
        (z1, z2), (z4, z5), (z6, z7) = e1, e2, e3
        z3 = self._fresh()
        c23 = yield from self._draw(z2, z3)
        c34 = yield from self._draw(z4, z3)

        if c23 is B and c34 is B:
            # z1..z5 is a blue P5; with z3z4z5 shrunk it is a type-I unit
            core = (z1, z2, z3, z4, z5)
            unit = unit_i(core)
            unit.roles = {'v1': z1, 'v2': z2, 'v3': z5}
            unit.shrunk = (z3, z4, z5)
            self._add_unit(unit)
            plan.pending_blue = (z6, z7)
            return

        if c23 is B:
            z1, z2, z4, z5 = z5, z4, z2, z1
        z = {'z1': z1, 'z2': z2, 'z3': z3, 'z4': z4, 'z5': z5, 'z6': z6, 'z7': z7}

        if c23 is not c34:
            # z2z3 red, z3z4 blue
            c56 = yield from self._draw(z5, z6)
            if c56 is B:
                c17 = yield from self._draw(z1, z7)
                if c17 is B:
                    gadget = Gadget(GadgetKind.G13, z, path=(z3, z4, z5, z6, z7, z1, z2))
                else:
                    yield from self._force(z2, z7)
                    gadget = Gadget(GadgetKind.G14, z, path=(z3, z4, z5, z6, z7, z2, z1))
            else:
                yield from self._force(z3, z6)
                c17 = yield from self._draw(z1, z7)
                if c17 is B:
                    gadget = Gadget(GadgetKind.G15, z, path=(z5, z4, z3, z6, z7, z1, z2))
                else:
                    yield from self._force(z1, z5)
                    gadget = Gadget(GadgetKind.G16, z, path=(z2, z1, z5, z4, z3, z6, z7))
        else:
            c56 = yield from self._draw(z5, z6)
            if c56 is R:
                yield from self._force(z1, z4)
                yield from self._force(z2, z7)
                yield from self._force(z3, z6)
                gadget = Gadget(GadgetKind.G17, z, path=(z3, z6, z7, z2, z1, z4, z5))
            else:
                yield from self._force(z2, z7)
                # shrinking z5z6z7 to one vertex leaves a G7
                gadget = Gadget(GadgetKind.G18, z, path=(z1, z2, z7, z6, z5, z4), center=z3)
        plan.gadgets.append(gadget)
        plan.preformed = 1
        self.logger.debug(f"Preamble gadget {gadget}")
