from typing import Generator, List, Optional, Set
from src.graph.colored_graph import Color, Edge
from src.graph.paths import is_blue_path
from src.builder.plan import (
    ATTACH_KINDS, CHAIN_KINDS, G7_KINDS, BuilderPlan, Gadget, GadgetKind,
    connection_contract, pair_contract,
)
from src.utils.errors import PlanDesync

R, B = Color.RED, Color.BLUE
Path = List[int]

PREAMBLE_KINDS = frozenset({GadgetKind.G13, GadgetKind.G14, GadgetKind.G15,
                            GadgetKind.G16, GadgetKind.G17, GadgetKind.G18})


def _enlarged(gadget: Gadget) -> bool:
    """Gadgets built from the three-blue opening carry two vertices more than their plain kind."""
    return bool(gadget.shrunk) or gadget.kind in PREAMBLE_KINDS


class ConnectionMixin:
    """Third stage: all gadgets are joined into one blue path by forced edges."""

    plan: BuilderPlan

    def _chain(self, gadgets: List[Gadget]) -> Generator[Edge, Color, Optional[Path]]:
        if not gadgets:
            return None
        path = list(gadgets[0].path)
        for gadget in gadgets[1:]:
            yield from self._force(path[-1], gadget.path[0])
            path.extend(gadget.path)
        return path

    def _connect(self) -> Generator[Edge, Color, Path]:
        plan = self.plan
        chain = [g for g in plan.gadgets if g.kind in CHAIN_KINDS]
        g7s = [g for g in plan.gadgets if g.kind in G7_KINDS]
        attach = [g for g in plan.gadgets if g.kind in ATTACH_KINDS]
        g1 = next((g for g in plan.gadgets if g.kind is GadgetKind.G1), None)
        g2 = next((g for g in plan.gadgets if g.kind is GadgetKind.G2), None)
        z = plan.red_edge
        z_used = False

        chained = yield from self._chain(chain)
        if z is not None and chained:
            z1, z2 = z
            yield from self._force(z1, chained[0])
            yield from self._force(z2, chained[-1])
            chained = [z1] + chained + [z2]
            z_used = True

        c7 = len(g7s)
        special = c7 == 1 and not chain and g1 is None and g2 is None
        hub_trick = z is not None and not z_used and not special and (c7 > 0 or g1 or g2)
        involved = chain + g7s + [g for g in (g1, g2) if g is not None]

        if special:
            partner = attach.pop(0)
            final = yield from self._pair_with_g7(g7s[0], partner)
            involved += [g7s[0], partner]
            edges = len(self.board.induced(self._involved_vertices(involved, final)))
            extra = 2 if any(_enlarged(g) for g in involved) else 0
            pair_contract(edges - extra, len(final) - extra)
        else:
            final = None
            if c7:
                a_path = yield from self._chain(g7s)
                b_path = [g7s[0].center]
                if hub_trick:
                    z1, z2 = z
                    yield from self._force(z1, g7s[0].center)
                    yield from self._force(z2, g7s[0].center)
                    b_path = [z1, g7s[0].center, z2] if c7 == 1 else [z2, g7s[0].center, z1]
                    z_used = True
                for gadget in g7s[1:]:
                    yield from self._force(b_path[-1], gadget.center)
                    b_path.append(gadget.center)

            if g1 is not None:
                final = yield from self._connect_g1(g1.roles, a_path if c7 else None,
                                                    b_path if c7 else None, chained,
                                                    z if hub_trick and not c7 else None)
                z_used = z_used or (hub_trick and not c7)
            elif g2 is not None:
                final = yield from self._connect_g2(g2.roles, a_path if c7 else None,
                                                    b_path if c7 else None, chained,
                                                    z if hub_trick and not c7 else None)
                z_used = z_used or (hub_trick and not c7)
            elif c7 == 1:
                yield from self._force(a_path[-1], chained[0])
                yield from self._force(chained[-1], b_path[0])
                final = a_path + chained + b_path
            elif c7 >= 2:
                yield from self._force(a_path[-1], b_path[0])
                final = a_path + b_path
                if chained:
                    yield from self._force(b_path[-1], chained[0])
                    final += chained
            else:
                final = chained

            if final is not None:
                edges = len(self.board.induced(self._involved_vertices(involved, final)))
                spliced = z_used or any(_enlarged(g) for g in involved)
                connection_contract(edges, len(final), plan.c_prime,
                                    extra_edges=3 if spliced else 0, extra_order=2 if spliced else 0)
                self.logger.info("Every blue edge of the connected part lies on the path: "
                                 f"{self._blue_edges_on_path(involved, final)}")

        if final is None:
            first = attach.pop(0)
            if z is not None and not z_used:
                final = yield from self._open_with_red_edge(z, first)
                z_used = True
            else:
                final = list(first.path)

        for gadget in attach:
            final = yield from self._attach(final, gadget)

        if z is not None and not z_used:
            final = yield from self._append_red_edge(final, z)

        if not is_blue_path(self.board, final):
            self.logger.error(f"Connection stage ended without a blue path: {final}")
            raise PlanDesync("Connected structure is not a blue path")
        return final

    # --- bad-unit hubs ---------------------------------------------------------------

    def _connect_g1(self, w, a_path, b_path, chained, z) -> Generator[Edge, Color, Path]:
        if a_path is None:
            if z is not None:
                z1, z2 = z
                for u, v in ((z1, w['w4']), (z2, w['w4']), (w['w1'], z1), (z2, w['w2'])):
                    yield from self._force(u, v)
                return [w['w0'], w['w1'], z1, w['w4'], z2, w['w2'], w['w3']]
            yield from self._force(w['w1'], w['w4'])
            if chained:
                yield from self._force(w['w4'], chained[0])
                yield from self._force(chained[-1], w['w2'])
                return [w['w0'], w['w1'], w['w4']] + chained + [w['w2'], w['w3']]
            yield from self._force(w['w4'], w['w2'])
            return [w['w0'], w['w1'], w['w4'], w['w2'], w['w3']]
        yield from self._force(a_path[-1], w['w0'])
        yield from self._force(w['w1'], w['w4'])
        yield from self._force(w['w4'], b_path[0])
        head = a_path + [w['w0'], w['w1'], w['w4']] + b_path
        if chained:
            yield from self._force(b_path[-1], chained[0])
            yield from self._force(chained[-1], w['w2'])
            return head + chained + [w['w2'], w['w3']]
        yield from self._force(b_path[-1], w['w2'])
        return head + [w['w2'], w['w3']]

    def _connect_g2(self, w, a_path, b_path, chained, z) -> Generator[Edge, Color, Path]:
        if a_path is None:
            if z is not None:
                z1, z2 = z
                for u, v in ((z1, w['w9']), (z2, w['w9']), (w['w7'], z1), (z2, w['w8']), (w['w8'], w['w10'])):
                    yield from self._force(u, v)
                return [w['w6'], w['w7'], z1, w['w9'], z2, w['w8'], w['w10']]
            for u, v in ((w['w7'], w['w9']), (w['w8'], w['w9']), (w['w8'], w['w10'])):
                yield from self._force(u, v)
            core = [w['w6'], w['w7'], w['w9'], w['w8'], w['w10']]
            if chained:
                yield from self._force(w['w10'], chained[0])
                return core + chained
            return core
        yield from self._force(a_path[-1], w['w6'])
        for u, v in ((w['w7'], w['w9']), (w['w9'], w['w8']), (w['w8'], w['w10'])):
            yield from self._force(u, v)
        yield from self._force(w['w10'], b_path[0])
        final = a_path + [w['w6'], w['w7'], w['w9'], w['w8'], w['w10']] + b_path
        if chained:
            yield from self._force(b_path[-1], chained[0])
            final += chained
        return final

    # --- G3 / G6 ---------------------------------------------------------------------

    def _pair_with_g7(self, g7: Gadget, partner: Gadget) -> Generator[Edge, Color, Path]:
        """A lone G7 plus a G3 or G6 gives a blue P10 in at most three more rounds."""
        p4 = list(g7.path)
        v2, v3 = g7.center, p4[-1]
        x = list(partner.path)
        if partner.kind is GadgetKind.G3:
            c = yield from self._draw(v2, x[-1])
            if c is B:
                yield from self._force(v3, x[0])
                return p4 + x + [v2]
            v5 = self._fresh()
            yield from self._force(v3, v5)
            yield from self._force(x[-1], v5)
            return p4 + [v5] + x[::-1]
        yield from self._force(x[0], v2)
        yield from self._force(x[-1], v3)
        return [v2] + x + p4[::-1]

    def _open_with_red_edge(self, z: Edge, first: Gadget) -> Generator[Edge, Color, Path]:
        """Only G3/G6 gadgets exist: the red edge z1z2 joins the first of them."""
        z1, z2 = z
        x = list(first.path)
        if first.kind is GadgetKind.G6:
            x0 = first.roles['v0']
            yield from self._force(z1, x[0])
            yield from self._force(z1, x0)
            return [x0, z1] + x
        c = yield from self._draw(z1, x[0])
        if c is R:
            yield from self._force(z2, x[-1])
            fresh = self._fresh()
            yield from self._force(z2, fresh)
            return x + [z2, fresh]
        c = yield from self._draw(z2, x[-1])
        if c is B:
            return [z1] + x + [z2]
        fresh = self._fresh()
        yield from self._force(z1, fresh)
        return [fresh, z1] + x

    def _attach(self, final: Path, gadget: Gadget) -> Generator[Edge, Color, Path]:
        """Adds five vertices of a G3 (three rounds at most) or a G6 (two rounds)."""
        x = list(gadget.path)
        y1, y2 = final[0], final[-1]
        c = yield from self._draw(x[0], y1)
        if c is B:
            return final[::-1] + x
        if gadget.kind is GadgetKind.G6:
            yield from self._force(x[-1], y1)
            return final[::-1] + x[::-1]
        c = yield from self._draw(x[0], y2)
        if c is B:
            return final + x
        yield from self._force(x[-1], y2)
        return final + x[::-1]

    def _append_red_edge(self, final: Path, z: Edge) -> Generator[Edge, Color, Path]:
        """Puts both ends of the red edge on the path in at most three rounds."""
        z1, z2 = z
        y1, y2 = final[0], final[-1]
        c = yield from self._draw(z1, y1)
        if c is B:
            c = yield from self._draw(z2, y2)
            if c is B:
                return [z1] + final + [z2]
            fresh = self._fresh()
            yield from self._force(z1, fresh)
            return [fresh, z1] + final
        yield from self._force(z2, y2)
        fresh = self._fresh()
        yield from self._force(z2, fresh)
        return final + [z2, fresh]

    # --- bookkeeping -----------------------------------------------------------------

    def _involved_vertices(self, gadgets: List[Gadget], final: Path) -> Set[int]:
        vertices = set(final)
        for gadget in gadgets:
            vertices |= gadget.vertices
        return vertices

    def _blue_edges_on_path(self, gadgets: List[Gadget], final: Path) -> bool:
        on_path = {frozenset(pair) for pair in zip(final, final[1:])}
        induced = self.board.induced(self._involved_vertices(gadgets, final))
        return all(frozenset(e) in on_path for e, c in induced.items() if c is B)
