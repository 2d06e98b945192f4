from typing import Generator, List, Optional
from src.graph.colored_graph import Color, ColoredGraph, Edge
from src.graph.paths import longest_blue_path
from src.builder.script import Script, ScriptedBuilder
from src.utils.errors import PlanDesync

R, B = Color.RED, Color.BLUE


class LemmaMixin:
    """Six rounds that grow a blue path xPy by four vertices or force a red P4."""

    def _lemma_extend(self) -> Generator[Edge, Color, List[int]]:
        order, path = longest_blue_path(self.board)
        if order < 2:
            self.logger.error(f"Lemma extension needs a blue path with two ends, longest has order {order}")
            raise PlanDesync("No blue path to extend")
        x, y = path[0], path[-1]
        self.logger.debug(f"Extending blue path of order {order} between {x} and {y}")

        v1, v2, v3 = self._fresh(), self._fresh(), self._fresh()
        c12 = yield from self._draw(v1, v2)
        c23 = yield from self._draw(v2, v3)
        v4 = self._fresh()
        if c12 is R and c23 is R:
            yield from self._force(v3, v4)
            c34 = B
        else:
            if c12 is R:
                # grow from the end of the red edge
                v1, v3 = v3, v1
                c12, c23 = c23, c12
            c34 = yield from self._draw(v3, v4)
        if (c12, c23, c34) == (R, R, B):
            v1, v2, v3, v4 = v4, v3, v2, v1
            c12, c23, c34 = B, R, R
        pattern = ''.join(c.letter for c in (c12, c23, c34))

        if pattern == 'bbb':
            c = yield from self._draw(x, v1)
            if c is B:
                return path[::-1] + [v1, v2, v3, v4]
            c = yield from self._draw(y, v1)
            if c is B:
                return path + [v1, v2, v3, v4]
            yield from self._force(y, v4)
            return path + [v4, v3, v2, v1]

        if pattern == 'bbr':
            c = yield from self._draw(x, v3)
            if c is B:
                c = yield from self._draw(y, v4)
                if c is B:
                    return [v1, v2, v3] + path + [v4]
                v5 = self._fresh()
                yield from self._force(y, v5)
                return [v1, v2, v3] + path + [v5]
            yield from self._force(y, v4)
            yield from self._force(v4, v1)
            return path + [v4, v1, v2, v3]

        if pattern == 'brb':
            c = yield from self._draw(x, v2)
            if c is B:
                c = yield from self._draw(y, v3)
                if c is B:
                    return [v1, v2] + path + [v3, v4]
                yield from self._force(y, v4)
                return [v1, v2] + path + [v4, v3]
            yield from self._force(y, v3)
            yield from self._force(x, v1)
            return [v2, v1] + path + [v3, v4]

        # brr
        yield from self._force(y, v4)
        v5 = self._fresh()
        yield from self._force(v2, v5)
        yield from self._force(v4, v5)
        return [v1, v2, v5, v4] + path[::-1]


class LemmaBuilder(LemmaMixin, ScriptedBuilder):
    """Runs one lemma extension on top of a given board."""

    def __init__(self, start: ColoredGraph, extensions: int = 1) -> None:
        super().__init__('LEMMA BUILDER')
        self.start = start
        self.extensions = extensions
        self.result: Optional[List[int]] = None
        self.reset()

    def reset(self) -> None:
        super().reset()
        self.board = self.start
        self._next_id = self.start.vertex_count
        self.result = None

    def _script(self) -> Script:
        for _ in range(self.extensions):
            self.result = yield from self._lemma_extend()
