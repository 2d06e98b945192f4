from typing import Callable, Generator, Optional
from src.graph.colored_graph import Color, Edge
from src.graph.canonical import canonical_form, canonical_key
from src.graph.paths import has_blue_path_of_order, has_red_path_of_order
from src.game.engine import GameConfig
from src.builder.script import Script, ScriptedBuilder
from src.builder.units import UnitCreationMixin
from src.builder.extension import ExtensionMixin
from src.builder.preamble import PreambleMixin
from src.builder.connection import ConnectionMixin
from src.builder.lemma import LemmaMixin
from src.builder.templates import matches_template
from src.builder.plan import (
    BuilderPlan, FiveKPlus2, Phase, SmallBase, decompose_target,
    extension_contract, unit_creation_contract,
)
from src.solver.strategy_table import FRESH_A, FRESH_B, StrategyTable
from src.utils.errors import ContractViolation, PlanDesync

TableLoader = Callable[[int], StrategyTable]


def game_config(n: int) -> GameConfig:
    """Red P4 against blue P_n with the budget of PathBuilder."""
    return GameConfig(blue_order=n, budget=decompose_target(n).budget)


class PathBuilder(UnitCreationMixin, ExtensionMixin, PreambleMixin, ConnectionMixin,
                   LemmaMixin, ScriptedBuilder):
    """
    Builder for red P4 against blue P_n.

    The target is split into a base game (P_{5k}, P_{5k+2} or a small table-played
    base) followed by four-vertex lemma extensions; see decompose_target.
    """

    def __init__(self, n: int, table_loader: Optional[TableLoader] = None) -> None:
        super().__init__('PATH BUILDER')
        self.n = n
        self.decomposition = decompose_target(n)
        self.table_loader = table_loader
        self.plan = BuilderPlan(self.decomposition)

    def reset(self) -> None:
        super().reset()
        self.plan = BuilderPlan(self.decomposition)

    def _script(self) -> Script:
        plan = self.plan
        base = self.decomposition.base
        self.logger.info(f"Target P{self.n}: {self.decomposition}")

        if isinstance(base, SmallBase):
            yield from self._play_table(base.n0)
        else:
            if isinstance(base, FiveKPlus2):
                plan.set_phase(Phase.PREAMBLE)
                yield from self._preamble()
            plan.set_phase(Phase.UNIT_CREATION)
            yield from self._create_units()
            unit_creation_contract(plan)
            self._check_templates(plan.units + ([plan.bad] if plan.bad else []))

            plan.set_phase(Phase.EXTENSION)
            yield from self._extend_all()
            extension_contract(plan)
            self._check_templates(plan.gadgets)

            plan.set_phase(Phase.CONNECTION)
            plan.final_path = tuple((yield from self._connect()))

        plan.set_phase(Phase.LEMMA_EXTENSION)
        for index in range(self.decomposition.lemma_count):
            plan.lemma_index = index
            plan.final_path = tuple((yield from self._lemma_extend()))
        plan.set_phase(Phase.DONE)

    def _check_templates(self, gadgets) -> None:
        for gadget in gadgets:
            if not matches_template(self.board, gadget):
                self.logger.error(f"{gadget} does not match its template on {self.board}")
                raise ContractViolation(f"{gadget.kind.name} does not match its template")

    def _play_table(self, n0: int) -> Generator[Edge, Color, None]:
        """Plays the solver-extracted strategy for blue P_{n0} until it is won."""
        if self.table_loader is None:
            from src.solver.table_store import load_table
            self.table_loader = load_table
        table = self.table_loader(n0)
        while not (has_blue_path_of_order(self.board, n0) or has_red_path_of_order(self.board, 4)):
            key = canonical_key(self.board, spare_isolated=0)
            move = table.moves.get(key)
            if move is None:
                self.logger.error(f"No table move for board {self.board}")
                raise PlanDesync(f"Strategy table for P{n0} has no entry for the current board")
            order = canonical_form(self.board).order
            fresh = {}
            ends = []
            for index in move:
                if index in (FRESH_A, FRESH_B):
                    if index not in fresh:
                        fresh[index] = self._fresh()
                    ends.append(fresh[index])
                else:
                    ends.append(order[index])
            yield from self._draw(*ends)
