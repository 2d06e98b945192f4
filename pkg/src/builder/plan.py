from enum import Enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple, Union
from src.log.logger import setup_logger
from src.graph.colored_graph import Edge
from src.utils.errors import ContractViolation, TargetTooSmall

logger = setup_logger('BUILDER PLAN')


class UnitKind(Enum):
    """Structural units. I-IV are good, V-VII bad; IV counts as two units."""
    I = 'I'
    II = 'II'
    III = 'III'
    IV = 'IV'
    V = 'V'
    VI = 'VI'
    VII = 'VII'

    @property
    def is_good(self) -> bool:
        return self in (UnitKind.I, UnitKind.II, UnitKind.III, UnitKind.IV)

    @property
    def weight(self) -> int:
        if self is UnitKind.IV:
            return 2
        return 1 if self.is_good else 0


class GadgetKind(Enum):
    G1 = 1
    G2 = 2
    G3 = 3
    G4 = 4
    G5 = 5
    G6 = 6
    G7 = 7
    G8 = 8
    G9 = 9
    G10 = 10
    G11 = 11
    G12 = 12
    G13 = 13
    G14 = 14
    G15 = 15
    G16 = 16
    G17 = 17
    G18 = 18

    @property
    def weight(self) -> int:
        return 2 if self in (GadgetKind.G10, GadgetKind.G11, GadgetKind.G12) else 1


# blue paths with both ends on a red edge, chained end to end
CHAIN_KINDS = frozenset({
    GadgetKind.G4, GadgetKind.G5, GadgetKind.G8, GadgetKind.G9,
    GadgetKind.G10, GadgetKind.G11, GadgetKind.G12,
    GadgetKind.G13, GadgetKind.G14, GadgetKind.G15, GadgetKind.G16, GadgetKind.G17,
})
# blue P4 around a red P3 (G18 after shrinking three vertices)
G7_KINDS = frozenset({GadgetKind.G7, GadgetKind.G18})
ATTACH_KINDS = frozenset({GadgetKind.G3, GadgetKind.G6})

Kind = Union[UnitKind, GadgetKind]


@dataclass
class Gadget:
    """
    A recognized unit or gadget on the board.

    roles maps template role names (v0, w4, z3, ...) to board vertices. path is
    the blue path the connection stage works with; center is the middle of the
    red P3 of a G7-like gadget. Vertices in shrunk are viewed as one vertex when
    the gadget is compared with its template.
    """
    kind: Kind
    roles: Dict[str, int]
    path: Tuple[int, ...] = ()
    center: Optional[int] = None
    shrunk: Tuple[int, ...] = ()

    @property
    def vertices(self) -> Set[int]:
        return set(self.roles.values()) | set(self.path) | set(self.shrunk)

    @property
    def ends(self) -> Tuple[int, int]:
        return self.path[0], self.path[-1]

    def __str__(self) -> str:
        return f"{self.kind.name}{list(self.path) if self.path else dict(self.roles)}"


# --- target decomposition --------------------------------------------------------


@dataclass(frozen=True)
class FiveK:
    """Blue P_{5k} in 7k-1 rounds."""
    k: int

    @property
    def order(self) -> int:
        return 5 * self.k

    @property
    def budget(self) -> int:
        return 7 * self.k - 1


@dataclass(frozen=True)
class FiveKPlus2:
    """Blue P_{5k+2} in 7k+2 rounds."""
    k: int

    @property
    def order(self) -> int:
        return 5 * self.k + 2

    @property
    def budget(self) -> int:
        return 7 * self.k + 2


SMALL_BASE_BUDGETS = {4: 5, 5: 6, 6: 8, 7: 9}


@dataclass(frozen=True)
class SmallBase:
    """Blue P_{n0}, n0 <= 7, played from a solver-extracted strategy table."""
    n0: int

    @property
    def order(self) -> int:
        return self.n0

    @property
    def budget(self) -> int:
        return SMALL_BASE_BUDGETS[self.n0]


Base = Union[FiveK, FiveKPlus2, SmallBase]
LEMMA_ROUNDS = 6
LEMMA_GAIN = 4


def closed_form_budget(n: int) -> int:
    """ceil((7(n-1)+2)/5) in integer arithmetic."""
    return (7 * n - 1) // 5


@dataclass(frozen=True)
class TargetDecomposition:
    base: Base
    lemma_count: int

    @property
    def order(self) -> int:
        return self.base.order + LEMMA_GAIN * self.lemma_count

    @property
    def budget(self) -> int:
        return self.base.budget + LEMMA_ROUNDS * self.lemma_count

    def __str__(self) -> str:
        return f"{self.base} + {self.lemma_count} lemma extension(s), budget {self.budget}"


def decompose_target(n: int) -> TargetDecomposition:
    """
    Splits a blue target P_n into a base game plus four-vertex extensions.

    Args:
        n (int): Blue target order, at least 4.

    Returns:
        TargetDecomposition: base and extension count; budget equals closed_form_budget(n).
    """
    if n < 4:
        logger.error(f"No decomposition for blue target {n}")
        raise TargetTooSmall(f"Blue target must be at least 4, got {n}")
    if n <= 7:
        return TargetDecomposition(SmallBase(n), 0)
    if n % 5 == 0:
        return TargetDecomposition(FiveK(n // 5), 0)
    if n % 5 == 2 and n >= 12:
        return TargetDecomposition(FiveKPlus2(n // 5), 0)
    inner = decompose_target(n - LEMMA_GAIN)
    return TargetDecomposition(inner.base, inner.lemma_count + 1)


# --- plan state --------------------------------------------------------------------


class Phase(Enum):
    PREAMBLE = 'preamble'
    UNIT_CREATION = 'unit-creation'
    EXTENSION = 'extension'
    CONNECTION = 'connection'
    LEMMA_EXTENSION = 'lemma-extension'
    DONE = 'done'


@dataclass
class BuilderPlan:
    """Mutable phase machine state of one PathBuilder game."""
    decomposition: TargetDecomposition
    phase: Phase = Phase.UNIT_CREATION
    units: List[Gadget] = field(default_factory=list)
    bad: Optional[Gadget] = None
    gadgets: List[Gadget] = field(default_factory=list)
    preformed: int = 0
    red_edge: Optional[Edge] = None
    pending_blue: Optional[Edge] = None
    lemma_index: int = 0
    final_path: Tuple[int, ...] = ()

    @property
    def k(self) -> int:
        base = self.decomposition.base
        return base.k if isinstance(base, (FiveK, FiveKPlus2)) else 0

    @property
    def unit_count(self) -> int:
        return self.preformed + sum(u.kind.weight for u in self.units)

    def counts(self) -> Counter:
        """c_i per gadget kind."""
        return Counter(g.kind for g in self.gadgets if isinstance(g.kind, GadgetKind))

    @property
    def c(self) -> int:
        return sum(g.kind.weight for g in self.gadgets if g.kind in CHAIN_KINDS)

    @property
    def c7(self) -> int:
        return sum(1 for g in self.gadgets if g.kind in G7_KINDS)

    @property
    def c_prime(self) -> int:
        counts = self.counts()
        return self.c + counts[GadgetKind.G1] + counts[GadgetKind.G2] + self.c7

    @property
    def t(self) -> int:
        return sum(1 for g in self.gadgets if g.kind in CHAIN_KINDS)

    def set_phase(self, phase: Phase) -> None:
        logger.info(f"Phase {self.phase.value} -> {phase.value}")
        self.phase = phase


# --- contracts ----------------------------------------------------------------------


def _fail(message: str) -> None:
    logger.error(message)
    raise ContractViolation(message)


def _check_disjoint(groups: Iterable[Set[int]]) -> None:
    seen: Set[int] = set()
    for group in groups:
        if seen & group:
            _fail(f"Units share vertices {sorted(seen & group)}")
        seen |= group


def unit_creation_contract(plan: BuilderPlan) -> None:
    """k good units, or k-1 good units plus a nonempty bad unit; all vertex-disjoint."""
    count, k = plan.unit_count, plan.k
    if not ((count == k and plan.bad is None) or (count == k - 1 and plan.bad is not None)):
        _fail(f"Unit creation ended with {count} units (k={k}) and bad unit {plan.bad}")
    groups = [u.vertices for u in plan.units] + [g.vertices for g in plan.gadgets]
    if plan.bad is not None:
        groups.append(plan.bad.vertices)
    if plan.red_edge is not None:
        groups.append(set(plan.red_edge))
    _check_disjoint(groups)
    logger.info(f"Unit creation done: {[u.kind.name for u in plan.units]} bad={plan.bad}")


def extension_contract(plan: BuilderPlan) -> None:
    counts = plan.counts()
    total = sum(kind.weight * c for kind, c in counts.items())
    if total != plan.k:
        _fail(f"Gadget ledger sums to {total}, expected k={plan.k}: {dict(counts)}")
    if counts[GadgetKind.G1] + counts[GadgetKind.G2] > 1:
        _fail(f"More than one bad unit survived: {dict(counts)}")
    logger.info(f"Extension done: c={plan.c} c7={plan.c7} c'={plan.c_prime} t={plan.t}")


def connection_contract(edge_count: int, path_order: int, c_prime: int,
                        extra_edges: int = 0, extra_order: int = 0) -> None:
    """At most 7c'-1 edges (plus the allowance of a spliced red edge) carry a blue path of order 5c'."""
    if c_prime < 1:
        return
    if edge_count > 7 * c_prime - 1 + extra_edges:
        _fail(f"Connection used {edge_count} edges, bound {7 * c_prime - 1 + extra_edges}")
    if path_order < 5 * c_prime + extra_order:
        _fail(f"Connection built a blue path of order {path_order}, expected {5 * c_prime + extra_order}")
    logger.info(f"Connection done: {edge_count} edges, blue path of order {path_order} (c'={c_prime})")


def pair_contract(edge_count: int, path_order: int) -> None:
    """A G7 merged with a G3 or G6: blue P10 on at most 12 edges."""
    if edge_count > 12 or path_order < 10:
        _fail(f"G7 pairing produced order {path_order} on {edge_count} edges")
    logger.info(f"G7 pairing done: {edge_count} edges, blue path of order {path_order}")
