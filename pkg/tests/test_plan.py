import pytest
from src.builder.plan import (
    FiveK, FiveKPlus2, SmallBase, closed_form_budget, connection_contract, decompose_target, pair_contract,
)
from src.utils.errors import ContractViolation, TargetTooSmall


def test_decomposition_budget_matches_closed_form():
    for n in range(4, 10_001):
        d = decompose_target(n)
        assert d.order == n
        assert d.budget == closed_form_budget(n) == -(-(7 * (n - 1) + 2) // 5), n


@pytest.mark.parametrize('n, base, lemmas, budget', [
    (4, SmallBase(4), 0, 5),
    (5, SmallBase(5), 0, 6),
    (7, SmallBase(7), 0, 9),
    (8, SmallBase(4), 1, 11),
    (9, SmallBase(5), 1, 12),
    (10, FiveK(2), 0, 13),
    (11, SmallBase(7), 1, 15),
    (12, FiveKPlus2(2), 0, 16),
    (13, SmallBase(5), 2, 18),
    (14, FiveK(2), 1, 19),
    (15, FiveK(3), 0, 20),
    (16, FiveKPlus2(2), 1, 22),
    (18, FiveK(2), 2, 25),
    (60, FiveK(12), 0, 83),
])
def test_decomposition_examples(n, base, lemmas, budget):
    d = decompose_target(n)
    assert (d.base, d.lemma_count, d.budget) == (base, lemmas, budget)


@pytest.mark.parametrize('n', [-1, 0, 3])
def test_target_too_small(n):
    with pytest.raises(TargetTooSmall):
        decompose_target(n)


def test_connection_contract():
    connection_contract(edge_count=13, path_order=10, c_prime=2, extra_edges=0, extra_order=0)
    with pytest.raises(ContractViolation):
        connection_contract(edge_count=14, path_order=10, c_prime=2, extra_edges=0, extra_order=0)
    with pytest.raises(ContractViolation):
        connection_contract(edge_count=13, path_order=9, c_prime=2, extra_edges=0, extra_order=0)


def test_pair_contract():
    pair_contract(12, 10)
    with pytest.raises(ContractViolation):
        pair_contract(13, 10)
