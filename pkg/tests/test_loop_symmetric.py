import pytest
from sympy.polys.domains import QQ

from errors import InvalidNetwork
from lsym.loop_symmetric import (
    LoopVarArray, Tag, conjugate, grid_loop_e, jacobi_trudi, loop_e, loop_schur, loop_tableaux, power_sum,
    recover_curl_measurement, recover_factor_measurements, rectangle_with_tail,
)
from measurements.walks import underway_cycle_measurement
from moves.grid_moves import apply_whirl_curl, apply_whurl
from network.grid import grid_to_network
from scalars.mpoly import mpoly_eval
from tests.conftest import random_grid


@pytest.mark.parametrize("kinds", ["WW", "WCW", "CWC", "CC"])
def test_loop_e_reads_the_boundary_matrix(rng, kinds):
    grid = random_grid(rng, 3, kinds)
    variables = LoopVarArray.for_grid(grid)
    values = variables.assignment(grid)
    e = grid_loop_e(grid)
    for k in range(4):
        for r in range(3):
            assert mpoly_eval(loop_e(k, r, variables), values) == e(k, r)


def test_loop_e_counts(rng):
    variables = LoopVarArray(2, (Tag.WHIRL, Tag.WHIRL))
    assert len(loop_e(2, 0, variables).terms()) == 1
    assert loop_e(3, 0, variables) == variables.ring.zero
    curls = LoopVarArray(2, (Tag.CURL, Tag.CURL))
    assert len(loop_e(2, 0, curls).terms()) == 3


def test_tableaux_strictness():
    assert len(loop_tableaux((2,), 2, lambda i: True)) == 3
    assert len(loop_tableaux((2,), 2, lambda i: False)) == 1
    assert len(loop_tableaux((1, 1), 2, lambda i: True)) == 1
    assert len(loop_tableaux((2, 1), 3, lambda i: True)) == 8


@pytest.mark.parametrize("tag", [Tag.WHIRL, Tag.CURL])
@pytest.mark.parametrize("shape, inner", [((2, 1), ()), ((2, 2), ()), ((3, 1), (1,)), ((2, 1, 1), ())])
def test_jacobi_trudi(tag, shape, inner):
    variables = LoopVarArray(3, (tag,) * 3)
    for r in range(3):
        expected = loop_schur(shape, variables, r, inner)
        assert jacobi_trudi(shape, lambda k, s: loop_e(k, s, variables), r, inner) == expected


MIXED_TAGS = [
    (Tag.WHIRL, Tag.CURL), (Tag.CURL, Tag.WHIRL),
    (Tag.WHIRL, Tag.WHIRL, Tag.CURL), (Tag.WHIRL, Tag.CURL, Tag.WHIRL), (Tag.CURL, Tag.WHIRL, Tag.WHIRL),
    (Tag.CURL, Tag.CURL, Tag.WHIRL), (Tag.CURL, Tag.WHIRL, Tag.CURL), (Tag.WHIRL, Tag.CURL, Tag.CURL),
]


@pytest.mark.parametrize("tags", MIXED_TAGS)
@pytest.mark.parametrize("shape, inner", [
    ((2, 1), ()), ((2, 2), ()), ((3, 2, 1), ()), ((3, 3), ()), ((2, 2, 1), (1,)), ((3, 1, 1), (1,)),
])
def test_jacobi_trudi_with_mixed_tags(tags, shape, inner):
    variables = LoopVarArray(3, tags)
    for r in range(3):
        expected = loop_schur(shape, variables, r, inner)
        assert jacobi_trudi(shape, lambda k, s: loop_e(k, s, variables), r, inner) == expected


@pytest.mark.parametrize("kinds", ["WW", "CC", "WC", "CW", "WWC", "CWW", "WCC"])
def test_loop_e_is_invariant_under_cycle_moves(rng, kinds):
    grid = random_grid(rng, 3, kinds)
    variables = LoopVarArray.for_grid(grid)
    values = variables.assignment(grid)
    for j in range(len(kinds) - 1):
        left, right = grid.columns[j:j + 2]
        moved = apply_whurl(grid, j) if type(left) is type(right) else apply_whirl_curl(grid, j)
        moved_variables = LoopVarArray.for_grid(moved)
        moved_values = moved_variables.assignment(moved)
        for k in range(4):
            for r in range(3):
                assert mpoly_eval(loop_e(k, r, moved_variables), moved_values) == \
                    mpoly_eval(loop_e(k, r, variables), values)


def test_conjugate_partition():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert rectangle_with_tail(2, 3, 1) == ((3, 3), (3, 3, 1))


def test_power_sums_are_underway_cycles(rng):
    grid = random_grid(rng, 2, "WW")
    variables = LoopVarArray.for_grid(grid)
    values = variables.assignment(grid)
    net = grid_to_network(grid)
    for k in (1, 2, 3):
        assert mpoly_eval(power_sum(k, variables), values) == underway_cycle_measurement(net, (k,))


def test_power_sums_need_whirls():
    with pytest.raises(InvalidNetwork):
        power_sum(1, LoopVarArray(2, (Tag.CURL,)))


def test_recover_curl_measurements(rng):
    grid = random_grid(rng, 2, "WC")
    variables = LoopVarArray.for_grid(grid)
    values = variables.assignment(grid)
    e = grid_loop_e(grid)
    for k in (1, 2):
        for s in range(2):
            expected = QQ(1)
            for q in range(s, s + k):
                expected *= values[variables.name(2, q % 2)]
            assert recover_curl_measurement(e, 1, 1, k, s) == expected
    recovered = recover_factor_measurements(e, 1, 1, 2)
    assert set(recovered) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert recover_curl_measurement(e, 0, 1, 1, 0) == QQ(0)


def test_grid_with_crossings_has_no_loop_variables(rng):
    with pytest.raises(InvalidNetwork):
        LoopVarArray.for_grid(random_grid(rng, 3, "WX", letters=[1]))
