from math import comb

import pytest

from curvemix.core.errors import (BadTradeSet, CurvemixError, DuplicateForbidden, EmptyStateSpace, ExitCode,
                                  ForbiddenEntryTouched, ForbiddenOutOfRange, IndexOutOfRange, InfeasibleColumn,
                                  InfeasibleRow, InstanceError, MarginMismatch, NotACheckerboard, Reducible,
                                  SpecMismatch, StateSpaceTooLarge)
from curvemix.core.margins import (MarginSpec, column_bit, instance_from_dict, instance_to_dict, load_instance,
                                   make_instance, regular_instance, validate_instance)
from curvemix.core.matrix import BinaryMatrix, canonical_key, from_key
from curvemix.core.moves import (apply_switch, apply_trade, is_switch_adjacent, row_pair_stats, trade_neighbors)


def test_exit_codes():
    assert EmptyStateSpace.exit_code == ExitCode.EMPTY_SPACE == 3
    assert StateSpaceTooLarge.exit_code == 4
    assert Reducible.exit_code == 6
    assert issubclass(MarginMismatch, InstanceError) and issubclass(InstanceError, ValueError)
    assert CurvemixError.exit_code == ExitCode.USAGE


# margins

def test_validate_instance_errors():
    with pytest.raises(MarginMismatch):
        make_instance([1, 1], [1])
    with pytest.raises(InfeasibleRow):
        make_instance([3, 0], [1, 1, 1], [(0, 0)])
    with pytest.raises(InfeasibleColumn):
        make_instance([1, 1], [2, 0], [(1, 0)])
    with pytest.raises(ForbiddenOutOfRange):
        validate_instance(MarginSpec((1,), (1,), frozenset({(0, 3)})))
    with pytest.raises(DuplicateForbidden):
        make_instance([1, 1], [1, 1], [(0, 0), (0, 0)])
    with pytest.raises(InstanceError):
        MarginSpec((), (1,))


def test_regular_instance():
    spec = regular_instance(4, 2)
    assert spec.is_square_regular()
    assert spec.forbidden == {(i, i) for i in range(4)}
    assert spec.rho_total == 8 and spec.r_max == 2
    assert not make_instance([2, 1], [1, 1, 1]).is_square_regular()


def test_masks():
    spec = make_instance([1, 1], [1, 1], [(0, 1)])
    assert column_bit(2, 0) == 0b10
    assert spec.forbidden_masks == (0b01, 0)
    assert spec.allowed_masks == (0b10, 0b11)
    assert spec.is_forbidden(0, 1) and not spec.is_forbidden(1, 0)


def test_instance_json(tmp_path):
    spec = instance_from_dict({"rows": [2, 2], "cols": [1, 1, 2], "forbidden": [[1, 1]]})
    assert spec.forbidden == {(0, 0)}
    data = instance_to_dict(spec)
    assert data == {"rows": [2, 2], "cols": [1, 1, 2], "forbidden": [[1, 1]]}
    diag = instance_from_dict({"rows": [1, 1, 1], "cols": [1, 1, 1], "diagonal_forbidden": True})
    assert diag == regular_instance(3, 1)
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(InstanceError):
        load_instance(path)
    with pytest.raises(InstanceError):
        instance_from_dict({"rows": [1]})
    with pytest.raises(DuplicateForbidden):
        instance_from_dict({"rows": [1, 1], "cols": [1, 1], "forbidden": [[1, 2], [1, 2]]})


# matrix

def test_binary_matrix_roundtrip(perm3):
    A = BinaryMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]], perm3)
    assert A.rows == (0b010, 0b100, 0b001)
    assert A.entry(0, 1) == 1 and A.entry(0, 0) == 0
    assert A.to_lists() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert A.row_sums() == (1, 1, 1) and A.col_sums() == (1, 1, 1)
    assert from_key(canonical_key(A), perm3) == A
    assert str(A) == "010\n100\n001"


def test_binary_matrix_violations(perm3):
    with pytest.raises(InstanceError):
        BinaryMatrix.from_rows([[1, 1, 0], [0, 0, 0], [0, 0, 1]], perm3)
    B = BinaryMatrix.from_rows([[1, 1, 0], [0, 0, 0], [0, 0, 1]], perm3, check=False)
    assert not B.satisfies_spec()
    assert any("row sums" in v for v in B.violations())
    with pytest.raises(InstanceError):
        BinaryMatrix.from_rows([[2, 0, 0], [0, 1, 0], [0, 0, 1]], perm3)


def test_canonical_key_orders_rows():
    spec = make_instance([1, 1], [1, 1])
    A = BinaryMatrix.from_rows([[0, 1], [1, 0]], spec)
    B = BinaryMatrix.from_rows([[1, 0], [0, 1]], spec)
    assert canonical_key(A) < canonical_key(B)
    wide = make_instance([1], [0] * 9 + [1])
    C = BinaryMatrix.from_rows([[0] * 9 + [1]], wide)
    assert len(canonical_key(C)) == 2 and from_key(canonical_key(C), wide) == C


def test_same_spec(perm3, derangement4):
    A = BinaryMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]], perm3)
    D = BinaryMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], derangement4)
    with pytest.raises(SpecMismatch):
        A.same_spec(D)


# moves

def test_row_pair_stats(example37):
    stats = row_pair_stats(example37, 0, 1)
    assert stats.U == (1, 2) and stats.L == (0, 3)
    assert (stats.u, stats.l) == (2, 2)
    assert stats.trade_columns == (0, 1, 2, 3)
    with pytest.raises(IndexOutOfRange):
        row_pair_stats(example37, 1, 0)


def test_trade_neighbors(example37):
    members = trade_neighbors(example37, 0, 1)
    assert len(members) == comb(4, 2)
    assert example37 in members
    assert len(set(members)) == len(members)
    assert all(B.satisfies_spec() for B in members)
    # rows outside the pair and columns outside U and L never change
    for B in members:
        assert B.rows[2] == example37.rows[2]
        assert B.rows[0] & 0b0000111 == example37.rows[0] & 0b0000111


def test_apply_trade(example37):
    B = apply_trade(example37, 0, 1, [0, 3])
    assert B.to_lists()[0] == [1, 0, 0, 1, 1, 0, 1]
    assert B.to_lists()[1] == [0, 1, 1, 0, 1, 0, 1]
    with pytest.raises(BadTradeSet):
        apply_trade(example37, 0, 1, [0])
    with pytest.raises(BadTradeSet):
        apply_trade(example37, 0, 1, [4, 5])


def test_apply_switch(perm3):
    I = BinaryMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]], perm3)
    B = apply_switch(I, 0, 1, 0, 1)
    assert B.to_lists() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert is_switch_adjacent(I, B) == (0, 1, 0, 1)
    assert is_switch_adjacent(I, I) is None
    with pytest.raises(NotACheckerboard):
        apply_switch(I, 0, 1, 0, 2)
    with pytest.raises(IndexOutOfRange):
        apply_switch(I, 0, 0, 0, 1)


def test_switch_respects_forbidden(derangement4):
    D = BinaryMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], derangement4)
    with pytest.raises(ForbiddenEntryTouched):
        apply_switch(D, 0, 1, 0, 1)
    stats = row_pair_stats(D, 0, 1)
    assert stats.u == 0 and stats.l == 0
    assert trade_neighbors(D, 0, 1) == [D]
