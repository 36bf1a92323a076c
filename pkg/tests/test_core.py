import pytest
from hypothesis import given, strategies as st

from hyperalg.core import (
    Carrier, HyperTable, MulTable, extend_op, fold_op, full_mask, mask_of, members, popcount,
)
from hyperalg.errors import StructureError


def k2_add():
    c = Carrier(("0", "1"))
    return HyperTable(c, ((0b01, 0b10), (0b10, 0b11)))


def test_members_and_masks():
    assert members(0b1011) == (0, 1, 3)
    assert mask_of([3, 0, 1]) == 0b1011
    assert full_mask(3) == 0b111
    assert popcount(0b1011) == 3
    assert members(0) == ()


def test_carrier_validation():
    with pytest.raises(StructureError):
        Carrier(())
    with pytest.raises(StructureError):
        Carrier(("a", "a"))
    c = Carrier(("a", "b"))
    assert c.index("b") == 1
    assert c.format_subset(0b11) == "{ a b }"
    with pytest.raises(StructureError):
        c.index("z")


def test_table_rejects_empty_and_out_of_range_cells():
    c = Carrier.of_size(2)
    with pytest.raises(StructureError, match="empty"):
        HyperTable(c, ((1, 0), (2, 2)))
    with pytest.raises(StructureError):
        HyperTable(c, ((1, 4), (2, 2)))
    with pytest.raises(StructureError):
        HyperTable(c, ((1,),))
    with pytest.raises(StructureError):
        MulTable(c, ((0, 2), (0, 1)))


def test_extend_op_k2():
    t = k2_add()
    assert extend_op(t, 0b10, 0b10) == 0b11
    assert extend_op(t, 0b01, 0b10) == 0b10
    assert extend_op(t, 0b11, 0b01) == 0b11
    with pytest.raises(ValueError):
        extend_op(t, 0, 0b01)
    with pytest.raises(StructureError):
        extend_op(t, 0b100, 0b01)


def test_singleton_extension_is_table_lookup():
    t = k2_add()
    for a in range(2):
        for b in range(2):
            assert extend_op(t, 1 << a, 1 << b) == t(a, b)


def test_fold_op():
    t = k2_add()
    assert fold_op(t, [0b10]) == 0b10
    assert fold_op(t, [0b10, 0b10, 0b10]) == 0b11
    with pytest.raises(ValueError):
        fold_op(t, [])


def test_mul_table_images():
    c = Carrier.of_size(3)
    m = MulTable.from_function(c, lambda a, b: (a * b) % 3)
    assert m.image(2, 0b110) == 0b110
    assert m.image_right(0b011, 2) == 0b101


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
def test_extension_distributes_over_union(a, b, c):
    t = k2_add()
    assert extend_op(t, a | b, c) == extend_op(t, a, c) | extend_op(t, b, c)
