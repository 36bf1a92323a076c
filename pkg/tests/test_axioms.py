from itertools import product

import pytest

from hyperalg.axioms import (
    EQUAL, INCLUSIVE, check_hyperfield, check_hypergroup, check_hypergroupoid, check_hyperring,
    check_hypervectorspace, check_semihypergroup, check_subspace, class_witnesses,
    four_property_subspace, is_subspace, make_hyperfield,
)
from hyperalg.constructions import (
    coordinate_subspace, krasner_k2, prime_field, product_space, scalar_space, sign_hyperfield,
)
from hyperalg.core import Carrier, HyperTable, MulTable
from hyperalg.errors import AxiomError

import oracles


def test_hypergroupoid():
    k2 = krasner_k2()
    assert check_hypergroupoid(k2.add).ok
    rep = check_hypergroupoid([[1, 0], [2, 3]])
    assert not rep.ok and rep.first_failure.witness == (0, 1)
    assert check_hypergroupoid(HyperTable(Carrier.of_size(1), ((1,),))).ok


def test_semihypergroup_examples(k2, s3):
    assert check_semihypergroup(k2.add).ok
    assert check_semihypergroup(s3.add).ok
    # 0#0={0}, 0#1={1}, 1#0={0}, 1#1={0}
    bad = HyperTable(Carrier.of_size(2), ((0b01, 0b10), (0b01, 0b01)))
    rep = check_semihypergroup(bad)
    assert not rep.ok
    assert rep.first_failure.witness == (1, 0, 1)


def test_hypergroup_k2(k2):
    rep = check_hypergroup(k2.add)
    assert rep.ok and rep.zero == 0 and rep.inverse == (0, 1)
    assert rep.is_commutative and rep.reversible


def test_hypergroup_mutated_k2_has_no_zero(k2):
    rep = check_hypergroup(k2.add.replace(1, 1, 0b10))
    assert not rep.ok
    assert rep.first_failure.axiom == "zero"


def test_hypergroup_trivial():
    rep = check_hypergroup(HyperTable(Carrier.of_size(1), ((1,),)))
    assert rep.ok and rep.zero == 0 and rep.inverse == (0,)


def test_hypergroup_agrees_with_oracle_on_all_order2_tables():
    c = Carrier.of_size(2)
    for cells in product(range(1, 4), repeat=4):
        t = HyperTable(c, (cells[:2], cells[2:]))
        sets = [[frozenset(i for i in range(2) if m >> i & 1) for m in row] for row in t.cells]
        assert check_hypergroup(t).ok == bool(oracles.hypergroup_zeros(sets, 2))


def test_hyperring_examples(k2):
    assert check_hyperring(k2.add, k2.mul, 0).ok
    one = Carrier.of_size(1)
    assert check_hyperring(HyperTable(one, ((1,),)), MulTable(one, ((0,),)), 0).ok


def test_hyperring_with_collapsed_product(k2):
    # 1.1 = 0: still a hyperring (all products absorb), not a hyperfield
    mul = MulTable(k2.carrier, ((0, 0), (0, 0)))
    assert check_hyperring(k2.add, mul, 0).ok
    rep = check_hyperfield(k2.add, mul, 0, 1)
    assert not rep.ok
    assert rep.first_failure.axiom == "(ii) identity" and rep.first_failure.witness == (1,)


def test_distributivity_modes():
    f3 = prime_field(3)
    assert check_hyperring(f3.add, f3.mul, 0, EQUAL).ok
    assert check_hyperring(f3.add, f3.mul, 0, INCLUSIVE).ok
    with pytest.raises(ValueError):
        check_hyperring(f3.add, f3.mul, 0, "sometimes")


def test_inclusive_accepts_what_equal_rejects():
    # found by search: 1#1={0}, 2#2={0,1}, 2#x={2} otherwise; only 2.2 = 2 is non-zero
    c = Carrier.of_size(3)
    add = HyperTable(c, ((0b001, 0b010, 0b100), (0b010, 0b001, 0b100), (0b100, 0b100, 0b011)))
    mul = MulTable(c, ((0, 0, 0), (0, 0, 0), (0, 0, 2)))
    eq = check_hyperring(add, mul, 0, EQUAL)
    assert not eq.ok
    assert eq.first_failure.axiom == "distributive-left"
    assert check_hyperring(add, mul, 0, INCLUSIVE).ok


def test_hyperfields(k2, s3):
    assert k2.inv[1] == 1 and k2.neg[1] == 1
    assert s3.names[s3.neg[1]] == "-1"
    f3 = prime_field(3)
    assert f3.is_field() and not k2.is_field()
    assert f3.neg == (0, 2, 1) and f3.inv[2] == 2


def test_make_hyperfield_raises():
    k2 = krasner_k2()
    with pytest.raises(AxiomError):
        make_hyperfield(k2.add.replace(1, 1, 0b10), k2.mul, 0, 1)


def test_hyperfield_rejects_one_equal_zero():
    k2 = krasner_k2()
    rep = check_hyperfield(k2.add, k2.mul, 0, 0)
    assert not rep.ok
    assert any(r.axiom == "nontrivial" for r in rep.failures)


def test_product_space_k2sq(k2, k2sq, v):
    assert k2sq.size == 4
    # equality holds in (i) but not in (ii): (1+1)*(1,1) = {theta,(1,1)} while (1,1)#(1,1) = V
    assert k2sq.strong_right and not k2sq.strong_left
    w = class_witnesses(k2sq)
    assert w["strong_right"] is None
    assert w["strong_left"] == (1, 1, v(k2sq, 1, 1))


def test_mutated_action_fails_unit_axiom(k2, k2sq, v):
    a = [list(r) for r in k2sq.action]
    a[1][v(k2sq, 1, 0)] = (1 << v(k2sq, 1, 0)) | (1 << v(k2sq, 0, 0))
    rep = check_hypervectorspace(k2, k2sq.vectors, k2sq.vadd, a, k2sq.theta)
    assert not rep.ok
    unit = [r for r in rep.failures if r.axiom.startswith("(iv)")]
    assert unit and unit[0].witness == ("one", v(k2sq, 1, 0))


def test_field_over_itself(k2, s3):
    for F in (k2, s3, prime_field(3)):
        s = scalar_space(F)
        assert s.good
        assert s.action[1][1] == 0b10


@pytest.mark.parametrize("name", ["K2", "S3", "GF2", "GF3"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_product_space_classes(name, n):
    from hyperalg.constructions import builtin_hyperfield
    F = builtin_hyperfield(name)
    if F.order ** n > 27:
        pytest.skip("outside desk scale")
    s = product_space(F, n)
    assert s.strong_right
    assert s.strong_left == (n == 1 or F.is_field())


def test_subspace_examples(k2sq, v):
    axis1 = coordinate_subspace(k2sq, [0])
    axis2 = coordinate_subspace(k2sq, [1])
    assert axis1 == (1 << v(k2sq, 0, 0)) | (1 << v(k2sq, 1, 0))
    assert check_subspace(k2sq, axis1).ok
    assert check_subspace(k2sq, axis2).ok
    rep = check_subspace(k2sq, axis1 | axis2)
    assert not rep.ok
    assert rep.witness == ("vadd", v(k2sq, 1, 0), v(k2sq, 0, 1))
    assert check_subspace(k2sq, k2sq.theta_mask).ok
    assert check_subspace(k2sq, 0).witness == ("empty",)


@pytest.mark.parametrize("space_name", ["K2^2", "S3^2", "GF3^2"])
def test_subspace_criteria_agree_everywhere(space_name):
    from hyperalg.constructions import builtin_hyperfield
    name, n = space_name.split("^")
    s = product_space(builtin_hyperfield(name), int(n))
    brute = {oracles.to_mask(W) for W in oracles.brute_subspaces(s)}
    for W in range(1 << s.size):
        rep = check_subspace(s, W)
        assert rep.criteria_agree
        assert rep.ok == (W in brute)
        assert four_property_subspace(s, W) == is_subspace(s, W)
