import numpy as np
import pytest

from conftest import ring
from frobtwo.config import Caps
from frobtwo.errors import AxiomError, CapExceededError, RingSpecError
from frobtwo.rings import TableRing, f2xy_tables, parse_ring_spec, verify_axioms

SMALL = ["Z2", "Z4", "Z6", "Z8", "Z9", "GF(4)", "GF(8)", "GF(9)", "Z2xZ2", "Z2xZ4", "GF(4)xZ3", "M2(GF(2))", "table:f2xy"]


@pytest.mark.parametrize("spec", SMALL)
def test_axioms_exhaustive(spec):
    verify_axioms(ring(spec), exhaustive=True)


@pytest.mark.parametrize(
    "spec,order,one",
    [("Z4", 4, 1), ("GF(8)", 8, 1), ("Z2xZ3", 6, 4), ("M2(GF(2))", 16, 9), ("Z2xZ2xZ2", 8, 7)],
)
def test_order_and_identity(spec, order, one):
    r = ring(spec)
    assert r.order == order
    assert r.one == one


def test_zm_tables_are_modular_arithmetic():
    r = ring("Z12")
    a = np.arange(12)
    assert (r.add == (a[:, None] + a[None, :]) % 12).all()
    assert (r.mul == (a[:, None] * a[None, :]) % 12).all()


def test_gf4_is_a_field():
    r = ring("GF(4)")
    for x in range(1, 4):
        assert sorted(r.mul[x, 1:].tolist()) == [1, 2, 3]
    assert (r.add[np.arange(4), np.arange(4)] == 0).all()


def test_product_encoding_round_trip():
    r = ring("Z2xZ3")
    for i in range(6):
        assert r.element(r.element_str(i)) == i
    assert r.element_str(5) == "(1,2)"


def test_matrix_rendering():
    r = ring("M2(GF(2))")
    assert r.element_str(r.one) == "[[1,0],[0,1]]"
    assert r.element("[[0,1],[0,1]]") == 5
    assert not r.is_commutative


def test_opposite_ring_transposes_multiplication():
    r = ring("M2(GF(2))")
    op = r.opposite()
    assert (op.mul == r.mul.T).all()
    assert op.opposite() is r
    assert ring("Z4").opposite() is ring("Z4")


def test_zm_literals_reduce():
    r = ring("Z4")
    assert r.element("7") == 3
    assert r.element(-1) == 3


@pytest.mark.parametrize("spec", ["Z1", "Z0", "GF(6)", "foo", "Z4xx", "table:/nonexistent.json", ""])
def test_bad_specs(spec):
    with pytest.raises(RingSpecError):
        parse_ring_spec(spec)


def test_caps():
    with pytest.raises(CapExceededError):
        parse_ring_spec("Z5000")
    with pytest.raises(CapExceededError):
        parse_ring_spec("M3(GF(2))")
    with pytest.raises(CapExceededError):
        parse_ring_spec("Z64", Caps(max_ring_order=32))


def test_table_ring_bundled_name():
    t = parse_ring_spec("table:f2xy")
    assert t.order == 8 and t.is_commutative
    data = f2xy_tables()
    assert (t.mul == np.array(data["mul"])).all()


def test_table_ring_rejects_bad_tables(tmp_path):
    data = f2xy_tables()
    mul = np.array(data["mul"])
    mul[2, 3] = (mul[2, 3] + 1) % 8
    bad = tmp_path / "bad.json"
    import json

    bad.write_text(json.dumps({"order": 8, "add": data["add"], "mul": mul.tolist()}))
    with pytest.raises(AxiomError):
        parse_ring_spec(f"table:{bad}")


def test_table_ring_from_dict():
    data = f2xy_tables()
    t = TableRing.from_dict(data, "T")
    assert t.order == 8
