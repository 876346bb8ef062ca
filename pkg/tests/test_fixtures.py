import pytest

from posetmodels import (
    build_lattice,
    decide_by_enumeration,
    enumerate_centers,
    enumerate_model_structures,
    fixture,
    homotopy_reduce,
    load,
    recognize_finite,
    validate_relative,
)
from posetmodels.errors import UnknownFixture
from posetmodels.formats import build_relative


@pytest.mark.parametrize(
    "name,expected_yes",
    [
        ("two-structures", True),
        ("forced", True),
        ("trunc-1", True),
        ("trunc-2", True),
        ("trunc-3", True),
        ("trunc-4", True),
        ("s2of3-fail", False),
        ("chain-1", True),
        ("chain-4", True),
    ],
)
def test_fixture_inventory(name, expected_yes):
    rel = build_relative(fixture(name))
    assert recognize_finite(rel).yes == expected_yes


def test_unknown_fixture_names():
    for name in ("trunc-0", "trunc-5", "chain-0", "chain-65", "bogus"):
        with pytest.raises(UnknownFixture):
            fixture(name)


def test_chain_center_count():
    # each marked middle is a valid collapse point of the full-W block
    for n in (1, 2, 3, 5):
        rel = load(f"chain-{n}")
        assert len(enumerate_centers(rel).maps) == n


def test_trunc_centers_are_forced():
    # the gadget centers and the last chain object are the only choice
    for n in (1, 2, 3):
        rel = load(f"trunc-{n}")
        found = enumerate_centers(rel)
        assert len(found.maps) == 1
        lat = rel.lattice
        chi = found.maps[0]
        assert lat.name(chi.chi[lat.index("A0")]) == f"A{n}"
        for k in range(1, n + 1):
            assert lat.name(chi.chi[lat.index(f"U{k}")]) == f"C{k}"


def test_singleton_lattice():
    lat = build_lattice(["x"], [])
    assert lat.bottom == lat.top == 0
    rel = validate_relative(lat, [], add_identities=True)
    dec = recognize_finite(rel)
    assert dec.yes
    structs = enumerate_model_structures(rel)
    assert len(structs) == 1
    d_lat, d_model, _ = homotopy_reduce(structs[0])
    assert d_lat.n == 1 and d_model.verified


def test_fully_collapsed_diamond():
    # W = all comparable pairs on a diamond: one component, every element
    # is a valid center, reduction collapses to a point
    lat = build_lattice(
        ["bot", "x", "y", "top"],
        [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")],
    )
    pairs = [(lat.name(a), lat.name(b)) for (a, b) in lat.pairs if a != b]
    rel = validate_relative(lat, pairs, add_identities=True)
    assert len(rel.components) == 1
    assert len(enumerate_centers(rel).maps) == lat.n
    dec = recognize_finite(rel)
    assert dec.yes and decide_by_enumeration(rel)
    d_lat, d_model, maps = homotopy_reduce(dec.structure)
    assert d_lat.n == 1 and d_model.verified
    assert set(maps.gamma) == {0}


def test_trunc_one_structure_each():
    for n in (1, 2):
        rel = load(f"trunc-{n}")
        structs = enumerate_model_structures(rel, max_elements=24, max_generators=32)
        assert len(structs) == 1
        m = structs[0]
        lat = rel.lattice
        for k in range(1, n + 1):
            assert (lat.index(f"U{k}"), lat.index(f"C{k}")) in m.acyclic_cofibrations()
            assert (lat.index(f"U{k}"), lat.index(f"E{k}")) in m.acyclic_fibrations()
        assert (lat.index("A0"), lat.index(f"A{n}")) in m.acyclic_cofibrations()
