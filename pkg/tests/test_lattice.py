from __future__ import annotations

import pytest

from twoneg.errors import LatticeError
from twoneg.lattice import (all_lattices, all_posets, build_lattice,
                            canonical_form, derive_heyting,
                            residuation_mismatch, residuum,
                            transitive_reduction, upsets_of)

# Implication tables as printed, rows = antecedent in element order.
H5_TABLE = {
    "0": "1 1 1 1 1", "a": "b 1 b 1 1", "b": "a a 1 1 1",
    "e": "0 a b 1 1", "1": "0 a b e 1",
}
H6_TABLE = {
    "0": "1 1 1 1 1 1", "y": "x 1 x 1 x 1", "z": "y y 1 1 1 1",
    "w": "0 y x 1 x 1", "x": "y y w w 1 1", "1": "0 y z w x 1",
}


def _check_table(lat, expected):
    impl = derive_heyting(lat)
    for i, row_name in enumerate(lat.elements):
        got = " ".join(lat.elements[impl[i][j]] for j in range(lat.size))
        assert got == expected[row_name], f"row {row_name}"


def test_h5_heyting_table(h5):
    _check_table(h5, H5_TABLE)


def test_h6_heyting_table(h6):
    _check_table(h6, H6_TABLE)


def test_h6_meet_example(h6):
    assert h6.meet[h6.index("w")][h6.index("x")] == h6.index("z")


def test_three_chain_is_valid(chain3):
    assert chain3.bottom == 0 and chain3.top == 2 and chain3.distributive


def test_diamond_rejected_not_distributive():
    with pytest.raises(LatticeError) as e:
        build_lattice(["0", "x", "y", "z", "1"],
                      [("0", "x"), ("0", "y"), ("0", "z"),
                       ("x", "1"), ("y", "1"), ("z", "1")])
    assert e.value.kind == "not-distributive"


def test_diamond_residuum_missing():
    m3 = build_lattice(["0", "x", "y", "z", "1"],
                       [("0", "x"), ("0", "y"), ("0", "z"),
                        ("x", "1"), ("y", "1"), ("z", "1")],
                       require_distributive=False)
    assert residuum(m3, m3.index("x"), m3.index("y")) is None
    with pytest.raises(LatticeError) as e:
        derive_heyting(m3)
    assert e.value.kind == "residuum-missing"
    # row-major scan reaches (x, 0) before (x, y); both lack a maximum
    assert e.value.witness == ("x", "0")


def test_cycle_rejected():
    with pytest.raises(LatticeError) as e:
        build_lattice(["a", "b"], [("a", "b"), ("b", "a")])
    assert e.value.kind == "not-a-poset"


def test_missing_bound_rejected():
    with pytest.raises(LatticeError) as e:
        build_lattice(["a", "b"], [])
    assert e.value.kind in ("missing-glb", "missing-lub")


def test_nelson_table_is_not_residuated(chain3):
    # declared implication of the three-element involutive-negation algebra
    nelson = ((2, 2, 2), (2, 2, 2), (0, 1, 2))
    assert residuation_mismatch(chain3, nelson) == ("a", "0")
    assert residuum(chain3, chain3.index("a"), chain3.index("0")) == chain3.index("0")


def test_residuum_monotonicity():
    for lat in all_lattices(5):
        impl = derive_heyting(lat)
        n = lat.size
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if lat.leq[a][b]:
                        # antitone in the antecedent, monotone in the consequent
                        assert lat.leq[impl[b][c]][impl[a][c]]
                        assert lat.leq[impl[c][a]][impl[c][b]]


def test_poset_counts():
    posets = all_posets(6)
    assert [len(posets[k]) for k in range(1, 7)] == [1, 2, 5, 16, 63, 318]


def test_lattice_counts():
    sizes = {}
    for lat in all_lattices(6):
        sizes[lat.size] = sizes.get(lat.size, 0) + 1
    assert sizes == {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 5}


def test_upsets_sorted_by_cardinality(chain3):
    ups = upsets_of(chain3.leq)
    assert ups == [frozenset(), frozenset({2}), frozenset({1, 2}),
                   frozenset({0, 1, 2})]


def test_canonical_form_is_relabelling_invariant(h6):
    # same lattice with elements declared in a different order
    shuffled = build_lattice(
        ["x", "1", "0", "w", "z", "y"],
        [("0", "y"), ("0", "z"), ("y", "w"), ("z", "w"), ("z", "x"),
         ("w", "1"), ("x", "1")])
    assert canonical_form(h6.leq)[0] == canonical_form(shuffled.leq)[0]


def test_transitive_reduction_round_trip(h6):
    covers = set(transitive_reduction(h6.leq))
    expected = {("0", "y"), ("0", "z"), ("y", "w"), ("z", "w"), ("z", "x"),
                ("w", "1"), ("x", "1")}
    named = {(h6.elements[a], h6.elements[b]) for a, b in covers}
    assert named == expected
