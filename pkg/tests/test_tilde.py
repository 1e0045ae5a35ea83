"""Order-n cohomology: word complexes, transpose check, splitting, reflection."""

import pytest

from legch import ContractError
from legch.ainfty import AInftyMorphism, transfer_minimal_model, build_ring
from legch.augment import enumerate_augmentations
from legch.families import bundled_examples, cupex, masseyex, trefoil
from legch.linear import homology
from legch.tilde import (
    check_order_n_transpose,
    order_n_cohomology,
    reflection_compare,
    splitting_check_n2,
    tilde_complex,
    tilde_of_morphism,
)

TREFOIL_ORDER_DIMS = {
    1: {0: 2, 1: 1},
    2: {0: 5, 1: 4, 2: 1},
    3: {0: 9, 1: 11, 2: 6, 3: 1},
}


def test_order_and_engine_validation():
    dga = trefoil()
    aug = enumerate_augmentations(dga)[0]
    with pytest.raises(ContractError):
        order_n_cohomology(dga, aug, 0)
    with pytest.raises(ContractError):
        order_n_cohomology(dga, aug, 5)
    with pytest.raises(ContractError):
        order_n_cohomology(dga, aug, 2, engine="fast")
    # the cap is an override, not a hard limit
    high = order_n_cohomology(dga, aug, 5, max_order=5)
    assert high.order == 5 and sum(high.dims.values()) > 0


def test_trefoil_order_dims_frozen():
    dga = trefoil()
    aug = enumerate_augmentations(dga)[0]
    for n, dims in TREFOIL_ORDER_DIMS.items():
        got = order_n_cohomology(dga, aug, n)
        assert got.dims == dims, n
        assert got.complex_dim == sum(5**a for a in range(1, n + 1))
    assert order_n_cohomology(dga, aug, 1).dims == {0: 2, 1: 1}


def test_order_one_matches_linearized_cohomology():
    for name, dga in bundled_examples():
        for aug in enumerate_augmentations(dga):
            ring = build_ring(dga, aug)
            got = order_n_cohomology(dga, aug, 1)
            assert got.dims == ring.cochain.dims(), name


def test_engines_agree():
    jobs = [(trefoil(), 3), (cupex(1, 3, 7), 2), (masseyex(1, 4, 9, 20), 2)]
    for dga, n in jobs:
        for aug in enumerate_augmentations(dga):
            dense = order_n_cohomology(dga, aug, n, engine="dense")
            pert = order_n_cohomology(dga, aug, n, engine="perturbation")
            assert dense.engine == "dense" and pert.engine == "perturbation"
            assert dense.dims == pert.dims
            assert dense.complex_dim == pert.complex_dim
            assert dense.transpose_entries == pert.transpose_entries


def test_auto_engine_resolution_and_frozen_counts():
    cup = cupex(1, 3, 7)
    aug = enumerate_augmentations(cup)[0]
    big = order_n_cohomology(cup, aug, 3)
    assert big.engine == "perturbation"
    assert big.complex_dim == 44135
    assert big.transpose_entries == 106531
    mas = masseyex(1, 4, 9, 20)
    aug = enumerate_augmentations(mas)[0]
    mid = order_n_cohomology(mas, aug, 2)
    assert mid.engine == "dense"
    assert mid.complex_dim == 7656
    assert mid.transpose_entries == 13523
    tre = trefoil()
    aug = enumerate_augmentations(tre)[0]
    forced = order_n_cohomology(tre, aug, 2, dense_limit=10)
    assert forced.engine == "perturbation"
    assert forced.dims == TREFOIL_ORDER_DIMS[2]


def test_results_are_cached_by_content():
    aug = enumerate_augmentations(trefoil())[0]
    first = order_n_cohomology(trefoil(), aug, 2)
    second = order_n_cohomology(trefoil(), aug, 2)
    assert first is second


def test_transpose_check_counts_linear_entries_at_order_one():
    dga = trefoil()
    aug = enumerate_augmentations(dga)[0]
    # twisted d a1 and d a2 each have linear part b1 + b3
    assert check_order_n_transpose(dga, aug, 1) == 4


def test_representatives_label_words():
    dga = trefoil()
    aug = enumerate_augmentations(dga)[0]
    got = order_n_cohomology(dga, aug, 2, engine="dense")
    reps = got.representatives(2)
    assert len(reps) == 1
    assert all("|" in r or r.startswith("[") for r in reps)


def test_splitting_identity_on_trefoil_and_cup_family():
    dga = trefoil()
    for aug in enumerate_augmentations(dga):
        report = splitting_check_n2(dga, aug)
        assert report.ok
        assert "cup" in report.convention or "mu_2" in report.convention
        for row in report.rows:
            assert row.expected == row.kernel_dim + row.homology_dim - row.image_dim
    cup = cupex(1, 3, 7)
    assert splitting_check_n2(cup, enumerate_augmentations(cup)[0]).ok


def test_splitting_rows_frozen_on_first_trefoil_augmentation():
    dga = trefoil()
    aug = enumerate_augmentations(dga)[0]
    report = splitting_check_n2(dga, aug)
    table = [(r.degree, r.order2_dim, r.kernel_dim, r.homology_dim, r.image_dim) for r in report.rows]
    assert table == [(0, 5, 3, 2, 0), (1, 4, 4, 1, 1), (2, 1, 1, 0, 0)]


def test_reflection_compare_on_trefoil():
    report = reflection_compare(trefoil(), 2)
    assert report.ok
    assert report.order == 2
    assert len(report.rows) == 5
    assert report.conjugation_words == 5 * (5 + 25)
    for row in report.rows:
        assert row.dims == row.mirror_dims


def test_tilde_complex_dims_match_engine_output():
    dga = trefoil()
    aug = enumerate_augmentations(dga)[0]
    ring = build_ring(dga, aug)
    built = tilde_complex(ring.structure, 2)
    assert built.total_dim() == 30
    assert homology(built.differential, "cochain").dims() == TREFOIL_ORDER_DIMS[2]


def test_minimal_model_tilde_complex_computes_order_n_dims():
    jobs = [(trefoil(), 3), (cupex(1, 3, 7), 3), (masseyex(1, 4, 9, 20), 2)]
    for dga, top in jobs:
        for aug in enumerate_augmentations(dga):
            ring = build_ring(dga, aug)
            mu, _ = transfer_minimal_model(ring.cochain, ring.structure, 3)
            for n in range(1, top + 1):
                small = tilde_complex(mu, n)
                want = order_n_cohomology(dga, aug, n)
                assert homology(small.differential, "cochain").dims() == want.dims


def test_tilde_of_morphism_is_a_quasi_isomorphism():
    dga = trefoil()
    for aug in enumerate_augmentations(dga):
        ring = build_ring(dga, aug)
        mu, f = transfer_minimal_model(ring.cochain, ring.structure, 3)
        for n in (2, 3):
            induced = tilde_of_morphism(f, n)
            ranks = induced.induced_ranks()
            assert induced.is_quasi_iso(), ranks
            for k, (a, b, r) in ranks.items():
                assert a == b == r, (k, a, b, r)


def test_tilde_of_morphism_rejects_incomplete_or_wrong_input():
    dga = trefoil()
    aug = enumerate_augmentations(dga)[0]
    ring = build_ring(dga, aug)
    mu, f = transfer_minimal_model(ring.cochain, ring.structure, 3)
    bare = AInftyMorphism(3, {n: dict(t) for n, t in f.tables.items()})
    with pytest.raises(ContractError):
        tilde_of_morphism(bare, 2)
    broken_tables = {n: dict(t) for n, t in f.tables.items()}
    broken_tables[1] = dict(broken_tables[1])
    broken_tables[1][("[b2]",)] = 0b001  # no longer a chain map
    broken = AInftyMorphism(3, broken_tables, src=mu, dst=ring.structure)
    with pytest.raises(ContractError):
        tilde_of_morphism(broken, 2)
