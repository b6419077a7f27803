import itertools

import pytest

from varietylab import models
from varietylab.enumeration import (
    EnumerationReport,
    _enumerate,
    canonical_form,
    classify,
    enumerate_algebras,
    render_report,
)
from varietylab.models import builtin, check_axioms, is_isomorphic, make_algebra
from varietylab.terms import Mode
from varietylab.varieties import Variety


def brute_force_census(order, mode):
    """Independent oracle: every table, every distinguished element, no
    pruning, no backtracking; canonical forms of the axiom survivors."""
    blobs = set()
    for flat in itertools.product(range(order), repeat=order * order):
        table = [flat[i * order:(i + 1) * order] for i in range(order)]
        for d in range(order):
            a = make_algebra(table, d)
            if check_axioms(a, mode).passed:
                blobs.add(canonical_form(a))
    return tuple(sorted(blobs))


def test_bounds_enforced():
    with pytest.raises(ValueError):
        enumerate_algebras(5, Mode.IS)
    with pytest.raises(ValueError):
        enumerate_algebras(0, Mode.IS)


def test_order_one():
    rep = enumerate_algebras(1, Mode.IS)
    assert rep.count == 1
    assert rep.per_variety == {Variety.T: 1}
    assert enumerate_algebras(1, Mode.IZ).count == 1


def test_order_two_is_contains_A_and_Z():
    rep = enumerate_algebras(2, Mode.IS)
    forms = {canonical_form(a) for a in rep.algebras}
    assert canonical_form(builtin("A")) in forms
    assert canonical_form(builtin("Z")) in forms
    assert rep.count == 2


def test_order_two_iz_contains_2s_and_2b():
    rep = enumerate_algebras(2, Mode.IZ)
    forms = {canonical_form(a) for a in rep.algebras}
    assert canonical_form(builtin("2s")) in forms
    assert canonical_form(builtin("2b")) in forms


def test_every_enumerated_algebra_passes_axioms():
    for order in (1, 2, 3):
        for mode in (Mode.IS, Mode.IZ):
            for a in enumerate_algebras(order, mode).algebras:
                assert check_axioms(a, mode).passed


def test_builtins_appear_at_their_order():
    # orders within the enumeration bound; M (order 5) is out of reach
    expected = {1: ("trivial",), 2: ("A", "Z"), 3: ("B",), 4: ("K", "L")}
    for order, names in expected.items():
        forms = {canonical_form(a) for a in enumerate_algebras(order, Mode.IS).algebras}
        for name in names:
            assert canonical_form(builtin(name)) in forms, name


def test_canonical_form_examples():
    z = builtin("Z")
    z_swapped = make_algebra([[0, 0], [0, 0]], 0)
    assert canonical_form(z) == canonical_form(z_swapped)
    assert canonical_form(builtin("A")) != canonical_form(z)
    assert canonical_form(builtin("trivial")) == bytes([1, 0])
    assert is_isomorphic(z, z_swapped)


def test_parallel_matches_sequential():
    assert _enumerate(3, Mode.IS, jobs=2) == _enumerate(3, Mode.IS, jobs=1)
    assert _enumerate(3, Mode.IZ, jobs=2) == _enumerate(3, Mode.IZ, jobs=1)


@pytest.mark.parametrize("mode", [Mode.IS, Mode.IZ])
@pytest.mark.parametrize("order", [1, 2, 3])
def test_census_matches_naive_oracle(order, mode):
    # validates both the pruning and pinning the constant at index 0
    assert brute_force_census(order, mode) == _enumerate(order, mode, 1)


def test_classify_small_orders():
    assert classify(enumerate_algebras(1, Mode.IS)) == {Variety.T: 1}
    counts = classify(enumerate_algebras(2, Mode.IS))
    assert counts == {Variety.SL: 1, Variety.ZM: 1}
    with pytest.raises(ValueError):
        classify(enumerate_algebras(2, Mode.IZ))


def test_classify_order_four_recovers_K_and_L():
    rep = enumerate_algebras(4, Mode.IS)
    counts = classify(rep)
    assert counts[Variety.K] == 1
    assert counts[Variety.L] == 1
    k_form = canonical_form(builtin("K"))
    l_form = canonical_form(builtin("L"))
    by_form = {canonical_form(a): a for a in rep.algebras}
    assert models.satisfies(by_form[k_form], "xy = yx")
    assert not models.satisfies(by_form[l_form], "xy = yx")


def test_render_report_format():
    rep = enumerate_algebras(2, Mode.IS)
    text = render_report(rep)
    assert text.endswith("order=2 mode=is classes=2\n")
    assert text.count("# variety:") == 2
    iz = render_report(enumerate_algebras(2, Mode.IZ))
    assert "# variety:" not in iz
    assert iz.endswith("order=2 mode=iz classes=3\n")


def test_report_counts_consistent():
    rep = enumerate_algebras(3, Mode.IS)
    assert isinstance(rep, EnumerationReport)
    assert sum(rep.per_variety.values()) == rep.count
