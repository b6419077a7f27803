import itertools
import random

import pytest

from varietylab.models import (
    AxiomViolationError,
    BUILTIN_NAMES,
    FiniteAlgebra,
    NotAnIdealError,
    builtin,
    check_axioms,
    direct_product,
    evaluate,
    is_isomorphic,
    load_algebra,
    make_algebra,
    parse_algebra,
    rees_quotient,
    render_algebra,
    satisfies,
    subalgebra_generated,
    subdirect_check,
)
from varietylab.terms import Mode, Word, parse_identity, parse_term

IS_BUILTINS = ("trivial", "A", "B", "K", "L", "M", "Z", "BxK_mod_I")

# identities provable in every implication semigroup, used as a model-level
# sanity battery (defining identities plus their derived consequences)
DERIVED_IS_IDENTITIES = (
    "xyz = zOxyzOO",
    "OOO = O",
    "OO = O",
    "Ox = xO",
    "xyz = xyzO",
    "xyx = yxO",
    "xxy = xyO",
    "xxyz = xyzO",
    "xyxzx = yzxO",
    "zOxyzOO = xyzO",
    "xyzxyz = xyzO",
)


def test_builtin_unknown():
    with pytest.raises(ValueError):
        builtin("Q")


def test_builtin_tables_2s_2b():
    assert builtin("2b").table[0] == (1, 1)
    assert builtin("2s").table[0] == (0, 1)
    assert builtin("2s").distinguished == 0
    assert builtin("2b").distinguished == 0


def test_builtin_B_walk():
    b = builtin("B")
    e, f = 0, 1
    assert b.table[b.table[e][f]][e] == e  # e*f*e = e


def test_presentations_via_satisfies():
    assert satisfies(builtin("K"), "xy = yx")
    res = satisfies(builtin("L"), "xy = yx")
    assert not res.holds and res.witness == {"x": 0, "y": 1}
    res = satisfies(builtin("M"), "xO = xx")
    assert not res.holds and res.witness == {"x": 1}
    assert builtin("M").element_name(1) == "b"
    assert satisfies(builtin("K"), "xO = xx")
    assert satisfies(builtin("B"), "xO = xx")


def test_evaluate():
    k = builtin("K")
    assert evaluate(k, Word("xy"), {"x": 0, "y": 1}) == 2  # a*b = ab
    l = builtin("L")
    assert evaluate(l, Word("yx"), {"x": 0, "y": 1}) == 3  # b*a = 0
    for name in IS_BUILTINS:
        a = builtin(name)
        assert evaluate(a, Word("O"), {}) == a.distinguished
    assert evaluate(builtin("2b"), parse_term("0'"), {}) == 1
    with pytest.raises(ValueError):
        evaluate(k, Word("xy"), {"x": 0})


def test_check_axioms_is():
    for name in IS_BUILTINS:
        report = check_axioms(builtin(name), Mode.IS)
        assert report.passed, (name, report)
    report = check_axioms(builtin("2b"), Mode.IS)
    assoc = report.checks[0]
    assert not assoc.passed and assoc.witness == (0, 0, 0)


def test_check_axioms_iz():
    for name in ("2s", "2b", "trivial", "Z"):
        assert check_axioms(builtin(name), Mode.IZ).passed, name


def test_derived_identities_hold_in_all_is_builtins():
    for name in IS_BUILTINS:
        a = builtin(name)
        for text in DERIVED_IS_IDENTITIES:
            assert satisfies(a, text), (name, text)


def test_direct_product():
    prod = direct_product(builtin("B"), builtin("K"))
    assert prod.order == 12
    # (e,a)*(f,b) = (f,ab): e=0,f=1 in B; a=0,b=1,ab=2 in K
    ea, fb = 0 * 4 + 0, 1 * 4 + 1
    assert prod.table[ea][fb] == 1 * 4 + 2
    assert prod.distinguished == 2 * 4 + 3
    assert prod.element_name(ea) == "(e,a)"


def test_product_preserves_satisfaction():
    rng = random.Random(7)
    names = ("A", "B", "K", "L", "M", "Z", "trivial")
    alphabet = "xyzO"
    for _ in range(120):
        a = builtin(rng.choice(names))
        b = builtin(rng.choice(names))
        u = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 4)))
        v = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 4)))
        ident = parse_identity(f"{u} = {v}")
        both = satisfies(a, ident).holds and satisfies(b, ident).holds
        assert satisfies(direct_product(a, b), ident).holds == both


def test_rees_quotient():
    prod = direct_product(builtin("B"), builtin("K"))
    ideal = {3, 7, 11}  # (e,0), (f,0), (1,0)
    quo = rees_quotient(prod, ideal)
    assert quo.order == 10
    assert satisfies(quo, "xx = O")
    res = satisfies(quo, "xy = yx")
    assert not res.holds
    # first failing pair is the classes of (e,a) and (f,b)
    assert res.witness == {"x": 0, "y": 5}
    assert quo.element_name(0) == "(e,a)" and quo.element_name(5) == "(f,b)"


def test_rees_quotient_rejects_non_ideal():
    k = builtin("K")
    with pytest.raises(NotAnIdealError):
        rees_quotient(k, {0})  # {a} is not closed: a*b = ab escapes
    with pytest.raises(ValueError):
        rees_quotient(k, set())


def test_subalgebra_generated():
    two_b = builtin("2b")
    sub = subalgebra_generated(two_b, set())
    assert sub.order == 2  # 0' = 1 forces both elements
    k = builtin("K")
    sub = subalgebra_generated(k, {0})
    assert sub.order == 2 and sub.element_names == ("a", "0")
    triv = builtin("trivial")
    assert subalgebra_generated(triv, set()).order == 1


def test_subdirect_check_builtins():
    rep = subdirect_check(builtin("B"))
    assert rep.passed
    assert rep.band.order == 3 and rep.nil.order == 1
    rep = subdirect_check(builtin("M"))
    assert rep.passed
    assert rep.band.order == 1
    assert is_isomorphic(rep.nil, builtin("M"))
    assert subdirect_check(builtin("K")).passed
    with pytest.raises(AxiomViolationError):
        subdirect_check(builtin("2b"))


def test_is_isomorphic():
    z = builtin("Z")
    z_swapped = make_algebra([[0, 0], [0, 0]], 0, "Zs", ["0", "a"])
    assert is_isomorphic(z, z_swapped)
    assert not is_isomorphic(builtin("A"), z)
    assert not is_isomorphic(builtin("A"), builtin("B"))


def test_algebra_file_round_trip(tmp_path):
    for name in BUILTIN_NAMES:
        a = builtin(name)
        text = render_algebra(a)
        back = parse_algebra(text)
        assert back.table == a.table and back.distinguished == a.distinguished
    path = tmp_path / "m.alg"
    path.write_text("# a comment\n" + render_algebra(builtin("M")), encoding="utf-8")
    assert load_algebra(path).table == builtin("M").table


def test_parse_algebra_rejects():
    with pytest.raises(ValueError):
        parse_algebra("size: 2\n0 0\n0 0\n")
    with pytest.raises(ValueError):
        parse_algebra("size: 2\nomega: 0\n0 0\n")
    with pytest.raises(ValueError):
        parse_algebra("size: 2\nomega: 0\n0 0 0\n0 0\n")
    with pytest.raises(ValueError):
        parse_algebra("size: 2\nomega: 3\n0 0\n0 0\n")


def test_table_validation():
    with pytest.raises(ValueError):
        FiniteAlgebra(((0, 2), (0, 0)), 0)
    with pytest.raises(ValueError):
        FiniteAlgebra(((0,), (0,)), 0)


def test_satisfies_all_assignments_count():
    # the oracle really sweeps |A|^k assignments
    a = builtin("A")
    seen = []
    ident = parse_identity("xy = yx")
    for values in itertools.product(range(a.order), repeat=2):
        seen.append(values)
    assert len(seen) == 4
    assert satisfies(a, ident)
