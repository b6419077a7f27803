import copy

import pytest

from varietylab import models
from varietylab.derivations import (
    AXIOM_LABELS,
    Direction,
    Kind,
    Rule,
    Script,
    Step,
    StepError,
    _axioms,
    apply_step,
    load_script,
    parse_script,
    render_script,
    replay,
    shipped_scripts,
    SHIPPED_ORDER,
)
from varietylab.enumeration import enumerate_algebras
from varietylab.terms import Arrow, Mode, Word, ZERO, parse_identity, parse_term, parse_word


def rules_for(mode, extra=()):
    out = {r.label: r for r in _axioms(mode)}
    for r in extra:
        out[r.label] = r
    return out


def test_apply_step_is_examples():
    rules = rules_for(Mode.IS)
    # literal shrink of three constants
    step = Step("A2", Direction.L2R, (2, 4), {}, Word("xO"))
    assert apply_step(Word("xOOO"), step, rules, Mode.IS) == Word("xO")
    # unwrap the defining identity across the whole word
    sub = {v: Word(v) for v in "xyz"}
    step = Step("A1", Direction.R2L, (1, 7), sub, Word("xyz"))
    assert apply_step(Word("zOxyzOO"), step, rules, Mode.IS) == Word("xyz")
    # needs three constants, only two present
    step = Step("A2", Direction.L2R, (1, 3), {}, Word("O"))
    with pytest.raises(StepError):
        apply_step(Word("xOO"), step, rules, Mode.IS)


def test_apply_step_error_cases():
    rules = rules_for(Mode.IS)
    with pytest.raises(StepError, match="unknown rule"):
        apply_step(Word("xx"), Step("nope", Direction.L2R, (1, 1), {}, Word("x")), rules, Mode.IS)
    with pytest.raises(StepError, match="outside word"):
        apply_step(Word("xx"), Step("A2", Direction.L2R, (1, 9), {}, Word("x")), rules, Mode.IS)
    iz_rules = rules_for(Mode.IZ)
    with pytest.raises(StepError, match="leaves the term"):
        apply_step(
            parse_term("0'"),
            Step("A2", Direction.L2R, "LLL", {}, ZERO),
            iz_rules,
            Mode.IZ,
        )


def test_apply_step_iz():
    rules = rules_for(Mode.IZ)
    term = parse_term("(0''>x)")
    step = Step("A2", Direction.L2R, "L", {}, parse_term("(0>x)"))
    assert apply_step(term, step, rules, Mode.IZ) == parse_term("(0>x)")


def test_all_shipped_scripts_pass():
    scripts = shipped_scripts()
    assert len(scripts) >= 10
    for script in scripts:
        assert replay(script), script.name


def test_shipped_proven_rules_cite_earlier_goals():
    seen = []
    for script in shipped_scripts():
        for rule in script.premises:
            if rule.kind is Kind.PROVEN:
                assert (script.mode, rule.identity) in seen, (script.name, rule.label)
        seen.append((script.mode, script.goal))


def corrupt(script, idx):
    bad = copy.deepcopy(script)
    step = bad.steps[idx]
    var = sorted(step.substitution)[0]
    image = step.substitution[var]
    if script.mode is Mode.IS:
        step.substitution[var] = image + Word("O")
    else:
        step.substitution[var] = Arrow(image, ZERO)
    return bad


def test_mutation_of_any_substitution_fails():
    for script in shipped_scripts():
        for idx, step in enumerate(script.steps):
            if not step.substitution:
                continue
            result = replay(corrupt(script, idx))
            assert not result.passed, (script.name, idx)
            assert result.step == idx


def test_corrupted_claimed_result_fails():
    script = copy.deepcopy(shipped_scripts()[0])
    script.steps[2].result = Word("OOOOOOO")
    result = replay(script)
    assert not result.passed and result.step == 2


def test_bad_start_and_unfinished_chain_fail():
    base = shipped_scripts()[0]
    wrong_start = copy.deepcopy(base)
    wrong_start.start = Word("OOO")
    assert not replay(wrong_start).passed
    truncated = copy.deepcopy(base)
    truncated.steps = truncated.steps[:-1]
    result = replay(truncated)
    assert not result.passed and result.step == len(truncated.steps)


def test_soundness_on_models():
    algebras = {
        Mode.IS: [models.builtin(n) for n in ("trivial", "A", "B", "K", "L", "M", "Z")]
        + list(enumerate_algebras(3, Mode.IS).algebras),
        Mode.IZ: [models.builtin(n) for n in ("trivial", "Z", "2s", "2b")]
        + list(enumerate_algebras(3, Mode.IZ).algebras),
    }
    for script in shipped_scripts():
        assert replay(script)
        for a in algebras[script.mode]:
            if all(models.satisfies(a, r.identity).holds for r in script.premises):
                assert models.satisfies(a, script.goal).holds, (script.name, a)


def test_goals_hold_in_premise_satisfying_builtins():
    # unconditional scripts hold in every builtin of their mode
    for script in shipped_scripts():
        if any(r.kind is Kind.PREMISE for r in script.premises):
            continue
        names = ("trivial", "A", "B", "K", "L", "M", "Z") if script.mode is Mode.IS else (
            "trivial", "Z", "2s", "2b")
        for name in names:
            assert models.satisfies(models.builtin(name), script.goal).holds


def test_script_round_trip():
    for script in shipped_scripts():
        assert parse_script(render_script(script)) == script


def test_load_script(tmp_path):
    script = shipped_scripts()[0]
    path = tmp_path / "s.script"
    path.write_text(render_script(script), encoding="utf-8")
    assert load_script(path) == script


def test_parse_script_rejects():
    with pytest.raises(ValueError):
        parse_script("mode: is\nname: x\n")
    with pytest.raises(ValueError, match="reserved"):
        parse_script(
            "mode: is\nname: x\npremises:\n  A1: xx = x\ngoal: x = x\nstart: x\n"
        )
    with pytest.raises(ValueError, match="bad step"):
        parse_script(
            "mode: is\nname: x\npremises:\ngoal: x = x\nstart: x\nstep huh\n"
        )
    with pytest.raises(ValueError, match="bad position"):
        parse_script(
            "mode: iz\nname: x\npremises:\ngoal: 0 = 0\nstart: 0\n"
            "step A2 L2R at Q sub {} -> 0\n"
        )


def test_duplicate_labels_rejected():
    rule = Rule("r", parse_identity("xx = x"), Kind.PREMISE)
    script = Script(Mode.IS, "dup", [rule, rule], parse_identity("x = x"), Word("x"), [])
    result = replay(script)
    assert not result.passed and "duplicate" in result.message


def test_axiom_inventory():
    assert AXIOM_LABELS == ("A1", "A2")
    assert [str(r.identity) for r in _axioms(Mode.IS)] == ["xyz = zOxyzOO", "OOO = O"]
    assert [str(r.identity) for r in _axioms(Mode.IZ)] == [
        "((x>y)>z) = ((z'>x)>(y>z)')'",
        "0'' = 0",
    ]
    assert len(SHIPPED_ORDER) == 12
