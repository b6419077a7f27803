"""Step-by-step equational derivation checker.

A script rewrites its goal's left side into the right side through explicit
steps.  Each step names a rule, a direction, a position (a 1-based factor
range in flat mode, a root path over L/R in tree mode), a substitution, and
the claimed result; the checker verifies, it never searches.  Associativity
is structural in flat mode, so it needs no rule of its own.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources

from .terms import (
    Arrow,
    Identity,
    Mode,
    TreeTerm,
    Word,
    parse_identity,
    parse_term,
    parse_word,
    render_term,
    render_word,
    substitute,
    substitute_term,
)


class Kind(Enum):
    AXIOM = "axiom"
    PREMISE = "premise"
    PROVEN = "proven"


class Direction(Enum):
    L2R = "L2R"
    R2L = "R2L"


@dataclass(frozen=True)
class Rule:
    label: str
    identity: Identity
    kind: Kind


def _axioms(mode: Mode) -> tuple:
    if mode is Mode.IS:
        return (
            Rule("A1", parse_identity("xyz = zOxyzOO"), Kind.AXIOM),
            Rule("A2", parse_identity("OOO = O"), Kind.AXIOM),
        )
    return (
        Rule("A1", parse_identity("((x>y)>z) = ((z'>x)>(y>z)')'", Mode.IZ), Kind.AXIOM),
        Rule("A2", parse_identity("0'' = 0", Mode.IZ), Kind.AXIOM),
    )


AXIOM_LABELS = ("A1", "A2")


@dataclass
class Step:
    label: str
    direction: Direction
    position: object  # (i, j) factor range in IS, path string in IZ ('e' = root)
    substitution: dict
    result: object  # claimed Word or TreeTerm after the step


@dataclass
class Script:
    mode: Mode
    name: str
    premises: list
    goal: Identity
    start: object
    steps: list


class StepError(Exception):
    """A step that cannot be applied: bad label, bad position, or no match."""

    def __init__(self, message: str, expected=None, found=None):
        super().__init__(message)
        self.expected = expected
        self.found = found


@dataclass
class ReplayResult:
    passed: bool
    step: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.passed


# ---------------------------------------------------------------------------
# Applying steps


def _term_at_path(t: TreeTerm, path: str) -> TreeTerm:
    node = t
    for ch in path:
        if not isinstance(node, Arrow):
            raise StepError(f"path {path!r} leaves the term")
        node = node.left if ch == "L" else node.right
    return node


def _replace_at_path(t: TreeTerm, path: str, new: TreeTerm) -> TreeTerm:
    if not path:
        return new
    if not isinstance(t, Arrow):
        raise StepError(f"path {path!r} leaves the term")
    if path[0] == "L":
        return Arrow(_replace_at_path(t.left, path[1:], new), t.right)
    return Arrow(t.left, _replace_at_path(t.right, path[1:], new))


def apply_step(term, step: Step, rules: dict, mode: Mode):
    """Rewrite ``term`` by the named rule at the given position.  The addressed
    fragment must equal the substituted source side exactly."""
    rule = rules.get(step.label)
    if rule is None:
        raise StepError(f"unknown rule label {step.label!r}")
    src = rule.identity.lhs if step.direction is Direction.L2R else rule.identity.rhs
    dst = rule.identity.rhs if step.direction is Direction.L2R else rule.identity.lhs
    if mode is Mode.IS:
        i, j = step.position
        if not (1 <= i <= j <= len(term.symbols)):
            raise StepError(f"range {i}..{j} outside word of length {len(term.symbols)}")
        expected = substitute(src, step.substitution)
        found = Word(term.symbols[i - 1:j])
        if found != expected:
            raise StepError(
                f"no match at {i}..{j}: expected {expected}, found {found}",
                expected,
                found,
            )
        replacement = substitute(dst, step.substitution)
        return Word(term.symbols[: i - 1] + replacement.symbols + term.symbols[j:])
    path = "" if step.position == "e" else step.position
    found = _term_at_path(term, path)
    expected = substitute_term(src, step.substitution)
    if found != expected:
        raise StepError(
            f"no match at {step.position}: expected {expected}, found {found}",
            expected,
            found,
        )
    replacement = substitute_term(dst, step.substitution)
    return _replace_at_path(term, path, replacement)


def replay(script: Script) -> ReplayResult:
    """PASS iff every step checks and the chain joins the goal's two sides."""
    rules = {}
    for rule in _axioms(script.mode) + tuple(script.premises):
        if rule.label in rules:
            return ReplayResult(False, None, f"duplicate rule label {rule.label!r}")
        rules[rule.label] = rule
    current = script.start
    if current != script.goal.lhs:
        return ReplayResult(
            False, None, f"start {current} differs from goal left side {script.goal.lhs}"
        )
    for idx, step in enumerate(script.steps):
        try:
            nxt = apply_step(current, step, rules, script.mode)
        except StepError as exc:
            return ReplayResult(False, idx, str(exc))
        if nxt != step.result:
            return ReplayResult(
                False,
                idx,
                f"claimed result {step.result} but step produced {nxt}",
            )
        current = nxt
    if current != script.goal.rhs:
        return ReplayResult(
            False,
            len(script.steps),
            f"chain ends at {current}, goal right side is {script.goal.rhs}",
        )
    return ReplayResult(True)


# ---------------------------------------------------------------------------
# Script text format

_STEP_RE = re.compile(
    r"step\s+(\S+)\s+(L2R|R2L)\s+at\s+(\S+)\s+sub\s+\{(.*)\}\s*->\s*(\S+)\s*$"
)
_PREMISE_RE = re.compile(r"(\S+?)(?:\s+\[(premise|proven)\])?\s*:\s*(.+)$")


def parse_script(text: str) -> Script:
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            lines.append(body.strip())
    def expect(prefix, line):
        if not line.startswith(prefix):
            raise ValueError(f"expected {prefix!r}, got {line!r}")
        return line[len(prefix):].strip()

    if len(lines) < 4:
        raise ValueError("script too short")
    mode = Mode(expect("mode:", lines[0]))
    name = expect("name:", lines[1])
    pos = 2
    premises = []
    if pos < len(lines) and lines[pos].startswith("premises:"):
        trailing = lines[pos][len("premises:"):].strip()
        if trailing:
            raise ValueError("premises go on their own lines")
        pos += 1
        while pos < len(lines) and not lines[pos].startswith("goal:"):
            m = _PREMISE_RE.match(lines[pos])
            if not m:
                raise ValueError(f"bad premise line {lines[pos]!r}")
            label, kindword, ident_text = m.groups()
            if label in AXIOM_LABELS:
                raise ValueError(f"label {label!r} is reserved for axioms")
            kind = Kind.PROVEN if kindword == "proven" else Kind.PREMISE
            premises.append(Rule(label, parse_identity(ident_text, mode), kind))
            pos += 1
    goal = parse_identity(expect("goal:", lines[pos]), mode)
    pos += 1
    start_text = expect("start:", lines[pos])
    start = parse_word(start_text) if mode is Mode.IS else parse_term(start_text)
    pos += 1
    steps = []
    for line in lines[pos:]:
        m = _STEP_RE.match(line)
        if not m:
            raise ValueError(f"bad step line {line!r}")
        label, direction, pos_text, sub_text, result_text = m.groups()
        if ".." in pos_text:
            lo, hi = pos_text.split("..")
            position: object = (int(lo), int(hi))
        else:
            if pos_text != "e" and not set(pos_text) <= {"L", "R"}:
                raise ValueError(f"bad position {pos_text!r}")
            position = pos_text
        substitution = {}
        if sub_text.strip():
            for binding in sub_text.split(","):
                var, _, image = binding.partition("=")
                var = var.strip()
                if not var:
                    raise ValueError(f"bad binding in {line!r}")
                image = image.strip()
                substitution[var] = (
                    parse_word(image) if mode is Mode.IS else parse_term(image)
                )
        result = parse_word(result_text) if mode is Mode.IS else parse_term(result_text)
        steps.append(Step(label, Direction(direction), position, substitution, result))
    return Script(mode, name, premises, goal, start, steps)


def render_script(script: Script) -> str:
    show = render_word if script.mode is Mode.IS else render_term
    lines = [f"mode: {script.mode.value}", f"name: {script.name}", "premises:"]
    for rule in script.premises:
        mark = " [proven]" if rule.kind is Kind.PROVEN else ""
        lines.append(f"  {rule.label}{mark}: {rule.identity}")
    lines.append(f"goal: {script.goal}")
    lines.append(f"start: {show(script.start)}")
    for step in script.steps:
        if isinstance(step.position, tuple):
            pos = f"{step.position[0]}..{step.position[1]}"
        else:
            pos = step.position
        sub = ", ".join(f"{v}={show(t)}" for v, t in sorted(step.substitution.items()))
        lines.append(
            f"step {step.label} {step.direction.value} at {pos} sub {{{sub}}}"
            f" -> {show(step.result)}"
        )
    return "\n".join(lines) + "\n"


def load_script(path) -> Script:
    with open(path, encoding="utf-8") as handle:
        return parse_script(handle.read())


SHIPPED_ORDER = (
    "omega-idempotent",
    "omega-commutes",
    "omega-tail",
    "monoid-to-band",
    "band-to-monoid",
    "monoid-middle-collapse",
    "sandwich",
    "head-square",
    "head-absorb",
    "weak-fixpoint",
    "prime-fixpoint",
    "zero-to-prime",
)


@lru_cache(maxsize=1)
def shipped_scripts() -> tuple:
    """The bundled derivations, in dependency order: rules cited as proven in
    a later script are goals of an earlier one."""
    out = []
    for name in SHIPPED_ORDER:
        data = resources.files("varietylab").joinpath(f"scripts/{name}.script")
        out.append(parse_script(data.read_text(encoding="utf-8")))
    return tuple(out)
