"""Finite (2,0)-algebras as operation tables, with an exact identity oracle.

An algebra is an n-by-n table plus a distinguished element (the constant).
In associative mode words evaluate by folding the table left to right; in
tree mode terms evaluate recursively with ``table[i][j]`` read as ``i -> j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .terms import (
    Arrow,
    Identity,
    Mode,
    Var,
    Word,
    Zero,
    content,
    parse_identity,
    term_letters,
)


class NotAnIdealError(ValueError):
    """The given element set is not closed under outer multiplication."""

    def __init__(self, element: int, by: int, product: int, side: str):
        super().__init__(
            f"not an ideal: {side} product of {element} by {by} escapes to {product}"
        )
        self.witness = (element, by, product, side)


class AxiomViolationError(ValueError):
    """An algebra failed its axiom check where passing was a precondition."""

    def __init__(self, report: "AxiomReport"):
        bad = [c for c in report.checks if not c.passed]
        detail = "; ".join(f"{c.name} fails at {c.witness}" for c in bad)
        super().__init__(f"axiom check failed: {detail}")
        self.report = report


@dataclass(frozen=True)
class FiniteAlgebra:
    """Cayley table with a distinguished element index."""

    table: tuple
    distinguished: int
    name: str | None = None
    element_names: tuple | None = None

    def __post_init__(self):
        n = len(self.table)
        if n < 1:
            raise ValueError("algebras have at least one element")
        for row in self.table:
            if len(row) != n:
                raise ValueError("table must be square")
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"table entry {v} out of range")
        if not 0 <= self.distinguished < n:
            raise ValueError("distinguished element out of range")
        if self.element_names is not None and len(self.element_names) != n:
            raise ValueError("element_names length mismatch")

    @property
    def order(self) -> int:
        return len(self.table)

    def element_name(self, i: int) -> str:
        if self.element_names is not None:
            return self.element_names[i]
        return str(i)

    def __repr__(self) -> str:
        label = self.name or f"order-{self.order}"
        return f"FiniteAlgebra({label}, distinguished={self.distinguished})"


def make_algebra(rows, distinguished, name=None, element_names=None) -> FiniteAlgebra:
    return FiniteAlgebra(
        tuple(tuple(r) for r in rows),
        distinguished,
        name,
        tuple(element_names) if element_names is not None else None,
    )


# ---------------------------------------------------------------------------
# Evaluation and satisfaction


def evaluate(a: FiniteAlgebra, t, assignment: dict) -> int:
    """Value of a word (left fold) or tree term (recursion) under an assignment."""
    if isinstance(t, Word):
        acc = None
        for ch in t.symbols:
            v = a.distinguished if ch == "O" else _lookup(assignment, ch)
            acc = v if acc is None else a.table[acc][v]
        return acc
    if isinstance(t, Zero):
        return a.distinguished
    if isinstance(t, Var):
        return _lookup(assignment, t.name)
    if isinstance(t, Arrow):
        return a.table[evaluate(a, t.left, assignment)][evaluate(a, t.right, assignment)]
    raise TypeError(f"cannot evaluate {t!r}")


def _lookup(assignment: dict, letter: str) -> int:
    try:
        return assignment[letter]
    except KeyError:
        raise ValueError(f"unassigned letter {letter!r}") from None


@dataclass(frozen=True)
class SatResult:
    holds: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.holds


def identity_letters(ident: Identity) -> tuple:
    if ident.mode is Mode.IS:
        letters = content(ident.lhs) | content(ident.rhs)
    else:
        letters = term_letters(ident.lhs) | term_letters(ident.rhs)
    return tuple(sorted(letters))


def satisfies(a: FiniteAlgebra, ident) -> SatResult:
    """Exhaustive check over all assignments; first lexicographic witness kept."""
    if isinstance(ident, str):
        ident = parse_identity(ident)
    letters = identity_letters(ident)
    for values in itertools.product(range(a.order), repeat=len(letters)):
        asg = dict(zip(letters, values))
        if evaluate(a, ident.lhs, asg) != evaluate(a, ident.rhs, asg):
            return SatResult(False, asg)
    return SatResult(True, None)


def word_value_classes(a: FiniteAlgebra, words, letters=("x", "y", "z")) -> dict:
    """Map each word to an id of its value vector over all |A|^k assignments.

    Two words get the same id iff the algebra satisfies their equation, so
    this is ``satisfies`` batched over a family of words sharing an alphabet.
    """
    assigns = list(itertools.product(range(a.order), repeat=len(letters)))
    base = {
        letter: tuple(asg[k] for asg in assigns) for k, letter in enumerate(letters)
    }
    base["O"] = tuple(a.distinguished for _ in assigns)
    table = a.table
    vectors: dict = {}
    class_of: dict = {}
    for w in words:
        vec = None
        for ch in w.symbols:
            col = base[ch]
            vec = col if vec is None else tuple(table[p][q] for p, q in zip(vec, col))
        class_of[w] = vectors.setdefault(vec, len(vectors))
    return class_of


# ---------------------------------------------------------------------------
# Axiom checks


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: object = None


@dataclass(frozen=True)
class AxiomReport:
    mode: Mode
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed


_IS_AXIOM_TEXTS = ("xyz = zOxyzOO", "OOO = O")
_IZ_AXIOM_TEXTS = ("((x>y)>z) = ((z'>x)>(y>z)')'", "0'' = 0")


def _associativity_check(a: FiniteAlgebra) -> AxiomCheck:
    t = a.table
    for i, j, k in itertools.product(range(a.order), repeat=3):
        if t[t[i][j]][k] != t[i][t[j][k]]:
            return AxiomCheck("associativity", False, (i, j, k))
    return AxiomCheck("associativity", True)


def check_axioms(a: FiniteAlgebra, mode: Mode) -> AxiomReport:
    """Per-axiom pass/fail with witnesses: associativity plus the defining
    identities in associative mode, the two defining identities in tree mode."""
    checks = []
    if mode is Mode.IS:
        checks.append(_associativity_check(a))
        texts = _IS_AXIOM_TEXTS
    else:
        texts = _IZ_AXIOM_TEXTS
    for text in texts:
        res = satisfies(a, parse_identity(text, mode))
        checks.append(AxiomCheck(text, res.holds, res.witness))
    return AxiomReport(mode, tuple(checks))


# ---------------------------------------------------------------------------
# Constructions


def direct_product(a: FiniteAlgebra, b: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise product on pairs, (i, j) encoded as i * |b| + j."""
    na, nb = a.order, b.order
    table = [
        [
            (a.table[i][k] * nb + b.table[j][m])
            for k in range(na)
            for m in range(nb)
        ]
        for i in range(na)
        for j in range(nb)
    ]
    names = None
    if a.element_names is not None and b.element_names is not None:
        names = tuple(
            f"({a.element_names[i]},{b.element_names[j]})"
            for i in range(na)
            for j in range(nb)
        )
    name = f"{a.name}x{b.name}" if a.name and b.name else None
    return make_algebra(table, a.distinguished * nb + b.distinguished, name, names)


def _quotient_data(a: FiniteAlgebra, ideal: frozenset):
    """Validate the ideal and return (kept original indices, class map old->new)."""
    if not ideal:
        raise ValueError("ideal must be nonempty")
    for e in ideal:
        if not 0 <= e < a.order:
            raise ValueError(f"ideal element {e} out of range")
    for u in ideal:
        for v in range(a.order):
            if a.table[u][v] not in ideal:
                raise NotAnIdealError(u, v, a.table[u][v], "right")
            if a.table[v][u] not in ideal:
                raise NotAnIdealError(u, v, a.table[v][u], "left")
    rep = min(ideal)
    kept = sorted((set(range(a.order)) - ideal) | {rep})
    newindex = {old: new for new, old in enumerate(kept)}
    cls = {
        old: (newindex[rep] if old in ideal else newindex[old])
        for old in range(a.order)
    }
    return kept, cls


def rees_quotient(a: FiniteAlgebra, ideal) -> FiniteAlgebra:
    """Collapse an ideal to a single zero class; class names use the smallest
    original index as representative."""
    ideal = frozenset(ideal)
    kept, cls = _quotient_data(a, ideal)
    table = [[cls[a.table[u][v]] for v in kept] for u in kept]
    names = None
    if a.element_names is not None:
        names = tuple(a.element_names[old] for old in kept)
    name = f"{a.name}/I" if a.name else None
    return make_algebra(table, cls[a.distinguished], name, names)


def subalgebra_generated(a: FiniteAlgebra, seed) -> FiniteAlgebra:
    """Closure of seed plus the distinguished element under the operation."""
    elems = set(seed) | {a.distinguished}
    while True:
        new = {a.table[u][v] for u in elems for v in elems} - elems
        if not new:
            break
        elems |= new
    kept = sorted(elems)
    newindex = {old: new for new, old in enumerate(kept)}
    table = [[newindex[a.table[u][v]] for v in kept] for u in kept]
    names = None
    if a.element_names is not None:
        names = tuple(a.element_names[old] for old in kept)
    return make_algebra(table, newindex[a.distinguished], None, names)


@dataclass
class SubdirectReport:
    """Outcome of decomposing an algebra over its central idempotent."""

    passed: bool
    band: FiniteAlgebra
    nil: FiniteAlgebra
    failures: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def subdirect_check(a: FiniteAlgebra) -> SubdirectReport:
    """Decompose over e = distinguished: verify e is a central idempotent, that
    s -> (e*s, class of s) embeds a into (eS) x (S/eS), that eS is a band and
    the quotient kills all triple products."""
    axioms = check_axioms(a, Mode.IS)
    if not axioms.passed:
        raise AxiomViolationError(axioms)
    t = a.table
    e = a.distinguished
    failures = []
    if t[e][e] != e:
        failures.append(f"distinguished element not idempotent: e*e={t[e][e]}")
    for s in range(a.order):
        if t[e][s] != t[s][e]:
            failures.append(f"distinguished element not central at {s}")
            break
    ideal = frozenset(t[e][s] for s in range(a.order))
    band = subalgebra_generated(a, ideal)
    _, cls = _quotient_data(a, ideal)
    nil = rees_quotient(a, ideal)
    seen = {}
    for s in range(a.order):
        key = (t[e][s], cls[s])
        if key in seen:
            failures.append(f"pair map not injective: {seen[key]} and {s} collide")
        seen[key] = s
    for s in range(a.order):
        for u in range(a.order):
            p = t[s][u]
            if t[e][p] != t[t[e][s]][t[e][u]]:
                failures.append(f"first component not a homomorphism at ({s},{u})")
            if cls[p] != nil.table[cls[s]][cls[u]]:
                failures.append(f"second component not a homomorphism at ({s},{u})")
    if not satisfies(band, "xx = x"):
        failures.append("ideal part is not a band")
    if not satisfies(nil, "xyz = O"):
        failures.append("quotient does not kill triple products")
    return SubdirectReport(not failures, band, nil, failures)


def is_isomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    """Brute-force search over bijections mapping distinguished to distinguished."""
    if a.order != b.order:
        return False
    n = a.order
    rest_a = [i for i in range(n) if i != a.distinguished]
    rest_b = [i for i in range(n) if i != b.distinguished]
    for image in itertools.permutations(rest_b):
        pi = {a.distinguished: b.distinguished}
        pi.update(zip(rest_a, image))
        if all(
            pi[a.table[i][j]] == b.table[pi[i]][pi[j]]
            for i in range(n)
            for j in range(n)
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# Builtin algebras

BUILTIN_NAMES = ("trivial", "A", "B", "K", "L", "M", "Z", "2s", "2b", "BxK_mod_I")


@lru_cache(maxsize=None)
def builtin(name: str) -> FiniteAlgebra:
    """The named concrete algebras used throughout: semilattice A, band B,
    the nilpotent semigroups K, L, M, null semigroup Z, the two 2-element
    tree-mode algebras, and the Rees quotient of B x K."""
    if name == "trivial":
        return make_algebra([[0]], 0, "trivial", ["0"])
    if name == "A":
        # 2-element semilattice (meet), constant = top
        return make_algebra([[0, 0], [0, 1]], 1, "A", ["0", "1"])
    if name == "B":
        # right-zero band {e, f} with adjoined identity, constant = identity
        return make_algebra([[0, 1, 0], [0, 1, 1], [0, 1, 2]], 2, "B", ["e", "f", "1"])
    if name == "K":
        # commutative, a*a = b*b = 0, all triple products zero
        return make_algebra(
            [[3, 2, 3, 3], [2, 3, 3, 3], [3, 3, 3, 3], [3, 3, 3, 3]],
            3,
            "K",
            ["a", "b", "ab", "0"],
        )
    if name == "L":
        # like K but b*a = 0 while a*b stays nonzero
        return make_algebra(
            [[3, 2, 3, 3], [3, 3, 3, 3], [3, 3, 3, 3], [3, 3, 3, 3]],
            3,
            "L",
            ["a", "b", "ab", "0"],
        )
    if name == "M":
        # commutative, a*a = 0, b*b nonzero, every triple product zero
        return make_algebra(
            [
                [4, 3, 4, 4, 4],
                [3, 2, 4, 4, 4],
                [4, 4, 4, 4, 4],
                [4, 4, 4, 4, 4],
                [4, 4, 4, 4, 4],
            ],
            4,
            "M",
            ["a", "b", "b2", "ab", "0"],
        )
    if name == "Z":
        return make_algebra([[1, 1], [1, 1]], 1, "Z", ["a", "0"])
    if name == "2s":
        return make_algebra([[0, 1], [1, 1]], 0, "2s", ["0", "1"])
    if name == "2b":
        return make_algebra([[1, 1], [0, 1]], 0, "2b", ["0", "1"])
    if name == "BxK_mod_I":
        prod = direct_product(builtin("B"), builtin("K"))
        zero_k = 3
        ideal = {i * 4 + zero_k for i in range(3)}
        quo = rees_quotient(prod, ideal)
        return FiniteAlgebra(quo.table, quo.distinguished, "BxK_mod_I", quo.element_names)
    raise ValueError(f"unknown builtin algebra {name!r}")


# ---------------------------------------------------------------------------
# Line-oriented file format


def parse_algebra(text: str) -> FiniteAlgebra:
    """Read the table format: ``size: n``, ``omega: k``, then n rows of n
    integers.  ``#`` starts a comment, blank lines are skipped."""
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if len(lines) < 2:
        raise ValueError("expected 'size:' and 'omega:' header lines")
    size_line, omega_line = lines[0], lines[1]
    if not size_line.startswith("size:"):
        raise ValueError(f"expected 'size: n', got {size_line!r}")
    if not omega_line.startswith("omega:"):
        raise ValueError(f"expected 'omega: k', got {omega_line!r}")
    n = int(size_line.split(":", 1)[1])
    k = int(omega_line.split(":", 1)[1])
    rows = lines[2:]
    if len(rows) != n:
        raise ValueError(f"expected {n} table rows, got {len(rows)}")
    table = []
    for row in rows:
        entries = [int(tok) for tok in row.split()]
        if len(entries) != n:
            raise ValueError(f"row {row!r} does not have {n} entries")
        table.append(entries)
    return make_algebra(table, k)


def render_algebra(a: FiniteAlgebra) -> str:
    lines = [f"size: {a.order}", f"omega: {a.distinguished}"]
    for row in a.table:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def load_algebra(path) -> FiniteAlgebra:
    with open(path, encoding="utf-8") as handle:
        return parse_algebra(handle.read())
