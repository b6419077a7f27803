"""The sixteen named varieties: finite bases, generators, decision procedures.

Every variety here is a join of up to three of the seven basic ones, so an
identity holds in it iff it passes each component's syntactic test.  The
tests are pure functions of content, last-occurrence sequence, length and
square containment of the two sides.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import models
from .terms import (
    Mode,
    OMEGA,
    Word,
    contains_square,
    content,
    length,
    los,
    parse_identity,
)


class Variety(str, Enum):
    """The sixteen varieties, in bottom-up reading order of the diagram."""

    T = "T"
    ZM = "ZM"
    SL = "SL"
    K = "K"
    SL_ZM = "SL+ZM"
    B = "B"
    M = "M"
    L = "L"
    SL_K = "SL+K"
    B_ZM = "B+ZM"
    N = "N"
    SL_M = "SL+M"
    SL_L = "SL+L"
    B_K = "B+K"
    SL_N = "SL+N"
    IS = "IS"

    def __str__(self) -> str:
        return self.value


class Component(Enum):
    """Per-join-component syntactic tests."""

    SL = "SL"
    B = "B"
    ZM = "ZM"
    K = "K"
    L = "L"
    M = "M"
    N = "N"


@dataclass(frozen=True)
class VarietyRecord:
    id: Variety
    basis: tuple
    generators: tuple
    join_components: frozenset


_BASIS_TEXTS = {
    Variety.T: ("x = O",),
    Variety.SL: ("xx = x", "xy = yx"),
    Variety.B: ("xx = x",),
    Variety.ZM: ("xy = O",),
    Variety.K: ("xyz = O", "xx = O", "xy = yx"),
    Variety.L: ("xyz = O", "xx = O"),
    Variety.M: ("xyz = O", "xy = yx"),
    Variety.N: ("xyz = O",),
    Variety.SL_K: ("xO = xx", "xy = yx"),
    Variety.SL_L: ("xO = xx", "xyO = yxO"),
    Variety.SL_M: ("xy = yx",),
    Variety.SL_N: ("xyO = yxO",),
    Variety.SL_ZM: ("xy = yxO",),
    Variety.B_ZM: ("xy = xyO",),
    Variety.B_K: ("xO = xx",),
    Variety.IS: (),
}

_GENERATORS = {
    Variety.T: ("trivial",),
    Variety.SL: ("A",),
    Variety.B: ("B",),
    Variety.ZM: ("Z",),
    Variety.K: ("K",),
    Variety.L: ("L",),
    Variety.M: ("M",),
    Variety.N: ("L", "M"),
    Variety.SL_ZM: ("A", "Z"),
    Variety.SL_K: ("A", "K"),
    Variety.SL_L: ("A", "L"),
    Variety.SL_M: ("A", "M"),
    Variety.SL_N: ("A", "L", "M"),
    Variety.B_ZM: ("B", "Z"),
    Variety.B_K: ("B", "K"),
    Variety.IS: ("B", "L", "M"),
}

_COMPONENTS = {
    Variety.T: frozenset(),
    Variety.SL: frozenset({Component.SL}),
    Variety.B: frozenset({Component.B}),
    Variety.ZM: frozenset({Component.ZM}),
    Variety.K: frozenset({Component.K}),
    Variety.L: frozenset({Component.L}),
    Variety.M: frozenset({Component.M}),
    Variety.N: frozenset({Component.N}),
    Variety.SL_ZM: frozenset({Component.SL, Component.ZM}),
    Variety.SL_K: frozenset({Component.SL, Component.K}),
    Variety.SL_L: frozenset({Component.SL, Component.L}),
    Variety.SL_M: frozenset({Component.SL, Component.M}),
    Variety.SL_N: frozenset({Component.SL, Component.N}),
    Variety.B_ZM: frozenset({Component.B, Component.ZM}),
    Variety.B_K: frozenset({Component.B, Component.K}),
    Variety.IS: frozenset({Component.B, Component.N}),
}


@lru_cache(maxsize=1)
def registry() -> tuple:
    """All sixteen records.  Each generator is checked against its basis once."""
    records = []
    for v in Variety:
        basis = tuple(parse_identity(text) for text in _BASIS_TEXTS[v])
        rec = VarietyRecord(v, basis, _GENERATORS[v], _COMPONENTS[v])
        for gname in rec.generators:
            g = models.builtin(gname)
            for ident in basis:
                res = models.satisfies(g, ident)
                if not res.holds:
                    raise AssertionError(
                        f"generator {gname} violates basis of {v}: {ident} at {res.witness}"
                    )
        records.append(rec)
    return tuple(records)


@lru_cache(maxsize=None)
def record(v: Variety) -> VarietyRecord:
    for rec in registry():
        if rec.id is v:
            return rec
    raise ValueError(f"unknown variety {v!r}")


def variety_by_name(name: str) -> Variety:
    try:
        return Variety(name)
    except ValueError:
        raise ValueError(f"unknown variety name {name!r}") from None


# ---------------------------------------------------------------------------
# Decision procedure


def _is_commutative_law(u: Word, v: Word) -> bool:
    # xy = yx up to renaming: two distinct letters, one side the reverse
    s, t = u.symbols, v.symbols
    return (
        len(s) == 2 == len(t)
        and OMEGA not in s
        and s[0] != s[1]
        and s[0] == t[1]
        and s[1] == t[0]
    )


def _square_or_long(w: Word) -> bool:
    return contains_square(w) or length(w) >= 3


def _component_holds(c: Component, u: Word, v: Word) -> bool:
    if c is Component.SL:
        return content(u) == content(v)
    if c is Component.B:
        return los(u) == los(v)
    if c is Component.ZM:
        return length(u) >= 2 and length(v) >= 2
    if c is Component.K:
        return _is_commutative_law(u, v) or (_square_or_long(u) and _square_or_long(v))
    if c is Component.L:
        return _square_or_long(u) and _square_or_long(v)
    if c is Component.M:
        return _is_commutative_law(u, v) or (length(u) >= 3 and length(v) >= 3)
    if c is Component.N:
        return length(u) >= 3 and length(v) >= 3
    raise ValueError(f"unknown component {c!r}")


def decide(v: Variety, ident) -> bool:
    """Whether the identity holds in the variety, by the syntactic test."""
    if isinstance(ident, str):
        ident = parse_identity(ident)
    if ident.mode is not Mode.IS:
        raise ValueError("decide works on associative-mode identities only")
    if ident.lhs == ident.rhs:
        return True
    comps = record(v).join_components
    return all(_component_holds(c, ident.lhs, ident.rhs) for c in comps)


# ---------------------------------------------------------------------------
# Semantic order and classification of concrete algebras


@lru_cache(maxsize=None)
def generator_leq(v: Variety, w: Variety) -> bool:
    """v <= w iff every generator of v satisfies every basis identity of w."""
    return all(
        models.satisfies(models.builtin(g), ident).holds
        for g in record(v).generators
        for ident in record(w).basis
    )


def variety_of(a: models.FiniteAlgebra) -> Variety:
    """The least variety whose whole basis the algebra satisfies."""
    report = models.check_axioms(a, Mode.IS)
    if not report.passed:
        raise models.AxiomViolationError(report)
    sat = [
        rec.id
        for rec in registry()
        if all(models.satisfies(a, ident).holds for ident in rec.basis)
    ]
    least = [v for v in sat if all(generator_leq(v, w) for w in sat)]
    if len(least) != 1:
        raise RuntimeError(f"no unique least variety among {sat}")
    return least[0]


# ---------------------------------------------------------------------------
# Bounded exhaustive identity material


@lru_cache(maxsize=None)
def exhaustive_identity_words(letters: tuple = ("x", "y", "z"), max_length: int = 4) -> tuple:
    """All words over the letters plus O, up to the length bound, in a fixed
    deterministic order.  The default bound yields 340 words, hence 115600
    ordered identity pairs."""
    alphabet = tuple(letters) + (OMEGA,)
    out = []
    for k in range(1, max_length + 1):
        for combo in itertools.product(alphabet, repeat=k):
            out.append(Word("".join(combo)))
    return tuple(out)
