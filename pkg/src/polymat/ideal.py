"""Exact arithmetic for monomials and monomial ideals.

A monomial is an exponent vector over a fixed number of variables; an
ideal is stored by its unique minimal generating set, kept in canonical
order (total degree, then lexicographic on exponent vectors), so that
structural equality coincides with equality of ideals.  All values are
immutable after construction and every operation is a pure function.

Variable indices in the public API are 1-based (x1..xn), matching the
text grammar ``x1*x3^2, x2^2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ResourceLimitExceeded(Exception):
    """A configured enumeration budget was hit; no answer was produced."""


class ZeroIdealError(ValueError):
    """The operation is undefined for the zero ideal."""


class UnitIdealError(ValueError):
    """The operation is undefined for the unit ideal."""


class IdealSyntaxError(ValueError):
    """Malformed ideal text; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Monomial:
    """A monomial x1^e1 * ... * xn^en, held as the tuple (e1, ..., en)."""

    __slots__ = ("exps", "degree")

    def __init__(self, exps: Iterable[int]):
        exps = tuple(exps)
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {e!r}")
        self.exps = exps
        self.degree = sum(exps)

    @property
    def nvars(self) -> int:
        return len(self.exps)

    def deg_var(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        return self.exps[i - 1]

    @property
    def support(self) -> frozenset[int]:
        """1-based indices of the variables that occur."""
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(min(a, b) for a, b in zip(self.exps, other.exps))

    def quotient_by_gcd(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): the colon contribution of a generator."""
        return Monomial(max(a - b, 0) for a, b in zip(self.exps, other.exps))

    def exact_divide(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self.exps, other.exps))

    def _key(self) -> tuple[int, tuple[int, ...]]:
        return (self.degree, self.exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __lt__(self, other: "Monomial") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "Monomial") -> bool:
        return self._key() <= other._key()

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r}, nvars={self.nvars})"


@dataclass(frozen=True)
class VarSubset:
    """A subset C of the variable indices {1..n}.

    Used both for the substitution set of a monomial localization (the
    variables sent to 1) and for the generating variables of a monomial
    prime ideal.
    """

    members: frozenset[int]

    @classmethod
    def of(cls, indices: Iterable[int]) -> "VarSubset":
        return cls(frozenset(int(i) for i in indices))

    def validate(self, nvars: int) -> None:
        bad = [i for i in self.members if not 1 <= i <= nvars]
        if bad:
            raise ValueError(f"variable indices {sorted(bad)} out of range 1..{nvars}")

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.members)) + "}"


def _as_varset(C: "VarSubset | Iterable[int]") -> frozenset[int]:
    if isinstance(C, VarSubset):
        return C.members
    return frozenset(int(i) for i in C)


def _minimal_sorted(monomials: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal elements, deduplicated, in canonical order."""
    distinct = sorted(set(monomials), key=Monomial._key)
    kept: list[Monomial] = []
    for m in distinct:
        # any divisor of m comes earlier in the (degree, lex) order
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal, represented by its minimal generating set G(I).

    ``gens`` is an antichain under divisibility, sorted canonically; the
    zero ideal has no generators and the unit ideal has the single
    generator 1.
    """

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars: int, gens: Iterable[Monomial] = ()):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        gens = tuple(gens)
        for g in gens:
            if g.nvars != nvars:
                raise ValueError(f"generator {g!r} has {g.nvars} variables, expected {nvars}")
        self.nvars = nvars
        self.gens = _minimal_sorted(gens)

    @classmethod
    def _raw(cls, nvars: int, gens: tuple[Monomial, ...]) -> "MonomialIdeal":
        """Trusted constructor: gens must already be canonical and minimal."""
        self = object.__new__(cls)
        self.nvars = nvars
        self.gens = gens
        return self

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Monomial membership: m lies in the ideal."""
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True when other is a subideal of self."""
        return all(self.contains(g) for g in other.gens)

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({g.degree for g in self.gens}))

    @property
    def min_degree(self) -> int | None:
        return self.gens[0].degree if self.gens else None

    @property
    def max_degree(self) -> int | None:
        return self.gens[-1].degree if self.gens else None

    def lcm_gens(self) -> Monomial | None:
        """Componentwise max of the generators; None for the zero ideal."""
        if not self.gens:
            return None
        exps = [0] * self.nvars
        for g in self.gens:
            for i, e in enumerate(g.exps):
                if e > exps[i]:
                    exps[i] = e
        return Monomial(exps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.gens))

    def __str__(self) -> str:
        return ", ".join(str(g) for g in self.gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal({str(self)!r}, nvars={self.nvars})"


# ---------------------------------------------------------------------------
# parsing / serialization
# ---------------------------------------------------------------------------

def parse_generators(text: str, nvars: int) -> list[Monomial]:
    """Parse ideal text into monomials, preserving the written order.

    Grammar: ideal := gen (',' gen)* ; gen := '1' | term ('*' term)* ;
    term := 'x' INT ('^' INT)?.  Whitespace is insignificant; the empty
    string denotes no generators (the zero ideal).
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise IdealSyntaxError("expected an integer", start)
        return int(text[start:pos])

    def parse_gen() -> Monomial:
        nonlocal pos
        skip_ws()
        if pos < n and text[pos] == "1":
            pos += 1
            return Monomial((0,) * nvars)
        exps = [0] * nvars
        while True:
            skip_ws()
            if pos >= n or text[pos] != "x":
                raise IdealSyntaxError("expected a term 'x<index>'", pos)
            pos += 1
            at = pos
            idx = read_int()
            if not 1 <= idx <= nvars:
                raise IdealSyntaxError(f"variable index {idx} out of range 1..{nvars}", at)
            exp = 1
            skip_ws()
            if pos < n and text[pos] == "^":
                pos += 1
                skip_ws()
                at = pos
                exp = read_int()
                if exp < 1:
                    raise IdealSyntaxError("exponent must be positive", at)
            exps[idx - 1] += exp
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                continue
            return Monomial(exps)

    skip_ws()
    if pos == n:
        return []
    gens = [parse_gen()]
    while True:
        skip_ws()
        if pos == n:
            return gens
        if text[pos] != ",":
            raise IdealSyntaxError("expected ',' between generators", pos)
        pos += 1
        gens.append(parse_gen())


def parse_monomial(text: str, nvars: int) -> Monomial:
    gens = parse_generators(text, nvars)
    if len(gens) != 1:
        raise IdealSyntaxError("expected exactly one monomial", 0)
    return gens[0]


def parse_ideal(text: str, nvars: int) -> MonomialIdeal:
    """Parse and minimalize; the canonical ideal generated by the input."""
    return MonomialIdeal(nvars, parse_generators(text, nvars))


# ---------------------------------------------------------------------------
# ideal operations
# ---------------------------------------------------------------------------

def minimalize(gens: Sequence[Monomial], nvars: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, i.e. their divisibility-minimal part."""
    gens = tuple(gens)
    if nvars is None:
        if not gens:
            raise ValueError("cannot infer nvars from an empty generator list")
        nvars = gens[0].nvars
    return MonomialIdeal(nvars, gens)


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The colon ideal I : u, via v -> v / gcd(v, u) over the generators."""
    if u.nvars != I.nvars:
        raise ValueError("nvars mismatch between ideal and monomial")
    return MonomialIdeal._raw(I.nvars, _minimal_sorted(g.quotient_by_gcd(u) for g in I.gens))


def saturate(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """The saturation I : u^infinity, by iterating colon to a fixed point."""
    prev = I
    cur = colon(I, u)
    while cur != prev:
        prev = cur
        cur = colon(cur, u)
    return cur


def localize(I: MonomialIdeal, C: "VarSubset | Iterable[int]") -> MonomialIdeal:
    """Monomial localization: substitute x_i -> 1 for every i in C.

    Equals the saturation of I at the product of the variables in C.
    The number of variables is preserved; the variables in C simply no
    longer occur.
    """
    members = _as_varset(C)
    VarSubset(members).validate(I.nvars)
    zeroed = frozenset(i - 1 for i in members)
    gens = (
        Monomial(0 if i in zeroed else e for i, e in enumerate(g.exps))
        for g in I.gens
    )
    return MonomialIdeal._raw(I.nvars, _minimal_sorted(gens))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    return MonomialIdeal._raw(I.nvars, _minimal_sorted(I.gens + J.gens))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    return MonomialIdeal._raw(
        I.nvars, _minimal_sorted(g * h for g in I.gens for h in J.gens)
    )


def ideal_intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    return MonomialIdeal._raw(
        I.nvars, _minimal_sorted(g.lcm(h) for g in I.gens for h in J.gens)
    )


_COMBINE = {"sum": ideal_sum, "product": ideal_product, "intersect": ideal_intersection}


def combine(op: str, I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    try:
        f = _COMBINE[op]
    except KeyError:
        raise ValueError(f"unknown combine op {op!r}; expected sum, product or intersect")
    return f(I, J)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """The k-th power of I, as a product folded k times (k >= 1)."""
    if k < 1:
        raise ValueError("power requires k >= 1")
    result = I
    for _ in range(k - 1):
        result = ideal_product(result, I)
    return result


def component(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """The ideal generated by all monomials of degree j lying in I."""
    if j < 0:
        raise ValueError("component degree must be non-negative")
    seen: set[tuple[int, ...]] = set()
    for g in I.gens:
        rest = j - g.degree
        if rest < 0:
            continue
        for w in monomials_of_degree(I.nvars, rest):
            seen.add(tuple(a + b for a, b in zip(g.exps, w.exps)))
    gens = tuple(Monomial(e) for e in sorted(seen))
    return MonomialIdeal._raw(I.nvars, gens)


def is_single_degree(I: MonomialIdeal) -> bool:
    """True when all minimal generators share one total degree.

    The unit ideal qualifies (degree 0); the zero ideal is rejected.
    """
    if I.is_zero:
        raise ZeroIdealError("the zero ideal has no generator degrees")
    return I.gens[0].degree == I.gens[-1].degree


def colon_by_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The colon ideal I : J for a monomial ideal J (intersection of colons)."""
    _check_pair(I, J)
    if J.is_zero:
        raise ZeroIdealError("colon by the zero ideal is the whole ring")
    result = colon(I, J.gens[0])
    for g in J.gens[1:]:
        result = ideal_intersection(result, colon(I, g))
    return result


def prime_ideal(nvars: int, C: "VarSubset | Iterable[int]") -> MonomialIdeal:
    """The monomial prime ideal generated by the variables in C (1-based)."""
    members = _as_varset(C)
    VarSubset(members).validate(nvars)
    gens = (
        Monomial(tuple(1 if j == i - 1 else 0 for j in range(nvars)))
        for i in members
    )
    return MonomialIdeal._raw(nvars, _minimal_sorted(gens))


def maximal_ideal(nvars: int) -> MonomialIdeal:
    """The graded maximal ideal m = (x1, ..., xn)."""
    return prime_ideal(nvars, range(1, nvars + 1))


def _check_pair(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise ValueError("nvars mismatch between ideals")


# ---------------------------------------------------------------------------
# enumeration helpers
# ---------------------------------------------------------------------------

def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All monomials of total degree d, in canonical (lex ascending) order."""
    if d < 0:
        return
    if nvars == 1:
        yield Monomial((d,))
        return

    def rec(prefix: tuple[int, ...], remaining: int, pos: int) -> Iterator[tuple[int, ...]]:
        if pos == nvars - 1:
            yield prefix + (remaining,)
            return
        for e in range(remaining + 1):
            yield from rec(prefix + (e,), remaining - e, pos + 1)

    for exps in rec((), d, 0):
        yield Monomial(exps)


def divisors(m: Monomial) -> Iterator[Monomial]:
    """All divisors of m, in canonical (degree, lex) order."""
    grid = itertools.product(*(range(e + 1) for e in m.exps))
    for exps in sorted(grid, key=lambda t: (sum(t), t)):
        yield Monomial(exps)


def capped_divisors(I: MonomialIdeal) -> Iterator[Monomial]:
    """The divisors of lcm(G(I)): a finite set of colon representatives.

    Every colon ideal I : u equals I : gcd(u, lcm(G(I))), so quantifying
    over these divisors covers "all monomials u".
    """
    top = I.lcm_gens()
    if top is None:
        return iter(())
    return divisors(top)
