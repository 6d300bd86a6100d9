"""Irreducible decomposition and associated primes of monomial ideals.

The decomposition splits any generator that is not a pure power and
prunes the result to the unique irredundant set of irreducible
components.  Associated primes are the radicals of those components,
each validated by an explicit witness monomial w with I : w = P.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import (
    Monomial,
    MonomialIdeal,
    ResourceLimitExceeded,
    UnitIdealError,
    VarSubset,
    ZeroIdealError,
    colon,
    divisors,
    ideal_intersection,
    ideal_product,
    power,
    prime_ideal,
)

DEFAULT_WITNESS_BUDGET = 200_000


@dataclass(frozen=True)
class IrreducibleComponent:
    """An irreducible monomial ideal (x_i^{e_i} : i in the support).

    ``powers`` maps 1-based variable indices to positive exponents.
    """

    powers: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, mapping: dict[int, int]) -> "IrreducibleComponent":
        if not mapping:
            raise ValueError("an irreducible component needs at least one variable")
        if any(e < 1 for e in mapping.values()):
            raise ValueError("pure-power exponents must be positive")
        return cls(tuple(sorted(mapping.items())))

    @property
    def radical(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.powers)

    def as_ideal(self, nvars: int) -> MonomialIdeal:
        gens = []
        for i, e in self.powers:
            exps = [0] * nvars
            exps[i - 1] = e
            gens.append(Monomial(exps))
        return MonomialIdeal(nvars, gens)

    def to_json(self) -> dict:
        return {str(i): e for i, e in self.powers}


@dataclass(frozen=True)
class AssociatedPrimes:
    """Associated primes with their validating witnesses.

    ``witnesses[P]`` is a monomial w with colon(I, w) equal to the prime
    generated by the variables of P.
    """

    ass: tuple[frozenset[int], ...]
    minimal: tuple[frozenset[int], ...]
    height: int
    has_embedded: bool
    witnesses: dict[frozenset[int], Monomial]

    def to_json(self) -> dict:
        return {
            "ass": [sorted(p) for p in self.ass],
            "minimal": [sorted(p) for p in self.minimal],
            "height": self.height,
            "has_embedded": self.has_embedded,
            "witnesses": {
                ",".join(map(str, sorted(p))): str(w) for p, w in self.witnesses.items()
            },
        }


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise ZeroIdealError("decomposition undefined for the zero ideal")
    if I.is_unit:
        raise UnitIdealError("decomposition undefined for the unit ideal")


def _split_once(I: MonomialIdeal) -> tuple[MonomialIdeal, MonomialIdeal] | None:
    """Split on a generator with at least two variables; None if all are
    pure powers."""
    for g in I.gens:
        supp = [i for i, e in enumerate(g.exps) if e]
        if len(supp) >= 2:
            i = supp[0]
            left = Monomial(tuple(e if k == i else 0 for k, e in enumerate(g.exps)))
            right = Monomial(tuple(0 if k == i else e for k, e in enumerate(g.exps)))
            others = tuple(h for h in I.gens if h is not g)
            return (
                MonomialIdeal(I.nvars, others + (left,)),
                MonomialIdeal(I.nvars, others + (right,)),
            )
    return None


def irreducible_decomposition(I: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """The irredundant set of irreducible components intersecting to I."""
    _require_proper(I)

    components: set[IrreducibleComponent] = set()
    seen: set[MonomialIdeal] = set()
    stack = [I]
    while stack:
        J = stack.pop()
        if J in seen:
            continue
        seen.add(J)
        split = _split_once(J)
        if split is None:
            components.add(
                IrreducibleComponent.of(
                    {i + 1: e for g in J.gens for i, e in enumerate(g.exps) if e}
                )
            )
        else:
            stack.extend(split)

    comps = sorted(components, key=lambda c: c.powers)
    # irredundancy: drop any component containing the intersection of the rest
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for k in range(len(comps)):
            rest = comps[:k] + comps[k + 1:]
            meet = rest[0].as_ideal(I.nvars)
            for c in rest[1:]:
                meet = ideal_intersection(meet, c.as_ideal(I.nvars))
            if comps[k].as_ideal(I.nvars).contains_ideal(meet):
                comps = rest
                changed = True
                break
    return tuple(comps)


def associated_primes(
    I: MonomialIdeal, witness_budget: int = DEFAULT_WITNESS_BUDGET
) -> AssociatedPrimes:
    """Associated primes of S/I, each validated by a witness monomial.

    Candidates are the radicals of the irredundant irreducible
    components; a witness with I : w = P is searched among the divisors
    of lcm(G(I)), which suffice because a colon only sees exponents up to
    the lcm.  A candidate without a witness is reported as an error,
    never dropped silently.
    """
    _require_proper(I)
    candidates = sorted(
        {c.radical for c in irreducible_decomposition(I)},
        key=lambda p: (len(p), sorted(p)),
    )
    top = I.lcm_gens()
    search_size = 1
    for e in top.exps:
        search_size *= e + 1
    if search_size > witness_budget:
        raise ResourceLimitExceeded(
            f"witness search over {search_size} divisors exceeds budget "
            f"{witness_budget}; unvalidated candidates: "
            + "; ".join("{" + ",".join(map(str, sorted(p))) + "}" for p in candidates)
        )

    witnesses: dict[frozenset[int], Monomial] = {}
    remaining = set(candidates)
    for w in divisors(top):
        if not remaining:
            break
        Q = colon(I, w)
        if Q.is_unit or Q.is_zero:
            continue
        if all(g.degree == 1 for g in Q.gens):
            p = frozenset(g.exps.index(1) + 1 for g in Q.gens)
            if p in remaining:
                witnesses[p] = w
                remaining.discard(p)
    if remaining:
        raise AssertionError(
            "no witness found for candidate primes "
            + "; ".join("{" + ",".join(map(str, sorted(p))) + "}" for p in remaining)
        )

    ass = tuple(candidates)
    minimal = tuple(
        p for p in ass if not any(q < p for q in ass)
    )
    return AssociatedPrimes(
        ass=ass,
        minimal=minimal,
        height=min(len(p) for p in minimal),
        has_embedded=len(minimal) != len(ass),
        witnesses=witnesses,
    )


def transversal(
    nvars: int,
    primes: "list[VarSubset | list[int]]",
    exponents: list[int],
) -> MonomialIdeal:
    """The product P_1^{a_1} ... P_r^{a_r} of monomial prime ideals."""
    if len(primes) != len(exponents):
        raise ValueError("primes and exponents differ in length")
    if any(a < 1 for a in exponents):
        raise ValueError("exponents must be positive")
    result = MonomialIdeal(nvars, [Monomial((0,) * nvars)])  # unit
    for P, a in zip(primes, exponents):
        result = ideal_product(result, power(prime_ideal(nvars, P), a))
    return result
