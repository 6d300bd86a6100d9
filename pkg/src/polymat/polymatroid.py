"""Exchange-property predicates and Veronese-type constructions.

All predicates work on the minimal generating set and test membership
of single exchange moves x_j * (u / x_i) by divisibility against the
generators.  False verdicts carry a witness that can be re-checked by
brute force; pair iteration follows the canonical generator order, so
witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import (
    Monomial,
    MonomialIdeal,
    UnitIdealError,
    ZeroIdealError,
    component,
    is_single_degree,
    monomials_of_degree,
)

VERDICT_SATISFIED = "satisfied-with-j"
VERDICT_VIOLATED = "violated"


@dataclass(frozen=True)
class VeroneseParams:
    """Degree d plus per-variable exponent caps a_1..a_n.

    Describes the ideal generated by all monomials of degree d whose
    i-th exponent is at most caps[i-1].  Caps summing below d would give
    the zero ideal and are rejected.
    """

    d: int
    caps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "caps", tuple(int(a) for a in self.caps))
        if self.d < 1:
            raise ValueError("degree must be positive")
        if any(a < 0 for a in self.caps):
            raise ValueError("caps must be non-negative")
        if sum(self.caps) < self.d:
            raise ValueError("caps sum below the degree: the ideal would be zero")

    @property
    def nvars(self) -> int:
        return len(self.caps)


@dataclass(frozen=True)
class ExchangeWitness:
    """One exchange step, in the orientation 'u loses x_i'.

    Here deg_{x_i}(u) > deg_{x_i}(v); when the verdict is violated, no
    index j with deg_{x_j}(u) < deg_{x_j}(v) makes x_j * (u / x_i) land
    in the ideal (re-checkable by brute force over all j).  Indices are
    1-based.
    """

    u: Monomial
    v: Monomial
    i: int
    verdict: str
    j: int | None = None

    def to_json(self) -> dict:
        return {
            "u": str(self.u),
            "v": str(self.v),
            "i": self.i,
            "verdict": self.verdict,
            "j": self.j,
        }


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise ZeroIdealError("predicate undefined for the zero ideal")
    if I.is_unit:
        raise UnitIdealError("predicate undefined for the unit ideal")


def _exchange_move(u: Monomial, i0: int, j0: int) -> tuple[int, ...]:
    """Exponents of x_{j0+1} * (u / x_{i0+1}), 0-based positions."""
    e = list(u.exps)
    e[i0] -= 1
    e[j0] += 1
    return tuple(e)


def _find_exchange_index(I: MonomialIdeal, u: Monomial, v: Monomial, i0: int) -> int | None:
    """Least 0-based j with deg_j(u) < deg_j(v) and x_j*(u/x_i) in I."""
    ue, ve = u.exps, v.exps
    for j0 in range(I.nvars):
        if ue[j0] < ve[j0] and I.contains(Monomial(_exchange_move(u, i0, j0))):
            return j0
    return None


def is_polymatroidal(I: MonomialIdeal) -> tuple[bool, ExchangeWitness | None]:
    """Single degree plus the exchange property over all generator pairs.

    Returns (True, None), or (False, witness) with the canonically first
    violating triple; the witness is None when the ideal is not even
    generated in a single degree.
    """
    _require_proper(I)
    if not is_single_degree(I):
        return False, None
    for u in I.gens:
        for v in I.gens:
            if u is v:
                continue
            ue, ve = u.exps, v.exps
            for i0 in range(I.nvars):
                if ue[i0] > ve[i0] and _find_exchange_index(I, u, v, i0) is None:
                    return False, ExchangeWitness(u, v, i0 + 1, VERDICT_VIOLATED)
    return True, None


def is_matroidal(I: MonomialIdeal) -> bool:
    """Squarefree and polymatroidal."""
    _require_proper(I)
    return I.is_squarefree and is_polymatroidal(I)[0]


def has_strong_exchange(I: MonomialIdeal) -> tuple[bool, ExchangeWitness | None]:
    """The exchange condition for every admissible pair (i, j), not just some j."""
    _require_proper(I)
    if not is_single_degree(I):
        return False, None
    for u in I.gens:
        for v in I.gens:
            if u is v:
                continue
            ue, ve = u.exps, v.exps
            for i0 in range(I.nvars):
                if ue[i0] <= ve[i0]:
                    continue
                for j0 in range(I.nvars):
                    if ue[j0] < ve[j0] and not I.contains(Monomial(_exchange_move(u, i0, j0))):
                        return False, ExchangeWitness(u, v, i0 + 1, VERDICT_VIOLATED, j0 + 1)
    return True, None


def has_nonpure_exchange(I: MonomialIdeal) -> tuple[bool, ExchangeWitness | None]:
    """Exchange across degrees: the higher-degree generator loses a variable.

    For generators u, v with deg(u) <= deg(v) and deg_{x_i}(v) > deg_{x_i}(u),
    some j with deg_{x_j}(v) < deg_{x_j}(u) must put x_j * (v / x_i) in I.
    The witness keeps the 'modified monomial first' orientation, so its
    u field holds the higher-degree generator.
    """
    _require_proper(I)
    for small in I.gens:
        for big in I.gens:
            if small is big or small.degree > big.degree:
                continue
            se, be = small.exps, big.exps
            for i0 in range(I.nvars):
                if be[i0] > se[i0] and _find_exchange_index(I, big, small, i0) is None:
                    return False, ExchangeWitness(big, small, i0 + 1, VERDICT_VIOLATED)
    return True, None


def symmetric_exchange_holds(I: MonomialIdeal) -> bool:
    """The symmetric variant: u may gain x_i and drop some x_t it exceeds in.

    For u, v in G(I) with deg_{x_i}(v) > deg_{x_i}(u) there must be t with
    deg_{x_t}(u) > deg_{x_t}(v) and u * x_i / x_t in I.  A consequence of
    the exchange property for polymatroidal ideals; exposed for the lab.
    """
    _require_proper(I)
    for u in I.gens:
        for v in I.gens:
            if u is v:
                continue
            ue, ve = u.exps, v.exps
            for i0 in range(I.nvars):
                if ve[i0] <= ue[i0]:
                    continue
                ok = False
                for t0 in range(I.nvars):
                    if ue[t0] > ve[t0] and I.contains(Monomial(_exchange_move(u, t0, i0))):
                        ok = True
                        break
                if not ok:
                    return False
    return True


def veronese(params: VeroneseParams, nvars: int | None = None) -> MonomialIdeal:
    """All degree-d monomials within the exponent caps (already minimal)."""
    n = params.nvars
    if nvars is not None and nvars != n:
        raise ValueError(f"params describe {n} variables, expected {nvars}")
    gens = tuple(
        m
        for m in monomials_of_degree(n, params.d)
        if all(e <= a for e, a in zip(m.exps, params.caps))
    )
    return MonomialIdeal._raw(n, gens)


def detect_veronese(I: MonomialIdeal) -> VeroneseParams | None:
    """Recover Veronese-type parameters, or None.

    Uses the tight caps a_i = max exponent of x_i over the generators and
    compares the reconstruction with I.
    """
    _require_proper(I)
    if not is_single_degree(I):
        raise ValueError("Veronese detection requires a single generator degree")
    d = I.gens[0].degree
    caps = tuple(max(g.exps[i] for g in I.gens) for i in range(I.nvars))
    params = VeroneseParams(d, caps)
    return params if veronese(params) == I else None


def is_componentwise_polymatroidal(
    I: MonomialIdeal, extra_degrees: int = 0
) -> tuple[bool, int | None]:
    """Every graded component in the generator-degree range is polymatroidal.

    Degrees past the top generator degree d satisfy I_<j> = I_<d> * m^(j-d)
    and follow from product closure; ``extra_degrees`` extends the checked
    range past d for validating that shortcut rather than assuming it.
    """
    _require_proper(I)
    for j in _component_range(I, extra_degrees):
        if not is_polymatroidal(component(I, j))[0]:
            return False, j
    return True, None


def is_componentwise_veronese(
    I: MonomialIdeal, extra_degrees: int = 0
) -> tuple[bool, int | None]:
    """Every graded component in the generator-degree range is of Veronese type."""
    _require_proper(I)
    for j in _component_range(I, extra_degrees):
        if detect_veronese(component(I, j)) is None:
            return False, j
    return True, None


def _component_range(I: MonomialIdeal, extra_degrees: int) -> range:
    return range(I.min_degree, I.max_degree + 1 + extra_degrees)
