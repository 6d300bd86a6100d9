"""Linear-quotients certificates: checking, searching, and construction.

A certificate records an ordered sequence of generators, appended after
an optional base ideal, such that at every step the colon of the
predecessors by the next generator is generated by variables.  The
certificate re-verifies from its own data.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .ideal import (
    Monomial,
    MonomialIdeal,
    ResourceLimitExceeded,
    ZeroIdealError,
    _minimal_sorted,
    ideal_product,
    is_single_degree,
    maximal_ideal,
)
from .polymatroid import VeroneseParams, detect_veronese, veronese

DEFAULT_SEARCH_CAP = 20


@dataclass(frozen=True)
class LinearQuotientsCertificate:
    """Witness that ``base`` extends by linear quotients along ``appended``.

    ``steps[k]`` is the set of variable indices (1-based) generating the
    colon of (base + appended[:k]) by appended[k]; the first step over a
    zero base has an empty set (the colon is the zero ideal).
    """

    base: MonomialIdeal
    appended: tuple[Monomial, ...]
    steps: tuple[frozenset[int], ...]

    def verify(self) -> bool:
        """Recompute every colon from scratch and compare with the steps."""
        if len(self.appended) != len(self.steps):
            return False
        current = list(self.base.gens)
        for v, expected in zip(self.appended, self.steps):
            J = _colon_gens(current, v)
            if any(g.degree != 1 for g in J):
                return False
            if frozenset(g.exps.index(1) + 1 for g in J) != expected:
                return False
            current.append(v)
        return True

    def to_json(self) -> dict:
        return {
            "base": str(self.base),
            "order": [str(v) for v in self.appended],
            "steps": [sorted(s) for s in self.steps],
        }


def _colon_gens(gens: Sequence[Monomial], v: Monomial) -> tuple[Monomial, ...]:
    return _minimal_sorted(g.quotient_by_gcd(v) for g in gens)


def _check_joint_minimality(base: MonomialIdeal, order: Sequence[Monomial]) -> None:
    combined = tuple(base.gens) + tuple(order)
    for g in combined:
        if g.nvars != base.nvars:
            raise ValueError("nvars mismatch in generator sequence")
    if len(set(combined)) != len(combined):
        raise ValueError("generator sequence contains duplicates")
    if set(_minimal_sorted(combined)) != set(combined):
        raise ValueError("base plus order is not a minimal generating set")


def check_lq_order(
    base: MonomialIdeal, order: Sequence[Monomial]
) -> tuple[LinearQuotientsCertificate | None, int | None]:
    """Verify a proposed order; returns (certificate, None) on success,
    (None, first failing position) otherwise."""
    order = tuple(order)
    _check_joint_minimality(base, order)
    current = list(base.gens)
    steps: list[frozenset[int]] = []
    for pos, v in enumerate(order):
        J = _colon_gens(current, v)
        if any(g.degree != 1 for g in J):
            return None, pos
        steps.append(frozenset(g.exps.index(1) + 1 for g in J))
        current.append(v)
    return LinearQuotientsCertificate(base, order, tuple(steps)), None


def find_lq_order(
    base: MonomialIdeal,
    gens: Iterable[Monomial],
    max_gens: int = DEFAULT_SEARCH_CAP,
) -> LinearQuotientsCertificate | None:
    """Exhaustive search for a linear-quotients order of ``gens`` after ``base``.

    Whether a generator can come next depends only on the set of already
    placed generators, so the search walks subsets depth-first with a
    memo of dead subsets; the first success in canonical candidate order
    is returned, making the result deterministic.
    """
    pool = sorted(set(gens), key=Monomial._key)
    if len(pool) > max_gens:
        raise ResourceLimitExceeded(
            f"{len(pool)} generators exceed the search cap of {max_gens}"
        )
    _check_joint_minimality(base, pool)

    dead: set[frozenset[int]] = set()
    base_gens = tuple(base.gens)
    order: list[Monomial] = []
    steps: list[frozenset[int]] = []

    def extend(placed: frozenset[int]) -> bool:
        if len(placed) == len(pool):
            return True
        if placed in dead:
            return False
        current = base_gens + tuple(pool[i] for i in sorted(placed))
        for idx, v in enumerate(pool):
            if idx in placed:
                continue
            J = _colon_gens(current, v)
            if any(g.degree != 1 for g in J):
                continue
            order.append(v)
            steps.append(frozenset(g.exps.index(1) + 1 for g in J))
            if extend(placed | {idx}):
                return True
            order.pop()
            steps.pop()
        dead.add(placed)
        return False

    if extend(frozenset()):
        return LinearQuotientsCertificate(base, tuple(order), tuple(steps))
    return None


# ---------------------------------------------------------------------------
# reverse-lexicographic order
# ---------------------------------------------------------------------------

def revlex_greater(u: Monomial, v: Monomial) -> bool:
    """u > v in the reverse lexicographic order with x1 > x2 > ... > xn.

    For monomials of equal degree: u > v when the last nonzero entry of
    the exponent difference u - v is negative.
    """
    for a, b in zip(reversed(u.exps), reversed(v.exps)):
        if a != b:
            return a < b
    return False


def _revlex_cmp(u: Monomial, v: Monomial) -> int:
    if u.exps == v.exps:
        return 0
    return 1 if revlex_greater(u, v) else -1


def revlex_order(gens: Iterable[Monomial], increasing: bool = False) -> list[Monomial]:
    """Generators sorted for processing: decreasing revlex by default."""
    return sorted(gens, key=functools.cmp_to_key(_revlex_cmp), reverse=not increasing)


def revlex_lq(
    I: MonomialIdeal, increasing: bool = False
) -> LinearQuotientsCertificate | None:
    """Check linear quotients along the reverse-lexicographic generator order.

    The default processes generators in decreasing revlex order; the
    increasing flag exists because the opposite convention is also found
    in the literature, and the lab records which one succeeds.
    """
    if I.is_zero:
        raise ZeroIdealError("no generators to order")
    if not is_single_degree(I):
        raise ValueError("revlex linear quotients require a single generator degree")
    cert, _ = check_lq_order(
        MonomialIdeal._raw(I.nvars, ()), revlex_order(I.gens, increasing)
    )
    return cert


# ---------------------------------------------------------------------------
# extension by linear quotients between Veronese-type ideals
# ---------------------------------------------------------------------------

def _lex_desc_key(exps: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-e for e in exps)


def extend_lq_veronese(
    p: VeroneseParams, q: VeroneseParams
) -> LinearQuotientsCertificate:
    """Extend I*m by linear quotients to J, for Veronese I of degree d and
    Veronese J of degree d+1 with I*m contained in J.

    Stage 1 appends the generators of the cap-raised ideal of degree d+1
    (caps a_i + 1) that are new over I*m, ordered by: fewer variables at
    their raised cap first, then the raised-cap part lex-descending, then
    the whole monomial lex-descending.  Stage 2 raises one cap at a time
    up to the caps of J (in variable order), appending each batch of new
    generators lex-descending.  The produced order is verified step by
    step; failure would falsify the construction and raises.
    """
    n = p.nvars
    if q.nvars != n:
        raise ValueError("parameter pair must agree on the number of variables")
    if q.d != p.d + 1:
        raise ValueError("target degree must be the source degree plus one")

    I = veronese(p)
    J = veronese(q)
    Im = ideal_product(I, maximal_ideal(n))
    if not J.contains_ideal(Im):
        raise ValueError("precondition violated: I*m is not contained in J")

    im_gens = set(Im.gens)

    # stage 1: up to caps a_i + 1
    stage1_params = VeroneseParams(q.d, tuple(a + 1 for a in p.caps))
    L = veronese(stage1_params)

    def raised_set(u: Monomial) -> tuple[int, ...]:
        return tuple(
            i for i, (h, a) in enumerate(zip(u.exps, p.caps)) if h == a + 1
        )

    def stage1_key(u: Monomial):
        s = raised_set(u)
        bar = tuple(e if i in s else 0 for i, e in enumerate(u.exps))
        return (len(s), _lex_desc_key(bar), _lex_desc_key(u.exps))

    stage1 = sorted((u for u in L.gens if u not in im_gens), key=stage1_key)

    # stage 2: raise caps one at a time, in variable order, toward q.caps
    appended = list(stage1)
    current = set(L.gens)
    caps = [a + 1 for a in p.caps]
    for s in range(n):
        target = min(q.caps[s], q.d)
        while caps[s] < target:
            caps[s] += 1
            K = veronese(VeroneseParams(q.d, tuple(caps)))
            batch = sorted(
                (u for u in K.gens if u not in current),
                key=lambda u: _lex_desc_key(u.exps),
            )
            appended.extend(batch)
            current = set(K.gens)
    if current != set(J.gens):
        raise AssertionError("cap raising did not terminate at the target ideal")

    cert, failed_at = check_lq_order(Im, appended)
    if cert is None:
        raise AssertionError(
            f"extension order failed verification at position {failed_at}; "
            "this would falsify the extension theorem"
        )
    return cert


def componentwise_veronese_lq(
    I: MonomialIdeal, max_gens: int = DEFAULT_SEARCH_CAP
) -> LinearQuotientsCertificate | None:
    """A linear-quotients certificate for a componentwise Veronese ideal.

    Chains the Veronese extension across the component degrees: the
    lowest component is ordered by reverse lex (it is polymatroidal) and
    each following stage appends the extension's new generators, which
    are exactly the minimal generators of the next degree.  Returns None
    when some component is not of Veronese type.
    """
    if I.is_zero or I.is_unit:
        raise ZeroIdealError("no proper components to chain")
    from .ideal import component as component_of

    params: dict[int, VeroneseParams] = {}
    for j in range(I.min_degree, I.max_degree + 1):
        pj = detect_veronese(component_of(I, j))
        if pj is None:
            return None
        params[j] = pj

    lowest = component_of(I, I.min_degree)
    cert0 = revlex_lq(lowest)
    if cert0 is None:
        cert0 = find_lq_order(MonomialIdeal._raw(I.nvars, ()), lowest.gens, max_gens)
    if cert0 is None:
        raise AssertionError("a Veronese-type component admitted no linear quotients")

    order = list(cert0.appended)
    for j in range(I.min_degree, I.max_degree):
        ext = extend_lq_veronese(params[j], params[j + 1])
        order.extend(ext.appended)

    cert, failed_at = check_lq_order(MonomialIdeal._raw(I.nvars, ()), order)
    if cert is None:
        raise AssertionError(
            f"chained componentwise order failed at position {failed_at}"
        )
    return cert
