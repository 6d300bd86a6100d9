"""Linear-quotients certificates: checking, exhaustive search, reverse-lex
orders, and the Veronese extension construction."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from polymat.ideal import (
    MonomialIdeal,
    ResourceLimitExceeded,
    ideal_product,
    maximal_ideal,
    parse_generators,
    parse_ideal,
    power,
)
from polymat.polymatroid import VeroneseParams, is_polymatroidal, veronese
from polymat.quotients import (
    LinearQuotientsCertificate,
    check_lq_order,
    componentwise_veronese_lq,
    extend_lq_veronese,
    find_lq_order,
    revlex_greater,
    revlex_lq,
    revlex_order,
)
from polymat.resolution import is_componentwise_linear

from oracles import lq_exists_bruteforce


def I(text, n):
    return parse_ideal(text, n)


def zero(n):
    return MonomialIdeal(n)


class TestCheckOrder:
    def test_given_order_certificate(self):
        cert, fail = check_lq_order(zero(3), parse_generators("x1*x2, x1*x3^2, x2*x3^2", 3))
        assert fail is None
        assert [sorted(s) for s in cert.steps] == [[], [2], [1]]
        assert cert.verify()

    def test_failing_order(self):
        cert, fail = check_lq_order(zero(4), parse_generators("x1*x2, x3*x4", 4))
        assert cert is None and fail == 1

    def test_single_generator(self):
        cert, fail = check_lq_order(zero(2), parse_generators("x1*x2^2", 2))
        assert cert is not None and list(cert.steps) == [frozenset()]

    def test_non_minimal_rejected(self):
        with pytest.raises(ValueError):
            check_lq_order(zero(2), parse_generators("x1, x1*x2", 2))
        with pytest.raises(ValueError):
            check_lq_order(I("x1", 2), parse_generators("x1*x2", 2))

    def test_certificate_tampering_detected(self):
        cert, _ = check_lq_order(zero(3), parse_generators("x1*x2, x1*x3^2, x2*x3^2", 3))
        bad = LinearQuotientsCertificate(
            cert.base, cert.appended, (frozenset(), frozenset({1}), frozenset({1}))
        )
        assert not bad.verify()

    def test_nonzero_base(self):
        base = I("x2^3, x1*x2^2, x1^2*x2", 2)  # I_(2;1,2) * m
        cert, fail = check_lq_order(base, parse_generators("x1^3", 2))
        assert fail is None
        assert [sorted(s) for s in cert.steps] == [[2]]


class TestFindOrder:
    def test_counterexample_ideal_has_order(self):
        gens = parse_generators("x1*x2, x1*x3^2, x2*x3^2", 3)
        cert = find_lq_order(zero(3), gens)
        assert cert is not None and cert.verify()

    def test_disjoint_edges_none(self):
        assert find_lq_order(zero(4), parse_generators("x1*x2, x3*x4", 4)) is None

    def test_veronese_ideals_found(self):
        for params in [
            VeroneseParams(2, (1, 1, 1)),
            VeroneseParams(3, (2, 3)),
            VeroneseParams(2, (2, 1, 1)),
        ]:
            ideal = veronese(params)
            cert = find_lq_order(zero(ideal.nvars), ideal.gens)
            assert cert is not None and cert.verify()

    def test_cap_enforced(self):
        gens = list(power(maximal_ideal(3), 3).gens)
        with pytest.raises(ResourceLimitExceeded):
            find_lq_order(zero(3), gens, max_gens=5)

    def test_deterministic(self):
        gens = parse_generators("x1*x2, x1*x3^2, x2*x3^2", 3)
        a = find_lq_order(zero(3), gens)
        b = find_lq_order(zero(3), gens)
        assert a.appended == b.appended

    def test_exhaustive_against_bruteforce(self):
        cases = [
            ("x1*x2, x3*x4", 4),
            ("x1*x2, x1*x3^2, x2*x3^2", 3),
            ("x1^2, x2^2", 2),
            ("x1^2, x1*x2, x3^2, x2*x3", 3),
            ("x1*x2, x2*x3, x3*x4", 4),
            ("x1*x3^2, x1^2*x3, x1*x2*x3, x2^2*x3", 3),
        ]
        for text, n in cases:
            gens = parse_generators(text, n)
            found = find_lq_order(zero(n), gens) is not None
            assert found == lq_exists_bruteforce(zero(n), gens), text


class TestRevlex:
    def test_comparison_convention(self):
        # x1 > x2 > x3; ties broken from the last variable backwards
        assert revlex_greater(I("x1*x2", 3).gens[0], I("x1*x3", 3).gens[0])
        assert revlex_greater(I("x1^2", 3).gens[0], I("x1*x2", 3).gens[0])
        assert not revlex_greater(I("x2*x3", 3).gens[0], I("x1*x3", 3).gens[0])

    def test_descending_processing(self):
        order = revlex_order(parse_generators("x2^2, x1^2, x1*x2", 2))
        assert [str(m) for m in order] == ["x1^2", "x1*x2", "x2^2"]
        inc = revlex_order(parse_generators("x2^2, x1^2, x1*x2", 2), increasing=True)
        assert [str(m) for m in inc] == ["x2^2", "x1*x2", "x1^2"]

    def test_m_squared(self):
        cert = revlex_lq(I("x1^2, x1*x2, x2^2", 2))
        assert cert is not None and cert.verify()

    def test_disjoint_edges(self):
        assert revlex_lq(I("x1*x2, x3*x4", 4)) is None

    def test_non_polymatroidal_revlex_recorded(self):
        # no theorem applies (the ideal is not polymatroidal); both
        # conventions are legal inputs and simply report what happens
        ideal = I("x1*x3^2, x1^2*x3, x1*x2*x3, x2^2*x3", 3)
        dec = revlex_lq(ideal)
        inc = revlex_lq(ideal, increasing=True)
        assert (dec is None or dec.verify()) and (inc is None or inc.verify())

    def test_requires_single_degree(self):
        with pytest.raises(ValueError):
            revlex_lq(I("x1, x2^2", 2))

    def test_polymatroidal_corpus_decreasing_works(self):
        cases = [
            veronese(VeroneseParams(2, (1, 1, 1))),
            veronese(VeroneseParams(3, (2, 2, 1))),
            veronese(VeroneseParams(2, (2, 1))),
            power(maximal_ideal(3), 2),
            I("x1*x3, x1*x4, x2*x3, x2*x4", 4),
            ideal_product(I("x1, x2", 3), I("x2, x3", 3)),
        ]
        for ideal in cases:
            assert is_polymatroidal(ideal)[0]
            cert = revlex_lq(ideal)
            assert cert is not None and cert.verify(), str(ideal)


class TestExtendVeronese:
    def test_two_variable_extension(self):
        cert = extend_lq_veronese(VeroneseParams(2, (1, 2)), VeroneseParams(3, (3, 3)))
        assert cert.base == ideal_product(veronese(VeroneseParams(2, (1, 2))), maximal_ideal(2))
        assert [str(v) for v in cert.appended] == ["x1^3"]
        assert [sorted(s) for s in cert.steps] == [[2]]

    def test_trivial_extension(self):
        cert = extend_lq_veronese(VeroneseParams(2, (2, 2)), VeroneseParams(3, (3, 3)))
        assert cert.appended == ()

    def test_three_vars_full_run(self):
        cert = extend_lq_veronese(VeroneseParams(2, (1, 1, 1)), VeroneseParams(3, (2, 2, 2)))
        assert cert.verify()
        # final ideal is all of J
        total = set(cert.base.gens) | set(cert.appended)
        assert total == set(veronese(VeroneseParams(3, (2, 2, 2))).gens)

    def test_precondition_violation(self):
        with pytest.raises(ValueError):
            extend_lq_veronese(VeroneseParams(2, (2, 2)), VeroneseParams(3, (1, 2)))
        with pytest.raises(ValueError):
            extend_lq_veronese(VeroneseParams(2, (2, 2)), VeroneseParams(4, (4, 4)))

    def test_untight_caps_accepted(self):
        # caps above the degree describe the same ideal and must still work
        cert = extend_lq_veronese(VeroneseParams(2, (5, 5)), VeroneseParams(3, (3, 3)))
        assert cert.appended == ()

    def test_exhaustive_small_pairs(self):
        for n in (2, 3):
            for d in (1, 2):
                for caps_p in itertools.product(range(d + 2), repeat=n):
                    if sum(caps_p) < d:
                        continue
                    p = VeroneseParams(d, caps_p)
                    Im = ideal_product(veronese(p), maximal_ideal(n))
                    for caps_q in itertools.product(range(d + 3), repeat=n):
                        if sum(caps_q) < d + 1:
                            continue
                        q = VeroneseParams(d + 1, caps_q)
                        if not veronese(q).contains_ideal(Im):
                            continue
                        cert = extend_lq_veronese(p, q)
                        assert cert.verify()


class TestComponentwiseVeroneseChain:
    def test_single_degree_chain(self):
        cert = componentwise_veronese_lq(power(maximal_ideal(2), 2))
        assert cert is not None and cert.verify()

    def test_two_degree_chain(self):
        ideal = I("x1, x2^3", 2)
        cert = componentwise_veronese_lq(ideal)
        assert cert is not None and cert.verify()
        assert set(cert.appended) == set(ideal.gens)

    def test_not_componentwise_veronese(self):
        assert componentwise_veronese_lq(I("x1*x2, x1*x3^2, x2*x3^2", 3)) is None

    def test_chain_implies_find_succeeds(self):
        for text, n in [("x1, x2^3", 2), ("x1^2, x1*x2, x2^2, x1^3", 2)]:
            ideal = I(text, n)
            cert = componentwise_veronese_lq(ideal)
            assert cert is not None
            assert find_lq_order(zero(n), ideal.gens) is not None

    def test_linear_quotients_implies_componentwise_linear(self):
        for text, n in [
            ("x1*x2, x1*x3^2, x2*x3^2", 3),
            ("x1, x2^3", 2),
            ("x1*x2, x1*x3, x2*x3", 3),
        ]:
            ideal = I(text, n)
            if find_lq_order(zero(n), ideal.gens) is not None:
                assert is_componentwise_linear(ideal)


# ---------------------------------------------------------------------------
# property-based checks
# ---------------------------------------------------------------------------

@settings(max_examples=30, deadline=None)
@given(
    st.integers(1, 2),
    st.lists(st.integers(0, 3), min_size=2, max_size=3),
    st.lists(st.integers(0, 4), min_size=2, max_size=3),
)
def test_extension_property(d, caps_p, caps_q):
    n = min(len(caps_p), len(caps_q))
    caps_p, caps_q = tuple(caps_p[:n]), tuple(caps_q[:n])
    if sum(caps_p) < d or sum(caps_q) < d + 1:
        return
    p = VeroneseParams(d, caps_p)
    q = VeroneseParams(d + 1, caps_q)
    Im = ideal_product(veronese(p), maximal_ideal(n))
    if not veronese(q).contains_ideal(Im):
        return
    cert = extend_lq_veronese(p, q)
    assert cert.verify()


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=2, max_size=3), st.integers(1, 2))
def test_certificates_self_verify(caps, d):
    caps = tuple(caps)
    if sum(caps) < d:
        return
    ideal = veronese(VeroneseParams(d, caps))
    cert = revlex_lq(ideal)
    if cert is not None:
        assert cert.verify()
