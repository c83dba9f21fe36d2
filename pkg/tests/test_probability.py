import itertools
from fractions import Fraction

import pytest

from synmon import (build_signature, canonical_decomposition, mu_exact,
                    mu_series, markov_chain, mu_consistency,
                    accumulation_points, zero_one_basic, zero_one_residual)
from synmon.errors import InvalidPeriod, ScopeError
from synmon.probability import (distinct_accumulation_values,
                                limit_mu_blocks, maximum_period_of)

def test_mu_exact_matches_quoted_value(corpus):
    dfa, _, _ = corpus["a3"]
    assert mu_exact(dfa, 2) == Fraction(1, 2)


def test_mu_at_zero_is_epsilon_membership(corpus):
    for name, (dfa, _, _) in corpus.items():
        assert mu_exact(dfa, 0) == (1 if dfa.accepts("") else 0)


def test_mu_constant_half_for_head_language(corpus):
    dfa, _, _ = corpus["head_a"]
    for length in range(1, 21):
        assert mu_exact(dfa, length) == Fraction(1, 2)


def test_mu_series_matches_pointwise(corpus):
    dfa, _, _ = corpus["a3"]
    series = mu_series(dfa, 10)
    assert series == [mu_exact(dfa, l) for l in range(11)]


def test_markov_matrix_exact(corpus):
    dfa, _, _ = corpus["a3"]
    chain = markov_chain(dfa)
    h = Fraction(1, 2)
    assert chain.states == ("q1", "q2", "q3", "q4")
    assert chain.matrix == (
        (0, h, 0, h),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (0, 0, 0, 1),
    )


def test_markov_rows_sum_to_one(corpus):
    for name, (dfa, _, _) in corpus.items():
        for row in markov_chain(dfa).matrix:
            assert sum(row) == 1, name


def test_markov_one_state_dfa(corpus):
    dfa, _, _ = corpus["all_words"]
    assert markov_chain(dfa).matrix == ((1,),)


def test_mu_equals_markov_power(corpus):
    # mu(l) = sum over accepting states of Pi^l(initial, q), exactly
    for name in ("a3", "a1", "head_a"):
        dfa, _, _ = corpus[name]
        chain = markov_chain(dfa)
        position = {q: i for i, q in enumerate(chain.states)}
        row = [Fraction(int(q == dfa.initial)) for q in chain.states]
        for length in range(51):
            if length:
                row = [sum(row[i] * chain.matrix[i][j] for i in range(len(row)))
                       for j in range(len(row))]
            expected = sum(row[position[q]] for q in dfa.accepting)
            assert mu_exact(dfa, length) == expected, (name, length)


# --- accumulation points ---

def test_accumulation_oscillating(corpus):
    dfa, _, _ = corpus["a3"]
    points = accumulation_points(dfa, 2, 1e-9, 4096)
    assert [p.converged for p in points] == [True, True]
    assert abs(points[0].value - 0.5) < 1e-6
    assert abs(points[1].value - 1.0) < 1e-6


def test_accumulation_equal_halves(corpus):
    dfa, _, _ = corpus["alt_half"]
    points = accumulation_points(dfa, 2)
    assert abs(points[0].value - 0.5) < 1e-6
    assert abs(points[1].value - 0.5) < 1e-6
    assert distinct_accumulation_values(points, 1e-6) == 1


def test_accumulation_parity(corpus):
    dfa, _, _ = corpus["a1"]
    points = accumulation_points(dfa, 2)
    assert abs(points[0].value - 0.5) < 1e-6
    assert abs(points[1].value - 0.0) < 1e-6


def test_accumulation_requires_max_period(corpus):
    dfa, _, _ = corpus["a3"]
    with pytest.raises(InvalidPeriod):
        accumulation_points(dfa, 3)


def test_accumulation_sequences_settle(corpus, full_sigs):
    # along every residue class the tail is Cauchy at the default tolerance
    for name, (dfa, _, _) in corpus.items():
        period = full_sigs[name].periods[0]
        for point in accumulation_points(dfa, period):
            assert point.converged, name


# --- zero-one verdicts ---

def test_basic_verdicts(corpus):
    cases = {"has_a": "one", "head_a": "neither", "a3": "oscillating",
             "all_words": "one", "single_a": "zero", "a1": "oscillating"}
    for name, expected in cases.items():
        dfa, _, sm = corpus[name]
        assert zero_one_basic(sm, dfa).verdict == expected, name


def test_basic_verdict_agrees_with_zero_element(corpus):
    from synmon import find_zero

    for name, (dfa, _, sm) in corpus.items():
        verdict = zero_one_basic(sm, dfa).verdict
        assert (find_zero(sm.monoid) is not None) == (verdict in ("zero", "one")), name


def test_residual_verdicts_for_oscillating_language(corpus, full_decs):
    dfa, _, _ = corpus["a3"]
    dec = full_decs["a3"]
    va = zero_one_residual(dec, dfa, "a")
    assert va.is_zero_or_one and va.witness_names == ("e",)
    assert abs(va.mu_lw - 1.0) < 1e-6
    veps = zero_one_residual(dec, dfa, "")
    assert not veps.is_zero_or_one and veps.witness is None
    assert abs(veps.mu_lw - 0.5) < 1e-6


def test_residual_verdict_parity_prefix(corpus, full_decs):
    dfa, _, _ = corpus["a1"]
    dec = full_decs["a1"]
    verdict = zero_one_residual(dec, dfa, "a")
    assert verdict.is_zero_or_one
    assert abs(verdict.mu_lw - 0.0) < 1e-6


def test_residual_scope_needs_max_period(corpus):
    import warnings

    dfa, _, sm = corpus["a1"]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        dec = canonical_decomposition(sm, build_signature(sm, ["ab"], [1]))
    with pytest.raises(ScopeError):
        zero_one_residual(dec, dfa, "")


def test_verdicts_match_limits_both_ways(corpus, full_decs):
    # ideal witness exists iff the numeric limit is within 1e-6 of {0, 1}
    from synmon import is_ideal, residual_monoid

    for name, dec in full_decs.items():
        dfa = corpus[name][0]
        period = dec.signature.periods[0]
        for n in range(period):
            for w in map("".join, itertools.product("ab", repeat=n)):
                verdict = zero_one_residual(dec, dfa, w)
                assert verdict.mu_converged, (name, w)
                near_binary = min(abs(verdict.mu_lw), abs(verdict.mu_lw - 1)) < 1e-6
                assert verdict.is_zero_or_one == near_binary, (name, w)
                if verdict.witness is not None:
                    t_r = residual_monoid(dec, verdict.r)
                    assert is_ideal(t_r.monoid, set(verdict.witness)), (name, w)


def test_mu_consistency_examples(corpus, full_decs):
    dfa, _, _ = corpus["a3"]
    dec = full_decs["a3"]
    c1 = mu_consistency(dec, dfa, 1)
    assert c1.ok and abs(c1.mu_r - 1.0) < 1e-6
    c0 = mu_consistency(dec, dfa, 0)
    assert c0.ok and abs(c0.mu_r - 0.5) < 1e-6
    dfa1, _, _ = corpus["a1"]
    cp = mu_consistency(full_decs["a1"], dfa1, 1)
    assert cp.ok and abs(cp.mu_r) < 1e-6
    assert all(abs(v) < 1e-6 for _, v in cp.per_word)


def test_mu_consistency_everywhere(corpus, full_decs):
    for name, dec in full_decs.items():
        dfa = corpus[name][0]
        for r in range(dec.signature.periods[0]):
            assert mu_consistency(dec, dfa, r).ok, (name, r)


def test_limit_mu_blocks_converges(corpus):
    dfa, _, _ = corpus["a3"]
    value, converged = limit_mu_blocks(dfa, "b", 2)
    assert converged and abs(value - 1.0) < 1e-6


def test_maximum_period_of(corpus, full_sigs):
    for name, (dfa, _, _) in corpus.items():
        assert maximum_period_of(dfa) == full_sigs[name].periods[0], name
