import itertools
import random

import pytest

from argstable import (
    ArgumentationFramework,
    check_preferred_consequence,
    check_preferred_unsat,
    decode,
    gl_reduct,
    is_minimal_model_by_consequence,
    is_model,
    models,
    preferred_oracle,
    preferred_via_alpha,
    preferred_via_gamma,
    preferred_via_lambda,
    query,
    stable_oracle,
    stable_fragment,
    stable_models,
)
from argstable.translate import alpha
from tests.common import (
    EMPTY,
    CHAIN,
    KNOT,
    KNOT_GAMMA_STABLE,
    KNOT_LAMBDA_STABLE,
    NO_ATTACKS,
    SELF_ATTACK,
    random_framework,
    subsets_of,
)

ENGINES = (preferred_via_alpha, preferred_via_gamma, preferred_via_lambda)


class TestEnginesAgreeOnGoldenCases:
    @pytest.mark.parametrize("engine", ENGINES)
    def test_chain(self, engine):
        report = engine(CHAIN)
        assert report.extensions == (frozenset({"a", "c"}),)

    @pytest.mark.parametrize("engine", ENGINES)
    def test_knot(self, engine):
        report = engine(KNOT)
        assert report.extensions == (frozenset({"a"}), frozenset({"b", "d"}))

    @pytest.mark.parametrize("engine", ENGINES)
    def test_self_attack(self, engine):
        assert engine(SELF_ATTACK).extensions == (frozenset(),)

    @pytest.mark.parametrize("engine", ENGINES)
    def test_empty_framework(self, engine):
        assert engine(EMPTY).extensions == (frozenset(),)


class TestWitnesses:
    def test_alpha_witnesses_knot(self):
        report = preferred_via_alpha(KNOT)
        assert report.engine == "alpha"
        assert report.witnesses[frozenset({"a"})] == {
            "d(b)", "d(c)", "d(d)", "d(e)",
        }
        assert report.witnesses[frozenset({"b", "d"})] == {"d(a)", "d(c)", "d(e)"}

    def test_gamma_witnesses_knot(self):
        report = preferred_via_gamma(KNOT)
        assert set(report.witnesses.values()) == set(KNOT_GAMMA_STABLE)

    def test_lambda_witnesses_knot(self):
        report = preferred_via_lambda(KNOT)
        assert set(report.witnesses.values()) == set(KNOT_LAMBDA_STABLE)

    def test_witness_decodes_to_its_extension(self):
        rng = random.Random(3)
        for _ in range(15):
            af = random_framework(rng, max_args=5)
            for engine in (preferred_via_alpha, preferred_via_gamma):
                report = engine(af)
                for ext, witness in report.witnesses.items():
                    assert decode(af, witness) == ext

    def test_alpha_witnesses_are_minimal(self):
        rng = random.Random(13)
        for _ in range(10):
            af = random_framework(rng, max_args=5)
            report = preferred_via_alpha(af)
            for witness in report.witnesses.values():
                assert is_minimal_model_by_consequence(alpha(af), witness)

    def test_gamma_witnesses_are_stable(self):
        rng = random.Random(19)
        for _ in range(10):
            af = random_framework(rng, max_args=5)
            from argstable.translate import gamma
            program = gamma(af)
            for witness in preferred_via_gamma(af).witnesses.values():
                reduct = gl_reduct(program, witness)
                assert is_model(reduct, witness)
                assert not any(m < witness for m in models(reduct))


class TestUnsatChecker:
    def test_holds(self):
        check = check_preferred_unsat(CHAIN, {"a", "c"})
        assert check.holds
        assert check.failure is None
        assert check.counter_model is None

    def test_not_maximal(self):
        check = check_preferred_unsat(CHAIN, {"a"})
        assert not check.holds
        assert check.failure == "satisfiable"
        assert check.counter_model == {"d(b)"}

    def test_complement_not_a_model(self):
        check = check_preferred_unsat(CHAIN, {"b"})
        assert not check.holds
        assert check.failure == "not-a-model"
        assert check.counter_model is None

    def test_whole_framework_without_attacks(self):
        check = check_preferred_unsat(NO_ATTACKS, {"a", "b"})
        assert check.holds

    def test_whole_framework_with_attacks(self):
        check = check_preferred_unsat(CHAIN, CHAIN.arguments)
        assert not check.holds
        assert check.failure == "not-a-model"

    def test_knot_cases(self):
        assert check_preferred_unsat(KNOT, {"a"}).holds
        assert check_preferred_unsat(KNOT, {"b", "d"}).holds
        assert not check_preferred_unsat(KNOT, {"b"}).holds

    def test_unknown_member(self):
        from argstable import UnknownArgumentError
        with pytest.raises(UnknownArgumentError):
            check_preferred_unsat(CHAIN, {"z"})


class TestConsequenceChecker:
    def test_golden_cases(self):
        assert check_preferred_consequence(CHAIN, {"a", "c"})
        assert not check_preferred_consequence(CHAIN, {"a"})
        assert not check_preferred_consequence(CHAIN, {"b"})
        assert check_preferred_consequence(KNOT, {"b", "d"})
        assert check_preferred_consequence(NO_ATTACKS, {"a", "b"})

    def test_agrees_with_unsat_checker(self):
        rng = random.Random(29)
        for _ in range(10):
            af = random_framework(rng, max_args=4)
            for members in subsets_of(af.arguments):
                assert check_preferred_consequence(af, members) == \
                    check_preferred_unsat(af, members).holds


class TestQuery:
    def test_brave(self):
        verdict = query(KNOT, "a", "brave")
        assert verdict.holds
        assert verdict.mode == "brave"
        assert verdict.evidence == {"a", "d(b)", "d(c)", "d(d)", "d(e)"}

    def test_cautious_false_with_counterexample(self):
        verdict = query(KNOT, "a", "cautious")
        assert not verdict.holds
        assert verdict.evidence == {"b", "d", "d(a)", "d(c)", "d(e)"}

    def test_cautious_true(self):
        verdict = query(CHAIN, "a", "cautious")
        assert verdict.holds
        assert verdict.evidence is None

    def test_brave_false(self):
        verdict = query(CHAIN, "b", "brave")
        assert not verdict.holds
        assert verdict.evidence is None

    def test_defeated_argument(self):
        assert not query(KNOT, "c", "brave").holds
        assert not query(KNOT, "e", "brave").holds

    def test_unknown_argument(self):
        from argstable import UnknownArgumentError
        with pytest.raises(UnknownArgumentError):
            query(CHAIN, "z", "brave")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            query(CHAIN, "a", "plausible")

    def test_matches_oracle(self):
        rng = random.Random(37)
        for _ in range(15):
            af = random_framework(rng, max_args=5)
            preferred = preferred_oracle(af)
            for x in sorted(af.arguments):
                assert query(af, x, "brave").holds == any(x in s for s in preferred)
                assert query(af, x, "cautious").holds == all(x in s for s in preferred)


class TestAgainstOracle:
    def test_engines_match_oracle(self):
        rng = random.Random(43)
        for _ in range(40):
            af = random_framework(rng, max_args=6)
            expected = tuple(preferred_oracle(af))
            for engine in ENGINES:
                assert engine(af).extensions == expected

    def test_checkers_match_oracle_membership(self):
        rng = random.Random(47)
        for _ in range(15):
            af = random_framework(rng, max_args=4)
            preferred = set(preferred_oracle(af))
            for members in subsets_of(af.arguments):
                expected = frozenset(members) in preferred
                assert check_preferred_unsat(af, members).holds == expected
                assert check_preferred_consequence(af, members) == expected

    def test_stable_fragment_matches_stable_oracle(self):
        rng = random.Random(53)
        for _ in range(25):
            af = random_framework(rng, max_args=6)
            found = [decode(af, m) for m in stable_models(stable_fragment(af))]
            assert sorted(found, key=sorted) == stable_oracle(af)


class TestDeterminism:
    def test_reports_are_reproducible(self):
        for engine in ENGINES:
            first = engine(KNOT)
            second = engine(KNOT)
            assert first.extensions == second.extensions
            assert first.witnesses == second.witnesses

    def test_extension_order_is_canonical(self):
        af = ArgumentationFramework(
            {"x", "y"}, {("x", "y"), ("y", "x")}
        )
        for engine in ENGINES:
            assert engine(af).extensions == (frozenset({"x"}), frozenset({"y"}))
