import numpy as np
import pytest

from fuzzycr.engine import (
    AndOp,
    DefuzzMethod,
    EmptyAggregateError,
    EngineConfig,
    FuzzyError,
    FuzzySystem,
    Rule,
    SugenoConsequent,
    aggregate_clipped,
    firing_strength,
)
from fuzzycr.membership import LinguisticTerm, LinguisticVariable, Triangular, Universe

U = Universe(0, 100)


def trimf(xs, a, b, c):
    """Independent triangle oracle for curve comparisons."""
    xs = np.asarray(xs, dtype=float)
    out = np.zeros_like(xs)
    if b > a:
        rising = (xs >= a) & (xs < b)
        out[rising] = (xs[rising] - a) / (b - a)
    if c > b:
        falling = (xs >= b) & (xs <= c)
        out[falling] = (c - xs[falling]) / (c - b)
    out[xs == b] = 1.0
    return out


def make_input():
    return LinguisticVariable(
        "x",
        U,
        (
            LinguisticTerm("Lo", Triangular(0, 0, 100)),
            LinguisticTerm("Hi", Triangular(0, 100, 100)),
        ),
    )


def make_output():
    terms = (
        LinguisticTerm("Bottom", Triangular(0, 0, 25)),
        LinguisticTerm("Wide", Triangular(0, 50, 100)),
        LinguisticTerm("Mid", Triangular(25, 50, 75)),
        LinguisticTerm("Top", Triangular(75, 100, 100)),
    )
    return LinguisticVariable("y", U, terms, "output")


def mamdani_system(rules, defuzz=DefuzzMethod.CENTROID, resolution=1001):
    return FuzzySystem(
        [make_input()],
        make_output(),
        rules,
        EngineConfig.mamdani(defuzz=defuzz, resolution=resolution),
    )


class TestFiringStrength:
    def test_min(self):
        rule = Rule.of({"a": "X", "b": "Y"}, "Z")
        fuzzified = {"a": {"X": 0.8}, "b": {"Y": 0.3}}
        assert firing_strength(rule, fuzzified, AndOp.MIN) == pytest.approx(0.3)

    def test_product(self):
        rule = Rule.of({"a": "X", "b": "Y"}, "Z")
        fuzzified = {"a": {"X": 0.8}, "b": {"Y": 0.3}}
        assert firing_strength(rule, fuzzified, AndOp.PRODUCT) == pytest.approx(0.24)

    def test_single_antecedent_identity(self):
        rule = Rule.of({"a": "X"}, "Z")
        fuzzified = {"a": {"X": 1.0}}
        assert firing_strength(rule, fuzzified, AndOp.MIN) == 1.0
        assert firing_strength(rule, fuzzified, AndOp.PRODUCT) == 1.0

    def test_missing_variable_named_in_error(self):
        rule = Rule.of({"a": "X", "missing_one": "Y"}, "Z")
        with pytest.raises(FuzzyError, match="missing_one"):
            firing_strength(rule, {"a": {"X": 1.0}}, AndOp.MIN)


class TestMamdaniAggregation:
    def test_single_rule_full_strength_is_the_sampled_triangle(self):
        system = mamdani_system([Rule.of({"x": "Lo"}, "Mid")])
        curve = system.mamdani_aggregate([0.0])  # Lo degree 1 at x=0
        assert np.allclose(curve.degrees, trimf(curve.xs, 25, 50, 75))

    def test_half_strength_clips_flat_top(self):
        system = mamdani_system([Rule.of({"x": "Lo"}, "Mid")])
        curve = system.mamdani_aggregate([50.0])  # Lo degree 0.5
        expected = np.minimum(0.5, trimf(curve.xs, 25, 50, 75))
        assert np.allclose(curve.degrees, expected)
        flat = curve.degrees[(curve.xs >= 37.5) & (curve.xs <= 62.5)]
        assert np.allclose(flat, 0.5)
        assert curve.max_degree() == pytest.approx(0.5)

    def test_two_rules_combine_pointwise_max(self):
        system = mamdani_system(
            [Rule.of({"x": "Lo"}, "Bottom"), Rule.of({"x": "Lo"}, "Top")]
        )
        curve = system.mamdani_aggregate([0.0])  # both fire at 1
        expected = np.maximum(
            trimf(curve.xs, 0, 0, 25), trimf(curve.xs, 75, 100, 100)
        )
        assert np.allclose(curve.degrees, expected)

    def test_no_rule_fires_raises_empty_aggregate(self):
        system = mamdani_system([Rule.of({"x": "Hi"}, "Mid")])
        with pytest.raises(EmptyAggregateError, match="empty aggregate"):
            system.mamdani_aggregate([0.0])  # Hi degree 0 at x=0

    def test_raising_a_clip_level_never_lowers_the_curve(self):
        xs = U.samples(501)
        profiles = {
            "A": trimf(xs, 0, 25, 50),
            "B": trimf(xs, 25, 50, 75),
            "C": trimf(xs, 50, 75, 100),
        }
        rng = np.random.default_rng(7)
        for _ in range(50):
            levels = {k: float(v) for k, v in zip(profiles, rng.uniform(0.05, 1, 3))}
            raised = dict(levels)
            bump = rng.choice(list(profiles))
            raised[bump] = min(1.0, levels[bump] + float(rng.uniform(0, 0.5)))
            low = aggregate_clipped(xs, profiles, levels)
            high = aggregate_clipped(xs, profiles, raised)
            assert np.all(high.degrees >= low.degrees - 1e-15)


class TestSugeno:
    def make_system(self, consequents):
        rules = [
            Rule.of({"x": "Lo"}, consequents[0]),
            Rule.of({"x": "Hi"}, consequents[1]),
        ]
        return FuzzySystem(
            [make_input()], make_output(), rules, EngineConfig.sugeno()
        )

    def test_equal_weights_average(self):
        system = self.make_system(
            [SugenoConsequent(0.0), SugenoConsequent(100.0)]
        )
        assert system.evaluate([50.0]) == pytest.approx(50.0)

    def test_single_fired_rule_normalizes_weight_out(self):
        rules = [Rule.of({"x": "Lo"}, SugenoConsequent(40.0))]
        system = FuzzySystem(
            [make_input()], make_output(), rules, EngineConfig.sugeno()
        )
        # the only rule fires at 0.3; its weight cancels in the average
        assert system.evaluate([70.0]) == pytest.approx(40.0)

    def test_matches_independent_weighted_average(self):
        system = self.make_system(
            [SugenoConsequent(30.0), SugenoConsequent(70.0)]
        )
        for x in np.linspace(0, 100, 21):
            lo, hi = 1 - x / 100, x / 100
            expected = (lo * 30 + hi * 70) / (lo + hi)
            assert system.evaluate([float(x)]) == pytest.approx(expected)
            # convex combination of fired consequents
            assert 30 - 1e-9 <= system.evaluate([float(x)]) <= 70 + 1e-9

    def test_scaling_all_weights_leaves_output_unchanged(self):
        rng = np.random.default_rng(11)
        weights = rng.uniform(0.01, 1.0, 6)
        values = rng.uniform(0, 100, 6)
        base = np.dot(weights, values) / weights.sum()
        for k in (1e-6, 0.5, 3.7, 1e6):
            scaled = np.dot(k * weights, values) / (k * weights).sum()
            assert scaled == pytest.approx(base, rel=1e-12)

    def test_affine_consequent_uses_inputs(self):
        rules = [
            Rule.of({"x": "Lo"}, SugenoConsequent(10.0, (("x", 0.5),))),
            Rule.of({"x": "Hi"}, SugenoConsequent(10.0, (("x", 0.5),))),
        ]
        system = FuzzySystem(
            [make_input()], make_output(), rules, EngineConfig.sugeno()
        )
        assert system.evaluate([40.0]) == pytest.approx(10 + 0.5 * 40)

    def test_zero_coefficient_affine_equals_constant(self):
        constant = self.make_system(
            [SugenoConsequent(12.5), SugenoConsequent(87.5)]
        )
        affine = self.make_system(
            [SugenoConsequent(12.5, (("x", 0.0),)), SugenoConsequent(87.5, (("x", 0.0),))]
        )
        rng = np.random.default_rng(3)
        for x in rng.uniform(0, 100, 200):
            assert abs(constant.evaluate([x]) - affine.evaluate([x])) <= 1e-12

    def test_all_zero_weights_raise(self):
        rules = [Rule.of({"x": "Hi"}, SugenoConsequent(50.0))]
        system = FuzzySystem(
            [make_input()], make_output(), rules, EngineConfig.sugeno()
        )
        with pytest.raises(EmptyAggregateError, match="empty aggregate"):
            system.evaluate([0.0])


class TestSystemValidation:
    def test_resolution_must_be_odd_and_large(self):
        with pytest.raises(ValueError, match="resolution"):
            EngineConfig.mamdani(resolution=100)
        with pytest.raises(ValueError, match="resolution"):
            EngineConfig.mamdani(resolution=1000)

    def test_rule_arity_capped_by_inputs(self):
        rule = Rule.of({"x": "Lo", "z": "Hi"}, "Mid")
        with pytest.raises(ValueError):
            mamdani_system([rule])

    def test_unknown_labels_rejected(self):
        with pytest.raises(KeyError):
            mamdani_system([Rule.of({"x": "Nope"}, "Mid")])
        with pytest.raises(KeyError):
            mamdani_system([Rule.of({"x": "Lo"}, "Nope")])

    def test_mamdani_rejects_affine_consequents(self):
        with pytest.raises(ValueError, match="label consequent"):
            mamdani_system([Rule.of({"x": "Lo"}, SugenoConsequent(5.0))])

    def test_positional_and_named_inputs_agree(self):
        system = mamdani_system([Rule.of({"x": "Lo"}, "Mid")])
        assert system.evaluate([25.0]) == system.evaluate({"x": 25.0})

    def test_missing_and_unknown_named_inputs(self):
        system = mamdani_system([Rule.of({"x": "Lo"}, "Mid")])
        with pytest.raises(ValueError, match="missing"):
            system.evaluate({})
        with pytest.raises(ValueError, match="unknown"):
            system.evaluate({"x": 1.0, "y": 2.0})

    def test_rule_needs_antecedents(self):
        with pytest.raises(ValueError, match="antecedent"):
            Rule.of({}, "Mid")
