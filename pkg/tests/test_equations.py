"""Equation generation and evaluation tests."""

import math

import pytest

from pointforge import (
    ArgKind,
    Distribution,
    Equation,
    FuncKind,
    GenConfig,
    OpKind,
    Rng,
    Term,
    count_samples,
    evaluate,
    generate_equation,
    parse,
    serialize,
)

# The worked three-term example: s*ceil(y) - s*(y**2) + s*abs(y-x), s uniform.
EXAMPLE = Equation(
    dist=Distribution.UNIFORM,
    terms=(
        Term(chain=(FuncKind.CEIL,), atom=ArgKind.Y),
        Term(chain=(FuncKind.IDENTITY,), atom=ArgKind.Y_SQUARED),
        Term(chain=(FuncKind.ABS,), atom=ArgKind.Y_MINUS_X),
    ),
    ops=(OpKind.SUB, OpKind.ADD),
    wrap=None,
)


class StubSampler:
    """Returns a fixed value for every draw and counts them."""

    def __init__(self, value=1.0):
        self.value = value
        self.draws = 0

    def sample_kind(self, kind):
        self.draws += 1
        return self.value


class TestGeneration:
    def test_degenerate_bounds_give_single_depth1_term(self):
        cfg = GenConfig(c_min=1, c_max=1, d_min=1, d_max=1)
        eq = generate_equation(Rng("x"), cfg)
        assert len(eq.terms) == 1
        assert len(eq.terms[0].chain) == 1
        assert eq.ops == ()

    def test_default_bounds_hold_over_corpus(self):
        for seed in range(1000):
            eq = generate_equation(Rng(str(seed)))
            n = len(eq.terms)
            assert 1 <= n <= 14
            assert len(eq.ops) == n - 1
            for term in eq.terms:
                assert 1 <= len(term.chain) <= 2

    def test_same_seed_same_structure(self):
        for seed in ("41868", "20523", "30891"):
            assert generate_equation(Rng(seed)) == generate_equation(Rng(seed))

    def test_example_shape_reachable(self):
        # Some seed draws the example's silhouette: 3 terms, all depth 1,
        # ops (-, +), uniform sampler, no wrap.
        for i in range(200_000):
            eq = generate_equation(Rng(str(i)))
            if (
                eq.dist is Distribution.UNIFORM
                and len(eq.terms) == 3
                and all(len(t.chain) == 1 for t in eq.terms)
                and eq.ops == (OpKind.SUB, OpKind.ADD)
                and eq.wrap is None
            ):
                return
        pytest.fail("example shape not reached in 200k seeds")

    def test_custom_bounds_respected(self):
        cfg = GenConfig(c_min=3, c_max=5, d_min=2, d_max=4, wrap_p=0.0)
        for seed in range(200):
            eq = generate_equation(Rng(str(seed)), cfg)
            assert 3 <= len(eq.terms) <= 5
            assert all(2 <= len(t.chain) <= 4 for t in eq.terms)
            assert eq.wrap is None

    def test_wrap_probability_extremes(self):
        always = GenConfig(wrap_p=1.0)
        never = GenConfig(wrap_p=0.0)
        for seed in range(100):
            assert generate_equation(Rng(str(seed)), always).wrap is not None
            assert generate_equation(Rng(str(seed)), never).wrap is None

    def test_bad_config_rejected(self):
        with pytest.raises(ValueError):
            GenConfig(c_min=0)
        with pytest.raises(ValueError):
            GenConfig(c_min=5, c_max=2)
        with pytest.raises(ValueError):
            GenConfig(wrap_p=1.5)


class TestEvaluate:
    def test_example_with_unit_samples(self):
        # ceil(0.5) - 0.5**2 + |0.5 - 0| = 1 - 0.25 + 0.5
        assert evaluate(EXAMPLE, 0.0, 0.5, StubSampler(1.0)) == 1.25

    def test_single_identity_term(self):
        eq = Equation(
            dist=Distribution.UNIFORM,
            terms=(Term(chain=(FuncKind.IDENTITY,), atom=ArgKind.X),),
            ops=(),
        )
        assert evaluate(eq, 3.0, 7.0, StubSampler(1.0)) == 3.0

    def test_pole_returns_non_finite(self):
        eq = Equation(
            dist=Distribution.UNIFORM,
            terms=(Term(chain=(FuncKind.IDENTITY,), atom=ArgKind.INV_X),),
            ops=(),
        )
        assert math.isinf(evaluate(eq, 0.0, 1.0, StubSampler(1.0)))

    def test_precedence_mul_before_add(self):
        # identity terms: 2 + 3*4 with stub sample 1 on atoms x, y, x+y...
        eq = Equation(
            dist=Distribution.UNIFORM,
            terms=(
                Term(chain=(FuncKind.IDENTITY,), atom=ArgKind.X),
                Term(chain=(FuncKind.IDENTITY,), atom=ArgKind.Y),
                Term(chain=(FuncKind.IDENTITY,), atom=ArgKind.X_PLUS_Y),
            ),
            ops=(OpKind.ADD, OpKind.MUL),
        )
        # x + y*(x+y) at (2, 3) = 2 + 3*5 = 17, not (2+3)*5
        assert evaluate(eq, 2.0, 3.0, StubSampler(1.0)) == 17.0

    def test_sample_scaling_applies_per_application(self):
        eq = Equation(
            dist=Distribution.UNIFORM,
            terms=(Term(chain=(FuncKind.IDENTITY, FuncKind.IDENTITY), atom=ArgKind.X),),
            ops=(),
        )
        # s*(s*(x)) with s = 2: 2*2*5 = 20
        assert evaluate(eq, 5.0, 0.0, StubSampler(2.0)) == 20.0

    def test_wrap_sample_consumed_last(self):
        class Sequenced:
            def __init__(self):
                self.next = 0

            def sample_kind(self, kind):
                self.next += 1
                return float(self.next)

        eq = Equation(
            dist=Distribution.UNIFORM,
            terms=(
                Term(chain=(FuncKind.IDENTITY,), atom=ArgKind.X),
                Term(chain=(FuncKind.IDENTITY,), atom=ArgKind.Y),
            ),
            ops=(OpKind.ADD,),
            wrap=FuncKind.IDENTITY,
        )
        # draws: term1 -> 1, term2 -> 2, wrap -> 3: 3*(1*x + 2*y)
        assert evaluate(eq, 1.0, 1.0, Sequenced()) == 9.0

    def test_chain_draw_order_outermost_first(self):
        class Sequenced:
            def __init__(self):
                self.next = 0

            def sample_kind(self, kind):
                self.next += 1
                return float(self.next)

        eq = Equation(
            dist=Distribution.UNIFORM,
            terms=(Term(chain=(FuncKind.IDENTITY, FuncKind.CEIL), atom=ArgKind.X),),
            ops=(),
        )
        # outermost draw first: 1*(2*ceil(x)); at x=0.5 -> 1*2*1 = 2
        assert evaluate(eq, 0.5, 0.0, Sequenced()) == 2.0

    def test_purity_same_state_same_result(self):
        eq = generate_equation(Rng("pure"))
        a = evaluate(eq, 0.3, -0.7, Rng("state"))
        b = evaluate(eq, 0.3, -0.7, Rng("state"))
        assert a == b


class TestCountSamples:
    def test_worked_example_three(self):
        assert count_samples(EXAMPLE) == 3

    def test_depth2_with_wrap(self):
        eq = Equation(
            dist=Distribution.GAUSSIAN,
            terms=(Term(chain=(FuncKind.SIN, FuncKind.COS), atom=ArgKind.X),),
            ops=(),
            wrap=FuncKind.TANH,
        )
        assert count_samples(eq) == 3

    def test_matches_instrumented_evaluate_over_corpus(self):
        for seed in range(1000):
            eq = generate_equation(Rng(str(seed)))
            stub = StubSampler(0.5)
            evaluate(eq, 0.25, -0.5, stub)
            assert stub.draws == count_samples(eq)


class TestStructuralInvariants:
    def test_term_requires_chain(self):
        with pytest.raises(ValueError):
            Term(chain=(), atom=ArgKind.X)

    def test_ops_length_checked(self):
        with pytest.raises(ValueError):
            Equation(
                dist=Distribution.UNIFORM,
                terms=(Term(chain=(FuncKind.ABS,), atom=ArgKind.X),),
                ops=(OpKind.ADD,),
            )

    def test_generated_corpus_parses_and_round_trips(self):
        for seed in range(1000):
            eq = generate_equation(Rng(str(seed)))
            assert parse(serialize(eq)) == eq
