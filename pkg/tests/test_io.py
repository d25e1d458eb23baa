import random
from fractions import Fraction

import pytest

from qtorus import Angle, ScalingAutomorphism
from qtorus.io import ContextError, context_to_yaml, parse_angle, parse_context, parse_twist

from support import generic2, mixed3, random_context


def test_minimal_context():
    cf = parse_context("n: 3\n")
    assert (cf.n, cf.d, cf.s) == (3, 1, 0)
    assert all(x == 0 for row in cf.theta().C for x in row)


def test_d_defaults_to_denominator_lcm():
    cf = parse_context('n: 3\nC: [["0", "1/2", "1/3"], ["-1/2", "0", "0"], ["-1/3", "0", "0"]]\n')
    assert cf.d == 6


@pytest.mark.parametrize("text, where, fragment", [
    ("n: 0\n", "1:4", "n must be positive"),
    ("m: 2\n", "1:1", "unknown key 'm'"),
    ("n: 2\nn: 2\n", "2:1", "duplicate key"),
    ("d: 3\n", "1:1", "missing required key 'n'"),
    ('n: 2\nC: [["0", "x"], ["0", "0"]]\n', "2:11", "C[1][2] must be an integer or a fraction"),
    ('n: 2\nC: [["0", "1/3"], ["-1/3", "0"]]\nd: 4\n', "3:4", "not divisible"),
    ("n: 2\nM:\n  - [[0, 1], [1, 0]]\n", "3:15", "M[1][2][1] = 1 must equal -M[1][1][2]"),
    ("n: 2\ns: 2\nM:\n  - [[0, 1], [-1, 0]]\n", "2:4", "s = 2 but 1 matrices"),
    ("n: 2\nM:\n  - [[0, 1], [-1, 0]]\ntau_hat: []\n", "4:10", "tau_hat must list 1"),
    ("n: 2\nradial: [[1, 0], [1, 1]]\n", "2:14", "radial[1][2] must be positive"),
    ("n: [2\n", "2:1", "not valid YAML"),
    ("- 1\n", "1:1", "must be a mapping"),
])
def test_diagnostics_carry_positions(text, where, fragment):
    with pytest.raises(ContextError) as exc:
        parse_context(text, "ctx.yaml")
    msg = str(exc.value)
    assert msg.startswith(f"ctx.yaml:{where}: "), msg
    assert fragment in msg


def test_yaml_round_trip():
    rng = random.Random(3)
    for n in (1, 2, 3, 4):
        ctx = random_context(rng, n)
        tau = [0.1 * (t + 1) for t in range(ctx.s)]
        cf = parse_context(context_to_yaml(ctx, tau))
        assert cf.theta() == ctx
        assert cf.tau_hat == tuple(tau)


@pytest.mark.parametrize("text, c, m", [
    ("1/3", Fraction(1, 3), [0, 0]),
    ("tau1", 0, [1, 0]),
    ("-2*tau2 + 1/4", Fraction(1, 4), [0, -2]),
    ("1/2 - tau1 + 3 tau2", Fraction(1, 2), [-1, 3]),
])
def test_parse_angle(text, c, m):
    assert parse_angle(text, 2) == Angle(c, m)


@pytest.mark.parametrize("text", ["", "tau3", "1/2 tau1", "1/3 1/3", "abc"])
def test_parse_angle_rejects(text):
    with pytest.raises(ValueError):
        parse_angle(text, 2)


def test_parse_twist():
    ctx = generic2()
    assert parse_twist("id", ctx).is_identity()
    assert parse_twist("alpha", ctx) == ScalingAutomorphism.alpha(ctx)
    assert parse_twist("modular", ctx) == ScalingAutomorphism.modular(ctx)
    assert parse_twist("custom:tau1, 0", ctx).b[0] == Angle(0, [1])
    ctx3 = mixed3()
    assert parse_twist("custom:1/4,1/2,0", ctx3).b[0] == Angle(Fraction(1, 4), [0])
    for bad in ("beta", "custom:0", "custom:1/3,0"):
        with pytest.raises(ValueError):
            parse_twist(bad, ctx)
