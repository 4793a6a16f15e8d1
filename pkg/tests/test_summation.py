import math
from itertools import count

import pytest

from umbralint.errors import ConvergenceError
from umbralint.summation import SeriesTail, sum_series


def test_geometric_series():
    value, tail = sum_series((0.5 ** k for k in count()), 1e-12)
    assert abs(value - 2.0) < 1e-11
    assert tail.converged


def test_alternating_factorial_series():
    value, tail = sum_series(((-1.0) ** k / math.factorial(k) for k in count()),
                             1e-14)
    assert abs(value - math.exp(-1.0)) < 1e-14
    assert tail.converged
    # the tail invariant: converged implies the last term was negligible
    assert tail.last_term_magnitude <= 1e-14 * abs(value)


def test_cap_exceeded_raises_with_partial():
    with pytest.raises(ConvergenceError) as excinfo:
        sum_series((1.0 / (k + 1.0) for k in count()), 1e-12, cap=50)
    err = excinfo.value
    assert isinstance(err.tail, SeriesTail)
    assert not err.tail.converged
    assert err.tail.terms_used == 50
    assert err.partial == pytest.approx(sum(1.0 / (k + 1.0) for k in range(50)))


def test_finite_iterable_is_converged():
    value, tail = sum_series(iter([1.0, 2.0, 3.0]), 1e-12)
    assert value == 6.0
    assert tail.converged
    assert tail.terms_used == 3


def test_isolated_small_term_does_not_trigger_stop():
    # one near-zero term inside an otherwise large series must not stop it
    terms = [1.0, 1e-30, 1.0, 1.0, 1e-20, 1e-20, 1e-20]
    value, tail = sum_series(iter(terms), 1e-12)
    assert value == pytest.approx(3.0)
    assert tail.terms_used == len(terms)


def test_ratio_guard_delays_convergence_check():
    # terms grow for a while; without the guard, the relative test could
    # fire during the early plateau of a tiny partial sum
    def growing_then_decaying():
        t = 1e-18
        for k in count():
            yield t
            t = t * 3.0 if k < 10 else t * 1e-6

    value, tail = sum_series(growing_then_decaying(), 1e-10, ratio_guard=0.9)
    expected = sum(1e-18 * 3.0 ** min(k, 10) * (1e-6 ** max(0, k - 10))
                   for k in range(20))
    assert value == pytest.approx(expected, rel=1e-12)


def test_all_zero_series():
    value, tail = sum_series((0.0 for _ in range(100)), 1e-12)
    assert value == 0.0
    assert tail.converged
