import random

import pytest

from archzeta.errors import BoundExceeded, NonPositiveArgument
from archzeta.exact import ExactScalar
from archzeta.repdims import (dfd_ratio, dim_lambda_closed, formal_degree,
                              gt_dim_oracle, lambda_weight, weyl_dim)
from archzeta.sweep import sweep_contexts
from archzeta.weights import make_context


def test_weyl_dim_examples():
    assert weyl_dim((0,)) == 1
    assert weyl_dim((2, 1, 0)) == 8
    assert weyl_dim((1, 0, 0)) == 3
    assert weyl_dim((1, 1, 0)) == 3
    assert weyl_dim((2, 0)) == 3
    assert weyl_dim(()) == 1


def test_weyl_dim_shift_invariance():
    rng = random.Random(19)
    for _ in range(100):
        m = rng.randint(1, 4)
        w = sorted((rng.randint(-10, 10) for _ in range(m)), reverse=True)
        c = rng.randint(-5, 5)
        assert weyl_dim(tuple(w)) == weyl_dim(tuple(x + c for x in w))


def test_gt_oracle_agrees_with_weyl():
    rng = random.Random(23)
    for _ in range(150):
        m = rng.randint(1, 4)
        w = tuple(sorted((rng.randint(-6, 6) for _ in range(m)), reverse=True))
        assert gt_dim_oracle(w) == weyl_dim(w), w


def test_gt_oracle_bounds():
    with pytest.raises(BoundExceeded):
        gt_dim_oracle((1,) * 6)
    with pytest.raises(BoundExceeded):
        gt_dim_oracle((40, 0))


def test_lambda_weight_examples():
    ctx = make_context(2, 1, (3, 2), (-1,), 3, 1)
    assert lambda_weight(ctx) == (1, 0, 0)
    ctx = make_context(1, 1, (1,), (-1,), 2, 0)
    assert lambda_weight(ctx) == (0, 0)
    ctx = make_context(1, 1, (3,), (-3,), 4, 0)
    assert lambda_weight(ctx) == (1, 0, 0, -1)


def test_dim_lambda_closed_examples():
    assert dim_lambda_closed(make_context(2, 1, (3, 2), (-1,), 3, 1)) == 3
    assert dim_lambda_closed(make_context(1, 1, (1,), (-1,), 2, 0)) == 1
    # weight (1,0,0,-1) of U(4): adjoint, dim 15
    assert dim_lambda_closed(make_context(1, 1, (3,), (-3,), 4, 0)) == 15


def test_dim_lambda_matches_weyl_on_sweep():
    for ctx in sweep_contexts(max_n=3, k_extra=2, bottom_max=2, gap_max=2,
                              limit=800):
        assert dim_lambda_closed(ctx) == weyl_dim(lambda_weight(ctx)), \
            ctx.key()


def test_formal_degree_anchor():
    fd = formal_degree(make_context(1, 1, (1,), (-1,), 2, 0))
    assert fd == ExactScalar.make(1, 0, -1)  # 1/pi


def test_dfd_ratio_consistency():
    for ctx in sweep_contexts(max_n=3, k_extra=2, bottom_max=1, gap_max=1,
                              limit=400):
        lhs = dfd_ratio(ctx)
        rhs = ExactScalar.make(dim_lambda_closed(ctx)) / formal_degree(ctx)
        assert lhs == rhs, ctx.key()
