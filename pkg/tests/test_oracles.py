from fractions import Fraction

import pytest

from kinterdict.dual import exact_fractional_optimum
from kinterdict.instance import Instance, InterdictionVector
from kinterdict.nominal import best_integer_packing
from kinterdict.oracles import (
    InstanceTooLargeError,
    TooManyOptimaError,
    brute_force_opt_f,
    brute_force_opt_i,
    min_max_surviving_profit,
    oracle_report,
    vertex_lp_optimum,
)

from conftest import T1, T2, family


def xvec(inst, bits):
    return InterdictionVector.from_bits(bits, inst.c)


def test_opt_i_t1():
    opt, optima = brute_force_opt_i(T1)
    assert opt == 2 and optima == ((1, 0),)


def test_opt_i_budget_covers_everything():
    inst = Instance(n=2, t=1, p=(3, 2), c=(1, 1), W=((2, 2),), B=2, C=(2,))
    opt, optima = brute_force_opt_i(inst)
    assert opt == 0 and (1, 1) in optima


def test_opt_i_zero_budget_is_unhindered_packing():
    inst = Instance(n=2, t=1, p=(3, 2), c=(1, 1), W=((2, 2),), B=0, C=(2,))
    opt, optima = brute_force_opt_i(inst)
    assert opt == best_integer_packing(inst, xvec(inst, (0, 0))).value == 3
    assert optima == ((0, 0),)


def test_opt_i_size_limit():
    with pytest.raises(InstanceTooLargeError):
        brute_force_opt_i(T1, limit=1)


def test_opt_i_optima_cap_overflows_honestly():
    # all-zero profits make every feasible interdiction optimal
    inst = Instance(
        n=10, t=1, p=(0,) * 10, c=(1,) * 10, W=((1,) * 10,), B=10, C=(5,)
    )
    with pytest.raises(TooManyOptimaError):
        brute_force_opt_i(inst, max_optima=100)


def test_opt_f_t1_and_zero_profit():
    value, bits = brute_force_opt_f(T1)
    assert value == 2 and bits == (1, 0)
    inst = Instance(n=2, t=1, p=(0, 0), c=(1, 1), W=((1, 1),), B=0, C=(2,))
    value, _ = brute_force_opt_f(inst)
    assert value == 0


def test_opt_f_t2_matches_dual_candidate_solver():
    value, _ = brute_force_opt_f(T2)
    assert value == 3
    assert value == exact_fractional_optimum(T2)[0]


def test_opt_f_size_limit():
    with pytest.raises(InstanceTooLargeError):
        brute_force_opt_f(T1, limit=1)


def test_p_star_t1():
    assert min_max_surviving_profit(T1) == 2


def test_p_star_zero_when_everything_interdicted():
    inst = Instance(n=2, t=1, p=(3, 2), c=(1, 1), W=((2, 2),), B=2, C=(2,))
    assert min_max_surviving_profit(inst) == 0


def test_p_star_takes_min_over_optima():
    # every feasible interdiction attains the optimum 5; the survivor maxima
    # are 5 except when the five-profit item itself is interdicted (then 3)
    inst = Instance(n=3, t=1, p=(5, 3, 2), c=(2, 1, 1), W=((2, 1, 1),), B=2, C=(2,))
    opt, optima = brute_force_opt_i(inst)
    assert opt == 5 and len(optima) == 5
    maxima = sorted(
        max((inst.p[i] for i in range(3) if not bits[i]), default=0)
        for bits in optima
    )
    assert maxima == [3, 5, 5, 5, 5]
    assert min_max_surviving_profit(inst) == 3


def test_vertex_lp_all_interdicted_is_zero():
    fp = vertex_lp_optimum(T2, xvec(T2, (1, 1)))
    assert fp.value == 0 and all(v == 0 for v in fp.y)


def test_vertex_lp_t2_unrestricted_value():
    fp = vertex_lp_optimum(T2, xvec(T2, (0, 0)))
    assert fp.value == Fraction(14, 3)
    assert fp.y == (Fraction(2, 3), Fraction(2, 3))
    assert fp.frac_support == (0, 1)


def test_vertex_lp_size_limits():
    big = Instance(n=9, t=1, p=(1,) * 9, c=(1,) * 9, W=((1,) * 9,), B=1, C=(3,))
    with pytest.raises(InstanceTooLargeError):
        vertex_lp_optimum(big, xvec(big, (0,) * 9))
    wide = Instance(
        n=2, t=4, p=(1, 1), c=(1, 1), W=((1, 1),) * 4, B=1, C=(2, 2, 2, 2)
    )
    with pytest.raises(InstanceTooLargeError):
        vertex_lp_optimum(wide, xvec(wide, (0, 0)))


def test_oracle_report_t1():
    rep = oracle_report(T1)
    assert rep.opt_i == 2 and rep.opt_f == 2 and rep.p_star == 2
    assert rep.optimal_x_list == ((1, 0),)


def test_oracle_invariants_on_random_families():
    t1_insts = family(seed=90, count=25, n_lo=0, n_hi=8)
    t2_insts = family(seed=91, count=10, n_lo=0, n_hi=5, t=2, wmax=6)
    for inst in t1_insts + t2_insts:
        rep = oracle_report(inst)
        assert rep.opt_i <= rep.opt_f <= (1 + inst.t) * rep.opt_i or (
            rep.opt_i == 0 and rep.opt_f == 0
        )
        if inst.t == 1:
            assert rep.opt_f <= 2 * rep.opt_i or rep.opt_i == 0
        assert rep.opt_i >= rep.opt_f - rep.p_star
        value, _, _ = exact_fractional_optimum(inst)
        assert value == rep.opt_f
