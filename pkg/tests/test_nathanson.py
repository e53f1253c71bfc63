import pytest

from altchains import (
    BadParams,
    SetClass,
    affine,
    build_base,
    check_interval_lemma,
    classify,
    interval,
    make_set,
    sumset,
    symmetry_point,
)


def valid_param_triples(max_m, max_k):
    for m in range(4, max_m + 1):
        for d in range(1, m):
            if 2 * d == m:
                continue
            k_min = 3 if 2 * d < m else 4
            for k in range(k_min, max_k + 1):
                yield m, d, k


class TestBuildBase:
    def test_conway_derivation(self, conway, conway_params):
        p = conway_params
        assert p.B == make_set([0, 2, 3])
        assert p.L == make_set([3, 7, 11])
        assert p.a_star == 14
        assert p.A_star == make_set([0, 2, 3, 7, 11, 12, 14])
        assert p.A == conway

    def test_d_half_m_rejected(self):
        with pytest.raises(BadParams, match="m/2"):
            build_base(4, 2, 3)

    def test_large_d_needs_larger_k(self):
        with pytest.raises(BadParams, match="k"):
            build_base(8, 6, 3)
        build_base(8, 6, 4)

    @pytest.mark.parametrize("m, d, k", [(3, 1, 3), (4, 0, 3), (4, 4, 3), (5, 1, 2)])
    def test_out_of_range(self, m, d, k):
        with pytest.raises(BadParams):
            build_base(m, d, k)

    def test_two_m_is_a_fresh_sum(self, conway_params):
        p = conway_params
        assert 2 * p.m in sumset(p.A)
        assert 2 * p.m not in sumset(p.A_star)

    def test_sweep_mstd_and_symmetric(self):
        for m, d, k in valid_param_triples(16, 6):
            p = build_base(m, d, k)
            assert classify(p.A) is SetClass.MSTD, (m, d, k)
            # the frame without m is a mirror image of itself about a*
            assert affine(p.A_star, -1, p.a_star) == p.A_star, (m, d, k)
            assert symmetry_point(p.A_star) == p.a_star, (m, d, k)


class TestIntervalLemma:
    def test_m5(self):
        assert check_interval_lemma(5, 2) is True

    def test_m20(self):
        assert check_interval_lemma(20, 10) is True

    def test_r_out_of_range(self):
        with pytest.raises(BadParams):
            check_interval_lemma(4, 2)

    def test_m_out_of_range(self):
        with pytest.raises(BadParams):
            check_interval_lemma(3, 2)

    def test_lemma_statement_directly(self):
        # independent spot check of the identity the lemma asserts
        B = make_set(v for v in range(5) if v != 2)
        assert sumset(B) == interval(0, 8)

    @pytest.mark.parametrize("m", range(4, 13))
    def test_sweep(self, m):
        assert all(check_interval_lemma(m, r) for r in range(2, m - 2))
