import itertools
import random

import pytest

from ucyclic.gfp import (BudgetError, FpPoly, PrimeParams, divisors_xn_minus_1,
                         factor_xn_minus_1, fp_cyclic_min_weight, is_prime,
                         poly_gcd, poly_lcm, poly_xgcd)


def P(coeffs, p):
    return FpPoly(coeffs, p)


def brute_min_weight(gen, params):
    # independent oracle: enumerate all message polynomials with itertools
    p, n = params.p, params.n
    dim = n - gen.degree
    best = None
    for msg in itertools.product(range(p), repeat=dim):
        if not any(msg):
            continue
        cw = [0] * n
        for j, m in enumerate(msg):
            if m:
                for i, c in enumerate(gen.coeffs):
                    cw[(i + j) % n] = (cw[(i + j) % n] + m * c) % p
        w = sum(1 for c in cw if c)
        if best is None or w < best:
            best = w
    return best


class TestPrimeParams:
    def test_valid(self):
        pp = PrimeParams(3, 4, 5)
        assert pp.coprime

    def test_invalid_p(self):
        with pytest.raises(ValueError, match="prime"):
            PrimeParams(4, 1, 5)
        with pytest.raises(ValueError, match="prime"):
            PrimeParams(1, 1, 5)

    def test_bounds(self):
        with pytest.raises(ValueError):
            PrimeParams(2, 0, 5)
        with pytest.raises(ValueError):
            PrimeParams(2, 9, 5)
        with pytest.raises(ValueError):
            PrimeParams(2, 1, 0)
        with pytest.raises(ValueError):
            PrimeParams(2, 1, 65)

    def test_is_prime_small(self):
        primes = [m for m in range(60) if is_prime(m)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


class TestDivmod:
    def test_x5_minus_1_by_x_minus_1(self):
        # x^5 - 1 = (x - 1)(x^4 + x^3 + x^2 + x + 1) over F_3
        q, r = divmod(FpPoly.xn_minus_1(5, 3), P([2, 1], 3))
        assert q == P([1, 1, 1, 1, 1], 3)
        assert r.is_zero

    def test_identity_divisor(self):
        f = P([2, 0, 1, 1], 3)
        q, r = divmod(f, FpPoly.one(3))
        assert q == f and r.is_zero

    def test_long_division(self):
        a, b = P([-1, 0, 1], 3), P([1, 1, 1], 3)
        q, r = divmod(a, b)
        assert q == FpPoly.one(3)
        assert r == P([1, 2], 3)
        assert b * q + r == a

    def test_zero_divisor(self):
        with pytest.raises(ValueError, match="zero divisor polynomial"):
            divmod(P([1], 3), FpPoly.zero(3))

    def test_remultiplication_random(self):
        rng = random.Random(11)
        for _ in range(300):
            p = rng.choice([2, 3, 5, 7])
            a = P([rng.randrange(p) for _ in range(rng.randint(0, 9))], p)
            b = P([rng.randrange(p) for _ in range(rng.randint(1, 6))], p)
            if b.is_zero:
                continue
            q, r = divmod(a, b)
            assert b * q + r == a
            assert r.degree < b.degree


class TestXgcd:
    def test_common_root(self):
        # gcd(x^2 - 1, x^2 + x + 1) = x + 2 over F_3 (both vanish at x = 1)
        a, b = P([-1, 0, 1], 3), P([1, 1, 1], 3)
        g, s, t = poly_xgcd(a, b)
        assert g == P([2, 1], 3)
        assert s * a + t * b == g
        assert (a % g).is_zero and (b % g).is_zero

    def test_gcd_with_zero(self):
        f = P([2, 2], 3)
        g, s, t = poly_xgcd(f, FpPoly.zero(3))
        assert g == f.monic()
        assert s * f + t * FpPoly.zero(3) == g

    def test_coprime_factors(self):
        g, _, _ = poly_xgcd(P([2, 1], 3), P([1, 1, 1, 1, 1], 3))
        assert g == FpPoly.one(3)

    def test_both_zero(self):
        with pytest.raises(ValueError):
            poly_xgcd(FpPoly.zero(3), FpPoly.zero(3))

    def test_bezout_random(self):
        rng = random.Random(5)
        for _ in range(200):
            p = rng.choice([2, 3, 5])
            a = P([rng.randrange(p) for _ in range(rng.randint(0, 6))], p)
            b = P([rng.randrange(p) for _ in range(rng.randint(0, 6))], p)
            if a.is_zero and b.is_zero:
                continue
            g, s, t = poly_xgcd(a, b)
            assert s * a + t * b == g
            assert g.lead == 1
            if not a.is_zero:
                assert (a % g).is_zero


class TestFactor:
    def test_p3_n5(self):
        facs = factor_xn_minus_1(PrimeParams(3, 1, 5))
        assert facs == [(P([2, 1], 3), 1), (P([1, 1, 1, 1, 1], 3), 1)]

    def test_p3_n9_frobenius(self):
        assert factor_xn_minus_1(PrimeParams(3, 1, 9)) == [(P([2, 1], 3), 9)]

    def test_p2_n3(self):
        facs = factor_xn_minus_1(PrimeParams(2, 1, 3))
        assert facs == [(P([1, 1], 2), 1), (P([1, 1, 1], 2), 1)]

    @pytest.mark.parametrize("p,n", [(2, 6), (2, 12), (3, 8), (3, 12), (5, 10), (7, 6), (2, 31)])
    def test_product_reconstruction(self, p, n):
        params = PrimeParams(p, 1, n)
        prod = FpPoly.one(p)
        for q, e in factor_xn_minus_1(params):
            prod = prod * q ** e
        assert prod == FpPoly.xn_minus_1(n, p)

    @pytest.mark.parametrize("p,n", [(2, 5), (2, 6), (3, 5), (3, 6), (5, 4), (5, 15)])
    def test_coprime_iff_squarefree(self, p, n):
        from math import gcd
        mults = [e for _, e in factor_xn_minus_1(PrimeParams(p, 1, n))]
        assert (gcd(n, p) == 1) == all(e == 1 for e in mults)

    @pytest.mark.parametrize("p,m", [(2, 3), (2, 7), (3, 4), (5, 3)])
    def test_frobenius_identity(self, p, m):
        small = factor_xn_minus_1(PrimeParams(p, 1, m))
        big = factor_xn_minus_1(PrimeParams(p, 1, p * m))
        assert big == [(q, p * e) for q, e in small]

    def test_sorted_by_degree_then_coeffs(self):
        facs = factor_xn_minus_1(PrimeParams(2, 1, 15))
        keys = [(q.degree, q.coeffs) for q, _ in facs]
        assert keys == sorted(keys)


class TestDivisors:
    def test_p3_n5(self):
        divs = divisors_xn_minus_1(PrimeParams(3, 1, 5))
        assert divs == [FpPoly.one(3), P([2, 1], 3), P([1, 1, 1, 1, 1], 3),
                        FpPoly.xn_minus_1(5, 3)]

    def test_p2_n1(self):
        assert divisors_xn_minus_1(PrimeParams(2, 1, 1)) == [FpPoly.one(2), P([1, 1], 2)]

    def test_p2_n4_chain(self):
        divs = divisors_xn_minus_1(PrimeParams(2, 1, 4))
        assert divs == [P([1, 1], 2) ** e for e in range(5)]

    @pytest.mark.parametrize("p,n", [(2, 6), (3, 4), (5, 4)])
    def test_lattice_closed_under_gcd_lcm(self, p, n):
        divs = divisors_xn_minus_1(PrimeParams(p, 1, n))
        dset = set(divs)
        for a in divs:
            for b in divs:
                assert poly_gcd(a, b) in dset
                assert poly_lcm(a, b) in dset

    def test_cap(self):
        with pytest.raises(ValueError, match="too large"):
            divisors_xn_minus_1(PrimeParams(2, 1, 32), cap=8)


class TestMinWeight:
    def test_g2_full_weight(self):
        assert fp_cyclic_min_weight(P([1, 1, 1, 1, 1], 3), PrimeParams(3, 1, 5)) == 5

    def test_unit_generator(self):
        assert fp_cyclic_min_weight(FpPoly.one(5), PrimeParams(5, 1, 4)) == 1

    def test_x_plus_1_pow4_n8(self):
        # (x+1)^4 = x^4 + 1 over F_2; m + x^4*m has weight 2*wt(m), so min is 2
        params = PrimeParams(2, 1, 8)
        gen = P([1, 1], 2) ** 4
        assert gen == P([1, 0, 0, 0, 1], 2)
        assert fp_cyclic_min_weight(gen, params) == 2
        assert brute_min_weight(gen, params) == 2

    @pytest.mark.parametrize("p,n,coeffs", [
        (3, 9, [2, 1]), (2, 7, [1, 1, 0, 1]), (3, 5, [2, 1]), (5, 4, [4, 1]),
    ])
    def test_against_independent_oracle(self, p, n, coeffs):
        params = PrimeParams(p, 1, n)
        gen = P(coeffs, p)
        assert (FpPoly.xn_minus_1(n, p) % gen).is_zero
        assert fp_cyclic_min_weight(gen, params) == brute_min_weight(gen, params)

    def test_zero_code(self):
        with pytest.raises(ValueError, match="zero code"):
            fp_cyclic_min_weight(FpPoly.xn_minus_1(5, 3), PrimeParams(3, 1, 5))
        with pytest.raises(ValueError, match="zero code"):
            fp_cyclic_min_weight(FpPoly.zero(3), PrimeParams(3, 1, 5))

    def test_non_divisor(self):
        with pytest.raises(ValueError, match="divide"):
            fp_cyclic_min_weight(P([1, 1], 3), PrimeParams(3, 1, 5))

    def test_budget(self):
        with pytest.raises(BudgetError) as exc:
            fp_cyclic_min_weight(P([2, 1], 3), PrimeParams(3, 1, 12), budget=100)
        assert exc.value.required == 3 ** 11


class TestPolyBasics:
    def test_degree_sentinel(self):
        z = FpPoly.zero(3)
        assert z.degree < -10 ** 9
        assert z.degree < FpPoly.one(3).degree

    def test_trailing_zeros_stripped(self):
        assert P([1, 2, 0, 0], 5).coeffs == (1, 2)
        assert P([0, 0], 5).is_zero

    def test_mod_xn_minus_1_folding(self):
        # x^5 = x at n = 4
        f = FpPoly.monomial(1, 5, 3).mod_xn_minus_1(4)
        assert f == P([0, 1], 3)

    def test_pow(self):
        assert P([2, 1], 3) ** 3 == P([2, 0, 0, 1], 3)  # (x-1)^3 = x^3 - 1 over F_3
