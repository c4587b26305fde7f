#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

inline bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

inline Integer next_prime(const Integer& n) {
    Integer r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace detail {

// Brent's variant of Pollard rho; n odd composite.
inline Integer pollard_brent(const Integer& n, unsigned long c0) {
    for (unsigned long c = c0;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 64;
        auto f = [&](const Integer& v) -> Integer { return Integer((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = x - ys;
                diff = abs(diff);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void split(const Integer& n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    Integer d = pollard_brent(n, 1);
    split(d, primes);
    split(Integer(n / d), primes);
}

}  // namespace detail

/// Prime factorization of |n| as ascending (prime, exponent) pairs.
inline std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    if (n == 0) throw arith_error("factorization of zero");
    n = abs(n);
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            n /= p;
        }
    }
    detail::split(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1U);
    }
    return out;
}

/// Exponent of the prime p in the nonzero integer n.
inline long integer_valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw arith_error("valuation of zero integer");
    Integer r;
    return static_cast<long>(mpz_remove(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace arithdyn
