#pragma once

// Brute-force oracles that share no code with the library beyond GMP
// itself. They are slow and only meant for small inputs.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

// Trial division; |n| >= 1.
inline std::vector<std::pair<mpz_class, int>> trial_factor(mpz_class n)
{
    std::vector<std::pair<mpz_class, int>> out;
    n = abs(n);
    for (mpz_class p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

inline bool is_square(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    return is_square(mpz_class(c.get_num())) && is_square(mpz_class(c.get_den()));
}

// Euler's criterion by repeated multiplication.
inline int euler_legendre(long a, long p)
{
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    long acc = 1;
    for (long k = 0; k < (p - 1) / 2; ++k) acc = acc * r % p;
    return acc == 1 ? 1 : -1;
}

// Does sum c_i v_i^2 = 0 have a nonzero integer solution with |v_i| <= bound?
// Entries are scaled to integers first.
inline bool bounded_isotropic(const std::vector<mpq_class>& diag, long bound)
{
    mpz_class l = 1;
    for (const auto& c : diag) l = lcm(l, mpz_class(c.get_den()));
    std::vector<mpz_class> coeffs;
    for (const auto& c : diag) coeffs.push_back(mpz_class(c * l));
    const size_t n = coeffs.size();
    std::vector<long> v(n, -bound);
    for (;;) {
        bool nonzero = std::any_of(v.begin(), v.end(), [](long x) { return x != 0; });
        if (nonzero) {
            mpz_class s = 0;
            for (size_t i = 0; i < n; ++i) s += coeffs[i] * v[i] * v[i];
            if (s == 0) return true;
        }
        size_t k = 0;
        while (k < n && v[k] == bound) v[k++] = -bound;
        if (k == n) return false;
        ++v[k];
    }
}

// Hilbert symbol over Q_p (p odd prime, or 0 for R) for integers, by
// searching for a solution of a x^2 + b y^2 = z^2 modulo p^3 with a unit
// coordinate; adequate because p^3 exceeds every valuation used in tests.
inline int hilbert_bruteforce(long a, long b, long p)
{
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    const long m = p * p * p;
    std::vector<char> any_root(m, 0), unit_root(m, 0);
    for (long z = 0; z < m; ++z) {
        any_root[z * z % m] = 1;
        if (z % p) unit_root[z * z % m] = 1;
    }
    const long am = ((a % m) + m) % m, bm = ((b % m) + m) % m;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            long s = (am * (x * x % m) + bm * (y * y % m)) % m;
            bool primitive_xy = x % p || y % p;
            if (primitive_xy ? any_root[s] : unit_root[s]) return 1;
        }
    return -1;
}

} // namespace oracle
