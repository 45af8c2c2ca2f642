#include "wittconic/arith/integer.hpp"

#include "wittconic/errors.hpp"

#include <algorithm>
#include <map>

namespace wittconic {

namespace {

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_rho(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1, q = 1, ys;
        auto step = [&](const Integer& v) { return mod(Integer(v * v + c), n); };
        unsigned long r = 1;
        const unsigned long m = 64;
        do {
            x = y;
            for (unsigned long k = 0; k < r; ++k) y = step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long t = 0; t < std::min(m, r - k); ++t) {
                    y = step(y);
                    q = mod(Integer(q * abs(Integer(x - y))), n);
                }
                d = gcd(q, n);
                k += m;
            } while (k < r && d == 1);
            r *= 2;
        } while (d == 1);
        if (d == n) {
            do {
                ys = step(ys);
                d = gcd(Integer(abs(Integer(x - ys))), n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(const Integer& n, std::map<Integer, int>& out)
{
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

} // namespace

Integer mod(const Integer& n, const Integer& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer power(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::vector<PrimePower> factor_integer(const Integer& n)
{
    if (n == 0) throw InvalidInput("factor_integer: zero");
    Integer m = abs(n);
    std::map<Integer, int> found;
    // Cheap trial division first keeps rho away from tiny factors.
    for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++found[Integer(p)];
            m /= p;
        }
    }
    factor_into(m, found);
    std::vector<PrimePower> out;
    for (auto& [p, e] : found) out.push_back({p, e});
    return out;
}

std::vector<Integer> prime_support(const Rational& q)
{
    std::vector<Integer> out;
    if (q == 0) return out;
    for (auto& pp : factor_integer(q.get_num())) out.push_back(pp.prime);
    for (auto& pp : factor_integer(q.get_den())) out.push_back(pp.prime);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Integer squarefree_part(const Integer& n)
{
    if (n == 0) throw InvalidInput("squarefree_part: zero");
    Integer s = sgn(n);
    for (auto& pp : factor_integer(n))
        if (pp.exponent % 2) s *= pp.prime;
    return s;
}

Integer squarefree_part(const Rational& q)
{
    // q = n/d has the square class of n*d.
    return squarefree_part(Integer(q.get_num() * q.get_den()));
}

Rational square_cofactor(const Rational& q)
{
    Rational ratio = q / Rational(squarefree_part(q));
    auto r = rational_sqrt(ratio);
    return *r;
}

int valuation(const Integer& n, const Integer& p)
{
    if (n == 0) throw InvalidInput("valuation of zero");
    Integer tmp;
    return static_cast<int>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& q, const Integer& p)
{
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

bool is_square(const Rational& q) { return is_square(q.get_num()) && is_square(q.get_den()); }

std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (!is_square(q)) return std::nullopt;
    Integer n = sqrt(q.get_num()), d = sqrt(q.get_den());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

Integer sqrt_mod_prime(const Integer& a_in, const Integer& p)
{
    Integer a = mod(a_in, p);
    if (a == 0) return 0;
    if (legendre(a, p) != 1) throw InvalidInput("sqrt_mod_prime: not a square");
    Integer r;
    if (mod(p, 4) == 3) {
        Integer e = (p + 1) / 4;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    // Tonelli-Shanks.
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (legendre(z, p) != -1) ++z;
    Integer c, t, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = mod(Integer(tt * tt), p);
            ++i;
        }
        Integer b = c;
        for (unsigned long k = 0; k + i + 1 < m; ++k) b = mod(Integer(b * b), p);
        r = mod(Integer(r * b), p);
        c = mod(Integer(b * b), p);
        t = mod(Integer(t * c), p);
        m = i;
    }
    return r;
}

Integer hensel_sqrt(const Integer& d, const Integer& root0, const Integer& p, int precision)
{
    Integer s = mod(root0, p);
    Integer modulus = p;
    for (int k = 1; k < precision; ++k) {
        modulus *= p;
        // Newton step s <- s - (s^2 - d) / (2s) modulo the new modulus.
        Integer inv;
        Integer two_s = 2 * s;
        mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), modulus.get_mpz_t());
        s = mod(Integer(s - (s * s - d) * inv), modulus);
    }
    return s;
}

} // namespace wittconic
