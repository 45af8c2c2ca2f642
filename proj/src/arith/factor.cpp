#include "wittconic/arith/factor.hpp"

#include "wittconic/errors.hpp"

#include <algorithm>
#include <functional>

namespace wittconic {

namespace {

std::vector<Integer> positive_divisors(const Integer& n)
{
    std::vector<Integer> divs{1};
    for (auto& pp : factor_integer(n)) {
        std::vector<Integer> next;
        for (auto& d : divs) {
            Integer m = d;
            for (int e = 0; e <= pp.exponent; ++e) {
                next.push_back(m);
                m *= pp.prime;
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Poly from_integers(const std::vector<Integer>& v)
{
    std::vector<Rational> c;
    for (auto& n : v) c.emplace_back(n);
    return Poly(std::move(c));
}

// Rational roots of a squarefree polynomial, as monic linear factors.
std::vector<Poly> linear_factors(const Poly& p)
{
    Rational scale;
    auto z = primitive_integer_coeffs(p, scale);
    std::vector<Poly> out;
    if (z.empty()) return out;
    if (z[0] == 0) out.push_back(Poly::x());
    size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low + 1 >= z.size()) return out;
    auto nums = positive_divisors(z[low]);
    auto dens = positive_divisors(z.back());
    std::vector<Rational> roots;
    for (auto& q : dens)
        for (auto& n : nums)
            for (int s : {1, -1}) {
                Rational r(s * n, q);
                r.canonicalize();
                if (p.eval(r) == 0) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (auto& r : roots) out.push_back(Poly({Rational(-r), Rational(1)}));
    return out;
}

// Newton interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<long>& xs, const std::vector<Integer>& ys)
{
    size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    Poly result;
    Poly basis = Poly::constant(1);
    for (size_t i = 0; i < n; ++i) {
        result += basis * dd[i];
        basis *= Poly({Rational(-xs[i]), Rational(1)});
    }
    return result;
}

bool integral(const Poly& p)
{
    for (auto& c : p.coeffs())
        if (c.get_den() != 1) return false;
    return true;
}

// Factor of exact degree k of the primitive squarefree integer polynomial p,
// or the zero polynomial if none exists.
Poly kronecker_factor(const Poly& p, int k)
{
    struct Node {
        long x;
        Integer value;
        size_t ndiv;
    };
    std::vector<Node> pool;
    // Candidate nodes 0, 1, -1, 2, -2, ...
    for (long step = 0; pool.size() < 40 && step <= 400; ++step) {
        long x = (step % 2 ? 1 : -1) * ((step + 1) / 2);
        Rational v = p.eval(Rational(x));
        if (v == 0) continue;
        Integer iv = v.get_num();
        pool.push_back({x, iv, positive_divisors(iv).size()});
    }
    std::stable_sort(pool.begin(), pool.end(), [](const Node& a, const Node& b) { return a.ndiv < b.ndiv; });
    if (pool.size() < static_cast<size_t>(k + 1)) return Poly();
    pool.resize(k + 1);

    std::vector<long> xs;
    std::vector<std::vector<Integer>> choices;
    for (size_t i = 0; i < pool.size(); ++i) {
        xs.push_back(pool[i].x);
        std::vector<Integer> c;
        for (auto& d : positive_divisors(pool[i].value)) {
            c.push_back(d);
            if (i > 0) c.push_back(-d);
        }
        choices.push_back(std::move(c));
    }
    Rational lc = p.lead();
    std::vector<Integer> ys(xs.size());
    Poly found;
    std::function<bool(size_t)> search = [&](size_t i) -> bool {
        if (i == xs.size()) {
            Poly q = interpolate(xs, ys);
            if (q.degree() != k || !integral(q)) return false;
            if (!mpz_divisible_p(lc.get_num().get_mpz_t(), q.lead().get_num().get_mpz_t())) return false;
            if (!divides(q, p)) return false;
            found = q;
            return true;
        }
        for (auto& v : choices[i]) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                Integer diff = v - ys[j];
                long dx = xs[i] - xs[j];
                ok = mpz_divisible_ui_p(diff.get_mpz_t(), static_cast<unsigned long>(dx < 0 ? -dx : dx)) != 0;
            }
            if (!ok) continue;
            ys[i] = v;
            if (search(i + 1)) return true;
        }
        return false;
    };
    search(0);
    return found;
}

// Irreducible monic factors of a squarefree polynomial free of rational roots.
void split_squarefree(const Poly& p, std::vector<Poly>& out)
{
    if (p.degree() <= 0) return;
    if (p.degree() <= 3) {
        out.push_back(p.monic());
        return;
    }
    Rational scale;
    Poly z = from_integers(primitive_integer_coeffs(p, scale));
    for (int k = 2; k <= z.degree() / 2; ++k) {
        Poly q = kronecker_factor(z, k);
        if (q.is_zero()) continue;
        out.push_back(q.monic());
        split_squarefree(exact_div(z, q), out);
        return;
    }
    out.push_back(p.monic());
}

} // namespace

Poly FactorizationQ::expand() const
{
    Poly r = Poly::constant(unit);
    for (auto& [f, m] : factors) r *= power(f, static_cast<unsigned>(m));
    return r;
}

std::vector<Poly> squarefree_decomposition(const Poly& p)
{
    std::vector<Poly> out;
    if (p.degree() <= 0) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = exact_div(f, a);
    Poly c = exact_div(fp, a);
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        out.push_back(g);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

FactorizationQ poly_factor_q(const Poly& p, int degree_bound)
{
    if (p.is_zero()) throw InvalidInput("poly_factor_q: zero polynomial");
    FactorizationQ result;
    result.unit = p.lead();
    auto parts = squarefree_decomposition(p);
    for (size_t k = 0; k < parts.size(); ++k) {
        Poly rest = parts[k];
        if (rest.degree() <= 0) continue;
        std::vector<Poly> irreducibles;
        for (auto& lin : linear_factors(rest)) {
            irreducibles.push_back(lin);
            rest = exact_div(rest, lin);
        }
        if (rest.degree() > degree_bound)
            throw DegreeBound("squarefree part of degree " + std::to_string(rest.degree()) + " exceeds bound " +
                              std::to_string(degree_bound));
        split_squarefree(rest, irreducibles);
        for (auto& f : irreducibles) result.factors.emplace_back(f, static_cast<int>(k + 1));
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    return result;
}

bool is_irreducible_q(const Poly& p, int degree_bound)
{
    if (p.degree() <= 0) return false;
    auto f = poly_factor_q(p, degree_bound);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace wittconic
