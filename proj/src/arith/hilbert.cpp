#include "wittconic/arith/hilbert.hpp"

#include "wittconic/errors.hpp"

#include <algorithm>
#include <tuple>

namespace wittconic {

namespace {

// Odd integer u modulo the square class: (u - 1)/2 and (u^2 - 1)/8 mod 2.
int eps2(const Integer& u) { return mod(Integer((u - 1) / 2), 2) == 0 ? 0 : 1; }
int omega2(const Integer& u) { return mod(Integer((u * u - 1) / 8), 2) == 0 ? 0 : 1; }

// Integer in the same square class as q.
Integer integral_rep(const Rational& q) { return q.get_num() * q.get_den(); }

// Element of the residue field at an odd place: x + y*s with s^2 = nonsq
// (y stays zero for prime fields).
struct Residue {
    Integer x, y;
};

struct ResidueField {
    Integer p;
    bool quadratic = false;
    Integer nonsq = 0;

    Residue mul(const Residue& a, const Residue& b) const
    {
        if (!quadratic) return {mod(Integer(a.x * b.x), p), 0};
        return {mod(Integer(a.x * b.x + nonsq * a.y * b.y), p), mod(Integer(a.x * b.y + a.y * b.x), p)};
    }
    Residue pow(Residue a, Integer e) const
    {
        Residue r{1, 0};
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e /= 2;
        }
        return r;
    }
    Residue inv(const Residue& a) const
    {
        // a^(q - 2) with q the field size.
        Integer q = quadratic ? Integer(p * p) : p;
        return pow(a, Integer(q - 2));
    }
    Integer order() const { return quadratic ? Integer(p * p) : p; }
};

// Integral representative (U + V t) of x up to a square factor.
void integral_pair(const QuadElem& x, Integer& U, Integer& V)
{
    Integer den = lcm(Integer(x.re().get_den()), Integer(x.im().get_den()));
    U = x.re().get_num() * (den / x.re().get_den());
    V = x.im().get_num() * (den / x.im().get_den());
    // Multiplying by den^2 keeps the square class; den * (U + V t) is integral.
    U *= den;
    V *= den;
    // Strip rational square content shared by U and V.
    Integer g = gcd(U, V);
    if (g != 0) {
        for (auto& pp : factor_integer(g)) {
            int e = pp.exponent / 2;
            Integer s = power(pp.prime, static_cast<unsigned long>(e));
            U /= s * s;
            V /= s * s;
        }
    }
}

struct LocalData {
    int val = 0;
    Residue unit;
};

// Valuation and unit residue of the integral element U + V t.
LocalData local_data_integral(const Integer& U, const Integer& V, const QuadPlace& v, const Integer& d,
                              ResidueField& F)
{
    const Integer& p = v.p;
    F.p = p;
    LocalData out;
    switch (v.kind) {
    case QuadPlace::Kind::Inert: {
        F.quadratic = true;
        F.nonsq = mod(d, p);
        int vu = U == 0 ? 1 << 30 : valuation(U, p);
        int vv = V == 0 ? 1 << 30 : valuation(V, p);
        out.val = std::min(vu, vv);
        Integer pv = power(p, static_cast<unsigned long>(out.val));
        out.unit = {mod(Integer(U / pv), p), mod(Integer(V / pv), p)};
        break;
    }
    case QuadPlace::Kind::Ramified: {
        Integer dp = d / p;
        int vu = U == 0 ? 1 << 30 : 2 * valuation(U, p);
        int vv = V == 0 ? 1 << 30 : 2 * valuation(V, p) + 1;
        out.val = std::min(vu, vv);
        int m = out.val / 2;
        Integer pm = power(p, static_cast<unsigned long>(m));
        Integer top = (out.val % 2 == 0) ? Integer(U / pm) : Integer(V / pm);
        Integer dpm = mod(power(dp, static_cast<unsigned long>(m)), p);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), dpm.get_mpz_t(), p.get_mpz_t());
        out.unit = {mod(Integer(top * inv), p), 0};
        break;
    }
    case QuadPlace::Kind::Split: {
        Integer norm = U * U - d * V * V;
        int prec = valuation(norm, p) + 1;
        Integer s = hensel_sqrt(d, v.root, p, prec);
        Integer modulus = power(p, static_cast<unsigned long>(prec));
        Integer image = mod(Integer(U + V * s), modulus);
        out.val = valuation(image, p);
        Integer pv = power(p, static_cast<unsigned long>(out.val));
        out.unit = {mod(Integer(image / pv), p), 0};
        break;
    }
    default:
        throw UnsupportedField("local data at " + v.label());
    }
    return out;
}

LocalData local_data(const QuadElem& x, const QuadPlace& v, const Integer& d, ResidueField& F)
{
    Integer U, V;
    integral_pair(x, U, V);
    return local_data_integral(U, V, v, d, F);
}

int odd_place_symbol(const QuadElem& a, const QuadElem& b, const QuadPlace& v, const Integer& d)
{
    ResidueField F;
    LocalData la = local_data(a, v, d, F);
    LocalData lb = local_data(b, v, d, F);
    // Tame symbol: ((-1)^{vw} a^w b^{-v})^{(q-1)/2}.
    Residue c = F.mul(F.pow(la.unit, lb.val), F.inv(F.pow(lb.unit, la.val)));
    if ((la.val * lb.val) % 2) c = {mod(Integer(-c.x), F.p), mod(Integer(-c.y), F.p)};
    Residue r = F.pow(c, (F.order() - 1) / 2);
    if (r.x == 1 && r.y == 0) return 1;
    if (r.x == F.p - 1 && r.y == 0) return -1;
    throw InvalidInput("tame symbol out of range");
}

int kind_rank(QuadPlace::Kind k) { return static_cast<int>(k); }

// s in Z with s^2 = d mod 2^bits and s = 1 mod 4, for d = 1 mod 8.
Integer two_adic_sqrt(const Integer& d, unsigned long bits)
{
    Integer s = 1;
    for (unsigned long k = 3; k < bits; ++k) {
        Integer m = Integer(1) << (k + 1);
        if (mod(Integer(s * s - d), m) != 0) s += Integer(1) << (k - 1);
    }
    if (mod(s, 4) == 3) s = (Integer(1) << bits) - s;
    return s;
}

struct TwoAdicImage {
    int val;
    Integer unit;  // odd residue mod 8
};

// Image of x under t -> branch * s in Q_2: valuation and unit mod 8. The
// precision doubles until three bits past the valuation are certain.
TwoAdicImage two_adic_image(const QuadElem& x, int branch, const Integer& d)
{
    Integer den = lcm(Integer(x.re().get_den()), Integer(x.im().get_den()));
    Integer U = x.re().get_num() * (den / x.re().get_den());
    Integer V = x.im().get_num() * (den / x.im().get_den());
    int vden = valuation(den, Integer(2));
    Integer den_odd = den >> static_cast<unsigned long>(vden);
    for (unsigned long bits = 64;; bits *= 2) {
        Integer s = two_adic_sqrt(d, bits);
        if (branch < 0) s = -s;
        // s is only determined modulo 2^(bits - 1).
        Integer W = mod(Integer(U + V * s), Integer(Integer(1) << (bits - 1)));
        if (W == 0) continue;
        int v = valuation(W, Integer(2));
        if (static_cast<unsigned long>(v) + 3 > bits - 1) continue;
        Integer unit = mod(Integer((W >> static_cast<unsigned long>(v)) * den_odd), Integer(8));
        return {v - vden, unit};
    }
}

} // namespace

int hilbert_symbol_q(const Rational& alpha, const Rational& beta, const Integer& place)
{
    if (alpha == 0 || beta == 0) throw InvalidInput("hilbert symbol of zero");
    if (place == 0) return (alpha < 0 && beta < 0) ? -1 : 1;
    Integer a = integral_rep(alpha), b = integral_rep(beta);
    const Integer& p = place;
    int va = valuation(a, p), vb = valuation(b, p);
    Integer u = a / power(p, static_cast<unsigned long>(va));
    Integer w = b / power(p, static_cast<unsigned long>(vb));
    if (p == 2) {
        int e = eps2(u) * eps2(w) + va * omega2(w) + vb * omega2(u);
        return e % 2 ? -1 : 1;
    }
    int s = 1;
    if ((va * vb) % 2 && mod(p, 4) == 3) s = -s;
    if (vb % 2) s *= legendre(u, p);
    if (va % 2) s *= legendre(w, p);
    return s;
}

std::vector<Integer> relevant_places_q(const std::vector<Rational>& values)
{
    std::vector<Integer> primes{2};
    for (auto& q : values)
        for (auto& p : prime_support(q)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<Integer> out{real_place};
    out.insert(out.end(), primes.begin(), primes.end());
    return out;
}

std::string QuadPlace::label() const
{
    switch (kind) {
    case Kind::Real: return branch > 0 ? "real+" : "real-";
    case Kind::Inert: return "inert:" + p.get_str();
    case Kind::Split: return "split:" + p.get_str() + ":" + root.get_str();
    case Kind::Ramified: return "ramified:" + p.get_str();
    case Kind::Dyadic: return "dyadic";
    case Kind::DyadicSplit: return branch > 0 ? "dyadic+" : "dyadic-";
    }
    return "?";
}

bool operator<(const QuadPlace& a, const QuadPlace& b)
{
    return std::make_tuple(a.p, kind_rank(a.kind), -a.branch) < std::make_tuple(b.p, kind_rank(b.kind), -b.branch);
}

bool operator==(const QuadPlace& a, const QuadPlace& b)
{
    return a.kind == b.kind && a.p == b.p && a.branch == b.branch;
}

bool dyadic_split(const Integer& d) { return mod(d, 8) == 1; }

std::vector<QuadPlace> places_above(const Integer& d, const Integer& p)
{
    using K = QuadPlace::Kind;
    std::vector<QuadPlace> out;
    if (p == 0) {
        if (d > 0) {
            out.push_back({K::Real, 0, 1, 0});
            out.push_back({K::Real, 0, -1, 0});
        }
        return out;
    }
    if (p == 2) {
        if (dyadic_split(d)) {
            out.push_back({K::DyadicSplit, 2, 1, 0});
            out.push_back({K::DyadicSplit, 2, -1, 0});
        } else {
            out.push_back({K::Dyadic, 2, 0, 0});
        }
        return out;
    }
    Integer dm = mod(d, p);
    if (dm == 0) {
        out.push_back({K::Ramified, p, 0, 0});
    } else if (legendre(dm, p) == 1) {
        Integer r = sqrt_mod_prime(dm, p);
        Integer r2 = p - r;
        if (r2 < r) std::swap(r, r2);
        out.push_back({K::Split, p, 1, r});
        out.push_back({K::Split, p, -1, r2});
    } else {
        out.push_back({K::Inert, p, 0, 0});
    }
    return out;
}

std::vector<QuadPlace> relevant_places_quad(const Integer& d, const std::vector<QuadElem>& values)
{
    std::vector<Integer> primes;
    for (auto& x : values) {
        if (x.is_zero()) continue;
        Integer den = lcm(Integer(x.re().get_den()), Integer(x.im().get_den()));
        Integer U = x.re().get_num() * (den / x.re().get_den());
        Integer V = x.im().get_num() * (den / x.im().get_den());
        Integer n = U * U - d * V * V;
        for (auto& pp : factor_integer(n)) primes.push_back(pp.prime);
        for (auto& pp : factor_integer(den)) primes.push_back(pp.prime);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<QuadPlace> out = places_above(d, 0);
    auto dy = places_above(d, 2);
    out.insert(out.end(), dy.begin(), dy.end());
    for (auto& p : primes) {
        if (p == 2) continue;
        auto ps = places_above(d, p);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    std::stable_sort(out.begin(), out.end());
    return out;
}

int real_sign(const QuadElem& x, const QuadPlace& v, const Integer& d)
{
    // Sign of re + branch * im * sqrt(d).
    Rational u = x.re(), w = x.im() * v.branch;
    int su = sgn(u), sw = sgn(w);
    if (su == 0) return sw;
    if (sw == 0 || su == sw) return su;
    Rational lhs = u * u, rhs = w * w * Rational(d);
    return lhs > rhs ? su : sw;
}

int quad_valuation(const QuadElem& x, const QuadPlace& v, const Integer& d)
{
    if (x.is_zero()) throw InvalidInput("valuation of zero");
    Integer den = lcm(Integer(x.re().get_den()), Integer(x.im().get_den()));
    QuadElem scaled = x * QuadElem(Rational(den));
    ResidueField F;
    LocalData ld = local_data_integral(scaled.re().get_num(), scaled.im().get_num(), v, d, F);
    int e = (v.kind == QuadPlace::Kind::Ramified) ? 2 : 1;
    return ld.val - e * valuation(den, v.p);
}

int hilbert_symbol_quadfield(const QuadElem& alpha, const QuadElem& beta, const QuadPlace& v, const Integer& d)
{
    if (alpha.is_zero() || beta.is_zero()) throw InvalidInput("hilbert symbol of zero");
    switch (v.kind) {
    case QuadPlace::Kind::Real:
        return (real_sign(alpha, v, d) < 0 && real_sign(beta, v, d) < 0) ? -1 : 1;
    case QuadPlace::Kind::Dyadic: {
        int prod = 1;
        for (auto& w : relevant_places_quad(d, {alpha, beta}))
            if (w.kind != QuadPlace::Kind::Dyadic) prod *= hilbert_symbol_quadfield(alpha, beta, w, d);
        return prod;
    }
    case QuadPlace::Kind::DyadicSplit: {
        TwoAdicImage a = two_adic_image(alpha.in_field(d), v.branch, d);
        TwoAdicImage b = two_adic_image(beta.in_field(d), v.branch, d);
        int e = eps2(a.unit) * eps2(b.unit) + (a.val & 1) * omega2(b.unit) + (b.val & 1) * omega2(a.unit);
        return e % 2 ? -1 : 1;
    }
    default:
        return odd_place_symbol(alpha.in_field(d), beta.in_field(d), v, d);
    }
}

bool is_square_q(const Rational& c) { return is_square(c); }

bool is_square_quad(const QuadElem& c, const Integer& d) { return quad_sqrt(c, d).has_value(); }

} // namespace wittconic
