#include "wittconic/forms/witt_q.hpp"

#include "wittconic/arith/hilbert.hpp"

#include <numeric>

namespace wittconic {

std::string to_string(WittVerdict::Tag t)
{
    switch (t) {
    case WittVerdict::Tag::Zero: return "Zero";
    case WittVerdict::Tag::NonZero: return "NonZero";
    case WittVerdict::Tag::Unknown: break;
    }
    return "Unknown";
}

Diagonalization<Rational> diagonalize_q(const RMatrix& G) { return diagonalize(G, 1, IdentityInvolution{}); }

int signature(const std::vector<Rational>& diag)
{
    int s = 0;
    for (auto& c : diag) s += sgn(c) > 0 ? 1 : (sgn(c) < 0 ? -1 : 0);
    return s;
}

Integer signed_discriminant_class(const std::vector<Rational>& diag)
{
    Rational d = 1;
    for (auto& c : diag) d *= c;
    size_t n = diag.size();
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return squarefree_part(d);
}

int hasse_invariant(const std::vector<Rational>& diag, const Integer& place)
{
    int s = 1;
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) s *= hilbert_symbol_q(diag[i], diag[j], place);
    return s;
}

int hyperbolic_hasse(size_t m, const Integer& place)
{
    return (m * (m - 1) / 2) % 2 == 0 ? 1 : hilbert_symbol_q(Rational(-1), Rational(-1), place);
}

bool is_local_square(const Rational& x, const Integer& place)
{
    if (x == 0) return true;
    if (place == 0) return x > 0;
    int v = valuation(x, place);
    if (v % 2 != 0) return false;
    Rational u = x;
    if (v > 0) u /= Rational(power(place, static_cast<unsigned long>(v)));
    if (v < 0) u *= Rational(power(place, static_cast<unsigned long>(-v)));
    Integer nd = u.get_num() * u.get_den();
    if (place == 2) return mod(nd, Integer(8)) == 1;
    return legendre(nd, place) == 1;
}

bool is_isotropic_local(const std::vector<Rational>& diag, const Integer& place)
{
    size_t n = diag.size();
    for (auto& c : diag)
        if (c == 0) return n > 1;
    if (n <= 1) return false;
    if (place == 0) {
        bool pos = false, neg = false;
        for (auto& c : diag) (c > 0 ? pos : neg) = true;
        return pos && neg;
    }
    if (n >= 5) return true;
    Rational d = 1;
    for (auto& c : diag) d *= c;
    int eps = hasse_invariant(diag, place);
    if (n == 2) return is_local_square(-d, place);
    if (n == 3) return hilbert_symbol_q(Rational(-1), -d, place) == eps;
    return !(is_local_square(d, place) && eps == -hilbert_symbol_q(Rational(-1), Rational(-1), place));
}

bool is_isotropic_q(const std::vector<Rational>& diag)
{
    if (diag.size() <= 1) return false;
    for (auto& c : diag)
        if (c == 0) return true;
    if (diag.size() == 2) return is_square(-diag[0] * diag[1]);
    for (auto& v : relevant_places_q(diag))
        if (!is_isotropic_local(diag, v)) return false;
    return true;
}

namespace {

// r with r^2 = a modulo |m| (m squarefree), by CRT over the prime factors.
std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& m)
{
    Integer r = 0, modulus = 1;
    for (const auto& pp : factor_integer(m)) {
        const Integer& p = pp.prime;
        Integer ap = mod(a, p), root;
        if (ap == 0 || p == 2) {
            root = ap;
        } else {
            if (legendre(ap, p) != 1) return std::nullopt;
            root = sqrt_mod_prime(ap, p);
        }
        // r = r mod modulus, r = root mod p
        Integer inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
        r += modulus * mod(Integer((root - r) * inv), p);
        modulus *= p;
    }
    return mod(r, modulus);
}

// z^2 = a x^2 + b y^2 for squarefree integers a, b, by Legendre descent:
// with r^2 - a = b t s^2 (t squarefree, |t| < |b|) a solution for (a, t)
// multiplied by r + sqrt(a) in Q(sqrt a) solves (a, b).
std::optional<std::array<Integer, 3>> legendre_descent(Integer a, Integer b)
{
    bool swapped = false;
    if (abs(a) > abs(b)) {
        std::swap(a, b);
        swapped = true;
    }
    auto ordered = [&](Integer x, Integer y, Integer z) {
        return swapped ? std::array<Integer, 3>{y, x, z} : std::array<Integer, 3>{x, y, z};
    };
    if (a == 1) return ordered(1, 0, 1);
    if (b == 1) return ordered(0, 1, 1);
    if (abs(b) == 1) return std::nullopt;  // a = b = -1
    auto r0 = sqrt_mod_squarefree(a, b);
    if (!r0) return std::nullopt;
    Integer m = abs(b), r = *r0;
    if (2 * r > m) r -= m;
    Integer t0 = (r * r - a) / b;
    if (t0 == 0) return std::nullopt;  // a is a square, excluded above
    Integer t = squarefree_part(t0);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), Integer(t0 / t).get_mpz_t());
    auto sub = legendre_descent(a, t);
    if (!sub) return std::nullopt;
    auto [x1, y1, z1] = *sub;
    return ordered(z1 + r * x1, t * y1 * s, z1 * r + a * x1);
}

} // namespace

std::optional<std::array<Rational, 3>> solve_ternary(const Rational& a, const Rational& b, const Rational& c)
{
    std::array<Rational, 3> A{a, b, c};
    for (int k = 0; k < 3; ++k)
        if (A[k] == 0) {
            std::array<Rational, 3> v{0, 0, 0};
            v[k] = 1;
            return v;
        }
    // A_k = C_k / mu_k^2 with C_k squarefree; then C0 X^2 + C1 Y^2 + C2 Z^2 = 0
    // becomes (C2 Z)^2 = (-C0 C2) X^2 + (-C1 C2) Y^2.
    std::array<Integer, 3> C;
    std::array<Rational, 3> mu;
    for (int k = 0; k < 3; ++k) {
        C[k] = squarefree_part(A[k]);
        mu[k] = Rational(1) / square_cofactor(A[k]);
    }
    if ((C[0] > 0) == (C[1] > 0) && (C[1] > 0) == (C[2] > 0)) return std::nullopt;
    Integer u = -C[0] * C[2], v = -C[1] * C[2];
    Integer su = squarefree_part(u), sv = squarefree_part(v);
    Rational ku = square_cofactor(Rational(u)), kv = square_cofactor(Rational(v));
    auto sol = legendre_descent(su, sv);
    if (!sol) return std::nullopt;
    Rational X = Rational((*sol)[0]) / ku, Y = Rational((*sol)[1]) / kv, Z = Rational((*sol)[2]) / Rational(C[2]);
    std::array<Rational, 3> out{mu[0] * X, mu[1] * Y, mu[2] * Z};
    if (A[0] * out[0] * out[0] + A[1] * out[1] * out[1] + A[2] * out[2] * out[2] != 0)
        throw InvalidInput("internal: ternary solution failed");
    return out;
}

namespace {

Rational evaluate_diag(const std::vector<Rational>& diag, const std::vector<Rational>& v)
{
    Rational s = 0;
    for (size_t k = 0; k < diag.size(); ++k) s += diag[k] * v[k] * v[k];
    return s;
}

} // namespace

std::optional<std::vector<Rational>> find_isotropic(const std::vector<Rational>& diag)
{
    size_t n = diag.size();
    if (n <= 1) return std::nullopt;
    for (size_t k = 0; k < n; ++k)
        if (diag[k] == 0) {
            std::vector<Rational> v(n, Rational(0));
            v[k] = 1;
            return v;
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (auto r = rational_sqrt(-diag[j] / diag[i])) {
                std::vector<Rational> v(n, Rational(0));
                v[i] = *r;
                v[j] = 1;
                return v;
            }
    if (n == 2) return std::nullopt;
    if (n == 3) {
        auto s = solve_ternary(diag[0], diag[1], diag[2]);
        if (!s) return std::nullopt;
        return std::vector<Rational>(s->begin(), s->end());
    }
    if (!is_isotropic_q(diag)) return std::nullopt;
    std::vector<Rational> rest(diag.begin() + 2, diag.end());
    if (rest.size() >= 3 && is_isotropic_q(rest)) {
        if (auto w = find_isotropic(rest)) {
            std::vector<Rational> v{0, 0};
            v.insert(v.end(), w->begin(), w->end());
            return v;
        }
    }
    std::vector<Rational> neg;
    for (auto& c : rest) neg.push_back(-c);
    // t = c1 x^2 + c2 y^2 must also be represented by -rest.
    const long bound = 25;
    for (long s = 1; s <= 2 * bound; ++s)
        for (long x = std::max(0L, s - bound); x <= std::min(s, bound); ++x) {
            long y = s - x;
            Rational t = diag[0] * x * x + diag[1] * y * y;
            if (t == 0) continue;
            auto test = neg;
            test.push_back(-t);
            if (!is_isotropic_q(test)) continue;
            auto w = represent(neg, t);
            if (!w) continue;
            std::vector<Rational> v{Rational(x), Rational(y)};
            v.insert(v.end(), w->begin(), w->end());
            if (evaluate_diag(diag, v) == 0) return v;
        }
    return std::nullopt;
}

std::optional<std::vector<Rational>> represent(const std::vector<Rational>& diag, const Rational& t)
{
    size_t k = diag.size();
    if (k == 0) return std::nullopt;
    if (k == 1) {
        auto r = rational_sqrt(t / diag[0]);
        if (!r) return std::nullopt;
        return std::vector<Rational>{*r};
    }
    auto ext = diag;
    ext.push_back(-t);
    auto v = find_isotropic(ext);
    if (!v) return std::nullopt;
    std::vector<Rational> u(v->begin(), v->begin() + k);
    if ((*v)[k] != 0) {
        for (auto& x : u) x /= (*v)[k];
        return u;
    }
    // diag is isotropic, hence universal: w + s u hits t.
    size_t i = 0;
    while (u[i] == 0) ++i;
    std::vector<Rational> w(k, Rational(0));
    w[i] = Rational(1) / (diag[i] * u[i]);
    Rational s = (t - evaluate_diag(diag, w)) / 2;
    for (size_t j = 0; j < k; ++j) w[j] += s * u[j];
    return w;
}

namespace {

// Splits off one hyperbolic plane at a time; complement Grams grow quickly,
// so this is only used on small remainders.
std::optional<RMatrix> search_lagrangian(const RMatrix& G)
{
    size_t n = G.rows();
    if (n == 0) return RMatrix(0, 0);
    if (n % 2 != 0) return std::nullopt;
    auto dg = diagonalize_q(G);
    auto iso = find_isotropic(dg.entries);
    if (!iso) return std::nullopt;
    RMatrix v = dg.P * RMatrix::column(*iso);
    RMatrix Gv = G * v;
    size_t k = 0;
    while (Gv(k, 0) == 0) ++k;
    RMatrix w(n, 1);
    w(k, 0) = Rational(1) / Gv(k, 0);
    Rational qw = (w.transpose() * G * w)(0, 0);
    for (size_t r = 0; r < n; ++r) w(r, 0) -= qw / 2 * v(r, 0);
    // Orthogonal complement of the hyperbolic plane span(v, w).
    RMatrix constraints(2, n);
    RMatrix vtG = v.transpose() * G, wtG = w.transpose() * G;
    for (size_t c = 0; c < n; ++c) {
        constraints(0, c) = vtG(0, c);
        constraints(1, c) = wtG(0, c);
    }
    auto comp = nullspace(constraints);
    RMatrix C(n, comp.size());
    for (size_t j = 0; j < comp.size(); ++j)
        for (size_t r = 0; r < n; ++r) C(r, j) = comp[j][r];
    auto sub = search_lagrangian(C.transpose() * G * C);
    if (!sub) return std::nullopt;
    RMatrix lifted = C * *sub;
    RMatrix L(n, n / 2);
    for (size_t r = 0; r < n; ++r) {
        L(r, 0) = v(r, 0);
        for (size_t j = 0; j < lifted.cols(); ++j) L(r, j + 1) = lifted(r, j);
    }
    return L;
}

constexpr size_t search_limit = 6;

} // namespace

std::optional<RMatrix> lagrangian_q(const RMatrix& G)
{
    size_t n = G.rows();
    if (n % 2 != 0) return std::nullopt;
    if (n == 0) return RMatrix(0, 0);
    auto dg = diagonalize_q(G);
    const auto& d = dg.entries;
    // Entries with -d_l / d_k = r^2 give isotropic e_l + r e_k.
    std::vector<bool> used(n, false);
    std::vector<RVec> columns;
    for (size_t k = 0; k < n; ++k) {
        if (used[k]) continue;
        for (size_t l = k + 1; l < n; ++l) {
            if (used[l]) continue;
            auto r = rational_sqrt(-d[l] / d[k]);
            if (!r) continue;
            RVec v(n, Rational(0));
            v[l] = 1;
            v[k] = *r;
            columns.push_back(v);
            used[k] = used[l] = true;
            break;
        }
    }
    std::vector<size_t> rest;
    for (size_t k = 0; k < n; ++k)
        if (!used[k]) rest.push_back(k);
    if (rest.size() > search_limit) return std::nullopt;
    std::vector<Rational> rd;
    for (size_t k : rest) rd.push_back(d[k]);
    auto sub = search_lagrangian(RMatrix::diagonal(rd));
    if (!sub) return std::nullopt;
    for (size_t c = 0; c < sub->cols(); ++c) {
        RVec v(n, Rational(0));
        for (size_t r = 0; r < rest.size(); ++r) v[rest[r]] = (*sub)(r, c);
        columns.push_back(v);
    }
    RMatrix L(n, columns.size());
    for (size_t c = 0; c < columns.size(); ++c)
        for (size_t r = 0; r < n; ++r) L(r, c) = columns[c][r];
    return dg.P * L;
}

namespace {

WittVerdict decide_invariants(const std::vector<Rational>& diag)
{
    size_t n = diag.size();
    if (n % 2 != 0) return WittVerdict::nonzero("dimension", std::to_string(n));
    if (int s = signature(diag); s != 0) return WittVerdict::nonzero("signature", std::to_string(s));
    if (Integer d = signed_discriminant_class(diag); d != 1)
        return WittVerdict::nonzero("discriminant", d.get_str());
    for (auto& v : relevant_places_q(diag)) {
        int h = hasse_invariant(diag, v), hh = hyperbolic_hasse(n / 2, v);
        if (h != hh)
            return WittVerdict::nonzero("hasse", (v == 0 ? std::string("real") : v.get_str()) + ":" + std::to_string(h));
    }
    return WittVerdict::zero("invariants", "dim, signature, discriminant and Hasse symbols match hyperbolic");
}

} // namespace

WittVerdict witt_zero_q(const RMatrix& G)
{
    auto dg = diagonalize_q(G);
    WittVerdict v = decide_invariants(dg.entries);
    if (!v.is_zero()) return v;
    if (auto L = lagrangian_q(G); L && verify_lagrangian(G, *L, IdentityInvolution{}))
        return WittVerdict::zero("lagrangian", std::to_string(L->cols()), *L);
    return v;
}

WittVerdict witt_zero_q(const std::vector<Rational>& diag) { return witt_zero_q(RMatrix::diagonal(diag)); }

} // namespace wittconic
