#include "wittconic/forms/hermitian.hpp"

#include <functional>

namespace wittconic {

KHermitianForm k_diagonal(int eps, const std::vector<QuadElem>& entries) { return {eps, QMatrix::diagonal(entries)}; }

DHermitianForm d_diagonal(int eps, const std::vector<Quat>& entries) { return {eps, DMatrix::diagonal(entries)}; }

Diagonalization<QuadElem> diagonalize(const KHermitianForm& h, const Conic& c)
{
    return diagonalize(h.gram, h.eps, BarInvolution{}, k_field(c).i());
}

Diagonalization<Quat> diagonalize(const DHermitianForm& h, const Conic& c)
{
    return diagonalize(h.gram, h.eps, BarInvolution{}, Quat::basis(1, c.a, c.b));
}

RMatrix s_K_trace_form(const KHermitianForm& h, const Conic& c)
{
    if (h.eps != 1) throw InvalidInput("s_K trace form needs a hermitian form");
    const std::vector<QuadElem> basis{QuadElem(Rational(1)), k_field(c).i()};
    size_t n = h.gram.rows();
    RMatrix B(2 * n, 2 * n);
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
            for (size_t x = 0; x < 2; ++x)
                for (size_t y = 0; y < 2; ++y) B(2 * k + x, 2 * l + y) = (conj(basis[x]) * h.gram(k, l) * basis[y]).re();
    return B;
}

RMatrix s_D_trace_form(const DHermitianForm& h, const Conic& c)
{
    if (h.eps != 1) throw InvalidInput("s_D trace form needs a hermitian form");
    size_t n = h.gram.rows();
    RMatrix B(4 * n, 4 * n);
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y) {
                    Quat v = Quat::basis(x, c.a, c.b).conj() * h.gram(k, l) * Quat::basis(y, c.a, c.b);
                    B(4 * k + x, 4 * l + y) = v[0];
                }
    return B;
}

WittVerdict witt_zero_hermitian_K(const KHermitianForm& h, const Conic& c)
{
    KHermitianForm herm = h;
    if (h.eps == -1) {
        QuadElem i = k_field(c).i();
        herm = {1, h.gram.map([&](const QuadElem& z) { return i * z; })};
    }
    diagonalize(herm, c);  // rejects degenerate input
    return witt_zero_q(s_K_trace_form(herm, c));
}

WittVerdict witt_zero_hermitian_D(const DHermitianForm& h, const Conic& c)
{
    diagonalize(h, c);
    return witt_zero_q(s_D_trace_form(h, c));
}

namespace {

Rational pure_square(const Quat& q) { return (q * q)[0]; }

// Right kernel of d -> q1 d - d q2 on the basis 1, i, j, ij.
std::vector<RVec> intertwiners(const Quat& q1, const Quat& q2, const Conic& c)
{
    RMatrix M(4, 4);
    for (int k = 0; k < 4; ++k) {
        Quat e = Quat::basis(k, c.a, c.b);
        Quat img = q1 * e - e * q2;
        for (int r = 0; r < 4; ++r) M(r, k) = img[r];
    }
    return nullspace(M);
}

} // namespace

Rank2Decision decide_rank2_skew(const Quat& q1, const Quat& q2, const Conic& c)
{
    if (!q1.is_pure() || !q2.is_pure() || q1.is_zero() || q2.is_zero())
        throw InvalidInput("rank-2 skew decision needs nonzero pure quaternions");
    // conj(d) q1 d = Nrd(d) d^{-1} q1 d, so Nrd(d)^2 = q2^2 / q1^2.
    Rational ratio = pure_square(q2) / pure_square(q1);
    auto n0 = rational_sqrt(ratio);
    if (!n0) return {WittVerdict::nonzero("square-class", "q2^2/q1^2 = " + to_string(ratio)), std::nullopt};
    bool search_failed = false;
    for (int sign : {1, -1}) {
        Rational n = *n0 * sign;
        Quat qp = -q2 * Quat(Rational(Rational(1) / n));
        auto ker = intertwiners(q1, qp, c);
        if (ker.empty()) continue;
        Quat d0 = quat(ker[0][0], ker[0][1], ker[0][2], ker[0][3], c.a, c.b);
        // Nrd(d0 (s + t qp)) = Nrd(d0) (s^2 - qp^2 t^2) must equal n.
        Rational target = n / d0.nrd(), cq = pure_square(qp);
        if (!is_isotropic_q({Rational(1), -cq, -target})) continue;
        auto sol = solve_ternary(Rational(1), -cq, -target);
        if (!sol || (*sol)[2] == 0) {
            search_failed = true;
            continue;
        }
        Rational s = (*sol)[0] / (*sol)[2], t = (*sol)[1] / (*sol)[2];
        Quat d = d0 * (Quat(s) + qp * Quat(t));
        if (d.conj() * q1 * d != -q2) throw InvalidInput("internal: rank-2 witness failed");
        DMatrix L(2, 1);
        L(0, 0) = d;
        L(1, 0) = Quat::basis(0, c.a, c.b);
        return {WittVerdict::zero("lagrangian", "1", L), d};
    }
    if (search_failed) return {WittVerdict::unknown("norm equation solvable but no solution within bounds"), std::nullopt};
    return {WittVerdict::nonzero("norm-equation", "no d with conj(d) q1 d = -q2"), std::nullopt};
}

WittVerdict witt_zero_skewhermitian_D(const DHermitianForm& h, const Conic& c, const std::optional<DMatrix>& hint)
{
    if (h.eps != -1) throw InvalidInput("skew-hermitian decision needs eps = -1");
    if (hint && verify_lagrangian(h.gram, *hint, BarInvolution{}))
        return WittVerdict::zero("lagrangian", std::to_string(hint->cols()), *hint);
    auto dg = diagonalize(h, c);
    const auto& q = dg.entries;
    size_t n = q.size();
    if (n % 2 != 0) return WittVerdict::nonzero("rank", std::to_string(n));
    if (n == 0) return WittVerdict::zero("lagrangian", "0", DMatrix(0, 0));
    if (n == 2) {
        auto r = decide_rank2_skew(q[0], q[1], c);
        if (!r.d) return r.verdict;
        DMatrix L = dg.P * std::get<DMatrix>(r.verdict.lagrangian);
        if (!verify_lagrangian(h.gram, L, BarInvolution{})) throw InvalidInput("internal: transported Lagrangian");
        return WittVerdict::zero("lagrangian", "1", L);
    }
    // Pair the diagonal into hyperbolic planes.
    std::vector<int> partner(n, -1);
    std::vector<Quat> witness(n);
    std::function<bool(size_t)> match = [&](size_t i) -> bool {
        while (i < n && partner[i] >= 0) ++i;
        if (i == n) return true;
        for (size_t j = i + 1; j < n; ++j) {
            if (partner[j] >= 0) continue;
            auto r = decide_rank2_skew(q[i], q[j], c);
            if (!r.d) continue;
            partner[i] = static_cast<int>(j);
            partner[j] = static_cast<int>(i);
            witness[i] = *r.d;
            if (match(i + 1)) return true;
            partner[i] = partner[j] = -1;
        }
        return false;
    };
    if (!match(0)) return WittVerdict::unknown("no pairing of the diagonal into hyperbolic planes");
    DMatrix Ld(n, n / 2);
    size_t col = 0;
    for (size_t i = 0; i < n; ++i)
        if (static_cast<int>(i) < partner[i]) {
            Ld(i, col) = witness[i];
            Ld(partner[i], col) = Quat::basis(0, c.a, c.b);
            ++col;
        }
    DMatrix L = dg.P * Ld;
    if (!verify_lagrangian(h.gram, L, BarInvolution{})) throw InvalidInput("internal: paired Lagrangian");
    return WittVerdict::zero("lagrangian", std::to_string(L.cols()), L);
}

std::vector<Rational> norm_form(const Conic& c) { return {Rational(1), -c.a, -c.b, c.a * c.b}; }

} // namespace wittconic
