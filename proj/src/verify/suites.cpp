#include "wittconic/verify/suites.hpp"

#include "wittconic/verify/generators.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

namespace wittconic {

bool SuiteReport::passed() const { return failures() == 0; }

size_t SuiteReport::failures() const
{
    return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::vector<const CheckRecord*> SuiteReport::matching(std::string_view prefix) const
{
    std::vector<const CheckRecord*> out;
    for (const auto& c : checks)
        if (std::string_view(c.name).substr(0, prefix.size()) == prefix) out.push_back(&c);
    return out;
}

std::string repro_command(const SuiteConfig& config, const std::string& suite)
{
    std::ostringstream cmd;
    cmd << "wittconic verify --a=" << to_string(config.a) << " --b=" << to_string(config.b) << " --seed " << config.seed
        << " --height " << config.height << " --degree-bound " << config.degree_bound;
    if (config.trials > 0) cmd << " --trials " << config.trials;
    cmd << " --suite " << suite;
    return cmd.str();
}

namespace {

struct Outcome {
    bool passed;
    std::string result;
    Json certificate = nullptr;
};

std::string indexed(const std::string& name, int k)
{
    std::ostringstream s;
    s << name << '/' << std::setw(3) << std::setfill('0') << k;
    return s.str();
}

std::string verdict_text(const WittVerdict& v) { return to_string(v.tag) + " (" + v.invariant + ")"; }

// Re-checks the Lagrangian carried by a Zero verdict against the Gram it decides.
template <class T, class Conj>
bool certificate_holds(const WittVerdict& v, const Matrix<T>& G, Conj conj_fn)
{
    if (!v.is_zero()) return false;
    if (const auto* L = std::get_if<Matrix<T>>(&v.lagrangian)) return verify_lagrangian(G, *L, conj_fn);
    return v.invariant == "invariants";
}

class Runner {
public:
    Runner(const SuiteConfig& cfg, ConicPtr conic, SuiteReport& report)
        : cfg_(cfg), conic_(std::move(conic)), budget_(cfg.budget()), report_(report)
    {
    }

    void run(const std::string& suite, int salt);

private:
    void check(const std::string& name, Json inputs, const std::function<Outcome()>& body);
    FormGenerator generator(int salt, long height) const
    {
        SplitMix64 root(cfg_.seed);
        return FormGenerator(conic_, root.fork(static_cast<std::uint64_t>(salt)).next(), height);
    }
    std::vector<ClosedPoint> sample_points(int count, FormGenerator& g) const;
    std::vector<FFElem> nullity_corpus(FormGenerator& g) const;

    void algebraic_identities(FormGenerator& g);
    void residue_basics(FormGenerator& g);
    void coherence(FormGenerator& g);
    void octagon(FormGenerator& g);
    void ext_sequence(FormGenerator& g);
    void residue_sequence(FormGenerator& g);
    void nullity(FormGenerator& g);
    void surjectivity(FormGenerator& g);
    void morita(FormGenerator& g);

    const SuiteConfig& cfg_;
    ConicPtr conic_;
    Budget budget_;
    SuiteReport& report_;
    std::string suite_;
};

void Runner::check(const std::string& name, Json inputs, const std::function<Outcome()>& body)
{
    CheckRecord rec;
    rec.suite = suite_;
    rec.name = suite_ + "/" + name;
    rec.inputs = std::move(inputs);
    auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = body();
        rec.passed = o.passed;
        rec.result = o.result;
        rec.certificate = std::move(o.certificate);
    } catch (const std::exception& e) {
        rec.passed = false;
        rec.result = "error";
        rec.error = e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!rec.passed) rec.repro = repro_command(cfg_, suite_);
    report_.checks.push_back(std::move(rec));
}

void Runner::run(const std::string& suite, int salt)
{
    suite_ = suite;
    FormGenerator g = generator(salt, cfg_.height);
    if (suite == "algebraic-identities") algebraic_identities(g);
    if (suite == "residue-basics") residue_basics(g);
    if (suite == "coherence") coherence(g);
    if (suite == "octagon") octagon(g);
    if (suite == "ext-sequence") ext_sequence(g);
    if (suite == "residue-sequence") residue_sequence(g);
    if (suite == "nullity") nullity(g);
    if (suite == "surjectivity") surjectivity(g);
    if (suite == "morita") morita(g);
}

// p0 (x = 0), y = 0, then points cut out by seeded lines.
std::vector<ClosedPoint> Runner::sample_points(int count, FormGenerator& g) const
{
    std::vector<ClosedPoint> pts{points_over(conic_, Poly::x())[0], points_from_linear(conic_, 0, 0, 1)};
    while (static_cast<int>(pts.size()) < count) {
        Rational a1 = g.scalar(), a2 = g.scalar(), a3 = g.scalar();
        if (a2 == 0 && a3 == 0) continue;
        ClosedPoint p = points_from_linear(conic_, a1, a2, a3);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    pts.resize(static_cast<size_t>(count));
    return pts;
}

// ---------------------------------------------------------------- identities

// Bounded search for an isotropic integer vector, independent of the local
// invariants used by witt_zero_q.
bool brute_isotropic(const std::vector<Rational>& diag, long bound)
{
    Integer den = 1;
    for (const auto& c : diag) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> coef;
    for (const auto& c : diag) coef.push_back(Integer(c * den));
    const size_t n = coef.size();
    std::vector<long> v(n, -bound);
    for (;;) {
        bool nonzero = std::any_of(v.begin(), v.end(), [](long t) { return t != 0; });
        if (nonzero) {
            Integer s = 0;
            for (size_t k = 0; k < n; ++k) s += coef[k] * v[k] * v[k];
            if (s == 0) return true;
        }
        size_t k = 0;
        while (k < n && v[k] == bound) v[k++] = -bound;
        if (k == n) return false;
        ++v[k];
    }
}

bool is_rational_square(const Rational& r)
{
    if (r < 0) return false;
    Integer num = r.get_num(), den = r.get_den();
    return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

void Runner::algebraic_identities(FormGenerator& g)
{
    check("generic-e", Json{{"a", to_json(conic_->a)}, {"b", to_json(conic_->b)}}, [&] {
        IdentityReport r = check_generic_identities(conic_);
        Json failures = r.failures;
        return Outcome{r.ok(), std::to_string(r.checks) + " identities", Json{{"failures", failures}}};
    });
    auto pts = sample_points(budget_.fiber_points, g);
    for (size_t k = 0; k < pts.size(); ++k) {
        check(indexed("fiber-lambda-mu-lambda", static_cast<int>(k)), Json{{"point", to_json(pts[k])}, {"trials", budget_.fiber_trials}},
              [&] {
                  IdentityReport r = check_fiber_identities(pts[k], budget_.fiber_trials, g.rng(), 10);
                  Json failures = r.failures;
                  return Outcome{r.ok(), std::to_string(r.checks) + " identities", Json{{"failures", failures}}};
              });
    }
    // Decision engine against a brute-force isotropy oracle on small diagonals.
    FormGenerator small = generator(1000, 3);
    for (int k = 0; k < budget_.oracle_forms; ++k) {
        size_t dim = static_cast<size_t>(1 + k % 4);
        std::vector<Rational> diag = small.q_diagonal(dim);
        // Every third even-dimensional sample gets a hyperbolic plane, so Zero
        // verdicts are well represented.
        if (dim % 2 == 0 && k % 3 == 0) {
            Rational r = small.nonzero_scalar();
            diag[1] = -diag[0] * r * r;
        }
        check(indexed("decision-oracle", k), Json{{"diag", to_json(diag)}}, [&] {
            RMatrix G = RMatrix::diagonal(diag);
            WittVerdict v = witt_zero_q(G);
            bool expect_zero = false;
            if (dim == 2) expect_zero = brute_isotropic(diag, 12);
            if (dim == 4) {
                Rational det = diag[0] * diag[1] * diag[2] * diag[3];
                expect_zero = is_rational_square(det) && brute_isotropic(diag, 12);
            }
            bool agree = v.is_zero() == expect_zero;
            bool cert = !v.is_zero() || certificate_holds(v, G, IdentityInvolution{});
            return Outcome{agree && cert, verdict_text(v) + (expect_zero ? ", oracle: hyperbolic" : ", oracle: not hyperbolic"),
                           to_json(v)};
        });
    }
}

// ------------------------------------------------------------ residue basics

void Runner::residue_basics(FormGenerator& g)
{
    ClosedPoint p0 = points_over(conic_, Poly::x())[0];
    ClosedPoint inf = infinity_point(conic_);
    FFElem x = FFElem::x(conic_), y = FFElem::y(conic_);

    check("coherent-functional-p0", Json{{"point", to_json(p0)}}, [&] {
        CoherentPair pair = coherent_functional(p0);
        QuadElem one(Rational(1)), theta = QuadElem::generator(p0.quad->d);
        Rational s1 = pair.apply(one), st = pair.apply(theta);
        return Outcome{s1 == 0 && st == 1, "s(1) = " + to_string(s1) + ", s(t) = " + to_string(st),
                       Json{{"s(1)", to_json(s1)}, {"s(t)", to_json(st)}}};
    });
    check("delta-x", Json{{"form", Json::array({"x"})}}, [&] {
        ResidueVector v = delta(std::vector<FFElem>{x}, conic_, cfg_.degree_bound);
        const ResidueEntry* e0 = v.find(p0);
        const ResidueEntry* ei = v.find(inf);
        QuadElem one(Rational(1));
        bool ok = v.entries.size() == 2 && e0 && ei && e0->diag.size() == 1 && e0->diag[0] == one && ei->diag.size() == 1 &&
                  ei->diag[0] == one;
        return Outcome{ok, "{p0: <1>, inf: <1>} expected", to_json(v)};
    });
    check("s-functional-x", Json{{"f", "x"}}, [&] {
        Rational s1 = s_functional(x, FFElem(Rational(1))), sy = s_functional(x, y), sx = s_functional(x, x);
        return Outcome{s1 == 0 && sy == 1 && sx == 0, "S(1), S(y), S(x) = " + to_string(s1) + ", " + to_string(sy) + ", " + to_string(sx)};
    });
    check("h-form-x", Json{{"f", "x"}}, [&] {
        DMatrix H = global_h_form(x);
        Quat ij = Quat::basis(3, conic_->a, conic_->b);
        return Outcome{H.rows() == 1 && H(0, 0) == ij, "H = [" + to_string(H(0, 0)) + "]", to_json(H)};
    });
    // First residues do not see a rescaled uniformizer beyond square factors.
    for (int k = 0; k < budget_.coherence; ++k) {
        FFElem f = g.linear_element() * g.linear_element();
        FFElem u = FFElem(g.nonzero_scalar());
        check(indexed("first-residue-uniformizer", k), Json{{"f", to_json(f)}, {"scale", to_json(u)}}, [&] {
            auto pts = support(f, cfg_.degree_bound);
            bool ok = true;
            Json cert = Json::array();
            for (auto& [p, v] : pts) {
                if (p.is_infinity() || !p.quad) continue;
                auto r1 = first_residue({f * f * FFElem(Rational(3))}, p);
                auto r2 = first_residue({f * f * FFElem(Rational(3))}, p, u * p.uniformizer());
                if (r1.size() != 1 || r2.size() != 1) return Outcome{false, "missing first residue"};
                auto w = quad_sqrt(r2[0] / r1[0], p.quad->d);
                ok = ok && w && *w * r1[0] * *w == r2[0];
                if (w) cert.push_back(Json{{"point", p.label()}, {"witness", to_json(*w)}});
            }
            // The divisor of f has degree zero.
            int deg = 0;
            for (auto& [p, v] : pts) deg += p.degree * v;
            return Outcome{ok && deg == 0, ok ? "isometric, deg div = " + std::to_string(deg) : "not isometric", cert};
        });
    }
}

// ----------------------------------------------------------------- coherence

void Runner::coherence(FormGenerator& g)
{
    auto pts = sample_points(budget_.fiber_points, g);
    for (size_t k = 0; k < pts.size(); ++k) {
        const ClosedPoint& p = pts[k];
        check(indexed("triangle", static_cast<int>(k)), Json{{"point", to_json(p)}}, [&] {
            CoherentPair pair = coherent_functional(p);
            FFElem pi = p.uniformizer();
            int n = 0;
            bool ok = true;
            for (const AffElem& u : riemann_roch_space(p)) {
                FFElem h = FFElem::from_aff(u, conic_) / pi;
                ok = ok && pair.apply(evaluate_quad(FFElem::from_aff(u, conic_), p)) == omega_p(h, p);
                ++n;
            }
            return Outcome{ok, "s_p(mu(h)) = omega_p(h) on " + std::to_string(n) + " spanning elements"};
        });
    }
    for (int k = 0; k < budget_.coherence; ++k) {
        const ClosedPoint& p = pts[static_cast<size_t>(k) % pts.size()];
        Rational c = g.nonzero_scalar();
        FFElem w = g.linear_element();
        check(indexed("uniformizer-change", k), Json{{"point", to_json(p)}, {"scale", to_json(c)}, {"cofactor", to_json(w)}},
              [&] {
                  FFElem pi = p.uniformizer();
                  FFElem pi2 = FFElem(c) * pi;
                  // f = pi w with w a unit at p, so d2_p<f> is rank 1.
                  FFElem f = pi * w;
                  if (valuation(f, p) != 1) f = pi;
                  CoherentPair pair1 = coherent_functional(p), pair2 = coherent_functional(p, pi2);
                  auto r1 = second_residue({f}, p), r2 = second_residue({f}, p, pi2);
                  RMatrix phi = direct_sum(scharlau_transfer(r1, pair1),
                                           RMatrix(scharlau_transfer(r2, pair2).map([](const Rational& r) { return Rational(-r); })));
                  WittVerdict vq = witt_zero_q(phi);
                  Quat q1 = transfer_tp_value(r1[0], pair1), q2 = transfer_tp_value(r2[0], pair2);
                  auto dec = decide_rank2_skew(q1, -q2, *conic_);
                  bool iso = dec.d && dec.d->conj() * q1 * *dec.d == q2;
                  bool ok = vq.is_zero() && certificate_holds(vq, phi, IdentityInvolution{}) && iso;
                  Json cert{{"scharlau", to_json(vq)}, {"t_p", Json::array({to_json(q1), to_json(q2)})}};
                  if (dec.d) cert["isometry"] = to_json(*dec.d);
                  return Outcome{ok, "(s_p)_*: " + verdict_text(vq) + (iso ? ", t_p: isometric" : ", t_p: no witness"), cert};
              });
    }
}

// ------------------------------------------------------------------- octagon

void Runner::octagon(FormGenerator& g)
{
    const Conic& c = *conic_;
    const Integer dK = k_field(c).d;
    for (int s = 0; s < budget_.octagon_seeds; ++s) {
        size_t n = static_cast<size_t>(1 + s % 2);
        Json in{{"rank", n}, {"sample", s}};
        auto name = [&](int k, const char* label) { return indexed(std::to_string(k) + "-" + label, s); };

        DHermitianForm hp = g.d_form(n, 1), hm = g.d_form(n, -1);
        KHermitianForm kp = g.k_hermitian(n, 1), km = g.k_hermitian(n, -1);
        KBilinearForm alt = g.k_bilinear(2 * n, -1), sym = g.k_bilinear(n, 1);

        check(name(1, "sigma2-pi2-on-W+(D)"), in, [&] {
            DHermitianForm r = sigma2(pi2(hp, c), c);
            WittVerdict v = witt_zero_hermitian_D(r, c);
            return Outcome{certificate_holds(v, s_D_trace_form(r, c), IdentityInvolution{}), verdict_text(v), to_json(v)};
        });
        check(name(2, "pi1-sigma2-on-W-(K)"), in, [&] {
            KHermitianForm r = pi1(sigma2(alt, c), c);
            WittVerdict v = witt_zero_hermitian_K(r, c);
            return Outcome{v.is_zero(), verdict_text(v), to_json(v)};
        });
        check(name(3, "sigma1-pi1-on-W+(D)"), in, [&] {
            DHermitianForm r = sigma1(pi1(hp, c), c);
            WittVerdict v = witt_zero_skewhermitian_D(r, c);
            bool ok = v.is_zero() && std::holds_alternative<DMatrix>(v.lagrangian) &&
                      certificate_holds(v, r.gram, BarInvolution{});
            return Outcome{ok, verdict_text(v), to_json(v)};
        });
        check(name(4, "pi2-sigma1-on-W+(K,bar)"), in, [&] {
            KBilinearForm r = pi2(sigma1(kp, c), c);
            WittVerdict v = witt_zero_quadfield(r.gram, dK);
            bool ok = v.is_zero() && (!std::holds_alternative<QMatrix>(v.lagrangian) ||
                                      certificate_holds(v, r.gram, IdentityInvolution{}));
            return Outcome{ok, verdict_text(v), to_json(v)};
        });
        check(name(5, "sigma2-pi2-on-W-(D)"), in, [&] {
            DHermitianForm r = sigma2(pi2(hm, c), c);
            WittVerdict v = witt_zero_skewhermitian_D(r, c);
            bool ok = v.is_zero() && std::holds_alternative<DMatrix>(v.lagrangian) &&
                      certificate_holds(v, r.gram, BarInvolution{});
            return Outcome{ok, verdict_text(v), to_json(v)};
        });
        check(name(6, "pi1-sigma2-on-W+(K)"), in, [&] {
            KHermitianForm r = pi1(sigma2(sym, c), c);
            WittVerdict v = witt_zero_hermitian_K(r, c);
            return Outcome{v.is_zero(), verdict_text(v), to_json(v)};
        });
        check(name(7, "sigma1-pi1-on-W-(D)"), in, [&] {
            DHermitianForm r = sigma1(pi1(hm, c), c);
            WittVerdict v = witt_zero_hermitian_D(r, c);
            return Outcome{certificate_holds(v, s_D_trace_form(r, c), IdentityInvolution{}), verdict_text(v), to_json(v)};
        });
        check(name(8, "pi2-sigma1-on-W-(K,bar)"), in, [&] {
            KBilinearForm r = pi2(sigma1(km, c), c);
            QMatrix L = symplectic_lagrangian(r.gram);
            bool ok = verify_lagrangian(r.gram, L, IdentityInvolution{});
            return Outcome{ok, ok ? "Zero (lagrangian)" : "lagrangian failed", Json{{"lagrangian", to_json(L)}}};
        });
    }
}

// -------------------------------------------------------------- ext-sequence

void Runner::ext_sequence(FormGenerator& g)
{
    const Conic& c = *conic_;
    for (int k = 0; k < budget_.ext_sequence; ++k) {
        std::vector<Rational> phi = g.q_diagonal(static_cast<size_t>(1 + k % 4));
        check(indexed("delta-ext-F", k), Json{{"phi", to_json(phi)}}, [&] {
            std::vector<FFElem> diag;
            for (auto& r : phi) diag.push_back(FFElem(r));
            ResidueVector v = delta(diag, conic_, cfg_.degree_bound);
            return Outcome{v.entries.empty(), std::to_string(v.entries.size()) + " nonzero residues"};
        });
        check(indexed("s_D-ext_D-is-n_D", k), Json{{"phi", to_json(phi)}}, [&] {
            RMatrix T = s_D_trace_form(ext_D(RMatrix::diagonal(phi), c), c);
            std::vector<Rational> got, want;
            for (size_t r = 0; r < T.rows(); ++r)
                for (size_t s = 0; s < T.cols(); ++s)
                    if (r != s && T(r, s) != 0) return Outcome{false, "trace form is not diagonal"};
            got = T.diagonal_entries();
            for (auto& p : phi)
                for (auto& n : norm_form(c)) want.push_back(p * n);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            return Outcome{got == want, got == want ? "diagonal multisets equal" : "multisets differ", to_json(got)};
        });
    }
    check("norm-form-lagrangian", Json{{"isotropic", Json::array({"y", "x", "1", "0"})}}, [&] {
        FFElem x = FFElem::x(conic_), y = FFElem::y(conic_), one(Rational(1)), zero = FFElem(Rational(0)) * x;
        std::vector<FFElem> n;
        for (auto& r : norm_form(c)) n.push_back(FFElem(r));
        FMatrix G = FMatrix::diagonal(n);
        FMatrix L(4, 2);
        L(0, 0) = y;
        L(1, 0) = x;
        L(2, 0) = one;
        L(3, 0) = zero;
        L(0, 1) = FFElem(c.a) * x;
        L(1, 1) = y;
        L(2, 1) = zero;
        L(3, 1) = FFElem(Rational(-1));
        bool ok = verify_lagrangian(G, L, IdentityInvolution{});
        return Outcome{ok, ok ? "n_D over F is hyperbolic" : "lagrangian failed", Json{{"lagrangian", to_json(L)}}};
    });
}

// ---------------------------------------------------------- residue-sequence

void Runner::residue_sequence(FormGenerator& g)
{
    const Conic& c = *conic_;
    std::vector<Rational> nD = norm_form(c);
    for (int k = 0; k < budget_.reciprocity; ++k) {
        FFElem f = k % 2 == 0 ? g.linear_element() : g.linear_element() * g.linear_element();
        check(indexed("reciprocity-into-W(D)", k), Json{{"psi", Json::array({to_json(f)})}}, [&] {
            ResidueVector v = delta_prime(std::vector<FFElem>{f}, conic_, cfg_.degree_bound);
            std::vector<RMatrix> parts;
            for (const auto& e : v.entries) parts.push_back(scharlau_transfer(e.diag, coherent_functional(e.point)));
            RMatrix phi(0, 0);
            for (auto& P : parts) phi = direct_sum(phi, P);
            // ext_D(phi) = 0 in W(D) iff phi (x) n_D = 0 in W(Q).
            RMatrix prod(phi.rows() * 4, phi.cols() * 4);
            for (size_t r = 0; r < phi.rows(); ++r)
                for (size_t s = 0; s < phi.cols(); ++s)
                    for (size_t t = 0; t < 4; ++t) prod(4 * r + t, 4 * s + t) = phi(r, s) * nD[t];
            WittVerdict w = prod.rows() == 0 ? WittVerdict::zero("dimension", "0") : witt_zero_q(prod);
            return Outcome{w.is_zero() && (prod.rows() == 0 || certificate_holds(w, prod, IdentityInvolution{})),
                           std::to_string(v.entries.size()) + " residues, " + verdict_text(w),
                           Json{{"residues", to_json(v)}, {"verdict", to_json(w)}}};
        });
    }
    for (int k = 0; k < budget_.ext_d_targets; ++k) {
        DHermitianForm h = g.d_form(static_cast<size_t>(1 + k % 3), 1);
        check(indexed("ext_D-surjective", k), Json{{"target", to_json(h.gram)}}, [&] {
            auto dg = diagonalize(h, c);
            std::vector<Rational> phi;
            for (auto& q : dg.entries) {
                if (!q.is_zero() && !(q[1] == 0 && q[2] == 0 && q[3] == 0)) return Outcome{false, "non-rational diagonal entry"};
                phi.push_back(q[0]);
            }
            bool ok = verify_isometry(h.gram, ext_D(RMatrix::diagonal(phi), c).gram, dg.P, BarInvolution{});
            return Outcome{ok, ok ? "ext_D(phi) isometric to target" : "isometry failed",
                           Json{{"phi", to_json(phi)}, {"isometry", to_json(dg.P)}}};
        });
    }
    for (int k = 0; k < budget_.tinfty; ++k) {
        QuadElem gval = g.k_infinity_element();
        check(indexed("t_inf-is-sigma2-psi", k), Json{{"g", to_json(gval)}}, [&] {
            Quat lhs = transfer_tinfty_value(gval, c);
            Quat rhs = sigma2(KBilinearForm{1, QMatrix::diagonal(psi(c, {gval}))}, c).gram(0, 0);
            Quat closed = -(embed_k(c, gamma_apply(c, gval)) * Quat::basis(3, c.a, c.b));
            return Outcome{lhs == rhs && lhs == closed, to_string(lhs) + " vs " + to_string(rhs)};
        });
    }
    auto pts = sample_points(budget_.diagram_points, g);
    for (size_t pk = 0; pk < pts.size(); ++pk) {
        const ClosedPoint& p = pts[pk];
        CoherentPair pair = coherent_functional(p);
        DMatrix B(1, 2);
        B(0, 0) = fiber_coordinate(p, QuadElem(Rational(1), Rational(0), p.quad->d));
        B(0, 1) = fiber_coordinate(p, QuadElem::generator(p.quad->d));
        for (int k = 0; k < budget_.diagram_generators; ++k) {
            QuadElem f;
            do f = random_quad(g.rng(), p.quad->d, cfg_.height);
            while (f.is_zero());
            check(indexed("pi1-t_p-is-theta-s_p/" + std::to_string(pk), k), Json{{"point", to_json(p)}, {"f", to_json(f)}}, [&] {
                KHermitianForm lhs = pi1(d_diagonal(-1, {transfer_tp_value(f, pair)}), c, B);
                KHermitianForm rhs = theta(scharlau_transfer({f}, pair), c);
                bool ok = lhs.eps == rhs.eps && lhs.gram == rhs.gram;
                return Outcome{ok, ok ? "Gram matrices equal entrywise" : "Gram matrices differ",
                               Json{{"lhs", to_json(lhs.gram)}, {"rhs", to_json(rhs.gram)}}};
            });
        }
    }
    for (int k = 0; k < budget_.lifts; ++k) {
        Rational lambda = k == 0 ? Rational(0) : g.scalar();
        QuadElem u = k == 0 ? QuadElem(Rational(1)) : g.k_infinity_element();
        check(indexed("lift-to-delta-image", k), Json{{"lambda", to_json(lambda)}, {"u", to_json(u)}}, [&] {
            DeltaLift l = lift_to_delta_image(lambda, u, conic_, cfg_.degree_bound);
            return Outcome{l.verified, "f = " + to_string(l.f), to_json(l)};
        });
    }
}

// ------------------------------------------------------------------- nullity

std::vector<FFElem> Runner::nullity_corpus(FormGenerator& g) const
{
    FFElem x = FFElem::x(conic_), y = FFElem::y(conic_), one(Rational(1));
    std::vector<FFElem> corpus{x, y, one + y, x * y};
    int added = 0;
    for (int attempt = 0; added < budget_.random_nullity && attempt < 50; ++attempt) {
        FFElem f = g.linear_element() * g.linear_element();
        if (attempt % 2 == 1) f = f * g.linear_element();
        bool ok = true;
        for (auto& [p, v] : support(f, cfg_.degree_bound)) ok = ok && (p.is_infinity() || (v == 1 && p.quad));
        if (!ok) continue;
        corpus.push_back(f);
        ++added;
    }
    return corpus;
}

void Runner::nullity(FormGenerator& g)
{
    auto corpus = nullity_corpus(g);
    for (size_t k = 0; k < corpus.size(); ++k) {
        check(indexed("certificate", static_cast<int>(k)), Json{{"f", to_json(corpus[k])}}, [&] {
            NullityCertificate cert = nullity_certify(corpus[k], cfg_.degree_bound);
            bool ok = cert.verdict.is_zero() && verify_nullity(cert);
            return Outcome{ok, "n = " + std::to_string(cert.n) + ", " + verdict_text(cert.verdict), to_json(cert)};
        });
    }
    check("terms-of-x", Json{{"f", "x"}}, [&] {
        NullityCertificate cert = nullity_certify(FFElem::x(conic_), cfg_.degree_bound);
        Quat ij = Quat::basis(3, conic_->a, conic_->b);
        bool ok = cert.affine_terms.size() == 1 && cert.affine_terms[0] == ij && cert.infinity_term && *cert.infinity_term == -ij;
        return Outcome{ok, ok ? "<ij> at p0, <-ij> at infinity" : "unexpected terms", to_json(cert)};
    });
}

// -------------------------------------------------------------- surjectivity

void Runner::surjectivity(FormGenerator& g)
{
    const Conic& c = *conic_;
    FormGenerator tall = generator(2000, 10);
    Quat ij = Quat::basis(3, c.a, c.b);
    check("q=ij", Json{{"q", to_json(ij)}}, [&] {
        SurjectivityWitness w = surjectivity_solve(ij, conic_);
        bool ok = w.verified && w.point.place == Poly::x() && w.f == QuadElem(Rational(1), Rational(0), w.f.modulus());
        return Outcome{ok, "p = " + w.point.label() + ", f = " + to_string(w.f), to_json(w)};
    });
    for (int k = 0; k < budget_.surjectivity; ++k) {
        Quat q = tall.pure_quaternion();
        check(indexed("random-q", k), Json{{"q", to_json(q)}}, [&] {
            SurjectivityWitness w = surjectivity_solve(q, conic_);
            return Outcome{w.verified, "p = " + w.point.label() + ", f = " + to_string(w.f), to_json(w)};
        });
    }
    (void)g;
}

// -------------------------------------------------------------------- morita

void Runner::morita(FormGenerator& g)
{
    const Conic& c = *conic_;
    auto Q = [&](int k) { return Quat::basis(k, c.a, c.b); };
    const std::vector<std::pair<std::string, Quat>> named{
        {"i", Q(1)}, {"j", Q(2)}, {"ij", Q(3)}, {"i+j", Q(1) + Q(2)}, {"2i+3j+5ij", quat(0, 2, 3, 5, c.a, c.b)}};
    for (const auto& [label, q] : named) {
        check("delta-prime-rho/" + label, Json{{"q", to_json(q)}}, [&] {
            FMatrix R = rho_rank1(q, conic_);
            ResidueVector v = delta_prime(R, conic_, cfg_.degree_bound);
            bool ok = true;
            Json verdicts = Json::array();
            for (const auto& e : v.entries) {
                WittVerdict w = witt_zero_residue(e);
                ok = ok && w.is_zero();
                verdicts.push_back(Json{{"point", e.point.label()}, {"verdict", to_json(w)}});
            }
            return Outcome{ok, std::to_string(v.entries.size()) + " residues, all Witt-zero: " + (ok ? "yes" : "no"),
                           Json{{"rho", to_json(R)}, {"residues", verdicts}}};
        });
    }
    for (int k = 0; k < budget_.morita; ++k) {
        Quat q1 = g.pure_quaternion(), q2 = g.pure_quaternion();
        check(indexed("rho-additive", k), Json{{"q", Json::array({to_json(q1), to_json(q2)})}}, [&] {
            FMatrix R = rho(d_diagonal(-1, {q1, q2}), conic_);
            FMatrix S = direct_sum(rho_rank1(q1, conic_), rho_rank1(q2, conic_));
            bool symmetric = true;
            for (size_t r = 0; r < R.rows(); ++r)
                for (size_t s = 0; s < R.cols(); ++s) symmetric = symmetric && R(r, s) == R(s, r);
            return Outcome{R == S && symmetric, R == S ? "rho(<q1, q2>) = rho<q1> + rho<q2>" : "not additive"};
        });
    }
}

} // namespace

SuiteReport run_suites(const SuiteConfig& config)
{
    ConicPtr conic = validate(config);
    SuiteReport report;
    report.config = config;
    Runner runner(config, conic, report);
    const auto& names = suite_names();
    for (size_t k = 0; k < names.size(); ++k)
        if (config.selected(names[k])) runner.run(names[k], static_cast<int>(k + 1));
    std::sort(report.checks.begin(), report.checks.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
    return report;
}

Json report_json(const SuiteReport& report)
{
    const SuiteConfig& c = report.config;
    Json suites = Json::array();
    for (const auto& s : suite_names())
        if (c.selected(s)) suites.push_back(s);
    Json cfg{{"a", to_json(c.a)},
             {"b", to_json(c.b)},
             {"seed", c.seed},
             {"trials", c.trials},
             {"height", c.height},
             {"degree_bound", c.degree_bound},
             {"suites", suites}};
    std::map<std::string, std::pair<int, int>> tally;
    Json checks = Json::array();
    for (const auto& r : report.checks) {
        auto& t = tally[r.suite];
        (r.passed ? t.first : t.second)++;
        Json j{{"name", r.name}, {"inputs", r.inputs}, {"passed", r.passed}, {"result", r.result}};
        if (!r.certificate.is_null()) j["certificate"] = r.certificate;
        if (!r.error.empty()) j["error"] = r.error;
        if (!r.repro.empty()) j["repro"] = r.repro;
        if (c.timing) j["seconds"] = r.seconds;
        checks.push_back(std::move(j));
    }
    Json summary = Json::object();
    for (const auto& [s, t] : tally) summary[s] = Json{{"passed", t.first}, {"failed", t.second}};
    return Json{{"config", cfg}, {"checks", checks}, {"summary", summary}, {"passed", report.passed()}};
}

} // namespace wittconic
