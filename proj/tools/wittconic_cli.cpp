#include "wittconic/io/parse.hpp"
#include "wittconic/io/serialize.hpp"
#include "wittconic/residues/residue.hpp"
#include "wittconic/residues/transfer.hpp"
#include "wittconic/verify/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using namespace wittconic;

namespace {

constexpr const char* report_dir_env = "WITTCONIC_REPORT_DIR";

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

// The algebra options shared by every command except verify.
struct AlgebraOptions {
    std::string a = "-1", b = "-1";
    int degree_bound = default_degree_bound;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--a", a, "i^2 (rational)");
        cmd->add_option("--b", b, "j^2 (rational)");
        cmd->add_option("--degree-bound", degree_bound, "largest factor degree examined");
    }
    ConicPtr conic() const { return make_conic(parse_rational(a), parse_rational(b)); }
};

// Square matrix from either a comma separated diagonal or a JSON array of
// rows of strings.
template <class T>
Matrix<T> read_matrix(const std::string& diag, const std::string& gram, const std::function<T(const std::string&)>& parse)
{
    if (diag.empty() == gram.empty()) throw InvalidInput("give exactly one of --diag and --gram");
    if (!diag.empty()) {
        std::vector<T> entries;
        for (const auto& s : split_list(diag)) entries.push_back(parse(s));
        return Matrix<T>::diagonal(entries);
    }
    Json rows = Json::parse(gram);
    if (!rows.is_array() || rows.empty()) throw InvalidInput("--gram must be a nonempty array of rows");
    const size_t n = rows.size();
    Matrix<T> M(n, n);
    for (size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n) throw InvalidInput("--gram must be square");
        for (size_t c = 0; c < n; ++c) M(r, c) = parse(rows[r][c].get<std::string>());
    }
    return M;
}

// K = Q(i) elements are written as quaternions without j terms.
QuadElem parse_k_element(const std::string& text, const Conic& c)
{
    Quat q = parse_quaternion(text, c);
    if (!is_zero(q[2]) || !is_zero(q[3])) throw InvalidInput("'" + text + "' is not in K = Q(i)");
    return k_field(c).make(q[0], q[1]);
}

Json form_json(int eps, const Json& gram)
{
    return Json{{"eps", eps}, {"gram", gram}};
}

Json apply_map(const std::string& name, int eps, const std::string& diag, const std::string& gram,
               const ConicPtr& conic)
{
    const Conic& c = *conic;
    auto quat = std::function<Quat(const std::string&)>([&](const std::string& s) { return parse_quaternion(s, c); });
    auto kelem = std::function<QuadElem(const std::string&)>([&](const std::string& s) { return parse_k_element(s, c); });
    auto rat = std::function<Rational(const std::string&)>([](const std::string& s) { return parse_rational(s); });

    if (name == "pi1" || name == "pi2" || name == "rho") {
        DHermitianForm h{eps, read_matrix(diag, gram, quat)};
        if (name == "pi1") {
            auto f = pi1(h, c);
            return form_json(f.eps, to_json(f.gram));
        }
        if (name == "pi2") {
            auto f = pi2(h, c);
            return form_json(f.eps, to_json(f.gram));
        }
        return form_json(1, to_json(rho(h, conic)));
    }
    if (name == "sigma1") {
        auto h = sigma1(KHermitianForm{eps, read_matrix(diag, gram, kelem)}, c);
        return form_json(h.eps, to_json(h.gram));
    }
    if (name == "sigma2") {
        auto h = sigma2(KBilinearForm{eps, read_matrix(diag, gram, kelem)}, c);
        return form_json(h.eps, to_json(h.gram));
    }
    if (name == "ext_D") {
        auto h = ext_D(read_matrix(diag, gram, rat), c);
        return form_json(h.eps, to_json(h.gram));
    }
    if (name == "theta") {
        auto h = theta(read_matrix(diag, gram, rat), c);
        return form_json(h.eps, to_json(h.gram));
    }
    if (name == "psi") {
        if (diag.empty()) throw InvalidInput("psi takes --diag entries in k(inf), written in t");
        const Integer d = residue_field_modulus(infinity_point(conic));
        std::vector<QuadElem> entries;
        for (const auto& s : split_list(diag)) entries.push_back(parse_residue_scalar(s, d));
        return Json{{"eps", 1}, {"diag", to_json(psi(c, entries))}};
    }
    throw InvalidInput("unknown map '" + name + "'");
}

int run_verify(SuiteConfig config, const std::string& report_path)
{
    validate(config);
    SuiteReport report = run_suites(config);
    const std::string text = dump(report_json(report));

    std::optional<std::filesystem::path> target;
    if (!report_path.empty()) target = report_path;
    if (const char* dir = std::getenv(report_dir_env); dir && *dir)
        target = std::filesystem::path(dir) / (target ? target->filename() : std::filesystem::path("report.json"));
    if (target) {
        if (target->has_parent_path()) std::filesystem::create_directories(target->parent_path());
        std::ofstream out(*target);
        if (!out) throw InvalidInput("cannot write " + target->string());
        out << text;
    } else {
        std::cout << text;
    }

    for (const auto& suite : suite_names()) {
        if (!config.selected(suite)) continue;
        size_t total = 0, failed = 0;
        for (const auto* rec : report.matching(suite + "/")) {
            ++total;
            failed += rec->passed ? 0 : 1;
        }
        std::cerr << suite << ": " << total - failed << "/" << total << " passed\n";
    }
    for (const auto& rec : report.checks)
        if (!rec.passed) std::cerr << "FAIL " << rec.name << ": " << rec.error << rec.result << "\n  " << rec.repro << "\n";
    if (target) std::cerr << "report: " << target->string() << "\n";
    return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of Witt group sequences over a pointless conic"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string config_path, report_path, va, vb;
    std::vector<std::string> suites;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials, degree_bound;
    std::optional<long> height;
    bool timing = false;
    verify->add_option("--config", config_path, "key = value configuration file");
    verify->add_option("--suite", suites, "suite to run (repeatable)");
    verify->add_option("--seed", seed, "64-bit seed");
    verify->add_option("--report", report_path, "report file (JSON)");
    verify->add_option("--a", va, "i^2 (rational)");
    verify->add_option("--b", vb, "j^2 (rational)");
    verify->add_option("--trials", trials, "samples per property (0 keeps the defaults)");
    verify->add_option("--height", height, "height bound for random inputs");
    verify->add_option("--degree-bound", degree_bound, "largest factor degree examined");
    verify->add_flag("--timing", timing, "record wall times in the report");

    // map apply <name>
    auto* map = app.add_subcommand("map", "apply one of the structural maps");
    map->require_subcommand(1);
    auto* map_apply = map->add_subcommand("apply", "apply a map to a form");
    AlgebraOptions map_alg;
    std::string map_name, map_diag, map_gram;
    int map_eps = 1;
    map_apply->add_option("name", map_name, "pi1, pi2, sigma1, sigma2, ext_D, theta, psi or rho")->required();
    map_apply->add_option("--eps", map_eps, "sign of the source form");
    map_apply->add_option("--diag", map_diag, "comma separated diagonal entries");
    map_apply->add_option("--gram", map_gram, "JSON array of rows of entries");
    map_alg.attach(map_apply);

    // point make --line
    auto* point = app.add_subcommand("point", "closed points of the conic");
    point->require_subcommand(1);
    auto* point_make = point->add_subcommand("make", "build a closed point");
    AlgebraOptions point_alg;
    std::string point_line, point_text;
    point_make->add_option("--line", point_line, "a1,a2,a3: the point on a1 b + a2 a x + a3 y = 0");
    point_make->add_option("--point", point_text, "inf, line:a1,a2,a3 or P(x)[#k]");
    point_alg.attach(point_make);

    // residue
    auto* residue = app.add_subcommand("residue", "first and second residues of a form over F");
    AlgebraOptions res_alg;
    std::string res_form, res_point;
    residue->add_option("--form", res_form, "JSON file with diag or gram over F")->required();
    residue->add_option("--point", res_point, "point specification")->required();
    res_alg.attach(residue);

    // transfer
    auto* transfer = app.add_subcommand("transfer", "t_p of a rank-1 form over k(p)");
    AlgebraOptions tr_alg;
    std::string tr_point, tr_f;
    transfer->add_option("--point", tr_point, "point specification")->required();
    transfer->add_option("--f", tr_f, "element of k(p) in t")->required();
    tr_alg.attach(transfer);

    // nullity
    auto* nullity = app.add_subcommand("nullity", "certify that the transfers of the residues of <f> sum to zero");
    AlgebraOptions nul_alg;
    std::string nul_f;
    nullity->add_option("--f", nul_f, "element of F in x, y")->required();
    nul_alg.attach(nullity);

    // surject
    auto* surject = app.add_subcommand("surject", "find (p, f) with t_p<f> = <q>");
    AlgebraOptions sur_alg;
    std::string sur_q;
    surject->add_option("--q", sur_q, "pure quaternion")->required();
    sur_alg.attach(surject);

    // lift
    auto* lift = app.add_subcommand("lift", "lift a residue at infinity to the image of delta");
    AlgebraOptions lift_alg;
    std::string lift_lambda = "0", lift_u;
    lift->add_option("--lambda", lift_lambda, "rational");
    lift->add_option("--u", lift_u, "element of k(inf) in t")->required();
    lift_alg.attach(lift);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            SuiteConfig config = config_path.empty() ? SuiteConfig{} : load_config(config_path);
            if (!va.empty()) config.a = parse_rational(va);
            if (!vb.empty()) config.b = parse_rational(vb);
            if (seed) config.seed = *seed;
            if (trials) config.trials = *trials;
            if (height) config.height = *height;
            if (degree_bound) config.degree_bound = *degree_bound;
            if (!suites.empty()) config.suites = suites;
            if (timing) config.timing = true;
            return run_verify(config, report_path);
        }
        Json out;
        if (map_apply->parsed()) {
            out = {{"map", map_name}, {"output", apply_map(map_name, map_eps, map_diag, map_gram, map_alg.conic())}};
        } else if (point_make->parsed()) {
            auto conic = point_alg.conic();
            if (point_line.empty() == point_text.empty()) throw InvalidInput("give exactly one of --line and --point");
            if (!point_line.empty()) {
                auto alpha = parse_rational_list(point_line);
                if (alpha.size() != 3) throw InvalidInput("--line takes three rationals");
                out = to_json(points_from_linear(conic, alpha[0], alpha[1], alpha[2]));
            } else {
                out = to_json(parse_point(point_text, conic));
            }
        } else if (residue->parsed()) {
            auto conic = res_alg.conic();
            ClosedPoint p = parse_point(res_point, conic);
            auto diag = diagonalize_f(parse_form_json(read_file(res_form), conic)).entries;
            out = {{"point", to_json(p)},
                   {"diag", to_json(diag)},
                   {"first", to_json(first_residue(diag, p))},
                   {"second", to_json(second_residue(diag, p))}};
        } else if (transfer->parsed()) {
            auto conic = tr_alg.conic();
            ClosedPoint p = parse_point(tr_point, conic);
            QuadElem f = parse_residue_scalar(tr_f, residue_field_modulus(p));
            DHermitianForm h = transfer_entry(ResidueEntry{p, {f}});
            out = {{"point", to_json(p)}, {"f", to_json(f)}, {"output", form_json(h.eps, to_json(h.gram))}};
        } else if (nullity->parsed()) {
            auto conic = nul_alg.conic();
            NullityCertificate cert = nullity_certify(parse_function(nul_f, conic), nul_alg.degree_bound);
            out = to_json(cert);
            out["reverified"] = verify_nullity(cert);
            std::cout << dump(out);
            return out["reverified"].get<bool>() ? 0 : 1;
        } else if (surject->parsed()) {
            auto conic = sur_alg.conic();
            auto w = surjectivity_solve(parse_quaternion(sur_q, *conic), conic);
            std::cout << dump(to_json(w));
            return w.verified ? 0 : 1;
        } else if (lift->parsed()) {
            auto conic = lift_alg.conic();
            const Integer d = residue_field_modulus(infinity_point(conic));
            auto l = lift_to_delta_image(parse_rational(lift_lambda), parse_residue_scalar(lift_u, d), conic,
                                         lift_alg.degree_bound);
            std::cout << dump(to_json(l));
            return l.verified ? 0 : 1;
        }
        std::cout << dump(out);
        return 0;
    } catch (const SplitAlgebra& e) {
        std::cerr << "SplitAlgebra: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
