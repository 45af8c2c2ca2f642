#include "wittconic/io/parse.hpp"

#include "wittconic/conic/coherent.hpp"

#include <json.hpp>

#include <cctype>
#include <functional>
#include <optional>

namespace wittconic {

namespace {

template <class T>
struct Ring {
    std::function<T(const Rational&)> constant;
    std::function<std::optional<T>(const std::string&)> symbol;
    std::function<T(const T&, const T&)> divide;
};

template <class T>
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, Ring<T> ring) : s_(text), ring_(std::move(ring)) {}

    T parse()
    {
        T v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw InvalidInput("cannot parse '" + std::string(s_) + "': " + why);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    T expr()
    {
        T v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    T term()
    {
        T v = unary();
        for (;;) {
            if (eat('*'))
                v = v * unary();
            else if (eat('/'))
                v = ring_.divide(v, unary());
            else if (starts_factor())
                v = v * power();
            else
                return v;
        }
    }

    T unary()
    {
        if (eat('-')) return ring_.constant(Rational(-1)) * unary();
        if (eat('+')) return unary();
        return power();
    }

    T power()
    {
        T base = atom();
        if (!eat('^')) return base;
        bool negative = eat('-');
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent must be an integer");
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        T acc = ring_.constant(Rational(1));
        for (long k = 0; k < e; ++k) acc = acc * base;
        return negative ? ring_.divide(ring_.constant(Rational(1)), acc) : acc;
    }

    T atom()
    {
        skip();
        if (eat('(')) {
            T v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos_ >= s_.size()) fail("unexpected end");
        size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ring_.constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        std::string name(s_.substr(start, pos_ - start));
        if (auto v = ring_.symbol(name)) return *v;
        T acc = ring_.constant(Rational(1));
        for (char ch : name) {
            auto v = ring_.symbol(std::string(1, ch));
            if (!v) fail("unknown symbol '" + name + "'");
            acc = acc * *v;
        }
        return acc;
    }

    std::string_view s_;
    size_t pos_ = 0;
    Ring<T> ring_;
};

template <class T>
T parse_with(std::string_view text, Ring<T> ring)
{
    return ExpressionParser<T>(text, std::move(ring)).parse();
}

} // namespace

Quat parse_quaternion(std::string_view text, const Conic& c)
{
    Ring<Quat> ring{
        [&](const Rational& r) { return quat(r, 0, 0, 0, c.a, c.b); },
        [&](const std::string& s) -> std::optional<Quat> {
            if (s == "i") return Quat::basis(1, c.a, c.b);
            if (s == "j") return Quat::basis(2, c.a, c.b);
            if (s == "ij") return Quat::basis(3, c.a, c.b);
            return std::nullopt;
        },
        [](const Quat& p, const Quat& q) {
            if (q.is_zero()) throw InvalidInput("division by zero");
            return Quat(p * q.inverse());
        }};
    return parse_with(text, ring);
}

FFElem parse_function(std::string_view text, const ConicPtr& conic)
{
    Ring<FFElem> ring{
        [&](const Rational& r) { return FFElem(r); },
        [&](const std::string& s) -> std::optional<FFElem> {
            if (s == "x") return FFElem::x(conic);
            if (s == "y") return FFElem::y(conic);
            return std::nullopt;
        },
        [](const FFElem& p, const FFElem& q) {
            if (q.is_zero()) throw InvalidInput("division by zero");
            return FFElem(p * q.inverse());
        }};
    FFElem f = parse_with(text, ring);
    if (f.is_constant()) f = FFElem(f.constant_value()) + FFElem(Rational(0)) * FFElem::x(conic);
    return f;
}

Poly parse_poly(std::string_view text)
{
    Ring<Poly> ring{
        [](const Rational& r) { return Poly::constant(r); },
        [](const std::string& s) -> std::optional<Poly> {
            if (s == "x") return Poly::x();
            return std::nullopt;
        },
        [](const Poly& p, const Poly& q) {
            if (!q.is_constant() || q.is_zero()) throw InvalidInput("polynomials divide by nonzero constants only");
            return Poly(p * (Rational(1) / q.coeff(0)));
        }};
    return parse_with(text, ring);
}

QuadElem parse_residue_scalar(std::string_view text, const Integer& d)
{
    Ring<QuadElem> ring{
        [&](const Rational& r) { return QuadElem(r, Rational(0), d); },
        [&](const std::string& s) -> std::optional<QuadElem> {
            if (s == "t") return QuadElem::generator(d);
            return std::nullopt;
        },
        [](const QuadElem& p, const QuadElem& q) {
            if (q.is_zero()) throw InvalidInput("division by zero");
            return QuadElem(p * q.inverse());
        }};
    return parse_with(text, ring);
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    size_t start = 0;
    for (;;) {
        size_t comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) return out;
        start = comma + 1;
    }
}

ClosedPoint parse_point(std::string_view text, const ConicPtr& conic)
{
    if (text == "inf" || text == "infinity") return infinity_point(conic);
    if (text.substr(0, 5) == "line:") {
        auto a = parse_rational_list(text.substr(5));
        if (a.size() != 3) throw InvalidInput("a line needs three coefficients");
        return points_from_linear(conic, a[0], a[1], a[2]);
    }
    size_t index = 0;
    std::string_view poly_text = text;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
        index = std::stoul(std::string(text.substr(hash + 1)));
        poly_text = text.substr(0, hash);
    }
    Poly P = parse_poly(poly_text);
    if (P.degree() < 1) throw InvalidInput("a place needs a nonconstant polynomial");
    if (!is_irreducible_q(P)) throw InvalidInput(to_string(P) + " is reducible");
    auto pts = points_over(conic, P.monic());
    if (index >= pts.size()) throw InvalidInput("only " + std::to_string(pts.size()) + " point(s) over " + to_string(P));
    return pts[index];
}

FMatrix parse_form_json(const std::string& json_text, const ConicPtr& conic)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("form file: ") + e.what());
    }
    auto entry = [&](const nlohmann::json& v) {
        if (!v.is_string()) throw InvalidInput("form entries must be strings");
        return parse_function(v.get<std::string>(), conic);
    };
    if (j.contains("diag")) {
        std::vector<FFElem> d;
        for (auto& v : j.at("diag")) d.push_back(entry(v));
        return FMatrix::diagonal(d);
    }
    if (j.contains("gram")) {
        const auto& rows = j.at("gram");
        size_t n = rows.size();
        FMatrix G(n, n);
        for (size_t r = 0; r < n; ++r) {
            if (rows[r].size() != n) throw InvalidInput("gram must be square");
            for (size_t c = 0; c < n; ++c) G(r, c) = entry(rows[r][c]);
        }
        return G;
    }
    throw InvalidInput("form file needs \"diag\" or \"gram\"");
}

} // namespace wittconic
