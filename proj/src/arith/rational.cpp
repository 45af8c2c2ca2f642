#include "wittconic/arith/rational.hpp"

#include "wittconic/errors.hpp"

#include <cctype>

namespace wittconic {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InvalidInput("empty rational");
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw InvalidInput("bad rational: " + std::string(text));
    r.canonicalize();
    return r;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer height(const Rational& q)
{
    Integer n = abs(q.get_num());
    return n > q.get_den() ? n : Integer(q.get_den());
}

} // namespace wittconic
