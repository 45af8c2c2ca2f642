#include "wittconic/conic/conic.hpp"

#include "wittconic/arith/hilbert.hpp"
#include "wittconic/errors.hpp"

namespace wittconic {

std::vector<Integer> ramified_places(const Rational& a, const Rational& b)
{
    std::vector<Integer> out;
    for (auto& v : relevant_places_q({a, b}))
        if (hilbert_symbol_q(a, b, v) == -1) out.push_back(v);
    return out;
}

ConicPtr make_conic(const Rational& a, const Rational& b)
{
    if (a == 0 || b == 0) throw InvalidInput("conic parameters must be nonzero");
    if (ramified_places(a, b).empty()) {
        // Small isotropic vector of <1, -a, -b> for the error message.
        std::string witness = "none below height 20";
        for (long z = 0; z <= 20 && witness.front() == 'n'; ++z)
            for (long x = -20; x <= 20 && witness.front() == 'n'; ++x)
                for (long y = -20; y <= 20; ++y) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (Rational(z * z) == a * x * x + b * y * y) {
                        witness = "(" + std::to_string(z) + ", " + std::to_string(x) + ", " + std::to_string(y) + ")";
                        break;
                    }
                }
        throw SplitAlgebra("(" + to_string(a) + ", " + to_string(b) +
                           ") is split: <1, -a, -b> is isotropic, witness " + witness);
    }
    auto c = std::make_shared<Conic>();
    c->a = a;
    c->b = b;
    if (is_square(a)) throw SplitAlgebra("a is a square");
    auto pres = present_sqrt(a);
    c->infinity_field = pres.field;
    c->theta_scale = pres.scale;
    return c;
}

} // namespace wittconic
