#include "chern4/render.hpp"

#include <sstream>

namespace chern4 {

namespace {

bool is_hyperbolic_gram(const IntersectionLattice& l) {
    return l.rank() == 2 && l.at(0, 0) == 0 && l.at(1, 1) == 0 && l.at(0, 1) == 1;
}

// "3a", "-a", "5a^2" etc.; coefficient zero contributes nothing.
void append_term(std::ostringstream& os, bool& first, const Int& coeff,
                 const std::string& symbol) {
    if (coeff == 0) return;
    const Int mag = abs(coeff);
    if (first) {
        if (coeff < 0) os << "-";
        first = false;
    } else {
        os << (coeff < 0 ? " - " : " + ");
    }
    if (mag != 1 || symbol.empty()) os << mag.str();
    os << symbol;
}

std::string polynomial(const std::vector<std::pair<Int, std::string>>& terms) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [coeff, symbol] : terms) append_term(os, first, coeff, symbol);
    if (first) return "0";
    return os.str();
}

} // namespace

std::string render_class(const IntersectionLattice& l, const CohClass& c) {
    if (l.rank() == 1 && c.size() == 1)
        return polynomial({{c[0], "a"}});
    if (is_hyperbolic_gram(l) && c.size() == 2)
        return polynomial({{c[0], "a"}, {c[1], "b"}});
    return c.to_string();
}

std::string render_chern(const IntersectionLattice& l, const ChernData& d) {
    if (l.rank() == 1 && d.c1.size() == 1) {
        const Int& g = l.at(0, 0);
        if (g != 0 && d.c2 % g == 0)
            return polynomial({{Int(1), ""}, {d.c1[0], "a"}, {d.c2 / g, "a^2"}});
    }
    if (is_hyperbolic_gram(l) && d.c1.size() == 2)
        return polynomial({{Int(1), ""}, {d.c1[0], "a"}, {d.c1[1], "b"}, {d.c2, "ab"}});
    std::ostringstream os;
    os << "rank=" << d.rank << " c1=" << d.c1.to_string() << " c2=" << d.c2;
    return os.str();
}

} // namespace chern4
