#include "deriv/rational.hpp"

#include <sstream>

namespace deriv {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::optional<Rational> rational_from_string(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(s)));
        }
        Int n{std::string(s.substr(0, slash))};
        Int d{std::string(s.substr(slash + 1))};
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

}  // namespace deriv
