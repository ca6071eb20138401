#include "hamlocate/ratio.hpp"

#include <cctype>

namespace hamlocate {

Ratio Ratio::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Ratio::parse: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = std::stoll(s.substr(0, slash));
        std::int64_t d = std::stoll(s.substr(slash + 1));
        return Ratio(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Ratio(std::stoll(s), 1);
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("Ratio::parse: too many digits");
    for (char c : frac)
        if (!std::isdigit((unsigned char)c))
            throw std::invalid_argument("Ratio::parse: bad decimal");
    std::int64_t w = whole.empty() ? 0 : std::stoll(whole);
    std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    std::int64_t d = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) d *= 10;
    return Ratio(w * d + f, d);
}

} // namespace hamlocate
