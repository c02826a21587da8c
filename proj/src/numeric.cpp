#include "plumbing/numeric.hpp"

namespace plumbing {

std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::optional<Rat> rat_from_string(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto valid = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid(text)) return std::nullopt;
        return Rat(Int(text));
    }
    std::string ps = text.substr(0, slash), qs = text.substr(slash + 1);
    if (!valid(ps) || !valid(qs)) return std::nullopt;
    Int q(qs);
    if (q == 0) return std::nullopt;
    return Rat(Int(ps), q);
}

}  // namespace plumbing
