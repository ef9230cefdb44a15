#include "coregkit/rat.hpp"

namespace coregkit {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rat(num, den);
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw parse_error("bad rational literal '" + text + "'");
    }
}

std::string rat_to_string(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace coregkit
