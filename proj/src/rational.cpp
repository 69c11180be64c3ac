#include "nnrep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nnrep {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim surrounding whitespace
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    s = s.substr(first, last - first + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }

    const auto bad = [&] {
        return std::invalid_argument("malformed rational literal: '" + text + "'");
    };

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        Int d(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        value = Rational(Int(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) throw bad();
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const Int w = whole.empty() ? Int(0) : Int(whole);
        value = Rational(w * scale + Int(frac), scale);
    } else {
        if (!all_digits(s)) throw bad();
        value = Rational(Int(s));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
    return q.str();  // GMP canonical form: "p/q", or "p" when q == 1
}

}  // namespace nnrep
