#include "trigonal/rational.hpp"

#include <cctype>

namespace trig {

Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw MalformedInput("empty rational literal");
    auto check_int = [](const std::string& part) {
        if (part.empty()) return false;
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!check_int(num) || !check_int(den))
        throw MalformedInput("bad rational literal: " + s);
    Rational q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw MalformedInput("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace trig
