#include "superchar/common.hpp"

#include <cctype>
#include <sstream>

namespace superchar {

std::string HalfIndex::str() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

HalfIndex HalfIndex::parse(const std::string& raw) {
    Rational q = parse_rational(raw);
    Rational t = q * 2;
    if (denominator(t) != 1) fail("ParseError", "not a half-integer: " + raw);
    return HalfIndex{static_cast<int>(numerator(t))};
}

std::string rational_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) fail("ParseError", "empty integer");
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        fail("ParseError", "bad integer: " + s);
    }
    if (pos != s.size()) fail("ParseError", "bad integer: " + s);
    return v;
}

Rational parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    int p = parse_int(s.substr(0, slash));
    int q = parse_int(s.substr(slash + 1));
    if (q == 0) fail("ParseError", "zero denominator: " + s);
    return Rational(p) / q;
}

}  // namespace superchar
