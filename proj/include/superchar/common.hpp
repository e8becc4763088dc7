#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace superchar {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Coeff = std::int64_t;

// Errors carry a short machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

inline Coeff add_checked(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) fail("Overflow", "integer coefficient overflow");
    return r;
}
inline Coeff mul_checked(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) fail("Overflow", "integer coefficient overflow");
    return r;
}

// Element of (1/2)Z, stored doubled.
struct HalfIndex {
    int twice = 0;

    static constexpr HalfIndex from_twice(int t) { return HalfIndex{t}; }
    static constexpr HalfIndex integer(int n) { return HalfIndex{2 * n}; }

    bool is_half() const { return (twice & 1) != 0; }
    bool is_integer() const { return !is_half(); }
    int sign() const { return twice > 0 ? 1 : (twice < 0 ? -1 : 0); }
    HalfIndex operator-() const { return HalfIndex{-twice}; }
    HalfIndex operator+(HalfIndex o) const { return HalfIndex{twice + o.twice}; }
    HalfIndex operator-(HalfIndex o) const { return HalfIndex{twice - o.twice}; }
    Rational value() const { return Rational(twice) / 2; }
    int abs_twice() const { return twice < 0 ? -twice : twice; }

    auto operator<=>(const HalfIndex&) const = default;
    bool operator==(const HalfIndex&) const = default;

    std::string str() const;
    static HalfIndex parse(const std::string& s);
};

std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);
std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);
int parse_int(const std::string& s);

}  // namespace superchar

template <>
struct std::hash<superchar::HalfIndex> {
    size_t operator()(const superchar::HalfIndex& h) const noexcept { return std::hash<int>()(h.twice); }
};
