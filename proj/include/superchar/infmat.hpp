#pragma once

#include "superchar/common.hpp"

#include "json.hpp"

#include <map>
#include <utility>

namespace superchar {

// Parity of the index: 1 for half-integers.
inline int index_parity(HalfIndex x) { return x.is_half() ? 1 : 0; }

enum class Family { C, D };

// Finitely supported element of gl(inf|inf).
class SuperMatrix {
public:
    using Key = std::pair<HalfIndex, HalfIndex>;
    using Map = std::map<Key, Rational>;

    SuperMatrix() = default;
    static SuperMatrix unit(HalfIndex p, HalfIndex q, Rational c = 1);

    const Map& entries() const { return entries_; }
    Rational at(HalfIndex p, HalfIndex q) const;
    bool is_zero() const { return entries_.empty(); }

    void add(HalfIndex p, HalfIndex q, const Rational& c);
    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    SuperMatrix operator+(const SuperMatrix& o) const;
    SuperMatrix operator-(const SuperMatrix& o) const;
    SuperMatrix operator*(const Rational& c) const;
    SuperMatrix operator*(const SuperMatrix& o) const;  // matrix product
    bool operator==(const SuperMatrix& o) const { return entries_ == o.entries_; }

    // Parity of a homogeneous element; throws for mixed input. Zero is even.
    int parity() const;
    bool homogeneous() const;
    SuperMatrix component(int parity) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static SuperMatrix from_json(const nlohmann::json& j);

private:
    Map entries_;
};

SuperMatrix super_bracket(const SuperMatrix& a, const SuperMatrix& b);
Rational supertrace(const SuperMatrix& a);
SuperMatrix commutator_with_J(const SuperMatrix& a);
Rational cocycle_alpha(const SuperMatrix& a, const SuperMatrix& b);

SuperMatrix te_generator(Family fam, HalfIndex p, HalfIndex q);

// Values of the bilinear form (e_p | e_q) of the given family on the basis.
int form_value(Family fam, HalfIndex p, HalfIndex q);
bool preserves_form(const SuperMatrix& a, Family fam);

}  // namespace superchar
