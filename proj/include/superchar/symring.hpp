#pragma once

#include "superchar/common.hpp"
#include "superchar/laurent.hpp"
#include "superchar/partitions.hpp"

#include <map>
#include <vector>

namespace superchar {

enum class Alphabet { X, Y, XY };
enum class GenKind { Elementary, Complete };

// Monomial in the free generators e_k(x) (id k) and e_k(y) (id 64+k),
// stored as the sorted multiset of ids.
struct SymMono {
    std::vector<std::uint8_t> ids;

    static constexpr int kYBase = 64;
    static std::uint8_t id(int k, Alphabet a) { return static_cast<std::uint8_t>(a == Alphabet::Y ? kYBase + k : k); }
    static SymMono from(std::vector<std::pair<int, Alphabet>> gens);

    int degree() const;
    auto operator<=>(const SymMono&) const = default;
    bool operator==(const SymMono&) const = default;
    std::string str() const;
};

// Two-alphabet symmetric functions truncated above degree D.
class SymFunc {
public:
    using Map = std::map<SymMono, Coeff>;

    SymFunc() = default;
    explicit SymFunc(int D) : D_(D) {}
    static SymFunc constant(Coeff c, int D);
    static SymFunc generator(GenKind kind, int k, Alphabet a, int D);
    static SymFunc e(int k, Alphabet a, int D) { return generator(GenKind::Elementary, k, a, D); }
    static SymFunc h(int k, Alphabet a, int D) { return generator(GenKind::Complete, k, a, D); }
    static SymFunc from_mono(const SymMono& m, Coeff c, int D);

    int trunc() const { return D_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coefficient(const SymMono& m) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc operator*(Coeff c) const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    bool operator==(const SymFunc& o) const { return D_ == o.D_ && terms_ == o.terms_; }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    SymFunc divided_by(Coeff c) const;
    SymFunc truncated(int D) const;
    // Terms of exact degree k.
    SymFunc homogeneous_part(int k) const;

    std::string str() const;
    nlohmann::json to_json() const;

    void add_term(const SymMono& m, Coeff c);

private:
    void check(const SymFunc& o) const;
    int D_ = 0;
    Map terms_;
};

// Ring endomorphism given by images of e_k(x) and e_k(y).
SymFunc substitute(const SymFunc& f, const std::vector<SymFunc>& x_images, const std::vector<SymFunc>& y_images);

SymFunc omega_y(const SymFunc& f);
SymFunc omega_x(const SymFunc& f);

// e_k over an alphabet selector; XY is the union alphabet.
SymFunc elementary(int k, Alphabet a, int D);
SymFunc complete(int k, Alphabet a, int D);

SymFunc schur(const Partition& lambda, Alphabet a, int D);
SymFunc hook_schur(const Partition& lambda, int D);

// Substitute e_k(x), e_k(y) by elementary symmetric polynomials of the given
// values.  All values must live in the same ring.
LaurentPoly specialize(const SymFunc& f, const std::vector<LaurentPoly>& x_values,
                       const std::vector<LaurentPoly>& y_values, int nvars);

std::vector<LaurentPoly> elementary_of_values(const std::vector<LaurentPoly>& values, int kmax, int nvars);

}  // namespace superchar
