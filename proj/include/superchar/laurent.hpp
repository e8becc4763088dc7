#pragma once

#include "superchar/common.hpp"

#include "json.hpp"

#include <array>
#include <string>
#include <vector>

namespace superchar {

constexpr int kMaxVars = 16;

// Exponent vector (doubled) plus the eps parity bit.
struct LKey {
    std::array<std::int16_t, kMaxVars> e{};
    std::uint8_t eps = 0;

    auto operator<=>(const LKey&) const = default;
    bool operator==(const LKey&) const = default;
};

// Integer Laurent polynomial with half-integral exponents allowed (stored
// doubled) and an optional marker eps with eps^2 = 1.
class LaurentPoly {
public:
    struct Term {
        LKey key;
        Coeff c;
    };

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars);
    static LaurentPoly constant(int nvars, Coeff c);
    static LaurentPoly var(int nvars, int i, int power = 1);        // z_i^power
    static LaurentPoly monomial(int nvars, const std::vector<int>& doubled, int eps = 0, Coeff c = 1);
    static LaurentPoly eps_marker(int nvars);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(const LKey& k) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(Coeff c) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact division by an integer; throws if some coefficient is not divisible.
    LaurentPoly divided_by(Coeff c) const;
    LaurentPoly pow(int k) const;

    // Multiply every term by a monomial (doubled exponents).
    LaurentPoly shifted(const std::vector<int>& doubled, int eps = 0) const;

    // Re-embed into a ring with `nvars` variables: variable i goes to slot map[i]
    // raised to sign[i] (+1 or -1).
    LaurentPoly remap(int nvars, const std::vector<int>& slot, const std::vector<int>& sign) const;

    // Keep only terms whose weighted degree sum_i w_i * e_i (e doubled) <= bound.
    LaurentPoly truncate_weighted(const std::vector<int>& weights, long bound) const;

    // Set eps to +1.
    LaurentPoly drop_eps() const;
    BigInt eval_one() const;

    bool invariant_under_permutation(const std::vector<int>& perm) const;
    bool invariant_under_inversion(int i) const;

    std::string str(const std::vector<std::string>& names = {}) const;
    nlohmann::json to_json() const;

    static LaurentPoly from_terms(int nvars, std::vector<Term> raw);

private:
    void normalize();
    int nvars_ = 0;
    std::vector<Term> terms_;  // sorted by key, no zero coefficients
};

std::vector<std::string> default_names(int nvars, const std::string& stem = "z");

// Determinant over a commutative ring by expansion over column subsets.
template <class R>
R ring_det(const std::vector<std::vector<R>>& m, const R& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    std::vector<R> dp(size_t(1) << n);
    std::vector<char> set(size_t(1) << n, 0);
    dp[0] = one;
    set[0] = 1;
    for (int row = 0; row < n; ++row) {
        std::vector<R> next(size_t(1) << n);
        std::vector<char> nset(size_t(1) << n, 0);
        for (size_t mask = 0; mask < dp.size(); ++mask) {
            if (!set[mask] || __builtin_popcountll(mask) != row) continue;
            for (int j = 0; j < n; ++j) {
                if (mask & (size_t(1) << j)) continue;
                if (m[row][j].is_zero()) continue;
                int above = __builtin_popcountll(mask >> (j + 1));
                R term = dp[mask] * m[row][j];
                if (above & 1) term = -term;
                size_t nm = mask | (size_t(1) << j);
                if (nset[nm]) next[nm] = next[nm] + term;
                else next[nm] = term, nset[nm] = 1;
            }
        }
        dp.swap(next);
        set.swap(nset);
    }
    size_t full = (size_t(1) << n) - 1;
    if (!set[full]) return one - one;
    return dp[full];
}

}  // namespace superchar
