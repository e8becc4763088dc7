#pragma once

#include "superchar/laurent.hpp"
#include "superchar/laurentchars.hpp"
#include "superchar/partitions.hpp"
#include "superchar/symring.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superchar {

enum class SeriesBase { Elementary, Complete, HookUnit };
enum class SchurFamily { Sp, So };
enum class Variant { Plain, Skew, Hook };

// Sum_{i>=0} g_i g_{r+i} truncated at D.  Elementary and Complete use the
// given alphabet; HookUnit uses g_i = HS_{(1^i)}(x,y).
SymFunc etilde_series(int r, SeriesBase base, int D, Alphabet a = Alphabet::X);

// Reading of the even orthogonal minor |e~^diamond|.  Unshifted takes rows
// from lambda_{d-i}; Shifted takes them from lambda_{d-i} - 1.
enum class DiamondReading { Unshifted, Shifted };

struct SchurOptions {
    int prime_shift = 2;  // e~'_r = e~_r - e~_{r + prime_shift}
    DiamondReading diamond = DiamondReading::Unshifted;
};

// Determinant formulas over any commutative ring, driven by the base
// sequence g_k (returns zero outside the available range).
template <class R>
struct SchurEngine {
    SchurEngine(std::function<R(int)> g_, int top_, R one_, SchurOptions opt_ = {})
        : g(std::move(g_)), top(top_), one(std::move(one_)), opt(opt_) {}

    std::function<R(int)> g;
    int top;  // g_k = 0 for k > top
    R one;
    SchurOptions opt;

    R etilde(int r) const;
    R etilde_prime(int r) const { return etilde(r) - etilde(r + opt.prime_shift); }
    R sp(const std::vector<int>& lambda) const;
    R so(const Partition& lambda, int n) const;

private:
    R sum_g(int sign) const;
    mutable std::map<int, R> memo_;
};

SymFunc sp_schur(const Partition& lambda, int D, SchurOptions opt = {});
SymFunc sp_skew(const Partition& lambda, int D, SchurOptions opt = {});
SymFunc sp_hook(const Partition& lambda, int D, SchurOptions opt = {});
// Determinant built directly from the hook-unit series.
SymFunc sp_hook_direct(const Partition& lambda, int D);

SymFunc so_schur(const Partition& lambda, int n, int D, SchurOptions opt = {});
SymFunc so_skew(const Partition& lambda, int n, int D, SchurOptions opt = {});
SymFunc so_hook(const Partition& lambda, int n, int D, SchurOptions opt = {});

SymFunc schur_function(SchurFamily f, Variant v, const Partition& lambda, int n_or_d, int D);

// Exact polynomials in x_1..x_m (slots 0..m-1) from the same determinants.
LaurentPoly sp_schur_poly(const Partition& lambda, int m, SchurOptions opt = {});
LaurentPoly so_schur_poly(const Partition& lambda, int n, int m, SchurOptions opt = {});

// (x_1...x_m)^w times the classical so/sp character of the reflected
// weight, via x_i = z_{m-i+1}^{-1}.  lambda_1 <= m required.
LaurentPoly sp_character_oracle(const Partition& lambda, int d, int m);
LaurentPoly so_character_oracle(const Partition& lambda, int n, int m);

// eps-weighted series: element of SymFunc (x) LaurentPoly(z, eps), keyed by
// the z/eps exponent.
struct CharTensor {
    int D = 0;
    std::map<LKey, SymFunc> terms;

    void add(const LKey& k, const SymFunc& f);
    CharTensor operator*(const CharTensor& o) const;
    static CharTensor one(int D);
    // chi (x) f
    static CharTensor outer(const LaurentPoly& chi, const SymFunc& f);
};

struct IdentityParams {
    int d = 1;   // Sp(2d)
    int n = 0;   // O(n)
    int D = 4;   // truncation degree
    int m = 0;   // number of variables for the finite identities
    int jobs = 1;
    SchurOptions schur;  // conventions used for the Schur side
};

struct Mismatch {
    std::vector<int> z_exponent;  // doubled
    int eps = 0;
    std::string monomial;
    std::string lhs, rhs;
};

struct IdentityReport {
    std::string identity;
    IdentityParams params;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    std::size_t compared = 0;  // number of coefficients compared

    nlohmann::json to_json() const;
};

const std::vector<std::string>& identity_tags();
IdentityReport verify_identity(const std::string& tag, const IdentityParams& p);

struct BatteryItem {
    std::string tag;
    IdentityParams params;
};
// Desk-scale parameter grid for every identity; `small` keeps D <= 4.
std::vector<BatteryItem> identity_battery(bool small);

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace superchar
