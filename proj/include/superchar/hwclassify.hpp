#pragma once

#include "superchar/common.hpp"
#include "superchar/partitions.hpp"

#include "json.hpp"

#include <map>
#include <string>
#include <vector>

namespace superchar {

enum class Algebra { GL, GLOne, A, C, D };

std::string algebra_name(Algebra a);
Algebra parse_algebra(const std::string& s);

// Sum xi_j omega_j + level * Lambda_0 with finite support.
struct Weight {
    Algebra algebra = Algebra::GL;
    std::map<HalfIndex, int> coeffs;  // zero entries are dropped
    Rational level = 0;

    static Weight make(Algebra a, const std::map<HalfIndex, int>& coeffs, Rational level);
    int xi(HalfIndex j) const;
    bool operator==(const Weight& o) const = default;

    std::string str() const;
    nlohmann::json to_json() const;
    static Weight from_json(const nlohmann::json& j);
    // "C: 1/2:2,1:1; level=2", or without the prefix when `fallback` is given.
    static Weight parse(const std::string& s, const Algebra* fallback = nullptr);
};

bool index_allowed(Algebra a, HalfIndex j);

// gl and A take generalized partitions of length d, C partitions of length d,
// D partitions of length n with lambda'_1 + lambda'_2 <= n (level n/2).
Weight weight_from_partition(Algebra a, const GeneralizedPartition& lambda);
GeneralizedPartition partition_from_weight(const Weight& w);

struct QuasiFinite {
    bool ok = true;
    HalfIndex bound;  // largest |index| in the support
};
QuasiFinite is_quasifinite(const Weight& w);

struct Clause {
    std::string name;
    bool holds = true;
    std::string detail;
};

struct Verdict {
    bool unitarizable = true;
    std::string violated;  // first failing clause, empty when unitarizable
    std::vector<Clause> trace;

    nlohmann::json to_json() const;
};

Verdict is_unitarizable(const Weight& w);

int l12(int x);

enum class DimSource { Character, Fock };

// dim M_{-j} for j = 0, 1/2, ..., cutoff, measured from the highest weight
// energy; entry k is the coefficient of q^{k/2}.
std::vector<BigInt> graded_dimension(const Weight& w, HalfIndex cutoff, DimSource source);

}  // namespace superchar
