#pragma once

#include "superchar/common.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace superchar {

// Non-increasing integer sequence with an explicit length.  Trailing zeros
// count: (2,0,0) and (2,0) are different values.
class GeneralizedPartition {
public:
    GeneralizedPartition() = default;
    explicit GeneralizedPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[i]; }  // 0-based
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }  // 1-based

    bool nonnegative() const;
    bool nonpositive() const;
    bool is_zero() const;
    int size() const;  // sum of |parts|

    bool operator==(const GeneralizedPartition&) const = default;
    auto operator<=>(const GeneralizedPartition&) const = default;

    std::string str() const;
    static GeneralizedPartition parse(const std::string& s);

protected:
    std::vector<int> parts_;
};

class Partition : public GeneralizedPartition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Conjugate as a plain list of column lengths (no declared length).
    std::vector<int> columns() const;
    int column(int j) const;  // lambda'_j, 1-based, 0 past the end
    int depth() const;        // number of positive parts

    static Partition parse(const std::string& s);
};

Partition transpose(const Partition& lambda);
int rank(const GeneralizedPartition& lambda);

// lambda* = (-lambda_d, ..., -lambda_1) for a non-positive lambda.
Partition star(const GeneralizedPartition& lambda);

struct SignSplit {
    Partition plus;
    GeneralizedPartition minus;
};
SignSplit split_signs(const GeneralizedPartition& lambda);

// Quartet of shifted Frobenius coordinates.
//
// Every sequence is stored in display order and is strictly decreasing:
//   pos_half[k] = xi_{k+1/2},      k = 0..r-1
//   pos_int[k]  = xi_{k+1},        k = 0..r-1
//   neg_half[k] = xi_{s+1/2+k},    k = 0..|s|-1   (last entry is xi_{-1/2})
//   neg_int[k]  = xi_{s+1+k},      k = 0..|s|-1   (last entry is xi_0)
// The zero partition is the datum with all four sequences empty.
struct FrobeniusData {
    std::vector<int> neg_half, neg_int, pos_half, pos_int;
    int length_bound = 0;

    int r() const { return static_cast<int>(pos_half.size()); }
    int s() const { return -static_cast<int>(neg_half.size()); }

    // Coefficient at the half-integer index j (0 when absent).
    int xi(HalfIndex j) const;

    bool operator==(const FrobeniusData&) const = default;

    std::string str() const;
    static FrobeniusData parse(const std::string& s, int length_bound);
};

FrobeniusData to_frobenius(const GeneralizedPartition& lambda);
GeneralizedPartition from_frobenius(const FrobeniusData& f);

// Returns the name of the first violated constraint, or empty when valid.
std::string frobenius_violation(const FrobeniusData& f);

Partition bar_conjugate(const Partition& lambda, int n);

// All partitions with at most `len` parts, parts <= max_part, padded to `len`.
std::vector<Partition> partitions_in_box(int len, int max_part);
std::vector<Partition> partitions_of_size_at_most(int len, int max_size);
std::vector<GeneralizedPartition> generalized_in_box(int len, int max_abs);

// Partitions of length n with lambda'_1 + lambda'_2 <= n and |lambda| <= max_size.
std::vector<Partition> orthogonal_partitions(int n, int max_size);

nlohmann::json to_json(const GeneralizedPartition& p);
nlohmann::json to_json(const FrobeniusData& f);

}  // namespace superchar
