#pragma once

#include "superchar/laurent.hpp"
#include "superchar/partitions.hpp"

#include <map>
#include <string>
#include <vector>

namespace superchar {

enum class GroupKind { GL, Sp, O };

// size is d for GL(d) and Sp(2d), n for O(n).
struct GroupTag {
    GroupKind kind = GroupKind::GL;
    int size = 1;

    // Number of torus variables z_1..z_rank.
    int rank() const { return kind == GroupKind::O ? size / 2 : size; }
    bool uses_eps() const { return kind == GroupKind::O && size % 2 == 1; }

    bool operator==(const GroupTag&) const = default;
    std::string str() const;  // "GL(3)", "Sp(4)", "O(5)"
    static GroupTag parse(const std::string& s);
};

// E_r over the 2m values z_i, z_i^{-1} (slots 0..m-1).
LaurentPoly elementary_laurent(int r, int m);
// E_0..E_{2m}; with_one appends the value 1 to the alphabet.
std::vector<LaurentPoly> elementary_laurent_all(int m, bool with_one = false);

LaurentPoly classical_char_sp(const Partition& mu, int m);
// so(2m) weight given by doubled entries; all even or all odd.
LaurentPoly classical_char_so(const std::vector<int>& doubled, int m);
// so(2d+1) weight given by a partition with at most d nonzero parts.
LaurentPoly classical_char_so_odd(const Partition& mu, int d);
LaurentPoly classical_char_gl(const GeneralizedPartition& lambda, int d);

// Pads or validates a label for the group; throws InadmissibleWeight.
GeneralizedPartition admissible_label(const GroupTag& G, const GeneralizedPartition& lambda);
std::vector<GeneralizedPartition> admissible_labels(const GroupTag& G, int max_size);

LaurentPoly char_group(const GroupTag& G, const GeneralizedPartition& lambda);

// Greedy peeling over the z-variables (slots 0..rank-1, plus eps for odd O).
// Coefficients are whatever remains in the other slots.
struct Decomposition {
    GroupTag group;
    std::map<GeneralizedPartition, LaurentPoly> parts;
    // Even O(n): each label with lambda'_1 < n/2 stands for the pair {lambda, bar lambda}.
    bool bar_merged = false;

    std::map<GeneralizedPartition, Coeff> multiplicities() const;
    nlohmann::json to_json() const;
};

Decomposition decompose_graded(const LaurentPoly& f, const GroupTag& G, bool require_nonnegative = true);
std::map<GeneralizedPartition, Coeff> decompose_character(const LaurentPoly& f, const GroupTag& G);
std::map<GeneralizedPartition, Coeff> tensor_multiplicity(const GroupTag& G, const GeneralizedPartition& mu,
                                                          const GeneralizedPartition& nu);

bool weyl_symmetric(const LaurentPoly& f, const GroupTag& G);

}  // namespace superchar
