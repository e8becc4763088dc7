#pragma once

#include "superchar/common.hpp"
#include "superchar/hwclassify.hpp"
#include "superchar/infmat.hpp"
#include "superchar/laurent.hpp"
#include "superchar/laurentchars.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superchar {

enum class Field { PsiP, PsiM, GamP, GamM, Phi, Chi };

struct Mode {
    Field field = Field::PsiP;
    int color = 0;  // 1..d, 0 for phi/chi
    HalfIndex index;

    int parity() const { return field == Field::PsiP || field == Field::PsiM || field == Field::Phi ? 1 : 0; }
    bool operator==(const Mode&) const = default;
    auto operator<=>(const Mode&) const = default;
    std::string str() const;  // "g+[1,-1/2]", "phi[-1]"
};

Mode psi_p(int c, HalfIndex i);
Mode psi_m(int c, HalfIndex i);
Mode gam_p(int c, HalfIndex r);
Mode gam_m(int c, HalfIndex r);
Mode phi(HalfIndex i);
Mode chi(HalfIndex r);

// GL: the gl(inf|inf) space with psi zero modes; Zero: psi indices in Z*;
// Half: Zero plus the phi/chi pair.
enum class SpaceKind { GL, Zero, Half };

struct Space {
    SpaceKind kind = SpaceKind::Zero;
    int d = 1;

    bool contains(const Mode& m) const;
    bool annihilates(const Mode& m) const;  // m|0> = 0
    Rational central_charge() const { return kind == SpaceKind::Half ? Rational(2 * d + 1, 2) : Rational(d); }
    std::string str() const;
};

using Monomial = std::vector<Mode>;  // canonical order, creation modes only

int energy_twice(const Monomial& m);

class FockVector {
public:
    using Map = std::map<Monomial, Rational>;

    FockVector() = default;
    static FockVector vacuum();
    static FockVector of(const Monomial& m, Rational c = 1);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Monomial& m) const;
    int max_energy_twice() const;
    // All monomials share one energy.
    bool homogeneous() const;

    void add(const Monomial& m, const Rational& c);
    FockVector& operator+=(const FockVector& o);
    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector operator*(const Rational& c) const;
    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

    std::string str() const;
    nlohmann::json to_json() const;
    // "g+[1,-1/2] g-[1,-3/2] |0>", terms joined by " + " / " - ", optional "c*" prefix.
    static FockVector parse(const std::string& s);

private:
    Map terms_;
};

// Graded commutator [a, b] as a scalar.
Rational contraction(const Mode& a, const Mode& b);

FockVector apply_mode(const Space& sp, const Mode& m, const FockVector& v);
// P(creation modes) v, where P is given through P|0>.
FockVector multiply(const Space& sp, const FockVector& creation_poly, const FockVector& v);

// c :A B:
struct Bilinear {
    Rational c;
    Mode a, b;
};

// sum_n c(n) :A_{-n} B_n: over the index set of B, c depending on sign(n).
struct Series {
    Field fa;
    int ca;
    Field fb;
    int cb;
    Rational c_pos, c_neg, c_zero;
};

class RealizedOp {
public:
    std::vector<Bilinear> fixed;
    std::vector<Series> series;
    Rational scalar = 0;

    RealizedOp& operator+=(const RealizedOp& o);
    RealizedOp operator+(const RealizedOp& o) const;
    RealizedOp operator*(const Rational& c) const;

    // Summands with |n| <= E suffice on a vector of energy <= E.
    FockVector apply(const Space& sp, const FockVector& v) const;
    std::string str() const;
};

RealizedOp realize_e(const Space& sp, HalfIndex p, HalfIndex q);
RealizedOp realize_matrix(const Space& sp, const SuperMatrix& a);
// e~_pq of C or D; on the Half space D gets the phi/chi terms.
RealizedOp realize_tilde(const Space& sp, Family fam, HalfIndex p, HalfIndex q);
// A in C^f or D^f split into e~ generators (largest key first).
std::vector<std::pair<Rational, SuperMatrix::Key>> tilde_decompose(Family fam, const SuperMatrix& a);
RealizedOp realize_tilde_matrix(const Space& sp, Family fam, const SuperMatrix& a);
RealizedOp realize_central(const Space& sp);

enum class GroupOp { E, SpPlus, SpMinus, SoPlus, SoMinus, SoPlusI, SoMinusI };
RealizedOp realize_group(const Space& sp, GroupOp op, int i, int j = 0);

// rho(A)rho(B) - (-1)^{|A||B|} rho(B)rho(A) = rho([A,B]) + alpha(A,B) C on every
// basis vector of energy <= cutoff.  With `fam`, A and B are realized through
// the e~ generators of that family.
struct HomomorphismReport {
    bool ok = true;
    std::string witness;
    int vectors = 0;
};
HomomorphismReport homomorphism_check(const Space& sp, const SuperMatrix& a, const SuperMatrix& b, HalfIndex cutoff,
                                      std::optional<Family> fam = std::nullopt);

// Creation modes with energy <= cutoff, and all monomials in them.
std::vector<Mode> creation_modes(const Space& sp, HalfIndex cutoff);
std::vector<Monomial> enumerate_basis(const Space& sp, HalfIndex cutoff);
std::vector<Monomial> basis_at_energy(const Space& sp, HalfIndex energy);

using ModeMatrix = std::vector<std::vector<Mode>>;
using SignMatrix = std::vector<std::vector<int>>;  // +-1 per entry, empty for all +1

// sum_sigma sgn(sigma) M_{1 sigma(1)} ... M_{r sigma(r)} |0>
FockVector grassmann_det(const Space& sp, const ModeMatrix& m, int r, const SignMatrix& signs = {});

// X^j for j != 0 (j < 0 gives X^{-|j|}), X~^j, Gamma and Gamma~.
ModeMatrix matrix_X(int d, int j);
ModeMatrix matrix_X_tilde(int d, int j);
ModeMatrix matrix_Gamma(int d);
ModeMatrix matrix_Gamma_tilde(int d);

// Duality setup: A and C on F_0 with GL(d) / Sp(2d); D with O(n) on F_0
// (n = 2d) or on the Half space (n = 2d+1); gl on the GL space with GL(d).
struct Setting {
    Algebra algebra = Algebra::C;
    Space space;
    GroupTag group;
    int n = 0;  // O(n) for D, else d

    static Setting make(Algebra a, int n_or_d);
    Rational level() const;
    std::string str() const;
};

struct HwvCandidate {
    std::string reading;  // which product of minors
    FockVector vector;
    std::vector<int> group_weight;  // expected torus weight, length rank
    int eps = 0;                    // expected parity of -I for odd O(n)
};

std::vector<HwvCandidate> hwv_candidates(const Setting& s, const GeneralizedPartition& lambda);

struct SingularityReport {
    bool singular = true;
    std::string witness;  // first generator with nonzero image
    int checked = 0;
};

// Algebra raising generators with |p|,|q| <= E+1, plus the group raising operators.
SingularityReport singularity_check(const Setting& s, const FockVector& v, bool with_group = true);

// Eigenvalues of the algebra Cartan (e_ss / e~_ss) and of E_ii; nullopt when
// v is not a joint eigenvector.
std::optional<Weight> extract_weight(const Setting& s, const FockVector& v);
std::optional<std::vector<int>> extract_group_weight(const Setting& s, const FockVector& v);
// Number of modes mod 2 when every monomial agrees.
std::optional<int> eps_parity(const FockVector& v);

enum class Conjugation { Paper, Naive };

Mode conjugate_mode(const Mode& m, Conjugation c, Rational& sign);
Rational inner(const Space& sp, const FockVector& u, const FockVector& v, Conjugation c = Conjugation::Paper);
std::vector<std::vector<Rational>> gram_matrix(const Space& sp, HalfIndex energy, Conjugation c);
std::vector<Rational> leading_minors(const std::vector<std::vector<Rational>>& m);

// Variable layout for graded characters: z_1..z_rank, then one slot per
// x_j and y_r that can occur below the cutoff.
struct CharLayout {
    int rank = 0;
    std::vector<HalfIndex> slots;  // index of each x/y slot, in order
    int nvars() const { return rank + static_cast<int>(slots.size()); }
    int slot(HalfIndex k) const;  // -1 when absent
    std::vector<int> weights() const;  // energy weights for truncate_weighted
    long bound(HalfIndex cutoff) const;
    std::vector<std::string> names() const;
};

CharLayout char_layout(const Setting& s, HalfIndex cutoff);
LaurentPoly monomial_weight(const Setting& s, const CharLayout& L, const Monomial& m);
LaurentPoly fock_character(const Setting& s, HalfIndex cutoff);
LaurentPoly product_character(const Setting& s, HalfIndex cutoff);

struct DualityResult {
    Setting setting;
    HalfIndex cutoff;
    CharLayout layout;
    Decomposition decomposition;
    bool multiplicity_free = true;
};

DualityResult duality_decompose(const Setting& s, HalfIndex cutoff);

// Truncated HS^{sp,d}_lambda (C) or HS^{so,n/2}_lambda (D, paired with
// bar lambda for even n); lambda is a label of the decomposition.
LaurentPoly expected_branching(const DualityResult& r, const GeneralizedPartition& lambda);
// The highest weight read off from the lowest energy term of a branching coefficient.
Weight branching_weight(const DualityResult& r, const LaurentPoly& coeff);

}  // namespace superchar
