#include "superchar/fock.hpp"
#include "superchar/hwclassify.hpp"
#include "superchar/superschur.hpp"

namespace superchar {

namespace {

// Energy of the highest weight vector, sum_p p xi_p, doubled.
int hw_energy_twice(const Weight& w) {
    Rational e = 0;
    for (auto& [p, x] : w.coeffs) e += Rational(p.twice, 2) * x;
    if (denominator(e) > 2) fail("NotPartitionType", "highest weight energy is not half-integral");
    Rational t = e * 2;
    return static_cast<int>(numerator(t));
}

int int_level(const Rational& r, int scale) {
    Rational v = r * scale;
    if (denominator(v) != 1) fail("NotPartitionType", "level " + rational_str(r) + " has no Fock setting");
    return static_cast<int>(numerator(v));
}

// Paired labels of even O(n) only give the sum of two modules.
void require_single(Algebra a, int n, const GeneralizedPartition& lam) {
    if (a != Algebra::D || n % 2) return;
    Partition p(lam.parts());
    if (bar_conjugate(p, n) != p)
        fail("Unsupported", "even O(" + std::to_string(n) + ") gives only the sum over " + lam.str() + " and its bar");
}

std::vector<BigInt> from_character(const Weight& w, const GeneralizedPartition& lam, int top_twice) {
    Partition p(lam.parts());
    int D = top_twice;
    SymFunc f;
    if (w.algebra == Algebra::C) f = sp_hook(p, D);
    else if (w.algebra == Algebra::D) f = so_hook(p, int_level(w.level, 2), D);
    else fail("Unsupported", "character formulas are given for C and D");
    std::vector<LaurentPoly> xs, ys;
    for (int t = 1; t <= top_twice; ++t) (t % 2 ? ys : xs).push_back(LaurentPoly::monomial(1, {t}));
    LaurentPoly q = specialize(f, xs, ys, 1).truncate_weighted({1}, top_twice);
    std::vector<BigInt> out(top_twice + 1, 0);
    for (auto& t : q.terms()) out[t.key.e[0]] += t.c;
    return out;
}

std::vector<BigInt> from_fock(const Weight& w, const GeneralizedPartition& lam, int top_twice) {
    int k = w.algebra == Algebra::D ? int_level(w.level, 2) : int_level(w.level, 1);
    Setting s = Setting::make(w.algebra, k);
    auto r = duality_decompose(s, HalfIndex::from_twice(top_twice));
    std::vector<BigInt> out(top_twice + 1, 0);
    auto it = r.decomposition.parts.find(lam);
    if (it == r.decomposition.parts.end()) return out;
    auto wts = r.layout.weights();
    for (auto& t : it->second.terms()) {
        long e = 0;
        for (int i = 0; i < r.layout.nvars(); ++i) e += static_cast<long>(wts[i]) * t.key.e[i];
        out[e / 2] += t.c;
    }
    return out;
}

}  // namespace

std::vector<BigInt> graded_dimension(const Weight& w, HalfIndex cutoff, DimSource source) {
    if (cutoff.twice < 0) fail("BadCutoff", "cutoff must be non-negative");
    auto lam = partition_from_weight(w);
    int n = w.algebra == Algebra::D ? int_level(w.level, 2) : 0;
    require_single(w.algebra, n, lam);
    int e0 = hw_energy_twice(w), top = e0 + cutoff.twice;
    auto full = source == DimSource::Character ? from_character(w, lam, top) : from_fock(w, lam, top);
    for (int t = 0; t < e0; ++t)
        if (full[t] != 0) fail("Internal", "module has states below its highest weight energy");
    return std::vector<BigInt>(full.begin() + e0, full.end());
}

}  // namespace superchar
