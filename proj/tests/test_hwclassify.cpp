#include "doctest.h"

#include "superchar/hwclassify.hpp"

#include <set>

using namespace superchar;

namespace {

HalfIndex H(int twice) { return HalfIndex::from_twice(twice); }

std::vector<GeneralizedPartition> admissible(Algebra a, int d, int max_size) {
    std::vector<GeneralizedPartition> out;
    switch (a) {
        case Algebra::GL:
        case Algebra::A:
            for (auto& g : generalized_in_box(d, max_size))
                if (g.size() <= max_size) out.push_back(g);
            break;
        case Algebra::C:
            for (auto& p : partitions_of_size_at_most(d, max_size)) out.push_back(p);
            break;
        case Algebra::D:
            for (auto& p : orthogonal_partitions(d, max_size)) out.push_back(p);
            break;
        case Algebra::GLOne: break;
    }
    return out;
}

// Level bound evaluated directly from the classification clauses.
long bound_lhs(const Weight& w) {
    auto x = [&](int t) { return w.xi(H(t)); };
    switch (w.algebra) {
        case Algebra::GL: return std::min(x(1), 1) + x(2) - x(0);
        case Algebra::A: return std::min(x(1), 1) + std::min(-x(-1), 1) + x(2) - x(-2);
        case Algebra::C: return std::min(x(1), 1) + x(2);
        case Algebra::D: return x(2) + x(4) + (x(1) >= 2 ? 2 : x(1)) + std::min(x(3), 1);
        case Algebra::GLOne: return x(2) - x(0);
    }
    return 0;
}

Rational bound_rhs(const Weight& w) { return w.algebra == Algebra::D ? w.level * 2 : w.level; }

}  // namespace

TEST_CASE("weight examples") {
    auto c1 = weight_from_partition(Algebra::C, Partition({1}));
    CHECK(c1.coeffs == std::map<HalfIndex, int>{{H(1), 1}});
    CHECK(c1.level == 1);

    auto g0 = weight_from_partition(Algebra::GL, GeneralizedPartition({0, 0, 0}));
    CHECK(g0.coeffs.empty());
    CHECK(g0.level == 3);

    auto d1 = weight_from_partition(Algebra::D, Partition({1, 0, 0}));
    CHECK(d1.coeffs == std::map<HalfIndex, int>{{H(1), 1}});
    CHECK(d1.level == Rational(3, 2));

    for (auto& w : {c1, g0, d1}) CHECK(weight_from_partition(w.algebra, partition_from_weight(w)) == w);
    CHECK(partition_from_weight(c1) == GeneralizedPartition({1}));
    CHECK(partition_from_weight(d1) == GeneralizedPartition({1, 0, 0}));
}

TEST_CASE("inadmissible partitions") {
    CHECK_THROWS(weight_from_partition(Algebra::C, GeneralizedPartition({1, -1})));
    CHECK_THROWS(weight_from_partition(Algebra::D, Partition({2, 2})));
    CHECK_THROWS(weight_from_partition(Algebra::GLOne, Partition({1})));
    CHECK_THROWS(weight_from_partition(Algebra::GL, GeneralizedPartition()));
}

TEST_CASE("C weight from the (2,1|2,0) datum") {
    FrobeniusData f;
    f.pos_half = {2, 1};
    f.pos_int = {2, 0};
    f.length_bound = 3;
    auto lam = from_frobenius(f);
    CHECK(lam == GeneralizedPartition({2, 2, 1}));

    auto at2 = Weight::parse("C: 1/2:2,3/2:1,1:2; level=2");
    auto v = is_unitarizable(at2);
    CHECK_FALSE(v.unitarizable);
    CHECK(v.violated == "(ii)");
    CHECK_THROWS(partition_from_weight(at2));

    auto at3 = Weight::parse("C: 1/2:2,3/2:1,1:2; level=3");
    CHECK(is_unitarizable(at3).unitarizable);
    CHECK(partition_from_weight(at3) == lam);
}

TEST_CASE("equal half entries are rejected") {
    auto w = Weight::parse("C: 1/2:1,3/2:1; level=3");
    auto v = is_unitarizable(w);
    CHECK_FALSE(v.unitarizable);
    CHECK(v.violated == "(i)");
    CHECK_THROWS(partition_from_weight(w));
}

TEST_CASE("unitarizability examples") {
    CHECK(is_unitarizable(weight_from_partition(Algebra::C, Partition({1}))).unitarizable);

    auto c = Weight::parse("C: 1/2:2,1:1; level=1");
    auto v = is_unitarizable(c);
    CHECK_FALSE(v.unitarizable);
    CHECK(v.violated == "(ii)");
    CHECK(v.trace.back().detail.find("2 <= 1") != std::string::npos);

    auto d = Weight::make(Algebra::D, {{H(1), 2}, {H(2), 1}}, Rational(3, 2));
    CHECK(is_unitarizable(d).unitarizable);
    auto d2 = Weight::make(Algebra::D, {{H(1), 2}, {H(2), 1}}, Rational(1));
    CHECK(is_unitarizable(d2).violated == "(ii)");

    CHECK(is_unitarizable(Weight::make(Algebra::C, {}, Rational(1, 2))).violated == "level");
    CHECK(is_unitarizable(Weight::make(Algebra::D, {}, Rational(1, 2))).unitarizable);
    CHECK(is_unitarizable(Weight::make(Algebra::D, {}, Rational(1, 3))).violated == "level");
}

TEST_CASE("l12") {
    CHECK(l12(0) == 0);
    CHECK(l12(1) == 1);
    CHECK(l12(2) == 2);
    CHECK(l12(7) == 2);
}

TEST_CASE("index sets") {
    CHECK_THROWS(Weight::make(Algebra::C, {{H(0), 1}}, 1));
    CHECK_THROWS(Weight::make(Algebra::A, {{H(0), 1}}, 1));
    CHECK_THROWS(Weight::make(Algebra::GLOne, {{H(1), 1}}, 1));
    CHECK_NOTHROW(Weight::make(Algebra::GL, {{H(0), -1}, {H(-1), 1}}, 1));
    CHECK_THROWS(Weight::parse("D: 0:1; level=1"));
}

TEST_CASE("quasi-finiteness certificate") {
    auto z = Weight::make(Algebra::GL, {}, 2);
    CHECK(is_quasifinite(z).ok);
    CHECK(is_quasifinite(z).bound == H(0));
    auto w = Weight::make(Algebra::A, {{H(-5), -1}, {H(2), 1}}, 2);
    CHECK(is_quasifinite(w).bound == H(5));
}

TEST_CASE("literal and json round trips") {
    auto w = Weight::parse("A: -1/2:-1,1/2:2,1:1; level=3");
    CHECK(w.algebra == Algebra::A);
    CHECK(w.xi(H(-1)) == -1);
    CHECK(Weight::parse(w.str()) == w);
    CHECK(Weight::from_json(w.to_json()) == w);
    Algebra fb = Algebra::C;
    CHECK(Weight::parse("1/2:1; level=1", &fb) == weight_from_partition(Algebra::C, Partition({1})));
    CHECK_THROWS(Weight::parse("1/2:1; level=1"));
    CHECK_THROWS(Weight::parse("C: 1/2:1"));
    CHECK_THROWS(Weight::parse("C: 1/2:1,1/2:2; level=1"));
    CHECK_THROWS(Weight::parse("E: 1/2:1; level=1"));
}

TEST_CASE("admissible partitions give unitarizable weights") {
    for (Algebra a : {Algebra::GL, Algebra::A, Algebra::C, Algebra::D}) {
        for (int d = 1; d <= 3; ++d) {
            std::set<std::map<HalfIndex, int>> seen;
            auto lams = admissible(a, d, 4);
            REQUIRE(!lams.empty());
            for (auto& lam : lams) {
                auto w = weight_from_partition(a, lam);
                auto v = is_unitarizable(w);
                INFO(algebra_name(a), " ", lam.str(), " -> ", w.str(), " ", v.violated);
                CHECK(v.unitarizable);
                CHECK(Rational(bound_lhs(w)) <= bound_rhs(w));
                CHECK(partition_from_weight(w) == lam);
                seen.insert(w.coeffs);
            }
            CHECK(seen.size() == lams.size());
        }
    }
}

TEST_CASE("weights agree with the Frobenius reading") {
    // gl: the weight is the Frobenius datum itself
    for (auto& lam : admissible(Algebra::GL, 3, 4)) {
        auto f = to_frobenius(lam);
        CHECK(frobenius_violation(f).empty());
        auto w = weight_from_partition(Algebra::GL, lam);
        for (int t = -10; t <= 10; ++t) CHECK(w.xi(H(t)) == f.xi(H(t)));
    }
    // A: positive side from lambda+, negative side from the star of lambda-
    auto w = weight_from_partition(Algebra::A, GeneralizedPartition({2, 0, -1}));
    CHECK(w.xi(H(1)) == 2);
    CHECK(w.xi(H(2)) == 0);
    CHECK(w.xi(H(-1)) == -1);
    CHECK(w.xi(H(-2)) == 0);
}

TEST_CASE("boundary sharpness") {
    int tight = 0;
    for (Algebra a : {Algebra::GL, Algebra::A, Algebra::C, Algebra::D}) {
        for (int d = 1; d <= 3; ++d) {
            for (auto& lam : admissible(a, d, 6)) {
                auto w = weight_from_partition(a, lam);
                if (Rational(bound_lhs(w)) != bound_rhs(w)) continue;
                ++tight;
                // raising the leading integer coefficient keeps the chains and breaks only the bound
                int t = 2;
                if (a == Algebra::GL && w.coeffs.count(H(0)) && !w.coeffs.count(H(2)) && !w.coeffs.count(H(1))) t = 0;
                auto c = w.coeffs;
                if (t == 0) c[H(0)] -= 1;
                else c[H(2)] += 1;
                auto bumped = Weight::make(a, c, w.level);
                if (bumped.xi(H(1)) == 0 && a != Algebra::GL) continue;  // chain clause would fire first
                auto v = is_unitarizable(bumped);
                INFO(algebra_name(a), " ", lam.str(), " -> ", bumped.str());
                CHECK_FALSE(v.unitarizable);
                CHECK(v.violated == v.trace.back().name);
                for (std::size_t i = 0; i + 1 < v.trace.size(); ++i) CHECK(v.trace[i].holds);
            }
        }
    }
    CHECK(tight > 10);
}

TEST_CASE("glone chains") {
    CHECK(is_unitarizable(Weight::parse("glone: 1:2,2:1,0:-1; level=3")).unitarizable);
    CHECK(is_unitarizable(Weight::parse("glone: 1:2,2:1,0:-1; level=2")).violated == "(iii)");
    CHECK(is_unitarizable(Weight::parse("glone: 1:1,2:1; level=3")).violated == "(i)");
    CHECK(is_unitarizable(Weight::parse("glone: -1:-1,0:-1; level=3")).violated == "(ii)");
    CHECK(is_unitarizable(Weight::parse("glone: -1:-1,0:-2; level=3")).unitarizable);
}

TEST_CASE("gl negative chains") {
    // lambda = (0,-1): Frobenius datum xi_{-1/2} = 0, xi_0 = -1
    auto w = weight_from_partition(Algebra::GL, GeneralizedPartition({0, -1}));
    CHECK(w.xi(H(0)) == -1);
    CHECK(is_unitarizable(w).unitarizable);
    CHECK(is_unitarizable(Weight::parse("gl: -1/2:-1; level=2")).violated == "(ii)");
    CHECK(is_unitarizable(Weight::parse("gl: 0:1; level=2")).violated == "(ii)");
    CHECK(is_unitarizable(Weight::parse("gl: 1/2:0,1:1; level=2")).violated == "(i)");
}
