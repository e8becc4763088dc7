#include "doctest.h"
#include "superchar/infmat.hpp"

#include <random>

using namespace superchar;

namespace {

HalfIndex H(int twice) { return HalfIndex::from_twice(twice); }
SuperMatrix E(int p2, int q2) { return SuperMatrix::unit(H(p2), H(q2)); }

SuperMatrix random_homogeneous(std::mt19937& rng, int parity, bool nonzero_indices = false) {
    std::uniform_int_distribution<int> idx(-6, 6), coef(-3, 3), count(1, 4);
    SuperMatrix m;
    int n = count(rng);
    while (n > 0) {
        int p = idx(rng), q = idx(rng);
        if (nonzero_indices && (p == 0 || q == 0)) continue;
        if (((p & 1) + (q & 1)) % 2 != parity) continue;
        m.add(H(p), H(q), coef(rng));
        --n;
    }
    return m;
}

int sgn_pow(int e) { return (e & 1) ? -1 : 1; }

}  // namespace

TEST_CASE("bracket examples") {
    CHECK(super_bracket(E(0, 2), E(2, 0)) == E(0, 0) - E(2, 2));
    CHECK(super_bracket(E(1, 2), E(2, 1)) == E(1, 1) + E(2, 2));
    SuperMatrix a = E(0, 2) + E(2, 4) * Rational(3);
    CHECK(super_bracket(a, a).is_zero());
}

TEST_CASE("supertrace and cocycle examples") {
    CHECK(supertrace(E(0, 0)) == 1);
    CHECK(supertrace(E(1, 1)) == -1);
    CHECK(supertrace(E(0, 2)) == 0);
    CHECK(cocycle_alpha(E(0, 2), E(2, 0)) == 1);
    CHECK(cocycle_alpha(E(2, 0), E(0, 2)) == -1);
    CHECK(cocycle_alpha(E(1, 2), E(2, 1)) == 0);
}

TEST_CASE("te_generator examples") {
    CHECK(te_generator(Family::C, H(1), H(3)) == E(1, 3) - E(-3, -1));
    CHECK(te_generator(Family::C, H(2), H(-4)) == E(2, -4) + E(4, -2));
    CHECK(te_generator(Family::D, H(2), H(1)) == E(2, 1) + E(-1, -2));
    CHECK_THROWS_AS(te_generator(Family::C, H(0), H(2)), Error);
}

TEST_CASE("preserves_form examples") {
    CHECK(preserves_form(te_generator(Family::C, H(1), H(3)), Family::C));
    CHECK_FALSE(preserves_form(E(2, 4), Family::C));
    CHECK(preserves_form(SuperMatrix(), Family::D));
    CHECK_THROWS_AS(preserves_form(E(2, 4) + E(1, 2), Family::C), Error);
}

TEST_CASE("json roundtrip") {
    SuperMatrix a = E(1, 3) * Rational(1, 2) - E(-3, 4);
    CHECK(SuperMatrix::from_json(a.to_json()) == a);
    CHECK(a.to_json()[0]["p"] == "-3/2");
}

TEST_CASE("super Jacobi and cocycle on random triples") {
    std::mt19937 rng(20261014);
    for (int t = 0; t < 150; ++t) {
        int pa = rng() & 1, pb = rng() & 1, pc = rng() & 1;
        auto a = random_homogeneous(rng, pa), b = random_homogeneous(rng, pb), c = random_homogeneous(rng, pc);
        auto lhs = super_bracket(a, super_bracket(b, c));
        auto rhs = super_bracket(super_bracket(a, b), c) + super_bracket(b, super_bracket(a, c)) * sgn_pow(pa * pb);
        CHECK(lhs == rhs);
        Rational s = cocycle_alpha(super_bracket(a, b), c) +
                     cocycle_alpha(super_bracket(b, c), a) * sgn_pow(pa * (pb + pc)) +
                     cocycle_alpha(super_bracket(c, a), b) * sgn_pow(pc * (pa + pb));
        CHECK(s == 0);
        // super skew-symmetry of alpha
        CHECK(cocycle_alpha(a, b) == -cocycle_alpha(b, a) * sgn_pow(pa * pb));
    }
}

TEST_CASE("alpha vanishes without boundary crossing") {
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        SuperMatrix a, b;
        for (int k = 0; k < 3; ++k) {
            a.add(H(1 + rng() % 6), H(1 + rng() % 6), 1 + rng() % 3);
            b.add(H(1 + rng() % 6), H(1 + rng() % 6), 1 + rng() % 3);
        }
        CHECK(cocycle_alpha(a, b) == 0);
        SuperMatrix c, e;
        for (int k = 0; k < 3; ++k) {
            c.add(H(-(int)(rng() % 6)), H(-(int)(rng() % 6)), 1);
            e.add(H(-(int)(rng() % 6)), H(-(int)(rng() % 6)), 1);
        }
        CHECK(cocycle_alpha(c, e) == 0);
    }
}

TEST_CASE("generator closure") {
    for (auto fam : {Family::C, Family::D}) {
        std::vector<SuperMatrix> gens;
        for (int p = -5; p <= 5; ++p)
            for (int q = -5; q <= 5; ++q) {
                if (!p || !q) continue;
                auto g = te_generator(fam, H(p), H(q));
                CHECK(preserves_form(g, fam));
                gens.push_back(g);
            }
        for (size_t i = 0; i < gens.size(); i += 7)
            for (size_t j = 0; j < gens.size(); j += 5) CHECK(preserves_form(super_bracket(gens[i], gens[j]), fam));
    }
}
