#include "doctest.h"
#include "oracles.hpp"
#include "superchar/laurentchars.hpp"

using namespace superchar;
using oracle::WeylType;
using Mult = std::map<GeneralizedPartition, Coeff>;

namespace {

LaurentPoly z(int n, int i, int p = 1) { return LaurentPoly::var(n, i, p); }
GeneralizedPartition gp(std::vector<int> v) { return GeneralizedPartition(std::move(v)); }

std::vector<int> doubled(const std::vector<int>& v) {
    std::vector<int> r;
    for (int x : v) r.push_back(2 * x);
    return r;
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<int> rho_doubled(WeylType t, int d) {
    std::vector<int> r(d);
    for (int i = 0; i < d; ++i) {
        if (t == WeylType::BC) r[i] = 2 * (d - i);
        else r[i] = 2 * (d - 1 - i);
    }
    return r;
}

std::vector<int> rho_b(int d) {
    std::vector<int> r(d);
    for (int i = 0; i < d; ++i) r[i] = 2 * (d - i) - 1;
    return r;
}

// Dominant so(2m) weights with |entries| <= 2 (doubled <= 4), both lattices.
std::vector<std::vector<int>> so_even_weights(int m) {
    std::vector<std::vector<int>> out;
    int total = 1;
    for (int i = 0; i < m; ++i) total *= 9;
    for (int code = 0; code < total; ++code) {
        std::vector<int> v(m);
        for (int i = 0, c = code; i < m; ++i, c /= 9) v[i] = c % 9 - 4;
        bool ok = true;
        for (int i = 0; i < m; ++i) ok = ok && (std::abs(v[i]) & 1) == (std::abs(v[0]) & 1);
        for (int i = 0; i + 1 < m; ++i) ok = ok && v[i] >= (i + 2 == m ? std::abs(v[i + 1]) : v[i + 1]);
        if (m > 1) ok = ok && v[0] >= 0;
        if (ok) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("elementary laurent") {
    CHECK(elementary_laurent(1, 1) == z(1, 0) + z(1, 0, -1));
    CHECK(elementary_laurent(2, 1) == LaurentPoly::constant(1, 1));
    CHECK(elementary_laurent(-1, 1).is_zero());
    CHECK(elementary_laurent(3, 1).is_zero());
    CHECK(elementary_laurent(0, 2) == LaurentPoly::constant(2, 1));
    CHECK(elementary_laurent(2, 2).eval_one() == 6);
}

TEST_CASE("classical character examples") {
    CHECK(classical_char_sp(Partition({1}), 1) == z(1, 0) + z(1, 0, -1));
    CHECK(classical_char_sp(Partition({2}), 1) == z(1, 0, 2) + LaurentPoly::constant(1, 1) + z(1, 0, -2));
    CHECK(classical_char_sp(Partition({0}), 1) == LaurentPoly::constant(1, 1));
    CHECK(classical_char_so({2}, 1) == z(1, 0));
    CHECK(classical_char_so({0}, 1) == LaurentPoly::constant(1, 1));
    CHECK(classical_char_so({-2}, 1) == z(1, 0, -1));
    CHECK(classical_char_so({3}, 1) == LaurentPoly::monomial(1, {3}));
    CHECK(classical_char_so({1, 1}, 2).eval_one() == 2);
    CHECK_THROWS_AS(classical_char_so({2, 4}, 2), Error);
    CHECK_THROWS_AS(classical_char_so({2, 1}, 2), Error);
    CHECK(classical_char_sp(Partition({1}), 1).str() == "z1 + z1^-1");
    CHECK(classical_char_so({1}, 1).str() == "z1^(1/2)");
}

TEST_CASE("char_group examples") {
    GroupTag sp2{GroupKind::Sp, 1}, o2{GroupKind::O, 2}, gl1{GroupKind::GL, 1};
    CHECK(char_group(sp2, gp({1})) == z(1, 0) + z(1, 0, -1));
    CHECK(char_group(o2, gp({1, 0})) == z(1, 0) + z(1, 0, -1));
    CHECK(char_group(gl1, gp({-2})) == z(1, 0, -2));
    CHECK(char_group(GroupTag{GroupKind::O, 1}, gp({1})) == LaurentPoly::eps_marker(0));
    CHECK(char_group(GroupTag{GroupKind::O, 1}, gp({0})) == LaurentPoly::constant(0, 1));
    CHECK_THROWS_AS(char_group(sp2, gp({1, 1})), Error);
    CHECK_THROWS_AS(char_group(o2, gp({2, 2})), Error);
    CHECK_THROWS_AS(char_group(gl1, gp({1, 0})), Error);
}

TEST_CASE("group tags") {
    CHECK(GroupTag::parse("Sp(4)") == GroupTag{GroupKind::Sp, 2});
    CHECK(GroupTag::parse("O(5)").rank() == 2);
    CHECK(GroupTag::parse("GL(3)").str() == "GL(3)");
    CHECK(GroupTag{GroupKind::Sp, 3}.str() == "Sp(6)");
    CHECK_THROWS_AS(GroupTag::parse("Sp(3)"), Error);
    CHECK_THROWS_AS(GroupTag::parse("O(0)"), Error);
    CHECK_THROWS_AS(GroupTag::parse("U(2)"), Error);
}

TEST_CASE("Weyl character formula: symplectic") {
    for (int d = 1; d <= 3; ++d) {
        auto rho = rho_doubled(WeylType::BC, d);
        auto Arho = oracle::alternant(WeylType::BC, rho);
        for (auto& p : partitions_of_size_at_most(d, 4)) {
            auto chi = classical_char_sp(p, d);
            CHECK_MESSAGE(chi * Arho == oracle::alternant(WeylType::BC, plus(doubled(p.parts()), rho)), p.str());
        }
    }
}

TEST_CASE("Weyl character formula: even orthogonal, integral and spin") {
    for (int m = 1; m <= 3; ++m) {
        auto rho = rho_doubled(WeylType::D, m);
        auto Arho = oracle::alternant(WeylType::D, rho);
        for (auto& nu : so_even_weights(m)) {
            auto chi = classical_char_so(nu, m);
            std::string tag;
            for (int v : nu) tag += std::to_string(v) + " ";
            CHECK_MESSAGE(chi * Arho == oracle::alternant(WeylType::D, plus(nu, rho)), tag);
        }
    }
}

TEST_CASE("Weyl character formula: odd orthogonal") {
    for (int d = 1; d <= 3; ++d) {
        auto rho = rho_b(d);
        auto Arho = oracle::alternant(WeylType::BC, rho);
        for (auto& p : partitions_of_size_at_most(d, 4)) {
            auto chi = classical_char_so_odd(p, d);
            CHECK_MESSAGE(chi * Arho == oracle::alternant(WeylType::BC, plus(doubled(p.parts()), rho)), p.str());
        }
    }
}

TEST_CASE("Weyl character formula: general linear") {
    for (int d = 1; d <= 3; ++d) {
        auto rho = rho_doubled(WeylType::A, d);
        auto Arho = oracle::alternant(WeylType::A, rho);
        for (auto& g : generalized_in_box(d, 2)) {
            auto chi = classical_char_gl(g, d);
            CHECK_MESSAGE(chi * Arho == oracle::alternant(WeylType::A, plus(doubled(g.parts()), rho)), g.str());
        }
    }
}

TEST_CASE("Weyl dimension formula for Sp(2) and Sp(4)") {
    for (int d = 1; d <= 2; ++d)
        for (auto& p : partitions_of_size_at_most(d, 3)) {
            std::vector<int> l(d), r(d);
            for (int i = 0; i < d; ++i) r[i] = d - i, l[i] = p[i] + r[i];
            Rational num = 1, den = 1;
            for (int i = 0; i < d; ++i) {
                num *= l[i], den *= r[i];
                for (int j = i + 1; j < d; ++j) num *= (l[i] * l[i] - l[j] * l[j]), den *= (r[i] * r[i] - r[j] * r[j]);
            }
            Rational dim = num / den;
            CHECK(Rational(classical_char_sp(p, d).eval_one()) == dim);
        }
}

TEST_CASE("characters are Weyl symmetric and O(odd) carries eps^|lambda|") {
    for (auto tag : {"Sp(2)", "Sp(4)", "Sp(6)", "O(2)", "O(3)", "O(4)", "O(5)", "O(6)", "GL(1)", "GL(2)", "GL(3)"}) {
        auto G = GroupTag::parse(tag);
        for (auto& lam : admissible_labels(G, 3)) {
            auto chi = char_group(G, lam);
            CHECK_MESSAGE(weyl_symmetric(chi, G), tag, " ", lam.str());
            if (G.kind != GroupKind::GL) CHECK(chi.eval_one() > 0);
            if (G.uses_eps())
                for (auto& t : chi.terms()) CHECK(t.key.eps == lam.size() % 2);
        }
    }
}

TEST_CASE("decomposition examples") {
    GroupTag sp2{GroupKind::Sp, 1};
    auto c = z(1, 0) + z(1, 0, -1);
    CHECK(decompose_character(c, sp2) == Mult{{gp({1}), 1}});
    CHECK(decompose_character(c * c, sp2) == Mult{{gp({2}), 1}, {gp({0}), 1}});
    try {
        decompose_character(z(1, 0, 2), sp2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "NegativeMultiplicity");
    }
    try {
        decompose_character(z(1, 0, -2), sp2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == "NonSymmetric");
    }
}

TEST_CASE("decomposition round trip") {
    for (auto tag : {"Sp(2)", "Sp(4)", "Sp(6)", "O(1)", "O(2)", "O(3)", "O(4)", "O(5)", "O(6)", "GL(2)", "GL(3)"}) {
        auto G = GroupTag::parse(tag);
        for (auto& lam : admissible_labels(G, 4)) {
            auto got = decompose_character(char_group(G, lam), G);
            GeneralizedPartition key = lam;
            if (G.kind == GroupKind::O && G.size % 2 == 0) {
                Partition p(lam.parts());
                if (p.column(1) > G.size / 2) key = bar_conjugate(p, G.size);
            }
            CHECK_MESSAGE((got == Mult{{key, 1}}), tag, " ", lam.str());
        }
    }
}

TEST_CASE("graded coefficients are carried through") {
    // (1 + q z)(1 + q z^-1) for Sp(2) in a ring with an extra slot q.
    auto q = z(2, 1);
    auto one = LaurentPoly::constant(2, 1);
    auto f = (one + q * z(2, 0)) * (one + q * z(2, 0, -1));
    auto dec = decompose_graded(f, GroupTag{GroupKind::Sp, 1});
    CHECK(dec.parts.size() == 2);
    CHECK(dec.parts.at(gp({0})) == one + q * q);
    CHECK(dec.parts.at(gp({1})) == q);
    CHECK_THROWS_AS(dec.multiplicities(), Error);
    CHECK(dec.to_json()["components"].size() == 2);
}

TEST_CASE("tensor multiplicities") {
    GroupTag sp2{GroupKind::Sp, 1}, sp4{GroupKind::Sp, 2};
    CHECK(tensor_multiplicity(sp2, gp({1}), gp({1})) == Mult{{gp({2}), 1}, {gp({0}), 1}});
    CHECK(tensor_multiplicity(sp4, gp({1, 0}), gp({1, 0})) ==
          Mult{{gp({2, 0}), 1}, {gp({1, 1}), 1}, {gp({0, 0}), 1}});
    for (auto tag : {"Sp(4)", "O(3)", "O(4)", "GL(2)"}) {
        auto G = GroupTag::parse(tag);
        auto labels = admissible_labels(G, 2);
        auto zero = labels.front();
        for (auto& l : labels)
            if (l.is_zero()) zero = l;
        for (auto& mu : labels) {
            GeneralizedPartition key = mu;
            if (G.kind == GroupKind::O && G.size % 2 == 0) {
                Partition p(mu.parts());
                if (p.column(1) > G.size / 2) key = bar_conjugate(p, G.size);
            }
            CHECK((tensor_multiplicity(G, mu, zero) == Mult{{key, 1}}));
            for (auto& nu : labels) {
                auto mult = tensor_multiplicity(G, mu, nu);
                BigInt total = 0;
                for (auto& [lam, c] : mult) {
                    CHECK(c > 0);
                    total += BigInt(c) * char_group(G, lam).eval_one();
                }
                CHECK(total == char_group(G, mu).eval_one() * char_group(G, nu).eval_one());
            }
        }
    }
}

TEST_CASE("tensor multiplicities agree with Brauer-Klimyk") {
    // Sp(4) and Sp(6)
    for (int d = 2; d <= 3; ++d) {
        GroupTag G{GroupKind::Sp, d};
        auto rho = rho_doubled(WeylType::BC, d);
        for (auto& mu : admissible_labels(G, 2))
            for (auto& nu : admissible_labels(G, 2)) {
                auto expect = oracle::brauer_klimyk(doubled(mu.parts()), char_group(G, nu), rho);
                std::map<std::vector<int>, long> got;
                for (auto& [lam, c] : tensor_multiplicity(G, mu, nu)) got[doubled(lam.parts())] = c;
                CHECK_MESSAGE(got == expect, mu.str(), " x ", nu.str());
            }
    }
    // O(5): SO(5) multiplicities, labels fixed by eps parity
    GroupTag G{GroupKind::O, 5};
    auto rho = rho_b(2);
    for (auto& mu : admissible_labels(G, 3))
        for (auto& nu : admissible_labels(G, 3)) {
            auto chi_nu = char_group(G, nu).drop_eps();
            Partition pm(mu.parts());
            std::vector<int> mu_so(pm.column(1) > 2 ? bar_conjugate(pm, 5).parts() : pm.parts());
            mu_so.resize(2);
            auto so = oracle::brauer_klimyk(doubled(mu_so), chi_nu, rho);
            int parity = (mu.size() + nu.size()) % 2;
            std::map<GeneralizedPartition, Coeff> expect;
            for (auto& [w, c] : so) {
                std::vector<int> parts{w[0] / 2, w[1] / 2, 0, 0, 0};
                Partition p(parts);
                if (p.size() % 2 != parity) p = bar_conjugate(p, 5);
                expect[gp(p.parts())] += c;
            }
            CHECK_MESSAGE(tensor_multiplicity(G, mu, nu) == expect, mu.str(), " x ", nu.str());
        }
}
