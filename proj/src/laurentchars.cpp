#include "superchar/laurentchars.hpp"

#include <algorithm>
#include <functional>
#include <regex>

namespace superchar {

std::string GroupTag::str() const {
    switch (kind) {
        case GroupKind::GL: return "GL(" + std::to_string(size) + ")";
        case GroupKind::Sp: return "Sp(" + std::to_string(2 * size) + ")";
        case GroupKind::O: return "O(" + std::to_string(size) + ")";
    }
    return "?";
}

GroupTag GroupTag::parse(const std::string& s) {
    static const std::regex re(R"(\s*(GL|Sp|O)\s*\(\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) fail("BadGroup", "expected GL(d), Sp(2d) or O(n), got '" + s + "'");
    int n = std::stoi(m[2]);
    GroupTag g;
    if (m[1] == "GL") g = {GroupKind::GL, n};
    else if (m[1] == "Sp") {
        if (n % 2) fail("BadGroup", "Sp(n) needs even n");
        g = {GroupKind::Sp, n / 2};
    } else g = {GroupKind::O, n};
    if (g.size < 1) fail("BadGroup", "group size must be positive");
    return g;
}

std::vector<LaurentPoly> elementary_laurent_all(int m, bool with_one) {
    std::vector<LaurentPoly> vals;
    for (int i = 0; i < m; ++i) {
        vals.push_back(LaurentPoly::var(m, i, 1));
        vals.push_back(LaurentPoly::var(m, i, -1));
    }
    if (with_one) vals.push_back(LaurentPoly::constant(m, 1));
    int n = static_cast<int>(vals.size());
    std::vector<LaurentPoly> E(n + 1, LaurentPoly(m));
    E[0] = LaurentPoly::constant(m, 1);
    for (int c = 0; c < n; ++c)
        for (int k = c + 1; k >= 1; --k) E[k] = E[k] + E[k - 1] * vals[c];
    return E;
}

LaurentPoly elementary_laurent(int r, int m) {
    if (r < 0 || r > 2 * m) return LaurentPoly(m);
    return elementary_laurent_all(m)[r];
}

namespace {

using Getter = std::function<LaurentPoly(int)>;

Getter bounded(const std::vector<LaurentPoly>& E, int nvars) {
    return [&E, nvars](int r) { return r < 0 || r >= static_cast<int>(E.size()) ? LaurentPoly(nvars) : E[r]; };
}

// Rows (g(mu_i-i+1), g(mu_i-i+2)+g(mu_i-i), ..., g(mu_i-i+l)+g(mu_i-i-l+2)).
LaurentPoly so_pattern(const Getter& g, const std::vector<int>& mu, int nvars) {
    int l = static_cast<int>(mu.size());
    std::vector<std::vector<LaurentPoly>> m(l, std::vector<LaurentPoly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int a = mu[i - 1] - i;
            m[i - 1][j - 1] = j == 1 ? g(a + 1) : g(a + j) + g(a - j + 2);
        }
    return ring_det(m, LaurentPoly::constant(nvars, 1));
}

// Rows g(mu_i-i+j) + s*g(mu_i-i-j+1).
LaurentPoly m_pattern(const Getter& g, const std::vector<int>& mu, int s, int nvars) {
    int l = static_cast<int>(mu.size());
    std::vector<std::vector<LaurentPoly>> m(l, std::vector<LaurentPoly>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            int a = mu[i - 1] - i;
            m[i - 1][j - 1] = g(a + j) + g(a - j + 1) * s;
        }
    return ring_det(m, LaurentPoly::constant(nvars, 1));
}

LaurentPoly product_over_vars(int m, int doubled_exp, int sign) {
    LaurentPoly p = LaurentPoly::constant(m, 1);
    for (int i = 0; i < m; ++i) {
        std::vector<int> up(m, 0), down(m, 0);
        up[i] = doubled_exp;
        down[i] = -doubled_exp;
        p = p * (LaurentPoly::monomial(m, up) + LaurentPoly::monomial(m, down, 0, sign));
    }
    return p;
}

}  // namespace

LaurentPoly classical_char_sp(const Partition& mu, int m) {
    if (mu.depth() > m) fail("InadmissibleWeight", "sp(2m) weight with more than m parts");
    if (!mu.nonnegative()) fail("InadmissibleWeight", "sp(2m) weight must be a partition");
    auto E = elementary_laurent_all(m);
    auto e = bounded(E, m);
    Getter ep = [&](int r) { return e(r) - e(r - 2); };
    return so_pattern(ep, mu.columns(), m);
}

LaurentPoly classical_char_so(const std::vector<int>& nu, int m) {
    if (m < 1 || static_cast<int>(nu.size()) != m) fail("InadmissibleWeight", "so(2m) weight needs m entries");
    int par = nu[0] & 1;
    for (int v : nu)
        if ((v & 1) != par) fail("InadmissibleWeight", "mixed integral and half-integral entries");
    for (int i = 0; i + 1 < m; ++i)
        if (nu[i] < nu[i + 1] || (i + 2 == m && nu[i] < std::abs(nu[i + 1])))
            fail("InadmissibleWeight", "so(2m) weight not dominant");
    int sgn = nu[m - 1] < 0 ? -1 : 1;
    auto E = elementary_laurent_all(m);
    auto e = bounded(E, m);
    if (!par) {
        std::vector<int> hat(m);
        for (int i = 0; i < m; ++i) hat[i] = std::abs(nu[i]) / 2;
        Partition p(hat);
        LaurentPoly A = so_pattern(e, p.columns(), m);
        if (hat[m - 1] == 0) return A;
        std::vector<int> less(m);
        for (int i = 0; i < m; ++i) less[i] = hat[i] - 1;
        Getter ep = [&](int r) { return e(r) - e(r - 2); };
        LaurentPoly B = product_over_vars(m, 2, -1) * so_pattern(ep, Partition(less).columns(), m);
        return (A + B * sgn).divided_by(2);
    }
    std::vector<int> mu(m);
    for (int i = 0; i < m; ++i) mu[i] = (std::abs(nu[i]) - 1) / 2;
    auto cols = Partition(mu).columns();
    LaurentPoly A = product_over_vars(m, 1, 1) * m_pattern(e, cols, -1, m);
    LaurentPoly B = product_over_vars(m, 1, -1) * m_pattern(e, cols, 1, m);
    return (A + B * sgn).divided_by(2);
}

LaurentPoly classical_char_so_odd(const Partition& mu, int d) {
    if (mu.depth() > d) fail("InadmissibleWeight", "so(2d+1) weight with more than d parts");
    auto E = elementary_laurent_all(d, true);
    return so_pattern(bounded(E, d), mu.columns(), d);
}

LaurentPoly classical_char_gl(const GeneralizedPartition& lambda, int d) {
    if (lambda.length() != d) fail("InadmissibleWeight", "gl(d) weight needs d entries");
    int shift = lambda[d - 1];
    std::vector<int> mu(d);
    for (int i = 0; i < d; ++i) mu[i] = lambda[i] - shift;
    std::vector<LaurentPoly> vals;
    for (int i = 0; i < d; ++i) vals.push_back(LaurentPoly::var(d, i));
    std::vector<LaurentPoly> e(d + 1, LaurentPoly(d));
    e[0] = LaurentPoly::constant(d, 1);
    for (int c = 0; c < d; ++c)
        for (int k = c + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * vals[c];
    auto g = bounded(e, d);
    auto cols = Partition(mu).columns();
    int l = static_cast<int>(cols.size());
    std::vector<std::vector<LaurentPoly>> m(l, std::vector<LaurentPoly>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m[i][j] = g(cols[i] - i + j);
    LaurentPoly s = ring_det(m, LaurentPoly::constant(d, 1));
    return s.shifted(std::vector<int>(d, 2 * shift));
}

GeneralizedPartition admissible_label(const GroupTag& G, const GeneralizedPartition& lambda) {
    if (G.kind == GroupKind::GL) {
        if (lambda.length() != G.size) fail("InadmissibleWeight", "GL(d) label needs exactly d entries");
        return lambda;
    }
    if (!lambda.nonnegative()) fail("InadmissibleWeight", "label must be a partition");
    int target = G.size;
    std::vector<int> parts = lambda.parts();
    while (static_cast<int>(parts.size()) > target && parts.back() == 0) parts.pop_back();
    if (static_cast<int>(parts.size()) > target)
        fail("InadmissibleWeight", "label has more than " + std::to_string(target) + " nonzero parts");
    parts.resize(target, 0);
    Partition p(parts);
    if (G.kind == GroupKind::O && p.column(1) + p.column(2) > G.size)
        fail("InadmissibleWeight", "O(n) label needs lambda'_1 + lambda'_2 <= n");
    return GeneralizedPartition(parts);
}

std::vector<GeneralizedPartition> admissible_labels(const GroupTag& G, int max_size) {
    std::vector<GeneralizedPartition> out;
    switch (G.kind) {
        case GroupKind::GL:
            for (auto& g : generalized_in_box(G.size, max_size))
                if (g.size() <= max_size) out.push_back(g);
            break;
        case GroupKind::Sp:
            for (auto& p : partitions_of_size_at_most(G.size, max_size)) out.push_back(GeneralizedPartition(p.parts()));
            break;
        case GroupKind::O:
            for (auto& p : orthogonal_partitions(G.size, max_size)) out.push_back(GeneralizedPartition(p.parts()));
            break;
    }
    return out;
}

namespace {

// lambda or its bar conjugate, whichever has lambda'_1 <= n/2; first d parts.
std::vector<int> so_reduced(const Partition& lambda, int n) {
    int d = n / 2;
    Partition t = lambda.column(1) > d ? bar_conjugate(lambda, n) : lambda;
    return std::vector<int>(t.parts().begin(), t.parts().begin() + d);
}

LaurentPoly so_even_char(std::vector<int> w) {
    int d = static_cast<int>(w.size());
    std::vector<int> dbl(d);
    for (int i = 0; i < d; ++i) dbl[i] = 2 * w[i];
    LaurentPoly c = classical_char_so(dbl, d);
    if (w[d - 1] > 0) {
        dbl[d - 1] = -dbl[d - 1];
        c += classical_char_so(dbl, d);
    }
    return c;
}

}  // namespace

LaurentPoly char_group(const GroupTag& G, const GeneralizedPartition& lambda_in) {
    auto lambda = admissible_label(G, lambda_in);
    switch (G.kind) {
        case GroupKind::GL: return classical_char_gl(lambda, G.size);
        case GroupKind::Sp: return classical_char_sp(Partition(lambda.parts()), G.size);
        case GroupKind::O: {
            Partition p(lambda.parts());
            auto w = so_reduced(p, G.size);
            if (G.size % 2 == 0) return so_even_char(w);
            if (w.empty()) w.push_back(0);
            LaurentPoly c = classical_char_so_odd(Partition(w), G.rank());
            return p.size() % 2 ? c.shifted({}, 1) : c;
        }
    }
    return LaurentPoly();
}

std::map<GeneralizedPartition, Coeff> Decomposition::multiplicities() const {
    std::map<GeneralizedPartition, Coeff> out;
    for (auto& [lam, c] : parts) {
        if (c.terms().size() != 1 || !(c.terms()[0].key == LKey{}))
            fail("NotConstant", "multiplicity of " + lam.str() + " is not a constant");
        out[lam] = c.terms()[0].c;
    }
    return out;
}

nlohmann::json Decomposition::to_json() const {
    auto arr = nlohmann::json::array();
    for (auto& [lam, c] : parts) {
        nlohmann::json entry = {{"lambda", lam.str()}};
        if (c.terms().size() == 1 && c.terms()[0].key == LKey{}) entry["multiplicity"] = c.terms()[0].c;
        else entry["coefficient"] = c.to_json();
        arr.push_back(entry);
    }
    return {{"group", group.str()}, {"bar_merged", bar_merged}, {"components", arr}};
}

Decomposition decompose_graded(const LaurentPoly& f, const GroupTag& G, bool require_nonnegative) {
    const int d = G.rank();
    if (f.nvars() < d) fail("BadVariable", "character has fewer variables than the group rank");
    const bool eps = G.uses_eps();

    std::map<LKey, std::vector<LaurentPoly::Term>> raw;
    for (auto& t : f.terms()) {
        LKey z{}, rest = t.key;
        for (int v = 0; v < d; ++v) z.e[v] = t.key.e[v], rest.e[v] = 0;
        if (eps) z.eps = t.key.eps, rest.eps = 0;
        raw[z].push_back({rest, t.c});
    }
    std::map<LKey, LaurentPoly> table;
    for (auto& [z, terms] : raw) table.emplace(z, LaurentPoly::from_terms(f.nvars(), std::move(terms)));

    Decomposition out;
    out.group = G;
    out.bar_merged = G.kind == GroupKind::O && G.size % 2 == 0;
    while (!table.empty()) {
        auto it = std::prev(table.end());
        LKey z = it->first;
        LaurentPoly coef = it->second;
        std::vector<int> w(d);
        for (int v = 0; v < d; ++v) {
            if (z.e[v] % 2) fail("NonSymmetric", "half-integral exponent in a group character");
            w[v] = z.e[v] / 2;
        }
        bool dominant = true;
        for (int v = 0; v + 1 < d; ++v) dominant = dominant && w[v] >= w[v + 1];
        if (G.kind != GroupKind::GL && d > 0) dominant = dominant && w[d - 1] >= 0;
        if (!dominant) fail("NonSymmetric", "leading exponent is not dominant; input is not Weyl symmetric");
        if (require_nonnegative)
            for (auto& t : coef.terms())
                if (t.c < 0) fail("NegativeMultiplicity", "negative multiplicity; input is not a character");

        GeneralizedPartition label;
        if (G.kind == GroupKind::GL) label = GeneralizedPartition(w);
        else if (G.kind == GroupKind::Sp) label = GeneralizedPartition(w);
        else {
            std::vector<int> parts = w;
            parts.resize(G.size, 0);
            Partition p(parts);
            if (eps && static_cast<int>(p.size() % 2) != z.eps) p = bar_conjugate(p, G.size);
            label = GeneralizedPartition(p.parts());
        }
        LaurentPoly ch = char_group(G, label);
        auto [pos, fresh] = out.parts.try_emplace(label, coef);
        if (!fresh) pos->second += coef;
        for (auto& u : ch.terms()) {
            auto [slot, made] = table.try_emplace(u.key, LaurentPoly(f.nvars()));
            slot->second -= coef * u.c;
            if (slot->second.is_zero()) table.erase(slot);
        }
    }
    return out;
}

std::map<GeneralizedPartition, Coeff> decompose_character(const LaurentPoly& f, const GroupTag& G) {
    return decompose_graded(f, G).multiplicities();
}

std::map<GeneralizedPartition, Coeff> tensor_multiplicity(const GroupTag& G, const GeneralizedPartition& mu,
                                                          const GeneralizedPartition& nu) {
    return decompose_character(char_group(G, mu) * char_group(G, nu), G);
}

bool weyl_symmetric(const LaurentPoly& f, const GroupTag& G) {
    int d = G.rank(), n = f.nvars();
    for (int v = 0; v + 1 < d; ++v) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::swap(perm[v], perm[v + 1]);
        if (!f.invariant_under_permutation(perm)) return false;
    }
    if (G.kind != GroupKind::GL && d > 0 && !f.invariant_under_inversion(0)) return false;
    return true;
}

}  // namespace superchar
