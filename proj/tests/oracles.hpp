#pragma once
// Brute-force reference implementations used only by tests.

#include "superchar/laurent.hpp"
#include "superchar/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using superchar::LaurentPoly;
using superchar::Partition;

// Tableau filling of lambda with letters 0..nx-1 (x-letters, semistandard)
// followed by nx..nx+ny-1 (y-letters, transposed rule).  Letter i carries
// variable slot i.
inline LaurentPoly super_tableaux(const Partition& lambda, int nx, int ny, int nvars) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) cells.push_back({i, j});
    std::vector<std::vector<int>> fill(lambda.length() + 2, std::vector<int>(lambda.part(1) + 2, -1));
    std::vector<LaurentPoly::Term> raw;
    std::vector<int> count(nvars, 0);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            superchar::LKey k;
            for (int v = 0; v < nvars; ++v) k.e[v] = static_cast<std::int16_t>(2 * count[v]);
            raw.push_back({k, 1});
            return;
        }
        auto [i, j] = cells[idx];
        for (int a = 0; a < nx + ny; ++a) {
            bool is_x = a < nx;
            if (j > 1) {
                int left = fill[i][j - 1];
                if (is_x ? left > a : left >= a) continue;
            }
            if (i > 1) {
                int up = fill[i - 1][j];
                if (is_x ? up >= a : up > a) continue;
            }
            fill[i][j] = a;
            ++count[a];
            rec(idx + 1);
            --count[a];
            fill[i][j] = -1;
        }
    };
    rec(0);
    return LaurentPoly::from_terms(nvars, raw);
}

inline LaurentPoly schur_poly(const Partition& lambda, int nvars) { return super_tableaux(lambda, nvars, 0, nvars); }

inline std::vector<LaurentPoly> vars(int nvars, int first, int count) {
    std::vector<LaurentPoly> v;
    for (int i = 0; i < count; ++i) v.push_back(LaurentPoly::var(nvars, first + i));
    return v;
}

// Weyl group types acting on exponent vectors: A permutes, BC permutes and
// flips signs, D permutes and flips an even number of signs.
enum class WeylType { A, BC, D };

// Sum over W of sgn(w) z^{w mu}; mu is doubled.
inline LaurentPoly alternant(WeylType type, const std::vector<int>& mu) {
    int d = static_cast<int>(mu.size());
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    std::vector<LaurentPoly::Term> raw;
    do {
        int inv = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) ++inv;
        int flips_max = type == WeylType::A ? 1 : (1 << d);
        for (int mask = 0; mask < flips_max; ++mask) {
            int flips = __builtin_popcount(mask);
            if (type == WeylType::D && flips % 2) continue;
            superchar::LKey k;
            for (int i = 0; i < d; ++i) k.e[i] = static_cast<std::int16_t>((mask >> i & 1 ? -1 : 1) * mu[perm[i]]);
            int sgn = inv % 2 ? -1 : 1;
            if (type == WeylType::BC && flips % 2) sgn = -sgn;
            raw.push_back({k, sgn});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return LaurentPoly::from_terms(d, raw);
}

// Brauer-Klimyk for types B and C: tensor the highest weight mu (doubled)
// with the weight multiset of `chi_nu`; rho doubled.
inline std::map<std::vector<int>, long> brauer_klimyk(const std::vector<int>& mu, const LaurentPoly& chi_nu,
                                                     const std::vector<int>& rho) {
    int d = static_cast<int>(mu.size());
    std::map<std::vector<int>, long> out;
    for (auto& t : chi_nu.terms()) {
        std::vector<int> v(d);
        for (int i = 0; i < d; ++i) v[i] = mu[i] + t.key.e[i] + rho[i];
        int sgn = 1;
        for (auto& x : v)
            if (x < 0) x = -x, sgn = -sgn;
        // bubble sort descending and count swaps
        for (int i = 0; i < d; ++i)
            for (int j = 0; j + 1 < d - i; ++j)
                if (v[j] < v[j + 1]) std::swap(v[j], v[j + 1]), sgn = -sgn;
        bool singular = v[d - 1] == 0;
        for (int i = 0; i + 1 < d; ++i) singular = singular || v[i] == v[i + 1];
        if (singular) continue;
        for (int i = 0; i < d; ++i) v[i] -= rho[i];
        out[v] += sgn * t.c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

}  // namespace oracle
