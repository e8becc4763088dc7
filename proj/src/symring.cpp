#include "superchar/symring.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace superchar {

SymMono SymMono::from(std::vector<std::pair<int, Alphabet>> gens) {
    SymMono m;
    for (auto& [k, a] : gens) {
        if (k < 1 || k >= kYBase) fail("BadGenerator", "generator index out of range");
        if (a == Alphabet::XY) fail("BadGenerator", "monomials use a single alphabet per generator");
        m.ids.push_back(id(k, a));
    }
    std::sort(m.ids.begin(), m.ids.end());
    return m;
}

int SymMono::degree() const {
    int d = 0;
    for (auto g : ids) d += g % kYBase;
    return d;
}

std::string SymMono::str() const {
    if (ids.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < ids.size();) {
        size_t j = i;
        while (j < ids.size() && ids[j] == ids[i]) ++j;
        if (!out.empty()) out += "*";
        int g = ids[i];
        out += "e" + std::to_string(g % kYBase) + (g >= kYBase ? "(y)" : "(x)");
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

SymFunc SymFunc::constant(Coeff c, int D) {
    SymFunc f(D);
    if (c) f.terms_[SymMono{}] = c;
    return f;
}

SymFunc SymFunc::from_mono(const SymMono& m, Coeff c, int D) {
    SymFunc f(D);
    if (m.degree() <= D && c) f.terms_[m] = c;
    return f;
}

void SymFunc::add_term(const SymMono& m, Coeff c) {
    if (!c || m.degree() > D_) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second = add_checked(it->second, c);
        if (!it->second) terms_.erase(it);
    }
}

namespace {

std::mutex g_cache_mu;
std::map<std::tuple<int, int, int>, SymFunc> g_h_cache;

}  // namespace

SymFunc SymFunc::generator(GenKind kind, int k, Alphabet a, int D) {
    if (k < 0) return SymFunc(D);
    if (k == 0) return constant(1, D);
    if (k > D) return SymFunc(D);
    if (a == Alphabet::XY) return kind == GenKind::Elementary ? elementary(k, a, D) : complete(k, a, D);
    if (kind == GenKind::Elementary) return from_mono(SymMono{{SymMono::id(k, a)}}, 1, D);

    auto key = std::make_tuple(k, static_cast<int>(a), D);
    {
        std::lock_guard<std::mutex> lock(g_cache_mu);
        auto it = g_h_cache.find(key);
        if (it != g_h_cache.end()) return it->second;
    }
    // h_k = sum_{i=1..k} (-1)^{i-1} e_i h_{k-i}
    SymFunc acc(D);
    for (int i = 1; i <= k; ++i) {
        SymFunc term = e(i, a, D) * generator(GenKind::Complete, k - i, a, D);
        if (i % 2) acc += term;
        else acc -= term;
    }
    std::lock_guard<std::mutex> lock(g_cache_mu);
    g_h_cache.emplace(key, acc);
    return acc;
}

SymFunc elementary(int k, Alphabet a, int D) {
    if (a != Alphabet::XY) return SymFunc::e(k, a, D);
    SymFunc acc(D);
    for (int i = 0; i <= k; ++i) acc += SymFunc::e(i, Alphabet::X, D) * SymFunc::e(k - i, Alphabet::Y, D);
    return acc;
}

SymFunc complete(int k, Alphabet a, int D) {
    if (a != Alphabet::XY) return SymFunc::h(k, a, D);
    SymFunc acc(D);
    for (int i = 0; i <= k; ++i) acc += SymFunc::h(i, Alphabet::X, D) * SymFunc::h(k - i, Alphabet::Y, D);
    return acc;
}

void SymFunc::check(const SymFunc& o) const {
    if (D_ != o.D_) fail("TruncationMismatch", "mixed truncation degrees " + std::to_string(D_) + " and " + std::to_string(o.D_));
}

Coeff SymFunc::coefficient(const SymMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    check(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}
SymFunc& SymFunc::operator-=(const SymFunc& o) {
    check(o);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}
SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    return r += o;
}
SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc r = *this;
    return r -= o;
}
SymFunc SymFunc::operator-() const {
    SymFunc r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}
SymFunc SymFunc::operator*(Coeff k) const {
    SymFunc r(D_);
    if (!k) return r;
    for (auto& [m, c] : terms_) r.terms_[m] = mul_checked(c, k);
    return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    check(o);
    struct T {
        const SymMono* m;
        int deg;
        Coeff c;
    };
    std::vector<T> a, b;
    for (auto& [m, c] : terms_) a.push_back({&m, m.degree(), c});
    for (auto& [m, c] : o.terms_) b.push_back({&m, m.degree(), c});
    std::vector<std::pair<SymMono, Coeff>> raw;
    for (auto& x : a)
        for (auto& y : b) {
            if (x.deg + y.deg > D_) continue;
            SymMono m;
            m.ids.resize(x.m->ids.size() + y.m->ids.size());
            std::merge(x.m->ids.begin(), x.m->ids.end(), y.m->ids.begin(), y.m->ids.end(), m.ids.begin());
            raw.emplace_back(std::move(m), mul_checked(x.c, y.c));
        }
    std::sort(raw.begin(), raw.end(), [](auto& l, auto& r) { return l.first < r.first; });
    SymFunc r(D_);
    for (size_t i = 0; i < raw.size();) {
        size_t j = i;
        Coeff c = 0;
        while (j < raw.size() && raw[j].first == raw[i].first) c = add_checked(c, raw[j++].second);
        if (c) r.terms_.emplace_hint(r.terms_.end(), raw[i].first, c);
        i = j;
    }
    return r;
}

SymFunc SymFunc::divided_by(Coeff k) const {
    SymFunc r = *this;
    for (auto& [m, c] : r.terms_) {
        if (c % k) fail("NotDivisible", "coefficient not divisible by " + std::to_string(k));
        c /= k;
    }
    return r;
}

SymFunc SymFunc::truncated(int D) const {
    if (D > D_) fail("TruncationMismatch", "cannot raise truncation degree");
    SymFunc r(D);
    for (auto& [m, c] : terms_)
        if (m.degree() <= D) r.terms_[m] = c;
    return r;
}

SymFunc SymFunc::homogeneous_part(int k) const {
    SymFunc r(D_);
    for (auto& [m, c] : terms_)
        if (m.degree() == k) r.terms_[m] = c;
    return r;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Coeff a = c < 0 ? -c : c;
        if (m.ids.empty()) out += std::to_string(a);
        else {
            if (a != 1) out += std::to_string(a) + "*";
            out += m.str();
        }
        first = false;
    }
    return out;
}

nlohmann::json SymFunc::to_json() const {
    auto arr = nlohmann::json::array();
    for (auto& [m, c] : terms_) arr.push_back({{"monomial", m.str()}, {"coeff", c}});
    return {{"truncation", D_}, {"terms", arr}};
}

SymFunc substitute(const SymFunc& f, const std::vector<SymFunc>& xi, const std::vector<SymFunc>& yi) {
    int D = f.trunc();
    std::map<SymMono, SymFunc> memo;
    memo.emplace(SymMono{}, SymFunc::constant(1, D));
    auto image = [&](std::uint8_t g) -> const SymFunc& {
        int k = g % SymMono::kYBase;
        const auto& v = g >= SymMono::kYBase ? yi : xi;
        if (k < 1 || k > static_cast<int>(v.size())) fail("BadGenerator", "no image for generator");
        return v[k - 1];
    };
    std::function<const SymFunc&(const SymMono&)> prod = [&](const SymMono& m) -> const SymFunc& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        SymMono head = m;
        std::uint8_t last = head.ids.back();
        head.ids.pop_back();
        SymFunc v = prod(head) * image(last);
        return memo.emplace(m, std::move(v)).first->second;
    };
    SymFunc out(D);
    for (auto& [m, c] : f.terms()) out += prod(m) * c;
    return out;
}

SymFunc omega_y(const SymFunc& f) {
    int D = f.trunc();
    std::vector<SymFunc> xi, yi;
    for (int k = 1; k <= D; ++k) {
        xi.push_back(SymFunc::e(k, Alphabet::X, D));
        yi.push_back(SymFunc::h(k, Alphabet::Y, D));
    }
    return substitute(f, xi, yi);
}

SymFunc omega_x(const SymFunc& f) {
    int D = f.trunc();
    std::vector<SymFunc> xi, yi;
    for (int k = 1; k <= D; ++k) {
        xi.push_back(SymFunc::h(k, Alphabet::X, D));
        yi.push_back(SymFunc::e(k, Alphabet::Y, D));
    }
    return substitute(f, xi, yi);
}

SymFunc schur(const Partition& lambda, Alphabet a, int D) {
    auto cols = lambda.columns();
    int n = static_cast<int>(cols.size());
    if (n == 0) return SymFunc::constant(1, D);
    std::vector<std::vector<SymFunc>> m(n, std::vector<SymFunc>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = elementary(cols[i] - i + j, a, D);
    return ring_det(m, SymFunc::constant(1, D));
}

SymFunc hook_schur(const Partition& lambda, int D) { return omega_y(schur(lambda, Alphabet::XY, D)); }

std::vector<LaurentPoly> elementary_of_values(const std::vector<LaurentPoly>& values, int kmax, int nvars) {
    std::vector<LaurentPoly> E(kmax + 1, LaurentPoly(nvars));
    E[0] = LaurentPoly::constant(nvars, 1);
    int seen = 0;
    for (auto& v : values) {
        ++seen;
        for (int k = std::min(kmax, seen); k >= 1; --k) E[k] = E[k] + E[k - 1] * v;
    }
    return E;
}

LaurentPoly specialize(const SymFunc& f, const std::vector<LaurentPoly>& xv, const std::vector<LaurentPoly>& yv,
                       int nvars) {
    int D = f.trunc();
    auto Ex = elementary_of_values(xv, D, nvars);
    auto Ey = elementary_of_values(yv, D, nvars);
    std::map<SymMono, LaurentPoly> memo;
    memo.emplace(SymMono{}, LaurentPoly::constant(nvars, 1));
    std::function<const LaurentPoly&(const SymMono&)> prod = [&](const SymMono& m) -> const LaurentPoly& {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        SymMono head = m;
        std::uint8_t last = head.ids.back();
        head.ids.pop_back();
        int k = last % SymMono::kYBase;
        const auto& E = last >= SymMono::kYBase ? Ey : Ex;
        LaurentPoly v = prod(head) * E[k];
        return memo.emplace(m, std::move(v)).first->second;
    };
    LaurentPoly out(nvars);
    for (auto& [m, c] : f.terms()) out += prod(m) * c;
    return out;
}

}  // namespace superchar
