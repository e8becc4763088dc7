#include "superchar/superschur.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace superchar {

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(jobs, n); ++t)
        pool.emplace_back([&] {
            for (int i; (i = next++) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// ---------------------------------------------------------------------------
// Determinant engine

template <class R>
R SchurEngine<R>::etilde(int r) const {
    auto it = memo_.find(r);
    if (it != memo_.end()) return it->second;
    R acc = one * 0;
    for (int i = std::max(0, -r); i <= top && r + i <= top; ++i) acc += g(i) * g(r + i);
    memo_.emplace(r, acc);
    return acc;
}

template <class R>
R SchurEngine<R>::sum_g(int sign) const {
    R acc = one * 0;
    for (int i = 0; i <= top; ++i) acc += (i % 2 && sign < 0) ? -g(i) : g(i);
    return acc;
}

namespace {

// Row i (1-based) has base a_i; entries f(a-1), f(a-j)+f(a+j-2) for j >= 2.
template <class R, class F>
R symmetric_pattern(const std::vector<int>& a, F f, const R& one) {
    int l = static_cast<int>(a.size());
    std::vector<std::vector<R>> m(l, std::vector<R>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 1; j <= l; ++j) m[i][j - 1] = j == 1 ? f(a[i] - 1) : f(a[i] - j) + f(a[i] + j - 2);
    return ring_det(m, one);
}

// Entries f(a-j) + s f(a+j-1).
template <class R, class F>
R m_pattern(const std::vector<int>& a, F f, int s, const R& one) {
    int l = static_cast<int>(a.size());
    std::vector<std::vector<R>> m(l, std::vector<R>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 1; j <= l; ++j) m[i][j - 1] = s > 0 ? f(a[i] - j) + f(a[i] + j - 1) : f(a[i] - j) - f(a[i] + j - 1);
    return ring_det(m, one);
}

// a_i = lambda_{d-i+1} + i, i = 1..d.
std::vector<int> row_bases(const GeneralizedPartition& lam, int d) {
    std::vector<int> a(d);
    for (int i = 1; i <= d; ++i) a[i - 1] = lam.part(d - i + 1) + i;
    return a;
}

void check_orthogonal(const Partition& lambda, int n) {
    if (n < 1) fail("InadmissibleWeight", "orthogonal weight n/2 needs n >= 1");
    if (lambda.length() != n) fail("InadmissibleWeight", "orthogonal Schur function needs l(lambda) = n");
    if (lambda.column(1) + lambda.column(2) > n) fail("InadmissibleWeight", "needs lambda'_1 + lambda'_2 <= n");
}

}  // namespace

template <class R>
R SchurEngine<R>::sp(const std::vector<int>& lambda) const {
    int d = static_cast<int>(lambda.size());
    std::vector<int> a(d);
    for (int i = 1; i <= d; ++i) a[i - 1] = lambda[d - i] + i;
    return symmetric_pattern<R>(a, [this](int r) { return etilde_prime(r); }, one);
}

template <class R>
R SchurEngine<R>::so(const Partition& lambda, int n) const {
    check_orthogonal(lambda, n);
    int d = n / 2;
    int c1 = lambda.column(1);
    auto et = [this](int r) { return etilde(r); };
    if (n % 2 == 0) {
        if (c1 == d) return symmetric_pattern<R>(row_bases(lambda, d), et, one);
        Partition lam = c1 < d ? lambda : bar_conjugate(lambda, n);
        int sign = c1 < d ? 1 : -1;
        R A = symmetric_pattern<R>(row_bases(lam, d), et, one);
        std::vector<int> a(d - 1);
        int shift = opt.diamond == DiamondReading::Shifted ? -1 : 0;
        for (int i = 1; i < d; ++i) a[i - 1] = lam.part(d - i) + shift + i;
        R B = sum_g(1) * sum_g(-1) * symmetric_pattern<R>(a, [this](int r) { return etilde_prime(r); }, one);
        return (sign > 0 ? A + B : A - B).divided_by(2);
    }
    Partition lam = c1 <= d ? lambda : bar_conjugate(lambda, n);
    int sign = c1 <= d ? 1 : -1;
    auto a = row_bases(lam, d);
    R A = sum_g(1) * m_pattern<R>(a, et, -1, one);
    R B = sum_g(-1) * m_pattern<R>(a, et, 1, one);
    return (sign > 0 ? A + B : A - B).divided_by(2);
}

template struct SchurEngine<SymFunc>;
template struct SchurEngine<LaurentPoly>;

// ---------------------------------------------------------------------------
// Symmetric function versions

namespace {

std::function<SymFunc(int)> base_sequence(SeriesBase base, Alphabet a, int D) {
    switch (base) {
        case SeriesBase::Elementary: return [a, D](int k) { return k < 0 ? SymFunc(D) : elementary(k, a, D); };
        case SeriesBase::Complete: return [a, D](int k) { return k < 0 ? SymFunc(D) : complete(k, a, D); };
        case SeriesBase::HookUnit:
            return [D](int k) {
                SymFunc acc(D);
                for (int j = 0; j <= k; ++j) acc += SymFunc::e(j, Alphabet::X, D) * SymFunc::h(k - j, Alphabet::Y, D);
                return acc;
            };
    }
    return {};
}

SchurEngine<SymFunc> sym_engine(SeriesBase base, Alphabet a, int D, SchurOptions opt = {}) {
    auto raw = base_sequence(base, a, D);
    // cache the base sequence; the engine calls g repeatedly
    auto cache = std::make_shared<std::vector<SymFunc>>();
    for (int k = 0; k <= D; ++k) cache->push_back(raw(k));
    std::function<SymFunc(int)> g = [cache, D](int k) { return k < 0 || k > D ? SymFunc(D) : (*cache)[k]; };
    return SchurEngine<SymFunc>{g, D, SymFunc::constant(1, D), opt};
}

std::vector<int> sp_parts(const Partition& lambda) { return lambda.parts(); }

}  // namespace

SymFunc etilde_series(int r, SeriesBase base, int D, Alphabet a) { return sym_engine(base, a, D).etilde(r); }

SymFunc sp_schur(const Partition& lambda, int D, SchurOptions opt) {
    return sym_engine(SeriesBase::Elementary, Alphabet::X, D, opt).sp(sp_parts(lambda));
}

SymFunc sp_skew(const Partition& lambda, int D, SchurOptions opt) {
    return sym_engine(SeriesBase::Complete, Alphabet::X, D, opt).sp(sp_parts(lambda));
}

SymFunc sp_hook(const Partition& lambda, int D, SchurOptions opt) {
    return omega_y(sym_engine(SeriesBase::Elementary, Alphabet::XY, D, opt).sp(sp_parts(lambda)));
}

SymFunc sp_hook_direct(const Partition& lambda, int D) {
    return sym_engine(SeriesBase::HookUnit, Alphabet::XY, D).sp(sp_parts(lambda));
}

SymFunc so_schur(const Partition& lambda, int n, int D, SchurOptions opt) {
    return sym_engine(SeriesBase::Elementary, Alphabet::X, D, opt).so(lambda, n);
}

SymFunc so_skew(const Partition& lambda, int n, int D, SchurOptions opt) {
    return omega_x(so_schur(lambda, n, D, opt));
}

SymFunc so_hook(const Partition& lambda, int n, int D, SchurOptions opt) {
    return omega_y(sym_engine(SeriesBase::Elementary, Alphabet::XY, D, opt).so(lambda, n));
}

SymFunc schur_function(SchurFamily f, Variant v, const Partition& lambda, int n_or_d, int D) {
    if (f == SchurFamily::Sp) {
        if (lambda.length() != n_or_d) fail("InadmissibleWeight", "symplectic Schur function needs l(lambda) = d");
        switch (v) {
            case Variant::Plain: return sp_schur(lambda, D);
            case Variant::Skew: return sp_skew(lambda, D);
            case Variant::Hook: return sp_hook(lambda, D);
        }
    }
    switch (v) {
        case Variant::Plain: return so_schur(lambda, n_or_d, D);
        case Variant::Skew: return so_skew(lambda, n_or_d, D);
        case Variant::Hook: return so_hook(lambda, n_or_d, D);
    }
    return SymFunc(D);
}

// ---------------------------------------------------------------------------
// Finite polynomial versions and classical oracles

namespace {

SchurEngine<LaurentPoly> poly_engine(int m, SchurOptions opt) {
    auto e = std::make_shared<std::vector<LaurentPoly>>(m + 1, LaurentPoly(m));
    (*e)[0] = LaurentPoly::constant(m, 1);
    for (int c = 0; c < m; ++c)
        for (int k = c + 1; k >= 1; --k) (*e)[k] = (*e)[k] + (*e)[k - 1] * LaurentPoly::var(m, c);
    std::function<LaurentPoly(int)> g = [e, m](int k) { return k < 0 || k > m ? LaurentPoly(m) : (*e)[k]; };
    return SchurEngine<LaurentPoly>{g, m, LaurentPoly::constant(m, 1), opt};
}

// z_k = x_{m-k+1}^{-1}
LaurentPoly reflect(const LaurentPoly& chi, int m) {
    std::vector<int> slot(m), sign(m, -1);
    for (int k = 0; k < m; ++k) slot[k] = m - 1 - k;
    return chi.remap(m, slot, sign);
}

}  // namespace

LaurentPoly sp_schur_poly(const Partition& lambda, int m, SchurOptions opt) {
    return poly_engine(m, opt).sp(lambda.parts());
}

LaurentPoly so_schur_poly(const Partition& lambda, int n, int m, SchurOptions opt) {
    return poly_engine(m, opt).so(lambda, n);
}

LaurentPoly sp_character_oracle(const Partition& lambda, int d, int m) {
    if (lambda.part(1) > m) fail("PreconditionViolated", "needs lambda_1 <= m");
    std::vector<int> kappa(m);
    for (int k = 1; k <= m; ++k) kappa[k - 1] = d - lambda.column(m - k + 1);
    LaurentPoly chi = reflect(classical_char_sp(Partition(kappa), m), m);
    return chi.shifted(std::vector<int>(m, 2 * d));
}

LaurentPoly so_character_oracle(const Partition& lambda, int n, int m) {
    check_orthogonal(lambda, n);
    if (lambda.part(1) > m) fail("PreconditionViolated", "needs lambda_1 <= m");
    std::vector<int> kappa(m);
    for (int k = 1; k <= m; ++k) kappa[k - 1] = n - 2 * lambda.column(m - k + 1);
    LaurentPoly chi = reflect(classical_char_so(kappa, m), m);
    return chi.shifted(std::vector<int>(m, n));
}

// ---------------------------------------------------------------------------
// Character tensors

void CharTensor::add(const LKey& k, const SymFunc& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(k, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CharTensor CharTensor::one(int D) {
    CharTensor t;
    t.D = D;
    t.terms.emplace(LKey{}, SymFunc::constant(1, D));
    return t;
}

CharTensor CharTensor::operator*(const CharTensor& o) const {
    CharTensor r;
    r.D = D;
    for (auto& [ka, fa] : terms)
        for (auto& [kb, fb] : o.terms) {
            LKey k;
            for (int v = 0; v < kMaxVars; ++v) k.e[v] = static_cast<std::int16_t>(ka.e[v] + kb.e[v]);
            k.eps = ka.eps ^ kb.eps;
            r.add(k, fa * fb);
        }
    return r;
}

CharTensor CharTensor::outer(const LaurentPoly& chi, const SymFunc& f) {
    CharTensor r;
    r.D = f.trunc();
    for (auto& t : chi.terms()) r.add(t.key, f * t.c);
    return r;
}

// ---------------------------------------------------------------------------
// Identity verification

namespace {

using Label = GeneralizedPartition;

std::string half_str(int doubled) { return HalfIndex::from_twice(doubled).str(); }

// Compares two tensors coefficient by coefficient.
void compare(const CharTensor& L, const CharTensor& R, int d, IdentityReport& rep, const std::string& label = "") {
    auto first = [&](const LKey& k, const std::string& mono, Coeff a, Coeff b) {
        if (rep.first_mismatch) return;
        Mismatch mm;
        for (int v = 0; v < d; ++v) mm.z_exponent.push_back(k.e[v]);
        mm.eps = k.eps;
        mm.monomial = label.empty() ? mono : label + " : " + mono;
        mm.lhs = std::to_string(a);
        mm.rhs = std::to_string(b);
        rep.first_mismatch = mm;
    };
    std::map<LKey, std::pair<const SymFunc*, const SymFunc*>> keys;
    for (auto& [k, f] : L.terms) keys[k].first = &f;
    for (auto& [k, f] : R.terms) keys[k].second = &f;
    for (auto& [k, pr] : keys) {
        std::map<SymMono, std::pair<Coeff, Coeff>> mono;
        if (pr.first)
            for (auto& [m, c] : pr.first->terms()) mono[m].first = c;
        if (pr.second)
            for (auto& [m, c] : pr.second->terms()) mono[m].second = c;
        for (auto& [m, ab] : mono) {
            ++rep.compared;
            if (ab.first != ab.second) first(k, m.str(), ab.first, ab.second);
        }
    }
}

void compare_poly(const LaurentPoly& L, const LaurentPoly& R, int d, int m, IdentityReport& rep) {
    std::map<LKey, std::pair<Coeff, Coeff>> keys;
    for (auto& t : L.terms()) keys[t.key].first = t.c;
    for (auto& t : R.terms()) keys[t.key].second = t.c;
    for (auto& [k, ab] : keys) {
        ++rep.compared;
        if (ab.first == ab.second || rep.first_mismatch) continue;
        Mismatch mm;
        std::string mono;
        for (int v = 0; v < d; ++v) mm.z_exponent.push_back(k.e[v]);
        for (int j = 0; j < m; ++j) {
            int e = k.e[d + j];
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(j + 1);
            if (e != 2) mono += "^" + half_str(e);
        }
        mm.eps = k.eps;
        mm.monomial = mono.empty() ? "1" : mono;
        mm.lhs = std::to_string(ab.first);
        mm.rhs = std::to_string(ab.second);
        rep.first_mismatch = mm;
    }
}

// Sum_k g_k (eps w)^k for a monomial w in the z variables.
CharTensor series_factor(const std::vector<SymFunc>& g, const LKey& w, int D) {
    CharTensor t;
    t.D = D;
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
        LKey key;
        for (int v = 0; v < kMaxVars; ++v) key.e[v] = static_cast<std::int16_t>(k * w.e[v]);
        key.eps = static_cast<std::uint8_t>((k * w.eps) & 1);
        t.add(key, g[k]);
    }
    return t;
}

// The factor monomials: z_i^{+-1} and, for odd O(n), the bare 1; all times
// eps for odd O(n).
std::vector<LKey> factor_monomials(int d, bool odd) {
    std::vector<LKey> out;
    for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) {
            LKey k;
            k.e[i] = static_cast<std::int16_t>(2 * s);
            k.eps = odd;
            out.push_back(k);
        }
    if (odd) {
        LKey k;
        k.eps = 1;
        out.push_back(k);
    }
    return out;
}

enum class LhsKind { E, H, EH };

CharTensor cauchy_lhs(int d, bool odd, LhsKind kind, int D) {
    std::vector<SymFunc> ex, hx, hy;
    for (int k = 0; k <= D; ++k) {
        ex.push_back(SymFunc::e(k, Alphabet::X, D));
        hx.push_back(SymFunc::h(k, Alphabet::X, D));
        hy.push_back(SymFunc::h(k, Alphabet::Y, D));
    }
    CharTensor acc = CharTensor::one(D);
    for (auto& w : factor_monomials(d, odd)) {
        if (kind == LhsKind::E || kind == LhsKind::EH) acc = acc * series_factor(ex, w, D);
        if (kind == LhsKind::H) acc = acc * series_factor(hx, w, D);
        if (kind == LhsKind::EH) acc = acc * series_factor(hy, w, D);
    }
    return acc;
}

CharTensor sum_chars(const GroupTag& G, const std::vector<Label>& labels,
                     const std::function<SymFunc(const Partition&)>& coeff, int D, int jobs) {
    std::vector<CharTensor> parts(labels.size());
    parallel_for(static_cast<int>(labels.size()), jobs, [&](int i) {
        Partition p(labels[i].parts());
        parts[i] = CharTensor::outer(char_group(G, labels[i]), coeff(p));
    });
    CharTensor acc;
    acc.D = D;
    for (auto& t : parts)
        for (auto& [k, f] : t.terms) acc.add(k, f);
    return acc;
}

// Rename x <-> y.
SymFunc swap_alphabets(const SymFunc& f) {
    int D = f.trunc();
    std::vector<SymFunc> xi, yi;
    for (int k = 1; k <= D; ++k) {
        xi.push_back(SymFunc::e(k, Alphabet::Y, D));
        yi.push_back(SymFunc::e(k, Alphabet::X, D));
    }
    return substitute(f, xi, yi);
}

GroupTag sp_group(const IdentityParams& p) {
    if (p.d < 1) fail("BadParams", "identity needs d >= 1");
    return {GroupKind::Sp, p.d};
}

GroupTag o_group(const IdentityParams& p, int parity = -1) {
    if (p.n < 1) fail("BadParams", "identity needs n >= 1");
    if (parity >= 0 && p.n % 2 != parity) fail("BadParams", parity ? "identity needs odd n" : "identity needs even n");
    return {GroupKind::O, p.n};
}

std::vector<Label> labels_up_to(const GroupTag& G, int D) { return admissible_labels(G, D); }

// Identities in finitely many variables: ring slots z_1..z_d then x_1..x_m.
LaurentPoly finite_lhs(int d, int m, bool odd) {
    int nv = d + m;
    LaurentPoly acc = LaurentPoly::constant(nv, 1);
    LaurentPoly one = LaurentPoly::constant(nv, 1);
    for (int j = 0; j < m; ++j) {
        LaurentPoly x = LaurentPoly::var(nv, d + j);
        if (odd) x = x.shifted({}, 1);
        for (int i = 0; i < d; ++i) {
            acc *= one + x * LaurentPoly::var(nv, i);
            acc *= one + x * LaurentPoly::var(nv, i, -1);
        }
        if (odd) acc *= one + x;
    }
    return acc;
}

LaurentPoly embed_x(const LaurentPoly& f, int d, int m) {
    std::vector<int> slot(m), sign(m, 1);
    for (int j = 0; j < m; ++j) slot[j] = d + j;
    return f.remap(d + m, slot, sign);
}

IdentityReport finite_identity(const std::string& tag, const IdentityParams& p, const GroupTag& G, bool tilde) {
    IdentityReport rep;
    rep.identity = tag;
    rep.params = p;
    int d = G.rank(), m = p.m;
    if (m < 1) fail("BadParams", "finite identity needs m >= 1");
    if (d + m > kMaxVars) fail("BadParams", "too many variables");
    bool odd = G.uses_eps();
    int weight2 = G.kind == GroupKind::Sp ? 2 * G.size : G.size;  // doubled weight
    std::vector<int> pref(d + m, 0);
    for (int j = 0; j < m; ++j) pref[d + j] = -weight2;
    LaurentPoly lhs = finite_lhs(d, m, odd);
    if (tilde) lhs = lhs.shifted(pref);

    std::vector<Label> labels;
    for (auto& l : admissible_labels(G, d * m + G.size * m))
        if (l.part(1) <= m) labels.push_back(l);
    std::vector<LaurentPoly> parts(labels.size());
    parallel_for(static_cast<int>(labels.size()), p.jobs, [&](int i) {
        Partition lam(labels[i].parts());
        LaurentPoly s;
        if (G.kind == GroupKind::Sp) s = tilde ? sp_character_oracle(lam, d, m) : sp_schur_poly(lam, m, p.schur);
        else s = tilde ? so_character_oracle(lam, G.size, m) : so_schur_poly(lam, G.size, m, p.schur);
        LaurentPoly term = char_group(G, labels[i]) * embed_x(s, d, m);
        parts[i] = tilde ? term.shifted(pref) : term;
    });
    LaurentPoly rhs(d + m);
    for (auto& t : parts) rhs += t;
    compare_poly(lhs, rhs, d, m, rep);
    rep.pass = !rep.first_mismatch;
    return rep;
}

IdentityReport cauchy_identity(const std::string& tag, const IdentityParams& p, const GroupTag& G, LhsKind kind,
                               const std::function<SymFunc(const Partition&)>& coeff) {
    IdentityReport rep;
    rep.identity = tag;
    rep.params = p;
    CharTensor lhs = cauchy_lhs(G.rank(), G.uses_eps(), kind, p.D);
    CharTensor rhs = sum_chars(G, labels_up_to(G, p.D), coeff, p.D, p.jobs);
    compare(lhs, rhs, G.rank(), rep);
    rep.pass = !rep.first_mismatch;
    return rep;
}

IdentityReport tensor_identity(const std::string& tag, const IdentityParams& p, const GroupTag& G) {
    IdentityReport rep;
    rep.identity = tag;
    rep.params = p;
    const int D = p.D;
    bool sp = G.kind == GroupKind::Sp;
    bool paired = G.kind == GroupKind::O && G.size % 2 == 0;
    int n = G.size;
    auto labels = labels_up_to(G, D);
    std::vector<SymFunc> S(labels.size()), DS(labels.size());
    parallel_for(static_cast<int>(labels.size()), p.jobs, [&](int i) {
        Partition q(labels[i].parts());
        S[i] = sp ? sp_schur(q, D, p.schur) : so_schur(q, n, D, p.schur);
        DS[i] = swap_alphabets(sp ? sp_skew(q, D, p.schur) : so_skew(q, n, D, p.schur));
    });
    // Right-hand sides keyed by the decomposition label.
    std::map<Label, SymFunc> rhs;
    for (size_t a = 0; a < labels.size(); ++a)
        for (size_t b = 0; b < labels.size(); ++b) {
            if (labels[a].size() + labels[b].size() > D) continue;
            auto mult = tensor_multiplicity(G, labels[a], labels[b]);
            SymFunc prod = S[a] * DS[b];
            for (auto& [lam, c] : mult) {
                auto [it, fresh] = rhs.try_emplace(lam, prod * c);
                if (!fresh) it->second += prod * c;
            }
        }
    // Left-hand sides: HS_lambda, or HS_lambda + HS_{bar lambda} when paired.
    auto hook_of = [&](const Label& l) {
        Partition q(l.parts());
        if (sp) return sp_hook(q, D, p.schur);
        SymFunc h = so_hook(q, n, D, p.schur);
        if (paired) {
            Partition b = bar_conjugate(q, n);
            if (!(b == q)) h += so_hook(b, n, D, p.schur);
        }
        return h;
    };
    std::set<Label> keys;
    for (auto& [k, v] : rhs) keys.insert(k);
    for (auto& l : labels)
        if (!paired || Partition(l.parts()).column(1) <= n / 2) keys.insert(l);
    for (auto& k : keys) {
        CharTensor L, R;
        L.D = R.D = D;
        L.add(LKey{}, hook_of(k));
        auto ri = rhs.find(k);
        if (ri != rhs.end()) R.add(LKey{}, ri->second);
        compare(L, R, 0, rep, k.str());
    }
    rep.pass = !rep.first_mismatch;
    return rep;
}

}  // namespace

const std::vector<std::string>& identity_tags() {
    static const std::vector<std::string> tags = {
        "spchar",   "combin-Sp",   "combin1-i",         "combin1-ii",         "HS",   "even-char", "odd-char",
        "combin-even", "combin-odd", "combin1-evenodd-i", "combin1-evenodd-ii", "HS-O", "tensor-Sp", "tensor-O"};
    return tags;
}

IdentityReport verify_identity(const std::string& tag, const IdentityParams& p) {
    if (p.D < 0) fail("BadParams", "truncation degree must be non-negative");
    if (tag == "spchar") return finite_identity(tag, p, sp_group(p), true);
    if (tag == "combin-Sp") return finite_identity(tag, p, sp_group(p), false);
    if (tag == "even-char") return finite_identity(tag, p, o_group(p, 0), true);
    if (tag == "odd-char") return finite_identity(tag, p, o_group(p, 1), true);
    if (tag == "combin-even") return finite_identity(tag, p, o_group(p, 0), false);
    if (tag == "combin-odd") return finite_identity(tag, p, o_group(p, 1), false);
    int D = p.D;
    SchurOptions o = p.schur;
    if (tag == "combin1-i")
        return cauchy_identity(tag, p, sp_group(p), LhsKind::E, [D, o](const Partition& l) { return sp_schur(l, D, o); });
    if (tag == "combin1-ii")
        return cauchy_identity(tag, p, sp_group(p), LhsKind::H, [D, o](const Partition& l) { return sp_skew(l, D, o); });
    if (tag == "HS")
        return cauchy_identity(tag, p, sp_group(p), LhsKind::EH, [D, o](const Partition& l) { return sp_hook(l, D, o); });
    int n = p.n;
    if (tag == "combin1-evenodd-i")
        return cauchy_identity(tag, p, o_group(p), LhsKind::E, [D, n, o](const Partition& l) { return so_schur(l, n, D, o); });
    if (tag == "combin1-evenodd-ii")
        return cauchy_identity(tag, p, o_group(p), LhsKind::H, [D, n, o](const Partition& l) { return so_skew(l, n, D, o); });
    if (tag == "HS-O")
        return cauchy_identity(tag, p, o_group(p), LhsKind::EH, [D, n, o](const Partition& l) { return so_hook(l, n, D, o); });
    if (tag == "tensor-Sp") return tensor_identity(tag, p, sp_group(p));
    if (tag == "tensor-O") return tensor_identity(tag, p, o_group(p));
    fail("UnknownIdentity", "no identity tagged '" + tag + "'");
}

std::vector<BatteryItem> identity_battery(bool small) {
    std::vector<BatteryItem> out;
    auto add = [&](const std::string& tag, int d, int n, int D, int m) {
        IdentityParams p;
        p.d = d, p.n = n, p.D = D, p.m = m;
        out.push_back({tag, p});
    };
    for (int d = 1; d <= 2; ++d) {
        for (int m = 1; m <= 3; ++m) add("combin-Sp", d, 0, 4, m);
        add("spchar", d, 0, 4, d + 1);
        add("combin1-i", d, 0, small ? 4 : 5, 0);
        add("combin1-ii", d, 0, small ? 4 : 5, 0);
        add("HS", d, 0, 4, 0);
    }
    for (int n = 1; n <= 4; ++n)
        for (int m = n; m <= n + 1; ++m) {
            add(n % 2 ? "odd-char" : "even-char", 0, n, 4, m);
            if (m <= 4) add(n % 2 ? "combin-odd" : "combin-even", 0, n, 4, m);
        }
    for (int n = 1; n <= 3; ++n)
        for (auto tag : {"combin1-evenodd-i", "combin1-evenodd-ii", "HS-O"}) add(tag, 0, n, 4, 0);
    add("tensor-Sp", 1, 0, 3, 0);
    for (int n = 2; n <= 3; ++n) add("tensor-O", 0, n, 3, 0);
    return out;
}

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json j = {{"identity", identity},
                        {"params", {{"d", params.d}, {"n", params.n}, {"D", params.D}, {"m", params.m}}},
                        {"status", pass ? "pass" : "fail"},
                        {"compared", compared}};
    if (first_mismatch) {
        auto& m = *first_mismatch;
        std::vector<std::string> z;
        for (int e : m.z_exponent) z.push_back(half_str(e));
        j["first_mismatch"] = {{"z_exponent", z}, {"eps", m.eps}, {"sym_monomial", m.monomial}, {"lhs", m.lhs}, {"rhs", m.rhs}};
    }
    return j;
}

}  // namespace superchar
