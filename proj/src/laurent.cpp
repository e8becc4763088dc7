#include "superchar/laurent.hpp"

#include <algorithm>

namespace superchar {

namespace {

void check_vars(int n) {
    if (n < 0 || n > kMaxVars) fail("TooManyVariables", "at most 16 variables supported");
}

}  // namespace

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) { check_vars(nvars); }

LaurentPoly LaurentPoly::constant(int nvars, Coeff c) {
    LaurentPoly p(nvars);
    if (c) p.terms_.push_back({LKey{}, c});
    return p;
}

LaurentPoly LaurentPoly::var(int nvars, int i, int power) {
    LaurentPoly p(nvars);
    if (i < 0 || i >= nvars) fail("BadVariable", "variable index out of range");
    LKey k;
    k.e[i] = static_cast<std::int16_t>(2 * power);
    p.terms_.push_back({k, 1});
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const std::vector<int>& doubled, int eps, Coeff c) {
    LaurentPoly p(nvars);
    if (static_cast<int>(doubled.size()) > nvars) fail("BadVariable", "exponent vector too long");
    LKey k;
    for (size_t i = 0; i < doubled.size(); ++i) k.e[i] = static_cast<std::int16_t>(doubled[i]);
    k.eps = static_cast<std::uint8_t>(eps & 1);
    if (c) p.terms_.push_back({k, c});
    return p;
}

LaurentPoly LaurentPoly::eps_marker(int nvars) { return monomial(nvars, {}, 1, 1); }

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> raw) {
    LaurentPoly p(nvars);
    p.terms_ = std::move(raw);
    p.normalize();
    return p;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (size_t i = 0; i < terms_.size();) {
        Term acc = terms_[i++];
        while (i < terms_.size() && terms_[i].key == acc.key) acc.c = add_checked(acc.c, terms_[i++].c);
        if (acc.c) out.push_back(acc);
    }
    terms_.swap(out);
}

Coeff LaurentPoly::coeff(const LKey& k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, const LKey& key) { return t.key < key; });
    return (it != terms_.end() && it->key == k) ? it->c : 0;
}

static int common_vars(int a, int b) { return std::max(a, b); }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(common_vars(nvars_, o.nvars_));
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key)) r.terms_.push_back(terms_[i++]);
        else if (i == terms_.size() || o.terms_[j].key < terms_[i].key) r.terms_.push_back(o.terms_[j++]);
        else {
            Coeff c = add_checked(terms_[i].c, o.terms_[j].c);
            if (c) r.terms_.push_back({terms_[i].key, c});
            ++i, ++j;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(Coeff c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = mul_checked(t.c, c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    int n = common_vars(nvars_, o.nvars_);
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            Term t;
            for (int v = 0; v < n; ++v) t.key.e[v] = static_cast<std::int16_t>(a.key.e[v] + b.key.e[v]);
            t.key.eps = static_cast<std::uint8_t>(a.key.eps ^ b.key.eps);
            t.c = mul_checked(a.c, b.c);
            raw.push_back(t);
        }
    return from_terms(n, std::move(raw));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].key == o.terms_[i].key) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

LaurentPoly LaurentPoly::divided_by(Coeff c) const {
    if (c == 0) fail("DivisionByZero", "divide by zero");
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        if (t.c % c) fail("NotDivisible", "coefficient not divisible");
        t.c /= c;
    }
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    LaurentPoly r = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

LaurentPoly LaurentPoly::shifted(const std::vector<int>& doubled, int eps) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        for (size_t v = 0; v < doubled.size(); ++v) t.key.e[v] = static_cast<std::int16_t>(t.key.e[v] + doubled[v]);
        t.key.eps ^= static_cast<std::uint8_t>(eps & 1);
    }
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::remap(int nvars, const std::vector<int>& slot, const std::vector<int>& sign) const {
    check_vars(nvars);
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (auto& t : terms_) {
        Term u;
        u.key.eps = t.key.eps;
        u.c = t.c;
        for (int v = 0; v < nvars_; ++v) {
            if (!t.key.e[v]) continue;
            u.key.e[slot[v]] = static_cast<std::int16_t>(u.key.e[slot[v]] + sign[v] * t.key.e[v]);
        }
        raw.push_back(u);
    }
    return from_terms(nvars, std::move(raw));
}

LaurentPoly LaurentPoly::truncate_weighted(const std::vector<int>& weights, long bound) const {
    LaurentPoly r(nvars_);
    for (auto& t : terms_) {
        long w = 0;
        for (size_t v = 0; v < weights.size(); ++v) w += static_cast<long>(weights[v]) * t.key.e[v];
        if (w <= bound) r.terms_.push_back(t);
    }
    return r;
}

LaurentPoly LaurentPoly::drop_eps() const {
    std::vector<Term> raw = terms_;
    for (auto& t : raw) t.key.eps = 0;
    return from_terms(nvars_, std::move(raw));
}

BigInt LaurentPoly::eval_one() const {
    BigInt s = 0;
    for (auto& t : terms_) s += t.c;
    return s;
}

bool LaurentPoly::invariant_under_permutation(const std::vector<int>& perm) const {
    std::vector<int> sign(nvars_, 1);
    return remap(nvars_, perm, sign) == *this;
}

bool LaurentPoly::invariant_under_inversion(int i) const {
    std::vector<int> slot(nvars_), sign(nvars_, 1);
    for (int v = 0; v < nvars_; ++v) slot[v] = v;
    sign[i] = -1;
    return remap(nvars_, slot, sign) == *this;
}

std::vector<std::string> default_names(int nvars, const std::string& stem) {
    std::vector<std::string> n;
    for (int i = 0; i < nvars; ++i) n.push_back(stem + std::to_string(i + 1));
    return n;
}

namespace {

std::string exp_str(int doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return "(" + std::to_string(doubled) + "/2)";
}

}  // namespace

std::string LaurentPoly::str(const std::vector<std::string>& names_in) const {
    auto names = names_in.empty() ? default_names(nvars_) : names_in;
    if (terms_.empty()) return "0";
    // Display by descending exponent vector.
    std::vector<Term> order(terms_.rbegin(), terms_.rend());
    std::string out;
    bool first = true;
    for (auto& t : order) {
        std::string mono;
        for (int v = 0; v < nvars_; ++v) {
            int e = t.key.e[v];
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e != 2) mono += "^" + exp_str(e);
        }
        if (t.key.eps) mono = mono.empty() ? "eps" : "eps*" + mono;
        Coeff c = t.c;
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Coeff a = c < 0 ? -c : c;
        if (mono.empty()) out += std::to_string(a);
        else {
            if (a != 1) out += std::to_string(a) + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

nlohmann::json LaurentPoly::to_json() const {
    auto arr = nlohmann::json::array();
    for (auto& t : terms_) {
        std::vector<int> e(t.key.e.begin(), t.key.e.begin() + nvars_);
        arr.push_back({{"exponents", e}, {"eps", t.key.eps}, {"coeff", t.c}});
    }
    return {{"vars", nvars_}, {"doubled", true}, {"terms", arr}};
}

}  // namespace superchar
