#include "superchar/infmat.hpp"

#include <set>

namespace superchar {

SuperMatrix SuperMatrix::unit(HalfIndex p, HalfIndex q, Rational c) {
    SuperMatrix m;
    m.add(p, q, c);
    return m;
}

Rational SuperMatrix::at(HalfIndex p, HalfIndex q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? Rational(0) : it->second;
}

void SuperMatrix::add(HalfIndex p, HalfIndex q, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = entries_.try_emplace({p, q}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) entries_.erase(it);
    }
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    for (auto& [k, v] : o.entries_) add(k.first, k.second, v);
    return *this;
}
SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    for (auto& [k, v] : o.entries_) add(k.first, k.second, -v);
    return *this;
}
SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
    SuperMatrix r = *this;
    return r += o;
}
SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
    SuperMatrix r = *this;
    return r -= o;
}
SuperMatrix SuperMatrix::operator*(const Rational& c) const {
    SuperMatrix r;
    if (c == 0) return r;
    for (auto& [k, v] : entries_) r.entries_[k] = v * c;
    return r;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
    std::multimap<HalfIndex, std::pair<HalfIndex, Rational>> rows;
    for (auto& [k, v] : o.entries_) rows.emplace(k.first, std::make_pair(k.second, v));
    SuperMatrix r;
    for (auto& [k, v] : entries_) {
        auto [lo, hi] = rows.equal_range(k.second);
        for (auto it = lo; it != hi; ++it) r.add(k.first, it->second.first, v * it->second.second);
    }
    return r;
}

bool SuperMatrix::homogeneous() const {
    std::set<int> seen;
    for (auto& [k, v] : entries_) seen.insert((index_parity(k.first) + index_parity(k.second)) & 1);
    return seen.size() <= 1;
}

int SuperMatrix::parity() const {
    if (!homogeneous()) fail("NonHomogeneous", "element mixes even and odd parts");
    if (entries_.empty()) return 0;
    auto& k = entries_.begin()->first;
    return (index_parity(k.first) + index_parity(k.second)) & 1;
}

SuperMatrix SuperMatrix::component(int par) const {
    SuperMatrix r;
    for (auto& [k, v] : entries_)
        if (((index_parity(k.first) + index_parity(k.second)) & 1) == par) r.entries_[k] = v;
    return r;
}

std::string SuperMatrix::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [k, v] : entries_) {
        Rational c = v;
        if (!first) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        if (c < 0) c = -c;
        if (c != 1) out += rational_str(c) + "*";
        out += "e[" + k.first.str() + "," + k.second.str() + "]";
        first = false;
    }
    return out;
}

nlohmann::json SuperMatrix::to_json() const {
    auto arr = nlohmann::json::array();
    for (auto& [k, v] : entries_)
        arr.push_back({{"p", std::to_string(k.first.twice) + "/2"},
                       {"q", std::to_string(k.second.twice) + "/2"},
                       {"coeff", rational_str(v)}});
    return arr;
}

SuperMatrix SuperMatrix::from_json(const nlohmann::json& j) {
    SuperMatrix m;
    for (auto& e : j) {
        auto idx = [](const nlohmann::json& x) {
            return x.is_number_integer() ? HalfIndex::integer(x.get<int>()) : HalfIndex::parse(x.get<std::string>());
        };
        Rational c = e["coeff"].is_string() ? parse_rational(e["coeff"].get<std::string>())
                                             : Rational(e["coeff"].get<long long>());
        m.add(idx(e["p"]), idx(e["q"]), c);
    }
    return m;
}

SuperMatrix super_bracket(const SuperMatrix& a, const SuperMatrix& b) {
    SuperMatrix r;
    for (int pa = 0; pa < 2; ++pa)
        for (int pb = 0; pb < 2; ++pb) {
            SuperMatrix x = a.component(pa), y = b.component(pb);
            if (x.is_zero() || y.is_zero()) continue;
            r += x * y;
            if (pa * pb) r += y * x;
            else r -= y * x;
        }
    return r;
}

Rational supertrace(const SuperMatrix& a) {
    Rational s = 0;
    for (auto& [k, v] : a.entries())
        if (k.first == k.second) s += k.first.is_half() ? -v : v;
    return s;
}

SuperMatrix commutator_with_J(const SuperMatrix& a) {
    SuperMatrix r;
    for (auto& [k, v] : a.entries()) {
        int w = (k.first.twice <= 0 ? 1 : 0) - (k.second.twice <= 0 ? 1 : 0);
        if (w) r.add(k.first, k.second, v * w);
    }
    return r;
}

Rational cocycle_alpha(const SuperMatrix& a, const SuperMatrix& b) { return supertrace(commutator_with_J(a) * b); }

namespace {

// Sign theta in  e~_{pq} = e_{pq} - theta * e_{-q,-p}.
int te_theta(Family fam, HalfIndex p, HalfIndex q) {
    bool ip = p.is_integer(), iq = q.is_integer();
    int sp = p.sign(), sq = q.sign();
    if (fam == Family::C) {
        if (ip && iq) return sp * sq > 0 ? 1 : -1;
        if (!ip && !iq) return 1;
        if (ip) return sp > 0 ? -1 : 1;  // e~_{i,r}
        // e~_{r,i}: obtained from e~_{i,r} = e~_{-r,-i} (i>0) and e~_{-r,-i} = -e~_{i,r} (i<0)
        return sq < 0 ? -1 : 1;
    }
    if (ip && iq) return 1;
    if (!ip && !iq) return sp * sq > 0 ? 1 : -1;
    if (ip) return sq > 0 ? -1 : 1;  // e~_{i,r}
    return sp < 0 ? -1 : 1;          // e~_{r,i}
}

}  // namespace

SuperMatrix te_generator(Family fam, HalfIndex p, HalfIndex q) {
    if (p.twice == 0 || q.twice == 0) fail("InadmissibleIndex", "generator indices must be nonzero");
    SuperMatrix m = SuperMatrix::unit(p, q);
    m.add(-q, -p, Rational(-te_theta(fam, p, q)));
    return m;
}

int form_value(Family fam, HalfIndex p, HalfIndex q) {
    if (p.twice == 0 || q.twice == 0) return 0;
    if (p.is_half() != q.is_half()) return 0;
    if (p != -q) return 0;
    bool skew_part = (fam == Family::C) ? p.is_integer() : p.is_half();
    return skew_part ? p.sign() : 1;
}

bool preserves_form(const SuperMatrix& a, Family fam) {
    int eps = a.parity();
    std::set<HalfIndex> hull;
    for (auto& [k, v] : a.entries()) {
        if (k.first.twice == 0 || k.second.twice == 0) return false;
        for (auto x : {k.first, k.second, -k.first, -k.second}) hull.insert(x);
    }
    // (A e_v | e_w) = A_{-w,v} (e_{-w}|e_w),  (e_v | A e_w) = A_{-v,w} (e_v|e_{-v})
    for (auto v : hull)
        for (auto w : hull) {
            Rational lhs = a.at(-w, v) * form_value(fam, -w, w);
            Rational rhs = a.at(-v, w) * form_value(fam, v, -v);
            int sign = (eps * index_parity(v)) ? 1 : -1;
            if (lhs != rhs * sign) return false;
        }
    return true;
}

}  // namespace superchar
