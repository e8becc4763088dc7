#include "superchar/fock.hpp"

#include "superchar/superschur.hpp"
#include "superchar/symring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace superchar {

namespace {

HalfIndex H(int twice) { return HalfIndex::from_twice(twice); }

const char* field_tag(Field f) {
    switch (f) {
        case Field::PsiP: return "p+";
        case Field::PsiM: return "p-";
        case Field::GamP: return "g+";
        case Field::GamM: return "g-";
        case Field::Phi: return "phi";
        case Field::Chi: return "chi";
    }
    return "?";
}

bool is_colored(Field f) { return f != Field::Phi && f != Field::Chi; }
bool int_indexed(Field f) { return f == Field::PsiP || f == Field::PsiM || f == Field::Phi; }

// Creation modes supercommute, so a creation mode is inserted at its sorted
// position with the sign of the odd modes it passes.
bool insert_creation(const Mode& a, Monomial& m, int& sign) {
    auto pos = std::upper_bound(m.begin(), m.end(), a);
    if (a.parity() && pos != m.begin() && *(pos - 1) == a) return false;
    int passed = 0;
    if (a.parity())
        for (auto it = m.begin(); it != pos; ++it) passed += it->parity();
    sign = (passed & 1) ? -1 : 1;
    m.insert(pos, a);
    return true;
}

}  // namespace

Mode psi_p(int c, HalfIndex i) { return {Field::PsiP, c, i}; }
Mode psi_m(int c, HalfIndex i) { return {Field::PsiM, c, i}; }
Mode gam_p(int c, HalfIndex r) { return {Field::GamP, c, r}; }
Mode gam_m(int c, HalfIndex r) { return {Field::GamM, c, r}; }
Mode phi(HalfIndex i) { return {Field::Phi, 0, i}; }
Mode chi(HalfIndex r) { return {Field::Chi, 0, r}; }

std::string Mode::str() const {
    std::string s = field_tag(field);
    s += "[";
    if (is_colored(field)) s += std::to_string(color) + ",";
    return s + index.str() + "]";
}

bool Space::contains(const Mode& m) const {
    if (int_indexed(m.field) != m.index.is_integer()) return false;
    if (is_colored(m.field)) {
        if (m.color < 1 || m.color > d) return false;
    } else {
        if (kind != SpaceKind::Half || m.color != 0) return false;
    }
    if (m.index.twice == 0) return kind == SpaceKind::GL && (m.field == Field::PsiP || m.field == Field::PsiM);
    return true;
}

bool Space::annihilates(const Mode& m) const {
    if (m.index.twice == 0) return m.field == Field::PsiP;
    return m.index.twice > 0;
}

std::string Space::str() const {
    switch (kind) {
        case SpaceKind::GL: return "F^" + std::to_string(d);
        case SpaceKind::Zero: return "F0^" + std::to_string(d);
        case SpaceKind::Half: return "F0^" + std::to_string(d) + "+1/2";
    }
    return "?";
}

int energy_twice(const Monomial& m) {
    int e = 0;
    for (auto& x : m) e -= x.index.twice;
    return e;
}

FockVector FockVector::vacuum() { return of({}); }

FockVector FockVector::of(const Monomial& m, Rational c) {
    FockVector v;
    v.add(m, c);
    return v;
}

Rational FockVector::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int FockVector::max_energy_twice() const {
    int e = 0;
    for (auto& [m, c] : terms_) e = std::max(e, energy_twice(m));
    return e;
}

bool FockVector::homogeneous() const {
    std::set<int> es;
    for (auto& [m, c] : terms_) es.insert(energy_twice(m));
    return es.size() <= 1;
}

void FockVector::add(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector r = *this;
    return r += o;
}

FockVector FockVector::operator-(const FockVector& o) const { return *this + o * Rational(-1); }

FockVector FockVector::operator*(const Rational& c) const {
    FockVector r;
    if (c == 0) return r;
    for (auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

std::string FockVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) out += "-", a = -a;
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out += rational_str(a) + "*";
        for (auto& x : m) out += x.str() + " ";
        out += "|0>";
    }
    return out;
}

nlohmann::json FockVector::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : terms_) {
        nlohmann::json modes = nlohmann::json::array();
        for (auto& x : m) modes.push_back(x.str());
        arr.push_back({{"coeff", rational_str(c)}, {"modes", modes}});
    }
    return arr;
}

namespace {

Mode parse_mode(const std::string& tok) {
    auto lb = tok.find('['), rb = tok.find(']');
    if (lb == std::string::npos || rb != tok.size() - 1) fail("ParseError", "bad mode '" + tok + "'");
    std::string tag = tok.substr(0, lb);
    auto args = split(tok.substr(lb + 1, rb - lb - 1), ',');
    Field f;
    if (tag == "p+") f = Field::PsiP;
    else if (tag == "p-") f = Field::PsiM;
    else if (tag == "g+") f = Field::GamP;
    else if (tag == "g-") f = Field::GamM;
    else if (tag == "phi") f = Field::Phi;
    else if (tag == "chi") f = Field::Chi;
    else fail("ParseError", "unknown field '" + tag + "'");
    Mode m;
    m.field = f;
    if (is_colored(f)) {
        if (args.size() != 2) fail("ParseError", "mode '" + tok + "' needs [color,index]");
        m.color = parse_int(args[0]);
        m.index = HalfIndex::parse(args[1]);
    } else {
        if (args.size() != 1) fail("ParseError", "mode '" + tok + "' needs [index]");
        m.index = HalfIndex::parse(args[0]);
    }
    if (int_indexed(f) != m.index.is_integer()) fail("ParseError", "index of '" + tok + "' has the wrong parity");
    bool creation = m.index.twice < 0 || (m.index.twice == 0 && f == Field::PsiM);
    if (!creation) fail("ParseError", "'" + tok + "' is not a creation mode");
    return m;
}

}  // namespace

FockVector FockVector::parse(const std::string& s) {
    std::istringstream in(s);
    std::string tok;
    FockVector out;
    Rational sign = 1, coef = 1;
    std::vector<Mode> modes;
    bool open = false;
    auto finish = [&]() {
        Monomial m;
        int total = 1;
        for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
            int sg;
            if (!insert_creation(*it, m, sg)) {
                total = 0;
                break;
            }
            total *= sg;
        }
        if (total) out.add(m, sign * coef * total);
        sign = coef = 1;
        modes.clear();
        open = false;
    };
    while (in >> tok) {
        if (tok == "+" || tok == "-") {
            if (open) fail("ParseError", "term without |0>");
            sign = tok == "-" ? -1 : 1;
            continue;
        }
        auto star = tok.find('*');
        if (star != std::string::npos) {
            coef = parse_rational(tok.substr(0, star));
            tok = tok.substr(star + 1);
            if (tok.empty()) continue;
        }
        open = true;
        if (tok == "|0>") {
            finish();
            continue;
        }
        modes.push_back(parse_mode(tok));
    }
    if (open) fail("ParseError", "state literal must end with |0>");
    return out;
}

Rational contraction(const Mode& a, const Mode& b) {
    if (a.index.twice + b.index.twice != 0) return 0;
    if (a.color != b.color) return 0;
    auto pair = [&](Field x, Field y) { return a.field == x && b.field == y; };
    if (pair(Field::PsiP, Field::PsiM) || pair(Field::PsiM, Field::PsiP)) return 1;
    if (pair(Field::GamP, Field::GamM)) return 1;
    if (pair(Field::GamM, Field::GamP)) return -1;
    if (pair(Field::Phi, Field::Phi)) return 1;
    if (pair(Field::Chi, Field::Chi)) return a.index.twice > 0 ? 1 : -1;
    return 0;
}

FockVector apply_mode(const Space& sp, const Mode& a, const FockVector& v) {
    if (!sp.contains(a)) fail("InvalidMode", a.str() + " is not a mode of " + sp.str());
    FockVector out;
    if (!sp.annihilates(a)) {
        for (auto& [m, c] : v.terms()) {
            Monomial w = m;
            int sg;
            if (insert_creation(a, w, sg)) out.add(w, c * sg);
        }
        return out;
    }
    for (auto& [m, c] : v.terms()) {
        int odd = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            Rational k = contraction(a, m[i]);
            if (k != 0) {
                Monomial w = m;
                w.erase(w.begin() + static_cast<long>(i));
                Rational t = c * k;
                out.add(w, (a.parity() && (odd & 1)) ? Rational(-t) : t);
            }
            odd += m[i].parity();
        }
    }
    return out;
}

FockVector multiply(const Space& sp, const FockVector& poly, const FockVector& v) {
    FockVector out;
    for (auto& [m, c] : poly.terms()) {
        FockVector w = v;
        for (auto it = m.rbegin(); it != m.rend() && !w.is_zero(); ++it) w = apply_mode(sp, *it, w);
        out += w * c;
    }
    return out;
}

namespace {

FockVector apply_bilinear(const Space& sp, const Rational& c, const Mode& a, const Mode& b, const FockVector& v) {
    if (sp.annihilates(b)) return apply_mode(sp, a, apply_mode(sp, b, v)) * c;
    int sg = (a.parity() & b.parity()) ? -1 : 1;
    return apply_mode(sp, b, apply_mode(sp, a, v)) * (c * sg);
}

Mode make_mode(Field f, int color, HalfIndex i) { return {f, is_colored(f) ? color : 0, i}; }

}  // namespace

RealizedOp& RealizedOp::operator+=(const RealizedOp& o) {
    fixed.insert(fixed.end(), o.fixed.begin(), o.fixed.end());
    series.insert(series.end(), o.series.begin(), o.series.end());
    scalar += o.scalar;
    return *this;
}

RealizedOp RealizedOp::operator+(const RealizedOp& o) const {
    RealizedOp r = *this;
    return r += o;
}

RealizedOp RealizedOp::operator*(const Rational& c) const {
    RealizedOp r = *this;
    for (auto& b : r.fixed) b.c *= c;
    for (auto& s : r.series) s.c_pos *= c, s.c_neg *= c, s.c_zero *= c;
    r.scalar *= c;
    return r;
}

FockVector RealizedOp::apply(const Space& sp, const FockVector& v) const {
    FockVector out = v * scalar;
    for (auto& b : fixed) out += apply_bilinear(sp, b.c, b.a, b.b, v);
    int E = v.max_energy_twice();
    for (auto& s : series) {
        bool half = !int_indexed(s.fb);
        for (int t = -E; t <= E; ++t) {
            if ((t & 1) != (half ? 1 : 0)) continue;
            Rational c = t > 0 ? s.c_pos : (t < 0 ? s.c_neg : s.c_zero);
            if (c == 0) continue;
            Mode a = make_mode(s.fa, s.ca, H(-t)), b = make_mode(s.fb, s.cb, H(t));
            if (!sp.contains(a) || !sp.contains(b)) continue;
            out += apply_bilinear(sp, c, a, b, v);
        }
    }
    return out;
}

std::string RealizedOp::str() const {
    std::vector<std::string> parts;
    for (auto& b : fixed) parts.push_back(rational_str(b.c) + "*:" + b.a.str() + " " + b.b.str() + ":");
    for (auto& s : series) {
        auto one = [&](const Rational& c, const char* range) {
            if (c == 0) return;
            parts.push_back(rational_str(c) + "*sum_{n" + range + "} :" + make_mode(s.fa, s.ca, H(0)).str() + "(-n) " +
                            make_mode(s.fb, s.cb, H(0)).str() + "(n):");
        };
        if (s.c_pos == s.c_neg && s.c_neg == s.c_zero) one(s.c_pos, "");
        else one(s.c_pos, ">0"), one(s.c_neg, "<0"), one(s.c_zero, "=0");
    }
    if (scalar != 0) parts.push_back(rational_str(scalar));
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

RealizedOp realize_e(const Space& sp, HalfIndex p, HalfIndex q) {
    RealizedOp op;
    for (int c = 1; c <= sp.d; ++c) {
        Bilinear b;
        b.a = p.is_integer() ? psi_p(c, -p) : gam_p(c, -p);
        b.b = q.is_integer() ? psi_m(c, q) : gam_m(c, q);
        b.c = p.is_half() ? -1 : 1;
        if (!sp.contains(b.a) || !sp.contains(b.b)) fail("InvalidDescriptor", "e_{" + p.str() + "," + q.str() + "} on " + sp.str());
        op.fixed.push_back(b);
    }
    return op;
}

RealizedOp realize_matrix(const Space& sp, const SuperMatrix& a) {
    RealizedOp op;
    for (auto& [k, c] : a.entries()) op += realize_e(sp, k.first, k.second) * c;
    return op;
}

namespace {

// phi/chi part of e~_pq on the Half space; e~_{r,i} is reduced to e~_{-i,-r}.
RealizedOp half_extra(HalfIndex p, HalfIndex q) {
    RealizedOp op;
    auto term = [&](Rational c, Mode a, Mode b) { op.fixed.push_back({c, a, b}); };
    if (p.is_integer() && q.is_integer()) {
        term(1, phi(-p), phi(q));
    } else if (p.is_half() && q.is_half()) {
        int sr = p.sign(), ss = q.sign();
        // rs > 0: the printed term is read for r, s > 0 and carried to r, s < 0
        // through e~_{rs} = -e~_{-s,-r}.
        if (sr * ss > 0) term(sr, chi(-p), chi(q));
        else term(sr < 0 ? 1 : -1, chi(-p), chi(q));
    } else if (p.is_integer()) {
        term(q.sign(), phi(-p), chi(q));
    } else {
        SuperMatrix a = te_generator(Family::D, p, q), b = te_generator(Family::D, -q, -p);
        Rational ratio = a.at(p, q) / b.at(p, q);
        return half_extra(-q, -p) * ratio;
    }
    return op;
}

}  // namespace

RealizedOp realize_tilde(const Space& sp, Family fam, HalfIndex p, HalfIndex q) {
    RealizedOp op = realize_matrix(sp, te_generator(fam, p, q));
    if (sp.kind == SpaceKind::Half) {
        if (fam != Family::D) fail("InvalidDescriptor", "the Half space carries the D action only");
        op += half_extra(p, q);
    }
    return op;
}

std::vector<std::pair<Rational, SuperMatrix::Key>> tilde_decompose(Family fam, const SuperMatrix& a) {
    std::vector<std::pair<Rational, SuperMatrix::Key>> out;
    SuperMatrix rest = a;
    for (int guard = 0; !rest.is_zero(); ++guard) {
        if (guard > 10000) fail("NotInSubalgebra", "decomposition does not terminate");
        auto key = rest.entries().rbegin()->first;
        SuperMatrix g = te_generator(fam, key.first, key.second);
        Rational gk = g.at(key.first, key.second);
        if (gk == 0) fail("NotInSubalgebra", "matrix is not in the e~ span");
        Rational c = rest.at(key.first, key.second) / gk;
        out.push_back({c, key});
        rest -= g * c;
    }
    return out;
}

RealizedOp realize_tilde_matrix(const Space& sp, Family fam, const SuperMatrix& a) {
    RealizedOp op;
    for (auto& [c, k] : tilde_decompose(fam, a)) op += realize_tilde(sp, fam, k.first, k.second) * c;
    return op;
}

RealizedOp realize_central(const Space& sp) {
    RealizedOp op;
    op.scalar = sp.central_charge();
    return op;
}

RealizedOp realize_group(const Space& sp, GroupOp g, int i, int j) {
    auto check = [&](int c) {
        if (c < 1 || c > sp.d) fail("InvalidDescriptor", "color out of range");
    };
    check(i);
    if (g != GroupOp::SoPlusI && g != GroupOp::SoMinusI) check(j);
    bool gl = sp.kind == SpaceKind::GL;
    if (gl && g != GroupOp::E) fail("InvalidDescriptor", "only gl_d acts on the gl space");
    if ((g == GroupOp::SoPlusI || g == GroupOp::SoMinusI) && sp.kind != SpaceKind::Half)
        fail("InvalidDescriptor", "E^so_i needs the Half space");
    RealizedOp op;
    auto add = [&](Field fa, int ca, Field fb, int cb, Rational pos, Rational neg) {
        op.series.push_back({fa, ca, fb, cb, pos, neg, gl && int_indexed(fb) ? pos : Rational(0)});
    };
    switch (g) {
        case GroupOp::E:
            add(Field::PsiP, i, Field::PsiM, j, 1, 1);
            add(Field::GamP, i, Field::GamM, j, -1, -1);
            break;
        case GroupOp::SpPlus:
            add(Field::PsiP, i, Field::PsiP, j, 1, -1);
            add(Field::GamP, i, Field::GamP, j, 1, 1);
            break;
        case GroupOp::SpMinus:
            add(Field::PsiM, i, Field::PsiM, j, 1, -1);
            add(Field::GamM, i, Field::GamM, j, -1, -1);
            break;
        case GroupOp::SoPlus:
            add(Field::PsiP, i, Field::PsiP, j, 1, 1);
            add(Field::GamP, i, Field::GamP, j, 1, -1);
            break;
        case GroupOp::SoMinus:
            add(Field::PsiM, i, Field::PsiM, j, 1, 1);
            add(Field::GamM, i, Field::GamM, j, -1, 1);
            break;
        case GroupOp::SoPlusI:
            add(Field::Phi, 0, Field::PsiP, i, 1, 1);
            add(Field::Chi, 0, Field::GamP, i, -1, 1);
            break;
        case GroupOp::SoMinusI:
            add(Field::Phi, 0, Field::PsiM, i, 1, 1);
            add(Field::Chi, 0, Field::GamM, i, 1, 1);
            break;
    }
    return op;
}

std::vector<Mode> creation_modes(const Space& sp, HalfIndex cutoff) {
    std::vector<Mode> out;
    for (int c = 1; c <= sp.d; ++c)
        for (Field f : {Field::PsiP, Field::PsiM, Field::GamP, Field::GamM})
            for (int t = 0; t <= cutoff.twice; ++t) {
                Mode m{f, c, H(-t)};
                if (sp.contains(m) && !sp.annihilates(m)) out.push_back(m);
            }
    if (sp.kind == SpaceKind::Half)
        for (Field f : {Field::Phi, Field::Chi})
            for (int t = 1; t <= cutoff.twice; ++t) {
                Mode m{f, 0, H(-t)};
                if (sp.contains(m)) out.push_back(m);
            }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void grow(const std::vector<Mode>& modes, std::size_t from, int budget, Monomial& cur, std::vector<Monomial>& out) {
    out.push_back(cur);
    for (std::size_t k = from; k < modes.size(); ++k) {
        int e = -modes[k].index.twice;
        if (e > budget) continue;
        cur.push_back(modes[k]);
        grow(modes, modes[k].parity() ? k + 1 : k, budget - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> enumerate_basis(const Space& sp, HalfIndex cutoff) {
    if (cutoff.twice < 0) fail("BadCutoff", "cutoff must be non-negative");
    auto modes = creation_modes(sp, cutoff);
    std::vector<Monomial> out;
    Monomial cur;
    grow(modes, 0, cutoff.twice, cur, out);
    std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        int ea = energy_twice(a), eb = energy_twice(b);
        return ea != eb ? ea < eb : a < b;
    });
    return out;
}

std::vector<Monomial> basis_at_energy(const Space& sp, HalfIndex energy) {
    std::vector<Monomial> out;
    for (auto& m : enumerate_basis(sp, energy))
        if (energy_twice(m) == energy.twice) out.push_back(m);
    return out;
}

FockVector grassmann_det(const Space& sp, const ModeMatrix& m, int r, const SignMatrix& signs) {
    if (r < 0 || r > static_cast<int>(m.size()) || (r > 0 && r > static_cast<int>(m[0].size())))
        fail("BadMinor", "minor size out of range");
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    FockVector out;
    do {
        int inv = 0;
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b) inv += perm[a] > perm[b];
        FockVector v = FockVector::vacuum();
        for (int row = r - 1; row >= 0 && !v.is_zero(); --row) {
            v = apply_mode(sp, m[row][perm[row]], v);
            if (!signs.empty()) inv += signs[row][perm[row]] < 0;
        }
        out += (inv & 1) ? v * Rational(-1) : v;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ModeMatrix matrix_X(int d, int j) {
    if (j == 0 || d < 1) fail("BadMatrix", "X^j needs j != 0 and d >= 1");
    int k = j < 0 ? -j : j;
    ModeMatrix m(d, std::vector<Mode>(d));
    for (int row = 1; row <= d; ++row)
        for (int col = 1; col <= d; ++col) {
            int color = j < 0 ? d - col + 1 : col;
            bool gam = row <= std::min(k, d);
            Field f = gam ? (j < 0 ? Field::GamM : Field::GamP) : (j < 0 ? Field::PsiM : Field::PsiP);
            m[row - 1][col - 1] = Mode{f, color, gam ? H(-(2 * row - 1)) : H(-2 * k)};
        }
    return m;
}

ModeMatrix matrix_X_tilde(int d, int j) {
    if (j <= 0) fail("BadMatrix", "X~^j needs j > 0");
    ModeMatrix m = matrix_X(d, j);
    for (auto& row : m) {
        Mode& x = row[d - 1];
        x.field = x.field == Field::GamP ? Field::GamM : Field::PsiM;
        x.color = d;
    }
    return m;
}

ModeMatrix matrix_Gamma(int d) {
    if (d < 1) fail("BadMatrix", "Gamma needs d >= 1");
    ModeMatrix m(2 * d, std::vector<Mode>(2 * d));
    for (int row = 0; row < 2 * d; ++row)
        for (int col = 0; col < 2 * d; ++col) {
            bool plus = col < d;
            int color = plus ? col + 1 : 2 * d - col;
            Field f = row == 0 ? (plus ? Field::GamP : Field::GamM) : (plus ? Field::PsiP : Field::PsiM);
            m[row][col] = Mode{f, color, row == 0 ? H(-1) : H(-2)};
        }
    return m;
}

ModeMatrix matrix_Gamma_tilde(int d) {
    int n = 2 * d + 1;
    ModeMatrix m(n, std::vector<Mode>(n));
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) {
            HalfIndex idx = row == 0 ? H(-1) : H(-2);
            if (col == d) {
                m[row][col] = row == 0 ? chi(idx) : phi(idx);
                continue;
            }
            bool plus = col < d;
            int color = plus ? col + 1 : 2 * d + 1 - col;
            Field f = row == 0 ? (plus ? Field::GamP : Field::GamM) : (plus ? Field::PsiP : Field::PsiM);
            m[row][col] = Mode{f, color, idx};
        }
    return m;
}

Setting Setting::make(Algebra a, int k) {
    Setting s;
    s.algebra = a;
    s.n = k;
    switch (a) {
        case Algebra::GL:
        case Algebra::A:
        case Algebra::C:
            if (k < 1) fail("BadParams", "needs d >= 1");
            s.space = {a == Algebra::GL ? SpaceKind::GL : SpaceKind::Zero, k};
            s.group = {a == Algebra::C ? GroupKind::Sp : GroupKind::GL, k};
            return s;
        case Algebra::D:
            if (k < 1) fail("BadParams", "needs n >= 1");
            s.space = {k % 2 ? SpaceKind::Half : SpaceKind::Zero, k / 2};
            s.group = {GroupKind::O, k};
            return s;
        case Algebra::GLOne: break;
    }
    fail("Unsupported", "no Fock setting for glone");
}

Rational Setting::level() const { return algebra == Algebra::D ? Rational(n, 2) : Rational(n); }

std::string Setting::str() const { return algebra_name(algebra) + " x " + group.str() + " on " + space.str(); }

namespace {

struct Minor {
    ModeMatrix m;
    int r;
    SignMatrix signs = {};
};

FockVector product_of_minors(const Space& sp, const std::vector<Minor>& factors) {
    FockVector v = FockVector::vacuum();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        v = multiply(sp, grassmann_det(sp, it->m, it->r, it->signs), v);
    return v;
}

// The chi entry enters the Gamma~ minors with a minus sign; with the phi/chi
// terms of the realization as written this is what makes the vectors singular.
SignMatrix gamma_tilde_signs(int d) {
    SignMatrix s(2 * d + 1, std::vector<int>(2 * d + 1, 1));
    s[0][d] = -1;
    return s;
}

std::vector<int> padded(const GeneralizedPartition& l, int len, int keep) {
    std::vector<int> w(len, 0);
    for (int i = 0; i < std::min(keep, len); ++i) w[i] = l.part(i + 1);
    return w;
}

}  // namespace

std::vector<HwvCandidate> hwv_candidates(const Setting& s, const GeneralizedPartition& lambda) {
    if (s.algebra == Algebra::GL || s.algebra == Algebra::GLOne) fail("Unsupported", "no highest weight vector formula for gl");
    weight_from_partition(s.algebra, lambda);  // admissibility
    const Space& sp = s.space;
    int d = sp.d;
    std::vector<HwvCandidate> out;
    if (s.algebra == Algebra::A) {
        auto [plus, minus] = split_signs(lambda);
        Partition mu = star(minus);
        std::vector<Minor> f;
        for (int j = mu.part(1); j >= 1; --j) f.push_back({matrix_X(d, -j), mu.column(j)});
        for (int j = 1; j <= plus.part(1); ++j) f.push_back({matrix_X(d, j), plus.column(j)});
        out.push_back({"X", product_of_minors(sp, f), lambda.parts(), 0});
        return out;
    }
    Partition p(lambda.parts());
    auto x_chain = [&](int from, bool tilde) {
        std::vector<Minor> f;
        for (int j = from; j <= p.part(1); ++j) f.push_back({tilde ? matrix_X_tilde(d, j) : matrix_X(d, j), p.column(j)});
        return f;
    };
    if (s.algebra == Algebra::C) {
        out.push_back({"X", product_of_minors(sp, x_chain(1, false)), p.parts(), 0});
        return out;
    }
    int n = s.n, c1 = p.column(1);
    int eps = p.size() % 2;
    if (n % 2 == 1) {
        auto f = x_chain(2, false);
        f.insert(f.begin(), {matrix_Gamma_tilde(d), c1, gamma_tilde_signs(d)});
        int keep = c1 <= d ? d : n - c1;
        out.push_back({"Gamma~", product_of_minors(sp, f), padded(p, d, keep), eps});
        return out;
    }
    if (c1 < d) {
        out.push_back({"X", product_of_minors(sp, x_chain(1, false)), padded(p, d, d), eps});
    } else if (c1 == d) {
        out.push_back({"X", product_of_minors(sp, x_chain(1, false)), padded(p, d, d), eps});
        auto w = padded(p, d, d);
        w[d - 1] = -w[d - 1];
        out.push_back({"X~", product_of_minors(sp, x_chain(1, true)), w, eps});
    } else {
        auto f = x_chain(2, false);
        f.insert(f.begin(), {matrix_Gamma(d), c1});
        out.push_back({"Gamma", product_of_minors(sp, f), padded(p, d, n - c1), eps});
    }
    return out;
}

namespace {

struct NamedOp {
    std::string name;
    RealizedOp op;
};

std::vector<NamedOp> raising_ops(const Setting& s, int bound_twice, bool with_group) {
    std::vector<NamedOp> out;
    const Space& sp = s.space;
    bool zero_ok = s.algebra == Algebra::GL;
    for (int a = -bound_twice; a <= bound_twice; ++a)
        for (int b = a + 1; b <= bound_twice; ++b) {
            if (!zero_ok && (a == 0 || b == 0)) continue;
            HalfIndex p = H(a), q = H(b);
            std::string tag = "[" + p.str() + "," + q.str() + "]";
            switch (s.algebra) {
                case Algebra::GL:
                case Algebra::A: out.push_back({"e" + tag, realize_e(sp, p, q)}); break;
                case Algebra::C: out.push_back({"e~C" + tag, realize_tilde(sp, Family::C, p, q)}); break;
                case Algebra::D: out.push_back({"e~D" + tag, realize_tilde(sp, Family::D, p, q)}); break;
                case Algebra::GLOne: break;
            }
        }
    if (!with_group) return out;
    int d = sp.d;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            out.push_back({"E[" + std::to_string(i) + "," + std::to_string(j) + "]", realize_group(sp, GroupOp::E, i, j)});
    if (s.group.kind == GroupKind::Sp)
        for (int i = 1; i <= d; ++i)
            for (int j = i; j <= d; ++j)
                out.push_back({"Esp+[" + std::to_string(i) + "," + std::to_string(j) + "]", realize_group(sp, GroupOp::SpPlus, i, j)});
    if (s.group.kind == GroupKind::O) {
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j)
                out.push_back({"Eso+[" + std::to_string(i) + "," + std::to_string(j) + "]", realize_group(sp, GroupOp::SoPlus, i, j)});
        if (s.n % 2)
            for (int i = 1; i <= d; ++i) out.push_back({"Eso+[" + std::to_string(i) + "]", realize_group(sp, GroupOp::SoPlusI, i)});
    }
    return out;
}

std::optional<Rational> eigenvalue(const Space& sp, const RealizedOp& op, const FockVector& v) {
    if (v.is_zero()) return std::nullopt;
    FockVector w = op.apply(sp, v);
    auto& [m, c] = *v.terms().begin();
    Rational lam = w.coeff(m) / c;
    if (!(w == v * lam)) return std::nullopt;
    return lam;
}

}  // namespace

SingularityReport singularity_check(const Setting& s, const FockVector& v, bool with_group) {
    SingularityReport rep;
    int bound = v.max_energy_twice() + 2;
    for (auto& [name, op] : raising_ops(s, bound, with_group)) {
        ++rep.checked;
        if (!op.apply(s.space, v).is_zero()) {
            rep.singular = false;
            rep.witness = name;
            return rep;
        }
    }
    return rep;
}

std::optional<Weight> extract_weight(const Setting& s, const FockVector& v) {
    int E = v.max_energy_twice();
    std::map<HalfIndex, int> cs;
    for (int t = -E; t <= E; ++t) {
        HalfIndex k = H(t);
        if (!index_allowed(s.algebra, k)) continue;
        RealizedOp h = s.algebra == Algebra::C   ? realize_tilde(s.space, Family::C, k, k)
                       : s.algebra == Algebra::D ? realize_tilde(s.space, Family::D, k, k)
                                                 : realize_e(s.space, k, k);
        auto lam = eigenvalue(s.space, h, v);
        if (!lam || denominator(*lam) != 1) return std::nullopt;
        cs[k] = static_cast<int>(numerator(*lam));
    }
    return Weight::make(s.algebra, cs, s.level());
}

std::optional<std::vector<int>> extract_group_weight(const Setting& s, const FockVector& v) {
    std::vector<int> w;
    for (int i = 1; i <= s.group.rank(); ++i) {
        auto lam = eigenvalue(s.space, realize_group(s.space, GroupOp::E, i, i), v);
        if (!lam || denominator(*lam) != 1) return std::nullopt;
        w.push_back(static_cast<int>(numerator(*lam)));
    }
    return w;
}

std::optional<int> eps_parity(const FockVector& v) {
    std::set<int> ps;
    for (auto& [m, c] : v.terms()) ps.insert(static_cast<int>(m.size() % 2));
    if (ps.size() != 1) return std::nullopt;
    return *ps.begin();
}

Mode conjugate_mode(const Mode& m, Conjugation c, Rational& sign) {
    sign = 1;
    Mode r = m;
    r.index = -m.index;
    switch (m.field) {
        case Field::PsiP: r.field = Field::PsiM; break;
        case Field::PsiM: r.field = Field::PsiP; break;
        case Field::GamP:
            r.field = Field::GamM;
            if (c == Conjugation::Paper && m.index.twice < 0) sign = -1;
            break;
        case Field::GamM:
            r.field = Field::GamP;
            if (c == Conjugation::Paper && m.index.twice > 0) sign = -1;
            break;
        case Field::Phi:
        case Field::Chi: break;
    }
    return r;
}

Rational inner(const Space& sp, const FockVector& u, const FockVector& v, Conjugation c) {
    Rational total = 0;
    for (auto& [m, cu] : u.terms()) {
        if (energy_twice(m) > v.max_energy_twice()) continue;
        FockVector w = v;
        Rational sign = cu;
        for (auto& a : m) {
            Rational s;
            Mode b = conjugate_mode(a, c, s);
            sign *= s;
            w = apply_mode(sp, b, w);
            if (w.is_zero()) break;
        }
        total += sign * w.coeff({});
    }
    return total;
}

std::vector<std::vector<Rational>> gram_matrix(const Space& sp, HalfIndex energy, Conjugation c) {
    auto basis = basis_at_energy(sp, energy);
    std::size_t n = basis.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = inner(sp, FockVector::of(basis[i]), FockVector::of(basis[j]), c);
    return g;
}

std::vector<Rational> leading_minors(const std::vector<std::vector<Rational>>& m0) {
    // Elimination without pivoting: minor_k is the product of the first k
    // pivots.  Stops at the first non-positive minor.
    auto m = m0;
    std::size_t n = m.size();
    std::vector<Rational> out;
    Rational prod = 1;
    for (std::size_t k = 0; k < n; ++k) {
        prod *= m[k][k];
        out.push_back(prod);
        if (prod <= 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j)
                if (m[k][j] != 0) m[i][j] -= f * m[k][j];
        }
    }
    return out;
}

int CharLayout::slot(HalfIndex k) const {
    auto it = std::find(slots.begin(), slots.end(), k);
    return it == slots.end() ? -1 : rank + static_cast<int>(it - slots.begin());
}

std::vector<int> CharLayout::weights() const {
    std::vector<int> w(nvars(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) w[rank + i] = slots[i].twice;
    return w;
}

long CharLayout::bound(HalfIndex cutoff) const { return 2L * cutoff.twice; }

std::vector<std::string> CharLayout::names() const {
    std::vector<std::string> out;
    for (int i = 1; i <= rank; ++i) out.push_back("z" + std::to_string(i));
    for (auto& k : slots) out.push_back(std::string(k.is_integer() ? "x" : "y") + "_" + k.str());
    return out;
}

CharLayout char_layout(const Setting& s, HalfIndex cutoff) {
    CharLayout L;
    L.rank = s.group.rank();
    bool signed_idx = s.algebra == Algebra::A || s.algebra == Algebra::GL;
    for (int t = signed_idx ? -cutoff.twice : 1; t <= cutoff.twice; ++t) {
        if (t == 0 && s.algebra != Algebra::GL) continue;
        L.slots.push_back(H(t));
    }
    if (L.nvars() > kMaxVars) fail("TooLarge", "character needs more than " + std::to_string(kMaxVars) + " variables");
    return L;
}

LaurentPoly monomial_weight(const Setting& s, const CharLayout& L, const Monomial& m) {
    std::vector<int> e(L.nvars(), 0);
    int eps = 0;
    bool signed_idx = s.algebra == Algebra::A || s.algebra == Algebra::GL;
    for (auto& x : m) {
        bool plus = x.field == Field::PsiP || x.field == Field::GamP;
        bool minus = x.field == Field::PsiM || x.field == Field::GamM;
        if (plus || minus) e[x.color - 1] += plus ? 2 : -2;
        if (s.group.uses_eps()) eps ^= 1;
        HalfIndex k = -x.index;
        if (signed_idx && minus) {
            int sl = L.slot(x.index);
            if (sl < 0) fail("TooLarge", "mode outside the character layout");
            e[sl] -= 2;
        } else {
            int sl = L.slot(k);
            if (sl < 0) fail("TooLarge", "mode outside the character layout");
            e[sl] += 2;
        }
    }
    return LaurentPoly::monomial(L.nvars(), e, eps);
}

LaurentPoly fock_character(const Setting& s, HalfIndex cutoff) {
    CharLayout L = char_layout(s, cutoff);
    std::vector<LaurentPoly::Term> raw;
    for (auto& m : enumerate_basis(s.space, cutoff)) {
        LaurentPoly w = monomial_weight(s, L, m);
        raw.push_back(w.terms()[0]);
    }
    return LaurentPoly::from_terms(L.nvars(), std::move(raw));
}

LaurentPoly product_character(const Setting& s, HalfIndex cutoff) {
    CharLayout L = char_layout(s, cutoff);
    int nv = L.nvars();
    auto W = L.weights();
    long B = L.bound(cutoff);
    auto trunc = [&](const LaurentPoly& p) { return p.truncate_weighted(W, B); };
    LaurentPoly one = LaurentPoly::constant(nv, 1), acc = one;
    bool odd = s.group.uses_eps();
    auto eps = [&](LaurentPoly p) { return odd ? p.shifted({}, 1) : p; };
    auto fermion = [&](const LaurentPoly& u) { acc = trunc(acc * (one + eps(u))); };
    auto boson = [&](const LaurentPoly& u) {
        LaurentPoly g = one, pw = one;
        for (int k = 1; k <= cutoff.twice; ++k) {
            pw = trunc(pw * eps(u));
            g += pw;
        }
        acc = trunc(acc * g);
    };
    bool signed_idx = s.algebra == Algebra::A || s.algebra == Algebra::GL;
    for (auto& k : L.slots) {
        if (k.twice < 0) continue;
        LaurentPoly v = LaurentPoly::var(nv, L.slot(k));
        bool ferm = k.is_integer();
        for (int i = 0; i < L.rank; ++i) {
            LaurentPoly zp = LaurentPoly::var(nv, i), zm = LaurentPoly::var(nv, i, -1);
            if (k.twice == 0) {
                fermion(LaurentPoly::var(nv, L.slot(k), -1) * zm);
                continue;
            }
            LaurentPoly vm = signed_idx ? LaurentPoly::var(nv, L.slot(-k), -1) : v;
            if (ferm) fermion(v * zp), fermion(vm * zm);
            else boson(v * zp), boson(vm * zm);
        }
        if (s.space.kind == SpaceKind::Half && k.twice > 0) {
            if (ferm) fermion(v);
            else boson(v);
        }
    }
    return acc;
}

DualityResult duality_decompose(const Setting& s, HalfIndex cutoff) {
    DualityResult r{s, cutoff, char_layout(s, cutoff), {}, true};
    r.decomposition = decompose_graded(fock_character(s, cutoff), s.group, true);
    for (auto& [lam, coeff] : r.decomposition.parts) {
        try {
            branching_weight(r, coeff);
        } catch (const Error&) {
            r.multiplicity_free = false;
        }
    }
    return r;
}

LaurentPoly expected_branching(const DualityResult& r, const GeneralizedPartition& lambda) {
    const Setting& s = r.setting;
    if (s.algebra != Algebra::C && s.algebra != Algebra::D) fail("Unsupported", "branching functions exist for C and D");
    int D = r.cutoff.twice;
    Partition p(lambda.parts());
    SymFunc f;
    if (s.algebra == Algebra::C) {
        f = sp_hook(p, D);
    } else {
        f = so_hook(p, s.n, D);
        if (s.n % 2 == 0) {
            Partition b = bar_conjugate(p, s.n);
            if (!(b == p)) f += so_hook(b, s.n, D);
        }
    }
    const CharLayout& L = r.layout;
    int nv = L.nvars();
    std::vector<LaurentPoly> xs, ys;
    for (auto& k : L.slots) (k.is_integer() ? xs : ys).push_back(LaurentPoly::var(nv, L.slot(k)));
    return specialize(f, xs, ys, nv).truncate_weighted(L.weights(), L.bound(r.cutoff));
}

Weight branching_weight(const DualityResult& r, const LaurentPoly& coeff) {
    const CharLayout& L = r.layout;
    auto W = L.weights();
    long best = 0;
    std::vector<const LaurentPoly::Term*> low;
    for (auto& t : coeff.terms()) {
        long e = 0;
        for (int i = 0; i < L.nvars(); ++i) e += long(W[i]) * t.key.e[i];
        if (low.empty() || e < best) low = {&t}, best = e;
        else if (e == best) low.push_back(&t);
    }
    if (low.size() != 1 || low[0]->c != 1) fail("NotMultiplicityFree", "highest weight term is not unique");
    std::map<HalfIndex, int> cs;
    for (auto& k : L.slots) cs[k] = low[0]->key.e[L.slot(k)] / 2;
    return Weight::make(r.setting.algebra, cs, r.setting.level());
}

HomomorphismReport homomorphism_check(const Space& sp, const SuperMatrix& a, const SuperMatrix& b, HalfIndex cutoff,
                                      std::optional<Family> fam) {
    auto rho = [&](const SuperMatrix& m) { return fam ? realize_tilde_matrix(sp, *fam, m) : realize_matrix(sp, m); };
    RealizedOp ra = rho(a), rb = rho(b);
    RealizedOp rab = rho(super_bracket(a, b));
    rab.scalar += cocycle_alpha(a, b) * sp.central_charge();
    int sign = (a.parity() & b.parity()) ? -1 : 1;
    HomomorphismReport rep;
    for (auto& m : enumerate_basis(sp, cutoff)) {
        FockVector v = FockVector::of(m);
        FockVector lhs = ra.apply(sp, rb.apply(sp, v)) - rb.apply(sp, ra.apply(sp, v)) * Rational(sign);
        FockVector rhs = rab.apply(sp, v);
        ++rep.vectors;
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.witness = v.str() + ": " + lhs.str() + " vs " + rhs.str();
            return rep;
        }
    }
    return rep;
}

}  // namespace superchar
