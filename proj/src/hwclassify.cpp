#include "superchar/hwclassify.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace superchar {

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::GL: return "gl";
        case Algebra::GLOne: return "glone";
        case Algebra::A: return "A";
        case Algebra::C: return "C";
        case Algebra::D: return "D";
    }
    return "?";
}

Algebra parse_algebra(const std::string& raw) {
    std::string s = trim(raw);
    if (s == "gl") return Algebra::GL;
    if (s == "glone") return Algebra::GLOne;
    if (s == "A" || s == "a") return Algebra::A;
    if (s == "C" || s == "c") return Algebra::C;
    if (s == "D" || s == "d") return Algebra::D;
    fail("ParseError", "unknown algebra '" + s + "'");
}

bool index_allowed(Algebra a, HalfIndex j) {
    switch (a) {
        case Algebra::GL: return true;
        case Algebra::GLOne: return j.is_integer();
        case Algebra::A: return j.twice != 0;
        case Algebra::C:
        case Algebra::D: return j.twice > 0;
    }
    return false;
}

Weight Weight::make(Algebra a, const std::map<HalfIndex, int>& coeffs, Rational level) {
    Weight w;
    w.algebra = a;
    w.level = level;
    for (auto& [j, v] : coeffs) {
        if (!index_allowed(a, j)) fail("BadIndex", "index " + j.str() + " not in the index set of " + algebra_name(a));
        if (v != 0) w.coeffs[j] = v;
    }
    return w;
}

int Weight::xi(HalfIndex j) const {
    auto it = coeffs.find(j);
    return it == coeffs.end() ? 0 : it->second;
}

std::string Weight::str() const {
    std::string out = algebra_name(algebra) + ": ";
    bool first = true;
    for (auto& [j, v] : coeffs) {
        if (!first) out += ",";
        first = false;
        out += j.str() + ":" + std::to_string(v);
    }
    return out + "; level=" + rational_str(level);
}

nlohmann::json Weight::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (auto& [j, v] : coeffs) cs.push_back({{"index", j.str()}, {"value", v}});
    return {{"algebra", algebra_name(algebra)}, {"coeffs", cs}, {"level", rational_str(level)}};
}

Weight Weight::from_json(const nlohmann::json& j) {
    std::map<HalfIndex, int> cs;
    for (auto& e : j.at("coeffs")) cs[HalfIndex::parse(e.at("index").get<std::string>())] += e.at("value").get<int>();
    return make(parse_algebra(j.at("algebra").get<std::string>()), cs, parse_rational(j.at("level").get<std::string>()));
}

Weight Weight::parse(const std::string& raw, const Algebra* fallback) {
    std::string s = trim(raw);
    Algebra alg;
    auto colon = s.find(':');
    bool prefixed = colon != std::string::npos && colon > 0 && std::isalpha(static_cast<unsigned char>(s[0]));
    if (prefixed) {
        alg = parse_algebra(s.substr(0, colon));
        s = s.substr(colon + 1);
    } else if (fallback) {
        alg = *fallback;
    } else {
        fail("ParseError", "weight literal needs an algebra prefix");
    }
    auto parts = split(s, ';');
    std::map<HalfIndex, int> cs;
    Rational level = 0;
    bool have_level = false;
    for (auto& part : parts) {
        std::string p = trim(part);
        if (p.empty()) continue;
        if (p.rfind("level", 0) == 0) {
            auto eq = p.find('=');
            if (eq == std::string::npos) fail("ParseError", "level needs '='");
            level = parse_rational(p.substr(eq + 1));
            have_level = true;
            continue;
        }
        for (auto& item : split(p, ',')) {
            std::string t = trim(item);
            if (t.empty()) continue;
            auto c = t.find(':');
            if (c == std::string::npos) fail("ParseError", "coefficient '" + t + "' needs index:value");
            HalfIndex j = HalfIndex::parse(t.substr(0, c));
            if (cs.count(j)) fail("ParseError", "index " + j.str() + " given twice");
            cs[j] = parse_int(t.substr(c + 1));
        }
    }
    if (!have_level) fail("ParseError", "weight literal needs level=...");
    return make(alg, cs, level);
}

namespace {

int level_int(const Weight& w) {
    if (denominator(w.level) != 1) fail("BadLevel", "level must be an integer");
    return static_cast<int>(numerator(w.level));
}

// Positive-side chain: xi_{1/2} > xi_{3/2} > ... > xi_{r-1/2} >= 0 and
// xi_1 > ... > xi_r >= 0 with xi_{r-1/2} = 0 only for the zero datum.
// `at(k)` gives xi at the doubled index k > 0.
template <class F>
std::string positive_chain(F at, int max_twice) {
    int r = 0;
    for (int t = 1; t <= max_twice; ++t)
        if (at(t) != 0) r = std::max(r, (t + 1) / 2);
    for (int t = 1; t <= max_twice; ++t)
        if (at(t) < 0) return "negative coefficient at " + HalfIndex::from_twice(t).str();
    if (r == 0) return {};
    for (int k = 1; k < r; ++k) {
        if (!(at(2 * k - 1) > at(2 * k + 1))) return "half-integer chain not strictly decreasing at " + HalfIndex::from_twice(2 * k - 1).str();
        if (!(at(2 * k) > at(2 * k + 2))) return "integer chain not strictly decreasing at " + HalfIndex::from_twice(2 * k).str();
    }
    if (at(2 * r - 1) == 0) return "xi_{r-1/2} = 0 with r = " + std::to_string(r);
    return {};
}

int max_abs_twice(const Weight& w) {
    int m = 0;
    for (auto& [j, v] : w.coeffs) m = std::max(m, j.abs_twice());
    return m;
}

FrobeniusData positive_datum(const std::function<int(int)>& at, int max_twice, int bound) {
    FrobeniusData f;
    f.length_bound = bound;
    int r = 0;
    for (int t = 1; t <= max_twice; ++t)
        if (at(t) != 0) r = std::max(r, (t + 1) / 2);
    for (int k = 1; k <= r; ++k) {
        f.pos_half.push_back(at(2 * k - 1));
        f.pos_int.push_back(at(2 * k));
    }
    return f;
}

void add(Verdict& v, const std::string& name, const std::string& problem) {
    v.trace.push_back({name, problem.empty(), problem});
    if (!problem.empty() && v.violated.empty()) {
        v.violated = name;
        v.unitarizable = false;
    }
}

void add_bound(Verdict& v, const std::string& name, long lhs, const Rational& rhs) {
    std::string text = std::to_string(lhs) + " <= " + rational_str(rhs);
    bool holds = lhs <= rhs;
    add(v, name, holds ? "" : "bound fails: " + text);
    if (holds) v.trace.back().detail = text;
}

}  // namespace

int l12(int x) { return x <= 0 ? 0 : (x == 1 ? 1 : 2); }

Weight weight_from_partition(Algebra a, const GeneralizedPartition& lambda) {
    int n = lambda.length();
    std::map<HalfIndex, int> cs;
    switch (a) {
        case Algebra::GL: {
            if (n < 1) fail("InadmissibleWeight", "gl needs length d >= 1");
            auto f = to_frobenius(lambda);
            for (int t = 2 * f.s() - 1; t <= 2 * f.r(); ++t) {
                int v = f.xi(HalfIndex::from_twice(t));
                if (v) cs[HalfIndex::from_twice(t)] = v;
            }
            return Weight::make(a, cs, n);
        }
        case Algebra::A: {
            if (n < 1) fail("InadmissibleWeight", "A needs length d >= 1");
            auto [plus, minus] = split_signs(lambda);
            auto fp = to_frobenius(plus);
            auto fm = to_frobenius(star(minus));
            for (int k = 0; k < fp.r(); ++k) {
                cs[HalfIndex::from_twice(2 * k + 1)] = fp.pos_half[k];
                cs[HalfIndex::from_twice(2 * k + 2)] = fp.pos_int[k];
            }
            for (int k = 0; k < fm.r(); ++k) {
                cs[HalfIndex::from_twice(-(2 * k + 1))] = -fm.pos_half[k];
                cs[HalfIndex::from_twice(-(2 * k + 2))] = -fm.pos_int[k];
            }
            return Weight::make(a, cs, n);
        }
        case Algebra::C:
        case Algebra::D: {
            if (!lambda.nonnegative()) fail("InadmissibleWeight", "needs a partition");
            Partition p(lambda.parts());
            if (a == Algebra::D && p.column(1) + p.column(2) > n)
                fail("InadmissibleWeight", "D needs lambda'_1 + lambda'_2 <= n");
            if (a == Algebra::C && n < 1) fail("InadmissibleWeight", "C needs length d >= 1");
            auto f = to_frobenius(p);
            for (int k = 0; k < f.r(); ++k) {
                cs[HalfIndex::from_twice(2 * k + 1)] = f.pos_half[k];
                cs[HalfIndex::from_twice(2 * k + 2)] = f.pos_int[k];
            }
            return Weight::make(a, cs, a == Algebra::C ? Rational(n) : Rational(n) / 2);
        }
        case Algebra::GLOne: break;
    }
    fail("Unsupported", "no partition labelling for glone");
}

GeneralizedPartition partition_from_weight(const Weight& w) {
    Verdict v = is_unitarizable(w);
    if (!v.unitarizable) fail("NotPartitionType", "weight fails clause " + v.violated);
    int m = max_abs_twice(w);
    switch (w.algebra) {
        case Algebra::GL: {
            int d = level_int(w);
            FrobeniusData f = positive_datum([&](int t) { return w.xi(HalfIndex::from_twice(t)); }, m, d);
            int t = 0;
            for (auto& [j, x] : w.coeffs)
                if (j.twice <= 0) t = std::max(t, j.is_half() ? (-j.twice + 1) / 2 : -j.twice / 2 + 1);
            for (int k = 0; k < t; ++k) {
                // neg_half[k] at s+1/2+k, neg_int[k] at s+1+k with s = -t
                f.neg_half.push_back(w.xi(HalfIndex::from_twice(2 * (-t + k) + 1)));
                f.neg_int.push_back(w.xi(HalfIndex::from_twice(2 * (-t + k + 1))));
            }
            return from_frobenius(f);
        }
        case Algebra::A: {
            int d = level_int(w);
            auto fp = positive_datum([&](int t) { return w.xi(HalfIndex::from_twice(t)); }, m, d);
            auto fm = positive_datum([&](int t) { return -w.xi(HalfIndex::from_twice(-t)); }, m, d);
            auto plus = from_frobenius(fp);
            auto mu = from_frobenius(fm);
            std::vector<int> parts(d);
            for (int i = 0; i < d; ++i) parts[i] = plus[i] - mu[d - 1 - i];
            return GeneralizedPartition(parts);
        }
        case Algebra::C:
        case Algebra::D: {
            Rational len = w.algebra == Algebra::C ? w.level : w.level * 2;
            int n = static_cast<int>(numerator(len));
            auto f = positive_datum([&](int t) { return w.xi(HalfIndex::from_twice(t)); }, m, n);
            auto g = from_frobenius(f);
            Partition p(g.parts());
            if (w.algebra == Algebra::D && p.column(1) + p.column(2) > n)
                fail("NotPartitionType", "lambda'_1 + lambda'_2 > n");
            return p;
        }
        case Algebra::GLOne: break;
    }
    fail("Unsupported", "no partition labelling for glone");
}

QuasiFinite is_quasifinite(const Weight& w) {
    QuasiFinite q;
    q.bound = HalfIndex::from_twice(max_abs_twice(w));
    return q;
}

nlohmann::json Verdict::to_json() const {
    nlohmann::json tr = nlohmann::json::array();
    for (auto& c : trace) tr.push_back({{"clause", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    nlohmann::json j = {{"unitarizable", unitarizable}, {"trace", tr}};
    if (!unitarizable) j["violated"] = violated;
    return j;
}

Verdict is_unitarizable(const Weight& w) {
    Verdict v;
    int m = max_abs_twice(w);
    auto at = [&](int t) { return w.xi(HalfIndex::from_twice(t)); };
    for (auto& [j, x] : w.coeffs)
        if (!index_allowed(w.algebra, j)) {
            add(v, "index set", "index " + j.str() + " outside the index set");
            return v;
        }

    bool integral = denominator(w.level) == 1 && w.level >= 0;
    switch (w.algebra) {
        case Algebra::GL: {
            add(v, "level", integral ? "" : "level must be a non-negative integer");
            add(v, "(i)", positive_chain(at, m));
            // neg side: 0 >= xi_{s+1/2} > ... > xi_{-1/2}, 0 >= xi_{s+1} > ... > xi_0
            int t = 0;
            for (auto& [j, x] : w.coeffs)
                if (j.twice <= 0) t = std::max(t, j.is_half() ? (-j.twice + 1) / 2 : -j.twice / 2 + 1);
            std::string neg;
            for (auto& [j, x] : w.coeffs)
                if (j.twice <= 0 && x > 0) neg = "positive coefficient at " + j.str();
            if (neg.empty() && t > 0) {
                for (int k = 0; k + 1 < t && neg.empty(); ++k) {
                    if (!(at(2 * (-t + k) + 1) > at(2 * (-t + k) + 3)))
                        neg = "half-integer chain not strictly decreasing at " + HalfIndex::from_twice(2 * (-t + k) + 1).str();
                    else if (!(at(2 * (-t + k + 1)) > at(2 * (-t + k + 2))))
                        neg = "integer chain not strictly decreasing at " + HalfIndex::from_twice(2 * (-t + k + 1)).str();
                }
                if (neg.empty() && at(2 * (-t + 1)) == 0) neg = "xi_{s+1} = 0 with s = " + std::to_string(-t);
            }
            add(v, "(ii)", neg);
            long lhs = std::min(at(1), 1) + at(2) - at(0);
            add_bound(v, "(iii)", lhs, w.level);
            break;
        }
        case Algebra::GLOne: {
            add(v, "level", integral ? "" : "level must be a non-negative integer");
            int r = 0, s = 1;
            for (auto& [j, x] : w.coeffs) {
                int i = j.twice / 2;
                if (i > 0) r = std::max(r, i);
                else s = std::min(s, i);
            }
            std::string pos;
            for (int i = 1; i <= r && pos.empty(); ++i) {
                if (at(2 * i) < 0) pos = "negative coefficient at " + std::to_string(i);
                else if (i < r && !(at(2 * i) > at(2 * i + 2))) pos = "chain not strictly decreasing at " + std::to_string(i);
            }
            add(v, "(i)", pos);
            std::string neg;
            if (s <= 0)
                for (int i = s; i <= 0 && neg.empty(); ++i) {
                    if (at(2 * i) > 0) neg = "positive coefficient at " + std::to_string(i);
                    else if (i < 0 && !(at(2 * i) > at(2 * i + 2))) neg = "chain not strictly decreasing at " + std::to_string(i);
                }
            add(v, "(ii)", neg);
            long lhs = at(2) - at(0);
            add_bound(v, "(iii)", lhs, w.level);
            break;
        }
        case Algebra::A: {
            add(v, "level", integral ? "" : "level must be a non-negative integer");
            auto minus = [&](int t) { return -at(-t); };
            add(v, "(i)", positive_chain(at, m));
            add(v, "(ii)", positive_chain(minus, m));
            long lhs = std::min(at(1), 1) + std::min(minus(1), 1) + at(2) + minus(2);
            add_bound(v, "(iii)", lhs, w.level);
            break;
        }
        case Algebra::C: {
            add(v, "level", integral ? "" : "level must be a non-negative integer");
            add(v, "(i)", positive_chain(at, m));
            long lhs = std::min(at(1), 1) + at(2);
            add_bound(v, "(ii)", lhs, w.level);
            break;
        }
        case Algebra::D: {
            Rational twice_k = w.level * 2;
            bool half_integral = denominator(twice_k) == 1 && w.level >= 0;
            add(v, "level", half_integral ? "" : "level must lie in (1/2)Z_+");
            add(v, "(i)", positive_chain(at, m));
            long lhs = at(2) + at(4) + l12(at(1)) + std::min(at(3), 1);
            add_bound(v, "(ii)", lhs, twice_k);
            break;
        }
    }
    return v;
}

}  // namespace superchar
