#include "superchar/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace superchar {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& body) {
    std::vector<int> out;
    std::string t = trim(body);
    if (t.empty()) return out;
    for (const auto& tok : split(t, ',')) out.push_back(parse_int(tok));
    return out;
}

bool strictly_decreasing(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] <= v[i]) return false;
    return true;
}

// Rows of a diagram from its Durfee data: first r rows and first r columns.
std::vector<int> rebuild_rows(const std::vector<int>& rows_head, const std::vector<int>& cols_head, int len) {
    int r = static_cast<int>(rows_head.size());
    std::vector<int> rows(len, 0);
    for (int i = 0; i < r && i < len; ++i) rows[i] = rows_head[i];
    for (int i = r; i < len; ++i) {
        int c = 0;
        for (int j = 0; j < r; ++j)
            if (cols_head[j] >= i + 1) ++c;
        rows[i] = c;
    }
    return rows;
}

}  // namespace

GeneralizedPartition::GeneralizedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) fail("InvalidPartition", "declared length must be positive");
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i]) fail("InvalidPartition", "parts must be non-increasing: " + str());
}

bool GeneralizedPartition::nonnegative() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p >= 0; });
}
bool GeneralizedPartition::nonpositive() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 0; });
}
bool GeneralizedPartition::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}
int GeneralizedPartition::size() const {
    int s = 0;
    for (int p : parts_) s += p < 0 ? -p : p;
    return s;
}

std::string GeneralizedPartition::str() const { return "[" + join_ints(parts_) + "]"; }

GeneralizedPartition GeneralizedPartition::parse(const std::string& raw) {
    std::string s = trim(raw);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail("ParseError", "partition literal must be [..]: " + s);
    return GeneralizedPartition(parse_int_list(s.substr(1, s.size() - 2)));
}

Partition::Partition(std::vector<int> parts) : GeneralizedPartition(std::move(parts)) {
    if (!nonnegative()) fail("InvalidPartition", "negative part in partition " + str());
}

Partition Partition::parse(const std::string& s) { return Partition(GeneralizedPartition::parse(s).parts()); }

std::vector<int> Partition::columns() const {
    std::vector<int> c;
    int top = parts_.empty() ? 0 : parts_[0];
    for (int j = 1; j <= top; ++j) c.push_back(column(j));
    return c;
}

int Partition::column(int j) const {
    int c = 0;
    for (int p : parts_)
        if (p >= j) ++c;
    return c;
}

int Partition::depth() const { return column(1); }

Partition transpose(const Partition& lambda) {
    auto c = lambda.columns();
    if (c.empty()) c.push_back(0);
    return Partition(c);
}

Partition star(const GeneralizedPartition& lambda) {
    if (!lambda.nonpositive()) fail("MixedSign", "star requires a non-positive generalized partition");
    std::vector<int> p(lambda.parts().rbegin(), lambda.parts().rend());
    for (int& x : p) x = -x;
    return Partition(p);
}

int rank(const GeneralizedPartition& lambda) {
    if (lambda.nonnegative()) {
        int r = 0;
        for (int i = 1; i <= lambda.length(); ++i)
            if (lambda.part(i) >= i) r = i;
        return r;
    }
    if (lambda.nonpositive()) return -rank(star(lambda));
    fail("MixedSign", "rank of a mixed-sign generalized partition; split it first");
}

SignSplit split_signs(const GeneralizedPartition& lambda) {
    std::vector<int> p, m;
    for (int x : lambda.parts()) {
        p.push_back(std::max(x, 0));
        m.push_back(std::min(x, 0));
    }
    return {Partition(p), GeneralizedPartition(m)};
}

int FrobeniusData::xi(HalfIndex j) const {
    int t = j.twice;
    if (t > 0) {
        if (t % 2) {
            size_t k = (t - 1) / 2;
            return k < pos_half.size() ? pos_half[k] : 0;
        }
        size_t k = t / 2 - 1;
        return k < pos_int.size() ? pos_int[k] : 0;
    }
    // t <= 0: neg_half[k] sits at s+1/2+k, neg_int[k] at s+1+k.
    int n = static_cast<int>(neg_half.size());
    if (t % 2) {
        int k = (t - 1) / 2 + n;  // index (t/2) = s + 1/2 + k
        return k >= 0 && k < n ? neg_half[k] : 0;
    }
    int k = t / 2 + n - 1;
    return k >= 0 && k < n ? neg_int[k] : 0;
}

std::string FrobeniusData::str() const {
    bool neg_empty = neg_half.empty() && neg_int.empty();
    if (neg_empty && pos_half.empty() && pos_int.empty()) return "(0|0)";
    if (neg_empty) return "(" + join_ints(pos_half) + "|" + join_ints(pos_int) + ")";
    return "(" + join_ints(neg_half) + "|" + join_ints(neg_int) + "|" + join_ints(pos_half) + "|" +
           join_ints(pos_int) + ")";
}

FrobeniusData FrobeniusData::parse(const std::string& raw, int length_bound) {
    std::string s = trim(raw);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail("ParseError", "Frobenius literal must be (..): " + s);
    auto fields = split(s.substr(1, s.size() - 2), '|');
    FrobeniusData f;
    f.length_bound = length_bound;
    if (fields.size() == 2) {
        f.pos_half = parse_int_list(fields[0]);
        f.pos_int = parse_int_list(fields[1]);
    } else if (fields.size() == 4) {
        f.neg_half = parse_int_list(fields[0]);
        f.neg_int = parse_int_list(fields[1]);
        f.pos_half = parse_int_list(fields[2]);
        f.pos_int = parse_int_list(fields[3]);
    } else {
        fail("ParseError", "Frobenius literal needs 2 or 4 fields: " + s);
    }
    // (0|0) is an alias of the empty datum.
    if (f.pos_half == std::vector<int>{0} && f.pos_int == std::vector<int>{0}) f.pos_half.clear(), f.pos_int.clear();
    if (f.neg_half == std::vector<int>{0} && f.neg_int == std::vector<int>{0}) f.neg_half.clear(), f.neg_int.clear();
    return f;
}

FrobeniusData to_frobenius(const GeneralizedPartition& lambda) {
    FrobeniusData f;
    f.length_bound = lambda.length();
    auto [plus, minus] = split_signs(lambda);

    int r = rank(plus);
    for (int k = 0; k < r; ++k) {
        f.pos_half.push_back(plus.part(k + 1) - k);
        f.pos_int.push_back(plus.column(k + 1) - (k + 1));
    }

    Partition mu = star(minus);
    int t = rank(mu);
    for (int k = t; k >= 1; --k) {
        f.neg_half.push_back(-(mu.part(k) - k));
        f.neg_int.push_back(-(mu.column(k) - k + 1));
    }
    return f;
}

std::string frobenius_violation(const FrobeniusData& f) {
    const auto& ph = f.pos_half;
    const auto& pi = f.pos_int;
    const auto& nh = f.neg_half;
    const auto& ni = f.neg_int;

    if (ph.size() != pi.size() || !strictly_decreasing(ph) || !strictly_decreasing(pi)) return "xipos";
    if (!ph.empty() && (ph.back() < 0 || pi.back() < 0)) return "xipos";
    if (!ph.empty() && ph.back() == 0) {
        bool alias_zero = ph.size() == 1 && pi[0] == 0;
        if (!alias_zero) return "xigeq";
    }

    if (nh.size() != ni.size() || !strictly_decreasing(nh) || !strictly_decreasing(ni)) return "xineggeq";
    if (!nh.empty() && (nh.front() > 0 || ni.front() > 0)) return "xineggeq";
    if (!ni.empty() && ni.front() == 0) {
        bool alias_zero = ni.size() == 1 && nh[0] == 0;
        if (!alias_zero) return "xineggeq";
    }

    int xi_half = ph.empty() ? 0 : ph[0];
    int xi_one = pi.empty() ? 0 : pi[0];
    int xi_zero = ni.empty() ? 0 : ni.back();
    if (std::min(xi_half, 1) + xi_one - xi_zero > f.length_bound) return "length";
    if (f.length_bound < 1) return "length";
    return {};
}

GeneralizedPartition from_frobenius(const FrobeniusData& f) {
    std::string bad = frobenius_violation(f);
    if (!bad.empty()) fail("ConstraintViolation", bad);
    int d = f.length_bound;

    std::vector<int> plus(d, 0);
    bool pos_zero = f.pos_half.empty() || (f.pos_half.size() == 1 && f.pos_half[0] == 0);
    if (!pos_zero) {
        std::vector<int> rows, cols;
        for (int k = 0; k < f.r(); ++k) {
            rows.push_back(f.pos_half[k] + k);
            cols.push_back(f.pos_int[k] + k + 1);
        }
        plus = rebuild_rows(rows, cols, d);
    }

    std::vector<int> mu(d, 0);
    bool neg_zero = f.neg_half.empty() || (f.neg_half.size() == 1 && f.neg_int[0] == 0);
    if (!neg_zero) {
        int t = -f.s();
        std::vector<int> rows, cols;
        for (int k = 1; k <= t; ++k) {
            rows.push_back(k - f.neg_half[t - k]);
            cols.push_back(k - 1 - f.neg_int[t - k]);
        }
        mu = rebuild_rows(rows, cols, d);
    }

    std::vector<int> parts(d);
    for (int i = 0; i < d; ++i) parts[i] = plus[i] - mu[d - 1 - i];
    return GeneralizedPartition(parts);
}

Partition bar_conjugate(const Partition& lambda, int n) {
    if (lambda.length() != n) fail("PreconditionViolated", "bar_conjugate needs l(lambda) = n");
    int c1 = lambda.column(1), c2 = lambda.column(2);
    if (c1 + c2 > n) fail("PreconditionViolated", "bar_conjugate needs lambda'_1 + lambda'_2 <= n");
    std::vector<int> cols = lambda.columns();
    if (cols.empty()) cols.push_back(0);
    cols[0] = n - c1;
    std::vector<int> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int c : cols)
            if (c >= i + 1) ++rows[i];
    return Partition(rows);
}

std::vector<Partition> partitions_in_box(int len, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        if (static_cast<int>(cur.size()) == len) {
            out.emplace_back(cur);
            return;
        }
        for (int v = cap; v >= 0; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    if (len > 0) rec(max_part);
    return out;
}

std::vector<Partition> partitions_of_size_at_most(int len, int max_size) {
    std::vector<Partition> out;
    for (auto& p : partitions_in_box(len, max_size))
        if (p.size() <= max_size) out.push_back(p);
    return out;
}

std::vector<GeneralizedPartition> generalized_in_box(int len, int max_abs) {
    std::vector<GeneralizedPartition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        if (static_cast<int>(cur.size()) == len) {
            out.emplace_back(cur);
            return;
        }
        for (int v = cap; v >= -max_abs; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    if (len > 0) rec(max_abs);
    return out;
}

std::vector<Partition> orthogonal_partitions(int n, int max_size) {
    std::vector<Partition> out;
    if (n == 0) return out;
    for (auto& p : partitions_of_size_at_most(n, max_size))
        if (p.column(1) + p.column(2) <= n) out.push_back(p);
    return out;
}

nlohmann::json to_json(const GeneralizedPartition& p) {
    return {{"parts", p.parts()}, {"length", p.length()}};
}

nlohmann::json to_json(const FrobeniusData& f) {
    return {{"neg_half", f.neg_half}, {"neg_int", f.neg_int}, {"pos_half", f.pos_half},
            {"pos_int", f.pos_int},   {"length", f.length_bound}, {"literal", f.str()}};
}

}  // namespace superchar
