#include "superchar/fock.hpp"
#include "superchar/hwclassify.hpp"
#include "superchar/laurentchars.hpp"
#include "superchar/partitions.hpp"
#include "superchar/superschur.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace superchar;
using nlohmann::json;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    int jobs = 1;
};

int max_deg() {
    const char* v = std::getenv("SUPERCHAR_MAX_DEG");
    if (!v || !*v) return 16;
    try {
        return parse_int(v);
    } catch (const Error&) {
        throw Usage("SUPERCHAR_MAX_DEG must be an integer, got '" + std::string(v) + "'");
    }
}

void check_deg(const std::string& flag, int deg) {
    if (deg < 0) throw Usage(flag + " must be non-negative");
    int cap = max_deg();
    if (deg > cap) throw Usage(flag + " " + std::to_string(deg) + " exceeds SUPERCHAR_MAX_DEG=" + std::to_string(cap));
}

HalfIndex cutoff_flag(const std::string& flag, const std::string& s) {
    HalfIndex h;
    try {
        h = HalfIndex::parse(s);
    } catch (const Error&) {
        throw Usage(flag + " expects a half-integer, got '" + s + "'");
    }
    check_deg(flag, h.twice);
    return h;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    if (g.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string pass_str(bool ok) { return ok ? "PASS" : "FAIL"; }

// frobenius ---------------------------------------------------------------

struct FrobeniusArgs {
    std::string lambda, inverse;
    int length = 0;
};

int run_frobenius(const Globals& g, const FrobeniusArgs& a) {
    if (!a.inverse.empty()) {
        if (a.length <= 0) throw Usage("--inverse needs --length");
        auto f = FrobeniusData::parse(a.inverse, a.length);
        std::string bad = frobenius_violation(f);
        if (!bad.empty()) throw Usage("--inverse datum violates " + bad);
        auto lam = from_frobenius(f);
        emit(g, {{"partition", to_json(lam)}, {"frobenius", to_json(f)}}, lam.str() + "\n");
        return 0;
    }
    if (a.lambda.empty()) throw Usage("frobenius needs a partition or --inverse");
    auto lam = GeneralizedPartition::parse(a.lambda);
    auto f = to_frobenius(lam);
    json j = {{"partition", to_json(lam)}, {"frobenius", to_json(f)}, {"rank", rank(lam)}};
    std::string text = f.str() + "\n";
    if (lam.nonnegative()) {
        auto cols = Partition(lam.parts()).columns();
        j["conjugate"] = cols;
        GeneralizedPartition c(cols.empty() ? std::vector<int>{0} : cols);
        text += "conjugate " + c.str() + "\nrank " + std::to_string(rank(lam)) + "\n";
    } else {
        text += "rank " + std::to_string(rank(lam)) + "\n";
    }
    emit(g, j, text);
    return 0;
}

// classify ----------------------------------------------------------------

struct ClassifyArgs {
    std::string algebra, weight, partition, graded, source = "character";
};

int run_classify(const Globals& g, const ClassifyArgs& a) {
    std::optional<Algebra> alg;
    if (!a.algebra.empty()) {
        try {
            alg = parse_algebra(a.algebra);
        } catch (const Error&) {
            throw Usage("--algebra must be one of gl, glone, A, C, D");
        }
    }
    if (a.weight.empty() == a.partition.empty()) throw Usage("classify needs exactly one of --weight, --partition");
    Weight w;
    if (!a.weight.empty()) {
        w = Weight::parse(a.weight, alg ? &*alg : nullptr);
        if (alg && w.algebra != *alg) throw Usage("--algebra disagrees with the weight prefix");
    } else {
        if (!alg) throw Usage("--partition needs --algebra");
        w = weight_from_partition(*alg, GeneralizedPartition::parse(a.partition));
    }
    auto v = is_unitarizable(w);
    auto q = is_quasifinite(w);
    json j = {{"weight", w.to_json()}, {"verdict", v.to_json()}, {"quasifinite_bound", q.bound.str()}};
    std::string text = w.str() + "\n";
    text += v.unitarizable ? "unitarizable\n" : "not unitarizable: clause " + v.violated + " fails\n";
    for (auto& c : v.trace) text += std::string("  ") + (c.holds ? "ok   " : "FAIL ") + c.name + "  " + c.detail + "\n";
    if (v.unitarizable && w.algebra != Algebra::GLOne) {
        auto lam = partition_from_weight(w);
        j["partition"] = to_json(lam);
        text += "partition " + lam.str() + "\n";
        if (!a.graded.empty()) {
            HalfIndex cut = cutoff_flag("--graded", a.graded);
            if (a.source != "character" && a.source != "fock") throw Usage("--source must be character or fock");
            auto dims = graded_dimension(w, cut, a.source == "fock" ? DimSource::Fock : DimSource::Character);
            std::vector<std::string> ds;
            text += "graded";
            for (std::size_t k = 0; k < dims.size(); ++k) {
                ds.push_back(dims[k].str());
                text += " " + HalfIndex::from_twice(static_cast<int>(k)).str() + ":" + ds.back();
            }
            text += "\n";
            j["graded_dimension"] = ds;
        }
    }
    emit(g, j, text);
    return v.unitarizable ? 0 : 1;
}

// char --------------------------------------------------------------------

struct CharArgs {
    std::string group, lambda;
    int size = 0;
    std::string mu, nu;
};

GroupTag group_flag(const std::string& group, int size) {
    try {
        if (group.find('(') != std::string::npos) return GroupTag::parse(group);
        if (size <= 0) throw Usage("--group " + group + " needs --size");
        if (group == "GL") return {GroupKind::GL, size};
        if (group == "Sp") return {GroupKind::Sp, size};
        if (group == "O") return {GroupKind::O, size};
    } catch (const Error&) {
    }
    throw Usage("--group must be GL, Sp or O (or e.g. Sp(4)), got '" + group + "'");
}

std::vector<std::string> z_names(const GroupTag& G) {
    std::vector<std::string> n;
    for (int i = 1; i <= G.rank(); ++i) n.push_back("z" + std::to_string(i));
    return n;
}

int run_char(const Globals& g, const CharArgs& a) {
    GroupTag G = group_flag(a.group, a.size);
    if (!a.mu.empty() || !a.nu.empty()) {
        if (a.mu.empty() || a.nu.empty()) throw Usage("--mu and --nu go together");
        auto mu = GeneralizedPartition::parse(a.mu), nu = GeneralizedPartition::parse(a.nu);
        auto m = tensor_multiplicity(G, mu, nu);
        json j = json::array();
        std::string text;
        for (auto& [lam, c] : m) {
            j.push_back({{"lambda", to_json(lam)}, {"multiplicity", c}});
            text += lam.str() + " " + std::to_string(c) + "\n";
        }
        emit(g, {{"group", G.str()}, {"tensor", j}}, text);
        return 0;
    }
    if (a.lambda.empty()) throw Usage("char needs --lambda or --mu/--nu");
    auto lam = admissible_label(G, GeneralizedPartition::parse(a.lambda));
    auto c = char_group(G, lam);
    emit(g, {{"group", G.str()}, {"lambda", to_json(lam)}, {"character", c.to_json()}}, c.str(z_names(G)) + "\n");
    return 0;
}

// schur -------------------------------------------------------------------

struct SchurArgs {
    std::string family = "sp", variant = "plain", lambda;
    int n = 0, deg = 4;
};

int run_schur(const Globals& g, const SchurArgs& a) {
    check_deg("--deg", a.deg);
    SchurFamily f;
    if (a.family == "sp") f = SchurFamily::Sp;
    else if (a.family == "so") f = SchurFamily::So;
    else throw Usage("--family must be sp or so");
    Variant v;
    if (a.variant == "plain") v = Variant::Plain;
    else if (a.variant == "skew") v = Variant::Skew;
    else if (a.variant == "hook") v = Variant::Hook;
    else throw Usage("--variant must be plain, skew or hook");
    if (a.lambda.empty()) throw Usage("schur needs --lambda");
    Partition lam = Partition::parse(a.lambda);
    int k = f == SchurFamily::Sp ? lam.length() : (a.n > 0 ? a.n : lam.length());
    if (f == SchurFamily::So && a.n > 0 && a.n != lam.length()) throw Usage("--n must equal the length of --lambda");
    auto s = schur_function(f, v, lam, k, a.deg);
    emit(g, {{"family", a.family}, {"variant", a.variant}, {"lambda", to_json(lam)}, {"D", a.deg}, {"value", s.to_json()}},
         s.str() + "\n");
    return 0;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string identity;
    bool all = false, small = false;
    int d = 1, n = 0, m = 0, deg = 4;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
    if (a.all == !a.identity.empty()) throw Usage("verify needs exactly one of --identity, --all");
    std::vector<BatteryItem> items;
    if (a.all) {
        items = identity_battery(a.small);
    } else {
        auto& tags = identity_tags();
        if (std::find(tags.begin(), tags.end(), a.identity) == tags.end())
            throw Usage("--identity '" + a.identity + "' is unknown");
        IdentityParams p;
        p.d = a.d, p.n = a.n, p.m = a.m, p.D = a.deg;
        items.push_back({a.identity, p});
    }
    for (auto& it : items) {
        check_deg("--deg", it.params.D);
        it.params.jobs = g.jobs;
    }
    std::vector<IdentityReport> reports(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) reports[i] = verify_identity(items[i].tag, items[i].params);
    bool ok = true;
    json j = json::array();
    std::string text;
    for (auto& r : reports) {
        ok = ok && r.pass;
        j.push_back(r.to_json());
        if (!a.all) {
            text += pass_str(r.pass) + "\n";
        } else {
            auto& p = r.params;
            text += pass_str(r.pass) + "  " + r.identity + " d=" + std::to_string(p.d) + " n=" + std::to_string(p.n) +
                    " m=" + std::to_string(p.m) + " D=" + std::to_string(p.D) + "\n";
        }
        if (!r.pass && r.first_mismatch)
            text += "  first mismatch at " + r.first_mismatch->monomial + ": " + r.first_mismatch->lhs + " vs " +
                    r.first_mismatch->rhs + "\n";
    }
    emit(g, a.all ? json{{"reports", j}, {"status", ok ? "pass" : "fail"}} : j[0], text);
    return ok ? 0 : 1;
}

// fock --------------------------------------------------------------------

struct FockArgs {
    std::string space = "1", algebra, action = "decompose", cutoff = "1", energy = "1/2", conjugation = "paper", lambda,
                vector;
};

Setting fock_setting(const FockArgs& a) {
    std::string sp = trim(a.space);
    bool half = false;
    auto plus = sp.find('+');
    if (plus != std::string::npos) {
        if (trim(sp.substr(plus + 1)) != "1/2") throw Usage("--space must be d or d+1/2");
        half = true;
        sp = sp.substr(0, plus);
    }
    int d;
    try {
        d = parse_int(trim(sp));
    } catch (const Error&) {
        throw Usage("--space must be d or d+1/2, got '" + a.space + "'");
    }
    if (d < 0 || (d == 0 && !half)) throw Usage("--space needs d >= 1 (or d >= 0 with +1/2)");
    if (d + (half ? 1 : 0) > 4) throw Usage("--space is capped at d = 4");
    Algebra alg = half ? Algebra::D : Algebra::C;
    if (!a.algebra.empty()) {
        try {
            alg = parse_algebra(a.algebra);
        } catch (const Error&) {
            throw Usage("--algebra must be one of gl, A, C, D");
        }
    }
    if (half && alg != Algebra::D) throw Usage("--space d+1/2 carries only the D algebra");
    if (alg == Algebra::GLOne) throw Usage("--algebra glone has no Fock setting");
    return Setting::make(alg, alg == Algebra::D ? 2 * d + (half ? 1 : 0) : d);
}

json matrix_json(const std::vector<std::vector<Rational>>& m) {
    json j = json::array();
    for (auto& row : m) {
        json r = json::array();
        for (auto& x : row) r.push_back(rational_str(x));
        j.push_back(r);
    }
    return j;
}

int run_fock(const Globals& g, const FockArgs& a) {
    Setting s = fock_setting(a);
    json j = {{"setting", s.str()}, {"action", a.action}};
    std::string text = s.str() + "\n";
    bool ok = true;
    if (a.action == "gram") {
        HalfIndex e = cutoff_flag("--energy", a.energy);
        Conjugation c;
        if (a.conjugation == "paper") c = Conjugation::Paper;
        else if (a.conjugation == "naive") c = Conjugation::Naive;
        else throw Usage("--conjugation must be paper or naive");
        auto basis = basis_at_energy(s.space, e);
        auto m = gram_matrix(s.space, e, c);
        auto minors = leading_minors(m);
        bool pd = minors.size() == m.size();
        for (auto& x : minors) pd = pd && x > 0;
        json b = json::array();
        for (auto& mono : basis) b.push_back(FockVector::of(mono).str());
        std::vector<std::string> ms;
        for (auto& x : minors) ms.push_back(rational_str(x));
        j.update({{"basis", b}, {"gram", matrix_json(m)}, {"leading_minors", ms}, {"positive_definite", pd}});
        for (std::size_t i = 0; i < basis.size(); ++i) {
            text += "  " + FockVector::of(basis[i]).str() + "  [";
            for (std::size_t k = 0; k < m[i].size(); ++k) text += (k ? " " : "") + rational_str(m[i][k]);
            text += "]\n";
        }
        text += std::string("positive definite: ") + (pd ? "yes" : "no") + "\n";
    } else if (a.action == "character") {
        HalfIndex cut = cutoff_flag("--cutoff", a.cutoff);
        auto L = char_layout(s, cut);
        auto f = fock_character(s, cut), p = product_character(s, cut);
        ok = f == p;
        j.update({{"variables", L.names()}, {"character", f.to_json()}, {"matches_product", ok}});
        text += f.str(L.names()) + "\nproduct formula: " + pass_str(ok) + "\n";
    } else if (a.action == "decompose") {
        HalfIndex cut = cutoff_flag("--cutoff", a.cutoff);
        auto r = duality_decompose(s, cut);
        auto names = r.layout.names();
        bool check = s.algebra == Algebra::C || s.algebra == Algebra::D;
        std::vector<std::pair<GeneralizedPartition, const LaurentPoly*>> parts;
        for (auto& [lam, c] : r.decomposition.parts) parts.push_back({lam, &c});
        std::vector<int> match(parts.size(), 1);
        std::vector<std::string> weights(parts.size());
        parallel_for(static_cast<int>(parts.size()), g.jobs, [&](int i) {
            if (check) match[i] = expected_branching(r, parts[i].first) == *parts[i].second;
            weights[i] = branching_weight(r, *parts[i].second).str();
        });
        json out = json::array();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            ok = ok && match[i];
            json e = {{"lambda", to_json(parts[i].first)}, {"coefficient", parts[i].second->to_json()}, {"weight", weights[i]}};
            if (check) e["matches_hook_function"] = static_cast<bool>(match[i]);
            out.push_back(e);
            text += "  " + parts[i].first.str() + "  " + parts[i].second->str(names) + "\n    weight " + weights[i];
            if (check) text += "  hook function " + pass_str(match[i]);
            text += "\n";
        }
        ok = ok && r.multiplicity_free;
        j.update({{"variables", names}, {"bar_merged", r.decomposition.bar_merged}, {"multiplicity_free", r.multiplicity_free},
                  {"components", out}});
        text += std::string("multiplicity free: ") + (r.multiplicity_free ? "yes" : "no") + "\n";
    } else if (a.action == "hwv") {
        std::vector<std::pair<std::string, FockVector>> vs;
        std::vector<int> expected_gw;
        if (!a.vector.empty()) {
            vs.push_back({"given", FockVector::parse(a.vector)});
        } else {
            if (a.lambda.empty()) throw Usage("--action hwv needs --lambda or --vector");
            auto lam = GeneralizedPartition::parse(a.lambda);
            for (auto& c : hwv_candidates(s, lam)) vs.push_back({c.reading, c.vector});
            auto w = weight_from_partition(s.algebra, lam);
            j["expected_weight"] = w.str();
            text += "expected weight " + w.str() + "\n";
        }
        json out = json::array();
        for (auto& [reading, v] : vs) {
            auto sing = singularity_check(s, v);
            auto w = extract_weight(s, v);
            auto gw = extract_group_weight(s, v);
            ok = ok && sing.singular;
            json e = {{"reading", reading}, {"vector", v.to_json()}, {"singular", sing.singular}, {"checked", sing.checked}};
            if (!sing.singular) e["witness"] = sing.witness;
            if (w) e["weight"] = w->str();
            if (gw) e["group_weight"] = *gw;
            out.push_back(e);
            text += reading + ": " + v.str() + "\n  singular " + (sing.singular ? "yes" : "no, " + sing.witness) + "\n";
            if (w) text += "  weight " + w->str() + "\n";
            if (gw) {
                text += "  group weight";
                for (int x : *gw) text += " " + std::to_string(x);
                text += "\n";
            }
        }
        j["vectors"] = out;
    } else {
        throw Usage("--action must be decompose, gram, character or hwv");
    }
    emit(g, j, text);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superchar: exact Frobenius, Schur, unitarity and Fock-space computations"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

    FrobeniusArgs fa;
    auto* fr = app.add_subcommand("frobenius", "shifted Frobenius coordinates of a generalized partition");
    fr->add_option("lambda", fa.lambda, "e.g. \"[4,3,1,0,0]\"");
    fr->add_option("--inverse", fa.inverse, "quartet \"(..|..|..|..)\" or \"(..|..)\" to invert");
    fr->add_option("--length", fa.length, "partition length for --inverse");

    ClassifyArgs ca;
    auto* cl = app.add_subcommand("classify", "unitarizability verdict with clause trace");
    cl->add_option("--algebra", ca.algebra, "gl|glone|A|C|D");
    cl->add_option("--weight", ca.weight, "e.g. \"1/2:2,1:1; level=2\"");
    cl->add_option("--partition", ca.partition, "classify the weight of a partition");
    cl->add_option("--graded", ca.graded, "print graded dimensions up to this energy");
    cl->add_option("--source", ca.source, "character|fock");

    CharArgs ha;
    auto* ch = app.add_subcommand("char", "classical group characters and tensor multiplicities");
    ch->add_option("--group", ha.group, "GL|Sp|O, or GL(2), Sp(4), O(3)")->required();
    ch->add_option("--size", ha.size, "d for GL(d), Sp(2d); n for O(n)");
    ch->add_option("--lambda", ha.lambda, "highest weight label");
    ch->add_option("--mu", ha.mu, "tensor product: first label");
    ch->add_option("--nu", ha.nu, "tensor product: second label");

    SchurArgs sa;
    auto* sc = app.add_subcommand("schur", "symplectic and orthogonal Schur functions");
    sc->add_option("--family", sa.family, "sp|so");
    sc->add_option("--variant", sa.variant, "plain|skew|hook");
    sc->add_option("--lambda", sa.lambda, "partition of length d (sp) or n (so)");
    sc->add_option("--n", sa.n, "O(n) for so (defaults to the length of lambda)");
    sc->add_option("--deg", sa.deg, "truncation degree");

    VerifyArgs va;
    auto* ve = app.add_subcommand("verify", "check Cauchy and tensor identities coefficient by coefficient");
    ve->add_option("--identity", va.identity, "identity tag");
    ve->add_flag("--all", va.all, "run the whole battery");
    ve->add_flag("--small", va.small, "smaller truncation for --all");
    ve->add_option("--d", va.d, "Sp(2d)");
    ve->add_option("--n", va.n, "O(n)");
    ve->add_option("--m", va.m, "variables for the finite identities");
    ve->add_option("--deg", va.deg, "truncation degree");

    FockArgs ka;
    auto* fo = app.add_subcommand("fock", "free-field Fock space computations");
    fo->add_option("--space", ka.space, "d or d+1/2");
    fo->add_option("--algebra", ka.algebra, "gl|A|C|D (default C, or D on d+1/2)");
    fo->add_option("--action", ka.action, "decompose|gram|character|hwv");
    fo->add_option("--cutoff", ka.cutoff, "energy cutoff for decompose and character");
    fo->add_option("--energy", ka.energy, "energy for gram");
    fo->add_option("--conjugation", ka.conjugation, "paper|naive");
    fo->add_option("--lambda", ka.lambda, "label for hwv");
    fo->add_option("--vector", ka.vector, "state literal for hwv, e.g. \"g+[1,-1/2] |0>\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        if (*fr) return run_frobenius(g, fa);
        if (*cl) return run_classify(g, ca);
        if (*ch) return run_char(g, ha);
        if (*sc) return run_schur(g, sa);
        if (*ve) return run_verify(g, va);
        if (*fo) return run_fock(g, ka);
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
