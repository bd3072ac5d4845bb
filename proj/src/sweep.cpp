#include "toricgb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "toricgb/checked.hpp"
#include "toricgb/config_io.hpp"
#include "toricgb/version.hpp"

namespace toricgb {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("cannot parse integer '" + s + "' in " + what);
    }
}

}  // namespace

Predicate parse_predicate(const std::string& text) {
    Predicate p;
    std::string name = text, args;
    if (auto eq = text.find('='); eq != std::string::npos) {
        name = text.substr(0, eq);
        args = text.substr(eq + 1);
    }
    if (name == "none" || name.empty()) {
        p.kind = Predicate::Kind::None;
    } else if (name == "edge-one-each") {
        p.kind = Predicate::Kind::EdgeOneEach;
    } else if (name == "facet-min") {
        p.kind = Predicate::Kind::FacetMin;
        p.min_per_facet = parse_int(args, "facet-min");
    } else if (name == "must-delete") {
        p.kind = Predicate::Kind::MustDelete;
        for (const auto& part : split(args, ',')) p.must.push_back(parse_int(part, "must-delete"));
    } else if (name == "edge-full") {
        p.kind = Predicate::Kind::EdgeFull;
        auto parts = split(args, ',');
        if (parts.size() != 2) throw InputError("edge-full needs two coordinate indices, e.g. edge-full=1,2");
        p.edge_a = parse_int(parts[0], "edge-full");
        p.edge_b = parse_int(parts[1], "edge-full");
    } else {
        throw InputError("unknown predicate '" + name + "'");
    }
    return p;
}

namespace {

// a point lies on the open edge {i,j} when its support is inside {i,j}
bool on_edge(const LatticeVector& p, std::int64_t i, std::int64_t j) {
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (static_cast<std::int64_t>(k) == i - 1 || static_cast<std::int64_t>(k) == j - 1) continue;
        if (p[k] != 0) return false;
    }
    return true;
}

}  // namespace

bool predicate_holds(const Predicate& p, std::int64_t alpha, std::int64_t d,
                     const std::vector<LatticeVector>& deleted) {
    (void)alpha;
    switch (p.kind) {
        case Predicate::Kind::None:
            return true;
        case Predicate::Kind::EdgeOneEach: {
            for (std::int64_t i = 1; i <= d; ++i)
                for (std::int64_t j = i + 1; j <= d; ++j) {
                    int cnt = 0;
                    for (const auto& q : deleted)
                        if (on_edge(q, i, j)) ++cnt;
                    if (cnt != 1) return false;
                }
            return true;
        }
        case Predicate::Kind::FacetMin: {
            for (std::int64_t f = 0; f < d; ++f) {
                std::int64_t cnt = 0;
                for (const auto& q : deleted)
                    if (q[static_cast<std::size_t>(f)] == 0) ++cnt;
                if (cnt < p.min_per_facet) return false;
            }
            return true;
        }
        case Predicate::Kind::MustDelete:
            return std::find(deleted.begin(), deleted.end(), p.must) != deleted.end();
        case Predicate::Kind::EdgeFull: {
            for (const auto& q : deleted)
                if (on_edge(q, p.edge_a, p.edge_b)) return false;
            return true;
        }
    }
    return true;
}

namespace {

struct ParsedCheck {
    enum class Kind { Named, Compare } kind = Kind::Named;
    std::string name;  // named
    std::string field, op;
    std::int64_t value = 0;
};

std::string strip_spaces(const std::string& s) {
    std::string r;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) r.push_back(ch);
    return r;
}

ParsedCheck parse_check(const std::string& expr) {
    static const std::vector<std::string> named = {"conjecture", "thmA1",     "thmA4",  "propA6",
                                                   "lemmaA2",    "sturmfels", "normal", "not-normal"};
    std::string s = strip_spaces(expr);
    ParsedCheck pc;
    if (std::find(named.begin(), named.end(), s) != named.end()) {
        pc.kind = ParsedCheck::Kind::Named;
        pc.name = s;
        return pc;
    }
    for (const std::string op : {"<=", ">=", "==", "!=", "<", ">"}) {
        auto pos = s.find(op);
        if (pos == std::string::npos) continue;
        pc.kind = ParsedCheck::Kind::Compare;
        pc.field = s.substr(0, pos);
        pc.op = op;
        pc.value = parse_int(s.substr(pos + op.size()), "check '" + expr + "'");
        return pc;
    }
    throw InputError("cannot parse check '" + expr + "'");
}

std::int64_t report_field(const std::string& field, const BoundReport& rep) {
    if (field == "r") return rep.r;
    if (field == "deg") return rep.deg;
    if (field == "c") return rep.c;
    if (field == "alpha") return rep.alpha;
    if (field == "d") return rep.d;
    if (field == "maxdeg" || field == "maxdeg_revlex") return rep.maxdeg_revlex;
    if (field == "maxdeg_lex") {
        if (!rep.maxdeg_lex) throw InputError("check uses maxdeg_lex but the lex basis was not computed");
        return *rep.maxdeg_lex;
    }
    if (field == "maxdeg_ja") {
        if (!rep.maxdeg_ja) throw InputError("check uses maxdeg_ja but it was not computed");
        return *rep.maxdeg_ja;
    }
    throw InputError("unknown report field '" + field + "' in check");
}

}  // namespace

bool check_needs_ja(const std::string& expr) {
    std::string s = strip_spaces(expr);
    return s == "propA6" || s.find("maxdeg_ja") == 0;
}

bool check_needs_normality(const std::string& expr) {
    std::string s = strip_spaces(expr);
    return s == "normal" || s == "not-normal";
}

bool evaluate_check(const std::string& expr, const BoundReport& rep) {
    ParsedCheck pc = parse_check(expr);
    if (pc.kind == ParsedCheck::Kind::Named) {
        if (pc.name == "conjecture") return rep.conjecture_holds;
        if (pc.name == "thmA1") return rep.maxdeg_revlex <= rep.bound_thm_a1;
        if (pc.name == "thmA4") return rep.maxdeg_revlex <= rep.bound_thm_a4;
        if (pc.name == "sturmfels") return rep.maxdeg_revlex <= rep.bound_sturmfels;
        if (pc.name == "lemmaA2") return !rep.full_face_bound || rep.r <= *rep.full_face_bound;
        if (pc.name == "propA6") {
            if (!rep.maxdeg_ja) throw InputError("propA6 check needs the J_A degree (enable ja-maxdeg)");
            return *rep.maxdeg_ja <= rep.bound_prop_a6;
        }
        if (pc.name == "normal" || pc.name == "not-normal") {
            if (!rep.is_normal) throw InputError("normality check needs the normality computation");
            return pc.name == "normal" ? *rep.is_normal : !*rep.is_normal;
        }
    }
    std::int64_t lhs = report_field(pc.field, rep);
    if (pc.op == "<=") return lhs <= pc.value;
    if (pc.op == ">=") return lhs >= pc.value;
    if (pc.op == "==") return lhs == pc.value;
    if (pc.op == "!=") return lhs != pc.value;
    if (pc.op == "<") return lhs < pc.value;
    return lhs > pc.value;
}

std::vector<LatticeVector> canonical_point_list(std::int64_t d, const std::vector<LatticeVector>& pts) {
    std::vector<std::size_t> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<LatticeVector> best;
    bool first = true;
    do {
        std::vector<LatticeVector> mapped;
        mapped.reserve(pts.size());
        for (const auto& p : pts) {
            LatticeVector q(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[perm[i]];
            mapped.push_back(std::move(q));
        }
        std::sort(mapped.begin(), mapped.end(), [](const LatticeVector& a, const LatticeVector& b) { return b < a; });
        if (first || mapped < best) {
            best = std::move(mapped);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string incidence_signature(std::int64_t d, const std::vector<LatticeVector>& deleted) {
    std::vector<std::size_t> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::int64_t>> best;
    bool first = true;
    do {
        std::vector<std::vector<std::int64_t>> sets;
        for (const auto& p : deleted) {
            std::vector<std::int64_t> zs;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (p[perm[i]] == 0) zs.push_back(static_cast<std::int64_t>(i) + 1);
            sets.push_back(std::move(zs));
        }
        std::sort(sets.begin(), sets.end());
        if (first || sets < best) {
            best = std::move(sets);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::ostringstream os;
    for (const auto& zs : best) {
        os << '{';
        for (std::size_t i = 0; i < zs.size(); ++i) {
            if (i) os << ',';
            os << zs[i];
        }
        os << '}';
    }
    return os.str();
}

int sweep_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TORICGB_THREADS")) {
        int v = static_cast<int>(parse_int(env, "TORICGB_THREADS"));
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace {

std::int64_t sweep_cap(std::int64_t spec_cap) {
    if (const char* env = std::getenv("TORICGB_CAP")) return parse_int(env, "TORICGB_CAP");
    return spec_cap;
}

struct ClassInfo {
    std::vector<LatticeVector> canonical_a;
    std::vector<LatticeVector> first_deleted;               // representative deletion set
    std::vector<std::vector<LatticeVector>> extra_deleted;  // up to 3, for member spot checks
    std::size_t size = 0;
};

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.alpha < 2 || spec.d < 1 || spec.k < 0) throw InputError("sweep: need alpha >= 2, d >= 1, k >= 0");
    auto all_points = enumerate_simplex_points(spec.alpha, spec.d);
    std::vector<LatticeVector> deletable;
    for (const auto& p : all_points) {
        bool vertex = std::find(p.begin(), p.end(), spec.alpha) != p.end();
        if (!vertex) deletable.push_back(p);
    }
    std::int64_t n = static_cast<std::int64_t>(deletable.size());
    if (spec.k >= n) throw InputError("sweep: k must leave at least one non-corner generator");

    std::int64_t raw = binomial_coefficient(n, spec.k);
    std::int64_t cap = sweep_cap(spec.cap);
    if (raw > cap)
        throw InputError("sweep: " + std::to_string(raw) + " raw configurations exceed the cap " +
                         std::to_string(cap) + "; narrow the sweep or raise TORICGB_CAP");

    // enumerate deletion sets, group by canonical configuration
    std::map<std::vector<LatticeVector>, ClassInfo> classes;
    std::size_t raw_count = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(spec.k));
    std::iota(idx.begin(), idx.end(), 0);
    auto advance = [&]() -> bool {
        if (spec.k == 0) return false;
        std::size_t i = idx.size();
        while (i-- > 0) {
            if (idx[i] + (idx.size() - i) < static_cast<std::size_t>(n)) {
                ++idx[i];
                for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    bool more = true;
    while (more) {
        std::vector<LatticeVector> deleted;
        deleted.reserve(idx.size());
        for (auto i : idx) deleted.push_back(deletable[i]);
        if (predicate_holds(spec.predicate, spec.alpha, spec.d, deleted)) {
            ++raw_count;
            std::vector<LatticeVector> a;
            for (const auto& p : deletable)
                if (std::find(deleted.begin(), deleted.end(), p) == deleted.end()) a.push_back(p);
            auto key = spec.symmetry ? canonical_point_list(spec.d, a) : a;
            auto [it, inserted] = classes.try_emplace(key);
            ClassInfo& ci = it->second;
            if (inserted) {
                ci.canonical_a = key;
                ci.first_deleted = deleted;
            } else if (ci.extra_deleted.size() < 3) {
                ci.extra_deleted.push_back(deleted);
            }
            ++ci.size;
        }
        more = advance();
    }

    SweepResult result;
    result.raw_count = raw_count;
    std::vector<const ClassInfo*> order;
    order.reserve(classes.size());
    for (const auto& [key, ci] : classes) order.push_back(&ci);

    result.records.resize(order.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    int nthreads = std::max(1, std::min<int>(sweep_thread_count(spec.threads), static_cast<int>(order.size())));

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= order.size()) return;
            const ClassInfo& ci = *order[i];
            try {
                auto t0 = std::chrono::steady_clock::now();
                Configuration cfg = validate_configuration(spec.alpha, spec.d, ci.canonical_a);
                ResultRecord rec;
                rec.canonical_a = ci.canonical_a;
                rec.deleted = ci.first_deleted;
                if (spec.symmetry) {
                    // report the representative deletion pattern canonically
                    std::vector<LatticeVector> canon_deleted;
                    for (const auto& p : deletable)
                        if (std::find(ci.canonical_a.begin(), ci.canonical_a.end(), p) == ci.canonical_a.end())
                            canon_deleted.push_back(p);
                    rec.deleted = canon_deleted;
                }
                rec.incidence_signature = incidence_signature(spec.d, rec.deleted);
                rec.class_size = ci.size;
                rec.report = bound_report(cfg, spec.options);
                for (const auto& expr : spec.checks)
                    rec.checks.push_back({expr, evaluate_check(expr, rec.report)});

                if (spec.verify_members) {
                    for (const auto& del : ci.extra_deleted) {
                        std::vector<LatticeVector> a;
                        for (const auto& p : deletable)
                            if (std::find(del.begin(), del.end(), p) == del.end()) a.push_back(p);
                        Configuration mcfg = validate_configuration(spec.alpha, spec.d, a);
                        BoundReport mrep = bound_report(mcfg, spec.options);
                        if (mrep.r != rec.report.r || mrep.deg != rec.report.deg || mrep.c != rec.report.c ||
                            mrep.maxdeg_revlex != rec.report.maxdeg_revlex)
                            throw InvariantError("symmetry class member disagrees with representative for " +
                                                 cfg.id());
                    }
                }
                rec.elapsed_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                result.records[i] = std::move(rec);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    std::vector<std::string> signatures;
    for (const auto& rec : result.records) {
        signatures.push_back(rec.incidence_signature);
        for (const auto& c : rec.checks) result.all_passed = result.all_passed && c.pass;
    }
    std::sort(signatures.begin(), signatures.end());
    signatures.erase(std::unique(signatures.begin(), signatures.end()), signatures.end());
    result.situation_count = signatures.size();
    return result;
}

void write_sweep_jsonl(const SweepSpec& spec, const SweepResult& result, std::ostream& out) {
    json manifest{{"manifest",
                   {{"tool", "toricgb"},
                    {"version", TORICGB_VERSION},
                    {"alpha", spec.alpha},
                    {"d", spec.d},
                    {"k", spec.k},
                    {"symmetry", spec.symmetry},
                    {"checks", spec.checks},
                    {"raw_count", result.raw_count},
                    {"classes", result.records.size()},
                    {"situations", result.situation_count},
                    {"started", current_timestamp()}}}};
    out << manifest.dump() << '\n';
    for (const auto& rec : result.records) {
        json deleted = json::array();
        for (const auto& p : rec.deleted) deleted.push_back(p);
        json checks = json::array();
        for (const auto& c : rec.checks) checks.push_back({{"expr", c.expr}, {"pass", c.pass}});
        json gens = json::array();
        for (const auto& p : rec.canonical_a) gens.push_back(p);
        json j{{"config", {{"alpha", rec.report.alpha}, {"d", rec.report.d}, {"generators", gens}}},
               {"deleted", deleted},
               {"incidence", rec.incidence_signature},
               {"class_size", rec.class_size},
               {"report", report_to_json(rec.report)},
               {"checks", checks}};
        out << j.dump() << '\n';
    }
}

}  // namespace toricgb
