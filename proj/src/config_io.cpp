#include "toricgb/config_io.hpp"

#include <fstream>
#include <sstream>

namespace toricgb {

using nlohmann::json;

Configuration configuration_from_json(const json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("d") || !j.contains("generators"))
        throw InputError("configuration JSON needs fields alpha, d, generators");
    if (!j["alpha"].is_number_integer() || !j["d"].is_number_integer() || !j["generators"].is_array())
        throw InputError("configuration JSON has wrongly typed fields");
    std::vector<LatticeVector> pts;
    for (const auto& row : j["generators"]) {
        if (!row.is_array()) throw InputError("configuration JSON: generator is not an array");
        LatticeVector v;
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw InputError("configuration JSON: non-integer coordinate");
            v.push_back(x.get<std::int64_t>());
        }
        pts.push_back(std::move(v));
    }
    return validate_configuration(j["alpha"].get<std::int64_t>(), j["d"].get<std::int64_t>(), pts);
}

Configuration load_configuration(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open configuration file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("configuration file " + path.string() + " is not valid JSON: " + e.what());
    }
    return configuration_from_json(j);
}

json configuration_to_json(const Configuration& cfg) {
    json gens = json::array();
    for (const auto& p : cfg.a_points) gens.push_back(p);
    return json{{"alpha", cfg.alpha}, {"d", cfg.d}, {"generators", gens}};
}

json report_to_json(const BoundReport& rep) {
    json j{{"id", rep.id},
           {"alpha", rep.alpha},
           {"d", rep.d},
           {"c", rep.c},
           {"r", rep.r},
           {"deg", rep.deg},
           {"lattice_index", rep.lattice_index},
           {"maxdeg_revlex", rep.maxdeg_revlex},
           {"bounds",
            {{"thm_a1", rep.bound_thm_a1},
             {"thm_a1_deg", rep.bound_thm_a1_deg},
             {"thm_a4", rep.bound_thm_a4},
             {"sturmfels", rep.bound_sturmfels},
             {"prop_a6", rep.bound_prop_a6},
             {"eisenbud_goto", rep.bound_eg}}},
           {"conjecture_holds", rep.conjecture_holds}};
    if (rep.maxdeg_lex) j["maxdeg_lex"] = *rep.maxdeg_lex;
    if (rep.maxdeg_ja) j["maxdeg_ja"] = *rep.maxdeg_ja;
    if (rep.full_face_bound) j["full_face_bound"] = *rep.full_face_bound;
    if (rep.is_normal) j["is_normal"] = *rep.is_normal;
    if (rep.truncation_match) j["truncation_match"] = *rep.truncation_match;
    json warnings = json::array();
    if (rep.warn_gcd) warnings.push_back("a-coordinates share a common factor > 1");
    if (rep.warn_c1) warnings.push_back("single non-corner generator (c = 1)");
    j["warnings"] = warnings;
    return j;
}

std::string report_table(const BoundReport& rep) {
    std::ostringstream os;
    auto row = [&os](const std::string& k, const std::string& v) {
        os << "  " << k;
        for (std::size_t i = k.size(); i < 26; ++i) os << ' ';
        os << v << '\n';
    };
    os << "configuration " << rep.id << '\n';
    row("alpha / d / c", std::to_string(rep.alpha) + " / " + std::to_string(rep.d) + " / " +
                             std::to_string(rep.c));
    row("deg K[S]", std::to_string(rep.deg) + "  (lattice index " + std::to_string(rep.lattice_index) + ")");
    row("r(S)", std::to_string(rep.r));
    row("maxdeg revlex", std::to_string(rep.maxdeg_revlex));
    if (rep.maxdeg_lex) row("maxdeg lex", std::to_string(*rep.maxdeg_lex));
    if (rep.maxdeg_ja) row("maxdeg J_A", std::to_string(*rep.maxdeg_ja));
    row("bound max{r+1,2r-1}", std::to_string(rep.bound_thm_a1));
    row("bound max{c,a,c(a-1)-1}", std::to_string(rep.bound_thm_a4));
    row("bound c*deg", std::to_string(rep.bound_sturmfels));
    if (rep.maxdeg_ja) row("bound J_A", std::to_string(rep.bound_prop_a6));
    row("bound deg-c+1", std::to_string(rep.bound_eg));
    if (rep.full_face_bound) row("full-face bound", std::to_string(*rep.full_face_bound));
    if (rep.is_normal) row("normal", *rep.is_normal ? "yes" : "no");
    if (rep.truncation_match) row("truncation match", *rep.truncation_match ? "yes" : "no");
    row("conjecture holds", rep.conjecture_holds ? "yes" : "no");
    if (rep.warn_gcd) os << "  warning: a-coordinates share a common factor > 1\n";
    if (rep.warn_c1) os << "  warning: single non-corner generator (c = 1)\n";
    return os.str();
}

std::string binomial_to_string(const Binomial& b, const VariableUniverse& u) {
    return mono_to_string(b.lead, u) + " - " + mono_to_string(b.tail, u);
}

json basis_to_json(const GroebnerBasis& g, const VariableUniverse& u) {
    json arr = json::array();
    for (const auto& e : g.elements) {
        arr.push_back(json{{"lead", e.lead.exps}, {"tail", e.tail.exps}, {"text", binomial_to_string(e, u)}});
    }
    return arr;
}

std::string basis_to_string(const GroebnerBasis& g, const VariableUniverse& u) {
    std::ostringstream os;
    for (const auto& e : g.elements) os << "  " << binomial_to_string(e, u) << '\n';
    return os.str();
}

}  // namespace toricgb
