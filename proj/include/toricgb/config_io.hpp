#ifndef TORICGB_CONFIG_IO_HPP
#define TORICGB_CONFIG_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "toricgb/pipeline.hpp"

namespace toricgb {

// Configuration JSON: {"alpha": int, "d": int, "generators": [[int,...],...]}
// Corner generators may be included or omitted; the loader normalizes.
Configuration configuration_from_json(const nlohmann::json& j);
Configuration load_configuration(const std::filesystem::path& path);
nlohmann::json configuration_to_json(const Configuration& cfg);

nlohmann::json report_to_json(const BoundReport& rep);
std::string report_table(const BoundReport& rep);

std::string binomial_to_string(const Binomial& b, const VariableUniverse& u);
nlohmann::json basis_to_json(const GroebnerBasis& g, const VariableUniverse& u);
std::string basis_to_string(const GroebnerBasis& g, const VariableUniverse& u);

}  // namespace toricgb

#endif
