#ifndef TORICGB_VERSION_HPP
#define TORICGB_VERSION_HPP

#include <string>

#define TORICGB_VERSION "0.1.0"

namespace toricgb {

// ISO-8601 UTC, for run manifests only; record bodies stay timestamp-free
std::string current_timestamp();

}  // namespace toricgb

#endif
