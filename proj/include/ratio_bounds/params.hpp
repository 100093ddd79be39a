#pragma once

// Family parameters shared by the bounds path and the oracle. Which fields a
// family reads is listed in its descriptor.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "ratio_bounds/errors.hpp"

namespace ratio_bounds {

struct Params {
  std::optional<double> n;
  std::optional<double> alpha;
  std::optional<double> m;
  std::optional<double> nu;

  static Params with_n(double n) { return Params{n, {}, {}, {}}; }
  static Params n_alpha(double n, double alpha) { return Params{n, alpha, {}, {}}; }
  static Params n_m(double n, double m) { return Params{n, {}, m, {}}; }
  static Params nu_alpha(double nu, double alpha) { return Params{{}, alpha, {}, nu}; }

  std::string describe() const {
    std::ostringstream os;
    os.precision(17);
    const char* sep = "";
    auto put = [&](const char* key, const std::optional<double>& v) {
      if (!v) return;
      os << sep << key << "=" << *v;
      sep = ", ";
    };
    put("n", n);
    put("alpha", alpha);
    put("m", m);
    put("nu", nu);
    return os.str();
  }
};

/// Value of a required parameter; DomainError when it is absent or not finite.
inline double require_param(const std::optional<double>& v, const char* key,
                            const std::string& family) {
  if (!v) throw DomainError(family + ": parameter '" + key + "' is required");
  if (!std::isfinite(*v)) throw DomainError(family + ": parameter '" + key + "' is not finite");
  return *v;
}

inline bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

}  // namespace ratio_bounds
