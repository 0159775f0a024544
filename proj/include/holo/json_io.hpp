#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"

#include "holo/domain.hpp"
#include "holo/homotopy.hpp"
#include "holo/polynomial.hpp"
#include "holo/torus.hpp"
#include "holo/winding.hpp"
#include "holo/word.hpp"

namespace holo::io {

using nlohmann::json;

// Malformed documents raise nlohmann::json::exception or holo::Error.

json to_json(Complex c);
json to_json(PointView z);
json to_json(const Polynomial& p);
json to_json(const GeneratorStep& step);
json to_json(const AutomorphismWord& w);
json to_json(const DomainSpec& d);
json to_json(const ContourSpec& c);
json to_json(const IndexResult& r);
json to_json(const IntMatrix& a);
json to_json(const HomotopyPath& path);
json to_json(const PathReport& r);
json to_json(const CommutationVerdict& v);
json to_json(const PreservationVerdict& v);

Complex complex_from_json(const json& j);
Point point_from_json(const json& j);
Polynomial polynomial_from_json(const json& j, std::size_t n_vars);
GeneratorStep step_from_json(const json& j, std::size_t n);
AutomorphismWord word_from_json(const json& j);
DomainSpec domain_from_json(const json& j);
/// A contour without its own "domain" key lives in `fallback`.
ContourSpec contour_from_json(const json& j, const std::optional<DomainSpec>& fallback);
IntMatrix int_matrix_from_json(const json& j);
HomotopyPath path_from_json(const json& j);

/// Parses "re,im;re,im;..." into a point.
Point parse_point(const std::string& text);

/// Serializes with every floating-point number printed to 17 significant
/// digits; non-finite numbers become null. Negative indent means compact.
std::string dump(const json& j, int indent = -1);

/// Named objects loaded from a scene file. Entries are decoded on access.
class Scene {
 public:
  explicit Scene(json document);
  static Scene load(const std::string& path);

  const std::optional<DomainSpec>& domain() const noexcept { return domain_; }
  AutomorphismWord word(const std::string& name) const;
  ContourSpec contour(const std::string& name) const;
  HomotopyPath path(const std::string& name) const;
  IntMatrix exponent_matrix(const std::string& name) const;

 private:
  const json& entry(const char* section, const std::string& name) const;

  json document_;
  std::optional<DomainSpec> domain_;
};

}  // namespace holo::io
