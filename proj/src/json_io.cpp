#include "holo/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "holo/error.hpp"

namespace holo::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::InvalidArgument, what); }

std::size_t index_from_json(const json& j) {
  const auto v = j.get<std::int64_t>();
  if (v < 1) malformed("coordinate indices are 1-based");
  return static_cast<std::size_t>(v);
}

void dump_into(std::string& out, const json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.17g", v);
      out += buffer;
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_into(out, item, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(key).dump();
        out += pretty ? ": " : ":";
        dump_into(out, value, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    default: out += j.dump(); return;
  }
}

}  // namespace

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(PointView z) {
  json out = json::array();
  for (auto c : z) out.push_back(to_json(c));
  return out;
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

json to_json(const GeneratorStep& step) {
  return std::visit(overloaded{
                        [](const Overshear& s) -> json {
                          return {{"type", "overshear"}, {"axis", s.axis}, {"f", to_json(s.f)}, {"g", to_json(s.g)}};
                        },
                        [](const Permutation& s) -> json { return {{"type", "permutation"}, {"perm", s.perm}}; },
                        [](const Diagonal& s) -> json { return {{"type", "diagonal"}, {"lambda", to_json(s.lambda)}}; },
                        [](const Linear& s) -> json {
                          json rows = json::array();
                          for (Eigen::Index r = 0; r < s.matrix.rows(); ++r) {
                            json row = json::array();
                            for (Eigen::Index c = 0; c < s.matrix.cols(); ++c) row.push_back(to_json(s.matrix(r, c)));
                            rows.push_back(std::move(row));
                          }
                          return {{"type", "linear"}, {"matrix", std::move(rows)}};
                        },
                        [](const Inversion& s) -> json { return {{"type", "inversion"}, {"axis", s.axis}}; },
                    },
                    step);
}

json to_json(const AutomorphismWord& w) {
  json steps = json::array();
  for (const auto& s : w.steps()) steps.push_back(to_json(s));
  return {{"n", w.n()}, {"steps", std::move(steps)}};
}

json to_json(const DomainSpec& d) {
  return {{"kind", std::string(to_string(d.kind()))}, {"n", d.n()}, {"deleted", d.deleted()}};
}

json to_json(const ContourSpec& c) {
  return {{"axis", c.axis()}, {"p", to_json(c.base_point())}, {"R", c.radius()}, {"domain", to_json(c.domain())}};
}

json to_json(const IndexResult& r) { return {{"index", r.index}, {"raw", r.raw}, {"samples", r.samples_used}}; }

json to_json(const IntMatrix& a) { return {{"n", a.size()}, {"a", a}}; }

json to_json(const HomotopyPath& path) {
  if (const auto* o = std::get_if<OvershearPath>(&path)) {
    return {{"type", "overshear"}, {"n", o->target.n()}, {"axis", o->target.axis}, {"f", to_json(o->target.f)},
            {"g", to_json(o->target.g)}};
  }
  const auto& p = std::get<TranspositionPath>(path);
  json bump = p.bump.is_sine() ? json("sin") : json{{"table", p.bump.values()}};
  return {{"type", "transposition"}, {"n", p.n}, {"j", p.j}, {"k", p.k}, {"bump", std::move(bump)}};
}

json to_json(const PathReport& r) {
  return {{"endpoint_err0", r.endpoint_err0},
          {"endpoint_err1", r.endpoint_err1},
          {"min_abs_det", r.min_abs_det},
          {"max_inverse_residual", r.max_inverse_residual}};
}

json to_json(const CommutationVerdict& v) {
  json out = {{"commutes", v.commutes}, {"max_deviation", v.max_deviation}, {"witness", nullptr}};
  if (v.witness) {
    out["witness"] = {{"theta", v.witness->theta}, {"z", to_json(v.witness->z)}, {"deviation", v.witness->deviation}};
  }
  return out;
}

json to_json(const PreservationVerdict& v) {
  return {{"preserves", v.preserves}, {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}};
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) malformed("complex numbers are written as [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Point point_from_json(const json& j) {
  if (!j.is_array()) malformed("points are arrays of [re, im] pairs");
  Point z;
  for (const auto& c : j) z.push_back(complex_from_json(c));
  return z;
}

Polynomial polynomial_from_json(const json& j, std::size_t n_vars) {
  if (!j.is_array()) malformed("polynomials are arrays of terms");
  Polynomial p(n_vars);
  for (const auto& term : j) {
    const auto e = term.at("exponents").get<std::vector<std::int64_t>>();
    Exponents exponents;
    for (auto k : e) {
      if (k < 0) malformed("negative exponent");
      exponents.push_back(static_cast<std::uint32_t>(k));
    }
    p.add_term(exponents, {term.at("re").get<double>(), term.value("im", 0.0)});
  }
  return p;
}

GeneratorStep step_from_json(const json& j, std::size_t n) {
  const auto type = j.at("type").get<std::string>();
  if (type == "overshear") {
    const Polynomial zero(n);
    return Overshear(index_from_json(j.at("axis")), j.contains("f") ? polynomial_from_json(j["f"], n) : zero,
                     j.contains("g") ? polynomial_from_json(j["g"], n) : zero);
  }
  if (type == "permutation") {
    std::vector<std::size_t> perm;
    for (const auto& v : j.at("perm")) perm.push_back(index_from_json(v));
    require_dimension(n, perm.size(), "permutation");
    return Permutation(std::move(perm));
  }
  if (type == "diagonal") {
    Point lambda = point_from_json(j.at("lambda"));
    require_dimension(n, lambda.size(), "diagonal");
    return Diagonal(std::move(lambda));
  }
  if (type == "linear") {
    const auto& rows = j.at("matrix");
    require_dimension(n, rows.size(), "linear matrix rows");
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
      require_dimension(n, rows[r].size(), "linear matrix row");
      for (std::size_t c = 0; c < n; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(rows[r][c]);
      }
    }
    return Linear(std::move(m));
  }
  if (type == "inversion") return Inversion(n, index_from_json(j.at("axis")));
  malformed("unknown generator type '" + type + "'");
}

AutomorphismWord word_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  AutomorphismWord w(n);
  for (const auto& s : j.value("steps", json::array())) w.then(step_from_json(s, n));
  return w;
}

DomainSpec domain_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto n = j.at("n").get<std::size_t>();
  if (kind == "full") return DomainSpec::full(n);
  if (kind == "punctured") return DomainSpec::punctured(n);
  if (kind == "complement") {
    std::set<std::size_t> deleted;
    for (const auto& v : j.at("deleted")) deleted.insert(index_from_json(v));
    return DomainSpec::complement(n, std::move(deleted));
  }
  malformed("unknown domain kind '" + kind + "'");
}

ContourSpec contour_from_json(const json& j, const std::optional<DomainSpec>& fallback) {
  std::optional<DomainSpec> d = fallback;
  if (j.contains("domain")) d = domain_from_json(j["domain"]);
  if (!d) malformed("contour has no domain and the scene declares none");
  return make_contour(*d, index_from_json(j.at("axis")), point_from_json(j.at("p")), j.at("R").get<double>());
}

IntMatrix int_matrix_from_json(const json& j) {
  auto a = j.at("a").get<IntMatrix>();
  if (j.contains("n")) require_dimension(j["n"].get<std::size_t>(), a.size(), "exponent matrix");
  for (const auto& row : a) require_dimension(a.size(), row.size(), "exponent matrix row");
  return a;
}

HomotopyPath path_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  const auto n = j.at("n").get<std::size_t>();
  if (type == "overshear") {
    const Polynomial zero(n);
    return OvershearPath{Overshear(index_from_json(j.at("axis")),
                                   j.contains("f") ? polynomial_from_json(j["f"], n) : zero,
                                   j.contains("g") ? polynomial_from_json(j["g"], n) : zero)};
  }
  if (type == "transposition") {
    BumpFunction bump = BumpFunction::sine();
    if (j.contains("bump")) {
      const auto& b = j["bump"];
      if (b.is_string()) {
        if (b.get<std::string>() != "sin") malformed("unknown bump '" + b.get<std::string>() + "'");
      } else {
        bump = BumpFunction::table(b.at("table").get<std::vector<double>>());
      }
    }
    return TranspositionPath(n, index_from_json(j.at("j")), index_from_json(j.at("k")), std::move(bump));
  }
  malformed("unknown path type '" + type + "'");
}

Point parse_point(const std::string& text) {
  Point z;
  std::stringstream coords(text);
  std::string item;
  while (std::getline(coords, item, ';')) {
    const auto comma = item.find(',');
    std::size_t used = 0;
    try {
      const double re = std::stod(item.substr(0, comma), &used);
      double im = 0.0;
      if (comma != std::string::npos) im = std::stod(item.substr(comma + 1));
      z.emplace_back(re, im);
    } catch (const std::logic_error&) {
      malformed("cannot parse point coordinate '" + item + "'");
    }
  }
  if (z.empty()) malformed("empty point");
  return z;
}

std::string dump(const json& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  return out;
}

Scene::Scene(json document) : document_(std::move(document)) {
  if (!document_.is_object()) malformed("scene file must be a JSON object");
  if (document_.contains("domain")) domain_ = domain_from_json(document_["domain"]);
}

Scene Scene::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open scene file '" + path + "'");
  return Scene(json::parse(in));
}

const json& Scene::entry(const char* section, const std::string& name) const {
  if (!document_.contains(section) || !document_[section].contains(name)) {
    malformed(std::string("scene has no ") + section + " entry named '" + name + "'");
  }
  return document_[section][name];
}

AutomorphismWord Scene::word(const std::string& name) const {
  AutomorphismWord w = word_from_json(entry("words", name));
  if (domain_) require_dimension(domain_->n(), w.n(), "word '" + name + "'");
  return w;
}

ContourSpec Scene::contour(const std::string& name) const { return contour_from_json(entry("contours", name), domain_); }

HomotopyPath Scene::path(const std::string& name) const { return path_from_json(entry("paths", name)); }

IntMatrix Scene::exponent_matrix(const std::string& name) const {
  return int_matrix_from_json(entry("exponent_matrices", name));
}

}  // namespace holo::io
