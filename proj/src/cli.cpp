#include "holo/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <map>
#include <ostream>

#include "holo/error.hpp"
#include "holo/json_io.hpp"

namespace holo::cli {

namespace {

using io::json;

struct Options {
  std::string scene;
  std::vector<std::string> words;
  std::string contour;
  std::string path;
  std::string matrix;
  std::string point;
  double t = 0.0;
  bool has_t = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t grid = 1001;
  double radius = 2.0;
  double dt = 1e-3;
  int indent = -1;
};

bool is_domain_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularPoint:
    case ErrorKind::OutsideDomain:
    case ErrorKind::NotDiagonal:
    case ErrorKind::NotUnimodular:
    case ErrorKind::ZeroOnContour:
    case ErrorKind::BudgetExhausted: return true;
    default: return false;
  }
}

[[noreturn]] void usage(const std::string& what) { fail(ErrorKind::InvalidArgument, what); }

const std::string& single_word(const Options& o) {
  if (o.words.size() != 1) usage("exactly one --word is required");
  return o.words.front();
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) usage(std::string("missing required flag ") + flag);
}

// --word, or --path together with --t.
AutomorphismWord word_or_path(const io::Scene& scene, const Options& o) {
  if (!o.path.empty()) {
    if (!o.has_t) usage("--path needs --t");
    if (!o.words.empty()) usage("give either --word or --path, not both");
    return path_at(scene.path(o.path), o.t);
  }
  return scene.word(single_word(o));
}

DomainSpec domain_for(const io::Scene& scene, const AutomorphismWord& w) {
  if (scene.domain()) return *scene.domain();
  return DomainSpec::full(w.n());
}

using Handler = std::function<json(const io::Scene&, const Options&)>;

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;
  h["eval"] = [](const io::Scene& s, const Options& o) -> json {
    require(o.point, "--point");
    return {{"image", io::to_json(eval_word(word_or_path(s, o), io::parse_point(o.point)))}};
  };
  h["compose"] = [](const io::Scene& s, const Options& o) -> json {
    if (o.words.size() < 2) usage("compose needs at least two --word flags");
    AutomorphismWord result = s.word(o.words.front());
    for (std::size_t i = 1; i < o.words.size(); ++i) result = compose(result, s.word(o.words[i]));
    return {{"word", io::to_json(result)}};
  };
  h["invert"] = [](const io::Scene& s, const Options& o) -> json {
    return {{"word", io::to_json(invert_word(s.word(single_word(o))))}};
  };
  h["jacobian"] = [](const io::Scene& s, const Options& o) -> json {
    require(o.point, "--point");
    return {{"det", io::to_json(jacobian_det(word_or_path(s, o), io::parse_point(o.point)))}};
  };
  h["winding-index"] = [](const io::Scene& s, const Options& o) -> json {
    require(o.contour, "--contour");
    return io::to_json(winding_index(s.word(single_word(o)), s.contour(o.contour)));
  };
  h["negative-component"] = [](const io::Scene& s, const Options& o) -> json {
    require(o.contour, "--contour");
    const auto result = winding_index(s.word(single_word(o)), s.contour(o.contour));
    return {{"negative", result.index < 0}, {"index", result.index}};
  };
  h["homotopy-certify"] = [](const io::Scene& s, const Options& o) -> json {
    require(o.path, "--path");
    json out = io::to_json(certify_path(s.path(o.path), o.grid, o.radius, o.seed));
    out["grid"] = o.grid;
    out["radius"] = o.radius;
    return out;
  };
  h["continuity"] = [](const io::Scene& s, const Options& o) -> json {
    require(o.path, "--path");
    return {{"modulus", continuity_modulus(s.path(o.path), o.dt, o.radius, o.seed)}, {"dt", o.dt},
            {"radius", o.radius}};
  };
  h["centralizer"] = [](const io::Scene& s, const Options& o) -> json {
    const auto w = s.word(single_word(o));
    return io::to_json(commutes_with_torus(w, domain_for(s, w), o.seed));
  };
  h["extract-diagonal"] = [](const io::Scene& s, const Options& o) -> json {
    const auto w = s.word(single_word(o));
    return {{"lambda", io::to_json(extract_diagonal(w, domain_for(s, w), o.seed))}};
  };
  h["classify"] = [](const io::Scene& s, const Options&) -> json {
    if (!s.domain()) usage("scene declares no domain");
    const auto c = classify_domain(*s.domain());
    return {{"kind", std::string(to_string(c.kind))}, {"is_stein", c.is_stein}};
  };
  h["preserves"] = [](const io::Scene& s, const Options& o) -> json {
    if (!s.domain()) usage("scene declares no domain");
    return io::to_json(word_preserves_domain(s.word(single_word(o)), *s.domain(), o.seed));
  };
  h["validate-exponents"] = [](const io::Scene& s, const Options& o) -> json {
    require(o.matrix, "--matrix");
    return {{"det", validate_exponent_matrix(s.exponent_matrix(o.matrix))}};
  };
  return h;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Automorphism words on C^n and coordinate-hyperplane complements", "holoaut"};
  app.require_subcommand(1);
  app.add_option("--scene", o.scene, "Scene JSON file");
  app.add_option("--word", o.words, "Word name (repeat for compose)");
  app.add_option("--contour", o.contour, "Contour name");
  app.add_option("--path", o.path, "Homotopy path name");
  app.add_option("--matrix", o.matrix, "Exponent matrix name");
  app.add_option("--point", o.point, "Point as \"re,im;re,im;...\"");
  app.add_option("--t", o.t, "Path time in [0, 1]");
  app.add_option("--seed", o.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--grid", o.grid, "Certification grid size")->capture_default_str();
  app.add_option("--radius", o.radius, "Sample polydisc radius")->capture_default_str();
  app.add_option("--dt", o.dt, "Continuity time step")->capture_default_str();
  app.add_option("--json-indent", o.indent, "Indent for JSON output (compact if negative)");

  const auto table = handlers();
  const std::map<std::string, std::string> descriptions{
      {"eval", "Image of --point under --word (or --path at --t)"},
      {"compose", "Concatenate the --word arguments, first applied first"},
      {"invert", "Inverse word"},
      {"jacobian", "Complex Jacobian determinant at --point"},
      {"winding-index", "Winding index of the word along --contour"},
      {"negative-component", "Whether the winding index is negative"},
      {"homotopy-certify", "Certify --path on a --grid of times"},
      {"continuity", "Continuity modulus of --path for step --dt"},
      {"centralizer", "Sampled commutation with the coordinate torus"},
      {"extract-diagonal", "Diagonal coefficients of a torus-commuting word"},
      {"classify", "Kind and Stein flag of the scene domain"},
      {"preserves", "Whether the word is an automorphism of the scene domain"},
      {"validate-exponents", "Exact determinant check of --matrix"},
  };
  for (const auto& [name, handler] : table) app.add_subcommand(name, descriptions.at(name))->fallthrough();

  std::vector<const char*> argv{"holoaut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    out << io::dump({{"error", "Usage"}, {"message", e.what()}}, o.indent) << "\n";
    return kExitMalformed;
  }
  o.has_t = app.count("--t") > 0;

  const std::string command = app.get_subcommands().front()->get_name();
  json result;
  int code = kExitOk;
  try {
    require(o.scene, "--scene");
    const auto scene = io::Scene::load(o.scene);
    result = table.at(command)(scene, o);
  } catch (const NotUnimodularError& e) {
    result = {{"error", "NotUnimodular"}, {"det", e.det()}};
    code = kExitDomainError;
  } catch (const Error& e) {
    result = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    code = is_domain_error(e.kind()) ? kExitDomainError : kExitMalformed;
  } catch (const io::json::exception& e) {
    result = {{"error", "MalformedJson"}, {"message", e.what()}};
    code = kExitMalformed;
  }
  if (code != kExitOk) err << command << ": " << result.value("message", std::string(result["error"])) << "\n";
  out << io::dump(result, o.indent) << "\n";
  return code;
}

}  // namespace holo::cli
