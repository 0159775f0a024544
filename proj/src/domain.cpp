#include "holo/domain.hpp"

#include <cmath>
#include <string>

#include "holo/error.hpp"
#include "holo/sampling.hpp"

namespace holo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite_point(PointView z) {
  for (auto c : z) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

Point ones(std::size_t n) { return Point(n, Complex(1.0)); }

// A failed structural check at one step: `point` is a domain point entering
// that step whose image leaves the domain.
using StepWitness = std::optional<Point>;

StepWitness overshear_witness(const Overshear& s, const DomainSpec& d, std::uint64_t seed) {
  const std::size_t a = s.axis - 1;
  if (d.kind() == DomainKind::Punctured) {
    // The preimage of the origin is (0, .., -f(0) e^{-g(0)}, .., 0).
    Point x(d.n(), Complex(0.0));
    const Complex root = -s.f(x) * std::exp(-s.g(x));
    if (root == Complex(0.0)) return std::nullopt;
    x[a] = root;
    return x;
  }
  if (d.kind() != DomainKind::HyperplaneComplement || !d.deletes(s.axis) || s.f.is_zero()) return std::nullopt;
  // Solve f(x') + exp(g(x')) x_a = 0 for a fiber where f(x') != 0.
  Sampler sampler(seed);
  Point x = ones(d.n());
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Complex fx = s.f(x);
    if (fx != Complex(0.0)) {
      x[a] = -fx * std::exp(-s.g(x));
      return x;
    }
    x = sampler.domain_point(d.n());
  }
  return std::nullopt;
}

StepWitness permutation_witness(const Permutation& s, const DomainSpec& d) {
  if (d.kind() != DomainKind::HyperplaneComplement) return std::nullopt;
  for (std::size_t k = 1; k <= d.n(); ++k) {
    if (!d.deletes(k) && d.deletes(s.perm[k - 1])) {
      Point x = ones(d.n());
      x[k - 1] = 0.0;
      return x;
    }
  }
  return std::nullopt;
}

StepWitness linear_witness(const Linear& s, const DomainSpec& d) {
  if (d.kind() != DomainKind::HyperplaneComplement) return std::nullopt;
  const auto& m = s.matrix;
  const auto n = static_cast<Eigen::Index>(d.n());
  for (std::size_t i : d.deleted()) {
    const auto row = static_cast<Eigen::Index>(i - 1);
    std::vector<Eigen::Index> support;
    Eigen::Index free_column = -1;
    for (Eigen::Index c = 0; c < n; ++c) {
      if (m(row, c) == Complex(0.0)) continue;
      support.push_back(c);
      if (!d.deletes(static_cast<std::size_t>(c) + 1)) free_column = c;
    }
    if (free_column < 0 && support.size() == 1) continue;
    // The linear form in row i vanishes somewhere in the domain: solve for it
    // in one column, keeping every deleted coordinate nonzero.
    const Eigen::Index solve = free_column >= 0 ? free_column : support[0];
    Point x = ones(d.n());
    auto rest = [&] {
      Complex sum = 0.0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c != solve) sum += m(row, c) * x[static_cast<std::size_t>(c)];
      }
      return sum;
    };
    Complex r = rest();
    if (free_column < 0 && r == Complex(0.0)) {
      x[static_cast<std::size_t>(support[1])] = 2.0;
      r = rest();
    }
    x[static_cast<std::size_t>(solve)] = -r / m(row, solve);
    return x;
  }
  return std::nullopt;
}

StepWitness inversion_witness(const Inversion& s, const DomainSpec& d) {
  const bool admissible = (d.kind() == DomainKind::HyperplaneComplement && d.deletes(s.axis)) ||
                          (d.kind() == DomainKind::Punctured && d.n() == 1);
  if (admissible) return std::nullopt;
  Point x = ones(d.n());
  x[s.axis - 1] = 0.0;
  return x;
}

StepWitness structural_witness(const GeneratorStep& step, const DomainSpec& d, std::uint64_t seed) {
  return std::visit(overloaded{
                        [&](const Overshear& s) { return overshear_witness(s, d, seed); },
                        [&](const Permutation& s) { return permutation_witness(s, d); },
                        [&](const Diagonal&) -> StepWitness { return std::nullopt; },
                        [&](const Linear& s) { return linear_witness(s, d); },
                        [&](const Inversion& s) { return inversion_witness(s, d); },
                    },
                    step);
}

}  // namespace

std::string_view to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::FullSpace: return "full";
    case DomainKind::Punctured: return "punctured";
    case DomainKind::HyperplaneComplement: return "complement";
  }
  return "unknown";
}

DomainSpec::DomainSpec(DomainKind kind, std::size_t n, std::set<std::size_t> deleted)
    : kind_(kind), n_(n), deleted_(std::move(deleted)) {
  if (n_ == 0) fail(ErrorKind::InvalidArgument, "domain dimension must be positive");
}

DomainSpec DomainSpec::full(std::size_t n) { return {DomainKind::FullSpace, n, {}}; }

DomainSpec DomainSpec::punctured(std::size_t n) { return {DomainKind::Punctured, n, {}}; }

DomainSpec DomainSpec::complement(std::size_t n, std::set<std::size_t> deleted) {
  if (deleted.empty()) fail(ErrorKind::InvalidArgument, "a hyperplane complement deletes at least one hyperplane");
  for (auto i : deleted) {
    if (i < 1 || i > n) fail(ErrorKind::InvalidAxis, "deleted hyperplane index " + std::to_string(i) + " out of range");
  }
  return {DomainKind::HyperplaneComplement, n, std::move(deleted)};
}

bool contains(const DomainSpec& d, PointView z) {
  require_dimension(d.n(), z.size(), "contains");
  switch (d.kind()) {
    case DomainKind::FullSpace: return true;
    case DomainKind::Punctured:
      for (auto c : z) {
        if (c != Complex(0.0)) return true;
      }
      return false;
    case DomainKind::HyperplaneComplement:
      for (auto i : d.deleted()) {
        if (z[i - 1] == Complex(0.0)) return false;
      }
      return true;
  }
  return false;
}

DomainClass classify_domain(const DomainSpec& d) {
  const bool stein = d.kind() != DomainKind::Punctured || d.n() == 1;
  return {d.kind(), stein};
}

PreservationVerdict word_preserves_domain(const AutomorphismWord& w, const DomainSpec& d, std::uint64_t seed,
                                          std::size_t samples) {
  require_dimension(d.n(), w.n(), "word_preserves_domain");

  // Structural pass. Every accepted prefix is an automorphism of d, so a step
  // witness pulls back to a genuine domain point through the prefix inverse.
  AutomorphismWord prefix(w.n());
  for (const auto& step : w.steps()) {
    if (auto x = structural_witness(step, d, seed)) {
      return {false, eval_word(invert_word(prefix), *x)};
    }
    prefix.then(step);
  }

  Sampler sampler(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point z = sampler.domain_point(d.n());
    try {
      const Point image = eval_word(w, z);
      if (!finite_point(image) || !contains(d, image)) return {false, z};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularPoint) throw;
      return {false, z};
    }
  }
  return {true, std::nullopt};
}

}  // namespace holo
