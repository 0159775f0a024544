#include "holo/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "holo/error.hpp"

namespace holo {

namespace {

Complex int_power(Complex base, std::uint32_t e) {
  Complex result = 1.0;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace

double sup_distance(PointView a, PointView b) {
  require_dimension(a.size(), b.size(), "sup_distance");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Polynomial::Polynomial(std::size_t n_vars) : n_vars_(n_vars) {}

Polynomial::Polynomial(std::size_t n_vars, const TermMap& terms) : n_vars_(n_vars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Polynomial Polynomial::constant(std::size_t n_vars, Complex c) {
  Polynomial p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t index, Complex coeff) {
  if (index >= n_vars) fail(ErrorKind::InvalidArgument, "variable index out of range");
  Exponents e(n_vars, 0);
  e[index] = 1;
  Polynomial p(n_vars);
  p.add_term(e, coeff);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) {
    return std::all_of(term.first.begin(), term.first.end(), [](std::uint32_t k) { return k == 0; });
  });
}

bool Polynomial::references(std::size_t var) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& term) { return term.first[var] != 0; });
}

std::uint32_t Polynomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t total = 0;
    for (auto k : e) total += k;
    d = std::max(d, total);
  }
  return d;
}

void Polynomial::add_term(const Exponents& e, Complex c) {
  require_dimension(n_vars_, e.size(), "polynomial term exponents");
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    fail(ErrorKind::InvalidArgument, "polynomial coefficient is not finite");
  }
  if (c == Complex(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

Complex Polynomial::operator()(PointView z) const {
  require_dimension(n_vars_, z.size(), "polynomial evaluation");
  Complex sum = 0.0;
  for (const auto& [e, c] : terms_) {
    Complex monomial = c;
    for (std::size_t i = 0; i < n_vars_; ++i) {
      if (e[i] != 0) monomial *= int_power(z[i], e[i]);
    }
    sum += monomial;
  }
  return sum;
}

Polynomial Polynomial::scaled(Complex s) const {
  Polynomial out(n_vars_);
  if (s == Complex(0.0)) return out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_dimension(n_vars_, other.n_vars_, "polynomial sum");
  Polynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

}  // namespace holo
