#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "holo/types.hpp"

namespace holo {

using Exponents = std::vector<std::uint32_t>;

/// Multivariate complex polynomial in a fixed number of variables, kept in
/// canonical form: no stored term has a zero coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Complex>;

  explicit Polynomial(std::size_t n_vars);
  Polynomial(std::size_t n_vars, const TermMap& terms);

  static Polynomial constant(std::size_t n_vars, Complex c);
  /// The coordinate function z_{index}; index is zero-based.
  static Polynomial variable(std::size_t n_vars, std::size_t index, Complex coeff = 1.0);

  std::size_t n_vars() const noexcept { return n_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// True when some term has a positive exponent on the given variable.
  bool references(std::size_t var) const noexcept;
  std::uint32_t degree() const noexcept;

  /// Adds c * z^e, merging with an existing term and dropping it if it cancels.
  void add_term(const Exponents& e, Complex c);

  Complex operator()(PointView z) const;

  Polynomial scaled(Complex s) const;
  Polynomial operator-() const { return scaled(-1.0); }
  Polynomial operator+(const Polynomial& other) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_vars_;
  TermMap terms_;
};

}  // namespace holo
