#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsym/algebra.hpp"

namespace qsym {

class NotQuasisymmetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial in x_1..x_N with terms of total degree above max_degree dropped.
class TruncPoly {
 public:
  static constexpr int kMaxVars = 12;
  using Exponents = std::array<std::uint8_t, kMaxVars>;

  TruncPoly(int nvars, int max_degree);

  int nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  const std::map<Exponents, RatFunc>& terms() const { return terms_; }

  void add(const Exponents& e, const RatFunc& c);
  TruncPoly homogeneous_part(int degree) const;

  TruncPoly& operator+=(const TruncPoly& o);
  TruncPoly& operator*=(const RatFunc& c);
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
  friend bool operator==(const TruncPoly& a, const TruncPoly& b);

 private:
  int nvars_;
  int max_degree_;
  std::map<Exponents, RatFunc> terms_;
};

int degree(const TruncPoly::Exponents& e);

// M_alpha(x_1..x_N) as an explicit polynomial.
TruncPoly expand_M(const Composition& alpha, int nvars, int max_degree);
TruncPoly expand(const QSymElement& x, int nvars, int max_degree);
// Reads off the M-coefficients of the degree-d part and checks that they
// reproduce it; throws NotQuasisymmetricError otherwise.
QSymElement extract_M(const TruncPoly& p, int degree);

struct DiffEntry {
  Composition comp;
  RatFunc rule;
  RatFunc oracle;
};

std::vector<DiffEntry> diff(const QSymElement& rule, const QSymElement& oracle);

struct ProductCheck {
  QSymElement rule;
  QSymElement oracle;
  std::vector<DiffEntry> diffs;
  bool ok() const { return diffs.empty(); }
};

// B_alpha * B_beta by the basis rule against multiplication of explicit
// polynomials in nvars variables (default |alpha| + |beta|).
QSymElement oracle_product(Basis basis, const Composition& alpha, const Composition& beta,
                           std::optional<int> nvars = std::nullopt);
ProductCheck verify_product(Basis basis, const Composition& alpha, const Composition& beta,
                            std::optional<int> nvars = std::nullopt);

}  // namespace qsym
