#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial over the integers; coefficient i multiplies x^i.
// Stored without trailing zeros, so the zero polynomial has no coefficients.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<BigInt> coeffs);
  static ExactPoly constant(BigInt c);
  static ExactPoly monomial(std::size_t power, BigInt c = 1);
  // x - root
  static ExactPoly linear_root(const BigInt& root);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // Coefficient of x^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  ExactPoly derivative() const;
  BigInt content() const;
  // Divided by its content, sign chosen so the leading coefficient is positive.
  ExactPoly primitive_part() const;

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  ExactPoly operator-() const;

  bool operator==(const ExactPoly&) const = default;

  // Descending powers, e.g. "x^4 - 3x^2 + 1".
  std::string to_string() const;
  // Coefficients as decimal strings, ascending powers.
  std::vector<std::string> to_decimal_strings() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct DivisionResult {
  ExactPoly quotient;
  ExactPoly remainder;
};

// Division over the integers. The divisor's leading coefficient must divide
// every intermediate leading term; std::domain_error otherwise.
DivisionResult divide(const ExactPoly& dividend, const ExactPoly& divisor);
// Throws std::domain_error if the remainder is nonzero.
ExactPoly divide_exact(const ExactPoly& dividend, const ExactPoly& divisor);
// Remainder of c * a by b with c a positive power of |lc(b)|, so the sign of
// the remainder agrees with the rational remainder.
ExactPoly positive_pseudo_remainder(const ExactPoly& a, const ExactPoly& b);
// Primitive greatest common divisor with positive leading coefficient.
ExactPoly gcd(const ExactPoly& a, const ExactPoly& b);

// det(xI - A(G)) via Faddeev-LeVerrier in exact arithmetic.
ExactPoly char_poly(const Graph& g);

struct FactorRecord {
  ExactPoly factor;  // square-free, monic
  std::size_t multiplicity = 0;
};

struct MultiplicitySpectrum {
  std::vector<FactorRecord> records;  // ascending multiplicity
  std::size_t mult_zero = 0;
  std::size_t mult_minus_one = 0;
};

// Yun's square-free decomposition of a monic integer polynomial.
MultiplicitySpectrum square_free_decomposition(const ExactPoly& p);

// Multiplicity of `root` as a root of p.
std::size_t root_multiplicity(ExactPoly p, const BigInt& root);
// p with every factor (x - root) divided out.
ExactPoly strip_root(ExactPoly p, const BigInt& root);

// Distinct real roots of a square-free p strictly inside (a, b), by a Sturm
// chain of sign-corrected pseudo-remainders. Requires a < b.
std::size_t count_distinct_roots_open(const ExactPoly& square_free, const BigInt& a, const BigInt& b);

// Eigenvalues of the spectrum strictly inside (a, b), with multiplicity.
std::size_t count_eigs_open_interval(const MultiplicitySpectrum& spectrum, const BigInt& a, const BigInt& b);
std::size_t count_eigs_open_interval(const Graph& g, long a, long b);

// Rank over the rationals of A(G) + shift * I by Bareiss elimination.
std::size_t rank_exact(const Graph& g, long shift);

inline constexpr double kJacobiTolerance = 1e-9;
inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol; eigenvalues returned in descending order. std::runtime_error after
// max_sweeps sweeps without convergence.
std::vector<double> numeric_eigenvalues(const Graph& g, double tol = kJacobiTolerance,
                                        int max_sweeps = kJacobiMaxSweeps);
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, double tol, int max_sweeps);

}  // namespace cospec
