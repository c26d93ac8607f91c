#pragma once

#include <string>
#include <vector>

#include "crossehr/numbers.hpp"
#include "crossehr/report.hpp"

namespace crossehr {

// Integer polynomial as coefficients by increasing power, trailing zeros
// trimmed.
using IntPoly = std::vector<Int>;

IntPoly trim_poly(IntPoly p);
std::string poly_str(const IntPoly& p);  // "(6, 16, 12, 8)"

/// P_{d,k}(n) = sum_{i=0..k} C(k,i) C(n+d-i, d), the lattice-point count of
/// the n-th dilate of the (d-k)-fold pyramid over the k-cross-polytope.
Int P(int d, int k, long n);

// The exact coefficient vector (c_{d,k}(0), ..., c_{d,k}(d)) of d! P_{d,k}(n).
// Construction checks c(0) = d!, c(d) = 2^k and positivity of every entry.
class CoefficientVector {
 public:
  static CoefficientVector compute(int d, int k);

  int d() const { return d_; }
  int k() const { return k_; }
  const std::vector<Int>& c() const { return c_; }
  const Int& at(int j) const { return c_.at(j); }
  /// Evaluates sum_j c(j) n^j, i.e. d! P_{d,k}(n).
  Int eval(long n) const;
  std::string str() const;

 private:
  int d_ = 0, k_ = 0;
  std::vector<Int> c_;
};

/// Coefficients of the scaled Ehrhart polynomial via the Stirling expansion.
CoefficientVector coeffs(int d, int k);

// Truncated power series with exact rational coefficients through a stated
// order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);  // zero series
  static TruncatedSeries geometric(int order);  // 1/(1-x)

  int order() const { return static_cast<int>(coef_.size()) - 1; }
  const Rat& operator[](int i) const { return coef_[i]; }
  Rat& operator[](int i) { return coef_[i]; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries pow(int e) const;

 private:
  std::vector<Rat> coef_;
};

/// Series of (1+x)^k / (1-x)^(d+1) through x^order, built by truncated series
/// multiplication (an independent route to the values P(d,k,n)).
TruncatedSeries gf_series(int d, int k, int order);

/// d! c_P(j) = sum_i c*_P(i) e(d,i,j) for a d-dimensional polytope with
/// h*-coefficients hstar. Returns the scaled coefficients, j = 0..d.
IntPoly hstar_to_scaled_coeffs(int d, const IntPoly& hstar);

/// Checks d! C(d,j) = sum_i A(d,i) e(d,i,j) for all j (the unit cube, whose
/// h*-coefficients are the Eulerian numbers).
VerifyReport cube_identity_check(int d);

/// Expands (sum_i x^i) * sum_j (t^j / j!) f(x)^j with f(x) = sum 2x^(2i+1)/(2i+1)
/// and checks d! [t^j x^d] against c_{d,d}(j) for d <= d_max, j <= j_max.
VerifyReport egf_check(int d_max, int j_max);

}  // namespace crossehr
