#include "crossehr/ehrhart.hpp"

#include <sstream>
#include <stdexcept>

namespace crossehr {

IntPoly trim_poly(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::string poly_str(const IntPoly& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  os << ')';
  return os.str();
}

Int P(int d, int k, long n) {
  if (d < 1 || k < 0 || k > d) throw std::invalid_argument("P: bad (d,k)");
  if (n < 0) throw std::invalid_argument("P: n must be >= 0");
  Int sum = 0;
  for (int i = 0; i <= k; ++i) {
    sum += binomial(k, i) * binomial_big(Int(n) + d - i, d);
  }
  return sum;
}

CoefficientVector CoefficientVector::compute(int d, int k) {
  if (d < 1 || k < 0 || k > d) throw std::invalid_argument("coeffs: bad (d,k)");
  CoefficientVector cv;
  cv.d_ = d;
  cv.k_ = k;
  cv.c_.assign(d + 1, Int(0));
  // c_{d,k}(j) = sum_i C(k,i) sum_l |s(d-i+1, l+1)| s(i, j-l)
  for (int j = 0; j <= d; ++j) {
    Int total = 0;
    for (int i = 0; i <= k; ++i) {
      Int inner = 0;
      for (int l = 0; l <= d - i; ++l) {
        inner += stirling_first_unsigned(d - i + 1, l + 1) * stirling_first_signed(i, j - l);
      }
      total += binomial(k, i) * inner;
    }
    cv.c_[j] = total;
  }
  if (cv.c_[0] != factorial(d)) throw std::logic_error("coefficient invariant c(0) = d! failed");
  if (cv.c_[d] != (Int(1) << k)) throw std::logic_error("coefficient invariant c(d) = 2^k failed");
  for (const Int& v : cv.c_) {
    if (v <= 0) throw std::logic_error("coefficient positivity failed");
  }
  return cv;
}

Int CoefficientVector::eval(long n) const {
  Int acc = 0;
  Int power = 1;
  for (int j = 0; j <= d_; ++j) {
    acc += c_[j] * power;
    power *= n;
  }
  return acc;
}

std::string CoefficientVector::str() const { return poly_str(c_); }

CoefficientVector coeffs(int d, int k) { return CoefficientVector::compute(d, k); }

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coef_.assign(order + 1, Rat(0));
}

TruncatedSeries TruncatedSeries::geometric(int order) {
  TruncatedSeries s(order);
  for (int i = 0; i <= order; ++i) s.coef_[i] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i) out.coef_[i] = coef_[i] + o.coef_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("series order mismatch");
  TruncatedSeries out(order());
  for (int i = 0; i <= order(); ++i) {
    if (coef_[i] == 0) continue;
    for (int t = 0; i + t <= order(); ++t) {
      out.coef_[i + t] += coef_[i] * o.coef_[t];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0) throw std::invalid_argument("series power must be >= 0");
  TruncatedSeries out(order());
  out[0] = 1;
  for (int t = 0; t < e; ++t) out = out * *this;
  return out;
}

TruncatedSeries gf_series(int d, int k, int order) {
  if (d < 1 || k < 0 || k > d) throw std::invalid_argument("gf_series: bad (d,k)");
  TruncatedSeries one_plus_x(order);
  one_plus_x[0] = 1;
  if (order >= 1) one_plus_x[1] = 1;
  return one_plus_x.pow(k) * TruncatedSeries::geometric(order).pow(d + 1);
}

IntPoly hstar_to_scaled_coeffs(int d, const IntPoly& hstar) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (static_cast<int>(hstar.size()) > d + 1)
    throw std::invalid_argument("h* degree exceeds dimension");
  IntPoly out(d + 1, Int(0));
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i < static_cast<int>(hstar.size()); ++i) {
      if (hstar[i] == 0) continue;
      out[j] += hstar[i] * e_coefficient(d, i, j);
    }
  }
  return trim_poly(std::move(out));
}

VerifyReport cube_identity_check(int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  IntPoly lhs, rhs;
  for (int j = 0; j <= d; ++j) {
    lhs.push_back(factorial(d) * binomial(d, j));
    Int sum = 0;
    for (int i = 0; i < d; ++i) sum += eulerian(d, i) * e_coefficient(d, i, j);
    rhs.push_back(sum);
  }
  VerifyReport r;
  r.identity = "cube";
  r.params = {{"d", d}};
  r.lhs = poly_str(lhs);
  r.rhs = poly_str(rhs);
  r.witness_count = d + 1;
  r.pass = (lhs == rhs);
  return r;
}

VerifyReport egf_check(int d_max, int j_max) {
  if (d_max < 1 || d_max > 10) throw std::invalid_argument("egf_check: 1 <= d_max <= 10");
  if (j_max < 0) throw std::invalid_argument("egf_check: j_max must be >= 0");
  TruncatedSeries f(d_max);
  for (int i = 0; 2 * i + 1 <= d_max; ++i) f[2 * i + 1] = Rat(2, 2 * i + 1);
  const TruncatedSeries geom = TruncatedSeries::geometric(d_max);

  long checked = 0;
  bool pass = true;
  std::string first_bad;
  for (int j = 0; j <= std::min(j_max, d_max); ++j) {
    TruncatedSeries g = geom * f.pow(j);
    for (int d = std::max(j, 1); d <= d_max; ++d) {
      // d!/j! * [x^d] geom * f^j must equal c_{d,d}(j)
      Rat value = g[d] * Rat(factorial(d)) / Rat(factorial(j));
      value.canonicalize();
      Int expected = coeffs(d, d).at(j);
      ++checked;
      if (value.get_den() != 1 || value.get_num() != expected) {
        pass = false;
        if (first_bad.empty()) {
          first_bad = "d=" + std::to_string(d) + " j=" + std::to_string(j);
        }
      }
    }
  }
  VerifyReport r;
  r.identity = "egf";
  r.params = {{"d_max", d_max}, {"j_max", j_max}};
  r.lhs = pass ? "series coefficients" : ("mismatch at " + first_bad);
  r.rhs = "c_{d,d}(j)";
  r.witness_count = checked;
  r.pass = pass;
  return r;
}

}  // namespace crossehr
