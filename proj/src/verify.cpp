#include "crossehr/verify.hpp"

#include <stdexcept>

#include "crossehr/colored.hpp"
#include "crossehr/ehrhart.hpp"
#include "crossehr/words.hpp"

namespace crossehr {

VerifyReport verify_theorem(int d, int k) {
  // The signed space has at most sum_perm 2^(#cycles) = (d+2)! objects, which
  // stays under 10^7 exactly for d <= 8.
  if (d > 8) throw std::domain_error("verify theorem guard: d <= 8 for exhaustive modes");

  auto cv = coeffs(d, k);
  auto counts = count_C_by_j(d, k);
  auto census = signed_census(d, k);

  IntPoly lhs, rhs;
  long witnesses = 0;
  bool pass = true;
  for (int j = 0; j <= d; ++j) {
    lhs.push_back(counts[j]);
    rhs.push_back(cv.at(j));
    pass = pass && counts[j] == cv.at(j) && census.signed_sum[j] == cv.at(j);
    witnesses += census.positives[j].get_si() + census.negatives[j].get_si();
  }
  VerifyReport r;
  r.identity = "theorem";
  r.params = {{"d", d}, {"k", k}};
  r.lhs = poly_str(lhs);
  r.rhs = poly_str(rhs);
  r.witness_count = witnesses;
  r.pass = pass;
  return r;
}

VerifyReport verify_words_count(int d, int k, int n) {
  const Int expected = factorial(d) * P(d, k, n);
  if (expected > 10000000) throw std::domain_error("verify words-count guard: |W| exceeds 10^7");
  const Int counted = count_W(d, k, n);
  VerifyReport r;
  r.identity = "words-count";
  r.params = {{"d", d}, {"k", k}, {"n", n}};
  r.lhs = counted.get_str();
  r.rhs = expected.get_str();
  r.witness_count = counted.get_si();
  r.pass = (counted == expected);
  return r;
}

VerifyReport verify_lattice(int d, int k, int n) {
  const Int counted = count_lattice_points(d, k, n);
  const Int expected = P(d, k, n);
  VerifyReport r;
  r.identity = "lattice";
  r.params = {{"d", d}, {"k", k}, {"n", n}};
  r.lhs = counted.get_str();
  r.rhs = expected.get_str();
  r.witness_count = counted.get_si();
  r.pass = (counted == expected);
  return r;
}

}  // namespace crossehr
