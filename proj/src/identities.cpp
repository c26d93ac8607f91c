#include "crossehr/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crossehr {

namespace {

// The cycle containing d+1 is the one with the largest maximum, hence last in
// canonical order.
int find_cycle_containing(const std::vector<ColoredCycle>& cycles, int v) {
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (std::find(cycles[i].elems.begin(), cycles[i].elems.end(), v) != cycles[i].elems.end())
      return static_cast<int>(i);
  }
  throw std::logic_error("element not found in any cycle");
}

}  // namespace

VerifyReport check_endpoints(int d, int k) {
  auto cv = coeffs(d, k);
  const Int want0 = factorial(d);
  const Int wantd = Int(1) << k;
  bool pass = (cv.at(0) == want0) && (cv.at(d) == wantd);
  long witnesses = 0;
  if (d <= 6) {
    auto first = enumerate_C(d, k, 0);
    auto last = enumerate_C(d, k, d);
    pass = pass && Int(first.size()) == want0 && Int(last.size()) == wantd;
    witnesses = static_cast<long>(first.size() + last.size());
  }
  VerifyReport r;
  r.identity = "endpoints";
  r.params = {{"d", d}, {"k", k}};
  r.lhs = "(" + cv.at(0).get_str() + ", " + cv.at(d).get_str() + ")";
  r.rhs = "(" + want0.get_str() + ", " + wantd.get_str() + ")";
  r.witness_count = witnesses;
  r.pass = pass;
  return r;
}

ColoredPermutation inject_d(const ColoredPermutation& p) {
  if (p.is_partial()) throw std::invalid_argument("inject_d requires a full element");
  const int d = p.d();
  auto cycles = p.cycles();
  int idx = find_cycle_containing(cycles, d + 1);
  Cycle grown{d + 2};
  grown.insert(grown.end(), cycles[idx].elems.begin(), cycles[idx].elems.end());
  cycles[idx].elems = std::move(grown);
  return ColoredPermutation::validated(std::move(cycles), d + 1, p.k());
}

ColoredPermutation inject_k(const ColoredPermutation& p) {
  if (p.is_partial()) throw std::invalid_argument("inject_k requires a full element");
  const int d = p.d(), k = p.k();
  if (k > d - 1) throw std::invalid_argument("inject_k requires k <= d-1");
  auto cycles = p.cycles();
  int idx = find_cycle_containing(cycles, k + 1);
  if (cycles[idx].elems.front() > k + 1) {
    // shares a cycle with a larger element: unchanged
  } else if (cycles[idx].elems.size() % 2 == 1) {
    cycles[idx].color = Color::Blue;
  } else {
    int x = cycles[idx].elems.back();
    cycles[idx].elems.pop_back();
    cycles[idx].color = Color::Red;
    int big = find_cycle_containing(cycles, d + 1);
    cycles[big].elems.push_back(x);
  }
  return ColoredPermutation::validated(std::move(cycles), d, k + 1);
}

Int k_difference_count(int d, int k, int j) {
  if (k > d - 1) throw std::invalid_argument("k_difference_count requires k <= d-1");
  Int count = 0;
  for (const auto& p : enumerate_C(d, k + 1, j)) {
    const auto& cycles = p.cycles();
    const auto& holder = cycles[find_cycle_containing(cycles, k + 1)];
    if (holder.color != Color::Red) continue;
    const Cycle& big = cycles.back().elems;  // cycle containing d+1
    int before = (big.size() >= 2) ? big.back() : d + 1;
    if (before > k + 1) ++count;
  }
  return count;
}

ColoredPermutation alt_involution_small_k(const ColoredPermutation& p) {
  // Partial objects are accepted; the ground set maximum is taken as d+1 and
  // both d and d+1 must be present.
  int d;
  if (p.is_partial()) {
    if (p.cycles().empty()) throw std::invalid_argument("empty permutation");
    int max_elem = 0;
    for (const auto& cc : p.cycles()) max_elem = std::max(max_elem, cc.elems.front());
    d = max_elem - 1;
  } else {
    d = p.d();
  }
  const int k = p.k();
  if (k >= d) throw std::invalid_argument("involution requires k < d");
  auto cycles = p.cycles();
  int idx_big = find_cycle_containing(cycles, d + 1);
  int idx_d = find_cycle_containing(cycles, d);
  if (idx_big == idx_d) {
    // break before d
    const Cycle& c = cycles[idx_big].elems;
    auto pos = std::find(c.begin(), c.end(), d);
    Cycle left(c.begin(), pos), right(pos, c.end());
    cycles.erase(cycles.begin() + idx_big);
    cycles.push_back({std::move(left), Color::None});
    cycles.push_back({std::move(right), Color::None});
  } else {
    Cycle merged = cycles[idx_big].elems;
    merged.insert(merged.end(), cycles[idx_d].elems.begin(), cycles[idx_d].elems.end());
    cycles[idx_big].elems = std::move(merged);
    cycles.erase(cycles.begin() + idx_d);
  }
  return p.is_partial() ? ColoredPermutation::partial(std::move(cycles), k)
                        : ColoredPermutation::validated(std::move(cycles), d, k);
}

MarkedPermutation alt_involution_k_eq_d(const MarkedPermutation& m) {
  if (m.is_partial()) throw std::invalid_argument("involution requires a full element");
  const int d = m.d();
  if (m.k() != d) throw std::invalid_argument("involution requires k = d");
  auto cycles = m.base().cycles();
  const int big = static_cast<int>(cycles.size()) - 1;  // cycle containing d+1
  if (m.mark()) {
    const int i = *m.mark();
    std::erase_if(cycles, [i](const Cycle& c) { return c.size() == 1 && c.front() == i; });
    cycles.back().push_back(i);
    return MarkedPermutation::validated(CycleForm::from_cycles(std::move(cycles)),
                                        std::nullopt, d, d);
  }
  if (cycles[big].size() == 1)
    throw std::domain_error("fixed point: d+1 is fixed and there is no mark");
  int x = cycles[big].back();
  cycles[big].pop_back();
  cycles.push_back({x});
  return MarkedPermutation::validated(CycleForm::from_cycles(std::move(cycles)), x, d, d);
}

int marked_sign_k_eq_d(const MarkedPermutation& m) {
  const auto& big = m.base().cycles().back();
  return (big.size() % 2 == 1) ? 1 : -1;
}

VerifyReport verify_alternating_sums(int d, int k) {
  auto cv = coeffs(d, k);
  Int sum = 0;
  for (int j = 0; j <= d; ++j) {
    int s = (k < d) ? (j % 2 == 0 ? 1 : -1) : ((d - j) % 2 == 0 ? 1 : -1);
    sum += s * cv.at(j);
  }
  const Int expect = (k < d) ? Int(0) : factorial(d);
  bool pass = (sum == expect);
  long witnesses = 0;

  if (d <= 6) {
    auto all = enumerate_C_all(d, k);
    witnesses = static_cast<long>(all.size());
    if (k < d) {
      for (const auto& p : all) {
        auto q = alt_involution_small_k(p);
        pass = pass && std::abs(q.j() - p.j()) == 1 && alt_involution_small_k(q) == p;
      }
    } else {
      Int signed_total = 0;
      long fixed = 0;
      for (const auto& p : all) {
        auto m = to_marked(p);
        signed_total += marked_sign_k_eq_d(m);
        const bool big_fixed = m.base().cycles().back().size() == 1;
        if (big_fixed && !m.mark()) {
          ++fixed;
          pass = pass && marked_sign_k_eq_d(m) == 1;
        } else {
          auto mm = alt_involution_k_eq_d(m);
          pass = pass && marked_sign_k_eq_d(mm) == -marked_sign_k_eq_d(m) &&
                 alt_involution_k_eq_d(mm) == m && !(mm == m);
        }
      }
      pass = pass && signed_total == factorial(d) && Int(fixed) == factorial(d);
    }
  }

  VerifyReport r;
  r.identity = "alt-sums";
  r.params = {{"d", d}, {"k", k}};
  r.lhs = sum.get_str();
  r.rhs = expect.get_str();
  r.witness_count = witnesses;
  r.pass = pass;
  return r;
}

VerifyReport verify_remark45(int d, int k, std::optional<int> j) {
  if (k > d - 1) throw std::invalid_argument("remark45 requires k <= d-1");
  if (d > 8) throw std::domain_error("remark45 guard: d <= 8 for exhaustive modes");
  std::vector<int> js;
  if (j) {
    if (*j < 0 || *j > d) throw std::invalid_argument("j out of range");
    js.push_back(*j);
  } else {
    for (int t = 0; t <= d; ++t) js.push_back(t);
  }
  auto lo = coeffs(d, k), hi = coeffs(d, k + 1);
  IntPoly lhs, rhs;
  long witnesses = 0;
  for (int t : js) {
    lhs.push_back(k_difference_count(d, k, t));
    rhs.push_back(hi.at(t) - lo.at(t));
    witnesses += static_cast<long>(enumerate_C(d, k + 1, t).size());
  }
  VerifyReport r;
  r.identity = "remark45";
  r.params = {{"d", d}, {"k", k}};
  if (j) r.params.emplace_back("j", *j);
  r.lhs = poly_str(lhs);
  r.rhs = poly_str(rhs);
  r.witness_count = witnesses;
  r.pass = (lhs == rhs);
  return r;
}

}  // namespace crossehr
