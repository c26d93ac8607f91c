#include "crossehr/colored.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace crossehr {

namespace {

std::string color_tag(Color c) {
  switch (c) {
    case Color::Red:
      return ":r";
    case Color::Blue:
      return ":b";
    case Color::None:
      return "";
  }
  return "";
}

std::string cycle_body(const Cycle& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c[i]);
  }
  return out;
}

// Rotate max-first, sort by leading element, reject duplicates.
std::vector<ColoredCycle> canonical_colored(std::vector<ColoredCycle> raw) {
  std::vector<int> seen;
  for (auto& cc : raw) {
    if (cc.elems.empty()) throw std::invalid_argument("empty cycle");
    for (int v : cc.elems) {
      if (v <= 0) throw std::invalid_argument("cycle elements must be positive");
      seen.push_back(v);
    }
    cc.elems = rotate_max_first(std::move(cc.elems));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("duplicate element in cycles");
  std::sort(raw.begin(), raw.end(), [](const ColoredCycle& a, const ColoredCycle& b) {
    return a.elems.front() < b.elems.front();
  });
  return raw;
}

void check_full_ground(const std::vector<ColoredCycle>& cycles, int d) {
  std::vector<int> g;
  for (const auto& cc : cycles) g.insert(g.end(), cc.elems.begin(), cc.elems.end());
  std::sort(g.begin(), g.end());
  if (static_cast<int>(g.size()) != d + 1)
    throw std::invalid_argument("cycles do not partition {1..d+1}");
  for (int i = 0; i <= d; ++i) {
    if (g[i] != i + 1) throw std::invalid_argument("cycles do not partition {1..d+1}");
  }
}

// Coloring rule: a cycle is colored (red or blue) iff all elements are <= k.
// The leading element is the maximum, so the test is on the front.
void check_coloring(const std::vector<ColoredCycle>& cycles, int k, bool odd_only) {
  for (const auto& cc : cycles) {
    const bool le_k = cc.elems.front() <= k;
    if (le_k && cc.color == Color::None)
      throw std::invalid_argument("uncolored cycle with all elements <= k: (" +
                                  cycle_body(cc.elems) + ")");
    if (!le_k && cc.color != Color::None)
      throw std::invalid_argument("colored cycle containing element > k: (" +
                                  cycle_body(cc.elems) + ")");
    if (odd_only && cc.color != Color::None && cc.elems.size() % 2 == 0)
      throw std::invalid_argument("even colored cycle: (" + cycle_body(cc.elems) + ")");
  }
}

void check_params(int d, int k) {
  if (d < 1 || k < 0 || k > d) throw std::invalid_argument("parameters must satisfy d >= 1, 0 <= k <= d");
}

std::vector<Cycle> cycle_decomposition(const std::vector<int>& one_line) {
  const int m = static_cast<int>(one_line.size());
  std::vector<bool> visited(m + 1, false);
  std::vector<Cycle> raw;
  for (int s = 1; s <= m; ++s) {
    if (visited[s]) continue;
    Cycle c;
    int v = s;
    while (!visited[v]) {
      visited[v] = true;
      c.push_back(v);
      v = one_line[v - 1];
    }
    raw.push_back(std::move(c));
  }
  return raw;
}

unsigned long long factorial_u64(int m) {
  unsigned long long f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

// Unranks the lexicographically rank-th permutation of [1..m].
std::vector<int> nth_permutation(int m, unsigned long long rank) {
  std::vector<int> avail(m);
  for (int i = 0; i < m; ++i) avail[i] = i + 1;
  std::vector<int> out;
  out.reserve(m);
  for (int i = m - 1; i >= 0; --i) {
    unsigned long long f = factorial_u64(i);
    int idx = static_cast<int>(rank / f);
    rank %= f;
    out.push_back(avail[idx]);
    avail.erase(avail.begin() + idx);
  }
  return out;
}

struct CensusAccumulator {
  std::vector<long long> sum, pos, neg;
  explicit CensusAccumulator(int d) : sum(d + 1, 0), pos(d + 1, 0), neg(d + 1, 0) {}
  void merge(const CensusAccumulator& o) {
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += o.sum[i];
      pos[i] += o.pos[i];
      neg[i] += o.neg[i];
    }
  }
};

// Enumerates every red/blue coloring of one permutation explicitly and adds
// (-1)^(#even red cycles) per coloring.
void census_one(const std::vector<int>& one_line, int k, CensusAccumulator& acc) {
  const int m = static_cast<int>(one_line.size());
  std::vector<bool> visited(m + 1, false);
  int ncycles = 0, ncolored = 0;
  unsigned even_mask = 0;
  for (int s = 1; s <= m; ++s) {
    if (visited[s]) continue;
    int len = 0, mx = 0, v = s;
    while (!visited[v]) {
      visited[v] = true;
      ++len;
      mx = std::max(mx, v);
      v = one_line[v - 1];
    }
    ++ncycles;
    if (mx <= k) {
      if (len % 2 == 0) even_mask |= 1u << ncolored;
      ++ncolored;
    }
  }
  const int j = ncycles - 1;
  for (unsigned mask = 0; mask < (1u << ncolored); ++mask) {
    if (std::popcount(mask & even_mask) % 2 == 0) {
      ++acc.sum[j];
      ++acc.pos[j];
    } else {
      --acc.sum[j];
      ++acc.neg[j];
    }
  }
}

SignedCensus census_to_result(const CensusAccumulator& acc, int d) {
  SignedCensus out;
  for (int j = 0; j <= d; ++j) {
    out.signed_sum.emplace_back(static_cast<long>(acc.sum[j]));
    out.positives.emplace_back(static_cast<long>(acc.pos[j]));
    out.negatives.emplace_back(static_cast<long>(acc.neg[j]));
  }
  return out;
}

}  // namespace

std::string colored_cycles_str(const std::vector<ColoredCycle>& cycles) {
  std::string out;
  for (const auto& cc : cycles) {
    out += '(' + cycle_body(cc.elems) + color_tag(cc.color) + ')';
  }
  return out;
}

ColoredPermutation ColoredPermutation::validated(std::vector<ColoredCycle> raw, int d, int k) {
  check_params(d, k);
  auto cycles = canonical_colored(std::move(raw));
  check_full_ground(cycles, d);
  check_coloring(cycles, k, /*odd_only=*/true);
  ColoredPermutation p;
  p.d_ = d;
  p.k_ = k;
  p.partial_ = false;
  p.cycles_ = std::move(cycles);
  return p;
}

ColoredPermutation ColoredPermutation::partial(std::vector<ColoredCycle> raw, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  auto cycles = canonical_colored(std::move(raw));
  check_coloring(cycles, k, /*odd_only=*/true);
  ColoredPermutation p;
  p.k_ = k;
  p.partial_ = true;
  p.cycles_ = std::move(cycles);
  return p;
}

CycleForm ColoredPermutation::base() const {
  std::vector<Cycle> cs;
  for (const auto& cc : cycles_) cs.push_back(cc.elems);
  return CycleForm::from_cycles(std::move(cs));
}

std::string ColoredPermutation::str() const { return colored_cycles_str(cycles_); }

SignedColoredPermutation SignedColoredPermutation::validated(std::vector<ColoredCycle> raw,
                                                             int d, int k) {
  check_params(d, k);
  auto cycles = canonical_colored(std::move(raw));
  check_full_ground(cycles, d);
  check_coloring(cycles, k, /*odd_only=*/false);
  SignedColoredPermutation p;
  p.d_ = d;
  p.k_ = k;
  p.cycles_ = std::move(cycles);
  return p;
}

bool SignedColoredPermutation::has_even_colored() const {
  for (const auto& cc : cycles_) {
    if (cc.color != Color::None && cc.elems.size() % 2 == 0) return true;
  }
  return false;
}

ColoredPermutation SignedColoredPermutation::to_colored() const {
  return ColoredPermutation::validated(cycles_, d_, k_);
}

std::string SignedColoredPermutation::str() const { return colored_cycles_str(cycles_); }

int sign(const SignedColoredPermutation& p) {
  int even_red = 0;
  for (const auto& cc : p.cycles()) {
    if (cc.color == Color::Red && cc.elems.size() % 2 == 0) ++even_red;
  }
  return (even_red % 2 == 0) ? 1 : -1;
}

SignedColoredPermutation theorem_involution(const SignedColoredPermutation& p) {
  auto cycles = p.cycles();
  for (auto& cc : cycles) {
    if (cc.color != Color::None && cc.elems.size() % 2 == 0) {
      cc.color = (cc.color == Color::Red) ? Color::Blue : Color::Red;
      return SignedColoredPermutation::validated(std::move(cycles), p.d(), p.k());
    }
  }
  throw std::domain_error("no even colored cycle: element of C_{d,k} is a fixed point");
}

MarkedPermutation MarkedPermutation::validated(CycleForm base, std::optional<int> mark,
                                               int d, int k) {
  check_params(d, k);
  if (!base.is_permutation_of(d + 1))
    throw std::invalid_argument("marked permutation must cover {1..d+1}");
  MarkedPermutation m;
  m.d_ = d;
  m.k_ = k;
  m.partial_ = false;
  m.base_ = std::move(base);
  m.mark_ = mark;
  if (mark) {
    if (*mark > k) throw std::invalid_argument("mark must be <= k");
    bool singleton = false;
    for (const auto& c : m.base_.cycles()) {
      if (c.size() == 1 && c.front() == *mark) singleton = true;
    }
    if (!singleton) throw std::invalid_argument("mark must be a singleton cycle");
  }
  return m;
}

MarkedPermutation MarkedPermutation::partial(CycleForm base, std::optional<int> mark, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  MarkedPermutation m;
  m.k_ = k;
  m.partial_ = true;
  m.base_ = std::move(base);
  m.mark_ = mark;
  if (mark) {
    if (*mark > k) throw std::invalid_argument("mark must be <= k");
    bool singleton = false;
    for (const auto& c : m.base_.cycles()) {
      if (c.size() == 1 && c.front() == *mark) singleton = true;
    }
    if (!singleton) throw std::invalid_argument("mark must be a singleton cycle");
  }
  return m;
}

std::string MarkedPermutation::str() const {
  std::string out;
  for (const auto& c : base_.cycles()) {
    bool marked = mark_ && c.size() == 1 && c.front() == *mark_;
    out += '(' + cycle_body(c) + (marked ? ":mark" : "") + ')';
  }
  return out;
}

MarkedPermutation to_marked(const ColoredPermutation& p) {
  std::vector<Cycle> out;
  std::vector<Cycle> reds;
  for (const auto& cc : p.cycles()) {
    if (cc.color == Color::Red) {
      reds.push_back(cc.elems);
    } else {
      out.push_back(cc.elems);
    }
  }
  std::optional<int> mark;
  for (std::size_t i = 0; i + 1 < reds.size(); i += 2) {
    int x = reds[i].back();
    reds[i].pop_back();
    reds[i + 1].push_back(x);
    if (!reds[i].empty()) out.push_back(std::move(reds[i]));
    out.push_back(std::move(reds[i + 1]));
  }
  if (reds.size() % 2 == 1) {
    Cycle& last = reds.back();
    mark = last.back();
    last.pop_back();
    if (!last.empty()) out.push_back(std::move(last));
    out.push_back({*mark});
  }
  auto base = CycleForm::from_cycles(std::move(out));
  return p.is_partial() ? MarkedPermutation::partial(std::move(base), mark, p.k())
                        : MarkedPermutation::validated(std::move(base), mark, p.d(), p.k());
}

ColoredPermutation from_marked(const MarkedPermutation& m) {
  const int k = m.k();
  std::vector<ColoredCycle> result;
  std::vector<Cycle> work;  // even all-<=k cycles, canonical order
  for (const auto& c : m.base().cycles()) {
    if (m.mark() && c.size() == 1 && c.front() == *m.mark()) continue;
    if (c.front() > k) {
      result.push_back({c, Color::None});
    } else if (c.size() % 2 == 1) {
      result.push_back({c, Color::Blue});
    } else {
      work.push_back(c);
    }
  }
  if (m.mark()) work.push_back({*m.mark()});

  // Unwind from the right: the last cycle's tail either came from a singleton
  // red cycle (tail larger than the previous maximum) or from the tail of the
  // previous red cycle.
  while (!work.empty()) {
    Cycle t = std::move(work.back());
    work.pop_back();
    int x = t.back();
    t.pop_back();
    if (work.empty() || x > work.back().front()) {
      if (!t.empty()) result.push_back({std::move(t), Color::Red});
      result.push_back({{x}, Color::Red});
    } else {
      if (!t.empty()) result.push_back({std::move(t), Color::Red});
      Cycle prev = std::move(work.back());
      work.pop_back();
      prev.push_back(x);
      result.push_back({std::move(prev), Color::Red});
    }
  }

  try {
    return m.is_partial() ? ColoredPermutation::partial(std::move(result), k)
                          : ColoredPermutation::validated(std::move(result), m.d(), k);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("from_marked produced an inconsistent state: ") +
                           e.what());
  }
}

std::vector<Token> marked_to_word1(const MarkedPermutation& m) {
  std::vector<Cycle> rest;
  for (const auto& c : m.base().cycles()) {
    if (m.mark() && c.size() == 1 && c.front() == *m.mark()) continue;
    rest.push_back(c);
  }
  std::vector<Token> toks;
  for (int v : fundamental(CycleForm::from_cycles(std::move(rest)))) {
    toks.push_back(number_token(v));
  }
  toks.push_back(m.mark() ? circled_token(*m.mark()) : empty_circle_token());
  return toks;
}

std::vector<ColoredPermutation> enumerate_C(int d, int k, int j) {
  check_params(d, k);
  if (j < 0 || j > d) throw std::invalid_argument("j out of range");
  if (d > 8) throw std::domain_error("enumerate_C guard: d <= 8 for exhaustive modes");
  std::vector<std::pair<std::string, ColoredPermutation>> items;
  std::vector<int> perm(d + 1);
  for (int i = 0; i <= d; ++i) perm[i] = i + 1;
  do {
    auto cycles = CycleForm::from_cycles(cycle_decomposition(perm)).cycles();
    if (static_cast<int>(cycles.size()) != j + 1) continue;
    std::vector<int> colored_idx;
    bool ok = true;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (cycles[i].front() <= k) {
        if (cycles[i].size() % 2 == 0) {
          ok = false;
          break;
        }
        colored_idx.push_back(static_cast<int>(i));
      }
    }
    if (!ok) continue;
    const int c = static_cast<int>(colored_idx.size());
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
      std::vector<ColoredCycle> ccs;
      ccs.reserve(cycles.size());
      for (const auto& cyc : cycles) ccs.push_back({cyc, Color::None});
      for (int t = 0; t < c; ++t) {
        ccs[colored_idx[t]].color = (mask >> t & 1u) ? Color::Blue : Color::Red;
      }
      auto p = ColoredPermutation::validated(std::move(ccs), d, k);
      items.emplace_back(p.str(), std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ColoredPermutation> out;
  out.reserve(items.size());
  for (auto& it : items) out.push_back(std::move(it.second));
  return out;
}

std::vector<ColoredPermutation> enumerate_C_all(int d, int k) {
  std::vector<ColoredPermutation> out;
  for (int j = 0; j <= d; ++j) {
    auto part = enumerate_C(d, k, j);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Int> count_C_by_j(int d, int k) {
  check_params(d, k);
  if (d > 8) throw std::domain_error("enumeration guard: d <= 8 for exhaustive modes");
  std::vector<Int> counts(d + 1, Int(0));
  std::vector<int> perm(d + 1);
  for (int i = 0; i <= d; ++i) perm[i] = i + 1;
  do {
    auto raw = cycle_decomposition(perm);
    int c = 0;
    bool ok = true;
    for (const auto& cyc : raw) {
      int mx = *std::max_element(cyc.begin(), cyc.end());
      if (mx <= k) {
        if (cyc.size() % 2 == 0) {
          ok = false;
          break;
        }
        ++c;
      }
    }
    if (!ok) continue;
    counts[raw.size() - 1] += Int(1) << c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

std::vector<MarkedPermutation> enumerate_marked(int d, int k) {
  check_params(d, k);
  if (d > 8) throw std::domain_error("enumeration guard: d <= 8 for exhaustive modes");
  std::vector<std::pair<std::string, MarkedPermutation>> items;
  std::vector<int> perm(d + 1);
  for (int i = 0; i <= d; ++i) perm[i] = i + 1;
  do {
    auto base = CycleForm::from_cycles(cycle_decomposition(perm));
    auto m = MarkedPermutation::validated(base, std::nullopt, d, k);
    items.emplace_back(m.str(), std::move(m));
    for (const auto& c : base.cycles()) {
      if (c.size() == 1 && c.front() <= k) {
        auto mm = MarkedPermutation::validated(base, c.front(), d, k);
        items.emplace_back(mm.str(), std::move(mm));
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MarkedPermutation> out;
  out.reserve(items.size());
  for (auto& it : items) out.push_back(std::move(it.second));
  return out;
}

Int count_marked(int d, int k) {
  check_params(d, k);
  if (d > 8) throw std::domain_error("enumeration guard: d <= 8 for exhaustive modes");
  Int count = 0;
  std::vector<int> perm(d + 1);
  for (int i = 0; i <= d; ++i) perm[i] = i + 1;
  do {
    int marks = 0;
    for (int v = 1; v <= k; ++v) {
      if (perm[v - 1] == v) ++marks;
    }
    count += 1 + marks;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

SignedCensus signed_census_serial(int d, int k) {
  check_params(d, k);
  if (d > 10) throw std::domain_error("signed_census guard: d <= 10");
  CensusAccumulator acc(d);
  std::vector<int> perm(d + 1);
  for (int i = 0; i <= d; ++i) perm[i] = i + 1;
  do {
    census_one(perm, k, acc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return census_to_result(acc, d);
}

SignedCensus signed_census(int d, int k) {
  check_params(d, k);
  if (d > 10) throw std::domain_error("signed_census guard: d <= 10");
  const int m = d + 1;
  const unsigned long long total = factorial_u64(m);
  // Each chunk unranks its first permutation once and advances with
  // next_permutation from there.
  const int nchunks = static_cast<int>(std::min<unsigned long long>(total, 256));
  CensusAccumulator acc(d);
#pragma omp parallel
  {
    CensusAccumulator local(d);
#pragma omp for schedule(dynamic) nowait
    for (int c = 0; c < nchunks; ++c) {
      const unsigned long long begin = total / nchunks * c + std::min<unsigned long long>(total % nchunks, c);
      const unsigned long long end =
          total / nchunks * (c + 1) + std::min<unsigned long long>(total % nchunks, c + 1);
      auto perm = nth_permutation(m, begin);
      for (unsigned long long r = begin; r < end; ++r) {
        census_one(perm, k, local);
        std::next_permutation(perm.begin(), perm.end());
      }
    }
#pragma omp critical
    acc.merge(local);
  }
  return census_to_result(acc, d);
}

namespace {

struct TaggedCycle {
  Cycle elems;
  std::string tag;
};

std::vector<TaggedCycle> parse_tagged(const std::string& text) {
  std::vector<TaggedCycle> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle form");
    ++i;
    TaggedCycle tc;
    skip_ws();
    while (i < text.size() && text[i] != ')' && text[i] != ':') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected integer in cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      tc.elems.push_back(v);
      skip_ws();
    }
    if (i < text.size() && text[i] == ':') {
      ++i;
      while (i < text.size() && text[i] != ')') {
        tc.tag += text[i];
        ++i;
      }
    }
    if (i == text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    if (tc.elems.empty()) throw std::invalid_argument("empty cycle in input");
    out.push_back(std::move(tc));
    skip_ws();
  }
  return out;
}

}  // namespace

std::vector<ColoredCycle> parse_colored_cycles(const std::string& text) {
  std::vector<ColoredCycle> out;
  for (auto& tc : parse_tagged(text)) {
    Color c;
    if (tc.tag.empty()) {
      c = Color::None;
    } else if (tc.tag == "r") {
      c = Color::Red;
    } else if (tc.tag == "b") {
      c = Color::Blue;
    } else {
      throw std::invalid_argument("unknown color tag: " + tc.tag);
    }
    out.push_back({std::move(tc.elems), c});
  }
  return out;
}

std::pair<std::vector<Cycle>, std::optional<int>> parse_marked_cycles(const std::string& text) {
  std::vector<Cycle> cycles;
  std::optional<int> mark;
  for (auto& tc : parse_tagged(text)) {
    if (tc.tag == "mark") {
      if (tc.elems.size() != 1) throw std::invalid_argument("mark must be a singleton cycle");
      if (mark) throw std::invalid_argument("at most one mark allowed");
      mark = tc.elems.front();
    } else if (!tc.tag.empty()) {
      throw std::invalid_argument("unknown tag: " + tc.tag);
    }
    cycles.push_back(std::move(tc.elems));
  }
  return {std::move(cycles), mark};
}

}  // namespace crossehr
