#include "crossehr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crossehr {

Cycle rotate_max_first(Cycle c) {
  if (c.empty()) throw std::invalid_argument("empty cycle");
  auto it = std::max_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  return c;
}

CycleForm CycleForm::from_cycles(std::vector<Cycle> cycles) {
  CycleForm out;
  std::vector<int> seen;
  for (auto& c : cycles) {
    if (c.empty()) throw std::invalid_argument("empty cycle");
    for (int v : c) {
      if (v <= 0) throw std::invalid_argument("cycle elements must be positive");
      seen.push_back(v);
    }
    out.cycles_.push_back(rotate_max_first(std::move(c)));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("duplicate element in cycles");
  }
  std::sort(out.cycles_.begin(), out.cycles_.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
  return out;
}

std::size_t CycleForm::element_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles_) n += c.size();
  return n;
}

std::vector<int> CycleForm::ground_set() const {
  std::vector<int> out;
  for (const auto& c : cycles_) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool CycleForm::is_permutation_of(int m) const {
  auto g = ground_set();
  if (static_cast<int>(g.size()) != m) return false;
  for (int i = 0; i < m; ++i) {
    if (g[i] != i + 1) return false;
  }
  return true;
}

bool CycleForm::contains(int v) const {
  for (const auto& c : cycles_) {
    if (std::find(c.begin(), c.end(), v) != c.end()) return true;
  }
  return false;
}

std::string CycleForm::str() const {
  std::ostringstream os;
  for (const auto& c : cycles_) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

std::vector<int> fundamental(const CycleForm& p) {
  std::vector<int> out;
  for (const auto& c : p.cycles()) out.insert(out.end(), c.begin(), c.end());
  return out;
}

CycleForm inverse_fundamental(std::span<const int> word) {
  std::vector<Cycle> cycles;
  int running_max = 0;
  for (int v : word) {
    if (v > running_max) {
      cycles.emplace_back();
      running_max = v;
    }
    cycles.back().push_back(v);
  }
  return CycleForm::from_cycles(std::move(cycles));
}

std::vector<Cycle> parse_cycles(const std::string& text) {
  std::vector<Cycle> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle form");
    ++i;
    Cycle c;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("expected integer in cycle");
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      c.push_back(v);
      skip_ws();
    }
    if (i == text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    if (c.empty()) throw std::invalid_argument("empty cycle in input");
    out.push_back(std::move(c));
    skip_ws();
  }
  return out;
}

CycleForm parse_cycle_form(const std::string& text) {
  return CycleForm::from_cycles(parse_cycles(text));
}

}  // namespace crossehr
