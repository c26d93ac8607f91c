#include "crossehr/bijection.hpp"

#include <map>
#include <stdexcept>

namespace crossehr {

void validate_labels(const LabelAssignment& labels, int j, int n) {
  if (static_cast<int>(labels.targets.size()) != j)
    throw std::invalid_argument("label assignment must have length j = " + std::to_string(j));
  for (int a : labels.targets) {
    if (a < 1 || a > n)
      throw std::invalid_argument("label target out of range [1," + std::to_string(n) + "]");
  }
}

CircledWord bijection_forward(const ColoredPermutation& p, const LabelAssignment& labels, int n) {
  if (p.is_partial()) throw std::invalid_argument("forward requires a full element of C_{d,k}");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  const int d = p.d(), k = p.k(), j = p.j();
  validate_labels(labels, j, n);

  const auto& cycles = p.cycles();
  // The cycle containing d+1 has the largest maximum, so it is last.
  std::vector<Token> toks;
  for (int c = 1; c <= n; ++c) {
    std::vector<ColoredCycle> block;
    for (int i = 0; i < j; ++i) {
      if (labels.targets[i] == c) block.push_back(cycles[i]);
    }
    auto word1 = marked_to_word1(to_marked(ColoredPermutation::partial(std::move(block), k)));
    toks.insert(toks.end(), word1.begin(), word1.end());
  }
  const Cycle& last = cycles.back().elems;
  for (std::size_t t = 1; t < last.size(); ++t) toks.push_back(number_token(last[t]));
  return CircledWord::validated(std::move(toks), d, k, n);
}

BijectionPair bijection_inverse(const CircledWord& w) {
  const int d = w.d(), k = w.k();
  const auto& toks = w.tokens();

  int last_circle = -1;
  for (int i = 0; i < static_cast<int>(toks.size()); ++i) {
    if (toks[i].is_circle()) last_circle = i;
  }

  std::vector<int> suffix{d + 1};
  for (int i = last_circle + 1; i < static_cast<int>(toks.size()); ++i) {
    suffix.push_back(toks[i].value);
  }
  CycleForm last_form = inverse_fundamental(suffix);
  if (last_form.cycle_count() != 1)
    throw std::logic_error("suffix prefixed by d+1 must form a single cycle");

  std::vector<ColoredCycle> all;
  std::map<int, int> block_of;  // leading element -> block index
  int block_idx = 0;
  std::vector<int> nums;
  for (int i = 0; i <= last_circle; ++i) {
    const Token& t = toks[i];
    if (t.kind == Token::Kind::Number) {
      nums.push_back(t.value);
      continue;
    }
    ++block_idx;
    CycleForm base = inverse_fundamental(nums);
    nums.clear();
    std::optional<int> mark;
    if (t.kind == Token::Kind::Circled) {
      mark = t.value;
      auto cs = base.cycles();
      cs.push_back({t.value});
      base = CycleForm::from_cycles(std::move(cs));
    }
    auto colored = from_marked(MarkedPermutation::partial(std::move(base), mark, k));
    for (const auto& cc : colored.cycles()) {
      block_of[cc.elems.front()] = block_idx;
      all.push_back(cc);
    }
  }
  all.push_back({last_form.cycles().front(), Color::None});

  BijectionPair out{ColoredPermutation::validated(std::move(all), d, k), {}};
  const int j = out.perm.j();
  for (int i = 0; i < j; ++i) {
    out.labels.targets.push_back(block_of.at(out.perm.cycles()[i].elems.front()));
  }
  return out;
}

}  // namespace crossehr
