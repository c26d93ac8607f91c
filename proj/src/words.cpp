#include "crossehr/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace crossehr {

std::string token_str(const Token& t) {
  switch (t.kind) {
    case Token::Kind::Number:
      return std::to_string(t.value);
    case Token::Kind::Circled:
      return "[" + std::to_string(t.value) + "]";
    case Token::Kind::Empty:
      return "o";
  }
  return {};
}

std::string word_str(const std::vector<Token>& toks) {
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += token_str(toks[i]);
  }
  return out;
}

std::vector<Token> parse_word(const std::string& text) {
  std::vector<Token> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "o") {
      out.push_back(empty_circle_token());
    } else if (tok.size() >= 3 && tok.front() == '[' && tok.back() == ']') {
      const std::string inner = tok.substr(1, tok.size() - 2);
      for (char c : inner) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("bad circled token: " + tok);
      }
      out.push_back(circled_token(std::stoi(inner)));
    } else {
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("bad word token: " + tok);
      }
      out.push_back(number_token(std::stoi(tok)));
    }
  }
  return out;
}

CircledWord CircledWord::validated(std::vector<Token> toks, int d, int k, int n) {
  if (d < 1 || k < 0 || k > d || n < 0)
    throw std::invalid_argument("word parameters out of range");
  std::vector<int> count(d + 1, 0);
  int circles = 0;
  for (const Token& t : toks) {
    if (t.kind == Token::Kind::Empty) {
      ++circles;
      continue;
    }
    if (t.value < 1 || t.value > d)
      throw std::invalid_argument("word value out of range: " + std::to_string(t.value));
    if (t.kind == Token::Kind::Circled) {
      if (t.value > k)
        throw std::invalid_argument("circled value exceeds k: " + std::to_string(t.value));
      ++circles;
    }
    ++count[t.value];
  }
  for (int v = 1; v <= d; ++v) {
    if (count[v] == 0) throw std::invalid_argument("missing number: " + std::to_string(v));
    if (count[v] > 1) throw std::invalid_argument("repeated number: " + std::to_string(v));
  }
  if (circles != n)
    throw std::invalid_argument("circle count is " + std::to_string(circles) +
                                ", expected " + std::to_string(n));
  CircledWord w;
  w.toks_ = std::move(toks);
  w.d_ = d;
  w.k_ = k;
  w.n_ = n;
  return w;
}

CircledWord CircledWord::validated_infer(std::vector<Token> toks, int k) {
  int d = 0, n = 0;
  for (const Token& t : toks) {
    if (t.kind != Token::Kind::Empty) ++d;
    if (t.is_circle()) ++n;
  }
  return validated(std::move(toks), d, k, n);
}

namespace {

void word_dfs(int d, int k, std::vector<bool>& used, int values_left, int circles_left,
              std::vector<Token>& cur, const std::function<void(const std::vector<Token>&)>& fn) {
  if (values_left == 0 && circles_left == 0) {
    fn(cur);
    return;
  }
  for (int v = 1; v <= d; ++v) {
    if (used[v]) continue;
    used[v] = true;
    cur.push_back(number_token(v));
    word_dfs(d, k, used, values_left - 1, circles_left, cur, fn);
    cur.pop_back();
    used[v] = false;
  }
  if (circles_left > 0) {
    for (int v = 1; v <= k; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(circled_token(v));
      word_dfs(d, k, used, values_left - 1, circles_left - 1, cur, fn);
      cur.pop_back();
      used[v] = false;
    }
    cur.push_back(empty_circle_token());
    word_dfs(d, k, used, values_left, circles_left - 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_word(int d, int k, int n,
                   const std::function<void(const std::vector<Token>&)>& fn) {
  if (d < 1 || k < 0 || k > d || n < 0)
    throw std::invalid_argument("word parameters out of range");
  std::vector<bool> used(d + 1, false);
  std::vector<Token> cur;
  cur.reserve(static_cast<std::size_t>(d) + n);
  word_dfs(d, k, used, d, n, cur, fn);
}

std::vector<CircledWord> enumerate_W(int d, int k, int n) {
  std::vector<CircledWord> out;
  for_each_word(d, k, n, [&](const std::vector<Token>& toks) {
    out.push_back(CircledWord::validated(toks, d, k, n));
  });
  return out;
}

Int count_W(int d, int k, int n) {
  unsigned long long c = 0;
  for_each_word(d, k, n, [&](const std::vector<Token>&) { ++c; });
  return Int(static_cast<unsigned long>(c));
}

bool lattice_point_valid(const LatticePoint& x, int d, int k, long n) {
  if (static_cast<int>(x.coords.size()) != d) return false;
  long sum = 0;
  for (int i = 0; i < d; ++i) {
    int v = x.coords[i];
    if (i >= k && v < 0) return false;
    sum += std::abs(v);
  }
  return sum <= n;
}

std::string lattice_point_str(const LatticePoint& x) {
  std::string out;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x.coords[i]);
  }
  return out;
}

LatticePoint parse_lattice_point(const std::string& text) {
  LatticePoint p;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::invalid_argument("bad coordinate: " + item);
    p.coords.push_back(v);
  }
  return p;
}

BallDotConfig BallDotConfig::validated(std::vector<Item> items, int d, int k, int n) {
  int balls = 0, dots = 0;
  for (Item it : items) {
    if (it == Item::Ball) {
      ++balls;
    } else {
      ++dots;
      if (it == Item::DotInBall) {
        ++balls;
        if (dots > k)
          throw std::invalid_argument("dot " + std::to_string(dots) +
                                      " may not sit inside a ball (index > k)");
      }
    }
  }
  if (balls != n) throw std::invalid_argument("ball count != n");
  if (dots != d) throw std::invalid_argument("dot count != d");
  BallDotConfig c;
  c.items_ = std::move(items);
  c.d_ = d;
  c.k_ = k;
  c.n_ = n;
  return c;
}

std::string BallDotConfig::str() const {
  std::string out;
  for (Item it : items_) {
    out += (it == Item::Ball) ? 'o' : (it == Item::Dot) ? '.' : '@';
  }
  return out;
}

BallDotConfig point_to_balls(const LatticePoint& x, int d, int k, long n) {
  if (!lattice_point_valid(x, d, k, n))
    throw std::invalid_argument("invalid lattice point for (d,k,n)");
  std::vector<BallDotConfig::Item> items;
  long used = 0;
  for (int i = 0; i < d; ++i) {
    int v = x.coords[i];
    int a = std::abs(v);
    used += a;
    int plain = (v < 0) ? a - 1 : a;
    for (int b = 0; b < plain; ++b) items.push_back(BallDotConfig::Item::Ball);
    items.push_back(v < 0 ? BallDotConfig::Item::DotInBall : BallDotConfig::Item::Dot);
  }
  for (long b = used; b < n; ++b) items.push_back(BallDotConfig::Item::Ball);
  return BallDotConfig::validated(std::move(items), d, k, static_cast<int>(n));
}

LatticePoint balls_to_point(const BallDotConfig& c) {
  LatticePoint p;
  int gap = 0;
  for (BallDotConfig::Item it : c.items()) {
    switch (it) {
      case BallDotConfig::Item::Ball:
        ++gap;
        break;
      case BallDotConfig::Item::Dot:
        p.coords.push_back(gap);
        gap = 0;
        break;
      case BallDotConfig::Item::DotInBall:
        p.coords.push_back(-(gap + 1));
        gap = 0;
        break;
    }
  }
  return p;
}

namespace {

void check_lattice_guard(int d, int k, long n) {
  if (d < 1 || k < 0 || k > d) throw std::invalid_argument("bad (d,k)");
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (d > 8 || n > 8) throw std::domain_error("count_lattice_points guard: d <= 8, n <= 8");
}

// Pruned scan of coordinates [idx..d) with the remaining absolute-sum budget.
unsigned long long count_from(int d, int k, int idx, long budget) {
  if (idx == d) return 1;
  unsigned long long total = 0;
  for (long v = (idx < k) ? -budget : 0; v <= budget; ++v) {
    total += count_from(d, k, idx + 1, budget - std::labs(v));
  }
  return total;
}

}  // namespace

Int count_lattice_points_serial(int d, int k, long n) {
  check_lattice_guard(d, k, n);
  // Literal scan of the full box, kept as the reference implementation.
  std::vector<long> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = (i < k) ? -n : 0;
    hi[i] = n;
  }
  std::vector<long> x(lo);
  unsigned long long count = 0;
  while (true) {
    long sum = 0;
    for (int i = 0; i < d; ++i) sum += std::labs(x[i]);
    if (sum <= n) ++count;
    int i = d - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++x[i];
  }
  return Int(static_cast<unsigned long>(count));
}

Int count_lattice_points(int d, int k, long n) {
  check_lattice_guard(d, k, n);
  // Parallelized over the first (up to two) coordinates; the suffix scan is
  // pruned by the remaining budget. The reduction is exact integer addition.
  const int pre = std::min(d, 2);
  std::vector<std::vector<long>> prefixes;
  {
    std::vector<long> cur;
    std::function<void(int)> gen = [&](int idx) {
      if (idx == pre) {
        prefixes.push_back(cur);
        return;
      }
      for (long v = (idx < k) ? -n : 0; v <= n; ++v) {
        cur.push_back(v);
        gen(idx + 1);
        cur.pop_back();
      }
    };
    gen(0);
  }
  unsigned long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (long long t = 0; t < static_cast<long long>(prefixes.size()); ++t) {
    long budget = n;
    for (long v : prefixes[t]) budget -= std::labs(v);
    if (budget >= 0) total += count_from(d, k, pre, budget);
  }
  return Int(static_cast<unsigned long>(total));
}

}  // namespace crossehr
