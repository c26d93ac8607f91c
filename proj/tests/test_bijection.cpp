#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "crossehr/bijection.hpp"
#include "crossehr/ehrhart.hpp"

using namespace crossehr;

namespace {

ColoredPermutation full(const std::string& text, int d, int k) {
  return ColoredPermutation::validated(parse_colored_cycles(text), d, k);
}

}  // namespace

TEST_CASE("forward on the big worked example") {
  auto p = full("(4:b)(5 1 3:r)(7:b)(8:r)(9 2 6)", 8, 8);
  LabelAssignment labels{{4, 3, 3, 1}};
  auto w = bijection_forward(p, labels, 4);
  CHECK(w.str() == "[8] o 5 1 7 [3] 4 o 2 6");
  auto back = bijection_inverse(w);
  CHECK(back.perm == p);
  CHECK(back.labels == labels);
}

TEST_CASE("forward on the k = 0 warm-up example") {
  auto p = full("(2)(7 3 5 4)(8 1)(9 6)", 8, 0);
  LabelAssignment labels{{2, 4, 2}};
  auto w = bijection_forward(p, labels, 4);
  CHECK(w.str() == "o 2 8 1 o o 7 3 5 4 o 6");
  auto back = bijection_inverse(w);
  CHECK(back.perm == p);
  CHECK(back.labels == labels);
}

TEST_CASE("degenerate cases") {
  auto p = full("(4 1 2 3)", 3, 2);
  auto w = bijection_forward(p, LabelAssignment{}, 2);
  CHECK(w.str() == "o o 1 2 3");
  auto w0 = bijection_forward(p, LabelAssignment{}, 0);
  CHECK(w0.str() == "1 2 3");
  auto back = bijection_inverse(w0);
  CHECK(back.perm == p);
  CHECK(back.labels.targets.empty());

  // empty suffix: the cycle of d+1 is a singleton
  auto q = full("(2 1 3:r)(4)", 3, 3);
  auto wq = bijection_forward(q, LabelAssignment{{1}}, 1);
  CHECK(wq.str() == "3 2 [1]");
  CHECK(bijection_inverse(wq).perm == q);
}

TEST_CASE("label validation") {
  auto p = full("(2)(3 1)", 2, 0);
  CHECK_THROWS_AS(bijection_forward(p, LabelAssignment{{1, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(bijection_forward(p, LabelAssignment{{3}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(bijection_forward(p, LabelAssignment{}, 2), std::invalid_argument);
}

TEST_CASE("exhaustive round trips and the counting identity") {
  for (int d = 1; d <= 4; ++d) {
    for (int k = 0; k <= d; ++k) {
      for (int n = 0; n <= 3; ++n) {
        // forward over every (p, labels) pair, checking injectivity
        std::set<std::string> images;
        Int pairs = 0;
        for (int j = 0; j <= d; ++j) {
          auto slice = enumerate_C(d, k, j);
          std::vector<int> targets(j, 1);
          if (j > 0 && n == 0) continue;  // [n]^j is empty
          while (true) {
            for (const auto& p : slice) {
              LabelAssignment labels{targets};
              auto w = bijection_forward(p, labels, n);
              images.insert(w.str());
              ++pairs;
              auto back = bijection_inverse(w);
              CHECK(back.perm == p);
              CHECK(back.labels == labels);
            }
            // next assignment in [n]^j
            int t = j - 1;
            while (t >= 0 && targets[t] == n) {
              targets[t] = 1;
              --t;
            }
            if (t < 0) break;
            ++targets[t];
          }
        }
        CHECK(Int(images.size()) == pairs);  // injective
        CHECK(pairs == factorial(d) * P(d, k, n));
        // inverse over every word
        Int words = 0;
        for (const auto& w : enumerate_W(d, k, n)) {
          ++words;
          auto pair = bijection_inverse(w);
          CHECK(bijection_forward(pair.perm, pair.labels, n) == w);
        }
        CHECK(words == pairs);
      }
    }
  }
}

TEST_CASE("suffix of a forward image is a single cycle after prefixing d+1") {
  for (const auto& w : enumerate_W(4, 2, 2)) {
    std::vector<int> suffix{w.d() + 1};
    for (auto it = w.tokens().rbegin(); it != w.tokens().rend() && !it->is_circle(); ++it) {
      suffix.insert(suffix.begin() + 1, it->value);
    }
    CHECK(inverse_fundamental(suffix).cycle_count() == 1);
  }
}
