#include "crossehr/numbers.hpp"

#include <stdexcept>
#include <vector>

namespace crossehr {

namespace {

// Memoized triangles grown on demand, one instance per thread.

class FactorialTable {
 public:
  const Int& at(int m) {
    while (static_cast<int>(vals_.size()) <= m) {
      vals_.push_back(vals_.back() * static_cast<int>(vals_.size()));
    }
    return vals_[m];
  }

 private:
  std::vector<Int> vals_{1};
};

// Unsigned triangle |s(m,i)| via |s(m,i)| = |s(m-1,i-1)| + (m-1)|s(m-1,i)|.
class StirlingTable {
 public:
  const Int& at(int m, int i) {
    while (static_cast<int>(rows_.size()) <= m) {
      int n = static_cast<int>(rows_.size());
      std::vector<Int> row(n + 1, 0);
      for (int c = 1; c <= n; ++c) {
        row[c] = rows_[n - 1][c - 1];
        if (c < n) row[c] += (n - 1) * rows_[n - 1][c];
      }
      if (n == 0) row[0] = 1;
      rows_.push_back(std::move(row));
    }
    return rows_[m][i];
  }

 private:
  std::vector<std::vector<Int>> rows_{{Int(1)}};
};

// A(d,i) = (i+1)A(d-1,i) + (d-i)A(d-1,i-1), seeded with A(0,0) = 1.
class EulerianTable {
 public:
  const Int& at(int d, int i) {
    while (static_cast<int>(rows_.size()) <= d) {
      int n = static_cast<int>(rows_.size());
      std::vector<Int> row(n, 0);
      for (int c = 0; c < n; ++c) {
        Int left = (c < static_cast<int>(rows_[n - 1].size())) ? rows_[n - 1][c] : Int(0);
        Int right = (c >= 1 && c - 1 < static_cast<int>(rows_[n - 1].size()))
                        ? rows_[n - 1][c - 1]
                        : Int(0);
        row[c] = (c + 1) * left + (n - c) * right;
      }
      rows_.push_back(std::move(row));
    }
    return rows_[d][i];
  }

 private:
  std::vector<std::vector<Int>> rows_{{Int(1)}};
};

}  // namespace

Int factorial(int m) {
  if (m < 0) throw std::invalid_argument("factorial: negative argument");
  thread_local FactorialTable table;
  return table.at(m);
}

Int binomial(int m, int r) {
  if (m < 0) throw std::invalid_argument("binomial: negative m");
  if (r < 0 || r > m) return 0;
  return factorial(m) / (factorial(r) * factorial(m - r));
}

Int binomial_big(const Int& m, int r) {
  if (m < 0) throw std::invalid_argument("binomial_big: negative m");
  if (r < 0) return 0;
  Int num = 1;
  for (int t = 0; t < r; ++t) num *= m - t;
  return num / factorial(r);
}

Int stirling_first_unsigned(int m, int i) {
  if (m < 0) throw std::invalid_argument("stirling_first_unsigned: negative m");
  if (i < 0 || i > m) return 0;
  thread_local StirlingTable table;
  return table.at(m, i);
}

Int stirling_first_signed(int m, int i) {
  Int v = stirling_first_unsigned(m, i);
  return ((m - i) % 2 == 0) ? v : -v;
}

Int eulerian(int d, int i) {
  if (d < 1) throw std::invalid_argument("eulerian: d must be >= 1");
  if (i < 0 || i >= d) return 0;
  thread_local EulerianTable table;
  return table.at(d, i);
}

Int e_coefficient(int d, int i, int j) {
  if (d < 1 || i < 0 || i > d || j < 0 || j > d) {
    throw std::invalid_argument("e_coefficient: arguments out of range");
  }
  Int sum = 0;
  for (int l = 0; l <= d - i; ++l) {
    sum += stirling_first_unsigned(d - i + 1, l + 1) * stirling_first_signed(i, j - l);
  }
  return sum;
}

}  // namespace crossehr
