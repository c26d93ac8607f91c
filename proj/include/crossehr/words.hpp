#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crossehr/numbers.hpp"

namespace crossehr {

// Alphabet of W_{d,k}(n): plain numbers, circled numbers (value <= k), and
// empty circles. Text grammar: "5", "[5]", "o", space separated.
struct Token {
  enum class Kind { Number = 0, Circled = 1, Empty = 2 };
  Kind kind = Kind::Empty;
  int value = 0;  // 0 for Empty

  bool is_circle() const { return kind != Kind::Number; }
  friend bool operator==(const Token&, const Token&) = default;
  // Enumeration order at a fixed position: Number < Circled < Empty,
  // then by value.
  friend auto operator<=>(const Token& a, const Token& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    return a.value <=> b.value;
  }
};

inline Token number_token(int v) { return {Token::Kind::Number, v}; }
inline Token circled_token(int v) { return {Token::Kind::Circled, v}; }
inline Token empty_circle_token() { return {Token::Kind::Empty, 0}; }

std::string token_str(const Token& t);
std::string word_str(const std::vector<Token>& toks);
std::vector<Token> parse_word(const std::string& text);

// A validated element of W_{d,k}(n): every value 1..d appears exactly once
// (circled or not), circled values are <= k, and there are exactly n circles
// counting both empty and filled ones.
class CircledWord {
 public:
  static CircledWord validated(std::vector<Token> toks, int d, int k, int n);
  /// Infers d (= number of values) and n (= number of circles) from the
  /// tokens; k must be supplied since the word does not determine it.
  static CircledWord validated_infer(std::vector<Token> toks, int k);

  int d() const { return d_; }
  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<Token>& tokens() const { return toks_; }
  std::string str() const { return word_str(toks_); }

  friend bool operator==(const CircledWord&, const CircledWord&) = default;

 private:
  std::vector<Token> toks_;
  int d_ = 0, k_ = 0, n_ = 0;
};

/// Streams every element of W_{d,k}(n) exactly once, in lexicographic order of
/// the token sequence (token order as defined above).
void for_each_word(int d, int k, int n, const std::function<void(const std::vector<Token>&)>& fn);

std::vector<CircledWord> enumerate_W(int d, int k, int n);

/// |W_{d,k}(n)| by enumeration (the stream length, not a closed form).
Int count_W(int d, int k, int n);

// Integer point of the n-th dilate: |x_1|+...+|x_k| + x_{k+1}+...+x_d <= n
// with x_{k+1},...,x_d >= 0.
struct LatticePoint {
  std::vector<int> coords;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

bool lattice_point_valid(const LatticePoint& x, int d, int k, long n);
std::string lattice_point_str(const LatticePoint& x);      // "-1,3,-2"
LatticePoint parse_lattice_point(const std::string& text);

// A row of n balls and d dots; a dot with index <= k may sit inside the ball
// immediately before its gap position, at most one dot per ball.
class BallDotConfig {
 public:
  enum class Item { Ball, Dot, DotInBall };

  static BallDotConfig validated(std::vector<Item> items, int d, int k, int n);

  const std::vector<Item>& items() const { return items_; }
  int d() const { return d_; }
  int k() const { return k_; }
  int n() const { return n_; }
  std::string str() const;  // 'o' ball, '.' dot, '@' dot-in-ball

  friend bool operator==(const BallDotConfig&, const BallDotConfig&) = default;

 private:
  std::vector<Item> items_;
  int d_ = 0, k_ = 0, n_ = 0;
};

/// Gap encoding: |x_i| balls sit strictly between dot i-1 and dot i,
/// and dot i is inside the ball immediately before it iff x_i < 0.
BallDotConfig point_to_balls(const LatticePoint& x, int d, int k, long n);
LatticePoint balls_to_point(const BallDotConfig& c);

/// Brute-force count of valid lattice points over the box
/// [-n,n]^k x [0,n]^(d-k). Desk-scale guard: d <= 8, n <= 8.
/// OpenMP-parallel; count_lattice_points_serial is the single-threaded
/// reference scan kept for testing.
Int count_lattice_points(int d, int k, long n);
Int count_lattice_points_serial(int d, int k, long n);

}  // namespace crossehr
