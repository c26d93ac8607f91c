// Command-line surface for exact cross-polytope Ehrhart computations:
// coefficient vectors, enumeration of colored permutations and circled words,
// the main bijection and the involutions, and executable identity checks.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "crossehr/bijection.hpp"
#include "crossehr/colored.hpp"
#include "crossehr/ehrhart.hpp"
#include "crossehr/identities.hpp"
#include "crossehr/verify.hpp"
#include "crossehr/words.hpp"

namespace {

using namespace crossehr;
using nlohmann::ordered_json;

constexpr long kEnumerationLimit = 10000000;  // refuse larger outputs

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void check_dk(int d, int k) {
  if (d < 1 || d > 300) throw std::invalid_argument("d must be in [1,300]");
  if (k < 0 || k > d) throw std::invalid_argument("k must be in [0,d]");
}

ordered_json bij_record(const ColoredPermutation& p, const LabelAssignment& labels,
                        const CircledWord& w) {
  ordered_json rec;
  rec["permutation"] = p.str();
  rec["labels"] = labels.targets;
  rec["word"] = w.str();
  return rec;
}

int emit_report(const VerifyReport& r, const std::string& format) {
  std::cout << (format == "json" ? report_json(r) : report_text(r)) << "\n";
  return r.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Ehrhart coefficients of cross-polytopes and pyramids over them, "
               "their colored-permutation models, and the bijections between them"};
  app.require_subcommand(1);

  std::string format = "text";

  // coeffs
  int c_d = 1, c_k = 0;
  std::string c_format = "json";
  auto* cmd_coeffs = app.add_subcommand("coeffs", "Coefficient vector of d! P_{d,k}(n)");
  cmd_coeffs->add_option("--d", c_d)->required();
  cmd_coeffs->add_option("--k", c_k)->required();
  cmd_coeffs->add_option("--format", c_format)->check(CLI::IsMember({"json", "text"}));

  // eval
  int e_d = 1, e_k = 0;
  long e_n = 0;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate P_{d,k}(n) and d! P_{d,k}(n)");
  cmd_eval->add_option("--d", e_d)->required();
  cmd_eval->add_option("--k", e_k)->required();
  cmd_eval->add_option("--n", e_n)->required();
  cmd_eval->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // enumerate C|W
  auto* cmd_enum = app.add_subcommand("enumerate", "Stream objects in canonical order");
  cmd_enum->require_subcommand(1);
  int en_d = 1, en_k = 0, en_j = 0, en_n = 0;
  std::string en_format = "text";
  auto* cmd_enum_c = cmd_enum->add_subcommand("C", "Colored permutations C_{d,k}(j)");
  cmd_enum_c->add_option("--d", en_d)->required();
  cmd_enum_c->add_option("--k", en_k)->required();
  cmd_enum_c->add_option("--j", en_j)->required();
  cmd_enum_c->add_option("--format", en_format)->check(CLI::IsMember({"json", "text"}));
  auto* cmd_enum_w = cmd_enum->add_subcommand("W", "Circled words W_{d,k}(n)");
  cmd_enum_w->add_option("--d", en_d)->required();
  cmd_enum_w->add_option("--k", en_k)->required();
  cmd_enum_w->add_option("--n", en_n)->required();
  cmd_enum_w->add_option("--format", en_format)->check(CLI::IsMember({"json", "text"}));

  // bij forward|inverse
  auto* cmd_bij = app.add_subcommand("bij", "Apply the main bijection");
  cmd_bij->require_subcommand(1);
  std::string b_perm, b_labels, b_word;
  int b_k = -1, b_n = 0;
  auto* cmd_bij_fwd = cmd_bij->add_subcommand("forward", "C_{d,k}(j) x [n]^j -> W_{d,k}(n)");
  cmd_bij_fwd->add_option("--perm", b_perm, "colored cycles, e.g. \"(4:b)(5 1 3:r)(9 2 6)\"")
      ->required();
  cmd_bij_fwd->add_option("--labels", b_labels, "comma separated circle targets, e.g. 4,3,3,1");
  cmd_bij_fwd->add_option("--n", b_n)->required();
  cmd_bij_fwd->add_option("--k", b_k)->required();
  auto* cmd_bij_inv = cmd_bij->add_subcommand("inverse", "W_{d,k}(n) -> C_{d,k}(j) x [n]^j");
  cmd_bij_inv->add_option("--word", b_word, "e.g. \"[8] o 5 1 7 [3] 4 o 2 6\"")->required();
  cmd_bij_inv->add_option("--k", b_k, "defaults to d inferred from the word");

  // involution
  auto* cmd_inv = app.add_subcommand("involution", "Apply one of the involutions");
  cmd_inv->require_subcommand(1);
  std::string i_input;
  int i_k = -1;
  auto* cmd_inv_theorem =
      cmd_inv->add_subcommand("theorem", "Flip the first even colored cycle");
  cmd_inv_theorem->add_option("--input", i_input)->required();
  cmd_inv_theorem->add_option("--k", i_k, "defaults to d");
  cmd_inv_theorem->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  auto* cmd_inv_small =
      cmd_inv->add_subcommand("alt-small-k", "Break/merge the cycles of d and d+1");
  cmd_inv_small->add_option("--input", i_input)->required();
  cmd_inv_small->add_option("--k", i_k)->required();
  cmd_inv_small->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  auto* cmd_inv_eq =
      cmd_inv->add_subcommand("alt-k-eq-d", "Split or merge the red singleton (marked form)");
  cmd_inv_eq->add_option("--input", i_input)->required();
  cmd_inv_eq->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run an identity check; exit 2 on failure");
  cmd_verify->require_subcommand(1);
  int v_d = 1, v_k = 0, v_n = 0, v_dmax = 8, v_jmax = 8;
  std::optional<int> v_j;
  auto add_fmt = [&](CLI::App* c) {
    c->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  };
  auto* v_endpoints = cmd_verify->add_subcommand("endpoints", "c(0) = d!, c(d) = 2^k");
  v_endpoints->add_option("--d", v_d)->required();
  v_endpoints->add_option("--k", v_k)->required();
  add_fmt(v_endpoints);
  auto* v_altsums = cmd_verify->add_subcommand("alt-sums", "Alternating coefficient sums");
  v_altsums->add_option("--d", v_d)->required();
  v_altsums->add_option("--k", v_k)->required();
  add_fmt(v_altsums);
  auto* v_cube = cmd_verify->add_subcommand("cube", "Unit-cube Eulerian identity");
  v_cube->add_option("--d", v_d)->required();
  add_fmt(v_cube);
  auto* v_egf = cmd_verify->add_subcommand("egf", "Exponential generating function for k = d");
  v_egf->add_option("--d-max", v_dmax);
  v_egf->add_option("--j-max", v_jmax);
  add_fmt(v_egf);
  auto* v_theorem = cmd_verify->add_subcommand("theorem", "Coefficients count C_{d,k}(j)");
  v_theorem->add_option("--d", v_d)->required();
  v_theorem->add_option("--k", v_k)->required();
  add_fmt(v_theorem);
  auto* v_remark = cmd_verify->add_subcommand("remark45", "Coefficient differences");
  v_remark->add_option("--d", v_d)->required();
  v_remark->add_option("--k", v_k)->required();
  int v_j_opt = -1;
  v_remark->add_option("--j", v_j_opt);
  add_fmt(v_remark);
  auto* v_words = cmd_verify->add_subcommand("words-count", "|W_{d,k}(n)| = d! P_{d,k}(n)");
  v_words->add_option("--d", v_d)->required();
  v_words->add_option("--k", v_k)->required();
  v_words->add_option("--n", v_n)->required();
  add_fmt(v_words);
  auto* v_lattice = cmd_verify->add_subcommand("lattice", "Lattice count equals P_{d,k}(n)");
  v_lattice->add_option("--d", v_d)->required();
  v_lattice->add_option("--k", v_k)->required();
  v_lattice->add_option("--n", v_n)->required();
  add_fmt(v_lattice);

  // oracle
  auto* cmd_oracle = app.add_subcommand("oracle", "Independent brute-force oracles");
  cmd_oracle->require_subcommand(1);
  int o_d = 1, o_k = 0;
  long o_n = 0;
  auto* cmd_oracle_lattice = cmd_oracle->add_subcommand("lattice", "Box scan lattice count");
  cmd_oracle_lattice->add_option("--d", o_d)->required();
  cmd_oracle_lattice->add_option("--k", o_k)->required();
  cmd_oracle_lattice->add_option("--n", o_n)->required();
  cmd_oracle_lattice->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_coeffs->parsed()) {
      check_dk(c_d, c_k);
      auto cv = coeffs(c_d, c_k);
      if (c_format == "json") {
        ordered_json arr = ordered_json::array();
        for (const Int& v : cv.c()) arr.push_back(v.get_str());
        std::cout << arr.dump() << "\n";
      } else {
        std::cout << "c_{" << c_d << "," << c_k << "} = " << cv.str() << "\n";
      }
      return 0;
    }

    if (cmd_eval->parsed()) {
      check_dk(e_d, e_k);
      Int value = P(e_d, e_k, e_n);
      Int scaled = factorial(e_d) * value;
      if (format == "json") {
        ordered_json out;
        out["d"] = e_d;
        out["k"] = e_k;
        out["n"] = e_n;
        out["P"] = value.get_str();
        out["scaled"] = scaled.get_str();
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "P_{" << e_d << "," << e_k << "}(" << e_n << ") = " << value << "\n";
        std::cout << e_d << "! * P = " << scaled << "\n";
      }
      return 0;
    }

    if (cmd_enum_c->parsed()) {
      check_dk(en_d, en_k);
      if (en_j < 0 || en_j > en_d) throw std::invalid_argument("j must be in [0,d]");
      if (en_d > 8) throw std::invalid_argument("enumeration guard: d <= 8 for exhaustive modes");
      if (coeffs(en_d, en_k).at(en_j) > kEnumerationLimit)
        throw std::invalid_argument("enumeration guard: output exceeds 10^7 objects");
      for (const auto& p : enumerate_C(en_d, en_k, en_j)) {
        if (en_format == "json") {
          std::cout << ordered_json(p.str()).dump() << "\n";
        } else {
          std::cout << p.str() << "\n";
        }
      }
      return 0;
    }

    if (cmd_enum_w->parsed()) {
      check_dk(en_d, en_k);
      if (en_n < 0) throw std::invalid_argument("n must be >= 0");
      if (factorial(en_d) * P(en_d, en_k, en_n) > kEnumerationLimit)
        throw std::invalid_argument("enumeration guard: output exceeds 10^7 objects");
      for_each_word(en_d, en_k, en_n, [&](const std::vector<Token>& toks) {
        if (en_format == "json") {
          std::cout << ordered_json(word_str(toks)).dump() << "\n";
        } else {
          std::cout << word_str(toks) << "\n";
        }
      });
      return 0;
    }

    if (cmd_bij_fwd->parsed()) {
      auto raw = parse_colored_cycles(b_perm);
      std::size_t size = 0;
      for (const auto& cc : raw) size += cc.elems.size();
      const int d = static_cast<int>(size) - 1;
      check_dk(d, b_k);
      auto p = ColoredPermutation::validated(std::move(raw), d, b_k);
      LabelAssignment labels{parse_int_list(b_labels)};
      auto w = bijection_forward(p, labels, b_n);
      std::cout << bij_record(p, labels, w).dump() << "\n";
      return 0;
    }

    if (cmd_bij_inv->parsed()) {
      auto toks = parse_word(b_word);
      int d = 0;
      for (const Token& t : toks) {
        if (t.kind != Token::Kind::Empty) ++d;
      }
      const int k = (b_k >= 0) ? b_k : d;
      auto w = CircledWord::validated_infer(std::move(toks), k);
      auto pair = bijection_inverse(w);
      std::cout << bij_record(pair.perm, pair.labels, w).dump() << "\n";
      return 0;
    }

    auto print_image = [&](const std::string& input, const std::string& image) {
      if (format == "json") {
        ordered_json out;
        out["input"] = input;
        out["image"] = image;
        std::cout << out.dump() << "\n";
      } else {
        std::cout << image << "\n";
      }
    };

    if (cmd_inv_theorem->parsed()) {
      auto raw = parse_colored_cycles(i_input);
      std::size_t size = 0;
      for (const auto& cc : raw) size += cc.elems.size();
      const int d = static_cast<int>(size) - 1;
      const int k = (i_k >= 0) ? i_k : d;
      check_dk(d, k);
      auto p = SignedColoredPermutation::validated(std::move(raw), d, k);
      print_image(p.str(), theorem_involution(p).str());
      return 0;
    }

    if (cmd_inv_small->parsed()) {
      auto raw = parse_colored_cycles(i_input);
      std::size_t size = 0;
      int max_elem = 0;
      for (const auto& cc : raw) {
        size += cc.elems.size();
        for (int v : cc.elems) max_elem = std::max(max_elem, v);
      }
      const int d = max_elem - 1;
      check_dk(d, i_k);
      // Ground sets with gaps (partial objects) are accepted; the involution
      // only needs d and d+1 present.
      auto p = (static_cast<int>(size) == max_elem)
                   ? ColoredPermutation::validated(std::move(raw), d, i_k)
                   : ColoredPermutation::partial(std::move(raw), i_k);
      print_image(p.str(), alt_involution_small_k(p).str());
      return 0;
    }

    if (cmd_inv_eq->parsed()) {
      auto [cycles, mark] = parse_marked_cycles(i_input);
      std::size_t size = 0;
      for (const auto& c : cycles) size += c.size();
      const int d = static_cast<int>(size) - 1;
      auto m = MarkedPermutation::validated(CycleForm::from_cycles(std::move(cycles)), mark, d, d);
      print_image(m.str(), alt_involution_k_eq_d(m).str());
      return 0;
    }

    if (v_endpoints->parsed()) {
      check_dk(v_d, v_k);
      return emit_report(check_endpoints(v_d, v_k), format);
    }
    if (v_altsums->parsed()) {
      check_dk(v_d, v_k);
      return emit_report(verify_alternating_sums(v_d, v_k), format);
    }
    if (v_cube->parsed()) {
      if (v_d < 1 || v_d > 100) throw std::invalid_argument("d must be in [1,100]");
      return emit_report(cube_identity_check(v_d), format);
    }
    if (v_egf->parsed()) {
      return emit_report(egf_check(v_dmax, v_jmax), format);
    }
    if (v_theorem->parsed()) {
      check_dk(v_d, v_k);
      return emit_report(verify_theorem(v_d, v_k), format);
    }
    if (v_remark->parsed()) {
      check_dk(v_d, v_k);
      if (v_j_opt >= 0) v_j = v_j_opt;
      return emit_report(verify_remark45(v_d, v_k, v_j), format);
    }
    if (v_words->parsed()) {
      check_dk(v_d, v_k);
      return emit_report(verify_words_count(v_d, v_k, v_n), format);
    }
    if (v_lattice->parsed()) {
      check_dk(v_d, v_k);
      return emit_report(verify_lattice(v_d, v_k, v_n), format);
    }

    if (cmd_oracle_lattice->parsed()) {
      check_dk(o_d, o_k);
      Int count = count_lattice_points(o_d, o_k, o_n);
      if (format == "json") {
        ordered_json out;
        out["count"] = count.get_str();
        std::cout << out.dump() << "\n";
      } else {
        std::cout << count << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
