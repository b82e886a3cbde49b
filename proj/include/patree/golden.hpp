#pragma once

#include "patree/element.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace patree {

struct GoldenCase {
  std::string name;
  Element input;
  std::optional<Element> expected_d;
  /// Zero for the divergence-free combinations.
  Element expected_div;
  /// Printed shape of the Div column (Psi cases: of the input itself).
  std::string skeleton;
  /// Printed coefficients of the d column, when the table has one.
  std::string d_skeleton;
};

/// Directory holding the `.pat` files: $PATREE_DATA_DIR when set, else the
/// source tree's data/ directory recorded at build time.
std::filesystem::path default_data_dir();

/// Throws std::runtime_error when a file is missing or a row is incomplete,
/// ParseError when it does not parse.
std::vector<GoldenCase> table1_cases(const std::filesystem::path& dir = default_data_dir());
std::vector<GoldenCase> appendix_cases(const std::filesystem::path& dir = default_data_dir());
std::vector<GoldenCase> psi_cases(const std::filesystem::path& dir = default_data_dir());

/// Psi_k for k in 1..5; DomainError otherwise.
Element psi(int k, const std::filesystem::path& dir = default_data_dir());

/// Shape signature of one term: signed coefficient, ':', the sorted entry
/// counts of its aromas joined by '.' ("0" without aroma), and a trailing
/// 'b' when the word is a commutator. E.g. `-2:1.2`, `+1:0b`.
std::string term_shape(const Term& t, const Rational& coeff);

/// Multiset comparison of the element's term shapes against a
/// whitespace-separated skeleton. A '*' after the colon matches any shape
/// with that coefficient. Tokens without a colon compare coefficients only.
bool matches_skeleton(const Element& e, const std::string& skeleton);

struct CaseResult {
  std::string name;
  bool passed = false;
  /// Empty on success; otherwise the first failing check and the first
  /// differing term in expression syntax.
  std::string detail;
};

struct Report {
  std::vector<CaseResult> results;
  bool all_passed() const;
  std::size_t failures() const;
};

CaseResult verify_case(const GoldenCase& c);
/// Cases are checked in parallel; results keep input order.
Report verify_cases(const std::vector<GoldenCase>& cases);
/// Single-threaded reference of verify_cases.
Report verify_cases_serial(const std::vector<GoldenCase>& cases);

/// Element over Q(√5): rational + √5 · sqrt5.
struct Sqrt5Element {
  Element rational;
  Element sqrt5;
};

/// Preprocessed field h F̂_h as an aromatic series: euler3, lrk4 (published)
/// or euler3c, lrk4c (corrected). DomainError for other names.
Sqrt5Element preprocessor_series(const std::string& name, const std::filesystem::path& dir = default_data_dir());

/// Table 1, Appendix A and the Psi combinations.
Report verify_all(const std::filesystem::path& dir = default_data_dir());

}  // namespace patree
