#include "patree/divergence.hpp"
#include "patree/golden.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace patree;

namespace {
std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("Table 1") {
  auto cases = table1_cases();
  REQUIRE(cases.size() == 11);
  CHECK(cases.front().input == parse_element("o"));
  CHECK(cases.front().expected_div == parse_element("A[(x -> o)]"));
  for (const auto& c : cases) {
    CHECK(c.input.homogeneous_order() <= 3);
    CHECK(c.expected_d.has_value());
  }
  auto r = verify_cases(cases);
  for (const auto& c : r.results) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("Appendix A") {
  auto cases = appendix_cases();
  REQUIRE(cases.size() == 27);
  CHECK(cases.front().expected_div.size() == 4);
  bool found_nested = false;
  for (const auto& c : cases) {
    int minus_two = 0;
    for (const auto& [k, e] : c.expected_div) minus_two += e.coeff == -2;
    if (c.expected_div.size() == 12 && minus_two >= 2) found_nested = true;
  }
  CHECK(found_nested);
  auto r = verify_cases(cases);
  for (const auto& c : r.results) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("Psi combinations are divergence-free") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(div(psi(k)).is_zero());
    CHECK(psi(k).homogeneous_order() == (k == 1 ? 3 : 4));
  }
  CHECK_THROWS_AS(psi(0), DomainError);
  CHECK_THROWS_AS(psi(6), DomainError);
  CHECK(parse_element("o + [o, o]") == parse_element("o"));
}

TEST_CASE("golden data round-trips through the printer") {
  for (const auto& file : {"table1.pat", "appendixA.pat", "psi.pat", "preprocessors.pat"})
    for (const auto& b : load_pat(default_data_dir() / file))
      if (b.name.find("skeleton") == std::string::npos) CHECK(parse_element(to_string(b.value)) == b.value);
}

TEST_CASE("verification is deterministic and parallel matches serial") {
  auto cases = table1_cases();
  auto extra = appendix_cases();
  cases.insert(cases.end(), extra.begin(), extra.end());
  auto a = verify_cases(cases), b = verify_cases_serial(cases), c = verify_cases(cases);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].name == b.results[i].name);
    CHECK(a.results[i].passed == b.results[i].passed);
    CHECK(a.results[i].detail == c.results[i].detail);
  }
  CHECK(verify_all().all_passed());
}

TEST_CASE("a flipped sign fails exactly one case") {
  auto tmp = std::filesystem::temp_directory_path() / "patree_fault";
  std::filesystem::create_directories(tmp);
  for (const auto& f : {"table1.pat", "appendixA.pat", "psi.pat"})
    std::filesystem::copy_file(default_data_dir() / f, tmp / f, std::filesystem::copy_options::overwrite_existing);
  std::string text = read(tmp / "appendixA.pat");
  // Flip the first '+' of the first .div row.
  auto row = text.find(".div =");
  REQUIRE(row != std::string::npos);
  auto plus = text.find(" + ", row);
  REQUIRE(plus != std::string::npos);
  text[plus + 1] = '-';
  std::ofstream(tmp / "appendixA.pat") << text;
  auto r = verify_all(tmp);
  CHECK(r.failures() == 1);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("missing data is an error") {
  CHECK_THROWS(table1_cases(std::filesystem::temp_directory_path() / "patree_no_such_dir"));
}

TEST_CASE("skeleton shapes") {
  Element e = parse_element("A[(x -> o)] A[(x -> o), (x -> o)] o - 2*[o, (o -> o)]");
  CHECK(matches_skeleton(e, "+1:1.2 -2:0b"));
  CHECK(matches_skeleton(e, "-2:0b +1:*"));
  CHECK_FALSE(matches_skeleton(e, "+1:1.2 +2:0b"));
}

TEST_CASE("preprocessor series load") {
  for (const char* n : {"euler3", "lrk4", "euler3c", "lrk4c"}) {
    auto s = preprocessor_series(n);
    CHECK_FALSE(s.rational.is_zero());
  }
  CHECK(preprocessor_series("lrk4").sqrt5.size() == 3);
  CHECK_THROWS_AS(preprocessor_series("rk4"), DomainError);
}
