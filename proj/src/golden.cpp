#include "patree/golden.hpp"

#include "patree/algebra.hpp"
#include "patree/divergence.hpp"
#include "patree/errors.hpp"
#include "patree/expr_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#ifndef PATREE_DATA_DIR
#define PATREE_DATA_DIR "data"
#endif

namespace patree {

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("PATREE_DATA_DIR"); env && *env) return env;
  return PATREE_DATA_DIR;
}

namespace {

/// Groups `name`, `name.d`, `name.div`, `name.skeleton`, `name.d.skeleton`
/// bindings into cases, in file order of the base names.
std::vector<GoldenCase> load_cases(const std::filesystem::path& file, bool need_div) {
  auto bindings = load_pat(file);
  std::map<std::string, const Binding*> by_name;
  std::vector<std::string> order;
  for (const auto& b : bindings) {
    by_name[b.name] = &b;
    if (b.name.find('.') == std::string::npos) order.push_back(b.name);
  }
  std::vector<GoldenCase> out;
  for (const auto& name : order) {
    GoldenCase c;
    c.name = name;
    c.input = by_name[name]->value;
    if (auto it = by_name.find(name + ".d"); it != by_name.end()) c.expected_d = it->second->value;
    if (auto it = by_name.find(name + ".div"); it != by_name.end())
      c.expected_div = it->second->value;
    else if (need_div)
      throw std::runtime_error(file.string() + ": case '" + name + "' has no .div row");
    if (auto it = by_name.find(name + ".skeleton"); it != by_name.end()) c.skeleton = it->second->text;
    if (auto it = by_name.find(name + ".d.skeleton"); it != by_name.end()) c.d_skeleton = it->second->text;
    out.push_back(std::move(c));
  }
  return out;
}

std::string coefficient_token(const Rational& c) { return (c < 0 ? "" : "+") + to_string(c); }

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string first_difference(const Element& got, const Element& want) {
  Element diff = got - want;
  if (diff.is_zero()) return {};
  auto it = diff.begin();
  return "first differing term: " + to_string(Element::monomial(it->second.term, it->second.coeff)) + " (" +
         std::to_string(diff.size()) + " differing)";
}

Report run(const std::vector<GoldenCase>& cases, bool parallel) {
  Report r;
  r.results.resize(cases.size());
  const long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) r.results[i] = verify_case(cases[i]);
  return r;
}

}  // namespace

std::vector<GoldenCase> table1_cases(const std::filesystem::path& dir) { return load_cases(dir / "table1.pat", true); }

std::vector<GoldenCase> appendix_cases(const std::filesystem::path& dir) {
  return load_cases(dir / "appendixA.pat", true);
}

std::vector<GoldenCase> psi_cases(const std::filesystem::path& dir) {
  // Expected divergence is zero; the default-constructed element.
  return load_cases(dir / "psi.pat", false);
}

Element psi(int k, const std::filesystem::path& dir) {
  if (k < 1 || k > 5) throw DomainError("psi index must lie in 1..5, got " + std::to_string(k));
  for (auto& c : psi_cases(dir))
    if (c.name == "psi" + std::to_string(k)) return c.input;
  throw std::runtime_error("psi" + std::to_string(k) + " missing from " + (dir / "psi.pat").string());
}

std::string term_shape(const Term& t, const Rational& coeff) {
  std::vector<int> lens;
  for (const auto& a : t.aromas.factors()) lens.push_back(static_cast<int>(a.entries().size()));
  std::sort(lens.begin(), lens.end());
  std::string s = coefficient_token(coeff) + ":";
  if (lens.empty()) s += "0";
  for (std::size_t i = 0; i < lens.size(); ++i) s += (i ? "." : "") + std::to_string(lens[i]);
  if (t.word && !t.word->is_leaf()) s += "b";
  return s;
}

bool matches_skeleton(const Element& e, const std::string& skeleton) {
  std::multiset<std::string> have;
  for (const auto& [k, entry] : e) have.insert(term_shape(entry.term, entry.coeff));

  std::vector<std::string> coefficient_only, wildcard;
  for (const auto& tok : tokens(skeleton)) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) {
      coefficient_only.push_back(tok);
    } else if (tok.substr(colon + 1) == "*") {
      wildcard.push_back(tok.substr(0, colon));
    } else {
      auto it = have.find(tok);
      if (it == have.end()) return false;
      have.erase(it);
    }
  }
  auto take_by_coefficient = [&](const std::string& coeff) {
    for (auto it = have.begin(); it != have.end(); ++it)
      if (it->substr(0, it->find(':')) == coeff) {
        have.erase(it);
        return true;
      }
    return false;
  };
  for (const auto& c : wildcard)
    if (!take_by_coefficient(c)) return false;
  for (const auto& c : coefficient_only)
    if (!take_by_coefficient(c)) return false;
  return have.empty();
}

CaseResult verify_case(const GoldenCase& c) {
  CaseResult r{c.name, false, {}};
  try {
    if (c.expected_d) {
      Element got = d(c.input);
      if (!equals(got, *c.expected_d)) {
        r.detail = "d mismatch; " + first_difference(got, *c.expected_d);
        return r;
      }
      if (!c.d_skeleton.empty() && !matches_skeleton(got, c.d_skeleton)) {
        r.detail = "d does not match printed coefficients '" + c.d_skeleton + "': " + to_string(got);
        return r;
      }
    }
    Element got = div(c.input);
    if (!equals(got, c.expected_div)) {
      r.detail = "Div mismatch; " + first_difference(got, c.expected_div);
      return r;
    }
    if (!c.skeleton.empty()) {
      // Psi skeletons describe the input; table skeletons describe Div.
      const Element& shaped = c.expected_div.is_zero() ? c.input : got;
      if (!matches_skeleton(shaped, c.skeleton)) {
        r.detail = "shape differs from printed skeleton '" + c.skeleton + "': " + to_string(shaped);
        return r;
      }
    }
    r.passed = true;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  return r;
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
}

Report verify_cases(const std::vector<GoldenCase>& cases) { return run(cases, true); }

Report verify_cases_serial(const std::vector<GoldenCase>& cases) { return run(cases, false); }

Sqrt5Element preprocessor_series(const std::string& name, const std::filesystem::path& dir) {
  static const std::set<std::string> known{"euler3", "lrk4", "euler3c", "lrk4c"};
  if (!known.count(name)) throw DomainError("unknown preprocessor '" + name + "'");
  Sqrt5Element out;
  bool found = false;
  for (const auto& b : load_pat(dir / "preprocessors.pat")) {
    if (b.name == name || b.name == name + ".rational") {
      out.rational = b.value;
      found = true;
    } else if (b.name == name + ".sqrt5") {
      out.sqrt5 = b.value;
    }
  }
  if (!found) throw std::runtime_error("preprocessors.pat: no binding for '" + name + "'");
  return out;
}

Report verify_all(const std::filesystem::path& dir) {
  auto cases = table1_cases(dir);
  auto a = appendix_cases(dir);
  auto p = psi_cases(dir);
  cases.insert(cases.end(), a.begin(), a.end());
  cases.insert(cases.end(), p.begin(), p.end());
  return verify_cases(cases);
}

}  // namespace patree
