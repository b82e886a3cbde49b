#include "patree/numeric/integrators.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace patree::numeric {

ButcherTableau::ButcherTableau(std::vector<std::vector<Quad>> a, std::vector<Quad> b)
    : a_(std::move(a)), b_(std::move(b)) {
  const std::size_t s = b_.size();
  if (s == 0) throw DomainError("tableau needs at least one stage");
  if (a_.size() != s) throw DomainError("A must have one row per stage");
  for (std::size_t i = 0; i < s; ++i) {
    if (a_[i].size() != s) throw DomainError("A must be square");
    for (std::size_t j = i; j < s; ++j)
      if (a_[i][j] != 0) throw DomainError("implicit tableaux are not supported");
  }
}

Quad ButcherTableau::c(int i) const {
  Quad s = 0;
  for (const auto& x : a_[static_cast<std::size_t>(i)]) s += x;
  return s;
}

ButcherTableau ButcherTableau::euler() { return ButcherTableau({{Quad(0)}}, {Quad(1)}); }

ButcherTableau ButcherTableau::lrk3_sqrt5() {
  const Quad r5 = sqrt(Quad(5));
  return ButcherTableau({{0, 0, 0}, {(-1 + r5) / 12, 0, 0}, {(-9 - 5 * r5) / 12, (2 + r5) / 2, 0}},
                        {(-7 + 3 * r5) / 2, 0, (9 - 3 * r5) / 2});
}

namespace {

/// expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
/// unary := '-' unary | '+' unary | number | 'sqrt5' | '(' expr ')'.
class CoefficientParser {
 public:
  explicit CoefficientParser(std::string_view s) : s_(s) {}

  Quad parse() {
    Quad v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  Quad expr() {
    Quad v = term();
    for (;;) {
      skip();
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Quad term() {
    Quad v = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Quad d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Quad unary() {
    skip();
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    if (eat('(')) {
      Quad v = expr();
      skip();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s_.substr(pos_, 5) == "sqrt5") {
      pos_ += 5;
      return sqrt(Quad(5));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                s_[pos_] == 'e' || s_[pos_] == 'E' ||
                                ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
                                 (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
      ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return Quad(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("malformed number");
    }
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in coefficient '" + std::string(s_) + "'", 1, static_cast<int>(pos_) + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Quad evaluate_coefficient(std::string_view expr) { return CoefficientParser(expr).parse(); }

ButcherTableau parse_tableau(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  if (tokens.empty()) throw ParseError("empty tableau", 1, 1);
  int s = 0;
  try {
    s = std::stoi(tokens[0]);
  } catch (const std::exception&) {
    throw ParseError("stage count must be an integer", 1, 1);
  }
  if (s < 1) throw ParseError("stage count must be positive", 1, 1);
  const auto need = static_cast<std::size_t>(s * s + s + 1);
  if (tokens.size() != need)
    throw ParseError("expected " + std::to_string(need - 1) + " coefficients, found " +
                         std::to_string(tokens.size() - 1),
                     1, 1);
  std::size_t t = 1;
  std::vector<std::vector<Quad>> a(static_cast<std::size_t>(s));
  for (auto& row : a)
    for (int j = 0; j < s; ++j) row.push_back(evaluate_coefficient(tokens[t++]));
  std::vector<Quad> b;
  for (int j = 0; j < s; ++j) b.push_back(evaluate_coefficient(tokens[t++]));
  return ButcherTableau(std::move(a), std::move(b));
}

ButcherTableau load_tableau(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open tableau file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tableau(ss.str());
}

}  // namespace patree::numeric
