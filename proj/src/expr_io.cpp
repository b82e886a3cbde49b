#include "patree/expr_io.hpp"

#include "patree/algebra.hpp"
#include "patree/errors.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace patree {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const DecorationSet* colours, int line = 1)
      : src_(src), colours_(colours), line_(line) {}

  Element element() {
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
    Element out;
    out.add(term(), sign);
    for (;;) {
      skip();
      if (peek() != '+' && peek() != '-') break;
      sign = get() == '-' ? -1 : 1;
      out.add(term(), sign);
    }
    return out;
  }

  Tree tree() {
    skip();
    if (peek() == 'o') {
      get();
      return Tree::leaf(decoration());
    }
    expect('(');
    std::vector<Tree> slots;
    for (;;) {
      skip();
      if (peek() == '-') break;
      if (peek() == '?') {
        get();
        slots.push_back(Tree::free_edge());
      } else if (peek() == 'x') {
        get();
        slots.push_back(Tree::crossed_edge());
      } else if (peek() == 'o' || peek() == '(') {
        slots.push_back(tree());
      } else {
        fail("expected a child, '?', 'x' or '->'");
      }
    }
    expect('-');
    expect('>');
    skip();
    expect('o');
    Decoration root = decoration();
    expect(')');
    return Tree::attach(std::move(slots), std::move(root));
  }

  void finish() {
    skip();
    if (pos_ != src_.size()) fail("unexpected trailing input");
  }

 private:
  Element term() {
    skip();
    auto start = position();
    Element out;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c = rational();
      skip();
      if (peek() != '*') return Element::scalar(MultiAroma::unit(), c);
      get();
      out = c * aromatic();
    } else {
      out = aromatic();
    }
    for (const auto& [k, e] : out)
      if (e.term.free_edge_count() > 1) throw ParseError("several free edges in one term", start.first, start.second);
    return out;
  }

  Element aromatic() {
    std::vector<Aroma> aromas;
    for (;;) {
      skip();
      if (peek() != 'A') break;
      aromas.push_back(aroma());
    }
    MultiAroma m(std::move(aromas));
    skip();
    if (peek() == 'o' || peek() == '(') return Element::monomial(Term{std::move(m), LieWord::leaf(tree())});
    if (peek() == '[') {
      get();
      Element a = element();
      skip();
      expect(',');
      Element b = element();
      skip();
      expect(']');
      return m * bracket(a, b);
    }
    if (m.is_unit()) fail("expected a term");
    return Element::scalar(std::move(m));
  }

  Aroma aroma() {
    expect('A');
    expect('[');
    std::vector<Tree> entries;
    entries.push_back(tree());
    for (;;) {
      skip();
      if (peek() != ',') break;
      get();
      entries.push_back(tree());
    }
    skip();
    expect(']');
    return Aroma::canonicalize(std::move(entries));
  }

  Rational rational() {
    std::string text = digits();
    if (peek() == '/') {
      get();
      text += '/';
      text += digits();
    }
    try {
      return parse_rational(text);
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    if (s.empty()) fail("expected digits");
    return s;
  }

  Decoration decoration() {
    if (peek() != ':') {
      Decoration d{};
      if (colours_) colours_->check(d);
      return d;
    }
    get();
    std::string label;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') label += get();
    if (label.empty()) fail("expected a decoration label");
    Decoration d{label};
    if (colours_) colours_->check(d);
    return d;
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char get() {
    if (pos_ >= src_.size()) fail("unexpected end of input");
    return src_[pos_++];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::pair<int, int> position() const {
    int line = line_, col = 1;
    for (std::size_t i = 0; i < pos_; ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }
  [[noreturn]] void fail(const std::string& what) const {
    auto [l, c] = position();
    throw ParseError(what, l, c);
  }

  std::string_view src_;
  const DecorationSet* colours_;
  int line_;
  std::size_t pos_ = 0;
};

std::string decoration_suffix(const Decoration& d) { return d.label.empty() ? "" : ":" + d.label; }

}  // namespace

Element parse_element(std::string_view src, const DecorationSet* colours) {
  Parser p(src, colours);
  Element e = p.element();
  p.finish();
  return e;
}

Tree parse_tree(std::string_view src, const DecorationSet* colours) {
  Parser p(src, colours);
  Tree t = p.tree();
  p.finish();
  return t;
}

std::string to_string(const Tree& t) {
  switch (t.kind()) {
    case Tree::Kind::FreeEdge:
      return "?";
    case Tree::Kind::CrossedEdge:
      return "x";
    case Tree::Kind::Vertex:
      break;
  }
  if (t.children().empty()) return "o" + decoration_suffix(t.decoration());
  std::string s = "(";
  for (const auto& c : t.children()) s += to_string(c) + " ";
  return s + "-> o" + decoration_suffix(t.decoration()) + ")";
}

std::string to_string(const Aroma& a) {
  std::string s = "A[";
  for (std::size_t i = 0; i < a.entries().size(); ++i) s += (i ? ", " : "") + to_string(a.entries()[i]);
  return s + "]";
}

std::string to_string(const MultiAroma& a) {
  std::string s;
  for (const auto& f : a.factors()) s += (s.empty() ? "" : " ") + to_string(f);
  return s.empty() ? "1" : s;
}

std::string to_string(const LieWord& w) {
  if (w.is_leaf()) return to_string(w.tree());
  return "[" + to_string(w.left()) + ", " + to_string(w.right()) + "]";
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [key, entry] : e) {
    const Term& t = entry.term;
    Rational c = entry.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";

    std::string body;
    if (!t.aromas.is_unit()) body = to_string(t.aromas);
    if (t.word) body += (body.empty() ? "" : " ") + to_string(*t.word);
    if (body.empty())
      s += to_string(c);
    else if (c == 1)
      s += body;
    else
      s += to_string(c) + "*" + body;
  }
  return s;
}

std::vector<Binding> parse_pat(std::string_view src) {
  std::vector<Binding> out;
  std::set<std::string> seen;
  std::istringstream in{std::string(src)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string text = raw.substr(0, hash);
    auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'name = element'", line, static_cast<int>(first) + 1);
    std::string name = text.substr(first, eq - first);
    name.erase(name.find_last_not_of(" \t") + 1);
    if (name.empty()) throw ParseError("empty binding name", line, static_cast<int>(first) + 1);
    if (!seen.insert(name).second) throw ParseError("duplicate binding '" + name + "'", line, 1);
    std::string rhs = text.substr(eq + 1);
    auto a = rhs.find_first_not_of(" \t\r");
    auto b = rhs.find_last_not_of(" \t\r");
    rhs = a == std::string::npos ? "" : rhs.substr(a, b - a + 1);

    Binding binding{name, {}, rhs, line};
    if (!name.ends_with(".skeleton")) {
      try {
        Parser p(rhs, nullptr, line);
        binding.value = p.element();
        p.finish();
      } catch (const ParseError& e) {
        // Re-anchor the column to the file line.
        throw ParseError(std::string("in '") + name + "': " + e.what(), line,
                         e.column() + static_cast<int>(eq + 1 + (a == std::string::npos ? 0 : a)));
      }
    }
    out.push_back(std::move(binding));
  }
  return out;
}

std::vector<Binding> load_pat(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pat(buf.str());
}

}  // namespace patree
