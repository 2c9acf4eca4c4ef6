#include "liepres/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace liepres {

int levi_civita(int i, int j, int k)
{
  auto in_range = [](int v) { return v >= 1 && v <= 3; };
  if (!in_range(i) || !in_range(j) || !in_range(k) || i == j || j == k || i == k)
    return 0;
  // (i,j,k) is even iff it is a cyclic shift of (1,2,3).
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

LieExprPtr make_term(Rational coeff, std::string name)
{
  auto e = std::make_shared<LieExpr>();
  e->coeff = std::move(coeff);
  e->name = std::move(name);
  return e;
}

LieExprPtr make_bracket(LieExprPtr left, LieExprPtr right)
{
  auto e = std::make_shared<LieExpr>();
  e->left = std::move(left);
  e->right = std::move(right);
  return e;
}

LieExprPtr make_tower_expr(const Tower& t, const std::vector<std::string>& names)
{
  if (t.indices.empty())
    throw std::invalid_argument("make_tower_expr: empty tower");
  LieExprPtr acc = make_term(1, names.at(t.indices.back()));
  for (auto it = t.indices.rbegin() + 1; it != t.indices.rend(); ++it)
    acc = make_bracket(make_term(1, names.at(*it)), acc);
  return acc;
}

bool structurally_equal(const LieExpr& a, const LieExpr& b)
{
  if (a.is_bracket() != b.is_bracket())
    return false;
  if (a.is_bracket())
    return structurally_equal(*a.left, *b.left) && structurally_equal(*a.right, *b.right);
  return a.coeff == b.coeff && a.name == b.name;
}

// ------------------------------------------------------------ Presentation

Presentation::Presentation(std::vector<std::string> generators, std::vector<Relation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations))
{
}

std::size_t Presentation::generator_index(std::string_view name) const
{
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end())
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - generators_.begin());
}

namespace {

LiePoly eval_expr(const LieExpr& e, const Presentation& p, const FreeLieAlgebra& alg)
{
  if (e.is_bracket())
    return alg.bracket(eval_expr(*e.left, p, alg), eval_expr(*e.right, p, alg));
  if (e.name.empty())
    return {};
  return e.coeff * alg.generator(p.generator_index(e.name));
}

}  // namespace

LiePoly Presentation::relation_poly(const FreeLieAlgebra& alg, std::size_t index) const
{
  if (alg.rank() != generators_.size())
    throw std::invalid_argument("relation_poly: algebra rank does not match the presentation");
  const Relation& rel = relations_.at(index);
  LiePoly out = eval_expr(*rel.lhs, *this, alg);
  for (const auto& term : rel.rhs)
    out -= term.coeff * alg.generator(generator_index(term.name));
  return out;
}

std::vector<LiePoly> Presentation::relation_polys(const FreeLieAlgebra& alg) const
{
  std::vector<LiePoly> out;
  out.reserve(relations_.size());
  for (std::size_t i = 0; i < relations_.size(); ++i)
    out.push_back(relation_poly(alg, i));
  return out;
}

bool operator==(const Presentation& a, const Presentation& b)
{
  if (a.generators_ != b.generators_ || a.relations_.size() != b.relations_.size())
    return false;
  for (std::size_t i = 0; i < a.relations_.size(); ++i) {
    const auto& ra = a.relations_[i];
    const auto& rb = b.relations_[i];
    if (!structurally_equal(*ra.lhs, *rb.lhs) || ra.rhs != rb.rhs)
      return false;
  }
  return true;
}

// ----------------------------------------------------------------- parsing

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column)
{
}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src)
{
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n')
        advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
          ++j;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("[],=*+-:").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct NameUse {
  std::string name;
  std::size_t line;
  std::size_t column;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Presentation parse()
  {
    std::optional<Token> header_missing;
    std::vector<std::string> generators;
    if (at_keyword("generators")) {
      pos_ += 2;
      while (peek().kind == Tok::Ident && !at_keyword("relation")) {
        const Token& t = next();
        if (t.text == "generators" || t.text == "relation")
          throw ParseError(t.line, t.column, "reserved word '" + t.text + "' used as a generator name");
        if (std::find(generators.begin(), generators.end(), t.text) != generators.end())
          throw ParseError(t.line, t.column, "duplicate generator '" + t.text + "'");
        generators.push_back(t.text);
      }
      if (generators.empty())
        throw error_here("expected at least one generator name");
    } else {
      header_missing = peek();
    }

    std::vector<Relation> relations;
    while (peek().kind != Tok::End) {
      if (!at_keyword("relation"))
        throw error_here("expected 'relation:'");
      pos_ += 2;
      relations.push_back(parse_relation());
    }

    // Syntax is checked for the whole file before names are resolved.
    if (header_missing)
      throw ParseError(header_missing->line, header_missing->column, "expected 'generators:' header");
    for (const auto& use : names_)
      if (std::find(generators.begin(), generators.end(), use.name) == generators.end())
        throw ParseError(use.line, use.column, "unknown generator '" + use.name + "'");
    return Presentation(std::move(generators), std::move(relations));
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  bool at_punct(char c, std::size_t ahead = 0) const
  {
    const Token& t = peek(ahead);
    return t.kind == Tok::Punct && t.text[0] == c;
  }

  bool at_keyword(std::string_view word) const
  {
    return peek().kind == Tok::Ident && peek().text == word && at_punct(':', 1);
  }

  ParseError error_here(const std::string& message) const
  {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    return ParseError(t.line, t.column, message + ", found " + found);
  }

  void expect_punct(char c, const std::string& what)
  {
    if (!at_punct(c))
      throw error_here("expected " + what);
    ++pos_;
  }

  Relation parse_relation()
  {
    Relation rel;
    rel.lhs = parse_lie_expr();
    expect_punct('=', "'='");
    rel.rhs = parse_rhs();
    return rel;
  }

  LieExprPtr parse_lie_expr()
  {
    if (at_punct('[')) {
      const Token open = next();
      LieExprPtr left = parse_lie_expr_in(open);
      if (!at_punct(','))
        throw unclosed_or_expected(open, "','");
      ++pos_;
      LieExprPtr right = parse_lie_expr_in(open);
      if (!at_punct(']'))
        throw unclosed_or_expected(open, "']'");
      ++pos_;
      return make_bracket(std::move(left), std::move(right));
    }
    Rational sign = 1;
    if (at_punct('-') || at_punct('+')) {
      if (next().text == "-")
        sign = -1;
    }
    auto term = parse_scaled();
    term.coeff *= sign;
    if (term.name.empty() && sgn(term.coeff) != 0)
      throw ParseError(term_line_, term_col_, "a nonzero constant is not a Lie algebra element");
    return make_term(term.coeff, term.name);
  }

  LieExprPtr parse_lie_expr_in(const Token& open)
  {
    if (peek().kind == Tok::End)
      throw unclosed_or_expected(open, "an expression");
    return parse_lie_expr();
  }

  ParseError unclosed_or_expected(const Token& open, const std::string& what) const
  {
    if (peek().kind == Tok::End)
      return ParseError(open.line, open.column, "unclosed '[' (reached end of input)");
    return error_here("malformed bracket: expected " + what);
  }

  // scaled := (rational "*")? name | rational
  RhsTerm parse_scaled()
  {
    term_line_ = peek().line;
    term_col_ = peek().column;
    if (peek().kind == Tok::Number) {
      const Token num = next();
      Rational value;
      try {
        value = parse_rational(num.text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(num.line, num.column, e.what());
      }
      if (at_punct('*')) {
        ++pos_;
        if (peek().kind != Tok::Ident)
          throw error_here("expected a generator name after '*'");
        return {value, take_name()};
      }
      return {value, ""};
    }
    if (peek().kind == Tok::Ident)
      return {Rational(1), take_name()};
    throw error_here("expected a generator name or a rational");
  }

  std::string take_name()
  {
    const Token& t = next();
    if (t.text == "relation" || t.text == "generators")
      throw ParseError(t.line, t.column, "reserved word '" + t.text + "' used as a generator name");
    names_.push_back({t.text, t.line, t.column});
    return t.text;
  }

  std::vector<RhsTerm> parse_rhs()
  {
    std::vector<RhsTerm> terms;
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (at_punct('+') || at_punct('-')) {
        if (next().text == "-")
          sign = -1;
      } else if (!first) {
        break;
      }
      RhsTerm t = parse_scaled();
      t.coeff *= sign;
      if (t.name.empty()) {
        if (sgn(t.coeff) != 0)
          throw ParseError(term_line_, term_col_, "a nonzero constant is not a Lie algebra element");
      } else if (sgn(t.coeff) != 0) {
        terms.push_back(std::move(t));
      }
      first = false;
    }
    return terms;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<NameUse> names_;
  std::size_t term_line_ = 0;
  std::size_t term_col_ = 0;
};

std::string print_scaled(const Rational& coeff, const std::string& name)
{
  if (name.empty())
    return "0";
  if (coeff == 1)
    return name;
  return coeff.get_str() + "*" + name;
}

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string print_expr(const LieExpr& e)
{
  if (e.is_bracket())
    return "[" + print_expr(*e.left) + "," + print_expr(*e.right) + "]";
  return print_scaled(e.coeff, e.name);
}

std::string print_relation(const Relation& rel)
{
  std::ostringstream os;
  os << print_expr(*rel.lhs) << " = ";
  if (rel.rhs.empty())
    os << '0';
  for (std::size_t i = 0; i < rel.rhs.size(); ++i) {
    const auto& t = rel.rhs[i];
    if (i == 0)
      os << print_scaled(t.coeff, t.name);
    else
      os << (sgn(t.coeff) < 0 ? " - " : " + ") << print_scaled(abs(t.coeff), t.name);
  }
  return os.str();
}

std::string print_presentation(const Presentation& p)
{
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : p.generators())
    os << ' ' << g;
  os << '\n';
  for (const auto& rel : p.relations())
    os << "relation: " << print_relation(rel) << '\n';
  return os.str();
}

// ---------------------------------------------------------------- fixtures

Presentation g2_presentation(const QuadrupleCoefficients& coeffs)
{
  const std::vector<std::string> names{"x1", "x2", "x3"};
  FreeLieAlgebra alg(names);
  std::vector<Relation> relations;

  struct Family {
    const Rational* coeff;
    // Tower indices and the index of the right-hand generator, 1-based.
    std::vector<int> (*tower)(int, int, int);
    int (*rhs_index)(int, int, int);
  };
  const Family families[] = {
      {&coeffs.family1, [](int i, int j, int k) { return std::vector<int>{i, j, i, k}; },
       [](int i, int, int) { return i; }},
      {&coeffs.family2, [](int i, int j, int k) { return std::vector<int>{i, i, j, k}; },
       [](int i, int, int) { return i; }},
      {&coeffs.family3, [](int i, int j, int k) { return std::vector<int>{i, j, j, k}; },
       [](int, int j, int) { return j; }},
  };

  for (const auto& fam : families)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
          Tower t;
          for (int idx : fam.tower(i, j, k))
            t.indices.push_back(static_cast<Letter>(idx - 1));
          const Rational rhs_coeff = *fam.coeff * levi_civita(i, j, k);
          const int rhs_gen = fam.rhs_index(i, j, k);

          LiePoly poly = alg.tower(t);
          poly -= rhs_coeff * alg.generator(static_cast<std::size_t>(rhs_gen - 1));
          if (poly.is_zero())
            continue;

          Relation rel;
          rel.lhs = make_tower_expr(t, names);
          if (sgn(rhs_coeff) != 0)
            rel.rhs.push_back({rhs_coeff, names[static_cast<std::size_t>(rhs_gen - 1)]});
          relations.push_back(std::move(rel));
        }
  return Presentation(names, std::move(relations));
}

std::vector<LiePoly> g2_relations(const FreeLieAlgebra& alg, const QuadrupleCoefficients& coeffs)
{
  return g2_presentation(coeffs).relation_polys(alg);
}

Presentation sl2_presentation()
{
  return parse_presentation(
      "generators: e f h\n"
      "relation: [h,e] = 2*e\n"
      "relation: [h,f] = -2*f\n"
      "relation: [e,f] = h\n");
}

Presentation heisenberg_presentation()
{
  return parse_presentation(
      "generators: p q\n"
      "relation: [p,[p,q]] = 0\n"
      "relation: [q,[p,q]] = 0\n");
}

}  // namespace liepres
