#include "liepres/free_lie.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace liepres {

bool is_lyndon(const Word& w)
{
  const std::size_t n = w.size();
  if (n == 0)
    return false;
  for (std::size_t k = 1; k < n; ++k) {
    // Compare w with its rotation starting at k.
    for (std::size_t i = 0; i < n; ++i) {
      const Letter a = w[i];
      const Letter b = w[(k + i) % n];
      if (a < b)
        break;
      if (a > b)
        return false;
      if (i + 1 == n)
        return false;  // equal to a rotation: periodic
    }
  }
  return true;
}

std::vector<std::vector<Word>> lyndon_words(std::size_t alphabet_size, std::size_t max_degree)
{
  if (alphabet_size == 0 || max_degree == 0)
    throw std::invalid_argument("lyndon_words: alphabet size and degree must be >= 1");
  if (alphabet_size > 255)
    throw std::invalid_argument("lyndon_words: alphabet too large");

  // Duval's generator: yields every Lyndon word of length <= max_degree in
  // lexicographic order.
  std::vector<std::vector<Word>> by_degree(max_degree);
  const auto top = static_cast<Letter>(alphabet_size - 1);
  Word w{0};
  while (!w.empty()) {
    by_degree[w.size() - 1].push_back(w);
    const std::size_t period = w.size();
    while (w.size() < max_degree)
      w.push_back(w[w.size() - period]);
    while (!w.empty() && w.back() == top)
      w.pop_back();
    if (!w.empty())
      ++w.back();
  }
  return by_degree;
}

std::pair<Word, Word> standard_factorization(const Word& w)
{
  if (w.size() < 2)
    throw std::invalid_argument("standard_factorization: degree must be >= 2");
  for (std::size_t split = 1; split < w.size(); ++split) {
    Word suffix(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
    if (is_lyndon(suffix))
      return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)), std::move(suffix)};
  }
  // The last letter is always Lyndon.
  throw std::logic_error("standard_factorization: unreachable");
}

// ---------------------------------------------------------------- LiePoly

LiePoly LiePoly::monomial(Word w, Rational coeff)
{
  LiePoly p;
  p.add_term(w, coeff);
  return p;
}

LiePoly LiePoly::generator(std::size_t index, Rational coeff)
{
  return monomial(Word{static_cast<Letter>(index)}, std::move(coeff));
}

Rational LiePoly::coefficient(const Word& w) const
{
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t LiePoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

std::size_t LiePoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

LiePoly LiePoly::homogeneous_part(std::size_t degree) const
{
  LiePoly out;
  for (const auto& [w, c] : terms_)
    if (w.size() == degree)
      out.terms_.emplace(w, c);
  return out;
}

void LiePoly::add_term(const Word& w, const Rational& coeff)
{
  if (sgn(coeff) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

LiePoly& LiePoly::operator+=(const LiePoly& other)
{
  for (const auto& [w, c] : other.terms_)
    add_term(w, c);
  return *this;
}

LiePoly& LiePoly::operator-=(const LiePoly& other)
{
  for (const auto& [w, c] : other.terms_)
    add_term(w, -c);
  return *this;
}

LiePoly& LiePoly::operator*=(const Rational& s)
{
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_)
    c *= s;
  return *this;
}

// ----------------------------------------------------------------- NCPoly

NCPoly NCPoly::word(Word w, Rational coeff)
{
  NCPoly p;
  p.add_term(w, coeff);
  return p;
}

void NCPoly::add_term(const Word& w, const Rational& coeff)
{
  if (sgn(coeff) == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0)
      terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& other)
{
  for (const auto& [w, c] : other.terms_)
    add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other)
{
  for (const auto& [w, c] : other.terms_)
    add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& s)
{
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_)
    c *= s;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b)
{
  NCPoly out;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      out.add_term(uv, cu * cv);
    }
  return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

// --------------------------------------------------------- FreeLieAlgebra

namespace {

constexpr int kMaxRecursionDepth = 4096;

std::string memo_key(const Word& u, const Word& v)
{
  std::string key(u.begin(), u.end());
  key.push_back(static_cast<char>(0xff));
  key.append(v.begin(), v.end());
  return key;
}

}  // namespace

FreeLieAlgebra::FreeLieAlgebra(std::vector<std::string> generator_names, std::size_t degree_cap)
    : names_(std::move(generator_names)), degree_cap_(degree_cap)
{
  if (names_.empty() || names_.size() > 255)
    throw std::invalid_argument("FreeLieAlgebra: need between 1 and 255 generators");
}

LiePoly FreeLieAlgebra::generator(std::size_t index) const
{
  if (index >= rank())
    throw std::out_of_range("FreeLieAlgebra: generator index out of range");
  return LiePoly::generator(index);
}

LiePoly FreeLieAlgebra::bracket(const LiePoly& p, const LiePoly& q) const
{
  LiePoly out;
  for (const auto& [u, cu] : p.terms())
    for (const auto& [v, cv] : q.terms()) {
      LiePoly b = bracket_words(u, v);
      out += (cu * cv) * std::move(b);
    }
  return out;
}

LiePoly FreeLieAlgebra::bracket_words(const Word& u, const Word& v) const
{
  return bracket_words_impl(u, v, 0);
}

// Normal form of [b(u), b(v)] for Lyndon u, v.
//
// For u < v the pair (u, v) is the standard factorization of the Lyndon word
// uv exactly when u is a letter or the right factor u2 of u satisfies
// u2 >= v; then [b(u), b(v)] = b(uv). Otherwise u = u1 u2 with u2 < v and
// Jacobi gives [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]].
//
// Termination: every Lyndon term w of [b(u), b(v)] (u < v) satisfies w < v.
// Each recursive call therefore has either the same right word with a
// strictly shorter left word ([u2,v], [u1,v]) or a strictly smaller right
// word ([u1,w] with w < v; [u2,w'] with w' < v, or [w',u2] with u2 < v).
// Right words range over the finite set of Lyndon words of bounded degree, so
// the order (right word, left length) is well founded. The depth guard turns
// any violation into an exception instead of a stack overflow.
LiePoly FreeLieAlgebra::bracket_words_impl(const Word& u, const Word& v, int depth) const
{
  if (depth > kMaxRecursionDepth)
    throw std::runtime_error("bracket normalization exceeded recursion guard");
  if (u.size() + v.size() > degree_cap_)
    throw std::domain_error("bracket degree " + std::to_string(u.size() + v.size()) +
                            " exceeds the degree cap " + std::to_string(degree_cap_));
  if (u == v)
    return {};
  if (v < u)
    return -bracket_words_impl(v, u, depth + 1);

  const std::string key = memo_key(u, v);
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end())
      return it->second;
  }

  LiePoly result;
  if (u.size() == 1) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    result = LiePoly::monomial(std::move(uv));
  } else {
    auto [u1, u2] = standard_factorization(u);
    if (!(u2 < v)) {
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      result = LiePoly::monomial(std::move(uv));
    } else {
      result = bracket_word_poly(u1, bracket_words_impl(u2, v, depth + 1), depth + 1);
      result -= bracket_word_poly(u2, bracket_words_impl(u1, v, depth + 1), depth + 1);
    }
  }

  std::unique_lock lock(memo_mutex_);
  memo_.try_emplace(key, result);
  return result;
}

LiePoly FreeLieAlgebra::bracket_word_poly(const Word& u, const LiePoly& q, int depth) const
{
  LiePoly out;
  for (const auto& [w, c] : q.terms())
    out += c * bracket_words_impl(u, w, depth);
  return out;
}

LiePoly FreeLieAlgebra::tower(const Tower& t) const
{
  if (t.indices.empty())
    throw std::invalid_argument("tower: empty index list");
  for (auto i : t.indices)
    if (i >= rank())
      throw std::out_of_range("tower: generator index out of range");
  LiePoly acc = LiePoly::generator(t.indices.back());
  for (auto it = t.indices.rbegin() + 1; it != t.indices.rend(); ++it)
    acc = bracket_word_poly(Word{*it}, acc, 0);
  return acc;
}

NCPoly FreeLieAlgebra::expand_to_associative(const LiePoly& p) const
{
  std::map<Word, NCPoly, DegLexLess> cache;
  auto expand_word = [&](auto&& self, const Word& w) -> NCPoly {
    if (w.size() == 1)
      return NCPoly::word(w);
    if (auto it = cache.find(w); it != cache.end())
      return it->second;
    auto [u, v] = standard_factorization(w);
    NCPoly out = commutator(self(self, u), self(self, v));
    cache.emplace(w, out);
    return out;
  };

  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly e = expand_word(expand_word, w);
    e *= c;
    out += e;
  }
  return out;
}

std::string FreeLieAlgebra::format_word(const Word& w) const
{
  if (w.size() == 1)
    return names_.at(w.front());
  auto [u, v] = standard_factorization(w);
  return "[" + format_word(u) + "," + format_word(v) + "]";
}

std::string FreeLieAlgebra::format(const LiePoly& p) const
{
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    if (mag != 1)
      os << mag.get_str() << "*";
    os << format_word(w);
    first = false;
  }
  return os.str();
}

std::size_t FreeLieAlgebra::memo_size() const
{
  std::shared_lock lock(memo_mutex_);
  return memo_.size();
}

}  // namespace liepres
