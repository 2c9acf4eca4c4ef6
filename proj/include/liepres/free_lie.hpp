#pragma once

#include "liepres/rational.hpp"

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace liepres {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Graded order: shorter words first, then lexicographic.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const
  {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// True iff w is nonempty and strictly smaller than each proper rotation.
bool is_lyndon(const Word& w);

/// Lyndon words over {0..alphabet_size-1}; entry d-1 holds degree d, sorted
/// lexicographically.
std::vector<std::vector<Word>> lyndon_words(std::size_t alphabet_size, std::size_t max_degree);

/// w = u v with v the longest proper Lyndon suffix. Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Left-normed bracket [x_{i1},[x_{i2},[...,x_{ik}]]] on 0-based indices.
struct Tower {
  std::vector<Letter> indices;
  friend bool operator==(const Tower&, const Tower&) = default;
};

/// Finite rational combination of Lyndon basis elements. Zero coefficients
/// are never stored.
class LiePoly {
 public:
  using Terms = std::map<Word, Rational, DegLexLess>;

  LiePoly() = default;
  static LiePoly monomial(Word w, Rational coeff = 1);
  static LiePoly generator(std::size_t index, Rational coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  /// Largest word length present; 0 for the zero polynomial.
  std::size_t degree() const;
  std::size_t min_degree() const;
  LiePoly homogeneous_part(std::size_t degree) const;

  void add_term(const Word& w, const Rational& coeff);
  LiePoly& operator+=(const LiePoly& other);
  LiePoly& operator-=(const LiePoly& other);
  LiePoly& operator*=(const Rational& s);

  friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
  friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
  friend LiePoly operator*(const Rational& s, LiePoly a) { return a *= s; }
  friend LiePoly operator-(LiePoly a) { return a *= Rational(-1); }
  friend bool operator==(const LiePoly& a, const LiePoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Element of the free associative algebra, keyed by plain words.
class NCPoly {
 public:
  using Terms = std::map<Word, Rational, DegLexLess>;

  NCPoly() = default;
  static NCPoly word(Word w, Rational coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const Rational& coeff);
  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly& operator*=(const Rational& s);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);

/// The free Lie algebra on named generators, in the Lyndon basis.
///
/// Bracket normal forms of Lyndon pairs are memoized in a table guarded by a
/// shared mutex; entries are canonical so concurrent use is deterministic.
class FreeLieAlgebra {
 public:
  static constexpr std::size_t kDefaultDegreeCap = 12;

  explicit FreeLieAlgebra(std::vector<std::string> generator_names,
                          std::size_t degree_cap = kDefaultDegreeCap);

  FreeLieAlgebra(const FreeLieAlgebra&) = delete;
  FreeLieAlgebra& operator=(const FreeLieAlgebra&) = delete;

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::size_t degree_cap() const { return degree_cap_; }

  LiePoly generator(std::size_t index) const;
  LiePoly bracket(const LiePoly& p, const LiePoly& q) const;
  /// [b(u), b(v)] for Lyndon words u, v.
  LiePoly bracket_words(const Word& u, const Word& v) const;
  LiePoly tower(const Tower& t) const;

  /// Image under [u,v] -> uv - vu in the free associative algebra.
  NCPoly expand_to_associative(const LiePoly& p) const;

  /// "[x1,[x1,x2]]" style rendering of the bracketed Lyndon basis element.
  std::string format_word(const Word& w) const;
  std::string format(const LiePoly& p) const;

  std::size_t memo_size() const;

 private:
  LiePoly bracket_words_impl(const Word& u, const Word& v, int depth) const;
  LiePoly bracket_word_poly(const Word& u, const LiePoly& q, int depth) const;

  std::vector<std::string> names_;
  std::size_t degree_cap_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::unordered_map<std::string, LiePoly> memo_;
};

}  // namespace liepres
