#pragma once

// Reference computations that share no code with the library: Witt counts,
// fraction-free elimination over the integers, the free associative
// expansion of brackets, and the golden table loaded by hand.

#include "liepres/free_lie.hpp"
#include "liepres/rat_matrix.hpp"
#include "liepres/structure_table.hpp"
#include "liepres/table_io.hpp"

#include <gmpxx.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

inline int mobius(unsigned n)
{
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

/// (1/n) sum_{d | n} mu(d) k^(n/d)
inline mpz_class witt(unsigned k, unsigned n)
{
  mpz_class sum = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d)
      continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), k, n / d);
    sum += mobius(d) * power;
  }
  return sum / n;
}

/// Rank by Bareiss elimination after clearing denominators row by row.
inline std::size_t bareiss_rank(const liepres::RatMatrix& m)
{
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      l = lcm(l, mpz_class(m(r, c).get_den()));
    for (std::size_t c = 0; c < m.cols(); ++c)
      a[r][c] = mpz_class(m(r, c) * l);
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0)
      ++p;
    if (p == m.rows())
      continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t k = c + 1; k < m.cols(); ++k)
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Determinant by cofactor-free Bareiss on a square matrix.
inline liepres::Rational bareiss_det(const liepres::RatMatrix& m)
{
  const std::size_t n = m.rows();
  mpz_class scale = 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c)
      l = lcm(l, mpz_class(m(r, c).get_den()));
    scale *= l;
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = mpz_class(m(r, c) * l);
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < n; ++c)
        a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
    prev = a[k][k];
  }
  liepres::Rational d(sign * (n ? a[n - 1][n - 1] : mpz_class(1)), scale);
  d.canonicalize();
  return d;
}

/// Free associative polynomials as word -> coefficient.
using Assoc = std::map<liepres::Word, mpq_class>;

inline Assoc times(const Assoc& a, const Assoc& b)
{
  Assoc out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      liepres::Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out[w] += x * y;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Assoc minus(Assoc a, const Assoc& b)
{
  for (const auto& [w, c] : b)
    a[w] -= c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

/// Associative image of the standard bracketing of a Lyndon word, computed
/// from its own longest-Lyndon-suffix split.
inline Assoc expand_lyndon(const liepres::Word& w)
{
  if (w.size() == 1)
    return {{w, 1}};
  auto is_lyndon = [](const liepres::Word& x) {
    for (std::size_t r = 1; r < x.size(); ++r) {
      liepres::Word rot(x.begin() + static_cast<std::ptrdiff_t>(r), x.end());
      rot.insert(rot.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r));
      if (!(x < rot))
        return false;
    }
    return !x.empty();
  };
  for (std::size_t cut = 1; cut < w.size(); ++cut) {
    liepres::Word v(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
    if (is_lyndon(v)) {
      const liepres::Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
      const Assoc eu = expand_lyndon(u), ev = expand_lyndon(v);
      return minus(times(eu, ev), times(ev, eu));
    }
  }
  return {};
}

inline Assoc expand(const liepres::LiePoly& p)
{
  Assoc out;
  for (const auto& [w, c] : p.terms())
    for (const auto& [x, d] : expand_lyndon(w))
      out[x] += c * d;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::string data_path(const std::string& name)
{
  return std::string(LIEPRES_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// The hand-transcribed table shipped in data/.
inline liepres::StructureTable golden_table()
{
  return liepres::read_table_json(slurp(data_path("g2_table.json")));
}

}  // namespace oracle
