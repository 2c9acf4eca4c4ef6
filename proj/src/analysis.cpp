#include "liepres/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <omp.h>

namespace liepres {

namespace {

std::vector<RatMatrix> all_ad(const StructureTable& t)
{
  std::vector<RatMatrix> ads;
  ads.reserve(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i)
    ads.push_back(t.ad(i));
  return ads;
}

RatVector act(const RatMatrix& m, const RatVector& v)
{
  RatVector out(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(v[c]) == 0)
      continue;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, c)) != 0)
        out[r] += m(r, c) * v[c];
  }
  return out;
}

struct Triple {
  std::size_t i, j, k;
};

std::vector<Triple> ordered_triples(std::size_t n)
{
  std::vector<Triple> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out.push_back({i, j, k});
  return out;
}

RatVector jacobi_residual(const StructureTable& t, const std::vector<RatMatrix>& ads, const Triple& tr)
{
  RatVector r = act(ads[tr.i], t.bracket(tr.j, tr.k));
  const RatVector b = act(ads[tr.j], t.bracket(tr.k, tr.i));
  const RatVector c = act(ads[tr.k], t.bracket(tr.i, tr.j));
  for (std::size_t m = 0; m < r.size(); ++m)
    r[m] += b[m] + c[m];
  return r;
}

Rational trace_of_product(const RatMatrix& a, const RatMatrix& b)
{
  Rational s;
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (sgn(a(k, l)) != 0 && sgn(b(l, k)) != 0)
        s += a(k, l) * b(l, k);
  return s;
}

RatMatrix stack(const std::vector<RatMatrix>& blocks, std::size_t cols)
{
  std::size_t rows = 0;
  for (const auto& b : blocks)
    rows += b.rows();
  RatMatrix m(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return m;
}

bool is_diagonal(const RatMatrix& m)
{
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && sgn(m(r, c)) != 0)
        return false;
  return true;
}

std::vector<mpz_class> divisors(mpz_class n)
{
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n)
        large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const RatVector& poly, const Rational& x)
{
  Rational acc;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

bool is_positive(const RatVector& root)
{
  for (const auto& v : root)
    if (sgn(v) != 0)
      return sgn(v) > 0;
  return false;
}

RatVector add(const RatVector& a, const RatVector& b)
{
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

RatVector negate(RatVector v)
{
  for (auto& x : v)
    x = -x;
  return v;
}

}  // namespace

// ---------------------------------------------------------------- Jacobi

std::vector<JacobiViolation> check_jacobi_serial(const StructureTable& t)
{
  const auto ads = all_ad(t);
  std::vector<JacobiViolation> out;
  for (const auto& tr : ordered_triples(t.dim())) {
    RatVector r = jacobi_residual(t, ads, tr);
    if (!is_zero(r))
      out.push_back({tr.i, tr.j, tr.k, std::move(r)});
  }
  return out;
}

std::vector<JacobiViolation> check_jacobi(const StructureTable& t, int jobs)
{
  const auto ads = all_ad(t);
  const auto triples = ordered_triples(t.dim());
  std::vector<RatVector> residuals(triples.size());
  const auto count = static_cast<std::ptrdiff_t>(triples.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::ptrdiff_t n = 0; n < count; ++n)
    residuals[static_cast<std::size_t>(n)] = jacobi_residual(t, ads, triples[static_cast<std::size_t>(n)]);

  std::vector<JacobiViolation> out;
  for (std::size_t n = 0; n < triples.size(); ++n)
    if (!is_zero(residuals[n]))
      out.push_back({triples[n].i, triples[n].j, triples[n].k, std::move(residuals[n])});
  return out;
}

// ------------------------------------------------------- derived, center

DerivedCenter derived_and_center(const StructureTable& t)
{
  const std::size_t n = t.dim();
  DerivedCenter dc;
  if (n == 0)
    return dc;
  std::vector<RatVector> brackets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      brackets.push_back(t.bracket(i, j));
  dc.derived_dim = brackets.empty() ? 0 : rank(RatMatrix::from_rows(brackets));
  dc.center_dim = n - rank(stack(all_ad(t), n));
  return dc;
}

std::vector<std::size_t> lower_central_series(const StructureTable& t)
{
  const std::size_t n = t.dim();
  std::vector<std::size_t> dims{n};
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < n; ++i)
    basis.push_back(t.unit(i));
  const auto ads = all_ad(t);
  while (!basis.empty()) {
    std::vector<RatVector> next;
    for (const auto& ad : ads)
      for (const auto& v : basis)
        next.push_back(act(ad, v));
    const auto r = rref(RatMatrix::from_rows(next));
    basis.clear();
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
      basis.push_back(r.reduced.row_vector(k));
    if (basis.size() == dims.back())
      break;
    dims.push_back(basis.size());
  }
  return dims;
}

bool is_nilpotent(const StructureTable& t)
{
  return lower_central_series(t).back() == 0;
}

// ---------------------------------------------------------- Killing form

RatMatrix killing_form_serial(const StructureTable& t)
{
  const auto ads = all_ad(t);
  const std::size_t n = t.dim();
  RatMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      k(i, j) = k(j, i) = trace_of_product(ads[i], ads[j]);
  return k;
}

RatMatrix killing_form(const StructureTable& t, int jobs)
{
  const auto ads = all_ad(t);
  const auto n = static_cast<std::ptrdiff_t>(t.dim());
  RatMatrix k(t.dim(), t.dim());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    for (std::ptrdiff_t j = i; j < n; ++j) {
      const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
      k(a, b) = trace_of_product(ads[a], ads[b]);
    }
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      k(i, j) = k(j, i);
  return k;
}

std::vector<std::array<std::size_t, 3>> killing_invariance_violations(const StructureTable& t, const RatMatrix& k)
{
  const std::size_t n = t.dim();
  auto form = [&](const RatVector& u, std::size_t col) {
    Rational s;
    for (std::size_t l = 0; l < n; ++l)
      if (sgn(u[l]) != 0)
        s += u[l] * k(l, col);
    return s;
  };
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        if (form(t.bracket(i, j), m) != form(t.bracket(j, m), i))
          out.push_back({i, j, m});
  return out;
}

// ---------------------------------------------------------------- Cartan

CartanVerdict cartan_check(const StructureTable& t, std::span<const std::size_t> candidate)
{
  const std::size_t n = t.dim();
  std::set<std::size_t> in_h;
  for (auto c : candidate) {
    if (c >= n)
      throw std::invalid_argument("cartan_check: candidate index out of range");
    if (!in_h.insert(c).second)
      throw std::invalid_argument("cartan_check: repeated candidate index");
  }

  CartanVerdict v;
  if (candidate.empty()) {
    v.normalizer_dim = n;
    v.witnesses.push_back("empty candidate");
    return v;
  }
  for (std::size_t a = 0; a < candidate.size(); ++a)
    for (std::size_t b = a + 1; b < candidate.size(); ++b) {
      const auto br = t.bracket(candidate[a], candidate[b]);
      if (!is_zero(br))
        v.witnesses.push_back("[" + t.names()[candidate[a]] + "," + t.names()[candidate[b]] + "] = " + t.format(br));
    }

  // v normalizes H iff [h, v] has no component outside H for every h in H.
  std::vector<RatVector> rows;
  for (auto h : candidate) {
    const RatMatrix ad = t.ad(h);
    for (std::size_t r = 0; r < n; ++r)
      if (!in_h.count(r))
        rows.push_back(ad.row_vector(r));
  }
  v.normalizer_dim = rows.empty() ? n : n - rank(RatMatrix::from_rows(rows));
  if (v.normalizer_dim > candidate.size())
    v.witnesses.push_back("normalizer has dimension " + std::to_string(v.normalizer_dim) + " > " +
                          std::to_string(candidate.size()));
  v.ok = v.witnesses.empty();
  return v;
}

std::vector<std::size_t> diagonal_cartan_candidate(const StructureTable& t)
{
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const RatMatrix ad = t.ad(i);
    if (ad.is_zero() || !is_diagonal(ad))
      continue;
    bool commutes = true;
    for (auto p : picked)
      commutes = commutes && is_zero(t.bracket(i, p));
    if (commutes)
      picked.push_back(i);
  }
  return picked;
}

// --------------------------------------------------------- polynomials

RatVector characteristic_polynomial(const RatMatrix& a)
{
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = a.rows();
  RatVector c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = a * m;
    for (std::size_t d = 0; d < n; ++d)
      next(d, d) += c[n - k + 1];
    m = std::move(next);
    const RatMatrix am = a * m;
    Rational tr;
    for (std::size_t d = 0; d < n; ++d)
      tr += am(d, d);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<Rational> rational_roots(const RatVector& poly)
{
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < poly.size() && sgn(poly[low]) == 0)
    ++low;
  if (low == poly.size())
    throw std::invalid_argument("rational_roots: zero polynomial");
  if (low > 0)
    roots.insert(Rational(0));

  std::size_t high = poly.size() - 1;
  while (sgn(poly[high]) == 0)
    --high;
  if (high > low) {
    mpz_class scale = 1;
    for (std::size_t d = low; d <= high; ++d)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), poly[d].get_den_mpz_t());
    const mpz_class a0 = mpz_class(poly[low] * scale);
    const mpz_class an = mpz_class(poly[high] * scale);
    const RatVector reduced(poly.begin() + static_cast<std::ptrdiff_t>(low),
                            poly.begin() + static_cast<std::ptrdiff_t>(high) + 1);
    const auto ps = divisors(a0);
    const auto qs = divisors(an);
    for (const auto& p : ps)
      for (const auto& q : qs)
        for (int s : {1, -1}) {
          Rational x(p * s, q);
          x.canonicalize();
          if (!roots.count(x) && sgn(evaluate(reduced, x)) == 0)
            roots.insert(x);
        }
  }
  return {roots.begin(), roots.end()};
}

// ------------------------------------------------------------- roots

std::size_t RootDatum::multiplicity_total() const
{
  std::size_t total = 0;
  for (const auto& r : roots)
    total += r.vectors.size();
  return total;
}

Rational RootDatum::inner(const RatVector& a, const RatVector& b) const
{
  const auto inv = inverse(killing_on_cartan);
  if (!inv)
    throw std::runtime_error("Killing form degenerate on the Cartan span");
  Rational s;
  const RatVector ib = *inv * b;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * ib[i];
  return s;
}

RootDatum root_decomposition(const StructureTable& t, std::span<const std::size_t> cartan)
{
  const std::size_t n = t.dim();
  const std::size_t r = cartan.size();
  if (r == 0)
    throw std::invalid_argument("root_decomposition: empty Cartan candidate");

  RootDatum rd;
  rd.cartan_indices.assign(cartan.begin(), cartan.end());
  std::vector<RatMatrix> ads;
  std::vector<std::vector<Rational>> eigen;
  for (auto c : cartan) {
    ads.push_back(t.ad(c));
    eigen.push_back(rational_roots(characteristic_polynomial(ads.back())));
  }
  rd.killing_on_cartan = RatMatrix(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      rd.killing_on_cartan(a, b) = trace_of_product(ads[a], ads[b]);

  std::size_t covered = 0;
  std::vector<std::size_t> choice(r, 0);
  while (true) {
    RatVector root(r);
    std::vector<RatMatrix> blocks;
    for (std::size_t a = 0; a < r; ++a) {
      root[a] = eigen[a][choice[a]];
      RatMatrix shifted = ads[a];
      for (std::size_t d = 0; d < n; ++d)
        shifted(d, d) -= root[a];
      blocks.push_back(std::move(shifted));
    }
    auto space = kernel_basis(stack(blocks, n));
    if (!space.empty()) {
      RootSpace rs{root, std::move(space), {}};
      for (std::size_t i = 0; i < n; ++i) {
        bool inside = true;
        for (std::size_t a = 0; a < r && inside; ++a)
          inside = act(ads[a], t.unit(i)) == [&] {
            RatVector e = t.unit(i);
            e[i] = root[a];
            return e;
          }();
        if (inside)
          rs.basis_indices.push_back(i);
      }
      covered += rs.vectors.size();
      if (is_zero(root))
        rd.zero_space = std::move(rs);
      else
        rd.roots.push_back(std::move(rs));
    }
    std::size_t a = 0;
    while (a < r && ++choice[a] == eigen[a].size())
      choice[a++] = 0;
    if (a == r)
      break;
  }
  if (covered != n)
    throw std::runtime_error("not simultaneously diagonalizable over the rationals");
  std::sort(rd.roots.begin(), rd.roots.end(), [](const RootSpace& x, const RootSpace& y) { return x.root < y.root; });
  return rd;
}

CartanType cartan_matrix_and_type(const RootDatum& rd)
{
  const std::size_t rank = rd.cartan_indices.size();
  std::vector<RatVector> positive;
  std::set<RatVector> all;
  for (const auto& rs : rd.roots) {
    all.insert(rs.root);
    if (is_positive(rs.root))
      positive.push_back(rs.root);
  }
  for (const auto& root : all)
    if (!all.count(negate(root)))
      throw std::runtime_error("unrecognized type: roots not closed under negation");

  CartanType ct;
  for (const auto& alpha : positive) {
    bool decomposable = false;
    for (std::size_t b = 0; b < positive.size() && !decomposable; ++b)
      for (std::size_t c = b; c < positive.size() && !decomposable; ++c)
        decomposable = add(positive[b], positive[c]) == alpha;
    if (!decomposable)
      ct.simple_roots.push_back(alpha);
  }
  if (ct.simple_roots.size() != rank ||
      (rank > 0 && ::liepres::rank(RatMatrix::from_rows(ct.simple_roots)) != rank))
    throw std::runtime_error("unrecognized type: simple roots do not form a basis of the Cartan dual");

  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<long> row;
    for (std::size_t j = 0; j < rank; ++j) {
      const Rational v = 2 * rd.inner(ct.simple_roots[i], ct.simple_roots[j]) / rd.inner(ct.simple_roots[j], ct.simple_roots[j]);
      if (v.get_den() != 1 || !v.get_num().fits_slong_p())
        throw std::runtime_error("unrecognized type: non-integral Cartan matrix entry " + v.get_str());
      row.push_back(v.get_num().get_si());
    }
    ct.matrix.push_back(std::move(row));
  }

  for (const auto& rs : rd.roots)
    if (rs.vectors.size() != 1)
      throw std::runtime_error("unrecognized type: root space of dimension " + std::to_string(rs.vectors.size()));

  const std::size_t roots = rd.roots.size();
  if (rank == 1 && ct.matrix[0][0] == 2 && roots == 2) {
    ct.name = "A1";
    return ct;
  }
  if (rank == 2) {
    const long product = ct.matrix[0][1] * ct.matrix[1][0];
    static const std::map<long, std::pair<std::size_t, const char*>> catalog = {
        {0, {4, "A1xA1"}}, {1, {6, "A2"}}, {2, {8, "B2"}}, {3, {12, "G2"}}};
    auto it = catalog.find(product);
    if (it != catalog.end() && it->second.first == roots && ct.matrix[0][1] <= 0 && ct.matrix[1][0] <= 0) {
      ct.name = it->second.second;
      return ct;
    }
  }
  throw std::runtime_error("unrecognized type: rank " + std::to_string(rank) + " with " + std::to_string(roots) +
                           " roots is outside the rank <= 2 catalog");
}

// ----------------------------------------------------------------- sl(3)

Sl3Verdict verify_sl3_subalgebra(const StructureTable& t)
{
  static const std::vector<std::string> sub = {"h1", "h2", "a12", "a13", "a23", "a21", "a31", "a32"};
  static const std::vector<std::string> xs = {"x1", "x2", "x3"};
  static const std::vector<std::string> ys = {"y1", "y2", "y3"};

  Sl3Verdict v;
  for (const auto* group : {&sub, &xs, &ys})
    for (const auto& name : *group)
      if (!t.find(name))
        v.mismatches.push_back("table lacks basis element '" + name + "'");
  if (!v.mismatches.empty())
    return v;

  auto e = [](int i, int j) {
    RatMatrix m(3, 3);
    m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
    return m;
  };
  auto sum = [](RatMatrix a, const RatMatrix& b, int sign) {
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        a(r, c) += sign * b(r, c);
    return a;
  };
  const std::vector<RatMatrix> model = {
      sum(e(1, 1), e(2, 2), -1), sum(e(2, 2), e(3, 3), -1), e(1, 2), e(1, 3), e(2, 3), e(2, 1), e(3, 1), e(3, 2)};
  std::vector<RatVector> flat;
  for (const auto& m : model) {
    RatVector f;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        f.push_back(m(r, c));
    flat.push_back(std::move(f));
  }

  std::vector<std::size_t> idx;
  for (const auto& name : sub)
    idx.push_back(t.index_of(name));

  for (std::size_t p = 0; p < sub.size(); ++p)
    for (std::size_t q = p + 1; q < sub.size(); ++q) {
      ++v.pairs_checked;
      const RatMatrix comm = sum(model[p] * model[q], model[q] * model[p], -1);
      RatVector target;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
          target.push_back(comm(r, c));
      const auto coeffs = solve_in_span(flat, target);
      RatVector expected(t.dim());
      for (std::size_t s = 0; s < sub.size(); ++s)
        expected[idx[s]] = (*coeffs)[s];
      const RatVector actual = t.bracket(idx[p], idx[q]);
      if (actual != expected)
        v.mismatches.push_back("[" + sub[p] + "," + sub[q] + "] = " + t.format(actual) + ", matrix model gives " +
                               t.format(expected));
    }

  for (const auto* group : {&xs, &ys}) {
    std::set<std::size_t> allowed;
    for (const auto& name : *group)
      allowed.insert(t.index_of(name));
    for (std::size_t s = 0; s < sub.size(); ++s)
      for (const auto& name : *group) {
        const RatVector b = t.bracket(idx[s], t.index_of(name));
        for (std::size_t k = 0; k < b.size(); ++k)
          if (sgn(b[k]) != 0 && !allowed.count(k)) {
            v.mismatches.push_back("[" + sub[s] + "," + name + "] = " + t.format(b) + " leaves span{" +
                                   (*group)[0] + "," + (*group)[1] + "," + (*group)[2] + "}");
            break;
          }
      }
  }
  v.ok = v.mismatches.empty();
  return v;
}

// -------------------------------------------------------------- classify

Classification classify(const StructureTable& t, std::optional<std::vector<std::size_t>> cartan, int jobs)
{
  Classification c;
  const std::size_t n = t.dim();
  c.jacobi_triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  auto violations = check_jacobi(t, jobs);
  if (!violations.empty()) {
    c.first_violation = std::move(violations.front());
    c.type = "unrecognized (Jacobi identity fails)";
    return c;
  }
  c.derived_center = derived_and_center(t);
  c.nilpotent = is_nilpotent(t);
  c.killing_determinant = determinant(killing_form(t, jobs));
  if (sgn(c.killing_determinant) == 0) {
    c.type = c.nilpotent ? "unrecognized (nilpotent: Killing form degenerate)" : "unrecognized (Killing form degenerate)";
    return c;
  }

  c.cartan = cartan ? *cartan : diagonal_cartan_candidate(t);
  if (c.cartan.empty()) {
    c.type = "unrecognized (no basis element with diagonal ad; pass a Cartan candidate)";
    return c;
  }
  const auto verdict = cartan_check(t, c.cartan);
  if (!verdict.ok) {
    c.type = "unrecognized (Cartan check failed: " + verdict.witnesses.front() + ")";
    return c;
  }
  try {
    c.roots = root_decomposition(t, c.cartan);
    c.cartan_type = cartan_matrix_and_type(*c.roots);
  } catch (const std::runtime_error& e) {
    c.type = std::string("unrecognized (") + e.what() + ")";
    return c;
  }
  c.type = c.cartan_type->name;
  c.identified = true;
  return c;
}

}  // namespace liepres
