#include "sullivan/homology.hpp"

#include "sullivan/errors.hpp"

#include <algorithm>
#include <map>

namespace sullivan {

DegreeMatrix DegreeMatrix::of_differential(const std::vector<Monomial>& domain,
                                           const std::vector<Monomial>& codomain,
                                           const std::function<Element(const Monomial&)>& d) {
  std::map<Monomial, std::size_t> row;
  for (std::size_t i = 0; i < codomain.size(); ++i) row.emplace(codomain[i], i);
  DegreeMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    Element col = d(domain[j]);
    for (const auto& [mono, c] : col.terms()) {
      auto it = row.find(mono);
      if (it == row.end()) throw InvalidInput("differential leaves the chosen generator subset");
      m(it->second, j) = c;
    }
  }
  return m;
}

namespace {

// Sparse integer column, entries sorted by row.
using IntColumn = std::vector<std::pair<std::size_t, Integer>>;

IntColumn integral_column(const DegreeMatrix& m, std::size_t j) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, j) != 0) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(m(i, j))));
  IntColumn v;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Rational& q = m(i, j);
    if (q != 0) v.emplace_back(i, boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
  }
  return v;
}

void divide_content(IntColumn& v) {
  Integer g = 0;
  for (const auto& [i, x] : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : v) e.second /= g;
}

// a * v - b * p, both sorted.
IntColumn combine(const Integer& a, const IntColumn& v, const Integer& b, const IntColumn& p) {
  IntColumn out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, k = 0;
  while (i < v.size() || k < p.size()) {
    if (k == p.size() || (i < v.size() && v[i].first < p[k].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || p[k].first < v[i].first) {
      out.emplace_back(p[k].first, -b * p[k].second);
      ++k;
    } else {
      Integer x = a * v[i].second - b * p[k].second;
      if (x != 0) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++k;
    }
  }
  return out;
}

}  // namespace

// Fraction-free column echelon: each incoming column is cross-multiplied
// against the pivot owning its last row until it vanishes or claims a new
// pivot row. Contents are divided out after every step to bound growth.
std::size_t rank(const DegreeMatrix& m) {
  std::map<std::size_t, IntColumn> pivots;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    IntColumn v = integral_column(m, j);
    divide_content(v);
    while (!v.empty()) {
      auto it = pivots.find(v.back().first);
      if (it == pivots.end()) {
        std::size_t row = v.back().first;
        pivots.emplace(row, std::move(v));
        break;
      }
      const IntColumn& p = it->second;
      Integer a = p.back().second, b = v.back().second;
      Integer g = boost::multiprecision::gcd(a, b);
      v = combine(a / g, v, b / g, p);
      divide_content(v);
    }
  }
  return pivots.size();
}

std::vector<std::vector<Rational>> kernel_basis(const DegreeMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Rational>> a(R, std::vector<Rational>(C));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational fac = a[i][c];
      for (std::size_t k = c; k < C; ++k) a[i][k] -= fac * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t fc = 0; fc < C; ++fc) {
    if (std::find(pivots.begin(), pivots.end(), fc) != pivots.end()) continue;
    std::vector<Rational> v(C);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][fc];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::vector<DegreeData> assemble(int max_degree, const std::function<std::vector<Monomial>(int)>& basis,
                                 const std::function<Element(const Monomial&)>& d) {
  if (max_degree < 0) throw InvalidInput("degree cap must be nonnegative");
  std::vector<DegreeData> out;
  std::vector<Monomial> cur = basis(0);
  std::size_t rank_in = 0;
  for (int p = 0; p <= max_degree; ++p) {
    std::vector<Monomial> next = basis(p + 1);
    std::size_t rk = rank(DegreeMatrix::of_differential(cur, next, d));
    std::size_t ker = cur.size() - rk;
    out.push_back({p, cur.size(), rk, ker, ker - rank_in});
    rank_in = rk;
    cur = std::move(next);
  }
  return out;
}

std::vector<DegreeDim> dims_of(const std::vector<DegreeData>& data) {
  std::vector<DegreeDim> out;
  for (const auto& d : data) out.push_back({d.degree, d.cohomology});
  return out;
}

}  // namespace

std::vector<DegreeData> cochain_data(const DGAlgebra& dga, const GeneratorSet& subset, int max_degree) {
  const SignaturePtr& sp = dga.signature_ptr();
  for (GenIndex g : subset) dga.signature()[g];
  return assemble(
      max_degree, [&](int p) { return basis_monomials(*sp, p, subset); },
      [&](const Monomial& m) { return apply_d(dga, Element(sp, m)); });
}

std::vector<DegreeData> cochain_data(const DGModule& M, int max_degree) {
  const SignaturePtr& sp = M.signature_ptr();
  return assemble(
      max_degree,
      [&](int p) {
        std::vector<Monomial> b;
        for (const auto& g : M.signature())
          if (g.degree == p) b.push_back(Monomial::generator(g.index));
        return b;
      },
      [&](const Monomial& m) { return apply_d(M, Element(sp, m)); });
}

std::vector<DegreeDim> cohomology_dims(const DGAlgebra& dga, const GeneratorSet& subset, int max_degree) {
  return dims_of(cochain_data(dga, subset, max_degree));
}

std::vector<DegreeDim> cohomology_dims(const DGModule& M, int max_degree) {
  return dims_of(cochain_data(M, max_degree));
}

CohomologyComparison compare_cohomology(const DGAlgebra& a, const GeneratorSet& subset_a, const DGAlgebra& b,
                                        const GeneratorSet& subset_b, int max_degree) {
  CohomologyComparison cmp;
  cmp.a = cohomology_dims(a, subset_a, max_degree);
  cmp.b = cohomology_dims(b, subset_b, max_degree);
  for (std::size_t p = 0; p < cmp.a.size(); ++p) {
    if (cmp.a[p].dimension != cmp.b[p].dimension) {
      cmp.equal = false;
      cmp.first_mismatch = cmp.a[p].degree;
      break;
    }
  }
  return cmp;
}

}  // namespace sullivan
