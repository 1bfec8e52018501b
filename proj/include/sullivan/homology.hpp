#pragma once

// Brute-force degreewise cohomology over Q. Deliberately shares nothing with
// the contraction machinery beyond apply_d and basis enumeration.

#include "sullivan/at_model.hpp"
#include "sullivan/differential.hpp"

#include <optional>
#include <vector>

namespace sullivan {

class DegreeMatrix {
 public:
  DegreeMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  // Column j is d of domain basis element j over the codomain basis.
  static DegreeMatrix of_differential(const std::vector<Monomial>& domain, const std::vector<Monomial>& codomain,
                                      const std::function<Element(const Monomial&)>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Rank by sparse fraction-free elimination on integer columns.
std::size_t rank(const DegreeMatrix& m);

// Basis of the null space, one Rational vector of length cols() each.
std::vector<std::vector<Rational>> kernel_basis(const DegreeMatrix& m);

struct DegreeData {
  int degree;
  std::size_t dimension;  // of the cochain space
  std::size_t rank;       // of d leaving this degree
  std::size_t kernel;     // dimension of the cocycles
  std::size_t cohomology;
};

// For 0 <= p <= max_degree. Throws InvalidInput if max_degree < 0 or if d of
// some subset monomial leaves the subset.
std::vector<DegreeData> cochain_data(const DGAlgebra& dga, const GeneratorSet& subset, int max_degree);
std::vector<DegreeData> cochain_data(const DGModule& M, int max_degree);

struct DegreeDim {
  int degree;
  std::size_t dimension;
  bool operator==(const DegreeDim&) const = default;
};

std::vector<DegreeDim> cohomology_dims(const DGAlgebra& dga, const GeneratorSet& subset, int max_degree);
std::vector<DegreeDim> cohomology_dims(const DGModule& M, int max_degree);

struct CohomologyComparison {
  bool equal = true;
  std::optional<int> first_mismatch;
  std::vector<DegreeDim> a, b;
};

CohomologyComparison compare_cohomology(const DGAlgebra& a, const GeneratorSet& subset_a, const DGAlgebra& b,
                                        const GeneratorSet& subset_b, int max_degree);

}  // namespace sullivan
