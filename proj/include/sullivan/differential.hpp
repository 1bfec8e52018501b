#pragma once

#include "sullivan/algebra.hpp"

#include <string>
#include <vector>

namespace sullivan {

// Free graded-commutative algebra with a differential given on generators.
// Immutable once built.
class DGAlgebra {
 public:
  DGAlgebra() : DGAlgebra(std::make_shared<const Signature>()) {}
  explicit DGAlgebra(SignaturePtr sig);
  // diff[i] is d of generator i; missing trailing entries are zero.
  DGAlgebra(SignaturePtr sig, std::vector<Element> diff);

  const Signature& signature() const { return *sig_; }
  const SignaturePtr& signature_ptr() const { return sig_; }
  std::size_t size() const { return sig_->size(); }

  const Element& d(GenIndex g) const;

  Element gen(GenIndex g) const { return Element::generator(sig_, g); }
  Element gen(std::string_view name) const { return Element::generator(sig_, name); }

 private:
  SignaturePtr sig_;
  std::vector<Element> diff_;
};

Element apply_d(const DGAlgebra& dga, const Element& x);

struct Violation {
  enum class Kind { NonPositiveDegree, Inhomogeneous, DegreeMismatch, OrderViolation, NotSquareZero };
  Kind kind;
  GenIndex generator;
  std::optional<Monomial> monomial;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_sullivan(const DGAlgebra& dga);

}  // namespace sullivan
