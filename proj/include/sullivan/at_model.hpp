#pragma once

// Incremental AT-model (contraction onto homology with zero differential) of
// a finitely generated DG-module over Q. All maps are linear, so elements
// here only ever hold single-generator monomials.

#include "sullivan/morphisms.hpp"

#include <utility>
#include <vector>

namespace sullivan {

class DGModule {
 public:
  DGModule() : DGModule(std::make_shared<const Signature>(), {}) {}
  // Throws InvalidInput unless every d(m_i) is a homogeneous linear
  // combination of earlier generators of degree |m_i| + 1 and d d = 0.
  DGModule(SignaturePtr gens, std::vector<Element> diff);

  const Signature& signature() const { return *sig_; }
  const SignaturePtr& signature_ptr() const { return sig_; }
  std::size_t size() const { return sig_->size(); }
  const Element& d(GenIndex g) const;
  Element gen(GenIndex g) const { return Element::generator(sig_, g); }

 private:
  SignaturePtr sig_;
  std::vector<Element> diff_;
};

// Linear extension of d.
Element apply_d(const DGModule& M, const Element& x);

struct ATModel {
  std::vector<GenIndex> H;
  std::vector<Element> f, phi;
  // g is defined on H only; other entries are zero.
  std::vector<Element> g;
  std::vector<std::pair<GenIndex, GenIndex>> pairs;
};

ATModel compute_at_model(const DGModule& M);

namespace at_identity {
inline constexpr const char* kFD = "f d = 0";
inline constexpr const char* kDG = "d g = 0";
inline constexpr const char* kFPhi = "f phi = 0";
inline constexpr const char* kPhiG = "phi g = 0";
inline constexpr const char* kPhiPhi = "phi phi = 0";
inline constexpr const char* kHomotopy = "id - gf = phi d + d phi";
inline constexpr const char* kFG = "fg = id";
inline constexpr const char* kPhiDPhi = "phi d phi = phi";
inline constexpr const char* kDPhiD = "d phi d = d";
}  // namespace at_identity

IdentityReport check_at_model(const DGModule& M, const ATModel& A);

}  // namespace sullivan
