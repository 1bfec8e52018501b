#pragma once

// Generator tables for f, g and phi, their extension to whole algebras, and
// the identity checker for a full algebra contraction.
//
// phi on products is the fibre integral of a DGA map H: LV -> LV (x) L(t,dt)
// that restricts to g f at t = 0 and to the identity at t = 1. On a
// generator m
//
//   H(m) = g f(m) + int_0^t B_m + t d phi(m) + dt phi(m),
//
// where B_m is the dt-component of H(d m), built multiplicatively from
// earlier generators. Integrating the dt-component over [0,1] gives phi.

#include "sullivan/differential.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sullivan {

class GeneratorMap {
 public:
  GeneratorMap(SignaturePtr domain, SignaturePtr codomain, int map_degree);

  static GeneratorMap identity(SignaturePtr sig, const GeneratorSet& on);

  // Throws InvalidInput if the image is inhomogeneous or of the wrong degree.
  void set(GenIndex g, Element image);
  void erase(GenIndex g);
  bool has(GenIndex g) const { return g < table_.size() && table_[g].has_value(); }
  // Throws MissingEntry if absent.
  const Element& at(GenIndex g) const;

  int map_degree() const { return degree_; }
  const SignaturePtr& domain() const { return domain_; }
  const SignaturePtr& codomain() const { return codomain_; }
  std::vector<GenIndex> keys() const;

 private:
  SignaturePtr domain_, codomain_;
  int degree_;
  std::vector<std::optional<Element>> table_;
};

// Multiplicative extension of a generator assignment.
Element apply_multiplicative(const GeneratorMap& map, const Element& x);
Element apply_multiplicative(const SignaturePtr& codomain,
                             const std::function<const Element&(GenIndex)>& image, const Element& x);

// a(t) + dt b(t) with coefficients in LV; index k holds the t^k coefficient.
// dt is kept to the left of LV coefficients.
struct PathElement {
  std::vector<Element> poly;
  std::vector<Element> dpoly;

  static PathElement constant(const Element& x);

  PathElement& operator+=(const PathElement& o);
  PathElement& operator*=(const Rational& c);
  bool is_zero() const;
  // Integral of the dt-component over [0,1].
  Element integral(const SignaturePtr& sig) const;
  Element evaluate(const SignaturePtr& sig, const Rational& t) const;
};

PathElement path_mul(const PathElement& a, const PathElement& b);

class Homotopy {
 public:
  // All references must outlive the Homotopy.
  Homotopy(const DGAlgebra& source, const GeneratorMap& f, const GeneratorMap& g, const GeneratorMap& phi);

  // Variant with g derived on W as g(w) = w - phi(d w). Used while the
  // minimal model is being built and no g table exists yet.
  static Homotopy with_derived_section(const DGAlgebra& source, const GeneratorMap& f, const GeneratorMap& phi,
                                       GeneratorSet W);

  Element apply(const Element& x) const;
  PathElement lift(const Element& x) const;
  PathElement lift(const Monomial& m) const;
  // Product of generator lifts in the order given, with no reordering sign.
  PathElement lift_word(const std::vector<GenIndex>& word) const;

  const Element& section(GenIndex w) const;
  const Element& gf(GenIndex m) const;

  // Not safe to share across threads: evaluation fills internal caches.
  Homotopy(const Homotopy&) = delete;
  Homotopy& operator=(const Homotopy&) = delete;
  Homotopy(Homotopy&&) = default;

 private:
  Homotopy(const DGAlgebra& source, const GeneratorMap& f, const GeneratorMap* g, const GeneratorMap& phi,
           GeneratorSet W);
  const PathElement& lift_generator(GenIndex m) const;

  const DGAlgebra* source_;
  const GeneratorMap* f_;
  const GeneratorMap* g_;
  const GeneratorMap* phi_;
  GeneratorSet derived_on_;

  enum class State : unsigned char { Absent, Busy, Done };
  mutable std::vector<State> section_state_;
  mutable std::vector<Element> section_;
  mutable std::vector<std::optional<Element>> gf_;
  mutable std::vector<std::optional<PathElement>> gen_lift_;
  mutable std::vector<bool> lift_busy_;
  mutable std::map<Monomial, PathElement> mono_lift_;
};

Element apply_homotopy(const DGAlgebra& source, const GeneratorMap& phi, const GeneratorMap& f,
                       const GeneratorMap& g, const Element& x);

struct FullContraction {
  DGAlgebra source;
  std::vector<GenIndex> W;
  // Same signature as source; carries d_W on W and zero elsewhere.
  DGAlgebra target;
  GeneratorMap f;
  GeneratorMap g;
  GeneratorMap phi;
  std::vector<std::pair<GenIndex, GenIndex>> pairs;

  GeneratorSet w_set() const { return GeneratorSet(W.begin(), W.end()); }
  const Element& dW(GenIndex w) const { return target.d(w); }
};

struct IdentityResult {
  explicit IdentityResult(std::string name = {}) : identity(std::move(name)) {}

  std::string identity;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<Monomial> counterexample;
  Element residual;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_passed() const;
  const IdentityResult* find(std::string_view identity) const;
};

// Identity names used by check_contraction, in report order.
namespace identity {
inline constexpr const char* kFG = "fg = id";
inline constexpr const char* kFPhi = "f phi = 0";
inline constexpr const char* kPhiG = "phi g = 0";
inline constexpr const char* kPhiPhi = "phi phi = 0";
inline constexpr const char* kHomotopy = "id - gf = phi d + d phi";
inline constexpr const char* kFChain = "f d = dW f";
inline constexpr const char* kGChain = "d g = g dW";
inline constexpr const char* kDWSquare = "dW dW = 0";
inline constexpr const char* kFImage = "f lands in LW";
inline constexpr const char* kFReorder = "f multiplicative under reordering";
inline constexpr const char* kPhiReorder = "phi product rule under reordering";
}  // namespace identity

IdentityReport check_contraction(const FullContraction& c, int max_degree);

}  // namespace sullivan
