#pragma once

// Free graded-commutative algebra over Q on a finite ordered set of
// generators. Monomials are stored canonically (factors sorted by
// generator index), so equality of elements is structural.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sullivan {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using GenIndex = std::uint32_t;
using GeneratorSet = std::set<GenIndex>;

struct Generator {
  std::string name;
  int degree = 0;
  GenIndex index = 0;
};

class Signature {
 public:
  Signature() = default;

  // Appends a generator and returns its index. Throws InvalidInput on a
  // duplicate name or a negative degree.
  GenIndex add(std::string name, int degree);

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  // Throws SignatureMismatch for an out-of-range index.
  const Generator& operator[](GenIndex i) const;
  const Generator& at(std::string_view name) const;
  std::optional<GenIndex> find(std::string_view name) const;

  int degree(GenIndex i) const { return (*this)[i].degree; }
  bool is_odd(GenIndex i) const { return (degree(i) & 1) != 0; }

  GeneratorSet all() const;

  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

 private:
  std::vector<Generator> gens_;
  std::unordered_map<std::string, GenIndex> by_name_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

class Monomial {
 public:
  struct Factor {
    GenIndex gen;
    std::uint32_t exp;
    auto operator<=>(const Factor&) const = default;
  };

  Monomial() = default;  // the unit

  static Monomial generator(GenIndex g) { return Monomial({{g, 1}}); }

  // Factors must be strictly increasing by index with positive exponents.
  // Throws InvalidInput otherwise.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  bool is_generator() const { return factors_.size() == 1 && factors_[0].exp == 1; }

  // Total exponent: the word length.
  std::uint32_t length() const;
  int degree(const Signature& sig) const;
  bool uses_only(const GeneratorSet& subset) const;
  bool contains(GenIndex g) const;

  // Generator word in canonical order, exponents expanded.
  std::vector<GenIndex> word() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  explicit Monomial(std::vector<Factor> f) : factors_(std::move(f)) {}
  std::vector<Factor> factors_;
};

struct MonomialProduct {
  int sign = 0;  // 0 means the product vanishes
  Monomial result;
};

MonomialProduct mono_mul(const Signature& sig, const Monomial& a, const Monomial& b);

// Canonicalizes an arbitrary word of generators: the sign is that of the
// permutation restricted to odd factors, 0 if an odd generator repeats.
MonomialProduct canonicalize(const Signature& sig, std::span<const GenIndex> word);

class Element {
 public:
  using Terms = std::map<Monomial, Rational>;

  // Zero without a signature; combines with any signature.
  Element() = default;
  explicit Element(SignaturePtr sig) : sig_(std::move(sig)) {}
  Element(SignaturePtr sig, const Monomial& m, const Rational& c = 1);

  static Element unit(SignaturePtr sig, const Rational& c = 1);
  static Element generator(SignaturePtr sig, GenIndex g);
  static Element generator(SignaturePtr sig, std::string_view name);

  const SignaturePtr& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const;
  // Coefficient of the bare generator g.
  Rational coeff(GenIndex g) const { return coeff(Monomial::generator(g)); }

  void add_term(const Monomial& m, const Rational& c);

  // Degree if homogeneous and nonzero.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  // (-1)^deg applied monomialwise.
  Element parity_twist() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  void adopt(const SignaturePtr& other);

  SignaturePtr sig_;
  Terms terms_;
};

Element elem_mul(const Element& a, const Element& b);

// Shared signature of two operands; throws SignatureMismatch if both are set
// and differ.
SignaturePtr common_signature(const SignaturePtr& a, const SignaturePtr& b);

std::map<GenIndex, Rational> linear_part(const Element& x, const GeneratorSet& subset);
bool in_lambda_geq2(const Element& x, const GeneratorSet& W);

// Canonical monomials of degree p in the subset's generators, ascending in
// factor-list order.
std::vector<Monomial> basis_monomials(const Signature& sig, int p, const GeneratorSet& subset);

// Term order for printing: ascending degree, then by the generator word read
// from its highest factor down.
bool print_order_less(const Signature& sig, const Monomial& a, const Monomial& b);

}  // namespace sullivan
