#include "sullivan/algebra.hpp"

#include "sullivan/errors.hpp"

#include <algorithm>

namespace sullivan {

GenIndex Signature::add(std::string name, int degree) {
  if (degree < 0) throw InvalidInput("generator '" + name + "' has negative degree");
  if (by_name_.count(name)) throw InvalidInput("duplicate generator '" + name + "'");
  auto idx = static_cast<GenIndex>(gens_.size());
  by_name_.emplace(name, idx);
  gens_.push_back({std::move(name), degree, idx});
  return idx;
}

const Generator& Signature::operator[](GenIndex i) const {
  if (i >= gens_.size())
    throw SignatureMismatch("generator index " + std::to_string(i) + " outside signature of size " +
                            std::to_string(gens_.size()));
  return gens_[i];
}

const Generator& Signature::at(std::string_view name) const {
  auto i = find(name);
  if (!i) throw SignatureMismatch("unknown generator '" + std::string(name) + "'");
  return gens_[*i];
}

std::optional<GenIndex> Signature::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

GeneratorSet Signature::all() const {
  GeneratorSet s;
  for (const auto& g : gens_) s.insert(g.index);
  return s;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].exp == 0) throw InvalidInput("monomial factor with zero exponent");
    if (k > 0 && factors[k - 1].gen >= factors[k].gen)
      throw InvalidInput("monomial factors not strictly increasing");
  }
  return Monomial(std::move(factors));
}

std::uint32_t Monomial::length() const {
  std::uint32_t n = 0;
  for (const auto& f : factors_) n += f.exp;
  return n;
}

int Monomial::degree(const Signature& sig) const {
  int d = 0;
  for (const auto& f : factors_) d += sig.degree(f.gen) * static_cast<int>(f.exp);
  return d;
}

bool Monomial::uses_only(const GeneratorSet& subset) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return subset.count(f.gen) != 0; });
}

bool Monomial::contains(GenIndex g) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.gen == g; });
}

std::vector<GenIndex> Monomial::word() const {
  std::vector<GenIndex> w;
  for (const auto& f : factors_) w.insert(w.end(), f.exp, f.gen);
  return w;
}

MonomialProduct mono_mul(const Signature& sig, const Monomial& a, const Monomial& b) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::vector<Monomial::Factor> out;
  out.reserve(fa.size() + fb.size());

  // Odd factors of b pass over the odd factors of a with larger index.
  int odd_a_remaining = 0;
  for (const auto& f : fa) {
    if (sig.is_odd(f.gen)) ++odd_a_remaining;
  }
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].gen < fb[j].gen)) {
      if (sig.is_odd(fa[i].gen)) --odd_a_remaining;
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].gen < fa[i].gen) {
      if (sig.is_odd(fb[j].gen) && (odd_a_remaining & 1)) sign = -sign;
      out.push_back(fb[j++]);
    } else {
      if (sig.is_odd(fa[i].gen)) return {0, Monomial()};
      out.push_back({fa[i].gen, fa[i].exp + fb[j].exp});
      ++i;
      ++j;
    }
  }
  return {sign, Monomial::from_factors(std::move(out))};
}

MonomialProduct canonicalize(const Signature& sig, std::span<const GenIndex> word) {
  MonomialProduct acc{1, Monomial()};
  for (GenIndex g : word) {
    sig[g];
    auto p = mono_mul(sig, acc.result, Monomial::generator(g));
    if (p.sign == 0) return {0, Monomial()};
    acc.sign *= p.sign;
    acc.result = std::move(p.result);
  }
  return acc;
}

SignaturePtr common_signature(const SignaturePtr& a, const SignaturePtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw SignatureMismatch("elements belong to different signatures");
}

Element::Element(SignaturePtr sig, const Monomial& m, const Rational& c) : sig_(std::move(sig)) {
  if (!sig_) throw SignatureMismatch("monomial term requires a signature");
  for (const auto& f : m.factors()) {
    (*sig_)[f.gen];
    if (sig_->is_odd(f.gen) && f.exp > 1) return;
  }
  if (c != 0) terms_.emplace(m, c);
}

Element Element::unit(SignaturePtr sig, const Rational& c) {
  return Element(std::move(sig), Monomial(), c);
}

Element Element::generator(SignaturePtr sig, GenIndex g) {
  return Element(std::move(sig), Monomial::generator(g), 1);
}

Element Element::generator(SignaturePtr sig, std::string_view name) {
  if (!sig) throw SignatureMismatch("generator lookup requires a signature");
  GenIndex g = sig->at(name).index;
  return generator(std::move(sig), g);
}

Rational Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Element::degree() const {
  if (terms_.empty() || !sig_) return std::nullopt;
  int d = terms_.begin()->first.degree(*sig_);
  for (const auto& [m, c] : terms_) {
    if (m.degree(*sig_) != d) return std::nullopt;
  }
  return d;
}

bool Element::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

Element Element::parity_twist() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) {
    if (m.degree(*sig_) & 1) c = -c;
  }
  return r;
}

void Element::adopt(const SignaturePtr& other) { sig_ = common_signature(sig_, other); }

Element& Element::operator+=(const Element& o) {
  adopt(o.sig_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  adopt(o.sig_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Element operator*(const Element& a, const Element& b) { return elem_mul(a, b); }

Element elem_mul(const Element& a, const Element& b) {
  Element r(common_signature(a.signature(), b.signature()));
  if (a.is_zero() || b.is_zero()) return r;
  const Signature& sig = *r.signature();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto p = mono_mul(sig, ma, mb);
      if (p.sign == 0) continue;
      Rational c = ca * cb;
      if (p.sign < 0) c = -c;
      r.add_term(p.result, c);
    }
  }
  return r;
}

std::map<GenIndex, Rational> linear_part(const Element& x, const GeneratorSet& subset) {
  std::map<GenIndex, Rational> out;
  for (const auto& [m, c] : x.terms()) {
    if (m.is_generator() && subset.count(m.factors()[0].gen)) out.emplace(m.factors()[0].gen, c);
  }
  return out;
}

bool in_lambda_geq2(const Element& x, const GeneratorSet& W) {
  for (const auto& [m, c] : x.terms()) {
    if (m.length() < 2 || !m.uses_only(W)) return false;
  }
  return true;
}

namespace {

void enumerate(const Signature& sig, const std::vector<GenIndex>& gens, std::size_t from, int remaining,
               std::vector<Monomial::Factor>& cur, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::from_factors(cur));
    return;
  }
  for (std::size_t k = from; k < gens.size(); ++k) {
    int d = sig.degree(gens[k]);
    if (d == 0 || d > remaining) continue;
    std::uint32_t max_exp = sig.is_odd(gens[k]) ? 1u : static_cast<std::uint32_t>(remaining / d);
    for (std::uint32_t e = 1; e <= max_exp; ++e) {
      cur.push_back({gens[k], e});
      enumerate(sig, gens, k + 1, remaining - d * static_cast<int>(e), cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Monomial> basis_monomials(const Signature& sig, int p, const GeneratorSet& subset) {
  std::vector<Monomial> out;
  if (p < 0) return out;
  std::vector<GenIndex> gens;
  for (GenIndex g : subset) {
    sig[g];
    gens.push_back(g);
  }
  std::vector<Monomial::Factor> cur;
  enumerate(sig, gens, 0, p, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool print_order_less(const Signature& sig, const Monomial& a, const Monomial& b) {
  int da = a.degree(sig), db = b.degree(sig);
  if (da != db) return da < db;
  auto wa = a.word(), wb = b.word();
  return std::lexicographical_compare(wa.rbegin(), wa.rend(), wb.rbegin(), wb.rend());
}

}  // namespace sullivan
