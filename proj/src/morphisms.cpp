#include "sullivan/morphisms.hpp"

#include "sullivan/errors.hpp"

#include <algorithm>

namespace sullivan {

GeneratorMap::GeneratorMap(SignaturePtr domain, SignaturePtr codomain, int map_degree)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), degree_(map_degree) {
  if (!domain_ || !codomain_) throw InvalidInput("GeneratorMap needs domain and codomain signatures");
  table_.resize(domain_->size());
}

GeneratorMap GeneratorMap::identity(SignaturePtr sig, const GeneratorSet& on) {
  GeneratorMap m(sig, sig, 0);
  for (GenIndex g : on) m.set(g, Element::generator(sig, g));
  return m;
}

void GeneratorMap::set(GenIndex g, Element image) {
  const Generator& gen = (*domain_)[g];
  common_signature(codomain_, image.signature());
  if (!image.is_zero()) {
    auto d = image.degree();
    if (!d) throw InvalidInput("image of " + gen.name + " is not homogeneous");
    if (*d != gen.degree + degree_)
      throw InvalidInput("image of " + gen.name + " has degree " + std::to_string(*d) + ", expected " +
                         std::to_string(gen.degree + degree_));
  }
  Element stored(codomain_);
  stored += image;
  table_[g] = std::move(stored);
}

void GeneratorMap::erase(GenIndex g) {
  (*domain_)[g];
  table_[g].reset();
}

const Element& GeneratorMap::at(GenIndex g) const {
  if (!has(g)) throw MissingEntry("no table entry for generator " + (*domain_)[g].name);
  return *table_[g];
}

std::vector<GenIndex> GeneratorMap::keys() const {
  std::vector<GenIndex> k;
  for (GenIndex i = 0; i < table_.size(); ++i)
    if (table_[i]) k.push_back(i);
  return k;
}

Element apply_multiplicative(const SignaturePtr& codomain,
                             const std::function<const Element&(GenIndex)>& image, const Element& x) {
  Element r(codomain);
  for (const auto& [m, c] : x.terms()) {
    Element t = Element::unit(codomain, c);
    for (GenIndex q : m.word()) {
      t = t * image(q);
      if (t.is_zero()) break;
    }
    r += t;
  }
  return r;
}

Element apply_multiplicative(const GeneratorMap& map, const Element& x) {
  if (map.map_degree() != 0) throw InvalidInput("multiplicative extension needs a degree 0 map");
  common_signature(map.domain(), x.signature());
  return apply_multiplicative(map.codomain(), [&](GenIndex q) -> const Element& { return map.at(q); }, x);
}

// ---------------------------------------------------------------------------
// PathElement

namespace {

void accumulate(std::vector<Element>& into, std::size_t k, const Element& x) {
  if (x.is_zero()) return;
  if (into.size() <= k) into.resize(k + 1);
  into[k] += x;
}

void trim(std::vector<Element>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

}  // namespace

PathElement PathElement::constant(const Element& x) {
  PathElement p;
  if (!x.is_zero()) p.poly.push_back(x);
  return p;
}

PathElement& PathElement::operator+=(const PathElement& o) {
  for (std::size_t k = 0; k < o.poly.size(); ++k) accumulate(poly, k, o.poly[k]);
  for (std::size_t k = 0; k < o.dpoly.size(); ++k) accumulate(dpoly, k, o.dpoly[k]);
  trim(poly);
  trim(dpoly);
  return *this;
}

PathElement& PathElement::operator*=(const Rational& c) {
  for (auto& x : poly) x *= c;
  for (auto& x : dpoly) x *= c;
  trim(poly);
  trim(dpoly);
  return *this;
}

bool PathElement::is_zero() const {
  return std::all_of(poly.begin(), poly.end(), [](const Element& e) { return e.is_zero(); }) &&
         std::all_of(dpoly.begin(), dpoly.end(), [](const Element& e) { return e.is_zero(); });
}

Element PathElement::integral(const SignaturePtr& sig) const {
  Element r(sig);
  for (std::size_t k = 0; k < dpoly.size(); ++k) r += dpoly[k] * Rational(1, static_cast<long>(k + 1));
  return r;
}

Element PathElement::evaluate(const SignaturePtr& sig, const Rational& t) const {
  Element r(sig);
  Rational tk = 1;
  for (const auto& x : poly) {
    r += x * tk;
    tk *= t;
  }
  return r;
}

PathElement path_mul(const PathElement& a, const PathElement& b) {
  PathElement r;
  for (std::size_t i = 0; i < a.poly.size(); ++i) {
    if (a.poly[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.poly.size(); ++j) accumulate(r.poly, i + j, a.poly[i] * b.poly[j]);
    if (!b.dpoly.empty()) {
      // a dt = (-1)^|a| dt a
      Element tw = a.poly[i].parity_twist();
      for (std::size_t j = 0; j < b.dpoly.size(); ++j) accumulate(r.dpoly, i + j, tw * b.dpoly[j]);
    }
  }
  for (std::size_t i = 0; i < a.dpoly.size(); ++i) {
    if (a.dpoly[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.poly.size(); ++j) accumulate(r.dpoly, i + j, a.dpoly[i] * b.poly[j]);
  }
  trim(r.poly);
  trim(r.dpoly);
  return r;
}

// ---------------------------------------------------------------------------
// Homotopy

Homotopy::Homotopy(const DGAlgebra& source, const GeneratorMap& f, const GeneratorMap& g, const GeneratorMap& phi)
    : Homotopy(source, f, &g, phi, {}) {}

Homotopy Homotopy::with_derived_section(const DGAlgebra& source, const GeneratorMap& f, const GeneratorMap& phi,
                                        GeneratorSet W) {
  return Homotopy(source, f, nullptr, phi, std::move(W));
}

Homotopy::Homotopy(const DGAlgebra& source, const GeneratorMap& f, const GeneratorMap* g, const GeneratorMap& phi,
                   GeneratorSet W)
    : source_(&source), f_(&f), g_(g), phi_(&phi), derived_on_(std::move(W)) {
  if (phi.map_degree() != -1) throw InvalidInput("phi must have degree -1");
  std::size_t n = source.size();
  section_state_.assign(n, State::Absent);
  section_.assign(n, Element(source.signature_ptr()));
  gf_.resize(n);
  gen_lift_.resize(n);
  lift_busy_.assign(n, false);
}

const Element& Homotopy::section(GenIndex w) const {
  if (g_) return g_->at(w);
  source_->signature()[w];
  if (!derived_on_.count(w)) throw MissingEntry("no section for generator " + source_->signature()[w].name);
  switch (section_state_[w]) {
    case State::Done:
      return section_[w];
    case State::Busy:
      throw InternalError("cyclic dependency while deriving g(" + source_->signature()[w].name + ")");
    case State::Absent:
      break;
  }
  section_state_[w] = State::Busy;
  Element s = source_->gen(w) - apply(source_->d(w));
  section_[w] = std::move(s);
  section_state_[w] = State::Done;
  return section_[w];
}

const Element& Homotopy::gf(GenIndex m) const {
  source_->signature()[m];
  if (!gf_[m]) {
    const SignaturePtr& sp = source_->signature_ptr();
    gf_[m] = apply_multiplicative(sp, [this](GenIndex w) -> const Element& { return section(w); }, f_->at(m));
  }
  return *gf_[m];
}

const PathElement& Homotopy::lift_generator(GenIndex m) const {
  if (gen_lift_[m]) return *gen_lift_[m];
  if (lift_busy_[m]) throw InternalError("cyclic dependency while lifting " + source_->signature()[m].name);
  lift_busy_[m] = true;
  const SignaturePtr& sp = source_->signature_ptr();
  PathElement h = PathElement::constant(gf(m));
  PathElement hd = lift(source_->d(m));
  for (std::size_t k = 0; k < hd.dpoly.size(); ++k) {
    PathElement term;
    term.poly.resize(k + 2, Element(sp));
    term.poly[k + 1] = hd.dpoly[k] * Rational(1, static_cast<long>(k + 1));
    h += term;
  }
  const Element& ph = phi_->at(m);
  if (!ph.is_zero()) {
    PathElement term;
    term.poly = {Element(sp), apply_d(*source_, ph)};
    term.dpoly = {ph};
    h += term;
  }
  gen_lift_[m] = std::move(h);
  lift_busy_[m] = false;
  return *gen_lift_[m];
}

PathElement Homotopy::lift(const Monomial& m) const {
  if (m.is_unit()) return PathElement::constant(Element::unit(source_->signature_ptr()));
  if (m.is_generator()) return lift_generator(m.factors()[0].gen);
  auto it = mono_lift_.find(m);
  if (it != mono_lift_.end()) return it->second;
  // Split off one copy of the lowest factor: m = q * rest with sign +1.
  auto fs = m.factors();
  GenIndex q = fs[0].gen;
  std::vector<Monomial::Factor> rest(fs.begin(), fs.end());
  if (--rest[0].exp == 0) rest.erase(rest.begin());
  PathElement r = path_mul(lift_generator(q), lift(Monomial::from_factors(std::move(rest))));
  return mono_lift_.emplace(m, std::move(r)).first->second;
}

PathElement Homotopy::lift(const Element& x) const {
  common_signature(source_->signature_ptr(), x.signature());
  PathElement r;
  for (const auto& [m, c] : x.terms()) {
    PathElement t = lift(m);
    t *= c;
    r += t;
  }
  return r;
}

PathElement Homotopy::lift_word(const std::vector<GenIndex>& word) const {
  PathElement r = PathElement::constant(Element::unit(source_->signature_ptr()));
  for (GenIndex q : word) {
    source_->signature()[q];
    r = path_mul(r, lift_generator(q));
  }
  return r;
}

Element Homotopy::apply(const Element& x) const {
  // Only the dt-components are needed, but they depend on the full lifts.
  return lift(x).integral(source_->signature_ptr());
}

Element apply_homotopy(const DGAlgebra& source, const GeneratorMap& phi, const GeneratorMap& f,
                       const GeneratorMap& g, const Element& x) {
  Homotopy h(source, f, g, phi);
  return h.apply(x);
}

// ---------------------------------------------------------------------------
// Identity checks

bool IdentityReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

const IdentityResult* IdentityReport::find(std::string_view identity) const {
  for (const auto& r : results)
    if (r.identity == identity) return &r;
  return nullptr;
}

namespace {

class Tally {
 public:
  explicit Tally(IdentityReport& rep) : rep_(rep) {}

  IdentityResult& entry(const char* name) {
    for (auto& r : rep_.results)
      if (r.identity == name) return r;
    rep_.results.emplace_back(name);
    return rep_.results.back();
  }

  void record(const char* name, const Monomial& at, const Element& residual) {
    IdentityResult& r = entry(name);
    ++r.checked;
    if (!residual.is_zero() && r.passed) {
      r.passed = false;
      r.counterexample = at;
      r.residual = residual;
    }
  }

 private:
  IdentityReport& rep_;
};

}  // namespace

IdentityReport check_contraction(const FullContraction& c, int max_degree) {
  IdentityReport rep;
  Tally tally(rep);
  for (const char* name : {identity::kFG, identity::kFPhi, identity::kPhiG, identity::kPhiPhi, identity::kHomotopy,
                           identity::kFChain, identity::kGChain, identity::kDWSquare, identity::kFImage,
                           identity::kFReorder, identity::kPhiReorder})
    tally.entry(name);

  const SignaturePtr& sp = c.source.signature_ptr();
  const Signature& sig = *sp;
  GeneratorSet V = sig.all();
  GeneratorSet W = c.w_set();
  Homotopy H(c.source, c.f, c.g, c.phi);
  auto f = [&](const Element& x) { return apply_multiplicative(c.f, x); };
  auto g = [&](const Element& x) { return apply_multiplicative(c.g, x); };
  auto d = [&](const Element& x) { return apply_d(c.source, x); };
  auto dW = [&](const Element& x) { return apply_d(c.target, x); };
  auto phi = [&](const Element& x) { return H.apply(x); };

  for (int p = 0; p <= max_degree; ++p) {
    for (const Monomial& m : basis_monomials(sig, p, V)) {
      Element x(sp, m);
      Element fx = f(x);
      Element px = phi(x);
      tally.record(identity::kFPhi, m, f(px));
      tally.record(identity::kPhiPhi, m, phi(px));
      tally.record(identity::kHomotopy, m, x - g(fx) - phi(d(x)) - d(px));
      tally.record(identity::kFChain, m, f(d(x)) - dW(fx));
      Element outside(sp);
      for (const auto& [mm, cc] : fx.terms())
        if (!mm.uses_only(W)) outside.add_term(mm, cc);
      tally.record(identity::kFImage, m, outside);

      // Reversed factor order: word_rev = s * m.
      auto word = m.word();
      std::reverse(word.begin(), word.end());
      int s = canonicalize(sig, word).sign;
      Element frev = Element::unit(sp, s);
      for (GenIndex q : word) frev = frev * c.f.at(q);
      tally.record(identity::kFReorder, m, fx - frev);
      Element prev = H.lift_word(word).integral(sp) * Rational(s);
      tally.record(identity::kPhiReorder, m, px - prev);
    }
    for (const Monomial& m : basis_monomials(sig, p, W)) {
      Element x(sp, m);
      Element gx = g(x);
      Element dwx = dW(x);
      tally.record(identity::kFG, m, f(gx) - x);
      tally.record(identity::kPhiG, m, phi(gx));
      tally.record(identity::kGChain, m, d(gx) - g(dwx));
      tally.record(identity::kDWSquare, m, dW(dwx));
    }
  }
  return rep;
}

}  // namespace sullivan
