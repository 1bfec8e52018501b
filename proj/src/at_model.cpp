#include "sullivan/at_model.hpp"

#include "sullivan/errors.hpp"

#include <algorithm>

namespace sullivan {

DGModule::DGModule(SignaturePtr gens, std::vector<Element> diff) : sig_(std::move(gens)) {
  if (!sig_) throw InvalidInput("DGModule needs a generator list");
  const Signature& sig = *sig_;
  if (diff.size() > sig.size()) throw InvalidInput("more differentials than generators");
  diff_.assign(sig.size(), Element(sig_));
  for (std::size_t i = 0; i < diff.size(); ++i) {
    common_signature(sig_, diff[i].signature());
    diff_[i] += diff[i];
  }
  for (const auto& gen : sig) {
    const Element& dm = diff_[gen.index];
    for (const auto& [m, c] : dm.terms()) {
      if (!m.is_generator())
        throw InvalidInput("d(" + gen.name + ") is not a linear combination of generators");
      GenIndex q = m.factors()[0].gen;
      if (q >= gen.index)
        throw InvalidInput("d(" + gen.name + ") uses " + sig[q].name + ", which is not declared before it");
      if (sig.degree(q) != gen.degree + 1)
        throw InvalidInput("d(" + gen.name + ") has a term of degree " + std::to_string(sig.degree(q)) +
                           ", expected " + std::to_string(gen.degree + 1));
    }
  }
  for (const auto& gen : sig) {
    if (!apply_d(*this, diff_[gen.index]).is_zero())
      throw InvalidInput("d(d(" + gen.name + ")) is nonzero");
  }
}

const Element& DGModule::d(GenIndex g) const {
  (*sig_)[g];
  return diff_[g];
}

Element apply_d(const DGModule& M, const Element& x) {
  common_signature(M.signature_ptr(), x.signature());
  Element r(M.signature_ptr());
  for (const auto& [m, c] : x.terms()) {
    if (!m.is_generator()) throw InvalidInput("module elements are linear combinations of generators");
    r += M.d(m.factors()[0].gen) * c;
  }
  return r;
}

namespace {

// Linear extension of a per-generator table.
Element apply_linear(const SignaturePtr& sp, const std::vector<Element>& table, const Element& x) {
  Element r(sp);
  for (const auto& [m, c] : x.terms()) {
    if (!m.is_generator()) throw InvalidInput("module elements are linear combinations of generators");
    r += table.at(m.factors()[0].gen) * c;
  }
  return r;
}

}  // namespace

ATModel compute_at_model(const DGModule& M) {
  const SignaturePtr& sp = M.signature_ptr();
  const auto n = static_cast<GenIndex>(M.size());
  ATModel A;
  A.f.assign(n, Element(sp));
  A.g.assign(n, Element(sp));
  A.phi.assign(n, Element(sp));
  GeneratorSet H;

  for (GenIndex i = 0; i < n; ++i) {
    const Element& dm = M.d(i);
    Element a = apply_linear(sp, A.f, dm);
    Element b = M.gen(i) - apply_linear(sp, A.phi, dm);
    if (a.is_zero()) {
      H.insert(i);
      A.f[i] = M.gen(i);
      A.g[i] = b;
      continue;
    }
    auto lin = linear_part(a, H);
    if (lin.empty() || lin.size() != a.size())
      throw InternalError("f(d " + M.signature()[i].name + ") leaves the homology generators");
    auto [j, cj] = *lin.rbegin();
    for (GenIndex m = 0; m < i; ++m) {
      Rational lambda = A.f[m].coeff(j);
      if (lambda == 0) continue;
      lambda /= cj;
      A.f[m] -= a * lambda;
      A.phi[m] += b * lambda;
    }
    H.erase(j);
    A.g[j] = Element(sp);
    A.pairs.emplace_back(i, j);
  }
  A.H.assign(H.begin(), H.end());
  return A;
}

IdentityReport check_at_model(const DGModule& M, const ATModel& A) {
  IdentityReport rep;
  const SignaturePtr& sp = M.signature_ptr();
  const auto n = static_cast<GenIndex>(M.size());
  if (A.f.size() != n || A.g.size() != n || A.phi.size() != n)
    throw InvalidInput("AT-model tables do not match the module");
  auto f = [&](const Element& x) { return apply_linear(sp, A.f, x); };
  auto g = [&](const Element& x) { return apply_linear(sp, A.g, x); };
  auto phi = [&](const Element& x) { return apply_linear(sp, A.phi, x); };
  auto d = [&](const Element& x) { return apply_d(M, x); };

  auto record = [&](const char* name, GenIndex at, const Element& residual) {
    auto it = std::find_if(rep.results.begin(), rep.results.end(),
                           [&](const IdentityResult& r) { return r.identity == name; });
    if (it == rep.results.end()) {
      rep.results.emplace_back(name);
      it = rep.results.end() - 1;
    }
    ++it->checked;
    if (!residual.is_zero() && it->passed) {
      it->passed = false;
      it->counterexample = Monomial::generator(at);
      it->residual = residual;
    }
  };
  for (const char* name : {at_identity::kFD, at_identity::kDG, at_identity::kFPhi, at_identity::kPhiG,
                           at_identity::kPhiPhi, at_identity::kHomotopy, at_identity::kFG, at_identity::kPhiDPhi,
                           at_identity::kDPhiD})
    rep.results.emplace_back(name);

  for (GenIndex i = 0; i < n; ++i) {
    Element x = M.gen(i);
    Element fx = f(x), px = phi(x), dx = d(x);
    record(at_identity::kFD, i, f(dx));
    record(at_identity::kFPhi, i, f(px));
    record(at_identity::kPhiPhi, i, phi(px));
    record(at_identity::kHomotopy, i, x - g(fx) - phi(dx) - d(px));
    record(at_identity::kPhiDPhi, i, phi(d(px)) - px);
    record(at_identity::kDPhiD, i, d(phi(dx)) - dx);
  }
  for (GenIndex h : A.H) {
    Element x = M.gen(h);
    Element gx = g(x);
    record(at_identity::kDG, h, d(gx));
    record(at_identity::kPhiG, h, phi(gx));
    record(at_identity::kFG, h, f(gx) - x);
  }
  return rep;
}

}  // namespace sullivan
