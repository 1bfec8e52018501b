#include "sullivan/minimal_model.hpp"

#include "sullivan/errors.hpp"

#include <deque>

namespace sullivan {

namespace {

bool mentions(const Element& x, GenIndex g) {
  for (const auto& [m, c] : x.terms())
    if (m.contains(g)) return true;
  return false;
}

// Algebra substitution g -> image, identity on every other generator.
Element substitute(const Element& x, GenIndex g, const Element& image) {
  const SignaturePtr& sp = x.signature();
  std::deque<Element> gens;
  return apply_multiplicative(
      sp,
      [&](GenIndex q) -> const Element& {
        if (q == g) return image;
        gens.push_back(Element::generator(sp, q));
        return gens.back();
      },
      x);
}

// Elementary homotopy of the pairing step, applied over the canonical factor
// word: each occurrence of m_j is replaced by e, factors to its left are kept
// and factors to its right are substituted.
Element theta(const Element& x, GenIndex j, const Element& e, const Element& j_image) {
  const SignaturePtr& sp = x.signature();
  const Signature& sig = *sp;
  Element r(sp);
  for (const auto& [m, c] : x.terms()) {
    auto word = m.word();
    Element prefix = Element::unit(sp);
    int prefix_deg = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
      GenIndex y = word[k];
      if (y == j) {
        Element t = prefix * e;
        for (std::size_t s = k + 1; s < word.size() && !t.is_zero(); ++s)
          t = t * (word[s] == j ? j_image : Element::generator(sp, word[s]));
        r += t * ((prefix_deg & 1) ? Rational(-c) : c);
      }
      prefix = prefix * Element::generator(sp, y);
      prefix_deg += sig.degree(y);
    }
  }
  return r;
}

std::string first_violation(const ValidationReport& rep) {
  std::string s = "input is not a valid Sullivan algebra";
  if (!rep.violations.empty()) s += ": " + rep.violations.front().message;
  return s;
}

}  // namespace

FullContraction compute_minimal_model(const DGAlgebra& dga) {
  auto rep = validate_sullivan(dga);
  if (!rep.ok()) throw InvalidInput(first_violation(rep));

  const SignaturePtr& sp = dga.signature_ptr();
  const Signature& sig = *sp;
  const auto n = static_cast<GenIndex>(sig.size());
  GeneratorMap f(sp, sp, 0);
  GeneratorMap phi(sp, sp, -1);
  GeneratorSet W;
  std::vector<std::optional<Element>> snapshot(n);
  std::vector<std::pair<GenIndex, GenIndex>> pairs;

  for (GenIndex i = 0; i < n; ++i) {
    Homotopy H = Homotopy::with_derived_section(dga, f, phi, W);
    const Element& dm = dga.d(i);
    Element a = apply_multiplicative(f, dm);
    Element b = dga.gen(i) - H.apply(dm);

    if (in_lambda_geq2(a, W)) {
      W.insert(i);
      f.set(i, dga.gen(i));
      phi.set(i, Element(sp));
      snapshot[i] = a;
      continue;
    }

    auto lin = linear_part(a, W);
    if (lin.empty())
      throw InternalError("f(d " + sig[i].name + ") has a linear term outside W");
    auto [j, c] = *lin.rbegin();
    Rational inv = 1 / c;
    Element e = dga.gen(i) * inv;
    Element j_image = dga.gen(j) - a * inv;
    auto G = [&](GenIndex q) -> const Element& {
      if (q == i) return b;
      return H.section(q);
    };

    // All corrections are evaluated against the tables of the previous step
    // before any of them is written back.
    std::vector<std::pair<GenIndex, Element>> f_new, phi_new;
    for (GenIndex m = 0; m < i; ++m) {
      const Element& old = f.at(m);
      if (!mentions(old, j)) continue;
      f_new.emplace_back(m, substitute(old, j, j_image));
      Element th = theta(old, j, e, j_image);
      phi_new.emplace_back(m, phi.at(m) + apply_multiplicative(sp, G, th));
    }
    for (auto& [m, x] : f_new) f.set(m, std::move(x));
    for (auto& [m, x] : phi_new) phi.set(m, std::move(x));
    f.set(i, Element(sp));
    phi.set(i, Element(sp));
    W.erase(j);
    pairs.emplace_back(i, j);
  }

  Homotopy H = Homotopy::with_derived_section(dga, f, phi, W);
  GeneratorMap g(sp, sp, 0);
  std::vector<Element> dW(n, Element(sp));
  for (GenIndex w : W) {
    g.set(w, H.section(w));
    dW[w] = apply_multiplicative(f, dga.d(w));
  }
  DGAlgebra target(sp, dW);

  for (GenIndex w : W) {
    const std::string& nm = sig[w].name;
    if (f.at(w) != dga.gen(w)) throw InternalError("f(" + nm + ") is not " + nm);
    if (!in_lambda_geq2(dW[w], W)) throw InternalError("d_W(" + nm + ") is not decomposable in W");
    if (!apply_d(target, dW[w]).is_zero()) throw InternalError("d_W d_W(" + nm + ") is nonzero");
    if (snapshot[w]) {
      bool stale = false;
      for (const auto& [m, c] : snapshot[w]->terms()) stale = stale || !m.uses_only(W);
      if (!stale && *snapshot[w] != dW[w]) throw InternalError("d_W(" + nm + ") changed without cause");
    }
    if (apply_multiplicative(f, apply_d(dga, g.at(w))) != dW[w])
      throw InternalError("d_W(" + nm + ") differs from f d g(" + nm + ")");
  }

  return FullContraction{dga, std::vector<GenIndex>(W.begin(), W.end()), std::move(target), std::move(f),
                         std::move(g), std::move(phi), std::move(pairs)};
}

std::vector<std::pair<GenIndex, Element>> contractible_summand(const FullContraction& c) {
  std::vector<std::pair<GenIndex, Element>> out;
  for (const auto& [mi, mj] : c.pairs) out.emplace_back(mi, c.source.d(mi));
  return out;
}

}  // namespace sullivan
