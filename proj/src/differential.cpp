#include "sullivan/differential.hpp"

#include "sullivan/errors.hpp"

namespace sullivan {

DGAlgebra::DGAlgebra(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw InvalidInput("DGAlgebra needs a signature");
  diff_.assign(sig_->size(), Element(sig_));
}

DGAlgebra::DGAlgebra(SignaturePtr sig, std::vector<Element> diff) : DGAlgebra(std::move(sig)) {
  if (diff.size() > sig_->size()) throw InvalidInput("more differentials than generators");
  for (std::size_t i = 0; i < diff.size(); ++i) {
    common_signature(sig_, diff[i].signature());
    diff_[i] += diff[i];
  }
}

const Element& DGAlgebra::d(GenIndex g) const {
  (*sig_)[g];
  return diff_[g];
}

Element apply_d(const DGAlgebra& dga, const Element& x) {
  const SignaturePtr& sp = dga.signature_ptr();
  common_signature(sp, x.signature());
  const Signature& sig = *sp;
  Element r(sp);
  for (const auto& [m, c] : x.terms()) {
    auto fs = m.factors();
    // d(prefix * g^e * suffix) contributes (-1)^|prefix| e prefix d(g) g^(e-1) suffix.
    int prefix_deg = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const auto& fk = fs[k];
      const Element& dg = dga.d(fk.gen);
      if (!dg.is_zero()) {
        std::vector<Monomial::Factor> pre(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<Monomial::Factor> post;
        if (fk.exp > 1) post.push_back({fk.gen, fk.exp - 1});
        post.insert(post.end(), fs.begin() + static_cast<std::ptrdiff_t>(k) + 1, fs.end());
        Element left(sp, Monomial::from_factors(std::move(pre)));
        Element right(sp, Monomial::from_factors(std::move(post)));
        Rational coef = c * static_cast<long>(fk.exp);
        if (prefix_deg & 1) coef = -coef;
        r += (left * dg * right) * coef;
      }
      prefix_deg += sig.degree(fk.gen) * static_cast<int>(fk.exp);
    }
  }
  return r;
}

ValidationReport validate_sullivan(const DGAlgebra& dga) {
  ValidationReport rep;
  const Signature& sig = dga.signature();
  auto name = [&](GenIndex g) { return sig[g].name; };
  for (const auto& gen : sig) {
    GenIndex i = gen.index;
    if (gen.degree < 1)
      rep.violations.push_back({Violation::Kind::NonPositiveDegree, i, std::nullopt,
                                "generator " + name(i) + " has degree " + std::to_string(gen.degree) +
                                    "; Sullivan generators need degree >= 1"});
    const Element& dm = dga.d(i);
    if (dm.is_zero()) continue;
    auto deg = dm.degree();
    if (!deg) {
      rep.violations.push_back({Violation::Kind::Inhomogeneous, i, std::nullopt,
                                "d(" + name(i) + ") is not homogeneous"});
    } else if (*deg != gen.degree + 1) {
      rep.violations.push_back({Violation::Kind::DegreeMismatch, i, std::nullopt,
                                "d(" + name(i) + ") has degree " + std::to_string(*deg) + ", expected " +
                                    std::to_string(gen.degree + 1)});
    }
    for (const auto& [m, c] : dm.terms()) {
      for (const auto& f : m.factors()) {
        if (f.gen >= i) {
          rep.violations.push_back({Violation::Kind::OrderViolation, i, m,
                                    "d(" + name(i) + ") uses " + name(f.gen) +
                                        ", which is not declared before " + name(i)});
          break;
        }
      }
    }
  }
  for (const auto& gen : sig) {
    const Element& dm = dga.d(gen.index);
    if (dm.is_zero()) continue;
    Element dd = apply_d(dga, dm);
    if (!dd.is_zero())
      rep.violations.push_back({Violation::Kind::NotSquareZero, gen.index, dd.terms().begin()->first,
                                "d(d(" + gen.name + ")) is nonzero"});
  }
  return rep;
}

}  // namespace sullivan
