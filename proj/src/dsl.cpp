#include "sullivan/dsl.hpp"

#include "sullivan/minimal_model.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sullivan {

ParseError::ParseError(SourcePosition pos, const std::string& message)
    : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, Newline, End };
  Kind kind;
  std::string text;
  SourcePosition pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < s.size()) {
    char ch = s[i];
    SourcePosition pos{line, col};
    if (ch == '\n') {
      out.push_back({Token::Kind::Newline, "\n", pos});
      ++i;
      ++line;
      col = 1;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      advance(1);
    } else if (ch == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, std::string(s.substr(i, j - i)), pos});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(s.substr(i, j - i)), pos});
      advance(j - i);
    } else if (std::string_view(":=+-*/^(){},").find(ch) != std::string_view::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, ch), pos});
      advance(1);
    } else {
      std::string shown = std::isprint(static_cast<unsigned char>(ch)) ? std::string(1, ch) : "\\x" + [&] {
        const char* hex = "0123456789abcdef";
        auto u = static_cast<unsigned char>(ch);
        return std::string{hex[u >> 4], hex[u & 15]};
      }();
      throw ParseError(pos, "unexpected character '" + shown + "'");
    }
  }
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::Newline:
      return "end of line";
    case Token::Kind::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(std::vector<Token> toks, SignaturePtr sig) : toks_(std::move(toks)), sig_(std::move(sig)) {}

  // Names declared somewhere later in the document; turns "undeclared" into
  // "forward reference".
  void set_declared_later(std::set<std::string> names) { later_ = std::move(names); }
  void set_linear_only(bool on) { linear_only_ = on; }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_punct(char c) const { return peek().kind == Token::Kind::Punct && peek().text[0] == c; }
  bool at_line_end() const { return peek().kind == Token::Kind::Newline || peek().kind == Token::Kind::End; }

  void skip_blank_lines() {
    while (peek().kind == Token::Kind::Newline) take();
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.pos, msg); }

  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "', found " + describe(peek()));
    take();
  }

  Integer expect_uint(const char* what) {
    if (peek().kind != Token::Kind::Int) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return Integer(take().text);
  }

  void expect_line_end() {
    if (!at_line_end()) fail(peek(), "unexpected " + describe(peek()));
    if (peek().kind == Token::Kind::Newline) take();
  }

  GenIndex resolve(const Token& t) const {
    if (auto g = sig_->find(t.text)) return *g;
    if (later_.count(t.text)) fail(t, "forward reference to '" + t.text + "'");
    fail(t, "undeclared identifier '" + t.text + "'");
  }

  Element expr() {
    Element r(sig_);
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (at_punct('+') || at_punct('-')) {
        if (take().text[0] == '-') sign = -1;
      } else if (!first) {
        break;
      }
      r += term() * sign;
      first = false;
    }
    return r;
  }

 private:
  Rational coeff() {
    Integer num(take().text);
    if (!at_punct('/')) return Rational(num);
    take();
    const Token& den_tok = peek();
    Integer den = expect_uint("denominator");
    if (den == 0) fail(den_tok, "zero denominator");
    return Rational(num, den);
  }

  bool at_factor_start() const { return peek().kind == Token::Kind::Ident || at_punct('('); }

  Element term() {
    const Token& start = peek();
    Element r = Element::unit(sig_);
    if (peek().kind == Token::Kind::Int) {
      r *= coeff();
      if (at_punct('*')) {
        take();
      } else if (!at_factor_start()) {
        if (linear_only_ && !r.is_zero()) fail(start, "constant term in module mode");
        return r;
      }
    }
    int factors = 0;
    while (true) {
      const Token& ft = peek();
      if (linear_only_ && factors == 1) fail(ft, "nonlinear expression in module mode");
      r = r * factor();
      ++factors;
      if (!at_punct('*')) break;
      take();
    }
    return r;
  }

  Element factor() {
    if (at_punct('(')) {
      take();
      Element inner = expr();
      expect_punct(')');
      return inner;
    }
    if (peek().kind != Token::Kind::Ident) fail(peek(), "expected a generator or '(', found " + describe(peek()));
    const Token& t = take();
    GenIndex g = resolve(t);
    Integer e = 1;
    if (at_punct('^')) {
      take();
      const Token& et = peek();
      e = expect_uint("exponent");
      if (linear_only_ && e != 1) fail(et, "nonlinear expression in module mode");
      if (e > 1000000) fail(et, "exponent too large");
    }
    Element r = Element::unit(sig_);
    Element x = Element::generator(sig_, g);
    for (Integer k = 0; k < e && !r.is_zero(); ++k) r = r * x;
    return r;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  SignaturePtr sig_;
  std::set<std::string> later_;
  bool linear_only_ = false;
};

}  // namespace

SourceDocument parse_document(std::string_view text) {
  auto toks = tokenize(text);
  auto sig = std::make_shared<Signature>();
  SourceDocument doc;
  doc.signature = sig;

  // Every declared name, so unknown identifiers can be told apart from ones
  // that are merely used too early.
  std::set<std::string> declared;
  for (std::size_t k = 0; k + 1 < toks.size(); ++k) {
    bool line_start = k == 0 || toks[k - 1].kind == Token::Kind::Newline;
    if (line_start && toks[k].kind == Token::Kind::Ident && toks[k].text == "gen" &&
        toks[k + 1].kind == Token::Kind::Ident)
      declared.insert(toks[k + 1].text);
  }

  Parser p(std::move(toks), sig);
  p.set_declared_later(declared);
  std::map<GenIndex, Element> diffs;
  bool seen_statement = false;
  while (true) {
    p.skip_blank_lines();
    if (p.peek().kind == Token::Kind::End) break;
    const Token& kw = p.expect_ident("'gen' or 'd'");
    if (kw.text == "mode") {
      if (seen_statement) p.fail(kw, "mode header must be the first statement");
      const Token& m = p.expect_ident("'algebra' or 'module'");
      if (m.text == "algebra") {
        doc.mode = Mode::Algebra;
      } else if (m.text == "module") {
        doc.mode = Mode::Module;
        p.set_linear_only(true);
      } else {
        p.fail(m, "unknown mode '" + m.text + "'");
      }
      doc.statements.push_back({Statement::Kind::Mode, m.text, kw.pos});
      p.expect_line_end();
    } else if (kw.text == "gen") {
      const Token& name = p.expect_ident("generator name");
      if (sig->find(name.text)) p.fail(name, "duplicate declaration of '" + name.text + "'");
      p.expect_punct(':');
      const Token& deg_tok = p.peek();
      Integer deg = p.expect_uint("degree");
      if (deg > 1000000) p.fail(deg_tok, "degree too large");
      if (deg == 0 && doc.mode == Mode::Algebra)
        p.fail(deg_tok, "generator '" + name.text + "' has degree 0; algebra generators need degree >= 1");
      sig->add(name.text, static_cast<int>(deg));
      declared.erase(name.text);
      p.set_declared_later(declared);
      doc.statements.push_back({Statement::Kind::Gen, name.text, kw.pos});
      p.expect_line_end();
    } else if (kw.text == "d") {
      const Token& name = p.expect_ident("generator name");
      GenIndex g = p.resolve(name);
      if (diffs.count(g)) p.fail(name, "second differential for '" + name.text + "'");
      p.expect_punct('=');
      Element value = p.expr();
      diffs.emplace(g, std::move(value));
      doc.statements.push_back({Statement::Kind::Diff, name.text, kw.pos});
      p.expect_line_end();
    } else {
      p.fail(kw, "expected 'gen' or 'd', found '" + kw.text + "'");
    }
    seen_statement = true;
  }
  doc.diff.assign(sig->size(), Element(sig));
  for (auto& [g, e] : diffs) doc.diff[g] = std::move(e);
  return doc;
}

std::variant<DGAlgebra, DGModule> parse(std::string_view text) {
  SourceDocument doc = parse_document(text);
  if (doc.mode == Mode::Module) return DGModule(doc.signature, std::move(doc.diff));
  return DGAlgebra(doc.signature, std::move(doc.diff));
}

DGAlgebra parse_algebra(std::string_view text) {
  auto v = parse(text);
  if (auto* a = std::get_if<DGAlgebra>(&v)) return std::move(*a);
  throw InvalidInput("expected an algebra description, found a module");
}

DGModule parse_module(std::string_view text) {
  auto v = parse(text);
  if (auto* m = std::get_if<DGModule>(&v)) return std::move(*m);
  throw InvalidInput("expected a module description (mode module)");
}

Element parse_expression(std::string_view text, const SignaturePtr& sig) {
  Parser p(tokenize(text), sig);
  Element e = p.expr();
  if (p.peek().kind != Token::Kind::End) p.fail(p.peek(), "unexpected " + describe(p.peek()));
  return e;
}

namespace {

std::string format_rational(const Rational& q) {
  std::string s = boost::multiprecision::numerator(q).str();
  if (boost::multiprecision::denominator(q) != 1) s += "/" + boost::multiprecision::denominator(q).str();
  return s;
}

std::string format_monomial(const Signature& sig, const Monomial& m) {
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += "*";
    s += sig[f.gen].name;
    if (f.exp > 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

}  // namespace

std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  const Signature& sig = *x.signature();
  std::vector<std::pair<Monomial, Rational>> terms(x.terms().begin(), x.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return print_order_less(sig, a.first, b.first); });
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [m, c] = terms[k];
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (k == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (m.is_unit()) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + "*";
      out += format_monomial(sig, m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Result documents

MachineDocument machine_document(const FullContraction& c) {
  const Signature& sig = c.source.signature();
  MachineDocument doc;
  for (GenIndex w : c.W) {
    doc.W.push_back(sig[w].name);
    doc.dW.push_back({sig[w].name, c.dW(w)});
    doc.g.push_back({sig[w].name, c.g.at(w)});
  }
  for (const auto& gen : sig) {
    doc.f.push_back({gen.name, c.f.at(gen.index)});
    doc.phi.push_back({gen.name, c.phi.at(gen.index)});
  }
  for (const auto& [a, b] : c.pairs) doc.pairs.emplace_back(sig[a].name, sig[b].name);
  return doc;
}

std::string emit_machine(const MachineDocument& doc) {
  std::ostringstream os;
  os << "W = {";
  for (std::size_t k = 0; k < doc.W.size(); ++k) os << (k ? ", " : "") << doc.W[k];
  os << "}\n";
  auto block = [&](const char* key, const std::vector<MachineDocument::Entry>& entries) {
    for (const auto& e : entries) os << key << " " << e.name << " = " << format_element(e.value) << "\n";
  };
  block("dW", doc.dW);
  block("f", doc.f);
  block("g", doc.g);
  block("phi", doc.phi);
  for (const auto& [a, b] : doc.pairs) os << "pair " << a << " " << b << "\n";
  return os.str();
}

std::string emit_machine(const FullContraction& c) { return emit_machine(machine_document(c)); }

MachineDocument parse_machine(std::string_view text, const SignaturePtr& sig) {
  Parser p(tokenize(text), sig);
  MachineDocument doc;
  bool seen_w = false;
  while (true) {
    p.skip_blank_lines();
    if (p.peek().kind == Token::Kind::End) break;
    const Token& kw = p.expect_ident("a result keyword");
    if (kw.text == "W") {
      if (seen_w) p.fail(kw, "second W line");
      seen_w = true;
      p.expect_punct('=');
      p.expect_punct('{');
      if (!p.at_punct('}')) {
        while (true) {
          const Token& n = p.expect_ident("generator name");
          p.resolve(n);
          doc.W.push_back(n.text);
          if (!p.at_punct(',')) break;
          p.take();
        }
      }
      p.expect_punct('}');
    } else if (kw.text == "dW" || kw.text == "f" || kw.text == "g" || kw.text == "phi") {
      const Token& n = p.expect_ident("generator name");
      p.resolve(n);
      p.expect_punct('=');
      MachineDocument::Entry e{n.text, p.expr()};
      auto& into = kw.text == "dW" ? doc.dW : kw.text == "f" ? doc.f : kw.text == "g" ? doc.g : doc.phi;
      into.push_back(std::move(e));
    } else if (kw.text == "pair") {
      const Token& a = p.expect_ident("generator name");
      p.resolve(a);
      const Token& b = p.expect_ident("generator name");
      p.resolve(b);
      doc.pairs.emplace_back(a.text, b.text);
    } else {
      p.fail(kw, "unknown result keyword '" + kw.text + "'");
    }
    p.expect_line_end();
  }
  if (!seen_w) throw ParseError({1, 1}, "missing W line");
  return doc;
}

namespace {

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) {
      line += r[k];
      if (k + 1 < r.size()) line += std::string(width[k] - r[k].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_report(const FullContraction& c) {
  const Signature& sig = c.source.signature();
  GeneratorSet W = c.w_set();
  std::vector<std::vector<std::string>> rows{{"gen", "deg", "in W", "d", "dW", "f", "g", "phi"}};
  for (const auto& gen : sig) {
    bool in = W.count(gen.index) != 0;
    rows.push_back({gen.name, std::to_string(gen.degree), in ? "yes" : "no", format_element(c.source.d(gen.index)),
                    in ? format_element(c.dW(gen.index)) : "-", format_element(c.f.at(gen.index)),
                    in ? format_element(c.g.at(gen.index)) : "-", format_element(c.phi.at(gen.index))});
  }
  std::ostringstream os;
  os << render_table(rows);
  os << "\nW = {";
  for (std::size_t k = 0; k < c.W.size(); ++k) os << (k ? ", " : "") << sig[c.W[k]].name;
  os << "}\n";
  os << "pairs:";
  if (c.pairs.empty()) os << " none";
  os << "\n";
  for (const auto& [a, b] : c.pairs) os << "  (" << sig[a].name << ", " << sig[b].name << ")\n";
  os << "contractible summand:";
  auto summand = contractible_summand(c);
  if (summand.empty()) os << " none";
  os << "\n";
  for (const auto& [u, du] : summand) os << "  " << sig[u].name << ", d " << sig[u].name << " = " << format_element(du) << "\n";
  return os.str();
}

std::string emit_at_report(const DGModule& M, const ATModel& A) {
  const Signature& sig = M.signature();
  GeneratorSet H(A.H.begin(), A.H.end());
  std::vector<std::vector<std::string>> rows{{"gen", "deg", "in H", "d", "f", "g", "phi"}};
  for (const auto& gen : sig) {
    bool in = H.count(gen.index) != 0;
    rows.push_back({gen.name, std::to_string(gen.degree), in ? "yes" : "no", format_element(M.d(gen.index)),
                    format_element(A.f[gen.index]), in ? format_element(A.g[gen.index]) : "-",
                    format_element(A.phi[gen.index])});
  }
  std::ostringstream os;
  os << render_table(rows);
  os << "\nH = {";
  for (std::size_t k = 0; k < A.H.size(); ++k) os << (k ? ", " : "") << sig[A.H[k]].name;
  os << "}\npairs:";
  if (A.pairs.empty()) os << " none";
  os << "\n";
  for (const auto& [a, b] : A.pairs) os << "  (" << sig[a].name << ", " << sig[b].name << ")\n";
  return os.str();
}

std::string emit_at_machine(const DGModule& M, const ATModel& A) {
  const Signature& sig = M.signature();
  std::ostringstream os;
  os << "H = {";
  for (std::size_t k = 0; k < A.H.size(); ++k) os << (k ? ", " : "") << sig[A.H[k]].name;
  os << "}\n";
  for (const auto& gen : sig) os << "f " << gen.name << " = " << format_element(A.f[gen.index]) << "\n";
  for (GenIndex h : A.H) os << "g " << sig[h].name << " = " << format_element(A.g[h]) << "\n";
  for (const auto& gen : sig) os << "phi " << gen.name << " = " << format_element(A.phi[gen.index]) << "\n";
  for (const auto& [a, b] : A.pairs) os << "pair " << sig[a].name << " " << sig[b].name << "\n";
  return os.str();
}

}  // namespace sullivan
