#pragma once

// Text formats. Algebra descriptions:
//
//   mode algebra            # or: mode module; optional, default algebra
//   gen a1 : 1
//   gen v2 : 2
//   d a1 = v2
//   d u3 = v2^2 - 1/2*a1*b1
//
// Result documents use the same expression syntax, one fact per line:
//
//   W = {b1, c1, u3}
//   dW u3 = 0
//   f v2 = 0
//   g u3 = -v2*a1 + u3
//   phi v2 = a1
//   pair a1 v2

#include "sullivan/at_model.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/morphisms.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sullivan {

struct SourcePosition {
  int line = 0;
  int column = 0;
  bool operator==(const SourcePosition&) const = default;
};

class ParseError : public Error {
 public:
  ParseError(SourcePosition pos, const std::string& message);
  const SourcePosition& position() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePosition pos_;
  std::string message_;
};

enum class Mode { Algebra, Module };

struct Statement {
  enum class Kind { Mode, Gen, Diff };
  Kind kind;
  std::string name;
  SourcePosition position;
};

struct SourceDocument {
  Mode mode = Mode::Algebra;
  std::vector<Statement> statements;
  SignaturePtr signature;
  std::vector<Element> diff;  // one entry per generator
};

// Throws ParseError.
SourceDocument parse_document(std::string_view text);

// The parsed document turned into its algebraic object. Structural checks
// beyond the grammar (Sullivan order, d d = 0) are left to validate_sullivan
// for algebras; DGModule construction throws InvalidInput for modules.
std::variant<DGAlgebra, DGModule> parse(std::string_view text);
DGAlgebra parse_algebra(std::string_view text);
DGModule parse_module(std::string_view text);

Element parse_expression(std::string_view text, const SignaturePtr& sig);
std::string format_element(const Element& x);

struct MachineDocument {
  struct Entry {
    std::string name;
    Element value;
  };
  std::vector<std::string> W;
  std::vector<Entry> dW, f, g, phi;
  std::vector<std::pair<std::string, std::string>> pairs;
};

MachineDocument machine_document(const FullContraction& c);
MachineDocument parse_machine(std::string_view text, const SignaturePtr& sig);
std::string emit_machine(const MachineDocument& doc);
std::string emit_machine(const FullContraction& c);

std::string emit_report(const FullContraction& c);
std::string emit_at_report(const DGModule& M, const ATModel& A);
std::string emit_at_machine(const DGModule& M, const ATModel& A);

}  // namespace sullivan
