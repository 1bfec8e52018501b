#pragma once

#include "sullivan/dsl.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace testsupport {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline sullivan::DGAlgebra sample(const std::string& name) {
  return sullivan::parse_algebra(read_text(std::string(SAMPLES_DIR) + "/" + name + ".sul"));
}

// Shorthand: parse an expression over the algebra's signature.
inline sullivan::Element ex(const sullivan::DGAlgebra& A, const std::string& text) {
  return sullivan::parse_expression(text, A.signature_ptr());
}

}  // namespace testsupport
