#pragma once

#include <stdexcept>
#include <string>

namespace bw {

enum class Errc {
  MixedContext,
  DivisionByZero,
  NotQuadraticExtension,
  KindMismatch,
  Inadmissible,
  OrbitTooLarge,
  SeedTagMismatch,
  NoFormula,
  BadShape,
  BadParams,
  MissingData,
  OrderMismatch,
  OddQ,
  BadInput,
  BudgetExceeded,
  SingularMatrix,
  Incomplete,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace bw
