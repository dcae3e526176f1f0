#pragma once

#include <stdexcept>
#include <string>

namespace phopf {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define PHOPF_ERROR(Name)                                              \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  }

PHOPF_ERROR(DimensionMismatch);
PHOPF_ERROR(FieldMismatch);
PHOPF_ERROR(DivisionByZero);
PHOPF_ERROR(InvalidGroupTable);
PHOPF_ERROR(MalformedTable);
PHOPF_ERROR(ActionAxiomFailure);
PHOPF_ERROR(CoactionAxiomFailure);
PHOPF_ERROR(NotIdempotent);
PHOPF_ERROR(NotCentral);
PHOPF_ERROR(NotGlobal);
PHOPF_ERROR(NotSymmetric);
PHOPF_ERROR(PairingAxiomFailure);
PHOPF_ERROR(DegeneratePairing);
PHOPF_ERROR(NoSolution);
PHOPF_ERROR(CompatibilityFailure);
PHOPF_ERROR(WellDefinednessFailure);
PHOPF_ERROR(NotAFunctor);
PHOPF_ERROR(NotStarInjective);
PHOPF_ERROR(DualStarFailure);
PHOPF_ERROR(ProjectionFailure);
PHOPF_ERROR(NotACoideal);
PHOPF_ERROR(QuotientNotCoalgebra);
PHOPF_ERROR(ComoduleCoalgebraFailure);
PHOPF_ERROR(SchemaError);
PHOPF_ERROR(UnresolvedReference);

#undef PHOPF_ERROR

// Raised by constructors whose theorem hypotheses fail; names the hypothesis.
class PreconditionFailure : public Error {
 public:
  explicit PreconditionFailure(const std::string& hypothesis)
      : Error("PreconditionFailure", hypothesis), hypothesis_(hypothesis) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace phopf
