#pragma once

#include <stdexcept>
#include <string>

namespace qhsp {

/// Base class for all toolkit errors. `code()` is a stable machine-readable
/// identifier; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), m_code(std::move(code)) {}
  const std::string& code() const { return m_code; }

private:
  std::string m_code;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& m) : Error("DimensionMismatch", m) {}
};
struct NotQuaternionic : Error {
  explicit NotQuaternionic(const std::string& m) : Error("NotQuaternionic", m) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error("DomainError", m) {}
};
struct NotInGroup : Error {
  explicit NotInGroup(const std::string& m) : Error("NotInGroup", m) {}
};
struct DegenerateLine : Error {
  explicit DegenerateLine(const std::string& m) : Error("DegenerateLine", m) {}
};
struct ZeroVector : Error {
  explicit ZeroVector(const std::string& m) : Error("ZeroVector", m) {}
};
struct NotInSp4 : Error {
  explicit NotInSp4(const std::string& m) : Error("NotInSp4", m) {}
};
struct NotPreservingW : Error {
  explicit NotPreservingW(const std::string& m) : Error("NotPreservingW", m) {}
};
struct SingularSystem : Error {
  explicit SingularSystem(const std::string& m) : Error("SingularSystem", m) {}
};
struct ZeroWeight : Error {
  explicit ZeroWeight(const std::string& m) : Error("ZeroWeight", m) {}
};
struct DetNotOne : Error {
  explicit DetNotOne(const std::string& m) : Error("DetNotOne", m) {}
};
struct NotInSU11 : Error {
  explicit NotInSU11(const std::string& m) : Error("NotInSU11", m) {}
};
struct NotInSO21 : Error {
  explicit NotInSO21(const std::string& m) : Error("NotInSO21", m) {}
};
struct ActionRelatorMismatch : Error {
  explicit ActionRelatorMismatch(const std::string& m) : Error("ActionRelatorMismatch", m) {}
};
struct NotACocycle : Error {
  explicit NotACocycle(const std::string& m) : Error("NotACocycle", m) {}
};
struct FormDegenerate : Error {
  explicit FormDegenerate(const std::string& m) : Error("FormDegenerate", m) {}
};
struct ZeroInput : Error {
  explicit ZeroInput(const std::string& m) : Error("ZeroInput", m) {}
};

/// Raised by the order-by-order conjugation when the order-j obstruction
/// class in H^1(g/h) is not a coboundary. Carries the failing order.
class ObstructionNonzero : public Error {
public:
  ObstructionNonzero(int order, const std::string& m)
      : Error("ObstructionNonzero", "order " + std::to_string(order) + ": " + m),
        m_order(order) {}
  int order() const { return m_order; }

private:
  int m_order;
};

struct NotUnit : Error {
  explicit NotUnit(const std::string& m) : Error("NotUnit", m) {}
};
struct NotLoxodromic : Error {
  explicit NotLoxodromic(const std::string& m) : Error("NotLoxodromic", m) {}
};
struct AxisDegenerate : Error {
  explicit AxisDegenerate(const std::string& m) : Error("AxisDegenerate", m) {}
};
struct InconsistentCrossings : Error {
  explicit InconsistentCrossings(const std::string& m) : Error("InconsistentCrossings", m) {}
};
struct LogDivergent : Error {
  explicit LogDivergent(const std::string& m) : Error("LogDivergent", m) {}
};
struct UnknownSuite : Error {
  explicit UnknownSuite(const std::string& m) : Error("UnknownSuite", m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};
struct SchemaError : Error {
  explicit SchemaError(const std::string& m) : Error("SchemaError", m) {}
};
struct OverflowError : Error {
  explicit OverflowError(const std::string& m) : Error("OverflowError", m) {}
};

} // namespace qhsp
