#pragma once

#include <stdexcept>
#include <string>

#include "chorex/rational.hpp"

namespace chorex {

// Domain errors carry a stable kind tag that the CLI maps into error documents.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error("schema", msg) {}
};

struct NormalizationError : Error {
  NormalizationError(int agent_1based, Rational total, const std::string& msg)
      : Error("normalization", msg), agent(agent_1based), sum(std::move(total)) {}
  int agent;
  Rational sum;
};

struct NegativeDensityError : Error {
  explicit NegativeDensityError(const std::string& msg)
      : Error("negative_density", msg) {}
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error("dimension", msg) {}
};

struct NotTwoAgents : Error {
  explicit NotTwoAgents(const std::string& msg) : Error("not_two_agents", msg) {}
};

struct NotPiecewiseConstant : Error {
  explicit NotPiecewiseConstant(const std::string& msg)
      : Error("not_piecewise_constant", msg) {}
};

struct BadParams : Error {
  explicit BadParams(const std::string& msg) : Error("bad_params", msg) {}
};

struct BadRange : Error {
  explicit BadRange(const std::string& msg) : Error("bad_range", msg) {}
};

// Cut target exceeds the mass available to the right of x.
struct Unreachable : Error {
  Unreachable(Rational missing, const std::string& msg)
      : Error("unreachable", msg), shortfall(std::move(missing)) {}
  Rational shortfall;
};

// The exact solution of a quadratic piece is irrational; the core only
// represents rational breakpoints.
struct IrrationalCutError : Error {
  explicit IrrationalCutError(const std::string& msg)
      : Error("irrational_cut", msg) {}
};

struct OutOfRange : Error {
  explicit OutOfRange(const std::string& msg) : Error("out_of_range", msg) {}
};

struct BadEps : Error {
  explicit BadEps(const std::string& msg) : Error("bad_eps", msg) {}
};

struct InvalidFractions : Error {
  explicit InvalidFractions(const std::string& msg)
      : Error("invalid_fractions", msg) {}
};

struct InfeasibleModel : Error {
  explicit InfeasibleModel(const std::string& msg)
      : Error("infeasible_model", msg) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg)
      : Error("budget_exceeded", msg) {}
};

// No grid allocation satisfies the requested constraints.
struct NoFeasible : Error {
  explicit NoFeasible(const std::string& msg) : Error("no_feasible", msg) {}
};

// Search budget exhausted without a witness; not a proof of nonexistence.
struct NotFound : Error {
  explicit NotFound(const std::string& msg) : Error("not_found", msg) {}
};

struct OracleContractError : Error {
  explicit OracleContractError(const std::string& msg)
      : Error("oracle_contract", msg) {}
};

}  // namespace chorex
