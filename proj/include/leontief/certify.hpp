#pragma once

#include "leontief/dual_solver.hpp"
#include "leontief/model.hpp"
#include "leontief/outcome.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace leontief {

/// Result of an exact certificate check; `failure` names the first violated
/// condition.
struct Verdict {
    bool ok = true;
    std::string failure;

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

// All verifiers throw std::invalid_argument on dimension mismatch.
Verdict verify_primal_feasible(const Instance& inst, const RationalVector& x);
Verdict verify_dual_feasible(const Instance& inst, const RationalVector& y);
Verdict verify_farkas_primal(const Instance& inst, const RationalVector& z);
Verdict verify_farkas_dual(const Instance& inst, const RationalVector& r);
/// Dispatches on the outcome case; Optimal additionally needs c^T x = b^T y.
Verdict verify_outcome(const Instance& inst, const Outcome& outcome);

class InvalidInstance : public std::runtime_error {
public:
    explicit InvalidInstance(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

class NotGainfree : public std::runtime_error {
public:
    explicit NotGainfree(CycleWitness witness);
    const CycleWitness& witness() const { return witness_; }

private:
    CycleWitness witness_;
};

/// A produced certificate failed verification. Never expected; surfaced
/// instead of returning a wrong answer.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SolveOptions {
    /// Callers that guarantee gainfreeness may skip the up-front check.
    bool check_gainfree = true;
};

struct SolveReport {
    Outcome outcome;
    NormalizedInstance normalized;
    DualTrace trace;
};

/// Full four-way classification with certificates on the original instance.
/// Throws InvalidInstance, NotGainfree, or InternalError.
SolveReport solve_detailed(const Instance& inst, const SolveOptions& options = {});
Outcome solve(const Instance& inst, const SolveOptions& options = {});

}  // namespace leontief
