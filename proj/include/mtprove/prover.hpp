#pragma once

// Proof steps, certificates, scripted and automatic proving, and the
// independent certificate checker.

#include "mtprove/bounds.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mtprove {

// Claim: expr > 0 on the interval.
struct Goal {
    MTPExpr expr;
    Interval interval;
    Var var = Var::T;
    friend bool operator==(const Goal&, const Goal&) = default;
};

namespace step {
struct SubstituteSin {
    friend bool operator==(const SubstituteSin&, const SubstituteSin&) = default;
};
struct MulPositive {
    MTPExpr multiplier;
    friend bool operator==(const MulPositive&, const MulPositive&) = default;
};
struct Split {
    Rational point;
    friend bool operator==(const Split&, const Split&) = default;
};
struct Reflect {
    friend bool operator==(const Reflect&, const Reflect&) = default;
};
struct ApplyBounds {
    std::vector<BoundAssignment> assignment;
    std::vector<AppliedBound> applied;
    friend bool operator==(const ApplyBounds&, const ApplyBounds&) = default;
};
struct SecantBound {
    MTPExpr coefficient;
    friend bool operator==(const SecantBound&, const SecantBound&) = default;
};
struct ToFourier {
    friend bool operator==(const ToFourier&, const ToFourier&) = default;
};
struct FactorMonomial {
    int multiplicity = 0;
    Rational scale;
    friend bool operator==(const FactorMonomial&, const FactorMonomial&) = default;
};
struct SubstituteSquare {
    friend bool operator==(const SubstituteSquare&, const SubstituteSquare&) = default;
};
struct Sturm {
    PositivityCertificate certificate;
    friend bool operator==(const Sturm&, const Sturm&) = default;
};
struct PatternPositive {
    friend bool operator==(const PatternPositive&, const PatternPositive&) = default;
};
} // namespace step

using Step = std::variant<step::SubstituteSin, step::MulPositive, step::Split, step::Reflect, step::ApplyBounds,
                          step::SecantBound, step::ToFourier, step::FactorMonomial, step::SubstituteSquare,
                          step::Sturm, step::PatternPositive>;

std::string step_name(const Step& s);

// children: the goals the step reduces to (two for split, none for leaves).
// side: proofs of the step's side conditions (multiplier positivity,
// secant coefficient positivity and concavity).
struct ProofNode {
    std::string label;
    Goal goal;
    Step step;
    std::vector<ProofNode> side;
    std::vector<ProofNode> children;
    friend bool operator==(const ProofNode&, const ProofNode&) = default;
};

struct Stats {
    int nodes = 0;
    int sturm_leaves = 0;
    int max_poly_degree = 0;
    int max_digits = 0;
    friend bool operator==(const Stats&, const Stats&) = default;
};

inline constexpr const char* kSchema = "mtp-certificate/1";

struct Certificate {
    std::string schema = kSchema;
    Goal goal;
    ProofNode proof;
    std::vector<std::string> notes;
    Stats stats;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

Stats compute_stats(const ProofNode& root);

// --- single steps ----------------------------------------------------------

Goal substitute_sin(const Goal& g);
Goal multiply(const Goal& g, const MTPExpr& m);
Goal multiplier_goal(const Goal& g, const MTPExpr& m);
std::pair<Goal, Goal> split(const Goal& g, const Rational& point, const Precision& prec = {});
Goal reflect(const Goal& g);
// Child goal and step record; the child is absent when the bounded
// expression is identically zero.
std::pair<std::optional<Goal>, step::ApplyBounds> apply_bounds(const Goal& g, std::vector<BoundAssignment> assignment,
                                                               const Precision& prec = {});
// Child goal, coefficient-positivity goal and concavity goal.
struct SecantGoals {
    Goal child;
    Goal coefficient;
    Goal concavity;
    MTPExpr coefficient_expr;
};
SecantGoals secant_bound(const Goal& g, const Precision& prec = {});
Goal to_fourier(const Goal& g);
std::pair<Goal, step::FactorMonomial> factor_monomial(const Goal& g, const Precision& prec = {});
Goal substitute_square(const Goal& g, const Precision& prec = {});
step::Sturm sturm(const Goal& g, const Precision& prec = {});

// Throws when the goal expression normalizes to zero.
void reject_degenerate(const Goal& g);

// --- scripts ---------------------------------------------------------------

struct Script;

struct Directive {
    enum class Kind {
        SubstituteSin, MulPositive, Split, Reflect, Bound, Secant, ToFourier, FactorMonomial, SubstSquare, Sturm, Auto
    };
    Kind kind = Kind::Sturm;
    int line = 0;
    std::string text;
    MTPExpr multiplier;
    Rational point;
    std::vector<BoundAssignment> bounds;
    std::vector<Script> branches;  // left and right after a split
};

struct Script {
    std::vector<std::string> notes;
    std::vector<Directive> steps;
};

// A script step failed; carries the line, the directive and the goal.
class ScriptFailure : public Error {
public:
    ScriptFailure(int line, const std::string& directive, const std::string& goal, const std::string& why)
        : Error("line " + std::to_string(line) + " (" + directive + "): " + why + "; goal: " + goal), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct ProverConfig {
    Precision prec;
    int max_split_depth = 6;
    int max_degree = 23;
    bool parallel = true;
};

Certificate run_script(const Goal& g, const Script& s, const ProverConfig& cfg = {});

// --- automatic mode --------------------------------------------------------

class ProofFailure : public Error {
public:
    using Error::Error;
};

// Sampling found a point where the goal expression is not positive.
class Disproved : public ProofFailure {
public:
    using ProofFailure::ProofFailure;
};

// Searches bound degrees, rational bisection splits and reflection of right
// pieces ending at pi/2. Throws ProofFailure on exhaustion.
ProofNode auto_prove(const Goal& g, const ProverConfig& cfg = {});
Certificate auto_certificate(const Goal& g, const ProverConfig& cfg = {});

struct Counterexample {
    Real point;
    Real value;
};
// Equispaced and seeded random points; first point with value <= 0.
std::optional<Counterexample> numeric_falsify(const Goal& g, int samples = 1000, unsigned seed = 1);

// --- checking --------------------------------------------------------------

struct CheckResult {
    bool accepted = false;
    std::string reason;
};

// Re-derives every step from its goal and recorded parameters.
CheckResult verify_certificate(const Certificate& c, const Precision& prec = {});

std::string format(const Goal& g);
std::string format(const Interval& iv, Var v);

} // namespace mtprove
