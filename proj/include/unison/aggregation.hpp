#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unison/protocol.hpp"
#include "unison/walks.hpp"

namespace unison {

/// Top element of the min-plus carrier. Saturating: r(inf) = inf.
inline constexpr Value kInfinity = std::numeric_limits<Value>::max();

/// Associative, commutative, idempotent operator with identity e (the
/// greatest element for x <= y  iff  x (+) y = x).
class InfimumOp {
 public:
  using Combine = std::function<Value(Value, Value)>;

  InfimumOp();  // min over the integers with +inf
  InfimumOp(std::string name, Combine combine, Value identity,
            std::optional<std::vector<Value>> carrier = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  Value identity() const noexcept { return identity_; }
  /// Finite carrier, when there is one; law checks then become exhaustive.
  const std::optional<std::vector<Value>>& carrier() const noexcept { return carrier_; }

  Value operator()(Value a, Value b) const { return combine_(a, b); }
  bool leq(Value x, Value y) const { return combine_(x, y) == x; }
  Value fold(std::span<const Value> values) const;

 private:
  std::string name_;
  Combine combine_;
  Value identity_;
  std::optional<std::vector<Value>> carrier_;
};

namespace operators {

InfimumOp min();
InfimumOp max();
/// Over non-negative integers; identity 0 (everything divides 0).
InfimumOp gcd();
/// Bitwise and over `bits`-wide vectors; identity all ones.
InfimumOp bit_and(unsigned bits = 16);
/// Intersection of subsets of a `universe`-element set encoded as bitmasks.
InfimumOp set_intersection(unsigned universe = 16);
/// Custom operator on {0..m-1} given by its Cayley table.
InfimumOp table(std::vector<std::vector<Value>> cayley, Value identity);

/// "min", "max", "gcd", "bitand", "set-intersection", "min-plus" (== min).
InfimumOp by_name(const std::string& name);

}  // namespace operators

/// A (+)-endomorphism used on one directed link.
class RFunction {
 public:
  enum class Kind { Identity, Add, Mask, Table, Custom };

  static RFunction identity();
  /// x + w, saturating at kInfinity.
  static RFunction add(Value w);
  static RFunction mask(Value m);
  static RFunction table(std::vector<Value> image);
  static RFunction custom(std::string name, std::function<Value(Value)> fn);

  Kind kind() const noexcept { return kind_; }
  Value param() const noexcept { return param_; }
  std::string describe() const;
  Value operator()(Value x) const;

 private:
  Kind kind_ = Kind::Identity;
  Value param_ = 0;
  std::vector<Value> image_;
  std::string name_;
  std::function<Value(Value)> fn_;
};

/// Infimum plus an r-function r_{q,p} per directed link q -> p; r_{p,p} = id.
class RSystem {
 public:
  explicit RSystem(InfimumOp op) : op_(std::move(op)) {}

  const InfimumOp& op() const noexcept { return op_; }
  void set(Process from, Process to, RFunction f);
  /// Identity for from == to or an unset link.
  const RFunction& at(Process from, Process to) const;

  /// r_m(head(m).v0): r-functions composed along the walk.
  Value eval(const Walk& m, std::span<const Value> v0) const;

  const std::map<std::pair<Process, Process>, RFunction>& links() const noexcept {
    return links_;
  }

 private:
  InfimumOp op_;
  std::map<std::pair<Process, Process>, RFunction> links_;
};

using EdgeWeights = std::map<std::pair<Process, Process>, Value>;

/// Min-plus system: r_{q,p}(x) = x + w(q,p). Weights are symmetric unless
/// both directions are listed; missing edges default to weight 1.
RSystem min_plus(const Graph& g, const EdgeWeights& weights);

struct LawReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Associativity, commutativity, idempotence and identity, over the finite
/// carrier when the operator has one, else over `sample`.
LawReport check_laws(const InfimumOp& op, std::span<const Value> sample);

/// Operator laws plus, for every link, r(x (+) y) = r(x) (+) r(y) and
/// x <= r(x).
LawReport check_laws(const RSystem& sys, std::span<const Value> sample);

enum class TaskKind { GlobalInfimum, BallInfimum, ROperator };

const char* to_string(TaskKind k) noexcept;
TaskKind task_kind_from_string(const std::string& name);

struct TaskSpec {
  TaskKind kind = TaskKind::GlobalInfimum;
  InfimumOp op;
  /// Radius for BallInfimum.
  std::size_t rho = 1;
  /// Required for ROperator.
  std::optional<RSystem> rsys;
  /// v0 per process.
  std::vector<Value> inputs;
};

/// Smallest delta for which the decide cut holds the right value:
/// D+1 (global), rho+1 (ball), longest simple path + 1 (r-operator).
Clock required_delta(const Graph& g, const TaskSpec& task);

/// CS2 loads the input and resets the working registers; CS1 performs one
/// aggregation round from the neighbours' registers. Throws
/// Error{DeltaTooSmall} or Error{InvalidTask}.
CriticalSections cs_handlers(const Graph& g, const ProtocolParams& params, const TaskSpec& task);

/// The register holding the task's output at a decide cut (v2 for the ball
/// task, res otherwise).
Value read_result(const TaskSpec& task, const ProcessState& state);

std::vector<Value> oracle_global_infimum(const Graph& g, const InfimumOp& op,
                                         std::span<const Value> v0);

/// (+) of v0 over V(p, rho), per process.
std::vector<Value> oracle_ball_infimum(const Graph& g, const InfimumOp& op,
                                       std::span<const Value> v0, std::size_t rho);

/// (+) of eval(mu) over every simple walk mu ending at p. Throws
/// Error{TooLarge} when n > max_n.
std::vector<Value> oracle_r_operator(const Graph& g, const RSystem& sys, std::span<const Value> v0,
                                     std::size_t max_n = 10);

/// Oracle matching the task kind.
std::vector<Value> task_oracle(const Graph& g, const TaskSpec& task);

}  // namespace unison
