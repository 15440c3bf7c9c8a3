#include "unison/aggregation.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "unison/error.hpp"

namespace unison {

InfimumOp::InfimumOp() : InfimumOp(operators::min()) {}

InfimumOp::InfimumOp(std::string name, Combine combine, Value identity,
                     std::optional<std::vector<Value>> carrier)
    : name_(std::move(name)),
      combine_(std::move(combine)),
      identity_(identity),
      carrier_(std::move(carrier)) {}

Value InfimumOp::fold(std::span<const Value> values) const {
  Value acc = identity_;
  for (Value v : values) acc = combine_(acc, v);
  return acc;
}

namespace operators {

InfimumOp min() {
  return {"min", [](Value a, Value b) { return std::min(a, b); }, kInfinity};
}

InfimumOp max() {
  return {"max", [](Value a, Value b) { return std::max(a, b); },
          std::numeric_limits<Value>::min()};
}

InfimumOp gcd() {
  return {"gcd", [](Value a, Value b) { return std::gcd(a, b); }, 0};
}

InfimumOp bit_and(unsigned bits) {
  const Value all = bits >= 63 ? std::numeric_limits<Value>::max() : (Value{1} << bits) - 1;
  return {"bitand", [](Value a, Value b) { return a & b; }, all};
}

InfimumOp set_intersection(unsigned universe) {
  InfimumOp op = bit_and(universe);
  return {"set-intersection", [](Value a, Value b) { return a & b; }, op.identity()};
}

InfimumOp table(std::vector<std::vector<Value>> cayley, Value identity) {
  const auto m = static_cast<Value>(cayley.size());
  for (const auto& row : cayley) {
    if (static_cast<Value>(row.size()) != m) {
      throw Error(Errc::InvalidTask, "operator table must be square");
    }
    for (Value v : row) {
      if (v < 0 || v >= m) throw Error(Errc::InvalidTask, "operator table leaves the carrier");
    }
  }
  if (identity < 0 || identity >= m) throw Error(Errc::InvalidTask, "identity outside carrier");
  std::vector<Value> carrier(static_cast<std::size_t>(m));
  std::iota(carrier.begin(), carrier.end(), Value{0});
  auto shared = std::make_shared<std::vector<std::vector<Value>>>(std::move(cayley));
  return {"table",
          [shared](Value a, Value b) {
            return (*shared).at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
          },
          identity, std::move(carrier)};
}

InfimumOp by_name(const std::string& name) {
  if (name == "min" || name == "min-plus") return min();
  if (name == "max") return max();
  if (name == "gcd") return gcd();
  if (name == "bitand") return bit_and();
  if (name == "set-intersection") return set_intersection();
  throw Error(Errc::InvalidTask, "unknown operator '" + name + "'");
}

}  // namespace operators

RFunction RFunction::identity() { return RFunction{}; }

RFunction RFunction::add(Value w) {
  RFunction f;
  f.kind_ = Kind::Add;
  f.param_ = w;
  return f;
}

RFunction RFunction::mask(Value m) {
  RFunction f;
  f.kind_ = Kind::Mask;
  f.param_ = m;
  return f;
}

RFunction RFunction::table(std::vector<Value> image) {
  RFunction f;
  f.kind_ = Kind::Table;
  f.image_ = std::move(image);
  return f;
}

RFunction RFunction::custom(std::string name, std::function<Value(Value)> fn) {
  RFunction f;
  f.kind_ = Kind::Custom;
  f.name_ = std::move(name);
  f.fn_ = std::move(fn);
  return f;
}

std::string RFunction::describe() const {
  switch (kind_) {
    case Kind::Identity: return "id";
    case Kind::Add: return "x+" + std::to_string(param_);
    case Kind::Mask: return "x&" + std::to_string(param_);
    case Kind::Table: return "table";
    case Kind::Custom: return name_;
  }
  return "?";
}

Value RFunction::operator()(Value x) const {
  switch (kind_) {
    case Kind::Identity:
      return x;
    case Kind::Add: {
      if (x == kInfinity) return kInfinity;
      Value out = 0;
      if (__builtin_add_overflow(x, param_, &out) || out == kInfinity) return kInfinity;
      return out;
    }
    case Kind::Mask:
      return x & param_;
    case Kind::Table:
      return image_.at(static_cast<std::size_t>(x));
    case Kind::Custom:
      return fn_(x);
  }
  return x;
}

void RSystem::set(Process from, Process to, RFunction f) {
  links_.insert_or_assign({from, to}, std::move(f));
}

const RFunction& RSystem::at(Process from, Process to) const {
  static const RFunction kIdentity = RFunction::identity();
  if (from == to) return kIdentity;
  auto it = links_.find({from, to});
  return it == links_.end() ? kIdentity : it->second;
}

Value RSystem::eval(const Walk& m, std::span<const Value> v0) const {
  Value x = v0[m.front()];
  for (std::size_t i = 0; i + 1 < m.size(); ++i) x = at(m[i], m[i + 1])(x);
  return x;
}

RSystem min_plus(const Graph& g, const EdgeWeights& weights) {
  RSystem sys(operators::min());
  for (const Edge& e : g.edges()) {
    auto fwd = weights.find({e.u, e.v});
    auto back = weights.find({e.v, e.u});
    Value w_uv = fwd != weights.end() ? fwd->second : back != weights.end() ? back->second : 1;
    Value w_vu = back != weights.end() ? back->second : w_uv;
    if (w_uv < 0 || w_vu < 0) {
      throw Error(Errc::InvalidTask, "min-plus weights must be non-negative");
    }
    sys.set(e.u, e.v, RFunction::add(w_uv));
    sys.set(e.v, e.u, RFunction::add(w_vu));
  }
  for (const auto& [link, w] : weights) {
    if (!g.adjacent(link.first, link.second)) {
      throw Error(Errc::InvalidTask, "weight on a non-edge (" + std::to_string(link.first) +
                                         "," + std::to_string(link.second) + ")");
    }
  }
  return sys;
}

namespace {

std::string show(Value v) { return v == kInfinity ? "inf" : std::to_string(v); }

std::vector<Value> law_domain(const InfimumOp& op, std::span<const Value> sample) {
  std::vector<Value> dom = op.carrier() ? *op.carrier()
                                        : std::vector<Value>(sample.begin(), sample.end());
  if (std::find(dom.begin(), dom.end(), op.identity()) == dom.end()) {
    dom.push_back(op.identity());
  }
  return dom;
}

}  // namespace

LawReport check_laws(const InfimumOp& op, std::span<const Value> sample) {
  LawReport rep;
  const auto dom = law_domain(op, sample);
  for (Value x : dom) {
    ++rep.checks;
    if (op(x, x) != x) rep.violations.push_back("not idempotent at " + show(x));
    if (op(x, op.identity()) != x) rep.violations.push_back("identity fails at " + show(x));
    for (Value y : dom) {
      ++rep.checks;
      if (op(x, y) != op(y, x)) {
        rep.violations.push_back("not commutative at " + show(x) + "," + show(y));
      }
      for (Value z : dom) {
        ++rep.checks;
        if (op(op(x, y), z) != op(x, op(y, z))) {
          rep.violations.push_back("not associative at " + show(x) + "," + show(y) + "," +
                                   show(z));
        }
      }
    }
  }
  return rep;
}

LawReport check_laws(const RSystem& sys, std::span<const Value> sample) {
  LawReport rep = check_laws(sys.op(), sample);
  const auto dom = law_domain(sys.op(), sample);
  const InfimumOp& op = sys.op();
  for (const auto& [link, r] : sys.links()) {
    const std::string where = "r(" + std::to_string(link.first) + "," +
                              std::to_string(link.second) + ")=" + r.describe();
    for (Value x : dom) {
      ++rep.checks;
      if (!op.leq(x, r(x))) {
        rep.violations.push_back(where + " not extensive: x=" + show(x) + " > r(x)=" +
                                 show(r(x)));
      }
      for (Value y : dom) {
        ++rep.checks;
        if (r(op(x, y)) != op(r(x), r(y))) {
          rep.violations.push_back(where + " not an endomorphism at " + show(x) + "," + show(y));
        }
      }
    }
  }
  return rep;
}

const char* to_string(TaskKind k) noexcept {
  switch (k) {
    case TaskKind::GlobalInfimum: return "global-infimum";
    case TaskKind::BallInfimum: return "ball-infimum";
    case TaskKind::ROperator: return "r-operator";
  }
  return "?";
}

TaskKind task_kind_from_string(const std::string& name) {
  for (auto k : {TaskKind::GlobalInfimum, TaskKind::BallInfimum, TaskKind::ROperator}) {
    if (name == to_string(k)) return k;
  }
  throw Error(Errc::InvalidTask, "unknown task kind '" + name + "'");
}

Clock required_delta(const Graph& g, const TaskSpec& task) {
  switch (task.kind) {
    case TaskKind::GlobalInfimum:
      return static_cast<Clock>(g.diameter()) + 1;
    case TaskKind::BallInfimum:
      return static_cast<Clock>(task.rho) + 1;
    case TaskKind::ROperator:
      return static_cast<Clock>(longest_simple_path_length(g)) + 1;
  }
  return 1;
}

CriticalSections cs_handlers(const Graph& g, const ProtocolParams& params, const TaskSpec& task) {
  if (task.inputs.size() != g.size()) {
    throw Error(Errc::InvalidTask, "task needs one input per process (" +
                                       std::to_string(task.inputs.size()) + " for n=" +
                                       std::to_string(g.size()) + ")");
  }
  if (task.kind == TaskKind::ROperator && !task.rsys) {
    throw Error(Errc::InvalidTask, "r-operator task without an r-system");
  }
  if (task.kind == TaskKind::BallInfimum && task.rho == 0) {
    throw Error(Errc::InvalidTask, "ball radius must be positive");
  }
  const Clock need = required_delta(g, task);
  if (params.delta < need) {
    throw Error(Errc::DeltaTooSmall, std::string(to_string(task.kind)) + " needs delta >= " +
                                         std::to_string(need) + ", got " +
                                         std::to_string(params.delta));
  }

  const std::vector<Value> inputs = task.inputs;
  CriticalSections cs;
  cs.cs2 = [inputs](const Graph&, const Configuration& conf, Process p) {
    ProcessState s = conf[p];
    s.v0 = inputs[p];
    s.v1 = s.v0;
    s.v2 = s.v0;
    s.res = s.v0;
    return s;
  };

  switch (task.kind) {
    case TaskKind::GlobalInfimum: {
      cs.cs1 = [op = task.op](const Graph& g, const Configuration& conf, Process p) {
        ProcessState s = conf[p];
        Value acc = s.v0;
        for (Process q : g.neighbors(p)) acc = op(acc, conf[q].res);
        s.res = acc;
        return s;
      };
      break;
    }
    case TaskKind::BallInfimum: {
      const IncSystem sys = params.clock();
      const Clock delta = params.delta;
      const auto rho = static_cast<Clock>(task.rho);
      cs.cs1 = [op = task.op, sys, delta, rho](const Graph& g, const Configuration& conf,
                                               Process p) {
        ProcessState s = conf[p];
        const Clock r = conf[p].r;
        const Clock step_in_phase = residue(r + 1, delta);
        if (step_in_phase > rho) return s;
        // A neighbour still at r exposes its previous ball in v2; one that
        // already moved to phi(r) keeps that ball in v1.
        Value acc = s.v0;
        for (Process q : g.neighbors(p)) {
          const Clock rq = conf[q].r;
          if (rq == r) {
            acc = op(acc, conf[q].v2);
          } else if (rq == sys.phi(r)) {
            acc = op(acc, conf[q].v1);
          }
        }
        s.v1 = s.v2;
        s.v2 = acc;
        s.res = acc;
        return s;
      };
      break;
    }
    case TaskKind::ROperator: {
      cs.cs1 = [rsys = *task.rsys](const Graph& g, const Configuration& conf, Process p) {
        ProcessState s = conf[p];
        const InfimumOp& op = rsys.op();
        Value acc = op(s.v0, s.res);
        for (Process q : g.neighbors(p)) acc = op(acc, rsys.at(q, p)(conf[q].res));
        s.res = acc;
        return s;
      };
      break;
    }
  }
  return cs;
}

Value read_result(const TaskSpec& task, const ProcessState& state) {
  return task.kind == TaskKind::BallInfimum ? state.v2 : state.res;
}

std::vector<Value> oracle_global_infimum(const Graph& g, const InfimumOp& op,
                                         std::span<const Value> v0) {
  return std::vector<Value>(g.size(), op.fold(v0));
}

std::vector<Value> oracle_ball_infimum(const Graph& g, const InfimumOp& op,
                                       std::span<const Value> v0, std::size_t rho) {
  std::vector<Value> out;
  out.reserve(g.size());
  for (Process p = 0; p < g.size(); ++p) {
    Value acc = op.identity();
    for (Process q : g.ball(p, rho)) acc = op(acc, v0[q]);
    out.push_back(acc);
  }
  return out;
}

std::vector<Value> oracle_r_operator(const Graph& g, const RSystem& sys, std::span<const Value> v0,
                                     std::size_t max_n) {
  if (g.size() > max_n) {
    throw Error(Errc::TooLarge, "simple-walk enumeration limited to n <= " +
                                    std::to_string(max_n));
  }
  std::vector<Value> out;
  out.reserve(g.size());
  for (Process p = 0; p < g.size(); ++p) {
    Value acc = sys.op().identity();
    for (const Walk& m : simple_walks_ending_at(g, p)) acc = sys.op()(acc, sys.eval(m, v0));
    out.push_back(acc);
  }
  return out;
}

std::vector<Value> task_oracle(const Graph& g, const TaskSpec& task) {
  switch (task.kind) {
    case TaskKind::GlobalInfimum:
      return oracle_global_infimum(g, task.op, task.inputs);
    case TaskKind::BallInfimum:
      return oracle_ball_infimum(g, task.op, task.inputs, task.rho);
    case TaskKind::ROperator:
      return oracle_r_operator(g, *task.rsys, task.inputs);
  }
  return {};
}

}  // namespace unison
