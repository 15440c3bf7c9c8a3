#include "unison/causality.hpp"

#include <algorithm>

#include <json.hpp>

#include "unison/error.hpp"

namespace unison {

CausalDag CausalDag::build(const Graph& g, const Execution& exec) {
  CausalDag dag;
  const std::size_t n = g.size();
  const Configuration& init = exec.initial();
  if (init.size() != n) {
    throw Error(Errc::BadIndex, "execution size does not match the graph");
  }
  dag.per_process_.assign(n, {});
  std::vector<EventId> latest(n);
  for (Process p = 0; p < n; ++p) {
    EventId id = dag.events_.size();
    dag.events_.push_back(Event{.process = p, .time = 0, .initial = true, .clock = init[p].r});
    dag.preds_.emplace_back();
    dag.per_process_[p].push_back(id);
    latest[p] = id;
  }
  for (std::size_t t = 0; t < exec.steps(); ++t) {
    const auto& records = exec.transition(t).events;
    std::vector<std::pair<Process, EventId>> fresh;
    for (const EventRecord& rec : records) {
      EventId id = dag.events_.size();
      dag.events_.push_back(Event{.process = rec.process,
                                  .time = t + 1,
                                  .initial = false,
                                  .action = rec.action,
                                  .cs = rec.cs,
                                  .clock = rec.after});
      std::vector<EventId> preds{latest[rec.process]};
      for (Process q : g.neighbors(rec.process)) preds.push_back(latest[q]);
      dag.preds_.push_back(std::move(preds));
      dag.per_process_[rec.process].push_back(id);
      fresh.emplace_back(rec.process, id);
    }
    // Events of the same step never see each other.
    for (auto [p, id] : fresh) latest[p] = id;
  }

  dag.vclock_.assign(dag.events_.size() * n, -1);
  for (EventId id = 0; id < dag.events_.size(); ++id) {
    std::int64_t* row = &dag.vclock_[id * n];
    for (EventId pred : dag.preds_[id]) {
      const std::int64_t* prow = &dag.vclock_[pred * n];
      for (std::size_t q = 0; q < n; ++q) row[q] = std::max(row[q], prow[q]);
    }
    row[dag.events_[id].process] = static_cast<std::int64_t>(dag.events_[id].time);
  }
  return dag;
}

std::optional<EventId> CausalDag::find(Process p, std::size_t time) const {
  const auto& list = per_process_.at(p);
  auto it = std::lower_bound(list.begin(), list.end(), time,
                             [&](EventId id, std::size_t t) { return events_[id].time < t; });
  if (it != list.end() && events_[*it].time == time) return *it;
  return std::nullopt;
}

std::vector<Process> CausalDag::cover(EventId id) const {
  std::vector<Process> out;
  for (Process q = 0; q < process_count(); ++q) {
    if (past_time(id, q) >= 0) out.push_back(q);
  }
  return out;
}

std::string event_name(const Event& e) {
  return std::to_string(e.process) + "@" + std::to_string(e.time);
}

std::string CausalDag::to_json() const {
  nlohmann::json events = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  for (EventId id = 0; id < events_.size(); ++id) {
    const Event& e = events_[id];
    nlohmann::json ev = {{"id", event_name(e)},
                         {"process", e.process},
                         {"time", e.time},
                         {"clock", e.clock}};
    if (!e.initial) {
      ev["action"] = to_string(e.action);
      ev["cs"] = to_string(e.cs);
    }
    events.push_back(std::move(ev));
    for (EventId pred : preds_[id]) {
      edges.push_back({event_name(events_[pred]), event_name(e)});
    }
  }
  return nlohmann::json{{"events", events}, {"edges", edges}}.dump();
}

LiftedClocks lift(const Graph& g, const ProtocolParams& params, const CausalDag& dag,
                  const Execution& exec) {
  const IncSystem sys = params.clock();
  const auto clocks = exec.initial().clocks();
  auto delays = intrinsic_delays(g, sys, clocks, 0);
  if (!delays) throw Error(Errc::NotWU0, "lifting needs an initial configuration in WU0");

  LiftedClocks out;
  out.anchor = static_cast<Process>(
      std::max_element(delays->begin(), delays->end()) - delays->begin());
  out.bottom = clocks[out.anchor];
  out.value.assign(dag.size(), 0);
  for (EventId id = 0; id < dag.size(); ++id) {
    const Event& e = dag.event(id);
    if (e.initial) {
      out.value[id] = out.bottom + (*delays)[e.process] - (*delays)[out.anchor];
      continue;
    }
    if (e.action != Action::Normal) {
      throw Error(Errc::LiftBroken, std::string(to_string(e.action)) + " at " + event_name(e) +
                                        " after the lifting start");
    }
    out.value[id] = out.value[dag.predecessors(id).front()] + 1;
    if (residue(out.value[id], sys.period()) != e.clock) {
      throw Error(Errc::LiftBroken, "lifted clock disagrees with the register at " +
                                        event_name(e));
    }
  }
  return out;
}

Cut cut_at(const CausalDag& dag, const LiftedClocks& lifted, Clock k) {
  if (k < lifted.bottom) {
    throw Error(Errc::OutOfDomain, "cut " + std::to_string(k) + " lies below the base value " +
                                       std::to_string(lifted.bottom));
  }
  Cut cut;
  cut.events.reserve(dag.process_count());
  for (Process p = 0; p < dag.process_count(); ++p) {
    auto list = dag.events_of(p);
    const Clock first = lifted.at(list.front());
    const Clock offset = k - first;
    if (offset < 0 || offset >= static_cast<Clock>(list.size())) {
      throw Error(Errc::Incomplete, "process " + std::to_string(p) + " never reaches lifted " +
                                        std::to_string(k));
    }
    cut.events.push_back(list[static_cast<std::size_t>(offset)]);
  }
  return cut;
}

Clock last_complete_cut(const CausalDag& dag, const LiftedClocks& lifted) {
  Clock best = 0;
  for (Process p = 0; p < dag.process_count(); ++p) {
    Clock v = lifted.at(dag.events_of(p).back());
    best = p == 0 ? v : std::min(best, v);
  }
  return best;
}

bool is_coherent(const CausalDag& dag, const Cut& cut) {
  for (Process p = 0; p < dag.process_count(); ++p) {
    for (Process q = 0; q < dag.process_count(); ++q) {
      if (dag.past_time(cut[p], q) > static_cast<std::int64_t>(dag.event(cut[q]).time)) {
        return false;
      }
    }
  }
  return true;
}

bool cut_leq(const CausalDag& dag, const Cut& a, const Cut& b) {
  for (Process p = 0; p < dag.process_count(); ++p) {
    if (dag.event(a[p]).time > dag.event(b[p]).time) return false;
  }
  return true;
}

Segment::Segment(const CausalDag& dag, Cut lower, std::optional<Cut> upper)
    : dag_(&dag), lower_(std::move(lower)), upper_(std::move(upper)) {
  const std::size_t n = dag.process_count();
  local_index_.assign(dag.size(), -1);
  for (Process p = 0; p < n; ++p) {
    const std::size_t lo = dag.event(lower_[p]).time;
    const std::size_t hi =
        upper_ ? dag.event((*upper_)[p]).time : static_cast<std::size_t>(-1);
    for (EventId id : dag.events_of(p)) {
      const std::size_t t = dag.event(id).time;
      if (t >= lo && t <= hi) local_index_[id] = 0;
    }
  }
  for (EventId id = 0; id < dag.size(); ++id) {
    if (local_index_[id] >= 0) {
      local_index_[id] = static_cast<std::int64_t>(members_.size());
      members_.push_back(id);
    }
  }
  segment_vclock_.assign(members_.size() * n, -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const EventId id = members_[i];
    std::int64_t* row = &segment_vclock_[i * n];
    for (EventId pred : dag.predecessors(id)) {
      if (local_index_[pred] < 0) continue;
      const std::int64_t* prow = &segment_vclock_[static_cast<std::size_t>(local_index_[pred]) * n];
      for (std::size_t q = 0; q < n; ++q) row[q] = std::max(row[q], prow[q]);
    }
    row[dag.event(id).process] = static_cast<std::int64_t>(dag.event(id).time);
  }
}

bool Segment::contains(EventId id) const {
  return id < local_index_.size() && local_index_[id] >= 0;
}

std::vector<Process> Segment::cover(EventId id) const {
  if (!contains(id)) throw Error(Errc::BadIndex, "event outside the segment");
  const std::size_t n = dag_->process_count();
  const std::int64_t* row = &segment_vclock_[static_cast<std::size_t>(local_index_[id]) * n];
  std::vector<Process> out;
  for (Process q = 0; q < n; ++q) {
    if (row[q] >= 0) out.push_back(q);
  }
  return out;
}

namespace {

/// Bottom-up over segment members up to `target`, combining predecessor sets.
template <typename Extend>
std::set<Walk> chain_walks(const Segment& seg, EventId target, std::size_t max_walks,
                           Extend extend) {
  if (!seg.contains(target)) throw Error(Errc::BadIndex, "event outside the segment");
  const CausalDag& dag = seg.dag();
  // Only the causal past of the target matters.
  std::vector<EventId> relevant;
  for (EventId id : seg.events()) {
    if (id > target) break;
    if (dag.precedes(id, target)) relevant.push_back(id);
  }
  std::vector<std::set<Walk>> walks(relevant.size());
  std::size_t total = 0;
  auto slot = [&](EventId id) -> const std::set<Walk>* {
    auto it = std::lower_bound(relevant.begin(), relevant.end(), id);
    if (it == relevant.end() || *it != id) return nullptr;
    return &walks[static_cast<std::size_t>(it - relevant.begin())];
  };
  for (std::size_t i = 0; i < relevant.size(); ++i) {
    const EventId id = relevant[i];
    const Process p = dag.event(id).process;
    std::set<Walk>& here = walks[i];
    here.insert(Walk{p});
    for (EventId pred : dag.predecessors(id)) {
      if (!seg.contains(pred)) continue;
      const std::set<Walk>* from = slot(pred);
      if (!from) continue;
      for (const Walk& w : *from) {
        extend(w, p, dag.event(pred).process == p, here);
        if (here.size() > max_walks) {
          throw Error(Errc::Truncated, "walk set at " + event_name(dag.event(id)) +
                                           " exceeds " + std::to_string(max_walks));
        }
      }
    }
    total += here.size();
    if (total > 8 * max_walks) {
      throw Error(Errc::Truncated, "walk enumeration exceeds the exhaustive limit");
    }
  }
  return walks.back();
}

}  // namespace

std::set<Walk> walk_cover(const Segment& seg, EventId id, std::size_t max_walks) {
  return chain_walks(seg, id, max_walks,
                     [](const Walk& w, Process p, bool, std::set<Walk>& out) {
                       Walk next(w);
                       next.push_back(p);
                       out.insert(std::move(next));
                     });
}

std::set<Walk> elementary_reductions(const Segment& seg, EventId id, std::size_t max_walks) {
  // Walks are kept destuttered: a self edge extends the current run, a
  // neighbour edge may only enter a process not yet visited.
  return chain_walks(seg, id, max_walks,
                     [](const Walk& w, Process p, bool self, std::set<Walk>& out) {
                       if (self) {
                         out.insert(w);
                         return;
                       }
                       if (std::find(w.begin(), w.end(), p) != w.end()) return;
                       Walk next(w);
                       next.push_back(p);
                       out.insert(std::move(next));
                     });
}

Verdict verify_wavelet(const Graph& g, const Segment& seg, std::span<const EventId> decide,
                       std::size_t k) {
  if (decide.empty()) return {false, "no decide event"};
  for (EventId id : decide) {
    const Event& e = seg.dag().event(id);
    if (!seg.contains(id)) return {false, "decide event " + event_name(e) + " outside segment"};
    const auto cover = seg.cover(id);
    for (Process q : g.ball(e.process, k)) {
      if (!std::binary_search(cover.begin(), cover.end(), q)) {
        return {false, "decide event " + event_name(e) + " does not cover process " +
                           std::to_string(q) + " at distance " +
                           std::to_string(g.distance(e.process, q))};
      }
    }
  }
  return {true, "covers V(p," + std::to_string(k) + ") at all " + std::to_string(decide.size()) +
                    " decide events"};
}

Verdict verify_wave(const Graph& g, const Segment& seg, std::span<const EventId> decide) {
  return verify_wavelet(g, seg, decide, g.diameter());
}

Verdict verify_strong_wave(const Graph& g, const Segment& seg, std::span<const EventId> decide,
                           std::size_t max_walks) {
  Verdict wave = verify_wave(g, seg, decide);
  if (!wave) return wave;
  for (EventId id : decide) {
    const Process p = seg.dag().event(id).process;
    const auto realized = elementary_reductions(seg, id, max_walks);
    for (const Walk& m0 : simple_walks_ending_at(g, p)) {
      if (!realized.contains(m0)) {
        return {false, "simple walk " + to_string(m0) + " not realized by an elementary chain at " +
                           event_name(seg.dag().event(id))};
      }
    }
  }
  return {true, "every simple walk realized at all " + std::to_string(decide.size()) +
                    " decide events"};
}

BarrierReport check_barrier(const Graph& g, const ProtocolParams& params, const CausalDag& dag,
                            const LiftedClocks& lifted, std::size_t rho) {
  BarrierReport report;
  const Clock delta = params.delta;
  const Clock top = last_complete_cut(dag, lifted);
  // Fully observed phases: the entry into U happens inside the execution.
  const Clock first_phase = floor_div(lifted.bottom, delta) + 1;
  for (Clock u = first_phase; (u + 1) * delta <= top; ++u) {
    const Cut entry = cut_at(dag, lifted, u * delta);
    const Cut next_entry = cut_at(dag, lifted, (u + 1) * delta);
    ++report.phases_checked;
    for (Process p = 0; p < g.size(); ++p) {
      for (Process q : g.ball(p, rho)) {
        ++report.pairs_checked;
        const Event& enter_next = dag.event(next_entry[p]);
        const Event& entered = dag.event(entry[q]);
        if (!(entered.time < enter_next.time) || dag.precedes(next_entry[p], entry[q])) {
          report.violations.push_back("phase " + std::to_string(u) + ": " +
                                      event_name(enter_next) + " before " +
                                      event_name(entered));
        }
      }
    }
  }
  return report;
}

}  // namespace unison
