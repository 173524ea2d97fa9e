#include "engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lss::detail {

const char* algorithm_name(Variant v) {
  switch (v) {
    case Variant::lsa: return "lsa";
    case Variant::lsm: return "lsm";
    case Variant::lsrm: return "lsrm";
  }
  return "?";
}

std::size_t KeyHash::operator()(const std::vector<std::int64_t>& k) const noexcept {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (std::int64_t x : k)
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool Engine::OpenOrder::operator()(const OpenEntry& a, const OpenEntry& b) const {
  // priority_queue pops the largest element, so "a before b" means a > b here.
  if (a.f != b.f) return a.f > b.f;
  if (tie == TieBreak::deeper_first && a.g != b.g) return a.g < b.g;
  return a.seq > b.seq;
}

Engine::Engine(const Instance& instance, const SearchParams& params, Variant variant,
               SearchTrace* trace)
    : instance_(instance),
      params_(params),
      variant_(variant),
      trace_(trace),
      table_(instance),
      open_(OpenOrder{params.tie_break}) {
  if (params_.weight < 1.0) throw std::invalid_argument("weight must be >= 1");
  if (instance.agent_count() > kMaxAgents)
    throw std::invalid_argument("at most 64 agents are supported");
  for (AgentId i = 0; i < instance.agent_count(); ++i) goals_.push_back(instance.goal(i));
  if (tracks_collisions())
    for (AgentId i = 0; i < instance.agent_count(); ++i)
      policies_.push_back(build_policy(instance, table_, i));
}

double Engine::f_of(Time g, Time h) const {
  return static_cast<double>(g.count()) + params_.weight * static_cast<double>(h.count());
}

void Engine::push(int id) {
  const Node& n = nodes_[id];
  open_.push({f_of(n.g, n.h), n.g, seq_++, id});
}

bool Engine::out_of_budget() {
  if (params_.expansion_limit && stats_.expanded >= params_.expansion_limit) {
    stats_.outcome = Outcome::limit;
    return true;
  }
  if (deadline_ && (stats_.expanded & 255) == 0 &&
      std::chrono::steady_clock::now() >= *deadline_) {
    stats_.outcome = Outcome::timeout;
    return true;
  }
  return false;
}

int Engine::add_node(JointState s, int parent) {
  Node n;
  n.g = s.cost();
  n.h = table_.h(s);
  n.parent = parent;
  n.state = std::move(s);
  nodes_.push_back(std::move(n));
  if (tracks_collisions()) backprop_.add_state();
  return static_cast<int>(nodes_.size()) - 1;
}

CollisionSet Engine::collision_of(int id) const {
  if (params_.pin_full_collision) {
    CollisionSet all;
    all.add_group(all_agents(instance_.agent_count()));
    return all;
  }
  return backprop_.collision(id);
}

void Engine::grow_collision(int id, const CollisionSet& add) {
  if (add.empty()) return;
  for (int grown : backprop_.backpropagate(id, add, flat())) push(grown);
}

Engine::PlanStep Engine::plan_step(AgentSet group, const JointState& s) {
  std::vector<AgentId> agents = members(group);
  std::vector<std::int64_t> key{static_cast<std::int64_t>(group)};
  auto append_key = [&](std::vector<std::int64_t>& k, const JointState& sub) {
    for (std::size_t m = 0; m < agents.size(); ++m) {
      const Envelope& e = sub.envelopes[m];
      k.insert(k.end(), {e.v, e.p, e.t.count(), e.tp.count(), sub.banked[m].count()});
    }
  };
  JointState sub_state;
  for (AgentId i : agents) {
    sub_state.envelopes.push_back(s.envelopes[i]);
    sub_state.banked.push_back(s.banked[i]);
  }
  append_key(key, sub_state);
  if (auto it = plan_memo_.find(key); it != plan_memo_.end()) return it->second;

  Instance sub = instance_.restricted_to(agents);
  SearchParams sub_params = params_;
  sub_params.deadline = deadline_;
  sub_params.expansion_limit = 0;
  sub_params.pin_full_collision = false;
  SearchResult result = Engine(sub, sub_params, Variant::lsrm).run(sub_state);
  ++stats_.subplanner_calls;

  if (result.stats.outcome == Outcome::timeout || result.stats.outcome == Outcome::limit)
    return {PlanStep::Kind::timeout, {}};
  if (!result.solution) {
    plan_memo_[key] = {PlanStep::Kind::failed, {}};
    return plan_memo_[key];
  }
  const auto& chain = result.chain;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    std::vector<std::int64_t> step_key{static_cast<std::int64_t>(group)};
    append_key(step_key, chain[k]);
    if (k + 1 < chain.size())
      plan_memo_[step_key] = {PlanStep::Kind::next, chain[k + 1]};
    else
      plan_memo_[step_key] = {PlanStep::Kind::terminal, {}};
  }
  return plan_memo_.at(key);
}

bool Engine::expand(int id, std::vector<JointState>& children) {
  const JointState& s = nodes_[id].state;
  const int n = instance_.agent_count();
  TimingSummary timing = timing_summary(s);
  std::vector<std::vector<IndividualNeighbor>> options(n);

  if (variant_ == Variant::lsa) {
    for (AgentId i = 0; i < n; ++i) options[i] = individual_neighbors(instance_, s, i, timing);
    children = combine_neighbors(s, options);
    return true;
  }

  CollisionSet coll = collision_of(id);
  const AgentSet everyone = all_agents(n);
  std::vector<std::pair<AgentSet, PlanStep>> plans;
  for (AgentId i = 0; i < n; ++i) {
    if (!contains(timing.frontier_agents, i)) {
      options[i] = {{s.envelopes[i], s.banked[i]}};
      continue;
    }
    AgentSet group = variant_ == Variant::lsm ? coll.agents() : coll.group_of(i);
    if (!contains(group, i)) {
      options[i] = {policy_neighbor(instance_, s, i, policies_[i], timing)};
    } else if (variant_ == Variant::lsm || group == everyone) {
      options[i] = individual_neighbors(instance_, s, i, timing);
    } else {
      auto it = std::find_if(plans.begin(), plans.end(),
                             [&](const auto& p) { return p.first == group; });
      if (it == plans.end()) {
        plans.emplace_back(group, plan_step(group, s));
        it = plans.end() - 1;
      }
      const PlanStep& step = it->second;
      switch (step.kind) {
        case PlanStep::Kind::timeout:
          return false;
        case PlanStep::Kind::failed:
          children.clear();
          return true;
        case PlanStep::Kind::terminal:
          options[i] = {policy_neighbor(instance_, s, i, policies_[i], timing)};
          break;
        case PlanStep::Kind::next: {
          auto m = std::popcount(group & (agent_bit(i) - 1));
          options[i] = {{step.next.envelopes[m], step.next.banked[m]}};
          break;
        }
      }
    }
  }
  children = combine_neighbors(s, options);
  return true;
}

SearchResult Engine::run() { return run(JointState::initial(instance_)); }

SearchResult Engine::run(const JointState& start) {
  started_ = std::chrono::steady_clock::now();
  deadline_ = params_.deadline;
  if (!deadline_ && params_.time_limit_s > 0)
    deadline_ = started_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(params_.time_limit_s));
  stats_ = {};
  stats_.outcome = Outcome::failure;

  SearchResult result;
  auto finish = [&]() {
    stats_.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    result.stats = stats_;
    if (result.solution) result.solution->stats = stats_;
    return result;
  };

  if (table_.h(start).is_infinite()) return finish();

  int root = add_node(start, -1);
  if (trace_) {
    trace_->states.push_back(start);
    trace_->parent.push_back(-1);
  }
  frontier_.compare(nodes_[root].state, root, params_.dominance);
  push(root);

  std::vector<JointState> children;
  while (!open_.empty()) {
    if (out_of_budget()) {
      timed_out_ = true;
      return finish();
    }
    OpenEntry top = open_.top();
    open_.pop();
    const int id = top.id;

    CollisionSet coll;
    if (tracks_collisions()) {
      coll = collision_of(id);
      if (nodes_[id].expanded && nodes_[id].expanded_with == coll) continue;
    }

    if (nodes_[id].state.at_joint_vertex(goals_)) {
      std::vector<JointState> chain;
      for (int k = id; k >= 0; k = nodes_[k].parent) chain.push_back(nodes_[k].state);
      std::reverse(chain.begin(), chain.end());
      Solution sol = reconstruct(instance_, chain);
      sol.algorithm = algorithm_name(variant_);
      stats_.outcome = Outcome::solved;
      result.solution = std::move(sol);
      result.chain = std::move(chain);
      return finish();
    }

    nodes_[id].expanded = true;
    nodes_[id].expanded_with = coll;
    ++stats_.expanded;
    if (!expand(id, children)) {
      stats_.outcome = Outcome::timeout;
      return finish();
    }

    for (JointState& child : children) {
      ++stats_.generated;
      ConflictReport report = conflict_set(child);
      if (!report.empty()) {
        ++stats_.conflicts;
        if (tracks_collisions()) {
          CollisionSet add;
          if (flat()) add.add_flat(report.agents);
          else
            for (const auto& w : report.witnesses)
              add.add_group(agent_bit(w.first) | agent_bit(w.second));
          grow_collision(id, add);
        }
        continue;
      }
      int cid = add_node(std::move(child), id);
      auto verdict = frontier_.compare(nodes_[cid].state, cid, params_.dominance);
      if (!verdict.keep) {
        ++stats_.pruned;
        nodes_.pop_back();
        if (tracks_collisions()) {
          backprop_.pop_back();
          if (verdict.dominator >= 0) {
            backprop_.add_predecessor(verdict.dominator, id);
            grow_collision(id, backprop_.collision(verdict.dominator));
            if (!flat()) grow_collision(verdict.dominator, backprop_.collision(id));
          }
        }
        continue;
      }
      if (tracks_collisions()) backprop_.add_predecessor(cid, id);
      if (trace_) {
        trace_->states.push_back(nodes_[cid].state);
        trace_->parent.push_back(id);
      }
      push(cid);
    }
  }
  return finish();
}

}  // namespace lss::detail

namespace lss {

SearchResult search(const Instance& instance, const SearchParams& params, SearchTrace* trace) {
  return detail::Engine(instance, params, detail::Variant::lsa, trace).run();
}

}  // namespace lss
