#include "trsbound/conversion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "trsbound/errors.hpp"

namespace trsbound {

std::string to_string(Reachability r) {
  switch (r) {
    case Reachability::Connected:
      return "connected";
    case Reachability::Disconnected:
      return "disconnected";
    case Reachability::Unknown:
      return "unknown";
  }
  return "?";
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Yes:
      return "Yes";
    case Equivalence::No:
      return "No";
    case Equivalence::Unknown:
      return "Unknown";
  }
  return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Congruence graph (hash-consed nodes + union-find + congruence rebuilding).
//
// Nodes are applications over class ids; variables of goal terms enter as
// opaque leaves (symbol -1-index), which treats them as fresh constants --
// exactly the semantics of conversion between open terms.

struct Node {
  int sym;                // >= 0: signature symbol; < 0: variable leaf
  std::vector<int> args;  // class ids (canonical after rebuild)

  bool operator==(const Node& other) const = default;
};

struct NodeHash {
  std::size_t operator()(const Node& n) const {
    std::size_t h = static_cast<std::size_t>(n.sym) * 0x9e3779b97f4a7c15ULL + 0x517c;
    for (int a : n.args) h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class CongruenceGraph {
 public:
  int find(int id) const {
    while (parent_[id] != id) id = parent_[id];
    return id;
  }

  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    min_size_[a] = std::min(min_size_[a], min_size_[b]);
    return true;
  }

  // Get-or-create a node; args must be class ids.  Returns its class.
  int add_node(int sym, std::vector<int> args, long long size_hint) {
    Node n{sym, std::move(args)};
    for (int& a : n.args) a = find(a);
    auto it = memo_.find(n);
    if (it != memo_.end()) {
      int cls = find(it->second);
      min_size_[cls] = std::min(min_size_[cls], size_hint);
      return cls;
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(n);
    parent_.push_back(id);
    rank_.push_back(0);
    min_size_.push_back(size_hint);
    memo_.emplace(std::move(n), id);
    return id;
  }

  int add_term(const Term& t) {
    if (t.is_var()) return add_node(-t.var_index(), {}, 1);
    std::vector<int> args;
    args.reserve(t.args().size());
    long long size = 1;
    for (const Term& a : t.args()) {
      int cls = add_term(a);
      size += min_size_[cls];
      args.push_back(cls);
    }
    return add_node(t.symbol(), std::move(args), size);
  }

  // Instantiate a rule side under a variable->class binding.
  int instantiate(const Term& t, const std::map<int, int>& binding) {
    if (t.is_var()) return find(binding.at(t.var_index()));
    std::vector<int> args;
    args.reserve(t.args().size());
    long long size = 1;
    for (const Term& a : t.args()) {
      int cls = instantiate(a, binding);
      size += min_size_[cls];
      args.push_back(cls);
    }
    return add_node(t.symbol(), std::move(args), size);
  }

  // Restores congruence (merges classes with identical canonical nodes) and
  // refreshes the per-class node lists used for matching.
  void rebuild() {
    bool merged = true;
    while (merged) {
      merged = false;
      std::unordered_map<Node, int, NodeHash> fresh;
      fresh.reserve(nodes_.size() * 2);
      for (std::size_t id = 0; id < nodes_.size(); ++id) {
        for (int& a : nodes_[id].args) a = find(a);
        auto [it, inserted] = fresh.try_emplace(nodes_[id], static_cast<int>(id));
        if (!inserted && merge(static_cast<int>(id), it->second)) merged = true;
      }
      if (!merged) memo_ = std::move(fresh);
    }
    class_lists_.assign(nodes_.size(), {});
    roots_.clear();
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      auto it = memo_.find(nodes_[id]);
      if (it == memo_.end() || it->second != static_cast<int>(id)) continue;  // duplicate node
      int cls = find(static_cast<int>(id));
      if (class_lists_[cls].empty()) roots_.push_back(cls);
      class_lists_[cls].push_back(nodes_[id]);
    }
    std::sort(roots_.begin(), roots_.end());
  }

  const std::vector<int>& roots() const { return roots_; }
  const std::vector<Node>& class_nodes(int cls) const {
    static const std::vector<Node> none;
    // Classes created after the last rebuild have no node list yet; their
    // nodes become matchable next round.
    return cls < static_cast<int>(class_lists_.size()) ? class_lists_[cls] : none;
  }
  long long min_size(int cls) const { return min_size_[find(cls)]; }
  long long n_nodes() const { return static_cast<long long>(nodes_.size()); }

 private:
  std::vector<Node> nodes_;
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<long long> min_size_;
  std::unordered_map<Node, int, NodeHash> memo_;
  std::vector<std::vector<Node>> class_lists_;
  std::vector<int> roots_;
};

// Backtracking e-matcher: enumerates bindings (variable -> class) making the
// pattern equal to some member of the class.
void ematch(const CongruenceGraph& g, const Term& pattern, int cls, std::map<int, int>& binding,
            const std::function<void(const std::map<int, int>&)>& yield);

void ematch_args(const CongruenceGraph& g, const std::vector<Term>& pats, const Node& node,
                 std::size_t i, std::map<int, int>& binding,
                 const std::function<void(const std::map<int, int>&)>& yield) {
  if (i == pats.size()) {
    yield(binding);
    return;
  }
  ematch(g, pats[i], node.args[i], binding,
         [&](const std::map<int, int>&) { ematch_args(g, pats, node, i + 1, binding, yield); });
}

void ematch(const CongruenceGraph& g, const Term& pattern, int cls, std::map<int, int>& binding,
            const std::function<void(const std::map<int, int>&)>& yield) {
  cls = g.find(cls);
  if (pattern.is_var()) {
    auto it = binding.find(pattern.var_index());
    if (it != binding.end()) {
      if (g.find(it->second) == cls) yield(binding);
      return;
    }
    binding.emplace(pattern.var_index(), cls);
    yield(binding);
    binding.erase(pattern.var_index());
    return;
  }
  for (const Node& n : g.class_nodes(cls)) {
    if (n.sym != pattern.symbol()) continue;
    if (n.args.size() != pattern.args().size()) continue;
    ematch_args(g, pattern.args(), n, 0, binding, yield);
  }
}

struct Direction {
  Term from;
  Term to;
  std::vector<int> extra;  // variables of `to` unbound by matching `from`
};

std::vector<int> sorted_vars(const Term& t) {
  std::vector<int> out;
  for (const auto& [v, n] : var_counts(t)) {
    (void)n;
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<ConversionOutcome> convertible(const Trs& moves,
                                           const std::vector<std::pair<Term, Term>>& goals,
                                           const ConversionLimits& limits) {
  CongruenceGraph g;
  std::vector<std::pair<int, int>> goal_classes;
  goal_classes.reserve(goals.size());
  for (const auto& [l, r] : goals) goal_classes.emplace_back(g.add_term(l), g.add_term(r));
  g.rebuild();

  std::vector<Direction> dirs;
  for (const Rule& rule : moves.rules()) {
    for (const auto& [from, to] : {std::pair{rule.lhs, rule.rhs}, std::pair{rule.rhs, rule.lhs}}) {
      Direction d{from, to, {}};
      std::vector<int> from_vars = sorted_vars(from);
      for (int v : sorted_vars(to))
        if (!std::binary_search(from_vars.begin(), from_vars.end(), v)) d.extra.push_back(v);
      dirs.push_back(std::move(d));
    }
  }

  bool budget_hit = false;
  bool unbound_match_seen = false;
  bool reached_fixpoint = false;
  int rounds = 0;

  auto all_connected = [&] {
    for (const auto& [l, r] : goal_classes)
      if (g.find(l) != g.find(r)) return false;
    return true;
  };

  while (!all_connected() && !budget_hit && rounds < limits.max_rounds) {
    ++rounds;
    bool changed = false;
    const std::vector<int> snapshot = g.roots();
    std::vector<int> pool;
    for (int cls : snapshot)
      if (g.min_size(cls) <= limits.instantiation_size_cap) pool.push_back(cls);

    for (const Direction& d : dirs) {
      long long applied = 0;
      for (int cls : snapshot) {
        if (budget_hit || applied >= limits.per_direction_round_cap) break;
        std::map<int, int> binding;
        // Collect matches first; instantiation mutates the graph.
        std::vector<std::map<int, int>> matches;
        ematch(g, d.from, cls, binding, [&](const std::map<int, int>& b) {
          if (static_cast<long long>(matches.size()) < limits.per_direction_round_cap)
            matches.push_back(b);
        });
        if (!matches.empty() && !d.extra.empty()) unbound_match_seen = true;
        for (const std::map<int, int>& m : matches) {
          if (budget_hit || applied >= limits.per_direction_round_cap) break;
          // Enumerate instantiations of unbound variables over small classes.
          std::vector<std::map<int, int>> assignments{m};
          for (int v : d.extra) {
            std::vector<std::map<int, int>> next;
            for (const std::map<int, int>& a : assignments)
              for (int p : pool) {
                std::map<int, int> b = a;
                b.emplace(v, p);
                next.push_back(std::move(b));
                if (static_cast<long long>(next.size()) >= limits.per_direction_round_cap) break;
              }
            assignments = std::move(next);
            if (assignments.empty()) break;
          }
          for (const std::map<int, int>& a : assignments) {
            if (applied >= limits.per_direction_round_cap) break;
            ++applied;
            int made = g.instantiate(d.to, a);
            if (g.merge(cls, made)) changed = true;
            if (g.n_nodes() > limits.node_budget) {
              budget_hit = true;
              break;
            }
          }
        }
      }
      if (budget_hit) break;
    }
    g.rebuild();
    if (!changed && !budget_hit) {
      reached_fixpoint = true;
      break;
    }
  }

  const bool fixpoint = reached_fixpoint && !all_connected();
  std::vector<ConversionOutcome> out;
  out.reserve(goals.size());
  for (const auto& [l, r] : goal_classes) {
    ConversionOutcome o;
    o.nodes = g.n_nodes();
    o.rounds = rounds;
    if (g.find(l) == g.find(r))
      o.status = Reachability::Connected;
    else if (fixpoint && !unbound_match_seen)
      o.status = Reachability::Disconnected;
    else
      o.status = Reachability::Unknown;
    out.push_back(o);
  }
  return out;
}

EquivReport equiv_check(const Trs& base, const Trs& candidate, Strategy strategy,
                        long long max_steps, const ConversionLimits& limits) {
  EquivReport report;
  Signature sig = signature_union(base.signature(), candidate.signature());
  Trs b = with_signature(base, sig);
  Trs c = with_signature(candidate, sig);

  // (a) every candidate rule must be a theorem of the base presentation:
  // both sides reach one base normal form.
  bool a_holds = true;
  bool a_definite_fail = false;
  for (int i = 0; i < c.n_rules(); ++i) {
    CandidateRuleCheck check;
    check.rule = i;
    try {
      check.nf_lhs = normalize_counted(b, c.rule(i).lhs, strategy, max_steps).normal_form;
      check.nf_rhs = normalize_counted(b, c.rule(i).rhs, strategy, max_steps).normal_form;
      check.holds = check.nf_lhs == check.nf_rhs;
    } catch (const StepBudgetError&) {
      check.budget_exhausted = true;
      check.holds = false;
    }
    if (!check.holds) {
      a_holds = false;
      if (!check.budget_exhausted) a_definite_fail = true;
    }
    report.candidate_checks.push_back(std::move(check));
  }

  // (b) every base rule must be convertible under the candidate rules alone.
  std::vector<std::pair<Term, Term>> goals;
  goals.reserve(b.n_rules());
  for (const Rule& r : b.rules()) goals.emplace_back(r.lhs, r.rhs);
  std::vector<ConversionOutcome> outcomes = convertible(c, goals, limits);
  bool b_all_connected = true;
  bool b_disconnected = false;
  for (int i = 0; i < b.n_rules(); ++i) {
    report.base_checks.push_back(BaseRuleCheck{i, outcomes[i].status});
    if (outcomes[i].status != Reachability::Connected) b_all_connected = false;
    if (outcomes[i].status == Reachability::Disconnected) b_disconnected = true;
  }

  if (a_definite_fail) {
    report.verdict = Equivalence::No;
    report.detail = "a candidate rule's sides have distinct base normal forms, so the "
                    "candidate proves an equation the base does not";
  } else if (b_disconnected) {
    report.verdict = Equivalence::No;
    report.detail = "a base rule is provably not convertible under the candidate rules";
  } else if (a_holds && b_all_connected) {
    report.verdict = Equivalence::Yes;
    report.detail = "every candidate rule joins under the base system and every base rule "
                    "is convertible under the candidate rules";
  } else {
    report.verdict = Equivalence::Unknown;
    report.detail = "a search or step budget was exhausted before every check settled";
  }
  return report;
}

}  // namespace trsbound
