#ifndef PMC_MARKOV_HPP
#define PMC_MARKOV_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pmc/errors.hpp"
#include "pmc/linalg.hpp"
#include "pmc/pfa.hpp"
#include "pmc/rational.hpp"

namespace pmc {

/// Finite Markov chain. Transition lists keep only positive probabilities;
/// each state's outgoing mass must be exactly 1. Labels are optional
/// per-state atomic propositions.
class MarkovChain {
public:
    MarkovChain(std::vector<std::string> states,
                std::vector<std::vector<std::pair<int, Rational>>> transitions,
                std::vector<std::set<std::string>> labels = {})
        : states_(std::move(states)), transitions_(std::move(transitions)), labels_(std::move(labels)) {
        const std::size_t n = states_.size();
        if (n == 0) throw ValidationError("chain needs at least one state");
        if (transitions_.size() != n) throw ValidationError("transition list length mismatch");
        if (labels_.empty()) labels_.resize(n);
        if (labels_.size() != n) throw ValidationError("label list length mismatch");
        for (std::size_t s = 0; s < n; ++s) {
            if (transitions_[s].empty())
                throw ValidationError("state '" + states_[s] + "' has no outgoing transition");
            Rational sum(0);
            for (const auto& [t, p] : transitions_[s]) {
                if (t < 0 || static_cast<std::size_t>(t) >= n)
                    throw ValidationError("transition to unknown state");
                if (p <= Rational(0) || p > Rational(1))
                    throw ValidationError("transition probability outside (0,1]");
                sum += p;
            }
            if (sum != Rational(1))
                throw ValidationError("outgoing mass of '" + states_[s] + "' is " + sum.str());
        }
    }

    const std::vector<std::string>& states() const { return states_; }
    std::size_t state_count() const { return states_.size(); }
    const std::vector<std::pair<int, Rational>>& transitions_from(int s) const {
        return transitions_[s];
    }
    const std::set<std::string>& labels_of(int s) const { return labels_[s]; }

    int state_index(const std::string& name) const {
        auto it = std::find(states_.begin(), states_.end(), name);
        if (it == states_.end()) throw StateError("unknown state '" + name + "'");
        return static_cast<int>(it - states_.begin());
    }

    Rational transition_probability(int from, int to) const {
        for (const auto& [t, p] : transitions_[from])
            if (t == to) return p;
        return Rational(0);
    }

private:
    std::vector<std::string> states_;
    std::vector<std::vector<std::pair<int, Rational>>> transitions_;
    std::vector<std::set<std::string>> labels_;
};

/// Finite MDP. Per (state, action) either a full distribution row or an
/// all-zero row (action disabled there). Every state needs at least one
/// enabled action.
class Mdp {
public:
    Mdp(std::vector<std::string> states, std::vector<std::string> actions,
        std::vector<std::vector<RowVector>> rows, RowVector initial)
        : states_(std::move(states)),
          actions_(std::move(actions)),
          rows_(std::move(rows)),
          initial_(std::move(initial)) {
        const std::size_t n = states_.size();
        const std::size_t k = actions_.size();
        if (n == 0) throw ValidationError("MDP needs at least one state");
        if (k == 0) throw ValidationError("MDP needs at least one action");
        if (rows_.size() != n) throw ValidationError("row table has wrong state count");
        enabled_.resize(n);
        for (std::size_t s = 0; s < n; ++s) {
            if (rows_[s].size() != k) throw ValidationError("row table has wrong action count");
            for (std::size_t a = 0; a < k; ++a) {
                const RowVector& row = rows_[s][a];
                if (row.size() != n) throw ValidationError("distribution row has wrong length");
                Rational sum(0);
                for (const Rational& p : row) {
                    if (p < Rational(0) || p > Rational(1))
                        throw ValidationError("transition probability outside [0,1]");
                    sum += p;
                }
                if (sum == Rational(1))
                    enabled_[s].push_back(static_cast<int>(a));
                else if (sum != Rational(0))
                    throw ValidationError("row (" + states_[s] + "," + actions_[a] +
                                          ") sums to " + sum.str() + ", need 0 or 1");
            }
            if (enabled_[s].empty())
                throw ValidationError("state '" + states_[s] + "' has no enabled action");
        }
        if (initial_.size() != n || !validate_distribution(initial_))
            throw ValidationError("initial vector is not a distribution over the states");
    }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& actions() const { return actions_; }
    const RowVector& initial() const { return initial_; }
    std::size_t state_count() const { return states_.size(); }

    int state_index(const std::string& name) const {
        auto it = std::find(states_.begin(), states_.end(), name);
        if (it == states_.end()) throw StateError("unknown state '" + name + "'");
        return static_cast<int>(it - states_.begin());
    }

    int action_index(const std::string& name) const {
        auto it = std::find(actions_.begin(), actions_.end(), name);
        if (it == actions_.end()) throw StateError("unknown action '" + name + "'");
        return static_cast<int>(it - actions_.begin());
    }

    const RowVector& row(int state, int action) const { return rows_[state][action]; }

    bool is_enabled(int state, int action) const {
        const auto& e = enabled_[state];
        return std::find(e.begin(), e.end(), action) != e.end();
    }

    /// Enabled action indices in declaration order.
    const std::vector<int>& enabled_indices(int state) const { return enabled_[state]; }

private:
    std::vector<std::string> states_;
    std::vector<std::string> actions_;
    std::vector<std::vector<RowVector>> rows_;   // [state][action] -> distribution (or zeros)
    RowVector initial_;
    std::vector<std::vector<int>> enabled_;
};

/// Names of the actions enabled in `state`.
inline std::set<std::string> enabled_actions(const Mdp& mdp, int state) {
    if (state < 0 || static_cast<std::size_t>(state) >= mdp.state_count())
        throw StateError("state index " + std::to_string(state) + " out of range");
    std::set<std::string> out;
    for (int a : mdp.enabled_indices(state)) out.insert(mdp.actions()[a]);
    return out;
}

/// Representable scheduler classes: a memoryless state->action map, or a
/// depth-based action sequence that falls back to the memoryless defaults
/// past its horizon (and wherever the depth action is not enabled).
struct Scheduler {
    enum class Kind { memoryless, depth_based };

    Kind kind = Kind::memoryless;
    std::vector<std::string> depth_actions;          // used when depth_based
    std::map<std::string, std::string> defaults;     // state name -> action name

    std::size_t horizon() const { return kind == Kind::depth_based ? depth_actions.size() : 0; }
};

/// Lexicographically first (by name) enabled action per state; the library
/// default for behavior past a scheduler's horizon.
inline std::map<std::string, std::string> lex_first_enabled_defaults(const Mdp& mdp) {
    std::map<std::string, std::string> out;
    for (std::size_t s = 0; s < mdp.state_count(); ++s) {
        std::string best;
        for (int a : mdp.enabled_indices(static_cast<int>(s))) {
            const std::string& name = mdp.actions()[a];
            if (best.empty() || name < best) best = name;
        }
        out[mdp.states()[s]] = best;
    }
    return out;
}

/// Action index the scheduler picks at the given depth in the given state.
inline int scheduler_action(const Mdp& mdp, const Scheduler& sch, std::size_t depth, int state) {
    if (sch.kind == Scheduler::Kind::depth_based && depth < sch.depth_actions.size()) {
        const int a = mdp.action_index(sch.depth_actions[depth]);
        if (mdp.is_enabled(state, a)) return a;
    }
    auto it = sch.defaults.find(mdp.states()[state]);
    if (it == sch.defaults.end())
        throw ValidationError("scheduler has no default action for state '" +
                              mdp.states()[state] + "'");
    const int a = mdp.action_index(it->second);
    if (!mdp.is_enabled(state, a))
        throw ValidationError("default action '" + it->second + "' not enabled in state '" +
                              mdp.states()[state] + "'");
    return a;
}

/// A PFA read as an MDP: states stay, symbols become actions, the initial
/// distribution carries over. The accepting set rides alongside.
struct PfaAsMdp {
    Mdp mdp;
    std::set<int> accepting;
};

inline PfaAsMdp pfa_to_mdp(const Pfa& pfa) {
    const std::size_t n = pfa.state_count();
    std::vector<std::vector<RowVector>> rows(n);
    for (std::size_t s = 0; s < n; ++s) {
        rows[s].reserve(pfa.alphabet().size());
        for (const auto& symbol : pfa.alphabet()) {
            const Matrix& m = pfa.matrix(symbol);
            RowVector row(n);
            for (std::size_t t = 0; t < n; ++t) row[t] = m.at(s, t);
            rows[s].push_back(std::move(row));
        }
    }
    return PfaAsMdp{Mdp(pfa.states(), pfa.alphabet(), std::move(rows), pfa.initial()),
                    pfa.accepting()};
}

/// Finite quotient of the chain a scheduler induces on an MDP, plus the map
/// from quotient states back to MDP states and their depth layer.
struct InducedChain {
    MarkovChain chain;
    std::vector<int> underlying;  // quotient state -> MDP state
    std::vector<int> depth;       // quotient state -> depth layer (capped)
};

/// For memoryless schedulers the quotient is the state set itself. For
/// depth-based schedulers it is (state, depth) with depth capped at
/// `depth_bound`; capped states keep stepping under the default action.
/// The quotient is exact for the supported scheduler classes.
inline InducedChain induced_chain(const Mdp& mdp, const Scheduler& sch, std::size_t depth_bound) {
    const std::size_t n = mdp.state_count();
    if (sch.kind == Scheduler::Kind::memoryless) {
        std::vector<std::vector<std::pair<int, Rational>>> trans(n);
        for (std::size_t s = 0; s < n; ++s) {
            const RowVector& row = mdp.row(static_cast<int>(s),
                                           scheduler_action(mdp, sch, 0, static_cast<int>(s)));
            for (std::size_t t = 0; t < n; ++t)
                if (row[t].sign() > 0) trans[s].emplace_back(static_cast<int>(t), row[t]);
        }
        InducedChain out{MarkovChain(mdp.states(), std::move(trans)), {}, {}};
        out.underlying.resize(n);
        out.depth.assign(n, 0);
        for (std::size_t s = 0; s < n; ++s) out.underlying[s] = static_cast<int>(s);
        return out;
    }

    if (depth_bound < sch.horizon())
        throw BoundError("depth bound " + std::to_string(depth_bound) +
                         " below scheduler horizon " + std::to_string(sch.horizon()));

    const std::size_t layers = depth_bound + 1;
    std::vector<std::string> names;
    std::vector<int> underlying;
    std::vector<int> depth;
    names.reserve(layers * n);
    for (std::size_t d = 0; d < layers; ++d)
        for (std::size_t s = 0; s < n; ++s) {
            names.push_back(mdp.states()[s] + "@" + std::to_string(d));
            underlying.push_back(static_cast<int>(s));
            depth.push_back(static_cast<int>(d));
        }
    std::vector<std::vector<std::pair<int, Rational>>> trans(layers * n);
    for (std::size_t d = 0; d < layers; ++d) {
        const std::size_t next_base = (d + 1 < layers ? d + 1 : d) * n;
        for (std::size_t s = 0; s < n; ++s) {
            const RowVector& row =
                mdp.row(static_cast<int>(s), scheduler_action(mdp, sch, d, static_cast<int>(s)));
            auto& list = trans[d * n + s];
            for (std::size_t t = 0; t < n; ++t)
                if (row[t].sign() > 0) list.emplace_back(static_cast<int>(next_base + t), row[t]);
        }
    }
    return InducedChain{MarkovChain(std::move(names), std::move(trans)), std::move(underlying),
                        std::move(depth)};
}

/// Finite path: state sequence plus, for MDP paths, the actions taken.
struct FinitePath {
    std::vector<int> states;
    std::vector<std::string> actions;  // empty for plain-chain paths
};

/// Product of the step probabilities along the path (cylinder measure of the
/// runs extending it). A single-state path has probability 1.
inline Prob path_probability(const MarkovChain& mc, const FinitePath& path) {
    if (path.states.empty()) throw PathError("path needs at least one state");
    if (!path.actions.empty()) throw PathError("plain-chain path must not carry actions");
    Rational p(1);
    for (std::size_t i = 0; i + 1 < path.states.size(); ++i) {
        const Rational step = mc.transition_probability(path.states[i], path.states[i + 1]);
        if (step.sign() == 0)
            throw PathError("no transition " + mc.states()[path.states[i]] + " -> " +
                            mc.states()[path.states[i + 1]]);
        p *= step;
    }
    return Prob(p);
}

namespace detail {

inline Rational accepting_paths_forward(const Mdp& mdp, const Scheduler& sch, std::size_t n_steps,
                                        const std::set<int>& accepting) {
    RowVector v = mdp.initial();
    const std::size_t n = mdp.state_count();
    for (std::size_t step = 0; step < n_steps; ++step) {
        RowVector next(n, Rational(0));
        for (std::size_t s = 0; s < n; ++s) {
            if (v[s].sign() == 0) continue;
            const RowVector& row =
                mdp.row(static_cast<int>(s), scheduler_action(mdp, sch, step, static_cast<int>(s)));
            for (std::size_t t = 0; t < n; ++t)
                if (row[t].sign() > 0) next[t] += v[s] * row[t];
        }
        v = std::move(next);
    }
    Rational mass(0);
    for (int q : accepting) mass += v[q];
    return mass;
}

inline void enumerate_paths(const Mdp& mdp, const Scheduler& sch, std::size_t n_steps,
                            const std::set<int>& accepting, std::size_t step, int state,
                            const Rational& weight, Rational& total) {
    if (step == n_steps) {
        if (accepting.count(state)) total += weight;
        return;
    }
    const RowVector& row = mdp.row(state, scheduler_action(mdp, sch, step, state));
    for (std::size_t t = 0; t < row.size(); ++t)
        if (row[t].sign() > 0)
            enumerate_paths(mdp, sch, n_steps, accepting, step + 1, static_cast<int>(t),
                            weight * row[t], total);
}

}  // namespace detail

/// Explicit-path route: sums the cylinder weights of every scheduler path of
/// exactly `n_steps` steps that ends in the accepting set, weighted by the
/// initial distribution. Exponential; meant for small instances and as the
/// independent check of the forward route.
inline Prob accepting_paths_probability_enumerated(const Mdp& mdp, const Scheduler& sch,
                                                   std::size_t n_steps,
                                                   const std::set<int>& accepting) {
    Rational total(0);
    for (std::size_t s = 0; s < mdp.state_count(); ++s)
        if (mdp.initial()[s].sign() > 0)
            detail::enumerate_paths(mdp, sch, n_steps, accepting, 0, static_cast<int>(s),
                                    mdp.initial()[s], total);
    return Prob(total);
}

/// Probability that an n-step scheduler path from the initial distribution
/// ends in the accepting set. Computed by forward vector propagation; on
/// small instances the explicit-path route is run as well and the two must
/// agree exactly.
inline Prob accepting_paths_probability(const Mdp& mdp, const Scheduler& sch, std::size_t n_steps,
                                        const std::set<int>& accepting) {
    const Rational forward = detail::accepting_paths_forward(mdp, sch, n_steps, accepting);
    // |S|^n path bound small enough to afford the cross-check.
    double path_bound = 1.0;
    for (std::size_t i = 0; i < n_steps && path_bound <= 4096.0; ++i)
        path_bound *= static_cast<double>(mdp.state_count());
    if (path_bound <= 4096.0) {
        const Prob enumerated = accepting_paths_probability_enumerated(mdp, sch, n_steps, accepting);
        if (enumerated.value() != forward)
            throw Error("internal: forward and path-enumeration routes disagree");
    }
    return Prob(forward);
}

}  // namespace pmc

#endif
