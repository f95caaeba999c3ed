#ifndef BURN_SIMULATE_HPP
#define BURN_SIMULATE_HPP

#include "burn/graph.hpp"
#include "burn/schedule.hpp"

#include <vector>

namespace burn {

/// What to do when a round has no usable scheduled source. Strict follows the
/// schedule to the letter and treats lighting an already-burned source as an
/// error; Greedy substitutes or fills with the smallest-id unburned vertex,
/// matching the requirement that a new source is chosen every round one is
/// available.
enum class FillPolicy { Strict, Greedy };

/// planned == -1 records a fill of a round that had no scheduled source.
struct Substitution {
    int round;
    int planned;
    int actual;
};

struct SimResult {
    bool complete = false;
    int completion_round = 0; // meaningful only when complete
    std::vector<int> history; // round each vertex burned, -1 if never
    std::vector<Substitution> substitutions;
    std::map<int, int> lit; // source actually lit per round
};

/// Runs the burning process. Each round: fire spreads from every vertex
/// burned in an earlier round to its unburned neighbors, then the round's
/// source is lit. Returns the first round after which all vertices are
/// burned; under Strict the process can stall (complete == false).
inline SimResult simulate(const Graph& g, const BurnSchedule& schedule, FillPolicy policy) {
    for (const auto& [round, vertex] : schedule.sources)
        if (vertex < 0 || vertex >= g.n)
            throw std::invalid_argument("simulate: schedule source out of range");

    SimResult res;
    res.history.assign(static_cast<std::size_t>(g.n), -1);
    int burned = 0;
    std::vector<int> frontier; // vertices burned in the previous round
    const int max_sched = schedule.max_round();

    auto smallest_unburned = [&]() {
        for (int v = 0; v < g.n; ++v)
            if (res.history[static_cast<std::size_t>(v)] == -1) return v;
        return -1;
    };

    for (int t = 1;; ++t) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int v : g.adj[static_cast<std::size_t>(u)]) {
                if (res.history[static_cast<std::size_t>(v)] == -1) {
                    res.history[static_cast<std::size_t>(v)] = t;
                    next.push_back(v);
                    ++burned;
                }
            }
        }
        if (burned == g.n) {
            res.complete = true;
            res.completion_round = t;
            return res;
        }

        int source = -1;
        auto it = schedule.sources.find(t);
        if (it != schedule.sources.end()) {
            if (res.history[static_cast<std::size_t>(it->second)] == -1) {
                source = it->second;
            } else if (policy == FillPolicy::Strict) {
                throw ScheduleError("simulate: round " + std::to_string(t) + " source " +
                                    std::to_string(it->second) + " is already burned");
            } else {
                source = smallest_unburned();
                res.substitutions.push_back(Substitution{t, it->second, source});
            }
        } else if (policy == FillPolicy::Greedy) {
            source = smallest_unburned();
            res.substitutions.push_back(Substitution{t, -1, source});
        }
        if (source != -1) {
            res.history[static_cast<std::size_t>(source)] = t;
            res.lit[t] = source;
            next.push_back(source);
            ++burned;
            if (burned == g.n) {
                res.complete = true;
                res.completion_round = t;
                return res;
            }
        }

        if (next.empty() && t >= max_sched) return res; // stalled, incomplete
        frontier = std::move(next);
    }
}

struct VerifyReport {
    bool valid = false;
    bool complete = false;
    int completion_round = 0;
    std::vector<Substitution> substitutions;
};

/// Greedy-simulates the schedule and reports whether it burns the whole
/// graph within k rounds.
inline VerifyReport verify_schedule(const Graph& g, int k, const BurnSchedule& schedule) {
    SimResult sim = simulate(g, schedule, FillPolicy::Greedy);
    VerifyReport rep;
    rep.complete = sim.complete;
    rep.completion_round = sim.completion_round;
    rep.substitutions = std::move(sim.substitutions);
    rep.valid = sim.complete && sim.completion_round <= k;
    return rep;
}

} // namespace burn

#endif // BURN_SIMULATE_HPP
