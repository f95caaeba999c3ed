#ifndef BURN_SCHEDULE_HPP
#define BURN_SCHEDULE_HPP

#include "burn/graph.hpp"

#include <map>
#include <set>

namespace burn {

/// Map round -> source vertex. Rounds are 1-based; at most one source per
/// round; sources pairwise distinct.
struct BurnSchedule {
    int rounds = 0; // k; 0 means "derive from the largest scheduled round"
    std::map<int, int> sources;

    int max_round() const { return sources.empty() ? 0 : sources.rbegin()->first; }
};

/// File format: lines "round vertex", rounds strictly ascending, 1-based.
/// '#' comments and blank lines allowed.
inline BurnSchedule read_schedule(std::istream& in) {
    BurnSchedule s;
    std::set<int> used_vertices;
    std::string line;
    int line_no = 0, prev_round = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::blank_or_comment(line)) continue;
        long long round, vertex;
        if (!detail::parse_two_ints(line, round, vertex))
            throw ParseError("schedule, line " + std::to_string(line_no) + ": expected \"round vertex\"");
        if (round < 1)
            throw ParseError("schedule, line " + std::to_string(line_no) + ": rounds are 1-based");
        if (round <= prev_round)
            throw ParseError("schedule, line " + std::to_string(line_no) + ": rounds must be strictly ascending");
        if (vertex < 0)
            throw ParseError("schedule, line " + std::to_string(line_no) + ": negative vertex id");
        if (!used_vertices.insert(static_cast<int>(vertex)).second)
            throw ParseError("schedule, line " + std::to_string(line_no) + ": repeated source vertex");
        s.sources[static_cast<int>(round)] = static_cast<int>(vertex);
        prev_round = static_cast<int>(round);
    }
    s.rounds = s.max_round();
    return s;
}

inline BurnSchedule read_schedule(const std::string& text) {
    std::istringstream ss(text);
    return read_schedule(ss);
}

inline BurnSchedule read_schedule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_schedule(in);
}

inline void write_schedule(const BurnSchedule& s, std::ostream& out) {
    for (const auto& [round, vertex] : s.sources) out << round << ' ' << vertex << '\n';
}

inline std::string to_schedule_text(const BurnSchedule& s) {
    std::ostringstream ss;
    write_schedule(s, ss);
    return ss.str();
}

/// All sources must be valid vertex ids of g.
inline void validate_schedule_against(const BurnSchedule& s, const Graph& g) {
    for (const auto& [round, vertex] : s.sources)
        if (vertex >= g.n)
            throw ParseError("schedule: round " + std::to_string(round) + " source " +
                             std::to_string(vertex) + " is not a vertex of the graph");
}

} // namespace burn

#endif // BURN_SCHEDULE_HPP
