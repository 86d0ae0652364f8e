#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossmin {

/// Error raised while reading an instance stream.
class ParseError : public std::runtime_error {
  public:
    enum class Kind { MalformedHeader, IndexOutOfRange, DuplicateEdge, EdgeCountMismatch };

    ParseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

/// Raised when the exhaustive oracle is asked for more than it can enumerate.
class TooLargeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A two-layer instance: the top layer is fixed and identified with positions
/// 1..n_top, the bottom layer 1..n_bottom is to be ordered. Edges connect a
/// top position to a bottom id; adjacency lists are per bottom node, sorted.
struct Instance {
    int n_top = 0;
    int n_bottom = 0;
    std::vector<std::pair<int, int>> edges;     ///< (top_position, bottom_id), both 1-based
    std::vector<std::vector<int>> adjacency;    ///< [bottom_id - 1] -> sorted top positions

    int degree(int bottom_id) const { return static_cast<int>(adjacency[bottom_id - 1].size()); }
    const std::vector<int>& neighbors(int bottom_id) const { return adjacency[bottom_id - 1]; }
    std::size_t num_edges() const { return edges.size(); }
};

/// Left-to-right sequence of bottom ids; always a permutation of 1..n_bottom.
struct Ordering {
    std::vector<int> seq;

    bool operator==(const Ordering&) const = default;
};

struct Solution {
    Ordering ordering;
    std::int64_t crossings = 0;
    bool optimal = false;
};

/// Builds a validated Instance from raw edges; throws ParseError on bad data.
Instance make_instance(int n_top, int n_bottom, std::vector<std::pair<int, int>> edges);

/// Reads the `p ocr` text format from `in`.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

/// Writes the bottom ordering as original vertex ids, one per line.
void write_solution(const Instance& instance, const Solution& solution, std::ostream& out);
std::string solution_to_string(const Instance& instance, const Solution& solution);

/// Number of pairwise edge crossings induced by `ordering`.
/// Runs in O(|E| log n_top) by inversion counting.
std::int64_t count_crossings(const Instance& instance, const Ordering& ordering);

/// True iff `ordering.seq` is a permutation of 1..n_bottom.
bool is_valid_ordering(const Instance& instance, const Ordering& ordering);

/// Exhaustive minimum over all bottom permutations; ties resolved to the
/// lexicographically smallest sequence. Guarded to n_bottom <= 10.
Solution brute_force_optimum(const Instance& instance);

}  // namespace crossmin
