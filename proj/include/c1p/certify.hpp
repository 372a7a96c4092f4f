#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "c1p/graph.hpp"
#include "c1p/matrix.hpp"

namespace c1p {

/// Cyclic sequence of pair vertices, odd length, consecutive vertices
/// (and last/first) adjacent in the incompatibility graph.
struct OddCycleCertificate {
  std::size_t columns = 0;
  std::vector<PairVertex> vertices;

  friend bool operator==(const OddCycleCertificate&, const OddCycleCertificate&) = default;
};

/// Walk in the forcing graph from (i, j) to (j, i).
struct ForcingPathCertificate {
  std::size_t columns = 0;
  std::vector<PairVertex> vertices;

  friend bool operator==(const ForcingPathCertificate&, const ForcingPathCertificate&) = default;
};

using Certificate = std::variant<OddCycleCertificate, ForcingPathCertificate>;

/// Outcome of a verifier. `reason` is empty when valid.
struct Verdict {
  bool valid = false;
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// Minimum-length odd cycle of the graph, or nullopt if it is bipartite.
///
/// Among cycles of minimum length the result is the lexicographically least
/// vertex sequence that starts at its least vertex. For each candidate start
/// s (ascending), a breadth-first search over the parity double cover of the
/// subgraph induced by vertices >= s gives the shortest odd closed walk
/// through s; the first s attaining the global minimum is the start, and the
/// walk is then read off greedily by always stepping to the smallest
/// neighbour that can still close at the required length. A shortest odd
/// closed walk never repeats a vertex, so the walk is a cycle.
std::optional<OddCycleCertificate> shortest_odd_cycle(const IncompatGraph& g);

/// Shortest path (fewest vertices) in the forcing graph from (i, j) to
/// (j, i), lexicographically least among shortest. Throws
/// std::invalid_argument if i == j or either is out of range.
std::optional<ForcingPathCertificate> forcing_path(const ForcingGraph& f, std::size_t i,
                                                   std::size_t j);

/// Shortest forcing path over every column pair i < j; ties go to the
/// smallest (i, j).
std::optional<ForcingPathCertificate> shortest_forcing_path(const ForcingGraph& f);

/// Turns a forcing path with m vertices into an odd cycle by reversing every
/// second vertex: length m - 1 when m is even, m when m is odd (closed by a
/// reversal edge). If the resulting closed walk revisits a vertex it is cut
/// down to an odd cycle inside it, which is strictly shorter.
/// Throws std::invalid_argument if `m` does not certify `path`.
OddCycleCertificate path_to_cycle(const BinaryMatrix& m, const ForcingPathCertificate& path);

/// Converse construction: rotates the cycle to start at its least vertex,
/// reverses every second vertex and appends the reversed start, giving at
/// most m + 1 vertices. Reversal edges of the cycle collapse into repeated
/// vertices, which are merged, and any loop in the walk is erased.
/// Throws std::invalid_argument if `m` does not certify `cycle`.
ForcingPathCertificate cycle_to_path(const BinaryMatrix& m, const OddCycleCertificate& cycle);

/// Checks the certificate directly against the matrix rows; no graph is
/// built. On failure the reason names the first failing check.
Verdict verify_odd_cycle(const BinaryMatrix& m, const OddCycleCertificate& cycle);
Verdict verify_forcing_path(const BinaryMatrix& m, const ForcingPathCertificate& path);
Verdict verify_certificate(const BinaryMatrix& m, const Certificate& cert);

/// "c1p-cert 1", then "odd-cycle L" or "forcing-path L", then L lines "i j"
/// with 1-based columns.
std::string serialize_certificate(const Certificate& cert);
/// `columns` is recorded on the parsed certificate; range checks against it
/// are left to the verifiers.
Certificate parse_certificate(std::istream& in, std::size_t columns);
Certificate parse_certificate(std::string_view text, std::size_t columns);

}  // namespace c1p
