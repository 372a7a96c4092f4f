#include "c1p/certify.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace c1p {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// dist[2 * v + parity] from (source, 0) in the parity double cover of the
// subgraph induced by vertices >= floor.
std::vector<std::size_t> double_cover_distances(const PairGraph& g, VertexId source,
                                                VertexId floor) {
  std::vector<std::size_t> dist(2 * g.vertex_count(), kUnreached);
  dist[2 * source] = 0;
  std::deque<std::size_t> queue{2 * source};
  while (!queue.empty()) {
    const std::size_t state = queue.front();
    queue.pop_front();
    const VertexId x = state / 2;
    const std::size_t next_parity = 1 - state % 2;
    for (VertexId y : g.neighbors(x)) {
      if (y < floor) continue;
      const std::size_t next = 2 * y + next_parity;
      if (dist[next] == kUnreached) {
        dist[next] = dist[state] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> plain_distances(const PairGraph& g, VertexId source) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  dist[source] = 0;
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::string pair_text(PairVertex v) {
  return "(" + std::to_string(v.first + 1) + "," + std::to_string(v.second + 1) + ")";
}

bool valid_pair(PairVertex v, std::size_t n) {
  return v.first < n && v.second < n && v.first != v.second;
}

// Some row has 1s at a and b and a 0 at j.
bool row_separates(const BinaryMatrix& m, std::size_t a, std::size_t j, std::size_t b) {
  if (a == b || a == j || b == j) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.at(r, a) && m.at(r, b) && !m.at(r, j)) return true;
  }
  return false;
}

bool incompatible(const BinaryMatrix& m, PairVertex x, PairVertex y) {
  if (y == x.reversed()) return true;
  if (x.second == y.first && row_separates(m, x.first, x.second, y.second)) return true;
  if (y.second == x.first && row_separates(m, y.first, y.second, x.second)) return true;
  return false;
}

bool forces(const BinaryMatrix& m, PairVertex x, PairVertex y) {
  if (x.second == y.second && row_separates(m, x.first, x.second, y.first)) return true;
  if (x.first == y.first && row_separates(m, x.second, x.first, y.second)) return true;
  return false;
}

Verdict fail(std::string reason) { return Verdict{false, std::move(reason)}; }

// Cuts a closed walk with a repeated vertex into the odd part until no
// vertex repeats. Input length must be odd.
std::vector<PairVertex> odd_cycle_within(std::vector<PairVertex> walk) {
  for (;;) {
    bool cut = false;
    for (std::size_t a = 0; a < walk.size() && !cut; ++a) {
      for (std::size_t b = a + 1; b < walk.size() && !cut; ++b) {
        if (walk[a] != walk[b]) continue;
        std::vector<PairVertex> inner(walk.begin() + a, walk.begin() + b);
        std::vector<PairVertex> outer(walk.begin() + b, walk.end());
        outer.insert(outer.end(), walk.begin(), walk.begin() + a);
        walk = inner.size() % 2 == 1 ? std::move(inner) : std::move(outer);
        cut = true;
      }
    }
    if (!cut) return walk;
  }
}

}  // namespace

std::optional<OddCycleCertificate> shortest_odd_cycle(const IncompatGraph& g) {
  std::size_t best_length = kUnreached;
  VertexId best_start = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    const auto dist = double_cover_distances(g, s, s);
    if (dist[2 * s + 1] < best_length) {
      best_length = dist[2 * s + 1];
      best_start = s;
    }
  }
  if (best_length == kUnreached) return std::nullopt;

  const VertexId s = best_start;
  const auto dist = double_cover_distances(g, s, s);
  OddCycleCertificate cert{g.columns(), {vertex_at(s, g.columns())}};
  VertexId current = s;
  for (std::size_t step = 1; step < best_length; ++step) {
    // After `step` edges we sit on parity step % 2; the rest of the walk
    // back to (s, 1) has length best_length - step, which is the distance
    // from (s, 0) to the opposite parity copy.
    const std::size_t opposite = 1 - step % 2;
    VertexId chosen = kUnreached;
    for (VertexId w : g.neighbors(current)) {
      if (w > s && dist[2 * w + opposite] == best_length - step) {
        chosen = w;
        break;
      }
    }
    if (chosen == kUnreached) throw std::logic_error("shortest odd cycle: greedy walk stalled");
    cert.vertices.push_back(vertex_at(chosen, g.columns()));
    current = chosen;
  }
  return cert;
}

std::optional<ForcingPathCertificate> forcing_path(const ForcingGraph& f, std::size_t i,
                                                   std::size_t j) {
  const std::size_t n = f.columns();
  if (i == j || i >= n || j >= n) {
    throw std::invalid_argument("forcing path endpoints must be distinct columns in range");
  }
  const VertexId source = vertex_id({i, j}, n);
  const VertexId target = vertex_id({j, i}, n);
  const auto to_target = plain_distances(f, target);
  if (to_target[source] == kUnreached) return std::nullopt;

  ForcingPathCertificate cert{n, {vertex_at(source, n)}};
  VertexId current = source;
  while (current != target) {
    for (VertexId w : f.neighbors(current)) {
      if (to_target[w] + 1 == to_target[current]) {
        current = w;
        break;
      }
    }
    cert.vertices.push_back(vertex_at(current, n));
  }
  return cert;
}

std::optional<ForcingPathCertificate> shortest_forcing_path(const ForcingGraph& f) {
  std::optional<ForcingPathCertificate> best;
  for (std::size_t i = 0; i < f.columns(); ++i) {
    for (std::size_t j = i + 1; j < f.columns(); ++j) {
      auto path = forcing_path(f, i, j);
      if (path && (!best || path->vertices.size() < best->vertices.size())) best = std::move(path);
    }
  }
  return best;
}

OddCycleCertificate path_to_cycle(const BinaryMatrix& m, const ForcingPathCertificate& path) {
  if (auto verdict = verify_forcing_path(m, path); !verdict) {
    throw std::invalid_argument("invalid forcing path: " + verdict.reason);
  }
  const auto& u = path.vertices;
  std::vector<PairVertex> walk;
  walk.reserve(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    // Positions are 1-based in the construction: even positions are reversed.
    walk.push_back(k % 2 == 1 ? u[k].reversed() : u[k]);
  }
  // Even count: the last entry is the reversed end, i.e. the start again.
  if (u.size() % 2 == 0) walk.pop_back();
  return OddCycleCertificate{path.columns, odd_cycle_within(std::move(walk))};
}

ForcingPathCertificate cycle_to_path(const BinaryMatrix& m, const OddCycleCertificate& cycle) {
  if (auto verdict = verify_odd_cycle(m, cycle); !verdict) {
    throw std::invalid_argument("invalid odd cycle: " + verdict.reason);
  }
  std::vector<PairVertex> v = cycle.vertices;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  v.push_back(v.front());

  std::vector<PairVertex> walk;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const PairVertex next = k % 2 == 1 ? v[k].reversed() : v[k];
    if (!walk.empty() && walk.back() == next) continue;  // collapsed reversal edge
    // Loop erasure: returning to an earlier vertex drops the loop.
    auto seen = std::find(walk.begin(), walk.end(), next);
    if (seen != walk.end()) {
      walk.erase(seen + 1, walk.end());
    } else {
      walk.push_back(next);
    }
  }
  return ForcingPathCertificate{cycle.columns, std::move(walk)};
}

Verdict verify_odd_cycle(const BinaryMatrix& m, const OddCycleCertificate& cycle) {
  const std::size_t n = m.cols();
  if (cycle.columns != n) {
    return fail("certificate is for " + std::to_string(cycle.columns) +
                " columns, matrix has " + std::to_string(n));
  }
  const auto& v = cycle.vertices;
  const std::size_t len = v.size();
  if (len % 2 == 0) return fail("odd-cycle length " + std::to_string(len) + " is even");
  if (len < 3) return fail("odd-cycle length " + std::to_string(len) + " is below 3");
  for (std::size_t t = 0; t < len; ++t) {
    if (!valid_pair(v[t], n)) {
      return fail("vertex " + std::to_string(t + 1) + " " + pair_text(v[t]) +
                  " is not a column pair of this matrix");
    }
  }
  for (std::size_t t = 0; t < len; ++t) {
    const PairVertex x = v[t];
    const PairVertex y = v[(t + 1) % len];
    if (!incompatible(m, x, y)) {
      return fail("edge " + std::to_string(t + 1) + " is not an incompatibility edge: " +
                  pair_text(x) + " -- " + pair_text(y));
    }
  }
  for (std::size_t a = 0; a < len; ++a) {
    for (std::size_t b = a + 1; b < len; ++b) {
      if (v[a] == v[b]) {
        return fail("vertex " + std::to_string(b + 1) + " repeats vertex " + std::to_string(a + 1));
      }
    }
  }
  return Verdict{true, {}};
}

Verdict verify_forcing_path(const BinaryMatrix& m, const ForcingPathCertificate& path) {
  const std::size_t n = m.cols();
  if (path.columns != n) {
    return fail("certificate is for " + std::to_string(path.columns) + " columns, matrix has " +
                std::to_string(n));
  }
  const auto& u = path.vertices;
  if (u.size() < 2) return fail("forcing path has fewer than 2 vertices");
  for (std::size_t t = 0; t < u.size(); ++t) {
    if (!valid_pair(u[t], n)) {
      return fail("vertex " + std::to_string(t + 1) + " " + pair_text(u[t]) +
                  " is not a column pair of this matrix");
    }
  }
  if (u.back() != u.front().reversed()) {
    return fail("endpoints " + pair_text(u.front()) + " and " + pair_text(u.back()) +
                " are not reversals of each other");
  }
  for (std::size_t t = 0; t + 1 < u.size(); ++t) {
    if (!forces(m, u[t], u[t + 1])) {
      return fail("edge " + std::to_string(t + 1) + " is not a forcing edge: " +
                  pair_text(u[t]) + " -- " + pair_text(u[t + 1]));
    }
  }
  return Verdict{true, {}};
}

Verdict verify_certificate(const BinaryMatrix& m, const Certificate& cert) {
  return std::visit(
      [&](const auto& c) -> Verdict {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, OddCycleCertificate>) {
          return verify_odd_cycle(m, c);
        } else {
          return verify_forcing_path(m, c);
        }
      },
      cert);
}

std::string serialize_certificate(const Certificate& cert) {
  const bool cycle = std::holds_alternative<OddCycleCertificate>(cert);
  const auto& vertices = cycle ? std::get<OddCycleCertificate>(cert).vertices
                               : std::get<ForcingPathCertificate>(cert).vertices;
  std::string out = "c1p-cert 1\n";
  out += (cycle ? "odd-cycle " : "forcing-path ") + std::to_string(vertices.size()) + "\n";
  for (const auto& v : vertices) {
    out += std::to_string(v.first + 1) + " " + std::to_string(v.second + 1) + "\n";
  }
  return out;
}

namespace {

std::size_t parse_positive(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("certificate line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not a non-negative integer");
  }
  return value;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Certificate parse_certificate(std::istream& in, std::size_t columns) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next() || line != "c1p-cert 1") throw ParseError("certificate must begin with 'c1p-cert 1'");
  if (!next()) throw ParseError("certificate is missing its kind line");
  const auto kind_line = words(line);
  if (kind_line.size() != 2 || (kind_line[0] != "odd-cycle" && kind_line[0] != "forcing-path")) {
    throw ParseError("certificate line 2 must be 'odd-cycle L' or 'forcing-path L'");
  }
  const std::size_t length = parse_positive(kind_line[1], line_no);

  std::vector<PairVertex> vertices;
  vertices.reserve(length);
  for (std::size_t t = 0; t < length; ++t) {
    if (!next()) {
      throw ParseError("certificate declares " + std::to_string(length) + " vertices, found " +
                       std::to_string(t));
    }
    const auto pair = words(line);
    if (pair.size() != 2) {
      throw ParseError("certificate line " + std::to_string(line_no) + " must be 'i j'");
    }
    const std::size_t i = parse_positive(pair[0], line_no);
    const std::size_t j = parse_positive(pair[1], line_no);
    if (i == 0 || j == 0) {
      throw ParseError("certificate line " + std::to_string(line_no) + ": columns are 1-based");
    }
    vertices.push_back({i - 1, j - 1});
  }
  while (next()) {
    if (line.find_first_not_of(" \t") != std::string::npos) {
      throw ParseError("unexpected content after certificate vertices");
    }
  }
  if (kind_line[0] == "odd-cycle") return OddCycleCertificate{columns, std::move(vertices)};
  return ForcingPathCertificate{columns, std::move(vertices)};
}

Certificate parse_certificate(std::string_view text, std::size_t columns) {
  std::istringstream in{std::string(text)};
  return parse_certificate(in, columns);
}

}  // namespace c1p
