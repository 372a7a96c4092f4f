#include "c1p/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "c1p/certify.hpp"
#include "c1p/graph.hpp"

namespace c1p {

std::size_t theorem_bound(std::size_t k) {
  if (k < 3) throw std::invalid_argument("matrices with fewer than 3 columns are always C1P");
  if (k == 3) return 3;
  return k % 2 == 1 ? k + 2 : k + 3;
}

std::size_t expected_pattern_length(TuckerKind kind) {
  if (kind.has_parameter() && kind.k < min_parameter(kind.family)) {
    throw std::invalid_argument("k below the family minimum");
  }
  const std::size_t k = kind.k;
  switch (kind.family) {
    case TuckerFamily::I:
    case TuckerFamily::II: return k % 2 == 1 ? k : k + 1;
    case TuckerFamily::III: return k % 2 == 1 ? k + 2 : k + 3;
    case TuckerFamily::IV: return 5;
    case TuckerFamily::V: return 9;
  }
  throw std::invalid_argument("unknown Tucker family");
}

namespace {

std::size_t shortest_length(const BinaryMatrix& m) {
  auto cycle = shortest_odd_cycle(build_incompatibility_graph(m));
  return cycle ? cycle->vertices.size() : 0;
}

BoundRow measure(TuckerKind kind) {
  BoundRow row{kind, kind.pattern_cols(), 0, expected_pattern_length(kind), 0, false};
  row.computed = shortest_length(tucker_pattern(kind));
  row.bound = theorem_bound(row.columns);
  row.tight = row.computed == row.bound;
  return row;
}

std::string k_text(const TuckerKind& kind) {
  return kind.has_parameter() ? std::to_string(kind.k) : std::string("-");
}

}  // namespace

BoundReport reproduce_table(std::size_t k_min, std::size_t k_max, std::size_t cap) {
  if (k_min < 3 || k_min > k_max || k_max > cap) {
    throw std::invalid_argument("table range must satisfy 3 <= kmin <= kmax <= " +
                                std::to_string(cap));
  }
  std::vector<TuckerKind> kinds;
  for (auto family : {TuckerFamily::I, TuckerFamily::II, TuckerFamily::III}) {
    for (std::size_t k = std::max(k_min, min_parameter(family)); k <= k_max; ++k) {
      kinds.push_back({family, k});
    }
  }
  if (k_max >= 4) {
    kinds.push_back(TuckerKind::IV());
    kinds.push_back(TuckerKind::V());
  }

  BoundReport report;
  report.rows.reserve(kinds.size());
  for (const auto& kind : kinds) report.rows.push_back(measure(kind));
  report.pass = std::all_of(report.rows.begin(), report.rows.end(), [](const BoundRow& r) {
    return r.computed == r.expected && r.computed <= r.bound;
  });
  return report;
}

std::string format_table(const BoundReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "kind" << std::right << std::setw(4) << "k" << std::setw(8)
      << "n_cols" << std::setw(10) << "computed" << std::setw(10) << "expected" << std::setw(7)
      << "bound" << std::setw(7) << "tight" << "\n";
  for (const auto& r : report.rows) {
    out << std::left << std::setw(6) << family_name(r.kind.family) << std::right << std::setw(4)
        << k_text(r.kind) << std::setw(8) << r.columns << std::setw(10) << r.computed
        << std::setw(10) << r.expected << std::setw(7) << r.bound << std::setw(7)
        << (r.tight ? "yes" : "no") << "\n";
  }
  out << "verdict: " << (report.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string format_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "kind,k,n_cols,computed,expected,bound,tight\n";
  for (const auto& r : report.rows) {
    out << family_name(r.kind.family) << ',' << k_text(r.kind) << ',' << r.columns << ','
        << r.computed << ',' << r.expected << ',' << r.bound << ',' << (r.tight ? "true" : "false")
        << "\n";
  }
  return out.str();
}

StressReport stress_bound(std::size_t trials, std::size_t rows, std::size_t cols, double density,
                          std::uint64_t seed) {
  if (cols < 4 || cols > kStressColumnCap) {
    throw std::invalid_argument("stress columns must lie in [4, " +
                                std::to_string(kStressColumnCap) + "]");
  }
  StressReport report;
  report.trials = trials;
  report.bound = theorem_bound(cols);
  for (std::size_t t = 0; t < trials; ++t) {
    const BinaryMatrix m = random_matrix(rows, cols, density, seed + t);
    const std::size_t length = shortest_length(m);
    if (length == 0) continue;
    ++report.non_c1p;
    ++report.length_histogram[length];
    report.max_length = std::max(report.max_length, length);
    if (length > report.bound) report.violations.push_back({t, length, serialize_matrix(m)});
  }
  return report;
}

std::string format_stress(const StressReport& report) {
  std::ostringstream out;
  out << "trials: " << report.trials << "\n"
      << "non-C1P: " << report.non_c1p << "\n"
      << "bound: " << report.bound << "\n"
      << "max length: " << report.max_length << "\n"
      << "lengths:";
  for (const auto& [length, count] : report.length_histogram) out << ' ' << length << 'x' << count;
  out << "\nviolations: " << report.violations.size() << "\n";
  for (const auto& v : report.violations) {
    out << "violation at trial " << v.trial << " (length " << v.length << "):\n" << v.matrix;
  }
  out << "verdict: " << (report.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace c1p
