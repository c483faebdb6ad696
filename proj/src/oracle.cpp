#include "trigsum/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace trigsum {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Step of the symmetric difference F(x + h) - F(x - h) used to pin down a
// branch extremum. Small enough that the O(h^2) bias stays below 1e-10,
// large enough that the difference dominates rounding noise.
constexpr double kSymmetricStep = 1e-5;

// Sign-change roots closer than this are treated as one tangential root
// split by rounding noise.
constexpr double kMergeWidth = 1e-6;

// |F(x*) - c| allowed at an accepted tangency, relative to 1 + |c|.
constexpr double kTangencyResidual = 1e-12;

void check(const OracleOptions& opts) {
  if (opts.points < 1000) {
    throw std::invalid_argument("oracle needs at least 1000 grid points");
  }
  if (!(opts.exclusion > 0.0) || opts.exclusion >= kHalfPi / 4.0) {
    throw std::invalid_argument("exclusion margin must lie in (0, pi/8)");
  }
  if (!(opts.tol > 0.0)) {
    throw std::invalid_argument("bisection tolerance must be positive");
  }
}

// F - c on the interior of the branches, where it is finite by construction.
struct Residual {
  double c;
  double domain_tol;

  double operator()(double x) const { return eval_f(Radians(x), domain_tol) - c; }
};

Residual residual_for(double c, const OracleOptions& opts) {
  return {c, std::min(kDomainTol, opts.exclusion * 0.5)};
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const Residual& f, double lo, double hi, double flo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const double fmid = f(mid);
    if (fmid == 0.0) {
      return mid;
    }
    if (sign(fmid) == sign(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Locates the extremum of F in [lo, hi] as the zero of the symmetric
// difference, using function values only.
std::optional<double> refine_extremum(const Residual& f, double lo, double hi, double h,
                                      double tol) {
  const auto diff = [&](double x) { return f(x + h) - f(x - h); };
  double dlo = diff(lo);
  const double dhi = diff(hi);
  if (dlo == 0.0) return lo;
  if (dhi == 0.0) return hi;
  if (sign(dlo) == sign(dhi)) {
    return std::nullopt;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const double dmid = diff(mid);
    if (dmid == 0.0) {
      return mid;
    }
    if (sign(dmid) == sign(dlo)) {
      lo = mid;
      dlo = dmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool accept_tangency(const Residual& f, double x) {
  return std::abs(f(x)) <= kTangencyResidual * (1.0 + std::abs(f.c));
}

struct Candidate {
  double x;
  bool from_sign_change;
};

std::vector<double> roots_on_branch(const Residual& f, double lo, double hi, std::size_t cells,
                                    const OracleOptions& opts) {
  const double step = (hi - lo) / static_cast<double>(cells);
  const double h = std::min(kSymmetricStep, 0.5 * opts.exclusion);
  std::vector<double> xs(cells + 1);
  std::vector<double> vs(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    xs[i] = i == cells ? hi : lo + step * static_cast<double>(i);
    vs[i] = f(xs[i]);
  }

  std::vector<Candidate> found;
  for (std::size_t i = 0; i <= cells; ++i) {
    if (vs[i] == 0.0) {
      found.push_back({xs[i], true});
      continue;
    }
    if (i < cells && vs[i + 1] != 0.0 && sign(vs[i]) != sign(vs[i + 1])) {
      found.push_back({bisect(f, xs[i], xs[i + 1], vs[i], opts.tol), true});
    }
  }

  // Tangential contacts: a local minimum of |F - c| with no sign change around it.
  const double near_zero = std::sqrt(opts.tol);
  for (std::size_t i = 1; i < cells; ++i) {
    const double a = std::abs(vs[i]);
    if (a >= near_zero || a > std::abs(vs[i - 1]) || a >= std::abs(vs[i + 1])) {
      continue;
    }
    if (sign(vs[i - 1]) != sign(vs[i]) || sign(vs[i + 1]) != sign(vs[i]) || vs[i] == 0.0) {
      continue;
    }
    const auto x = refine_extremum(f, xs[i - 1], xs[i + 1], h, opts.tol);
    if (x && accept_tangency(f, *x)) {
      found.push_back({*x, false});
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Candidate& p, const Candidate& q) { return p.x < q.x; });

  // Rounding can make F - c flicker across zero right at a tangency; collapse
  // such pairs onto the extremum between them.
  std::vector<double> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i + 1 < found.size() && found[i].from_sign_change && found[i + 1].from_sign_change &&
        found[i + 1].x - found[i].x < kMergeWidth) {
      const double a = std::max(lo + h, found[i].x - step);
      const double b = std::min(hi - h, found[i + 1].x + step);
      const auto x = refine_extremum(f, a, b, h, opts.tol);
      if (x && accept_tangency(f, *x)) {
        out.push_back(*x);
        ++i;
        continue;
      }
    }
    out.push_back(found[i].x);
  }
  return out;
}

template <typename Task>
auto run_partitioned(std::size_t parts, unsigned workers, Task task) {
  using Result = decltype(task(std::size_t{0}));
  std::vector<Result> results(parts);
  const std::size_t width = std::max<std::size_t>(1, workers);
  for (std::size_t first = 0; first < parts; first += width) {
    std::vector<std::future<Result>> pending;
    const std::size_t last = std::min(parts, first + width);
    for (std::size_t p = first; p < last; ++p) {
      pending.push_back(std::async(std::launch::async, task, p));
    }
    for (std::size_t p = first; p < last; ++p) {
      results[p] = pending[p - first].get();
    }
  }
  return results;
}

std::string format_angle(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  if (const auto exact = quarter_pi_form(x)) {
    os << " (" << *exact << ")";
  }
  return os.str();
}

}  // namespace

ScanReport grid_scan(double c, const OracleOptions& opts) {
  check(opts);
  const Residual f = residual_for(c, opts);
  const std::size_t points = opts.points;
  const std::size_t chunks = std::max<unsigned>(1, opts.workers);

  struct Best {
    double gap = std::numeric_limits<double>::infinity();
    double x = 0.0;
  };
  const auto results = run_partitioned(chunks, opts.workers, [&](std::size_t chunk) {
    Best best;
    const std::size_t begin = points * chunk / chunks;
    const std::size_t end = points * (chunk + 1) / chunks;
    for (std::size_t i = begin; i < end; ++i) {
      const double x = kTwoPi * static_cast<double>(i) / static_cast<double>(points);
      if (std::abs(std::remainder(x, kHalfPi)) <= opts.exclusion) {
        continue;
      }
      const double gap = std::abs(f(x));
      if (gap < best.gap) {
        best = {gap, x};
      }
    }
    return best;
  });

  // Chunks are merged in index order with a strict comparison, so the first
  // minimiser wins no matter how the range was split.
  Best best;
  for (const Best& b : results) {
    if (b.gap < best.gap) {
      best = b;
    }
  }
  ScanReport report;
  report.target = c;
  report.min_gap = best.gap;
  report.argmin = best.x;
  return report;
}

std::vector<double> refine_roots(double c, const OracleOptions& opts) {
  check(opts);
  const Residual f = residual_for(c, opts);
  const std::size_t cells = std::max<std::size_t>(opts.points / 4, 250);
  const auto per_branch = run_partitioned(4, opts.workers, [&](std::size_t branch) {
    const double lo = kHalfPi * static_cast<double>(branch) + opts.exclusion;
    const double hi = kHalfPi * static_cast<double>(branch + 1) - opts.exclusion;
    return roots_on_branch(f, lo, hi, cells, opts);
  });
  std::vector<double> out;
  for (const auto& roots : per_branch) {
    out.insert(out.end(), roots.begin(), roots.end());
  }
  return out;
}

std::string Comparison::describe() const {
  std::ostringstream os;
  if (matched) {
    os << "closed form and numeric roots match one-to-one";
    return os.str();
  }
  for (const Mismatch& m : unmatched_residues) {
    os << "unmatched closed-form residue " << format_angle(m.angle);
    if (m.residual) {
      os << ": F - c = " << std::setprecision(10) << *m.residual;
    } else {
      os << ": F undefined there";
    }
    os << "\n";
  }
  for (const Mismatch& m : unmatched_numeric) {
    os << "unmatched numeric root " << format_angle(m.angle) << ": nearest residue "
       << std::setprecision(3) << m.nearest << " away\n";
  }
  return os.str();
}

Comparison compare(std::span<const double> residues, double c, std::span<const double> numeric,
                   double tol) {
  std::vector<double> left;
  std::vector<double> right;
  for (double r : residues) left.push_back(normalize_angle(r));
  for (double x : numeric) right.push_back(normalize_angle(x));

  // Bipartite matching by augmenting paths; both sides are tiny.
  std::vector<int> owner(right.size(), -1);
  std::vector<int> partner(left.size(), -1);
  const auto close = [&](std::size_t i, std::size_t j) {
    return circular_distance(left[i], right[j]) <= tol;
  };
  std::vector<char> seen;
  const auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!close(i, j) || seen[j]) continue;
      seen[j] = 1;
      if (owner[j] < 0 || self(self, static_cast<std::size_t>(owner[j]))) {
        owner[j] = static_cast<int>(i);
        partner[i] = static_cast<int>(j);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left.size(); ++i) {
    seen.assign(right.size(), 0);
    augment(augment, i);
  }

  const auto nearest = [](double x, const std::vector<double>& others) {
    double best = std::numeric_limits<double>::infinity();
    for (double y : others) best = std::min(best, circular_distance(x, y));
    return best;
  };

  Comparison out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (partner[i] >= 0) continue;
    std::optional<double> res;
    const Radians x(left[i]);
    if (classify_domain(x).valid()) {
      res = eval_f(x) - c;
    }
    out.unmatched_residues.push_back({left[i], res, nearest(left[i], right)});
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (owner[j] >= 0) continue;
    out.unmatched_numeric.push_back({right[j], eval_f(Radians(right[j]), kDomainTol) - c,
                                     nearest(right[j], left)});
  }
  out.matched = out.unmatched_residues.empty() && out.unmatched_numeric.empty();
  return out;
}

Comparison compare(const SolutionFamily& fam, std::span<const double> numeric, double tol) {
  std::vector<double> offsets;
  for (const ResidueClass& rc : fam.residues) offsets.push_back(rc.offset);
  return compare(offsets, fam.target.c(), numeric, tol);
}

ScanReport verify(const SolutionFamily& fam, double match_tol, const OracleOptions& opts) {
  const double c = fam.target.c();
  ScanReport report = grid_scan(c, opts);
  report.numeric_roots = refine_roots(c, opts);
  report.matched = compare(fam, report.numeric_roots, match_tol).matched;
  return report;
}

double gap_distance(double c) {
  const Thresholds th = thresholds();
  if (c <= th.gap_lo || c >= th.gap_hi) {
    return 0.0;
  }
  return std::min(c - th.gap_lo, th.gap_hi - c);
}

Certificate no_solution_certificate(std::int64_t n, const OracleOptions& opts) {
  if (n < -1 || n > 6) {
    throw std::out_of_range("no-solution certificates exist only for -1 <= n <= 6");
  }
  const double c = static_cast<double>(n);
  const ScanReport scan = grid_scan(c, opts);
  const std::vector<double> roots = refine_roots(c, opts);
  const double floor = gap_distance(c) - kCertificateSlack;
  return {n, scan.min_gap, scan.argmin, floor, roots.size(),
          roots.empty() && floor > 0.0 && scan.min_gap > floor};
}

}  // namespace trigsum
