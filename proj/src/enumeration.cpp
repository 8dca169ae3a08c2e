#include "fano/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace fano {

bool almost_free(const Degrees& w) {
  Int dets[kVars][kVars]{};
  for (int i = 0; i < kVars; ++i)
    for (int j = i + 1; j < kVars; ++j) dets[i][j] = arith::abs(det2(w[i], w[j]));
  for (int skip = 0; skip < kVars; ++skip) {
    Int g = 0;
    for (int i = 0; i < kVars && g != 1; ++i)
      for (int j = i + 1; j < kVars && g != 1; ++j)
        if (i != skip && j != skip) g = arith::gcd(g, dets[i][j]);
    if (g != 1) return false;
  }
  return true;
}

bool regular_eff_condition(const SpecifyingData& d) {
  const Cone2 eff = effective_cone(d);
  if (!(moving_cone(d) == eff) || !eff.contains_interior(d.mu)) return true;
  if (arith::abs(det2(eff.lo(), eff.hi())) != 1) return false;
  for (const auto& w : d.w)
    if ((det2(w, eff.lo()) == 0 || det2(w, eff.hi()) == 0) && !is_primitive(w)) return false;
  return true;
}

namespace {

// v = a u + b w with integers a, b >= 0; u, w independent
bool in_pair_monoid(const Vec2& u, const Vec2& w, const Vec2& v) {
  const Int D = det2(u, w);
  const Int a = det2(v, w), b = det2(u, v);
  if (a % D != 0 || b % D != 0) return false;
  return a / D >= 0 && b / D >= 0;
}

}  // namespace

bool cross_pair_condition(const SpecifyingData& d) { return cross_pair_condition(d, moving_cone(d)); }

bool cross_pair_condition(const SpecifyingData& d, const Cone2& mov) {
  if (mov.kind() != Cone2::Kind::Wedge) return true;
  // rays certainly in the GIT fan: the bounds of Mov and any column ray in
  // Mov° not through mu (the face of a single variable carries no monomial)
  std::vector<Vec2> rays{mov.lo(), mov.hi()};
  for (const auto& w : d.w)
    if (mov.contains_interior(w) && det2(w, d.mu) != 0) rays.push_back(primitive(w));
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j) {
      if (det2(d.w[i], d.w[j]) <= 0) continue;
      // some chamber inside Mov lies in cone(w_i, w_j) if two of the rays do
      int inside = 0;
      Vec2 first{};
      for (const auto& r : rays)
        if (det2(d.w[i], r) >= 0 && det2(r, d.w[j]) >= 0 && (inside == 0 || r != first)) {
          if (inside++ == 0) first = r;
        }
      if (inside < 2) continue;
      // gamma_{i,j} is then relevant unless it carries exactly one monomial,
      // and at most one fits
      if (in_pair_monoid(d.w[i], d.w[j], d.mu)) continue;
      if (arith::abs(det2(d.w[i], d.w[j])) != 1) return false;
      bool quasismooth = false;
      for (int k = 0; k < kVars && !quasismooth; ++k)
        quasismooth = in_pair_monoid(d.w[i], d.w[j], d.mu - d.w[k]);
      if (!quasismooth) return false;
    }
  return true;
}

bool three_generator_condition(const SpecifyingData& d, const NewtonData& n) {
  bool pure_power[kVars]{};
  for (std::size_t m = 0; m < n.monomials.size(); ++m)
    if (std::popcount(static_cast<unsigned>(n.supports[m])) == 1)
      pure_power[std::countr_zero(static_cast<unsigned>(n.supports[m]))] = true;

  for (const Cone2& lambda : mov_chambers(d, n)) {
    // lambda^- and lambda^+ are closed
    bool minus[kVars], plus[kVars];
    for (int i = 0; i < kVars; ++i) {
      minus[i] = det2(lambda.lo(), d.w[i]) <= 0;
      plus[i] = det2(lambda.hi(), d.w[i]) >= 0;
    }
    for (int i = 0; i < kVars; ++i)
      for (int j = i + 1; j < kVars; ++j)
        for (int k = j + 1; k < kVars; ++k) {
          const bool first = minus[i] && minus[j] && plus[k] && !pure_power[k];
          const bool second = minus[i] && plus[j] && plus[k] && !pure_power[i];
          if ((first || second) && !generates_group(std::array{d.w[i], d.w[j], d.w[k]})) return false;
        }
  }
  return true;
}

namespace {

struct Search {
  const SearchBounds& bounds;
  const EnumerationOptions& options;
  std::vector<Vec2> pool;  // counter-clockwise
  std::mutex lock;
  std::map<SpecifyingData, VerificationReport> found;
  std::atomic<std::size_t> column_sets{0}, almost_free_sets{0}, pairs{0}, pruned{0};

  Search(const SearchBounds& b, const EnumerationOptions& o) : bounds(b), options(o) {
    for (Int x = 0; x <= b.max_abs_entry; ++x)
      for (Int y = 0; y <= b.max_abs_entry; ++y)
        if (x != 0 || y != 0) pool.push_back({x, y});
    std::stable_sort(pool.begin(), pool.end(), ccw_before);
  }

  void run_prefix(int first, int second) {
    std::array<int, kVars> idx{};
    idx[0] = first;
    idx[1] = second;
    descend(idx, 2);
  }

  void descend(std::array<int, kVars>& idx, int depth) {
    if (depth == kVars) {
      leaf(idx);
      return;
    }
    for (int k = idx[depth - 1]; k < static_cast<int>(pool.size()); ++k) {
      idx[depth] = k;
      descend(idx, depth + 1);
    }
  }

  void leaf(const std::array<int, kVars>& idx) {
    Degrees w;
    for (int i = 0; i < kVars; ++i) w[i] = pool[idx[i]];
    // Eff normalized to cone((1,0), (p,q)) with 0 <= p < q
    if (w[6].x >= w[6].y) return;
    ++column_sets;
    if (det2(w[1], w[5]) <= 0) return;  // Mov is a wedge
    if (!almost_free(w)) return;
    ++almost_free_sets;

    SpecifyingData d{w, {}};
    const Vec2 sum = d.column_sum();
    const Cone2 mov = cone_hull(std::span<const Vec2>(w.begin() + 1, 5));
    for (Int mx = 0; mx <= bounds.max_mu.x; ++mx)
      for (Int my = 0; my <= bounds.max_mu.y; ++my) {
        const Vec2 mu{mx, my};
        if (mu == Vec2{0, 0} || std::find(w.begin(), w.end(), mu) != w.end()) continue;
        // mu in every cone over five of the columns
        if (det2(w[2], mu) < 0 || det2(mu, w[4]) < 0) continue;
        if (!mov.contains_interior(sum - mu)) continue;
        d.mu = mu;
        consider(d, mov);
      }
  }

  void consider(const SpecifyingData& d, const Cone2& mov) {
    if (options.pruning && !cross_pair_condition(d, mov)) {
      ++pruned;
      return;
    }
    if (!in_monoid(d.w, d.mu, kAllVars)) return;
    if (options.pruning && !regular_eff_condition(d)) {
      ++pruned;
      return;
    }
    ++pairs;
    const NewtonData n = newton_data(d);
    if (options.pruning && !three_generator_condition(d, n)) {
      ++pruned;
      return;
    }
    VerificationReport report;
    try {
      report = verify_candidate(d, n);
    } catch (const NotFano&) {
      return;
    }
    if (report.overall == Status::Fail) return;
    if (validation_error(d)) return;
    SpecifyingData c = canonical_form(d);
    std::lock_guard g(lock);
    found.emplace(c, report);
  }
};

}  // namespace

std::vector<Candidate> enumerate_candidates(const SearchBounds& b, const EnumerationOptions& o,
                                            EnumerationStats* stats) {
  if (b.max_abs_entry < 0 || b.max_mu.x < 0 || b.max_mu.y < 0) throw std::invalid_argument("negative search bounds");
  Search s(b, o);

  std::vector<std::pair<int, int>> prefixes;
  for (int i = 0; i < static_cast<int>(s.pool.size()); ++i) {
    if (s.pool[i].y != 0) break;  // first column on the ray (1,0)
    for (int j = i; j < static_cast<int>(s.pool.size()); ++j) prefixes.emplace_back(i, j);
  }

  unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next++) < prefixes.size();) s.run_prefix(prefixes[t].first, prefixes[t].second);
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  if (stats) *stats = {s.column_sets, s.almost_free_sets, s.pairs, s.pruned};
  std::vector<Candidate> out;
  for (auto& [d, r] : s.found) out.push_back({d, r});
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.data.encoding() < b.data.encoding(); });
  return out;
}

}  // namespace fano
