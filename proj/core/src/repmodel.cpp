#include "rsdensity/repmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "rsdensity/error.hpp"
#include "rsdensity/primes.hpp"
#include "rsdensity/rng.hpp"

namespace rsd {

namespace {

std::string prime_label(std::uint64_t p) { return "p=" + std::to_string(p); }

// Greedy nearest-pair matching of a multiset against a transformed copy.
template <typename T, typename Dist>
bool greedy_match(const std::vector<T>& lhs, const std::vector<T>& rhs, Dist dist, double tol) {
  if (lhs.size() != rhs.size()) return false;
  std::vector<bool> used(rhs.size(), false);
  for (const auto& x : lhs) {
    double best = tol;
    std::size_t best_idx = rhs.size();
    for (std::size_t k = 0; k < rhs.size(); ++k) {
      if (used[k]) continue;
      const double d = dist(x, rhs[k]);
      if (d <= best) {
        best = d;
        best_idx = k;
      }
    }
    if (best_idx == rhs.size()) return false;
    used[best_idx] = true;
  }
  return true;
}

void check_unramified(const UnramifiedLocal& local, int rank, const std::string& rep_id,
                      const std::string& place, std::vector<Violation>& out) {
  if (static_cast<int>(local.mu.size()) != rank) {
    out.push_back({rep_id, place, "length",
                   "expected " + std::to_string(rank) + " parameters, got " +
                       std::to_string(local.mu.size())});
    return;
  }
  if (!is_conjugate_symmetric(local.mu)) {
    out.push_back({rep_id, place, "unitarity", "unitarity at " + place});
  }
  for (const auto& mu : local.mu) {
    if (!(mu.real() < 0.5)) {
      out.push_back({rep_id, place, "Re mu < 1/2",
                     "Re mu < 1/2 violated at " + place + " (Re mu = " +
                         std::to_string(mu.real()) + ")"});
      break;
    }
  }
}

void check_ramified(const RamifiedLocal& local, const std::string& rep_id, const std::string& place,
                    std::vector<Violation>& out) {
  std::map<std::string, std::vector<const RamifiedSegment*>> by_class;
  for (const auto& seg : local.segments) {
    if (seg.twist_class.empty()) out.push_back({rep_id, place, "twist class", "empty twist class id"});
    if (seg.r < 1) out.push_back({rep_id, place, "r >= 1", "segment with r = " + std::to_string(seg.r)});
    if (seg.L < 1) out.push_back({rep_id, place, "L >= 1", "segment with L = " + std::to_string(seg.L)});
    by_class[seg.twist_class].push_back(&seg);
  }
  for (const auto& [cls, segs] : by_class) {
    const int r0 = segs.front()->r;
    if (std::any_of(segs.begin(), segs.end(), [r0](const auto* s) { return s->r != r0; })) {
      out.push_back({rep_id, place, "inconsistent segment data",
                     "twist class '" + cls + "' carries several values of r"});
    }
    std::vector<std::pair<Complex, int>> lhs, rhs;
    for (const auto* s : segs) {
      lhs.emplace_back(s->s, s->L);
      rhs.emplace_back(-std::conj(s->s), s->L);
    }
    auto dist = [](const std::pair<Complex, int>& a, const std::pair<Complex, int>& b) {
      return a.second == b.second ? std::abs(a.first - b.first) : 1e300;
    };
    if (!greedy_match(lhs, rhs, dist, kUnitarityTol)) {
      out.push_back({rep_id, place, "unitarity",
                     "unitarity of segments in class '" + cls + "' at " + place});
    }
  }
}

}  // namespace

std::string Place::label() const { return is_infinite() ? "inf" : prime_label(p_); }

bool Representation::is_unramified_at(std::uint64_t p) const {
  auto it = finite_places.find(p);
  return it != finite_places.end() && std::holds_alternative<UnramifiedLocal>(it->second);
}

const UnramifiedLocal& Representation::satake(std::uint64_t p) const {
  auto it = finite_places.find(p);
  if (it == finite_places.end()) {
    throw InputError("representation '" + id + "' has no local data at p=" + std::to_string(p));
  }
  if (!std::holds_alternative<UnramifiedLocal>(it->second)) {
    throw InputError("no Satake tuple at p=" + std::to_string(p) + " for representation '" + id +
                     "' (ramified)");
  }
  return std::get<UnramifiedLocal>(it->second);
}

bool is_conjugate_symmetric(std::span<const Complex> mu, double tol) {
  std::vector<Complex> lhs(mu.begin(), mu.end());
  std::vector<Complex> rhs;
  rhs.reserve(lhs.size());
  for (const auto& z : lhs) rhs.push_back(-std::conj(z));
  return greedy_match(lhs, rhs, [](Complex a, Complex b) { return std::abs(a - b); }, tol);
}

double max_abs_re(const UnramifiedLocal& local) {
  double m = 0.0;
  for (const auto& mu : local.mu) m = std::max(m, std::abs(mu.real()));
  return m;
}

std::vector<Violation> validate(const Representation& rep) {
  std::vector<Violation> out;
  if (rep.rank < 2) out.push_back({rep.id, "family", "rank >= 2", "rank " + std::to_string(rep.rank)});
  if (rep.arith_conductor < 1) out.push_back({rep.id, "family", "conductor >= 1", "arith_conductor is 0"});
  check_unramified(rep.archimedean, rep.rank, rep.id, "inf", out);
  for (const auto& [p, local] : rep.finite_places) {
    const std::string place = prime_label(p);
    if (!is_prime(p)) {
      out.push_back({rep.id, place, "prime key", std::to_string(p) + " is not prime"});
      continue;
    }
    if (const auto* unr = std::get_if<UnramifiedLocal>(&local)) {
      check_unramified(*unr, rep.rank, rep.id, place, out);
    } else {
      check_ramified(std::get<RamifiedLocal>(local), rep.id, place, out);
      if (rep.arith_conductor == 0 || rep.arith_conductor % p != 0) {
        out.push_back({rep.id, place, "ramified divides conductor",
                       "ramified prime " + std::to_string(p) + " does not divide arith_conductor " +
                           std::to_string(rep.arith_conductor)});
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const Family& family) {
  std::vector<Violation> out;
  std::set<std::string> ids;
  std::map<std::string, int> class_order;
  for (const auto& rep : family.reps) {
    if (rep.rank != family.rank) {
      out.push_back({rep.id, "family", "equal rank",
                     "rank " + std::to_string(rep.rank) + " differs from family rank " +
                         std::to_string(family.rank)});
    }
    if (!ids.insert(rep.id).second) {
      out.push_back({rep.id, "family", "distinct ids", "duplicate id '" + rep.id + "'"});
    }
    for (const auto& [p, local] : rep.finite_places) {
      const auto* ram = std::get_if<RamifiedLocal>(&local);
      if (!ram) continue;
      for (const auto& seg : ram->segments) {
        auto [it, inserted] = class_order.emplace(seg.twist_class, seg.r);
        if (!inserted && it->second != seg.r) {
          out.push_back({rep.id, prime_label(p), "inconsistent segment data",
                         "twist class '" + seg.twist_class + "' has r = " + std::to_string(seg.r) +
                             " here but r = " + std::to_string(it->second) + " elsewhere"});
        }
      }
    }
    auto rep_violations = validate(rep);
    out.insert(out.end(), rep_violations.begin(), rep_violations.end());
  }
  return out;
}

Complex hecke_eigenvalue(const Representation& rep, std::uint64_t p) {
  const auto& local = rep.satake(p);
  const double logp = std::log(static_cast<double>(p));
  Complex sum = 0.0;
  for (const auto& mu : local.mu) sum += std::exp(mu * logp);
  return sum;
}

double laplacian_eigenvalue(const Representation& rep) {
  const double n = rep.rank;
  Complex sq = 0.0;
  for (const auto& mu : rep.archimedean.mu) sq += mu * mu;
  return (n * n * n - n) / 24.0 - 0.5 * sq.real();
}

double total_conductor(const Representation& rep) {
  double m = 0.0;
  for (const auto& mu : rep.archimedean.mu) m = std::max(m, std::abs(mu));
  return static_cast<double>(rep.arith_conductor) * std::pow(1.0 + m, rep.rank);
}

double rs_conductor_cap(const Family& family) {
  double cmax = 0.0;
  for (const auto& rep : family.reps) cmax = std::max(cmax, total_conductor(rep));
  // (C C')^n is monotone in both arguments, so the max over pairs sits at the
  // diagonal of the largest conductor.
  return std::pow(cmax * cmax, family.rank);
}

int sampler_class_order(const std::string& twist_class) {
  if (twist_class == kUnramifiedClass) return 1;
  if (twist_class == "rho2") return 2;
  if (twist_class == "rho3") return 3;
  throw InputError("unknown sampler twist class '" + twist_class + "'");
}

namespace {

Complex imaginary(Rng& rng) { return {0.0, rng.uniform(-2.0, 2.0)}; }

UnramifiedLocal sample_tempered(int n, Rng& rng) {
  UnramifiedLocal local;
  for (int j = 0; j < n; ++j) local.mu.push_back(imaginary(rng));
  return local;
}

UnramifiedLocal sample_floored(int n, double theta, Rng& rng) {
  UnramifiedLocal local;
  const Complex nu{rng.uniform(theta, 0.49), rng.uniform(-2.0, 2.0)};
  local.mu.push_back(nu);
  local.mu.push_back(-std::conj(nu));
  for (int j = 2; j < n; ++j) local.mu.push_back(imaginary(rng));
  return local;
}

RamifiedLocal sample_segments(int n, Rng& rng) {
  static const char* const kClasses[] = {kUnramifiedClass, "rho2", "rho3"};
  RamifiedLocal local;
  if (rng.uniform01() < 0.15) return local;  // all alpha = 0
  int remaining = n;
  while (remaining > 0) {
    const std::string cls = kClasses[rng.uniform_int(0, 2)];
    const int r = sampler_class_order(cls);
    const int L = static_cast<int>(rng.uniform_int(1, std::min(3, remaining)));
    if (remaining >= 2 * L && rng.uniform01() < 0.6) {
      const Complex s{rng.uniform(0.0, 0.45), rng.uniform(-2.0, 2.0)};
      local.segments.push_back({cls, r, L, s});
      local.segments.push_back({cls, r, L, -std::conj(s)});
      remaining -= 2 * L;
    } else {
      local.segments.push_back({cls, r, L, imaginary(rng)});
      remaining -= L;
    }
  }
  return local;
}

}  // namespace

Family sample_family(const SampleOptions& opts) {
  if (opts.n < 2) throw InputError("sample_family: rank n must be >= 2");
  if (opts.size < 1) throw InputError("sample_family: size must be >= 1");
  if (!(opts.theta_floor < 0.49) || !(opts.theta_floor >= 0.0)) {
    throw InputError("sample_family: theta_floor must lie in [0, 0.49) (Re mu < 1/2 cap)");
  }
  std::set<std::uint64_t> floored, ramified(opts.ramified_primes.begin(), opts.ramified_primes.end());
  bool floor_at_infinity = false;
  for (const auto& place : opts.places) {
    if (place.is_infinite()) {
      floor_at_infinity = true;
      continue;
    }
    if (!is_prime(place.p())) throw InputError("sample_family: " + std::to_string(place.p()) + " is not prime");
    if (ramified.contains(place.p())) {
      throw InputError("sample_family: place p=" + std::to_string(place.p()) +
                       " cannot be both floored and ramified");
    }
    floored.insert(place.p());
  }
  for (auto p : ramified) {
    if (!is_prime(p)) throw InputError("sample_family: " + std::to_string(p) + " is not prime");
  }
  std::set<std::uint64_t> tempered;
  for (auto p : opts.tempered_primes) {
    if (!is_prime(p)) throw InputError("sample_family: " + std::to_string(p) + " is not prime");
    if (!floored.contains(p) && !ramified.contains(p)) tempered.insert(p);
  }

  Family family;
  family.rank = opts.n;
  for (int i = 0; i < opts.size; ++i) {
    Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(i)));
    Representation rep;
    rep.id = "pi" + std::to_string(i);
    rep.rank = opts.n;
    rep.archimedean = floor_at_infinity ? sample_floored(opts.n, opts.theta_floor, rng)
                                        : sample_tempered(opts.n, rng);
    for (auto p : floored) rep.finite_places[p] = sample_floored(opts.n, opts.theta_floor, rng);
    for (auto p : tempered) rep.finite_places[p] = sample_tempered(opts.n, rng);
    for (auto p : ramified) {
      rep.finite_places[p] = sample_segments(opts.n, rng);
      rep.arith_conductor *= p * p;
    }
    family.reps.push_back(std::move(rep));
  }
  return family;
}

}  // namespace rsd
