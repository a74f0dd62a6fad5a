#include "rsdensity/ranksel.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rsdensity/error.hpp"
#include "rsdensity/primes.hpp"

namespace rsd {

namespace {

std::string where(std::uint64_t p) { return "p=" + std::to_string(p); }

void require_truncation(int K) {
  if (K < 1) throw InputError("truncation K must be >= 1");
}

std::vector<Complex> power_sums(const UnramifiedLocal& local, std::uint64_t p, int K) {
  const double logp = std::log(static_cast<double>(p));
  std::vector<Complex> out(static_cast<std::size_t>(K) + 1, 0.0);
  for (int q = 1; q <= K; ++q)
    for (const auto& mu : local.mu) out[static_cast<std::size_t>(q)] += std::exp(static_cast<double>(q) * mu * logp);
  return out;
}

// Evaluates a(m) for one pair, caching local factors by prime.
class PairCoefficients {
 public:
  PairCoefficients(const Representation& a, const Representation& b, int K) : a_(a), b_(b), K_(K) {}

  Complex operator()(std::uint64_t m) {
    if (m == 0) throw InputError("Dirichlet index m must be positive");
    Complex value = 1.0;
    for (const auto& [p, k] : factorize(m)) {
      if (k > K_) {
        throw InputError("exponent " + std::to_string(k) + " of p=" + std::to_string(p) +
                         " exceeds truncation K=" + std::to_string(K_));
      }
      auto it = cache_.find(p);
      if (it == cache_.end()) it = cache_.emplace(p, rs_local_series(RSPair{a_, b_}, p, K_)).first;
      value *= it->second[k];
    }
    return value;
  }

 private:
  const Representation& a_;
  const Representation& b_;
  int K_;
  std::map<std::uint64_t, LocalSeries> cache_;
};

}  // namespace

LocalSeries rs_log_local_unramified(const RSPair& pair, std::uint64_t p, int K) {
  require_truncation(K);
  if (!pair.a.is_unramified_at(p) || !pair.b.is_unramified_at(p)) {
    throw InputError("p=" + std::to_string(p) +
                     " is ramified or missing for the pair; use rs_log_local_ramified");
  }
  const auto pa = power_sums(pair.a.satake(p), p, K);
  const auto pb = power_sums(pair.b.satake(p), p, K);
  auto out = LocalSeries::zero(p, K);
  for (int q = 1; q <= K; ++q) {
    const auto idx = static_cast<std::size_t>(q);
    out[q] = pa[idx] * std::conj(pb[idx]) / static_cast<double>(q);
  }
  return out;
}

LocalSeries rs_log_local_ramified(const std::vector<RamifiedSegment>& segs_a,
                                  const std::vector<RamifiedSegment>& segs_b, std::uint64_t p, int K) {
  require_truncation(K);
  const double logp = std::log(static_cast<double>(p));
  auto out = LocalSeries::zero(p, K);

  std::set<std::string> classes;
  for (const auto& s : segs_a) classes.insert(s.twist_class);

  for (const auto& cls : classes) {
    std::vector<const RamifiedSegment*> in_a, in_b;
    for (const auto& s : segs_a)
      if (s.twist_class == cls) in_a.push_back(&s);
    for (const auto& s : segs_b)
      if (s.twist_class == cls) in_b.push_back(&s);
    if (in_b.empty()) continue;

    const int r = in_a.front()->r;
    auto consistent = [r](const RamifiedSegment* s) { return s->r == r && s->L >= 1; };
    if (r < 1 || !std::all_of(in_a.begin(), in_a.end(), consistent) ||
        !std::all_of(in_b.begin(), in_b.end(), consistent)) {
      throw InputError("inconsistent segment data in twist class '" + cls + "' at " + where(p));
    }

    auto max_len = [](const std::vector<const RamifiedSegment*>& v) {
      int m = 0;
      for (const auto* s : v) m = std::max(m, s->L);
      return m;
    };
    const int ell_max = std::min(max_len(in_a), max_len(in_b));

    auto side_sum = [&](const std::vector<const RamifiedSegment*>& v, int ell, int q) {
      Complex acc = 0.0;
      const double qr = static_cast<double>(q) * r;
      for (const auto* s : v) {
        if (s->L < ell) continue;
        acc += std::exp(-qr * (s->s + 0.5 * (s->L - ell)) * logp);
      }
      return acc;
    };

    for (int ell = 1; ell <= ell_max; ++ell) {
      for (int q = 1; q * r <= K; ++q) {
        const Complex A = side_sum(in_a, ell, q);
        const Complex B = side_sum(in_b, ell, q);
        out[q * r] += A * std::conj(B) / static_cast<double>(q);
      }
    }
  }
  return out;
}

std::vector<RamifiedSegment> local_segments(const Representation& rep, std::uint64_t p) {
  auto it = rep.finite_places.find(p);
  if (it == rep.finite_places.end()) {
    throw InputError("representation '" + rep.id + "' has no local data at " + where(p));
  }
  if (const auto* ram = std::get_if<RamifiedLocal>(&it->second)) return ram->segments;
  std::vector<RamifiedSegment> out;
  for (const auto& mu : std::get<UnramifiedLocal>(it->second).mu) out.push_back({kUnramifiedClass, 1, 1, -mu});
  return out;
}

LocalSeries rs_log_local(const RSPair& pair, std::uint64_t p, int K) {
  if (pair.a.is_unramified_at(p) && pair.b.is_unramified_at(p)) return rs_log_local_unramified(pair, p, K);
  return rs_log_local_ramified(local_segments(pair.a, p), local_segments(pair.b, p), p, K);
}

LocalSeries rs_local_series(const RSPair& pair, std::uint64_t p, int K) {
  return exp_series(rs_log_local(pair, p, K));
}

Complex rs_coefficient(const RSPair& pair, std::uint64_t m, int K) {
  require_truncation(K);
  return PairCoefficients(pair.a, pair.b, K)(m);
}

CoeffMatrix rs_matrix(const Family& family, std::uint64_t m, int K) {
  require_truncation(K);
  const auto F = family.size();
  CoeffMatrix out{m, ComplexMatrix(F)};
  for (std::size_t i = 0; i < F; ++i)
    for (std::size_t j = 0; j < F; ++j) out.entries(i, j) = rs_coefficient(RSPair{family[i], family[j]}, m, K);
  return out;
}

FamilySeries rs_family_series(const Family& family, std::uint64_t p, int K) {
  require_truncation(K);
  std::vector<LocalSeries> grid;
  grid.reserve(family.size() * family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) grid.push_back(rs_local_series(RSPair{family[i], family[j]}, p, K));
  return FamilySeries(family.size(), std::move(grid));
}

bool LowerBoundResult::holds() const { return slack >= -1e-9 * std::max(1.0, std::abs(lhs)); }

LowerBoundResult explicit_lower_bound(const Family& family, const std::vector<Complex>& w, std::uint64_t p, int k,
                                      int K) {
  if (w.size() != family.size()) {
    throw InputError("weight vector has " + std::to_string(w.size()) + " entries, family has " +
                     std::to_string(family.size()));
  }
  if (k < 1 || k > K) {
    throw InputError("k must lie in [1, K=" + std::to_string(K) + "], got " + std::to_string(k));
  }
  for (const auto& rep : family.reps) {
    if (!rep.is_unramified_at(p)) {
      throw InputError("explicit lower bound needs p unramified; '" + rep.id + "' is ramified or missing at " +
                       where(p));
    }
  }
  const auto series = rs_family_series(family, p, K);
  Complex lhs = 0.0;
  Complex inner = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) lhs += w[i] * std::conj(w[j]) * series.at(i, j)[k];
    inner += w[i] * power_sums(family[i].satake(p), p, k)[static_cast<std::size_t>(k)];
  }
  LowerBoundResult r;
  r.lhs = lhs.real();
  r.lhs_imag = lhs.imag();
  r.rhs = std::norm(inner) / static_cast<double>(k);
  r.slack = r.lhs - r.rhs;
  return r;
}

TripleSumResult rs_triple_sum(const Family& family, const ComplexMatrix& w, const std::map<std::uint64_t, Complex>& u,
                              const std::vector<Complex>& beta, double M, int K) {
  const auto F = family.size();
  if (w.size() != F) throw InputError("weight matrix must be " + std::to_string(F) + "x" + std::to_string(F));
  if (beta.size() != F) throw InputError("beta must have one entry per family member");
  if (!(M > 0.0)) throw InputError("M must be positive");

  TripleSumResult out;
  for (std::size_t i = 0; i < F; ++i) {
    for (std::size_t j = 0; j < F; ++j) {
      if (w(i, j) == Complex(0.0)) continue;
      PairCoefficients coeff(family[i], family[j], K);
      const Complex shift = beta[i] + std::conj(beta[j]);
      Complex inner = 0.0;
      for (const auto& [m, um] : u) {
        if (um == Complex(0.0)) continue;
        inner += um * coeff(m) * std::exp(shift * std::log(M / static_cast<double>(m)));
      }
      out.value += w(i, j) * inner;
    }
  }

  double w_inf = 0.0, u_inf = 0.0;
  for (const auto& z : w.data()) w_inf = std::max(w_inf, std::abs(z));
  for (const auto& [m, um] : u) u_inf = std::max(u_inf, std::abs(um));
  const double f = static_cast<double>(F);
  const double cap = rs_conductor_cap(family);
  out.reference_bound = w_inf * f * f * u_inf * M * (1.0 / f + 1.0 / (1.0 + M / std::sqrt(cap)));
  return out;
}

}  // namespace rsd
