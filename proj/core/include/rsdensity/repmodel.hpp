#pragma once

// Synthetic unitary cuspidal data: local Langlands parameters per place,
// declared conductors, and families of such representations.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace rsd {

using Complex = std::complex<double>;

// Absolute tolerance used when matching parameter multisets.
inline constexpr double kUnitarityTol = 1e-12;

// Identifier of the twist class of the trivial character. Unramified tuples
// are re-encoded into this class when a prime is ramified for one side only.
inline constexpr const char* kUnramifiedClass = "unr";

// Langlands parameters mu_j at one unramified place; at a finite prime p the
// Satake parameters are alpha_j = p^{mu_j}.
struct UnramifiedLocal {
  std::vector<Complex> mu;

  bool operator==(const UnramifiedLocal&) const = default;
};

// One square-integrable constituent Delta(L, rho) of a ramified local
// component: rho lies in the twist class `twist_class` whose stabilizer has
// order r, and s = t + iu collects the Langlands shift and the unitary twist.
struct RamifiedSegment {
  std::string twist_class;
  int r = 1;
  int L = 1;
  Complex s;

  bool operator==(const RamifiedSegment&) const = default;
};

struct RamifiedLocal {
  std::vector<RamifiedSegment> segments;

  bool operator==(const RamifiedLocal&) const = default;
};

using LocalComponent = std::variant<UnramifiedLocal, RamifiedLocal>;

struct Representation {
  std::string id;
  int rank = 2;
  UnramifiedLocal archimedean;
  std::map<std::uint64_t, LocalComponent> finite_places;
  std::uint64_t arith_conductor = 1;

  bool has_place(std::uint64_t p) const { return finite_places.contains(p); }
  bool is_unramified_at(std::uint64_t p) const;
  // Throws InputError if p is missing or ramified.
  const UnramifiedLocal& satake(std::uint64_t p) const;

  bool operator==(const Representation&) const = default;
};

struct Family {
  int rank = 2;
  std::vector<Representation> reps;

  std::size_t size() const { return reps.size(); }
  const Representation& operator[](std::size_t i) const { return reps[i]; }

  bool operator==(const Family&) const = default;
};

// A place of Q: a finite prime or the archimedean place.
class Place {
 public:
  static Place infinity() { return Place(0); }
  static Place prime(std::uint64_t p) { return Place(p); }

  bool is_infinite() const { return p_ == 0; }
  std::uint64_t p() const { return p_; }
  std::string label() const;

  bool operator==(const Place&) const = default;

 private:
  explicit Place(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

struct Violation {
  std::string rep_id;
  std::string place;  // "inf", "p=<prime>", or "family"
  std::string rule;
  std::string detail;
};

std::vector<Violation> validate(const Representation& rep);
// Per-representation checks plus family-level ones: equal rank, distinct ids,
// one r per twist class.
std::vector<Violation> validate(const Family& family);

// True iff the multiset {z} equals {-conj(z)} under greedy nearest matching.
bool is_conjugate_symmetric(std::span<const Complex> mu, double tol = kUnitarityTol);

double max_abs_re(const UnramifiedLocal& local);

// lambda(p) = sum_j p^{mu_j}.
Complex hecke_eigenvalue(const Representation& rep, std::uint64_t p);

// lambda(inf) = (n^3 - n)/24 - (1/2) sum_j mu_j(inf)^2 (real part).
double laplacian_eigenvalue(const Representation& rep);

// Total conductor f * (1 + max_j |mu_j(inf)|)^n.
double total_conductor(const Representation& rep);

// Upper-bound proxy for the Rankin-Selberg conductor of the family:
// max over pairs of (C_pi * C_pi')^n with implied constant 1.
double rs_conductor_cap(const Family& family);

struct SampleOptions {
  int n = 2;
  int size = 1;
  double theta_floor = 0.25;
  // Places where max_j |Re mu_j| >= theta_floor is enforced.
  std::vector<Place> places;
  // Primes that receive segment data instead of a Satake tuple.
  std::vector<std::uint64_t> ramified_primes;
  // Primes that receive purely imaginary (tempered) Satake tuples.
  std::vector<std::uint64_t> tempered_primes;
  std::uint64_t seed = 0;
};

// Deterministic in the options. Each requested place gets one conjugate
// pair (nu, -conj nu) with Re nu ~ U[theta_floor, 0.49], Im nu ~ U[-2, 2] and
// purely imaginary U[-2i, 2i] entries elsewhere; other places are tempered.
Family sample_family(const SampleOptions& opts);

// Order r attached to the sampler's twist classes ("unr" -> 1, "rho2" -> 2,
// "rho3" -> 3).
int sampler_class_order(const std::string& twist_class);

}  // namespace rsd
