#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpi/approx.hpp"
#include "qpi/degree.hpp"
#include "qpi/exact.hpp"
#include "qpi/frac.hpp"
#include "qpi/lattice.hpp"
#include "qpi/report.hpp"

namespace qpi {

enum class Kind { kTerminating, kNonterminating, kLimitCompanion };
std::string to_string(Kind k);

// How a record's free symbols are chosen when it is verified.
enum class ParamDomain {
  kFixed,      // fully specialized
  kLambda,     // one lattice exponent λ
  kFreeABC,    // Pfaff–Saalschütz: a, b, c
  kFreeABD,    // q-Dougall: a, b, d
  kFreeACE,    // a, c, e
};

// A parameter is either a lattice exponent x (meaning q^x) or an explicit
// exact scalar.
using Param = std::variant<Frac, ExactScalar>;

struct ParamSet {
  std::optional<Param> a, b, c, d, e;
  Frac lambda;
  long n = 0;

  std::string str() const;
};

template <class S>
S resolve(Lattice<S>& ctx, const Param& p) {
  if (const Frac* e = std::get_if<Frac>(&p)) return ctx.pow(*e);
  return ctx.value(std::get<ExactScalar>(p));
}

template <class S>
struct Sides {
  S lhs;
  S rhs;
};

// Expression over {π, √2, √3, √π, Γ(1/4), Γ(3/4), Γ(1/3)} with a rational
// coefficient: coeff · Π symbol^power.
struct ConstantTarget {
  Frac coeff = 1;
  int pi = 0;
  int sqrt2 = 0;
  int sqrt3 = 0;
  int sqrt_pi = 0;
  int gamma_1_4 = 0;
  int gamma_3_4 = 0;
  int gamma_1_3 = 0;
  std::string display;
};

// Σ_k Π(top_i)_k / Π(bottom_j)_k · z^k · w(k), w(k) = Σ weight[i] k^i.
struct ClassicalSeries {
  std::vector<Frac> top;
  std::vector<Frac> bottom;
  Frac z;
  std::vector<std::int64_t> weight;
};

using ExactSides = std::function<Sides<ExactScalar>(Lattice<ExactScalar>&, const ParamSet&)>;
using DegreeSides =
    std::function<Sides<DegreeTracker>(Lattice<DegreeTracker>&, const ParamSet&)>;
using ApproxSide = std::function<ApproxScalar(Lattice<ApproxScalar>&, const ParamSet&)>;
using ExactTerm = std::function<ExactScalar(Lattice<ExactScalar>&, const ParamSet&, long)>;
using ApproxTerm =
    std::function<ApproxScalar(Lattice<ApproxScalar>&, const ParamSet&, long)>;

struct IdentityRecord {
  std::string id;
  Kind kind = Kind::kNonterminating;
  int lattice = 1;
  ParamDomain domain = ParamDomain::kFixed;
  // λ values exercised for kLambda records (multiples of 1/lattice).
  std::vector<Frac> lambdas;
  std::string description;

  // Terminating records: both sides as rational functions.
  ExactSides exact;
  DegreeSides degree;

  // Nonterminating records: closed-form side and k-th series term.
  ApproxSide lhs;
  ApproxTerm term;
  // Same term in exact arithmetic, where every factor is rational in p.
  ExactTerm exact_term;

  std::optional<ConstantTarget> target;
  std::optional<ClassicalSeries> classical;
  // scale · (q-series value) → classical constant as q → 1⁻.
  Frac limit_scale = 1;
};

const std::vector<IdentityRecord>& catalog();
// Throws UsageError for an unknown id.
const IdentityRecord& find_record(std::string_view id);
// "fixed", "lambda in {...}" or the free symbols.
std::string domain_summary(const IdentityRecord& r);
// One block per record: id, kind, lattice, parameters, classical target.
std::string export_catalog();

// ---- verification -----------------------------------------------------

struct VerifyConfig {
  ExactScalar p = ExactScalar(Frac(9, 10));
  int digits = 40;
  long n_max = 16;
  int trials = 3;
  std::uint64_t seed = 1;
  long max_terms = 200000;
  // Exact-mode lattice root; drawn at random when unset.
  bool random_exact_point = true;
};

// Exact Pfaff–Saalschütz check at one point and depth.
VerificationReport check_pfaff_saalschutz(long n, const ExactScalar& a, const ExactScalar& b,
                                          const ExactScalar& c, const ExactScalar& q);

// Exact check of a terminating record for n = 0..n_max at one point.  On
// mismatch the report names the offending n and point.
VerificationReport check_terminating(const IdentityRecord& rec, const ParamSet& params,
                                     const ExactScalar& p, long n_max);

// Sides of a terminating record at one (params, n) point.
Sides<ExactScalar> terminating_sides(const IdentityRecord& rec, const ParamSet& params,
                                     const ExactScalar& p);

struct DegreeCertificate {
  long degree_bound = 0;
  int points_checked = 0;
  bool certified = false;
};
// Computes the degree bound of LHS-RHS in the lattice root p and checks exact
// equality at degree_bound + 1 distinct rational points.  Parameters must be
// lattice exponents (explicit scalars count as constants).
DegreeCertificate certify_terminating(const IdentityRecord& rec, const ParamSet& params,
                                      std::uint64_t seed);

ApproxScalar eval_theorem_lhs(const IdentityRecord& rec, const ParamSet& params,
                              const ApproxScalar& p, int digits);
// Series side with certified truncation; terms used returned via `terms`.
ApproxScalar eval_theorem_rhs(const IdentityRecord& rec, const ParamSet& params,
                              const ApproxScalar& p, int digits, long* terms = nullptr,
                              long max_terms = 200000);

// Certified comparison of both sides of a nonterminating record at lattice
// root p.
VerificationReport check_nonterminating(const IdentityRecord& rec, const ParamSet& params,
                                        const ExactScalar& p, int digits,
                                        long max_terms = 200000);
VerificationReport verify_example(std::string_view id, const ExactScalar& p, int digits);

// One report per selected record (all records when `ids` is empty), in
// catalog order.  Records are verified concurrently.
std::vector<VerificationReport> verify_records(const std::vector<std::string>& ids,
                                               const VerifyConfig& cfg);
std::vector<VerificationReport> verify_all(const VerifyConfig& cfg);

// Depth-n value of PP-A/B/C against the matching theorem's infinite
// product, rescaled by the factor that separates the two left members.
// Parameters are evaluated at lattice 1 (q = p).  Passes when the two agree
// within `tol`.
VerificationReport check_reciprocal_limit(const IdentityRecord& rec, const ParamSet& params,
                                          const ExactScalar& p, long n, int digits,
                                          const Bound& tol);

// Random parameter draws honoring the record's domain.
ParamSet draw_params(const IdentityRecord& rec, std::uint64_t seed);

}  // namespace qpi
