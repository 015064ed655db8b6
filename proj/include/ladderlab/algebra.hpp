// Multiplicative algebra of energies.  Every law reduces to exponent
// arithmetic on the index differences q - p over a chosen generator with
// P != Q: a record (p,q) is predicted as gen^((q-p)/(Q-P)), products add
// exponents subject to the closure constraint
//
//     -k+1 <= q1 + q2 - (p1 + p2) <= k-1,
//
// unit records (p = q) play the role of asymptotic units, swapped index
// pairs are mutual inverses, and the mean-value factorization reproduces
// each record's value from a single witness point per iteration level.
// The exponent layer is exact integer arithmetic; the value layer is
// asymptotic and reported as banded residuals.
#pragma once

#include <string>
#include <vector>

#include "ladderlab/energy.hpp"
#include "ladderlab/ladder.hpp"

namespace ladderlab {

struct ExponentIndex {
  int p = 0;
  int q = 0;
  int exponent() const { return q - p; }
};

// Exact rational exponent (num/den), den = Q - P of the generator.
struct ExponentRatio {
  int num = 0;
  int den = 1;
  double real() const { return double(num) / double(den); }
};

// (q - p) / (Q - P): the generator-law exponent for one record.
ExponentRatio generator_exponent(int p, int q, int P, int Q);

// (q1 + q2 - p1 - p2) / (Q - P): the product-law exponent.
ExponentRatio product_exponent(int p1, int q1, int p2, int q2, int P, int Q);

// Closure constraint: -k+1 <= q1+q2-(p1+p2) <= k-1.
bool closure_ok(int p1, int q1, int p2, int q2, int k);

enum class AlgebraLaw { generator, product, unit, inverse, equivalence,
                        factorization };
const char* law_name(AlgebraLaw law);

struct AlgebraReport {
  AlgebraLaw law = AlgebraLaw::generator;
  std::vector<EnergyRecord> inputs;  // the records the check cites
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;        // |lhs/rhs - 1|
  double exponent = 0.0;        // rational exponent used (0 when n/a)
  bool closure_ok = true;       // closure verdict against the requested k
  bool closure_ok_k0 = true;    // fallback verdict against k0
  // factorization only: |lhs / rec.value - 1| (mean-value exactness)
  double mean_exact_rel = 0.0;
};

// Generator law: rec.value vs gen.value^((q-p)/(Q-P)).
// Throws std::invalid_argument when gen has P == Q.
AlgebraReport generator_check(const EnergyRecord& rec,
                              const EnergyRecord& gen);

// Product law: rec1.value * rec2.value vs gen.value^((q1+q2-p1-p2)/(Q-P)),
// with closure verdicts against k and the fallback k0.
AlgebraReport product_check(const EnergyRecord& rec1, const EnergyRecord& rec2,
                            const EnergyRecord& gen, int k, int k0);

// Unit records (p = q): one `unit` report per record (value vs 1) followed
// by one `equivalence` report per pair.  Throws std::invalid_argument if a
// record has p != q.
std::vector<AlgebraReport> unit_check(const std::vector<EnergyRecord>& records);

// Inverse law: indices must be swapped exactly ((p,q) vs (q,p)); product of
// values vs 1.
AlgebraReport inverse_check(const EnergyRecord& rec, const EnergyRecord& inv);

// Mean-value factorization: lhs rebuilt from mean_value_points of rec,
// rhs from those of gen raised to the generator exponent.  mean_exact_rel
// records how well lhs reproduces rec.value.
AlgebraReport factorization_check(const Ladder& ladder, const EnergyRecord& rec,
                                  const EnergyRecord& gen);

// Separation audit for two unit records: value = gap between their
// segments, predicted = (1-c) T / ln T; used by the verify suite.
double unit_separation_ratio(const EnergyRecord& a, const EnergyRecord& b,
                             double c = kDefaultC);

}  // namespace ladderlab
