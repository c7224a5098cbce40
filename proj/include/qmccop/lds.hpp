#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qmccop/common.hpp"
#include "qmccop/rng.hpp"

namespace qmccop::lds {

enum class SequenceKind { Halton, GeneralizedHalton, Sobol, PseudoRandom };
enum class RandomizationKind { None, Shift, DigitalShift };

// Direction-number record for one Sobol dimension: primitive polynomial
// degree, inner coefficient bits, and the initial m values.
struct SobolDirectionRow {
  int degree = 0;
  unsigned poly = 0;
  std::vector<unsigned> m;
};

int embedded_sobol_dimensions();
int embedded_ghalton_dimensions();
SobolDirectionRow embedded_sobol_row(int dim);   // dim >= 1
int embedded_ghalton_factor(int dim);            // dim >= 1

// Parse the "d s a m_i" plain-text direction-number format (one line per
// dimension, dimension 1 implicit). Returns rows for dimensions 1..maxdim.
std::vector<SobolDirectionRow> load_sobol_table(std::istream& in);
// Parse "base factor" lines, one per dimension.
std::vector<int> load_ghalton_factors(std::istream& in);

std::vector<int> first_primes(int k);

struct SequenceSpec {
  SequenceKind kind = SequenceKind::Halton;
  int dimension = 1;
  std::vector<int> bases;            // Halton variants; default = first k primes
  std::vector<int> scrambleFactors;  // GeneralizedHalton; factor_j in {1,...,b_j-1}
  std::uint64_t seed = 0;            // PseudoRandom

  static SequenceSpec halton(int k);
  static SequenceSpec generalized_halton(int k);
  static SequenceSpec sobol(int k);
  static SequenceSpec pseudorandom(int k, std::uint64_t seed);

  void validate() const;
  bool is_deterministic() const { return kind != SequenceKind::PseudoRandom; }
};

struct PointSet {
  int n = 0;
  int k = 0;
  std::vector<double> pts;  // row-major, n x k, all coordinates in [0,1)
  SequenceSpec spec;
  std::uint64_t startIndex = 1;
  RandomizationKind randomization = RandomizationKind::None;

  double operator()(int i, int j) const { return pts[static_cast<std::size_t>(i) * k + j]; }
  const double* row(int i) const { return pts.data() + static_cast<std::size_t>(i) * k; }
};

struct Randomizer {
  RandomizationKind kind = RandomizationKind::DigitalShift;
  std::uint64_t seed = 0;
  int base = 0;  // 0 = natural base of the sequence (2 for Sobol, b_j for Halton)
};

// radical inverse of the base-b expansion of i-1 (van der Corput)
double radical_inverse(std::uint64_t i, int b);
// digits multiplied by `factor` mod b before inversion
double scrambled_radical_inverse(std::uint64_t i, int b, int factor);

// Points startIndex ... startIndex+n-1 of the sequence; pure function of
// its arguments, bit-identical across repeated calls.
PointSet generate(const SequenceSpec& spec, int n, std::uint64_t startIndex = 1);

PointSet cranley_patterson_shift(const PointSet& p, const std::vector<double>& offset);

// coordinate-wise digit-wise addition mod `base`, truncated to `digits`
// base-b digits; base 2 with the same shift twice is the identity
PointSet digital_shift(const PointSet& p, const std::vector<double>& shift, int base, int digits);

// exact digit budget so digit arithmetic stays exact in a double
int digits_for_base(int base);

// B independently randomized copies of the deterministic point set (for
// PseudoRandom specs: B independent seeded draws). Deterministic in
// (randomizer.seed, replicate index).
std::vector<PointSet> randomized_replicates(const SequenceSpec& spec, int n, int B,
                                            const Randomizer& r, std::uint64_t startIndex = 1);

// headerless CSV export, one point per row, round-trip double formatting
void write_csv(std::ostream& os, const PointSet& p);

}  // namespace qmccop::lds
