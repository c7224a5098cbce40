#include "qmccop/lds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "qmccop/csv.hpp"

namespace qmccop::lds {

namespace {

constexpr int kSobolBits = 52;
constexpr double kInvPow52 = 0x1.0p-52;

int gcd_int(int a, int b) { return std::gcd(a, b); }

}  // namespace

std::vector<int> first_primes(int k) {
  std::vector<int> out;
  out.reserve(k);
  for (int c = 2; static_cast<int>(out.size()) < k; ++c) {
    bool prime = true;
    for (int q : out) {
      if (q * q > c) break;
      if (c % q == 0) { prime = false; break; }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

std::vector<SobolDirectionRow> load_sobol_table(std::istream& in) {
  std::vector<SobolDirectionRow> rows;
  rows.push_back(SobolDirectionRow{0, 0, {}});  // dimension 1, identity matrix
  std::string line;
  bool header_skipped = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header_skipped && line.find("m_i") != std::string::npos) { header_skipped = true; continue; }
    std::istringstream ls(line);
    int d, s;
    unsigned a;
    if (!(ls >> d >> s >> a)) throw ConfigError("sobol table: malformed line: " + line);
    SobolDirectionRow r;
    r.degree = s;
    r.poly = a;
    unsigned m;
    while (ls >> m) r.m.push_back(m);
    if (static_cast<int>(r.m.size()) != s)
      throw ConfigError("sobol table: dimension " + std::to_string(d) + " expects " +
                        std::to_string(s) + " initial values");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<int> load_ghalton_factors(std::istream& in) {
  std::vector<int> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int base, factor;
    if (!(ls >> base >> factor)) throw ConfigError("ghalton factors: malformed line: " + line);
    if (factor < 1 || factor >= base || gcd_int(factor, base) != 1)
      throw ConfigError("ghalton factors: factor " + std::to_string(factor) +
                        " invalid for base " + std::to_string(base));
    out.push_back(factor);
  }
  return out;
}

// ---------------------------------------------------------------------------
// SequenceSpec

SequenceSpec SequenceSpec::halton(int k) {
  SequenceSpec s;
  s.kind = SequenceKind::Halton;
  s.dimension = k;
  s.bases = first_primes(k);
  s.validate();
  return s;
}

SequenceSpec SequenceSpec::generalized_halton(int k) {
  SequenceSpec s;
  s.kind = SequenceKind::GeneralizedHalton;
  s.dimension = k;
  s.bases = first_primes(k);
  s.scrambleFactors.resize(k);
  for (int j = 0; j < k; ++j) {
    if (j < embedded_ghalton_dimensions()) {
      s.scrambleFactors[j] = embedded_ghalton_factor(j + 1);
    } else {
      s.scrambleFactors[j] = 1;
      std::cerr << "qmccop: no scramble factor for dimension " << j + 1
                << ", falling back to plain Halton in base " << s.bases[j] << "\n";
    }
  }
  s.validate();
  return s;
}

SequenceSpec SequenceSpec::sobol(int k) {
  SequenceSpec s;
  s.kind = SequenceKind::Sobol;
  s.dimension = k;
  s.validate();
  return s;
}

SequenceSpec SequenceSpec::pseudorandom(int k, std::uint64_t seed) {
  SequenceSpec s;
  s.kind = SequenceKind::PseudoRandom;
  s.dimension = k;
  s.seed = seed;
  return s;
}

void SequenceSpec::validate() const {
  if (dimension < 1) throw ConfigError("sequence: dimension must be >= 1");
  if (kind == SequenceKind::Halton || kind == SequenceKind::GeneralizedHalton) {
    if (static_cast<int>(bases.size()) != dimension)
      throw ConfigError("sequence: need one base per dimension");
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (bases[i] < 2) throw ConfigError("sequence: base must be >= 2");
      for (std::size_t j = 0; j < i; ++j)
        if (gcd_int(bases[i], bases[j]) != 1)
          throw ConfigError("sequence: bases must be pairwise relatively prime");
    }
  }
  if (kind == SequenceKind::GeneralizedHalton) {
    if (scrambleFactors.size() != bases.size())
      throw ConfigError("sequence: need one scramble factor per dimension");
    for (std::size_t j = 0; j < bases.size(); ++j) {
      int f = scrambleFactors[j];
      if (f < 1 || f >= bases[j] || gcd_int(f, bases[j]) != 1)
        throw ConfigError("sequence: scramble factor must be in [1,b-1] and coprime to the base");
    }
  }
  if (kind == SequenceKind::Sobol && dimension > embedded_sobol_dimensions())
    throw ConfigError("sequence: only " + std::to_string(embedded_sobol_dimensions()) +
                      " Sobol dimensions available in the direction-number table");
}

// ---------------------------------------------------------------------------
// radical inverses

namespace {

// evaluate sum_r d_r b^{-r-1} from the last digit inward, which keeps the
// result within an ulp of the exact rational value
double digits_to_unit(const int* d, int count, int b) {
  double x = 0.0;
  for (int r = count - 1; r >= 0; --r) x = (x + d[r]) / b;
  return x;
}

}  // namespace

double radical_inverse(std::uint64_t i, int b) {
  if (b < 2) throw std::invalid_argument("radical_inverse: base must be >= 2");
  if (i < 1) throw std::invalid_argument("radical_inverse: index must be >= 1");
  std::uint64_t n = i - 1;
  int d[64], count = 0;
  while (n > 0) {
    d[count++] = static_cast<int>(n % b);
    n /= b;
  }
  return digits_to_unit(d, count, b);
}

double scrambled_radical_inverse(std::uint64_t i, int b, int factor) {
  if (b < 2) throw std::invalid_argument("scrambled_radical_inverse: base must be >= 2");
  if (i < 1) throw std::invalid_argument("scrambled_radical_inverse: index must be >= 1");
  if (factor < 1 || factor >= b || gcd_int(factor, b) != 1)
    throw std::invalid_argument("scrambled_radical_inverse: factor must be coprime to the base");
  std::uint64_t n = i - 1;
  int d[64], count = 0;
  while (n > 0) {
    d[count++] = static_cast<int>(n % b * static_cast<std::uint64_t>(factor) % b);
    n /= b;
  }
  return digits_to_unit(d, count, b);
}

// ---------------------------------------------------------------------------
// Sobol generation (base-2 digital construction, Gray code ordering)

namespace {

// direction integers scaled to 52 fractional bits, one column per bit
std::vector<std::uint64_t> sobol_direction_integers(int dim) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(dim) * kSobolBits);
  for (int j = 0; j < dim; ++j) {
    SobolDirectionRow row = embedded_sobol_row(j + 1);
    std::vector<std::uint64_t> m(kSobolBits);
    if (row.degree == 0) {
      for (int k = 0; k < kSobolBits; ++k) m[k] = 1;  // first dimension: identity
    } else {
      const int s = row.degree;
      for (int k = 0; k < s && k < kSobolBits; ++k) m[k] = row.m[k];
      for (int k = s; k < kSobolBits; ++k) {
        std::uint64_t mk = m[k - s] ^ (m[k - s] << s);
        for (int t = 1; t < s; ++t)
          if ((row.poly >> (s - 1 - t)) & 1u) mk ^= m[k - t] << t;
        m[k] = mk;
      }
    }
    for (int k = 0; k < kSobolBits; ++k)
      v[static_cast<std::size_t>(j) * kSobolBits + k] = m[k] << (kSobolBits - 1 - k);
  }
  return v;
}

void sobol_fill(const SequenceSpec& spec, int n, std::uint64_t startIndex, double* out) {
  const int k = spec.dimension;
  const std::vector<std::uint64_t> v = sobol_direction_integers(k);
  std::vector<std::uint64_t> x(k, 0);

  // state for point `startIndex`: XOR of direction integers on the set
  // bits of gray(startIndex-1)
  std::uint64_t g = (startIndex - 1) ^ ((startIndex - 1) >> 1);
  for (int bit = 0; bit < kSobolBits && (g >> bit); ++bit)
    if ((g >> bit) & 1ULL)
      for (int j = 0; j < k; ++j) x[j] ^= v[static_cast<std::size_t>(j) * kSobolBits + bit];

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(i) * k + j] =
        static_cast<double>(x[j]) * kInvPow52;
    // advance: gray(i) differs from gray(i-1) in bit ctz(i)
    std::uint64_t idx = startIndex + static_cast<std::uint64_t>(i);
    int bit = std::countr_zero(idx);
    if (bit < kSobolBits)
      for (int j = 0; j < k; ++j) x[j] ^= v[static_cast<std::size_t>(j) * kSobolBits + bit];
  }
}

}  // namespace

PointSet generate(const SequenceSpec& spec, int n, std::uint64_t startIndex) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  if (startIndex < 1) throw std::invalid_argument("generate: startIndex must be >= 1");
  spec.validate();

  PointSet p;
  p.n = n;
  p.k = spec.dimension;
  p.spec = spec;
  p.startIndex = startIndex;
  p.pts.resize(static_cast<std::size_t>(n) * p.k);

  switch (spec.kind) {
    case SequenceKind::Halton:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < p.k; ++j)
          p.pts[static_cast<std::size_t>(i) * p.k + j] =
              radical_inverse(startIndex + i, spec.bases[j]);
      break;
    case SequenceKind::GeneralizedHalton:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < p.k; ++j)
          p.pts[static_cast<std::size_t>(i) * p.k + j] = scrambled_radical_inverse(
              startIndex + i, spec.bases[j], spec.scrambleFactors[j]);
      break;
    case SequenceKind::Sobol:
      sobol_fill(spec, n, startIndex, p.pts.data());
      break;
    case SequenceKind::PseudoRandom: {
      SplitMix64 g(spec.seed);
      for (auto& x : p.pts) x = g.next_double();
      break;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// randomizations

PointSet cranley_patterson_shift(const PointSet& p, const std::vector<double>& offset) {
  if (static_cast<int>(offset.size()) != p.k)
    throw std::invalid_argument("cranley_patterson_shift: offset length must equal dimension");
  PointSet out = p;
  out.randomization = RandomizationKind::Shift;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.k; ++j) {
      double x = p(i, j) + offset[j];
      x -= std::floor(x);
      if (x >= 1.0) x = 0.0;  // guard against rounding up to 1
      out.pts[static_cast<std::size_t>(i) * p.k + j] = x;
    }
  return out;
}

int digits_for_base(int base) {
  if (base == 2) return 52;
  return static_cast<int>(std::floor(52.0 / std::log2(static_cast<double>(base))));
}

namespace {

// digit-wise u (+) v mod base, truncating both to m digits
double digital_add(double u, double v, int base, int m) {
  double scale = 1.0;
  double x = 0.0;
  double uu = u, vv = v;
  for (int r = 0; r < m; ++r) {
    uu *= base;
    vv *= base;
    int du = static_cast<int>(uu);
    int dv = static_cast<int>(vv);
    uu -= du;
    vv -= dv;
    scale /= base;
    x += static_cast<double>((du + dv) % base) * scale;
  }
  return x;
}

}  // namespace

PointSet digital_shift(const PointSet& p, const std::vector<double>& shift, int base, int digits) {
  if (static_cast<int>(shift.size()) != p.k)
    throw std::invalid_argument("digital_shift: shift length must equal dimension");
  if (base < 2) throw std::invalid_argument("digital_shift: base must be >= 2");
  if (digits <= 0) throw std::invalid_argument("digital_shift: digit precision must be > 0");
  PointSet out = p;
  out.randomization = RandomizationKind::DigitalShift;
  if (base == 2 && digits == 52) {
    // exact via 52-bit integers: addition mod 2 is XOR
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.k; ++j) {
        std::uint64_t a = static_cast<std::uint64_t>(p(i, j) * 0x1.0p52);
        std::uint64_t b = static_cast<std::uint64_t>(shift[j] * 0x1.0p52);
        out.pts[static_cast<std::size_t>(i) * p.k + j] = static_cast<double>(a ^ b) * kInvPow52;
      }
    return out;
  }
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.k; ++j)
      out.pts[static_cast<std::size_t>(i) * p.k + j] = digital_add(p(i, j), shift[j], base, digits);
  return out;
}

namespace {

// digital shift where each coordinate uses its own base (Halton variants)
PointSet digital_shift_per_base(const PointSet& p, const std::vector<double>& shift,
                                const std::vector<int>& bases) {
  PointSet out = p;
  out.randomization = RandomizationKind::DigitalShift;
  for (int j = 0; j < p.k; ++j) {
    int b = bases[j];
    int m = digits_for_base(b);
    if (b == 2 && m == 52) {
      for (int i = 0; i < p.n; ++i) {
        std::uint64_t a = static_cast<std::uint64_t>(p(i, j) * 0x1.0p52);
        std::uint64_t s = static_cast<std::uint64_t>(shift[j] * 0x1.0p52);
        out.pts[static_cast<std::size_t>(i) * p.k + j] = static_cast<double>(a ^ s) * kInvPow52;
      }
    } else {
      for (int i = 0; i < p.n; ++i)
        out.pts[static_cast<std::size_t>(i) * p.k + j] = digital_add(p(i, j), shift[j], b, m);
    }
  }
  return out;
}

}  // namespace

std::vector<PointSet> randomized_replicates(const SequenceSpec& spec, int n, int B,
                                            const Randomizer& r, std::uint64_t startIndex) {
  if (B < 1) throw std::invalid_argument("randomized_replicates: B must be >= 1");
  std::vector<PointSet> out;
  out.reserve(B);

  if (spec.kind == SequenceKind::PseudoRandom) {
    for (int rep = 0; rep < B; ++rep) {
      SequenceSpec s = spec;
      s.seed = derive_seed(r.seed != 0 ? r.seed : spec.seed, static_cast<std::uint64_t>(n), rep);
      out.push_back(generate(s, n, 1));
    }
    return out;
  }

  PointSet base = generate(spec, n, startIndex);
  std::vector<int> bases;
  if (spec.kind == SequenceKind::Sobol) bases.assign(spec.dimension, 2);
  else bases = spec.bases;

  for (int rep = 0; rep < B; ++rep) {
    if (r.kind == RandomizationKind::None) {
      out.push_back(base);
      continue;
    }
    SplitMix64 g(derive_seed(r.seed, static_cast<std::uint64_t>(n), rep));
    std::vector<double> shift(spec.dimension);
    if (r.kind == RandomizationKind::Shift) {
      for (auto& s : shift) s = g.next_double();
      out.push_back(cranley_patterson_shift(base, shift));
    } else {
      // draw exact m-digit shifts in each coordinate's base
      for (int j = 0; j < spec.dimension; ++j) {
        int b = r.base > 0 ? r.base : bases[j];
        int m = digits_for_base(b);
        double f = 1.0, x = 0.0;
        for (int t = 0; t < m; ++t) {
          f /= b;
          x += static_cast<double>(g.next_below(b)) * f;
        }
        shift[j] = x;
      }
      if (r.base > 0)
        out.push_back(digital_shift(base, shift, r.base, digits_for_base(r.base)));
      else
        out.push_back(digital_shift_per_base(base, shift, bases));
    }
  }
  return out;
}

void write_csv(std::ostream& os, const PointSet& p) {
  for (int i = 0; i < p.n; ++i) write_csv_row(os, p.row(i), p.k);
}

}  // namespace qmccop::lds
