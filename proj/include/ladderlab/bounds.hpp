#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ladderlab {

// A non-negative integer that is either known exactly or only certified to be >= 2^log2_at_least.
// Values past the bit cap are never materialized.
struct BoundValue {
  std::optional<mpz_class> exact;
  mpz_class log2_at_least;

  static BoundValue of(mpz_class v);
  static BoundValue at_least_pow2(mpz_class e);
  bool is_exact() const { return exact.has_value(); }
  std::string decimal() const;  // exact values only
  std::string render(std::size_t max_digits = 0) const;  // 0 = never abbreviate
};

// true when a <= b can be certified from the stored information
bool certainly_le(const BoundValue& a, const BoundValue& b);

enum class BoundClass { Degree, Planar, Pathwidth, Treewidth, MinorFree, Wcol, Neighborhood };

std::string to_string(BoundClass c);
BoundClass parse_bound_class(const std::string& s);
// parameter name each class takes ("delta", "p", "t", "c"), empty for planar
std::string bound_parameter(BoundClass c);

struct BoundRow {
  BoundClass cls;
  std::int64_t param = 0;  // unused for planar
  std::uint32_t d = 1;
  std::optional<BoundValue> lower;
  std::optional<BoundValue> upper;
  std::vector<std::string> notes;  // parameter adjustments, in order of application
};

BoundRow bound_row(BoundClass cls, std::int64_t param, std::uint32_t d);
std::vector<BoundRow> bounds_table(BoundClass cls, std::int64_t param, std::uint32_t d_lo, std::uint32_t d_hi);

// The individual formulas, exact where the value fits under the bit cap.
mpz_class degree_upper(std::uint64_t delta, std::uint32_t d);
mpz_class degree_lower(std::uint64_t delta, std::uint32_t d);
mpz_class planar_lower(std::uint32_t d);
mpz_class planar_upper(std::uint32_t d);
mpz_class pathwidth_upper(std::uint64_t p, std::uint32_t d);
mpz_class pathwidth_lower(std::uint64_t p, std::uint32_t d);  // P_{p,d}: order (2d+1)^p
mpz_class treewidth_lower(std::uint32_t d, std::uint32_t t);  // even d >= 2, odd t >= 3
mpz_class minor_free_lower(std::uint32_t d, std::uint32_t t);  // even d >= 2, odd t >= 5
mpz_class wcol_bound(std::uint32_t d, std::uint32_t t);        // t >= 4
BoundValue uqw_margin(const mpz_class& wcol, const mpz_class& m);  // wcol! (m+1)^(wcol+1)
BoundValue minor_free_upper(std::uint32_t d, std::uint32_t t);
mpz_class neighborhood_upper(std::uint64_t c, std::uint32_t d);

// Exact values are kept up to this many bits.
inline constexpr std::size_t kExactBitCap = std::size_t{1} << 17;

std::string render_bounds_text(const std::vector<BoundRow>& rows);

}  // namespace ladderlab
