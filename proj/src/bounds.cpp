#include "ladderlab/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "ladderlab/errors.hpp"

namespace ladderlab {

namespace {

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class bit_length(const mpz_class& v) { return v == 0 ? mpz_class(0) : mpz_class(mpz_sizeinbase(v.get_mpz_t(), 2)); }

mpz_class floor_log2(const mpz_class& v) { return bit_length(v) - 1; }

std::uint32_t ceil_half(std::uint32_t d) { return (d + 1) / 2; }

unsigned long to_ulong(const mpz_class& v, const char* what) {
  if (!v.fits_ulong_p()) throw ArgumentError(std::string(what) + " is too large");
  return v.get_ui();
}

// sum_{k=2}^{n} floor(log2 k), a lower bound for log2(n!)
mpz_class log2_factorial_floor(const mpz_class& n) {
  mpz_class total = 0;
  mpz_class lo = 2;
  unsigned long j = 1;
  while (lo <= n) {
    mpz_class hi = lo * 2 - 1;
    if (hi > n) hi = n;
    total += mpz_class(j) * (hi - lo + 1);
    lo *= 2;
    ++j;
  }
  return total;
}

}  // namespace

BoundValue BoundValue::of(mpz_class v) {
  if (v < 0) throw InternalError("negative bound value");
  BoundValue b;
  b.log2_at_least = v == 0 ? mpz_class(0) : floor_log2(v);
  b.exact = std::move(v);
  return b;
}

BoundValue BoundValue::at_least_pow2(mpz_class e) {
  BoundValue b;
  b.log2_at_least = std::move(e);
  return b;
}

std::string BoundValue::decimal() const {
  if (!exact) throw ArgumentError("bound value is not exact");
  return exact->get_str();
}

std::string BoundValue::render(std::size_t max_digits) const {
  if (!exact) return ">= 2^" + log2_at_least.get_str();
  std::string s = exact->get_str();
  if (max_digits == 0 || s.size() <= max_digits) return s;
  std::size_t keep = std::max<std::size_t>(1, (max_digits - 3) / 2);
  return s.substr(0, keep) + "..." + s.substr(s.size() - keep) + " (" + std::to_string(s.size()) + " digits)";
}

bool certainly_le(const BoundValue& a, const BoundValue& b) {
  if (a.exact && b.exact) return *a.exact <= *b.exact;
  if (a.exact) {
    // b >= 2^L, so a <= 2^L suffices
    if (*a.exact == 0) return true;
    return floor_log2(*a.exact) < b.log2_at_least ||
           (floor_log2(*a.exact) == b.log2_at_least && mpz_popcount(a.exact->get_mpz_t()) == 1);
  }
  return false;
}

std::string to_string(BoundClass c) {
  switch (c) {
    case BoundClass::Degree: return "degree";
    case BoundClass::Planar: return "planar";
    case BoundClass::Pathwidth: return "pathwidth";
    case BoundClass::Treewidth: return "treewidth";
    case BoundClass::MinorFree: return "minor-free";
    case BoundClass::Wcol: return "wcol";
    case BoundClass::Neighborhood: return "neighborhood";
  }
  return "?";
}

BoundClass parse_bound_class(const std::string& s) {
  for (auto c : {BoundClass::Degree, BoundClass::Planar, BoundClass::Pathwidth, BoundClass::Treewidth,
                 BoundClass::MinorFree, BoundClass::Wcol, BoundClass::Neighborhood})
    if (to_string(c) == s) return c;
  throw ArgumentError("unknown bound class '" + s + "'");
}

std::string bound_parameter(BoundClass c) {
  switch (c) {
    case BoundClass::Degree: return "delta";
    case BoundClass::Planar: return "";
    case BoundClass::Pathwidth: return "p";
    case BoundClass::Treewidth:
    case BoundClass::MinorFree:
    case BoundClass::Wcol: return "t";
    case BoundClass::Neighborhood: return "c";
  }
  return "";
}

mpz_class degree_upper(std::uint64_t delta, std::uint32_t d) { return pow_ui(mpz_class(delta), d) + 1; }

mpz_class degree_lower(std::uint64_t delta, std::uint32_t d) { return pow_ui(mpz_class(delta / 2), ceil_half(d)); }

mpz_class planar_lower(std::uint32_t d) { return pow_ui(2, ceil_half(d)); }

mpz_class planar_upper(std::uint32_t d) {
  if (d == 0) throw ArgumentError("planar bound needs d >= 1");
  mpz_class D = d;
  mpz_class chi1 = 2 * D + 5;
  mpz_class chi2 = 2 * (2 * D + 3) * ((chi1 - 1) * D + 1);
  mpz_class chi3 = (256 * D * D * D * pow_ui(D + 2, 4) + 2) * chi2 + 2;
  mpz_class chi4 = (chi3 - 1) * (chi3 - 1) + 1;
  mpz_class chi5 = (2 * D - 1) * chi4;
  return D * pow_ui(D * chi5 + 2, d) + 1;
}

mpz_class pathwidth_upper(std::uint64_t p, std::uint32_t d) {
  if (p == 0 || d == 0) throw ArgumentError("pathwidth bound needs p >= 1 and d >= 1");
  mpz_class D = d;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), p + 1);
  return (2 * D + 3) * fact * pow_ui((2 * D + 3) * (D + 2), p + 1);
}

mpz_class pathwidth_lower(std::uint64_t p, std::uint32_t d) { return pow_ui(mpz_class(2 * d + 1), p); }

mpz_class treewidth_lower(std::uint32_t d, std::uint32_t t) {
  if (d < 2 || d % 2 || t < 3 || t % 2 == 0) throw ArgumentError("treewidth lower bound needs even d >= 2, odd t >= 3");
  return pow_ui(2, to_ulong(binom((d + t - 5) / 2, (t - 3) / 2), "exponent"));
}

mpz_class minor_free_lower(std::uint32_t d, std::uint32_t t) {
  if (d < 2 || d % 2 || t < 5 || t % 2 == 0) throw ArgumentError("minor-free lower bound needs even d >= 2, odd t >= 5");
  return treewidth_lower(d, t - 2);
}

mpz_class wcol_bound(std::uint32_t d, std::uint32_t t) {
  if (t < 4) throw ArgumentError("wcol bound needs t >= 4");
  return binom(d + t - 2, t - 2) * (t - 3) * (2 * d + 1);
}

BoundValue uqw_margin(const mpz_class& wcol, const mpz_class& m) {
  mpz_class est = bit_length(wcol) * wcol + bit_length(m + 1) * (wcol + 1);
  if (est <= kExactBitCap) {
    unsigned long w = to_ulong(wcol, "wcol");
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), w);
    return BoundValue::of(fact * pow_ui(m + 1, w + 1));
  }
  return BoundValue::at_least_pow2(log2_factorial_floor(wcol) + floor_log2(m + 1) * (wcol + 1));
}

BoundValue minor_free_upper(std::uint32_t d, std::uint32_t t) {
  if (t < 4 || d == 0) throw ArgumentError("minor-free upper bound needs t >= 4 and d >= 1");
  mpz_class w = wcol_bound(2 * d, t);
  mpz_class m0 = 2 * pow_ui(mpz_class(d + 2), t - 2) + 1;
  mpz_class m = binom(to_ulong(w + 1, "wcol"), t - 1) * (m0 + t);
  return uqw_margin(w, m);
}

mpz_class neighborhood_upper(std::uint64_t c, std::uint32_t d) {
  mpz_class C = c;
  return 64 * C * C * C * pow_ui(mpz_class(d + 2), 7);
}

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

}  // namespace

BoundRow bound_row(BoundClass cls, std::int64_t param, std::uint32_t d) {
  if (d == 0) throw ArgumentError("bounds need d >= 1");
  if (param < 0) throw ArgumentError("class parameter must be non-negative");
  BoundRow row{cls, param, d, std::nullopt, std::nullopt, {}};
  auto P = static_cast<std::uint64_t>(param);
  auto trivial = [&](const std::string& why) {
    row.lower = BoundValue::of(1);
    row.notes.push_back("lower: " + why + "; trivial order 1");
  };
  switch (cls) {
    case BoundClass::Degree: {
      row.upper = BoundValue::of(degree_upper(P, d));
      if (P < 2) row.notes.push_back("upper: formula stated for delta >= 2");
      if (P < 4) {
        trivial("construction needs delta >= 4");
        break;
      }
      std::uint32_t dd = d % 2 ? d : d - 1;
      if (dd != d) row.notes.push_back("lower: evaluated at odd d=" + num(dd));
      row.lower = BoundValue::of(degree_lower(P, dd));
      break;
    }
    case BoundClass::Planar:
      row.upper = BoundValue::of(planar_upper(d));
      row.lower = BoundValue::of(planar_lower(d));
      break;
    case BoundClass::Pathwidth: {
      std::uint64_t pu = std::max<std::uint64_t>(P, 1);
      if (pu != P) row.notes.push_back("upper: evaluated at p=1");
      row.upper = BoundValue::of(pathwidth_upper(pu, d));
      std::uint32_t dd = (d + 1) / 4;
      if (P < 2) trivial("construction needs p >= 2");
      else if (dd == 0) trivial("construction needs d >= 3");
      else {
        if (4 * dd - 1 != d) row.notes.push_back("lower: evaluated at distance " + num(4 * dd - 1));
        row.lower = BoundValue::of(pathwidth_lower(P - 2, dd));
      }
      break;
    }
    case BoundClass::Treewidth: {
      std::uint64_t tu = std::max<std::uint64_t>(P, 2);
      if (tu != P) row.notes.push_back("upper: evaluated at t=2");
      row.upper = minor_free_upper(d, static_cast<std::uint32_t>(tu + 2));
      row.notes.push_back("upper: K_" + num(tu + 2) + "-minor-free chain");
      std::uint32_t dd = d % 2 ? d - 1 : d;
      std::uint64_t tl = P % 2 ? P : P - 1;
      if (dd < 2 || P < 3) trivial("construction needs even d >= 2 and odd t >= 3");
      else {
        if (dd != d) row.notes.push_back("lower: evaluated at even d=" + num(dd));
        if (tl != P) row.notes.push_back("lower: evaluated at odd t=" + num(tl));
        row.lower = BoundValue::of(treewidth_lower(dd, static_cast<std::uint32_t>(tl)));
      }
      break;
    }
    case BoundClass::MinorFree: {
      std::uint64_t tu = std::max<std::uint64_t>(P, 4);
      if (tu != P) row.notes.push_back("upper: evaluated at t=4");
      row.upper = minor_free_upper(d, static_cast<std::uint32_t>(tu));
      std::uint32_t dd = d % 2 ? d - 1 : d;
      std::uint64_t tl = P % 2 ? P : P - 1;
      if (dd < 2 || P < 5) trivial("construction needs even d >= 2 and odd t >= 5");
      else {
        if (dd != d) row.notes.push_back("lower: evaluated at even d=" + num(dd));
        if (tl != P) row.notes.push_back("lower: evaluated at odd t=" + num(tl));
        row.lower = BoundValue::of(minor_free_lower(dd, static_cast<std::uint32_t>(tl)));
      }
      break;
    }
    case BoundClass::Wcol:
      row.upper = BoundValue::of(wcol_bound(d, static_cast<std::uint32_t>(P)));
      break;
    case BoundClass::Neighborhood:
      row.upper = BoundValue::of(neighborhood_upper(P, d));
      break;
  }
  if (row.lower && row.upper && !certainly_le(*row.lower, *row.upper))
    throw InternalError("bound row " + to_string(cls) + " has lower > upper");
  return row;
}

std::vector<BoundRow> bounds_table(BoundClass cls, std::int64_t param, std::uint32_t d_lo, std::uint32_t d_hi) {
  if (d_lo == 0 || d_lo > d_hi) throw ArgumentError("bad d range");
  std::vector<BoundRow> rows;
  for (std::uint32_t d = d_lo; d <= d_hi; ++d) rows.push_back(bound_row(cls, param, d));
  return rows;
}

std::string render_bounds_text(const std::vector<BoundRow>& rows) {
  std::vector<std::vector<std::string>> cells{{"class", "param", "d", "lower", "upper", "notes"}};
  for (const auto& r : rows) {
    std::string pname = bound_parameter(r.cls);
    std::string notes;
    for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
    cells.push_back({to_string(r.cls), pname.empty() ? "-" : pname + "=" + std::to_string(r.param),
                     std::to_string(r.d), r.lower ? r.lower->render(40) : "-", r.upper ? r.upper->render(40) : "-",
                     notes});
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace ladderlab
