#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "threepage/invariants.hpp"

namespace threepage {

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const LaurentPoly out = bracket.shifted(-3 * writhe);
  return (writhe % 2 != 0) ? -out : out;
}

LaurentPoly jones(const PlanarDiagram& d, const Orientation& o) {
  return jones_from_bracket(bracket_skein(d), writhe(d, o));
}

InvariantProfile profile(const PlanarDiagram& d) {
  InvariantProfile out;
  out.components = d.components();
  const Orientation base = base_orientation(d);
  const auto lk = linking_matrix(d, base);
  for (int i = 0; i < d.components(); ++i)
    for (int j = i + 1; j < d.components(); ++j) out.abs_linking.push_back(std::abs(lk[i][j]));
  std::sort(out.abs_linking.begin(), out.abs_linking.end());

  const LaurentPoly bracket = bracket_skein(d);
  const std::uint64_t assignments = std::uint64_t{1} << d.components();
  for (std::uint64_t bits = 0; bits < assignments; ++bits)
    out.jones_set.push_back(jones_from_bracket(bracket, writhe(d, orientation_from_bits(d, bits))));
  std::sort(out.jones_set.begin(), out.jones_set.end());
  out.jones_set.erase(std::unique(out.jones_set.begin(), out.jones_set.end()), out.jones_set.end());
  return out;
}

InvariantProfile profile(const ThreePagePresentation& p) { return profile(project(p)); }

InvariantProfile mirror(const InvariantProfile& p) {
  InvariantProfile out = p;
  for (auto& poly : out.jones_set) poly = poly.mirrored();
  std::sort(out.jones_set.begin(), out.jones_set.end());
  return out;
}

bool equal_up_to_mirror(const InvariantProfile& a, const InvariantProfile& b) {
  return a == b || mirror(a) == b;
}

InvariantProfile unlink_profile(int components) {
  InvariantProfile out;
  out.components = components;
  out.abs_linking.assign(static_cast<std::size_t>(components) * (components - 1) / 2, 0);
  out.jones_set.push_back(loop_value().pow(components - 1));
  return out;
}

bool is_unlink_profile(const InvariantProfile& p) { return p == unlink_profile(p.components); }

std::string format_jones_set(const std::vector<LaurentPoly>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += "; ";
    out += set[i].to_string();
  }
  return out + "}";
}

std::string to_string(const InvariantProfile& p) {
  std::ostringstream out;
  out << "components=" << p.components << " | lk={";
  for (std::size_t i = 0; i < p.abs_linking.size(); ++i) out << (i ? "," : "") << p.abs_linking[i];
  out << "} | jones=" << format_jones_set(p.jones_set);
  return out.str();
}

std::string format_jones_t(const LaurentPoly& jones_in_a, int components) {
  if (jones_in_a.is_zero()) return "0";
  // A^e = t^(-e/4); e = 2(k-1) mod 4 for a k-component link.
  const int residue = ((2 * (components - 1)) % 4 + 4) % 4;
  std::string out;
  const auto terms = jones_in_a.terms();  // ascending in A, so descending in t when reversed
  for (const auto& [e, c] : terms) {
    if (((e % 4) + 4) % 4 != residue)
      throw std::logic_error("A-exponent " + std::to_string(e) + " inconsistent with " +
                             std::to_string(components) + " components");
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool whole = e % 4 == 0;
    const int num = whole ? -e / 4 : -e / 2;  // t^num or t^(num/2)
    if (num == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "t";
    if (whole) {
      if (num != 1) out += "^" + std::to_string(num);
    } else {
      out += "^(" + std::to_string(num) + "/2)";
    }
  }
  return out;
}

}  // namespace threepage
