#include "threepage/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

namespace threepage {

ThreePagePresentation::ThreePagePresentation(int n, std::array<Page, kPages> pages)
    : n_(n), pages_(std::move(pages)) {
  for (auto& page : pages_) std::sort(page.begin(), page.end());
}

int ThreePagePresentation::arc_count() const {
  int total = 0;
  for (const auto& page : pages_) total += static_cast<int>(page.size());
  return total;
}

std::array<int, kPages> ThreePagePresentation::page_sizes() const {
  return {static_cast<int>(pages_[0].size()), static_cast<int>(pages_[1].size()),
          static_cast<int>(pages_[2].size())};
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::IndexOutOfRange: return "IndexOutOfRange";
    case ViolationKind::EndpointShared: return "EndpointShared";
    case ViolationKind::NonCrossingViolated: return "NonCrossingViolated";
    case ViolationKind::DegreeViolated: return "DegreeViolated";
    case ViolationKind::PageEmpty: return "PageEmpty";
  }
  return "?";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  if (page >= 0) out << " page=P" << page + 1;
  if (point > 0) out << " point=" << point;
  for (const auto& arc : arcs) out << " arc=" << arc.lo << "-" << arc.hi;
  return out.str();
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.describe();
  }
  return out;
}

ValidationReport validate(const ThreePagePresentation& p) {
  ValidationReport report;
  const int n = p.n();
  std::vector<int> degree(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);

  for (int k = 0; k < kPages; ++k) {
    const Page& page = p.page(k);
    if (page.empty()) {
      report.violations.push_back({ViolationKind::PageEmpty, k, 0, {}});
      continue;
    }
    std::map<int, Arc> owner;
    for (const Arc& arc : page) {
      if (arc.lo < 1 || arc.hi > n || arc.lo == arc.hi) {
        report.violations.push_back({ViolationKind::IndexOutOfRange, k, 0, {arc}});
        continue;
      }
      for (int x : {arc.lo, arc.hi}) {
        auto [it, inserted] = owner.emplace(x, arc);
        if (!inserted)
          report.violations.push_back({ViolationKind::EndpointShared, k, x, {it->second, arc}});
        ++degree[x];
      }
    }
    for (std::size_t i = 0; i < page.size(); ++i)
      for (std::size_t j = i + 1; j < page.size(); ++j)
        if (interleaves(page[i], page[j]))
          report.violations.push_back({ViolationKind::NonCrossingViolated, k, 0, {page[i], page[j]}});
  }
  for (int x = 1; x <= n; ++x)
    if (degree[x] != 2) report.violations.push_back({ViolationKind::DegreeViolated, -1, x, {}});
  return report;
}

InvalidPresentation::InvalidPresentation(const ValidationReport& report)
    : std::invalid_argument("invalid presentation: " + report.describe()) {}

void require_valid(const ThreePagePresentation& p) {
  auto report = validate(p);
  if (!report.ok()) throw InvalidPresentation(report);
}

ComponentDecomposition components(const ThreePagePresentation& p) {
  require_valid(p);
  const int n = p.n();
  // incident[x] holds the two arcs at x, lower page first.
  std::vector<std::vector<ArcRef>> incident(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < kPages; ++k)
    for (const Arc& arc : p.page(k)) {
      incident[arc.lo].push_back({k, arc});
      incident[arc.hi].push_back({k, arc});
    }

  ComponentDecomposition out;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    Cycle cycle;
    int at = start;
    ArcRef via = incident[start][0];
    do {
      seen[at] = true;
      cycle.points.push_back(at);
      cycle.arcs.push_back(via);
      at = via.arc.other(at);
      const auto& two = incident[at];
      via = (two[0] == via) ? two[1] : two[0];
    } while (at != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::optional<std::pair<ArcRef, ArcRef>> detect_split_pair(const ThreePagePresentation& p) {
  for (int a = 0; a < kPages; ++a)
    for (int b = a + 1; b < kPages; ++b)
      for (const Arc& arc : p.page(a))
        if (std::binary_search(p.page(b).begin(), p.page(b).end(), arc))
          return std::make_pair(ArcRef{a, arc}, ArcRef{b, arc});
  return std::nullopt;
}

ThreePagePresentation rotate_pages(const ThreePagePresentation& p) {
  return ThreePagePresentation(p.n(), {p.page(2), p.page(0), p.page(1)});
}

ThreePagePresentation reverse_points(const ThreePagePresentation& p) {
  const int m = p.n() + 1;
  auto flip = [m](const Page& page) {
    Page out;
    out.reserve(page.size());
    for (const Arc& arc : page) out.emplace_back(m - arc.hi, m - arc.lo);
    return out;
  };
  return ThreePagePresentation(p.n(), {flip(p.page(2)), flip(p.page(1)), flip(p.page(0))});
}

std::array<ThreePagePresentation, 6> symmetry_orbit(const ThreePagePresentation& p) {
  std::array<ThreePagePresentation, 6> out;
  out[0] = p;
  out[1] = rotate_pages(out[0]);
  out[2] = rotate_pages(out[1]);
  out[3] = reverse_points(p);
  out[4] = rotate_pages(out[3]);
  out[5] = rotate_pages(out[4]);
  return out;
}

ThreePagePresentation canonicalize(const ThreePagePresentation& p) {
  auto orbit = symmetry_orbit(p);
  return *std::min_element(orbit.begin(), orbit.end());
}

bool is_canonical(const ThreePagePresentation& p) {
  for (const auto& image : symmetry_orbit(p))
    if (image < p) return false;
  return true;
}

// ---- native text format ----

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw ParseError("malformed " + std::string(what) + ": '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void check_range(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n)
    throw ParseError("arc " + std::to_string(a) + "-" + std::to_string(b) +
                     " out of range for n=" + std::to_string(n));
  if (a == b) throw ParseError("degenerate arc " + std::to_string(a) + "-" + std::to_string(b));
}

}  // namespace

ThreePagePresentation parse_presentation(std::string_view text) {
  const std::string compact = strip_spaces(text);
  auto fields = split(compact, ';');
  while (!fields.empty() && fields.back().empty()) fields.pop_back();
  if (fields.size() != 4) throw ParseError("expected 'n=..; P1:..; P2:..; P3:..'");
  if (fields[0].substr(0, 2) != "n=") throw ParseError("missing 'n=' header");
  const int n = parse_int(fields[0].substr(2), "point count");
  if (n < 1) throw ParseError("point count must be positive");

  std::array<Page, kPages> pages;
  std::array<bool, kPages> present{};
  for (std::size_t f = 1; f < fields.size(); ++f) {
    std::string_view field = fields[f];
    auto colon = field.find(':');
    if (colon == std::string_view::npos || colon != 2 || field[0] != 'P')
      throw ParseError("malformed page field '" + std::string(field) + "'");
    const int k = parse_int(field.substr(1, 1), "page label") - 1;
    if (k < 0 || k >= kPages) throw ParseError("page label must be P1, P2 or P3");
    if (present[k]) throw ParseError("page P" + std::to_string(k + 1) + " given twice");
    present[k] = true;
    std::string_view body = field.substr(colon + 1);
    if (body.empty()) continue;
    for (std::string_view token : split(body, ',')) {
      auto dash = token.find('-');
      if (dash == std::string_view::npos) throw ParseError("malformed arc '" + std::string(token) + "'");
      const int a = parse_int(token.substr(0, dash), "arc endpoint");
      const int b = parse_int(token.substr(dash + 1), "arc endpoint");
      check_range(n, a, b);
      pages[k].emplace_back(a, b);
    }
  }
  return ThreePagePresentation(n, std::move(pages));
}

std::string serialize(const ThreePagePresentation& p) {
  std::string out = "n=" + std::to_string(p.n());
  for (int k = 0; k < kPages; ++k) {
    out += "; P" + std::to_string(k + 1) + ":";
    bool first = true;
    for (const Arc& arc : p.page(k)) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(arc.lo) + "-" + std::to_string(arc.hi);
    }
  }
  return out;
}

ThreePagePresentation parse_presentation_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    const auto& pages_json = doc.at("pages");
    if (!pages_json.is_array() || pages_json.size() != kPages)
      throw ParseError("'pages' must be an array of three pages");
    std::array<Page, kPages> pages;
    for (int k = 0; k < kPages; ++k)
      for (const auto& pair : pages_json[k]) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("arc must be a pair");
        const int a = pair[0].get<int>();
        const int b = pair[1].get<int>();
        check_range(n, a, b);
        pages[k].emplace_back(a, b);
      }
    return ThreePagePresentation(n, std::move(pages));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad presentation JSON: ") + e.what());
  }
}

std::string to_json(const ThreePagePresentation& p) {
  nlohmann::json pages = nlohmann::json::array();
  for (int k = 0; k < kPages; ++k) {
    nlohmann::json page = nlohmann::json::array();
    for (const Arc& arc : p.page(k)) page.push_back({arc.lo, arc.hi});
    pages.push_back(page);
  }
  nlohmann::json doc;
  doc["n"] = p.n();
  doc["pages"] = pages;
  return doc.dump();
}

}  // namespace threepage
