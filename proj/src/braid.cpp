#include "threepage/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "threepage/diagram.hpp"
#include "threepage/invariants.hpp"

namespace threepage {

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int g : letters)
    if (g == 0 || std::abs(g) >= strands)
      throw std::invalid_argument("generator s" + std::to_string(std::abs(g)) + " out of range for " +
                                  std::to_string(strands) + " strands");
}

int BraidWord::exponent_sum() const {
  int sum = 0;
  for (int g : letters) sum += g > 0 ? 1 : -1;
  return sum;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand counts differ");
  std::vector<int> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return BraidWord(a.strands, std::move(letters));
}

BraidWord power(const BraidWord& w, int k) {
  if (k < 0) throw std::invalid_argument("negative braid power");
  BraidWord out(w.strands, {});
  for (int i = 0; i < k; ++i) out = out * w;
  return out;
}

BraidWord generator_run(int strands, int from, int to) {
  std::vector<int> letters;
  const int step = from <= to ? 1 : -1;
  for (int i = from; i != to + step; i += step) letters.push_back(i);
  return BraidWord(strands, std::move(letters));
}

BraidWord torus_braid(int p, int q) {
  if (q < 2 || p < 1) throw std::invalid_argument("torus_braid needs q >= 2 and p >= 1");
  return power(generator_run(q, 1, q - 1), p);
}

BraidWord torus_braid_small(int p, int q) {
  if (p < 2 || q < 1) throw std::invalid_argument("torus_braid_small needs p >= 2 and q >= 1");
  return power(generator_run(p, 1, p - 1), q);
}

std::vector<int> permutation(const BraidWord& w) {
  std::vector<int> who(static_cast<std::size_t>(w.strands));
  std::iota(who.begin(), who.end(), 0);
  for (int g : w.letters) {
    const int i = std::abs(g) - 1;
    std::swap(who[i], who[i + 1]);
  }
  std::vector<int> image(static_cast<std::size_t>(w.strands));
  for (int pos = 0; pos < w.strands; ++pos) image[who[pos]] = pos;
  return image;
}

int cycle_count(const BraidWord& w) {
  const auto perm = permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (auto x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    std::string_view t = token;
    int sign = 1;
    if (!t.empty() && t.front() == '-') {
      sign = -1;
      t.remove_prefix(1);
    }
    if (t.size() < 2 || (t.front() != 's' && t.front() != 'S'))
      throw std::invalid_argument("malformed braid letter '" + token + "'");
    int index = 0;
    for (char ch : t.substr(1)) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("malformed braid letter '" + token + "'");
      index = index * 10 + (ch - '0');
    }
    letters.push_back(sign * index);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& w) {
  std::string out;
  for (int g : w.letters) {
    if (!out.empty()) out += " ";
    out += (g < 0 ? "-s" : "s") + std::to_string(std::abs(g));
  }
  return out;
}

FactorizationReport verify_factorization(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands != rhs.strands) throw std::invalid_argument("strand counts differ");
  FactorizationReport report;
  report.same_permutation = permutation(lhs) == permutation(rhs);
  report.same_exponent_sum = lhs.exponent_sum() == rhs.exponent_sum();
  report.same_closure_profile =
      profile(braid_closure_diagram(lhs)) == profile(braid_closure_diagram(rhs));
  return report;
}

BraidWord torus_factorization_twist_first(int p, int q) {
  if (p < 2 || q <= p) throw std::invalid_argument("need 2 <= p < q");
  BraidWord out = power(generator_run(q, 1, p - 1), p);
  for (int k = 0; k < q - p; ++k) out = out * generator_run(q, p + k, 1 + k);
  return out;
}

BraidWord torus_factorization_small(int p, int q) {
  if (p < 2 || q < 1) throw std::invalid_argument("need p >= 2 and q >= 1");
  const int full = (q / p) * p;
  const BraidWord run = generator_run(p, 1, p - 1);
  return power(run, full) * power(run, q - full);
}

BraidWord torus_factorization_twist_last(int p, int q) {
  if (p < 2 || q < 2 * p) throw std::invalid_argument("need 2 <= p and 2p <= q");
  BraidWord out(q, {});
  for (int k = 0; k < q - p; ++k) out = out * generator_run(q, p + k, 1 + k);
  return out * power(generator_run(q, q - p + 1, q - 1), p);
}

}  // namespace threepage
