#pragma once
// Braid words, torus braids and the factorization checks for torus braids.

#include <string>
#include <string_view>
#include <vector>

namespace threepage {

/// Generator sigma_i^{+1} is stored as +i, sigma_i^{-1} as -i (1-based).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  int length() const { return static_cast<int>(letters.size()); }
  int exponent_sum() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& w, int k);

/// sigma_from sigma_{from±1} ... sigma_to on the given strand count (either direction).
BraidWord generator_run(int strands, int from, int to);

/// (sigma_1 ... sigma_{q-1})^p on q strands.
BraidWord torus_braid(int p, int q);
/// (sigma_1 ... sigma_{p-1})^q on p strands.
BraidWord torus_braid_small(int p, int q);

/// Image of each top position at the bottom; signs ignored.
std::vector<int> permutation(const BraidWord& w);
int cycle_count(const BraidWord& w);

/// Word syntax `s1 s2 -s1` (leading '-' for inverse).
BraidWord parse_braid(std::string_view text, int strands);
std::string format_braid(const BraidWord& w);

struct FactorizationReport {
  bool same_permutation = false;
  bool same_exponent_sum = false;
  bool same_closure_profile = false;

  bool passed() const { return same_permutation && same_exponent_sum && same_closure_profile; }
};

/// Evidence that two words present the same braid: permutations, exponent
/// sums and closure invariant profiles (exact, no mirroring).
FactorizationReport verify_factorization(const BraidWord& lhs, const BraidWord& rhs);

/// Right-hand sides of the torus braid factorizations used by the torus
/// constructions. Each equals the corresponding torus braid as a braid.
///
/// On q strands, 2 <= p < q: a full twist of the first p strands followed by
/// q-p descending runs, (s1..s_{p-1})^p (s_p..s1)(s_{p+1}..s2)...(s_{q-1}..s_{q-p}).
BraidWord torus_factorization_twist_first(int p, int q);
/// On p strands: (s1..s_{p-1})^{floor(q/p) p} (s1..s_{p-1})^{q - floor(q/p) p}.
BraidWord torus_factorization_small(int p, int q);
/// On q strands, 2p <= q: the descending runs first, then a full twist of the
/// last p strands, (s_{q-p+1}..s_{q-1})^p.
BraidWord torus_factorization_twist_last(int p, int q);

}  // namespace threepage
