#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiltkit/execution.hpp"
#include "tiltkit/matrix.hpp"

namespace tiltkit {

inline constexpr int kDefaultSearchDepth = 12;

// Depth from TILTKIT_DEPTH when set to a non-negative integer, else the default.
int default_search_depth();

struct NamedMatrix {
  std::string name;
  RationalMatrix matrix;
};

// Named integral square matrices of one size with det +-1, kept sorted by name.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  // Throws InputError (DimensionError on size mismatch).
  explicit GeneratorSet(std::vector<NamedMatrix> generators);

  const std::vector<NamedMatrix>& generators() const { return gens_; }
  std::size_t dimension() const { return gens_.front().matrix.rows(); }
  const RationalMatrix& matrix(const std::string& name) const;
  bool all_column_sums_one() const;

 private:
  std::vector<NamedMatrix> gens_;
};

using Word = std::vector<std::string>;

// Left-to-right product of the named generators (identity for the empty word).
RationalMatrix replay(const GeneratorSet& gens, const Word& word);

struct GeneratedElement {
  RationalMatrix matrix;
  Word word;  // shortest, lexicographically least among shortest
};

struct GenerateResult {
  // Breadth-first order: by word length, then word.
  std::vector<GeneratedElement> elements;
  std::map<std::string, std::size_t> index;  // RationalMatrix::key() -> position
  int depth = 0;
  bool all_column_sums_one = true;

  const GeneratedElement* find(const RationalMatrix& m) const;
};

GenerateResult generate(const GeneratorSet& gens, int depth, Execution mode = Execution::parallel);

enum class SearchStatus { found, not_found, certified_unreachable };
std::string to_string(SearchStatus s);

struct SearchResult {
  std::string target_name;
  RationalMatrix target;
  SearchStatus status = SearchStatus::not_found;
  Word word;  // when found
  int depth = 0;
  std::size_t visited = 0;
  std::string certificate;
};

// Targets -E and -P for every non-identity permutation matrix P.
std::vector<NamedMatrix> shift_targets(std::size_t n);

// One result per shift target. The column-sum certificate is tried before any
// search.
std::vector<SearchResult> reach_shift(const GeneratorSet& gens, int depth, Execution mode = Execution::parallel);

// Bounded search for an arbitrary target; never certifies.
SearchResult reach(const GeneratorSet& gens, const NamedMatrix& target, int depth,
                   Execution mode = Execution::parallel);

// Mutation g-matrices of the trivial extension of the l-Kronecker algebra at
// its two vertices: T = [[-1,0],[l,1]], U = [[1,l],[0,-1]].
GeneratorSet kronecker_generators(int l);

// Left mutations at the two vertices of the loop-and-arrow algebra with
// x^m = 0: mu1 = [[-1,0],[m,1]], mu2 = [[1,1],[0,-1]].
std::pair<RationalMatrix, RationalMatrix> alternating_generators(int m);

enum class AlternatingStatus { reached, certified_never, not_found };
std::string to_string(AlternatingStatus s);

struct AlternatingResult {
  AlternatingStatus status = AlternatingStatus::not_found;
  RationalMatrix g;  // mu2 * mu1
  int total_length = 0;  // when reached
  std::uint64_t bound = 0;
  std::string certificate;
};

// Searches G^s = -E (length 2s) and G^s * mu2 = [[0,-1],[-1,0]] (length
// 2s + 1) for s <= bound, G = mu2 * mu1. Requires 2x2 integral matrices with
// det -1 (InputError otherwise).
AlternatingResult alternating_shift_search(const RationalMatrix& mu1, const RationalMatrix& mu2,
                                           std::uint64_t bound);

// v^T C v. Throws DimensionError / InputError.
Integer delta(const RationalMatrix& c, const IntVector& v);

struct DeltaSequence {
  RationalMatrix cartan;
  int l = 0;
  std::vector<Integer> a;  // a_1, ..., a_{T+1}
  std::vector<IntVector> g_vectors;  // v_t = (a_{t+1}, -a_t), t = 1..T
  std::vector<Integer> values;  // delta(v_t)
};

// a_1 = 0, a_2 = 1, a_{t+1} = l a_t - a_{t-1}. Requires a 2x2 integral C.
DeltaSequence delta_sequence(const RationalMatrix& c, int l, int t_max);

// For C = [[2m,l],[l,2]]: (l^2 - 4) * delta(t) written over the integers,
// 2((m-1)(L_{2t} - 2) + (l^2 - 4)) with L_0 = 2, L_1 = l, L_{k+1} = l L_k - L_{k-1}.
// For l = 2 the denominator vanishes and the value is delta(t) = 2((m-1)t^2 + 1).
Integer delta_closed_form_scaled(int m, int l, int t);
bool delta_closed_form_matches(int m, int l, const Integer& value, int t);

}  // namespace tiltkit
