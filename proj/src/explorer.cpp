#include "tiltkit/explorer.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>

#include "tiltkit/errors.hpp"
#include "tiltkit/linalg.hpp"

namespace tiltkit {

int default_search_depth() {
  if (const char* env = std::getenv("TILTKIT_DEPTH")) {
    int value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value >= 0) return value;
  }
  return kDefaultSearchDepth;
}

GeneratorSet::GeneratorSet(std::vector<NamedMatrix> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw InputError("generator set is empty");
  std::sort(gens_.begin(), gens_.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  const std::size_t n = gens_.front().matrix.rows();
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    const auto& g = gens_[k];
    if (k > 0 && gens_[k - 1].name == g.name) throw InputError("duplicate generator name \"" + g.name + "\"");
    if (g.name.empty()) throw InputError("generator names must be nonempty");
    require_square(g.matrix, "generator " + g.name);
    if (g.matrix.rows() != n) throw DimensionError("generators have different sizes");
    require_integral(g.matrix, "generator " + g.name);
    const auto det = determinant(g.matrix);
    if (det != 1 && det != -1) throw InputError("generator " + g.name + " does not have det +-1");
  }
}

const RationalMatrix& GeneratorSet::matrix(const std::string& name) const {
  for (const auto& g : gens_) {
    if (g.name == name) return g.matrix;
  }
  throw InputError("unknown generator \"" + name + "\"");
}

bool GeneratorSet::all_column_sums_one() const {
  for (const auto& g : gens_) {
    for (const auto& s : g.matrix.column_sums()) {
      if (s != 1) return false;
    }
  }
  return true;
}

RationalMatrix replay(const GeneratorSet& gens, const Word& word) {
  auto m = RationalMatrix::identity(gens.dimension());
  for (const auto& w : word) m = m * gens.matrix(w);
  return m;
}

const GeneratedElement* GenerateResult::find(const RationalMatrix& m) const {
  auto it = index.find(m.key());
  return it == index.end() ? nullptr : &elements[it->second];
}

namespace {

bool column_sums_one(const RationalMatrix& m) {
  for (const auto& s : m.column_sums()) {
    if (s != 1) return false;
  }
  return true;
}

}  // namespace

GenerateResult generate(const GeneratorSet& gens, int depth, Execution mode) {
  if (depth < 0) throw InputError("search depth must be >= 0");
  GenerateResult r;
  r.depth = depth;
  auto id = RationalMatrix::identity(gens.dimension());
  r.index.emplace(id.key(), 0);
  r.elements.push_back({std::move(id), {}});
  const auto& gs = gens.generators();
  const long width = static_cast<long>(gs.size());
  std::size_t begin = 0;
  for (int level = 0; level < depth; ++level) {
    const std::size_t end = r.elements.size();
    const long frontier = static_cast<long>(end - begin);
    if (frontier == 0) break;
    std::vector<RationalMatrix> products(static_cast<std::size_t>(frontier * width));
    auto expand = [&](long k) {
      const auto& parent = r.elements[begin + k / width].matrix;
      products[k] = parent * gs[k % width].matrix;
    };
    const long total = frontier * width;
    if (mode == Execution::parallel) {
#pragma omp parallel for schedule(static)
      for (long k = 0; k < total; ++k) expand(k);
    } else {
      for (long k = 0; k < total; ++k) expand(k);
    }
    // Ordered merge: parents are in word order and generators in name order,
    // so the first hit carries the least word.
    for (long k = 0; k < total; ++k) {
      auto key = products[k].key();
      if (r.index.count(key)) continue;
      Word w = r.elements[begin + k / width].word;
      w.push_back(gs[k % width].name);
      r.all_column_sums_one = r.all_column_sums_one && column_sums_one(products[k]);
      r.index.emplace(std::move(key), r.elements.size());
      r.elements.push_back({std::move(products[k]), std::move(w)});
    }
    begin = end;
  }
  return r;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_found: return "not_found";
    case SearchStatus::certified_unreachable: return "certified_unreachable";
  }
  return "not_found";
}

std::vector<NamedMatrix> shift_targets(std::size_t n) {
  std::vector<NamedMatrix> out;
  out.push_back({"-E", -RationalMatrix::identity(n)});
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string name = "-P(";
    for (std::size_t k = 0; k < n; ++k) name += (k ? " " : "") + std::to_string(perm[k] + 1);
    name += ")";
    out.push_back({name, -permutation_matrix(perm)});
  }
  return out;
}

namespace {

SearchResult lookup(const GenerateResult& g, const NamedMatrix& target) {
  SearchResult r;
  r.target_name = target.name;
  r.target = target.matrix;
  r.depth = g.depth;
  r.visited = g.elements.size();
  if (const auto* hit = g.find(target.matrix)) {
    r.status = SearchStatus::found;
    r.word = hit->word;
  } else {
    r.status = SearchStatus::not_found;
    r.certificate = "bounded search only: no word of length <= " + std::to_string(g.depth) + " reaches the target";
  }
  return r;
}

}  // namespace

std::vector<SearchResult> reach_shift(const GeneratorSet& gens, int depth, Execution mode) {
  if (depth < 1) throw InputError("reach_shift: depth must be >= 1");
  const auto targets = shift_targets(gens.dimension());
  std::vector<SearchResult> out;
  if (gens.all_column_sums_one()) {
    for (const auto& t : targets) {
      SearchResult r;
      r.target_name = t.name;
      r.target = t.matrix;
      r.status = SearchStatus::certified_unreachable;
      r.depth = depth;
      r.certificate =
          "column-sum certificate: every generator has all column sums 1, products keep this property, and the "
          "target has column sums -1";
      out.push_back(std::move(r));
    }
    return out;
  }
  const auto g = generate(gens, depth, mode);
  for (const auto& t : targets) out.push_back(lookup(g, t));
  return out;
}

SearchResult reach(const GeneratorSet& gens, const NamedMatrix& target, int depth, Execution mode) {
  if (target.matrix.rows() != gens.dimension() || !target.matrix.is_square()) {
    throw DimensionError("reach: target size does not match the generators");
  }
  return lookup(generate(gens, depth, mode), target);
}

GeneratorSet kronecker_generators(int l) {
  if (l < 1) throw InputError("Kronecker generators need l >= 1");
  return GeneratorSet({{"T", RationalMatrix{{-1, 0}, {l, 1}}}, {"U", RationalMatrix{{1, l}, {0, -1}}}});
}

std::pair<RationalMatrix, RationalMatrix> alternating_generators(int m) {
  if (m < 1) throw InputError("alternating generators need m >= 1");
  return {RationalMatrix{{-1, 0}, {m, 1}}, RationalMatrix{{1, 1}, {0, -1}}};
}

std::string to_string(AlternatingStatus s) {
  switch (s) {
    case AlternatingStatus::reached: return "reached";
    case AlternatingStatus::certified_never: return "certified_never";
    case AlternatingStatus::not_found: return "not_found";
  }
  return "not_found";
}

namespace {

Rational max_abs_entry(const RationalMatrix& m) {
  Rational best = 0;
  for (const auto& e : m.entries()) best = std::max(best, Rational(abs(e)));
  return best;
}

// Exponent beyond which G^s can equal neither -E nor K; empty when no such
// horizon can be certified.
std::optional<std::uint64_t> exhaustion_horizon(const RationalMatrix& g, const RationalMatrix& k,
                                                std::string& why) {
  const auto order = matrix_order(g);
  if (order.kind == MatrixOrder::Kind::finite) {
    why = "G has finite order " + std::to_string(order.order) + ", so every power occurs for s < order";
    return order.order;
  }
  if (order.kind != MatrixOrder::Kind::certified_infinite || g.rows() != 2 || determinant(g) != 1) {
    return std::nullopt;
  }
  const Rational tr = g.trace();
  if (abs(tr) > 2) {
    // |tr G^s| = |l^s + l^-s| grows strictly with s for a hyperbolic G, and
    // equal matrices have equal traces.
    Rational target = abs(k.trace());
    auto p = g;
    std::uint64_t s = 1;
    while (abs(p.trace()) <= target) {
      p = p * g;
      ++s;
    }
    why = "G is hyperbolic (|trace| = " + to_string(abs(tr)) + " > 2): |trace G^s| increases strictly and exceeds |trace K| = " +
          to_string(target) + " from s = " + std::to_string(s) + ", and G^s = -E would force finite order";
    return s;
  }
  // Parabolic: G = e(E + N) with N nilpotent and nonzero, G^s = e^s(E + sN).
  const int e = tr > 0 ? 1 : -1;
  const auto n = g * Rational(e) - RationalMatrix::identity(2);
  const Rational nmax = max_abs_entry(n);
  const Rational bound = (max_abs_entry(k) + 1) / nmax;
  const mpz_class horizon = bound.get_num() / bound.get_den() + 2;
  why = "G is parabolic (trace " + to_string(tr) + ", G != +-E): G^s = +-(E + sN) has an entry of size >= s*" +
        to_string(nmax) + " - 1, exceeding every entry of K beyond s = " + horizon.get_str() +
        ", and G^s = -E would force finite order";
  return horizon.get_ui();
}

void require_mutation_2x2(const RationalMatrix& m, const char* name) {
  if (m.rows() != 2 || m.cols() != 2) throw DimensionError(std::string(name) + " must be 2x2");
  require_integral(m, name);
  if (determinant(m) != -1) throw InputError(std::string(name) + " must have det -1");
}

}  // namespace

AlternatingResult alternating_shift_search(const RationalMatrix& mu1, const RationalMatrix& mu2, std::uint64_t bound) {
  require_mutation_2x2(mu1, "mu1");
  require_mutation_2x2(mu2, "mu2");
  AlternatingResult r;
  r.g = mu2 * mu1;
  r.bound = bound;
  const RationalMatrix j{{0, -1}, {-1, 0}};
  const auto minus_e = -RationalMatrix::identity(2);
  const auto k = j * inverse(mu2);  // G^s * mu2 = J  <=>  G^s = K
  std::string why;
  const auto horizon = exhaustion_horizon(r.g, k, why);
  const std::uint64_t limit = horizon ? std::max(bound, *horizon) : bound;
  auto p = RationalMatrix::identity(2);
  for (std::uint64_t s = 0; s <= limit; ++s) {
    if (p == minus_e) {
      r.status = AlternatingStatus::reached;
      r.total_length = static_cast<int>(2 * s);
      r.certificate = "G^" + std::to_string(s) + " = -E";
      return r;
    }
    if (p == k) {
      r.status = AlternatingStatus::reached;
      r.total_length = static_cast<int>(2 * s + 1);
      r.certificate = "G^" + std::to_string(s) + " * mu2 = [[0,-1],[-1,0]]";
      return r;
    }
    p = p * r.g;
  }
  if (horizon) {
    r.status = AlternatingStatus::certified_never;
    r.certificate = why + "; all s <= " + std::to_string(limit) + " checked exactly";
  } else {
    r.status = AlternatingStatus::not_found;
    r.certificate = "no certificate for G; searched s <= " + std::to_string(bound);
  }
  return r;
}

Integer delta(const RationalMatrix& c, const IntVector& v) {
  require_square(c, "delta");
  require_integral(c, "delta");
  if (v.size() != c.rows()) throw DimensionError("delta: vector length does not match the matrix");
  Rational sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) sum += v[i] * c(i, k) * v[k];
  }
  return sum.get_num();
}

DeltaSequence delta_sequence(const RationalMatrix& c, int l, int t_max) {
  if (c.rows() != 2 || c.cols() != 2) throw DimensionError("delta_sequence needs a 2x2 matrix");
  if (t_max < 0) throw InputError("delta_sequence: T must be >= 0");
  DeltaSequence d;
  d.cartan = c;
  d.l = l;
  d.a = {Integer(0), Integer(1)};
  while (static_cast<int>(d.a.size()) < t_max + 1) {
    const auto n = d.a.size();
    d.a.push_back(l * d.a[n - 1] - d.a[n - 2]);
  }
  d.a.resize(t_max + 1);
  for (int t = 1; t <= t_max; ++t) {
    IntVector v{d.a[t], -d.a[t - 1]};
    d.values.push_back(delta(c, v));
    d.g_vectors.push_back(std::move(v));
  }
  return d;
}

Integer delta_closed_form_scaled(int m, int l, int t) {
  if (l == 2) return 2 * (Integer(m - 1) * t * t + 1);
  Integer prev = 2;
  Integer cur = l;
  for (int k = 1; k < 2 * t; ++k) {
    Integer nxt = l * cur - prev;
    prev = cur;
    cur = nxt;
  }
  const Integer l2t = t == 0 ? Integer(2) : cur;
  return 2 * (Integer(m - 1) * (l2t - 2) + (l * l - 4));
}

bool delta_closed_form_matches(int m, int l, const Integer& value, int t) {
  if (l == 2) return value == delta_closed_form_scaled(m, l, t);
  return value * (l * l - 4) == delta_closed_form_scaled(m, l, t);
}

}  // namespace tiltkit
