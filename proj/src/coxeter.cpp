#include "sigmakl/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace sigmakl {

namespace {

constexpr std::size_t kRootCap = 200'000;
constexpr std::size_t kBruhatMemoCap = 4096;

struct Factor {
  CoxeterMatrix matrix;
  // Orientation of the non-simply-laced bonds in the Cartan matrix: for a
  // bond (i < j) with m = 4 or 6 the long root sits at i unless flipped.
  bool flip = false;
};

CoxeterMatrix chain(int n) {
  CoxeterMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  return m;
}

Factor factor_for(const std::string& f) {
  auto fail = [&]() -> Factor { throw CoxeterError("unknown type label '" + f + "'"); };
  if (f.size() < 2) return fail();
  const char kind = f[0];
  if (kind == 'I') {
    // I2(m)
    if (f.size() < 5 || f[1] != '2' || f[2] != '(' || f.back() != ')') return fail();
    const std::string num = f.substr(3, f.size() - 4);
    if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit)) return fail();
    const int mm = std::stoi(num);
    if (mm < 2) return fail();
    return Factor{{{1, mm}, {mm, 1}}, false};
  }
  const std::string num = f.substr(1);
  if (!std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 3) return fail();
  const int n = std::stoi(num);
  switch (kind) {
    case 'A':
      if (n < 1) return fail();
      return Factor{chain(n), false};
    case 'B':
    case 'C': {
      if (n < 2) return fail();
      auto m = chain(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 4;
      return Factor{m, kind == 'C'};
    }
    case 'D': {
      if (n < 4) return fail();
      auto m = chain(n - 1);
      for (auto& row : m) row.push_back(2);
      m.emplace_back(static_cast<std::size_t>(n), 2);
      m[n - 1][n - 1] = 1;
      m[n - 3][n - 1] = m[n - 1][n - 3] = 3;
      return Factor{m, false};
    }
    case 'E': {
      if (n < 6 || n > 8) return fail();
      // Bourbaki: 1-3-4-5-..., 2 attached to 4 (0-indexed: 0-2-3-4-..., 1-3).
      CoxeterMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      m[0][2] = m[2][0] = 3;
      m[1][3] = m[3][1] = 3;
      for (int i = 2; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
      return Factor{m, false};
    }
    case 'F': {
      if (n != 4) return fail();
      auto m = chain(4);
      m[1][2] = m[2][1] = 4;
      return Factor{m, false};
    }
    case 'G':
      if (n != 2) return fail();
      return Factor{{{1, 6}, {6, 1}}, false};
    case 'H': {
      if (n != 3 && n != 4) return fail();
      auto m = chain(n);
      m[0][1] = m[1][0] = 5;
      return Factor{m, false};
    }
    default:
      return fail();
  }
}

std::vector<std::string> split_product(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(label[i]);
    if (c == 0xC3 && i + 1 < label.size() && static_cast<unsigned char>(label[i + 1]) == 0x97) {
      parts.push_back(cur);
      cur.clear();
      ++i;
    } else if (c == 'x' || c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(c)) {
      cur.push_back(static_cast<char>(c));
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<Factor> factors_for(const std::string& label) {
  std::vector<Factor> out;
  for (const auto& p : split_product(label)) out.push_back(factor_for(p));
  return out;
}

CoxeterMatrix block_diagonal(const std::vector<Factor>& fs) {
  std::size_t n = 0;
  for (const auto& f : fs) n += f.matrix.size();
  CoxeterMatrix m(n, std::vector<int>(n, 2));
  std::size_t off = 0;
  for (const auto& f : fs) {
    for (std::size_t i = 0; i < f.matrix.size(); ++i)
      for (std::size_t j = 0; j < f.matrix.size(); ++j) m[off + i][off + j] = f.matrix[i][j];
    off += f.matrix.size();
  }
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool is_crystallographic_matrix(const CoxeterMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && m[i][j] != 2 && m[i][j] != 3 && m[i][j] != 4 && m[i][j] != 6) return false;
  return true;
}

std::vector<std::vector<int>> cartan_for(const CoxeterMatrix& m, const std::vector<bool>& flipped_bond_rows) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      int lo = 0;
      int hi = 0;
      switch (m[i][j]) {
        case 2: break;
        case 3: lo = hi = -1; break;
        case 4: lo = -1; hi = -2; break;
        case 6: lo = -1; hi = -3; break;
        default: throw NotCrystallographic("no integral Cartan matrix for m = " + std::to_string(m[i][j]));
      }
      const bool flip = flipped_bond_rows[i];
      a[i][j] = flip ? hi : lo;
      a[j][i] = flip ? lo : hi;
    }
  }
  return a;
}

void validate_matrix(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw CoxeterError("Coxeter matrix must have positive rank");
  if (n > 32) throw CoxeterError("rank above 32 is not supported");
  for (const auto& row : m)
    if (row.size() != n) throw CoxeterError("Coxeter matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 1) throw CoxeterError("Coxeter matrix diagonal must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw CoxeterError("Coxeter matrix is not symmetric");
      if (i != j && m[i][j] < 2) throw CoxeterError("off-diagonal Coxeter matrix entries must be >= 2");
    }
  }
}

void validate_delta(const CoxeterMatrix& m, const std::vector<int>& d) {
  const std::size_t n = m.size();
  if (d.size() != n) throw CoxeterError("delta must list one image per generator");
  for (int x : d)
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw CoxeterError("delta entry out of range");
  for (std::size_t i = 0; i < n; ++i)
    if (static_cast<std::size_t>(d[static_cast<std::size_t>(d[i])]) != i)
      throw CoxeterError("delta is not an involution");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[static_cast<std::size_t>(d[i])][static_cast<std::size_t>(d[j])] != m[i][j])
        throw CoxeterError("delta does not preserve the Coxeter matrix");
}

using Perm = std::vector<std::uint16_t>;

struct Node {
  Perm perm;  // perm[i] = index of w(root_i)
  Word word;
  int length = 0;
  DescentSet left = 0;
  DescentSet right = 0;
  std::unique_ptr<std::atomic<std::int32_t>[]> left_mult;
  std::unique_ptr<std::atomic<std::int32_t>[]> right_mult;
  mutable std::atomic<std::int32_t> inverse{-1};
  mutable std::atomic<std::int32_t> delta_image{-1};
};

}  // namespace

struct CoxeterSystem::Impl {
  int rank = 0;
  CoxeterMatrix matrix;
  std::string label;
  std::vector<int> delta;
  bool twisted = false;
  bool crystallographic = false;
  bool experimental = false;
  std::size_t cap = 0;
  std::vector<std::vector<int>> cartan;

  // Root system.
  std::vector<bool> positive;
  std::vector<std::uint16_t> simple;          // simple[s] = index of alpha_s
  std::vector<std::vector<std::uint16_t>> gen;  // gen[s][i] = index of s(root_i)
  std::size_t positive_count = 0;

  mutable std::shared_mutex mu;
  mutable std::deque<Node> nodes;
  mutable std::unordered_map<std::string, std::uint32_t> index;
  mutable std::atomic<bool> complete{false};
  mutable std::mutex enum_mu;
  mutable std::vector<Element> all_sorted;
  mutable std::unique_ptr<std::atomic<std::uint8_t>[]> bruhat_memo;  // 0 unknown, 1 no, 2 yes
  mutable std::size_t memo_n = 0;

  void build_roots();
  std::string key_of(const Perm& p) const {
    std::string k(static_cast<std::size_t>(rank) * 2, '\0');
    for (int s = 0; s < rank; ++s) {
      const std::uint16_t v = p[simple[static_cast<std::size_t>(s)]];
      k[2 * static_cast<std::size_t>(s)] = static_cast<char>(v & 0xFF);
      k[2 * static_cast<std::size_t>(s) + 1] = static_cast<char>(v >> 8);
    }
    return k;
  }

  const Node& node(Element w) const {
    if (complete.load(std::memory_order_acquire)) return nodes[w.id];
    std::shared_lock lock(mu);
    return nodes[w.id];
  }

  DescentSet left_descents_of(const Perm& p) const {
    // s is a left descent of w iff w^-1(alpha_s) < 0.
    DescentSet d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (positive[i]) continue;
      for (int s = 0; s < rank; ++s)
        if (p[i] == simple[static_cast<std::size_t>(s)]) d |= (1U << s);
    }
    return d;
  }

  Element intern(Perm p) const;
};

void CoxeterSystem::Impl::build_roots() {
  const std::size_t n = static_cast<std::size_t>(rank);
  std::vector<std::vector<double>> form(n, std::vector<double>(n, 0.0));
  // Reflection s_i(b) = b - coef_i(b) alpha_i, coef_i(b) = sum_j k[i][j] b_j.
  if (crystallographic) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) form[i][j] = cartan[i][j];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        form[i][j] = i == j ? 2.0 : -2.0 * std::cos(std::numbers::pi / matrix[i][j]);
  }
  auto key = [](const std::vector<double>& r) {
    std::vector<long long> k(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) k[i] = std::llround(r[i] * 1e6);
    return k;
  };
  std::vector<std::vector<double>> roots;
  std::map<std::vector<long long>, std::uint16_t> lookup;
  auto add = [&](std::vector<double> r) -> std::uint16_t {
    auto k = key(r);
    auto it = lookup.find(k);
    if (it != lookup.end()) return it->second;
    if (roots.size() >= kRootCap)
      throw CoxeterError("root system exceeds " + std::to_string(kRootCap) + " roots; group is not finite");
    const auto id = static_cast<std::uint16_t>(roots.size());
    lookup.emplace(std::move(k), id);
    roots.push_back(std::move(r));
    return id;
  };
  simple.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    simple[i] = add(e);
  }
  for (std::size_t done = 0; done < roots.size(); ++done) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<double> r = roots[done];
      double c = 0;
      for (std::size_t j = 0; j < n; ++j) c += form[s][j] * r[j];
      r[s] -= c;
      add(std::move(r));
      if (roots.size() > 65535) throw CoxeterError("root system too large for this representation");
    }
  }
  // Close under negation too (it already is, since s_i(alpha_i) = -alpha_i).
  positive.resize(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const bool nonneg = std::all_of(roots[i].begin(), roots[i].end(), [](double x) { return x > -1e-9; });
    const bool nonpos = std::all_of(roots[i].begin(), roots[i].end(), [](double x) { return x < 1e-9; });
    if (nonneg == nonpos) throw CoxeterError("root with mixed signs; matrix does not define a finite Coxeter group");
    positive[i] = nonneg;
    if (nonneg) ++positive_count;
  }
  gen.assign(n, std::vector<std::uint16_t>(roots.size()));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      std::vector<double> r = roots[i];
      double c = 0;
      for (std::size_t j = 0; j < n; ++j) c += form[s][j] * r[j];
      r[s] -= c;
      auto it = lookup.find(key(r));
      if (it == lookup.end()) throw CoxeterError("root system not closed under reflections");
      gen[s][i] = it->second;
    }
  }
}

Element CoxeterSystem::Impl::intern(Perm p) const {
  std::string k = key_of(p);
  {
    std::shared_lock lock(mu);
    auto it = index.find(k);
    if (it != index.end()) return Element{it->second};
  }
  if (complete.load(std::memory_order_acquire))
    throw CoxeterError("internal error: element missing from a complete intern table");
  int len = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (positive[i] && !positive[p[i]]) ++len;
  DescentSet right = 0;
  for (int s = 0; s < rank; ++s)
    if (!positive[p[simple[static_cast<std::size_t>(s)]]]) right |= (1U << s);
  const DescentSet left = left_descents_of(p);
  // ShortLex normal form: strip the smallest left descent repeatedly.
  Word word;
  {
    Perm q = p;
    DescentSet d = left;
    while (d != 0) {
      const int s = std::countr_zero(d);
      word.push_back(s);
      for (auto& x : q) x = gen[static_cast<std::size_t>(s)][x];
      d = left_descents_of(q);
    }
  }
  std::unique_lock lock(mu);
  auto it = index.find(k);
  if (it != index.end()) return Element{it->second};
  if (nodes.size() >= cap)
    throw CoxeterError("element cap of " + std::to_string(cap) + " exceeded");
  const auto id = static_cast<std::uint32_t>(nodes.size());
  Node& nd = nodes.emplace_back();
  nd.perm = std::move(p);
  nd.word = std::move(word);
  nd.length = len;
  nd.left = left;
  nd.right = right;
  nd.left_mult = std::make_unique<std::atomic<std::int32_t>[]>(static_cast<std::size_t>(rank));
  nd.right_mult = std::make_unique<std::atomic<std::int32_t>[]>(static_cast<std::size_t>(rank));
  for (int s = 0; s < rank; ++s) {
    nd.left_mult[s].store(-1);
    nd.right_mult[s].store(-1);
  }
  index.emplace(std::move(k), id);
  return Element{id};
}

CoxeterSystem::CoxeterSystem(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
CoxeterSystem::CoxeterSystem(CoxeterSystem&&) noexcept = default;
CoxeterSystem& CoxeterSystem::operator=(CoxeterSystem&&) noexcept = default;
CoxeterSystem::~CoxeterSystem() = default;

CoxeterMatrix coxeter_matrix_for_label(const std::string& label) { return block_diagonal(factors_for(label)); }

std::vector<int> parse_delta(const std::string& text) {
  std::string body = text;
  const std::string prefix = "delta=";
  if (body.rfind(prefix, 0) == 0) body = body.substr(prefix.size());
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw CoxeterError("malformed delta '" + text + "'");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw CoxeterError("malformed delta '" + text + "'");
  return out;
}

std::string format_word(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

namespace {

CoxeterSystem::Impl* fresh_impl(CoxeterMatrix matrix, const SystemOptions& opt, std::string label,
                                const std::vector<bool>& flips) {
  validate_matrix(matrix);
  auto impl = std::make_unique<CoxeterSystem::Impl>();
  impl->rank = static_cast<int>(matrix.size());
  impl->matrix = std::move(matrix);
  impl->label = std::move(label);
  impl->crystallographic = is_crystallographic_matrix(impl->matrix);
  impl->experimental = opt.experimental;
  if (!impl->crystallographic && !opt.experimental)
    throw CoxeterError("non-crystallographic type '" + impl->label + "' requires experimental mode");
  impl->cap = opt.element_cap;
  if (opt.delta) {
    validate_delta(impl->matrix, *opt.delta);
    impl->delta = *opt.delta;
  } else {
    impl->delta.resize(impl->matrix.size());
    for (std::size_t i = 0; i < impl->delta.size(); ++i) impl->delta[i] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < impl->delta.size(); ++i)
    if (impl->delta[i] != static_cast<int>(i)) impl->twisted = true;
  if (impl->crystallographic) impl->cartan = cartan_for(impl->matrix, flips);
  impl->build_roots();
  Perm id(impl->positive.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint16_t>(i);
  impl->intern(std::move(id));
  return impl.release();
}

}  // namespace

CoxeterSystem CoxeterSystem::from_label(const std::string& label, SystemOptions options) {
  const auto fs = factors_for(label);
  std::vector<bool> flips;
  for (const auto& f : fs)
    for (std::size_t i = 0; i < f.matrix.size(); ++i) flips.push_back(f.flip);
  return CoxeterSystem(std::unique_ptr<Impl>(fresh_impl(block_diagonal(fs), options, label, flips)));
}

CoxeterSystem CoxeterSystem::from_matrix(CoxeterMatrix matrix, SystemOptions options, std::string label) {
  if (!options.declared_finite)
    throw CoxeterError("raw Coxeter matrices must be declared finite by the caller");
  std::vector<bool> flips(matrix.size(), false);
  return CoxeterSystem(std::unique_ptr<Impl>(fresh_impl(std::move(matrix), options, std::move(label), flips)));
}

int CoxeterSystem::rank() const { return impl_->rank; }
int CoxeterSystem::m(int s, int t) const { return impl_->matrix[s][t]; }
const CoxeterMatrix& CoxeterSystem::coxeter_matrix() const { return impl_->matrix; }
const std::string& CoxeterSystem::type_label() const { return impl_->label; }
bool CoxeterSystem::crystallographic() const { return impl_->crystallographic; }
bool CoxeterSystem::experimental() const { return impl_->experimental; }
const std::vector<int>& CoxeterSystem::delta() const { return impl_->delta; }
bool CoxeterSystem::twisted() const { return impl_->twisted; }

const std::vector<std::vector<int>>& CoxeterSystem::cartan_matrix() const {
  if (!impl_->crystallographic) throw NotCrystallographic("type '" + impl_->label + "' is not crystallographic");
  return impl_->cartan;
}

Element CoxeterSystem::generator(int s) const { return mult_gen(identity(), s, Side::Left); }

Element CoxeterSystem::mult_gen(Element w, int s, Side side) const {
  if (s < 0 || s >= impl_->rank) throw CoxeterError("generator index out of range");
  const Node& nd = impl_->node(w);
  auto& slot = side == Side::Left ? nd.left_mult[s] : nd.right_mult[s];
  const std::int32_t cached = slot.load(std::memory_order_acquire);
  if (cached >= 0) return Element{static_cast<std::uint32_t>(cached)};
  const auto& g = impl_->gen[static_cast<std::size_t>(s)];
  Perm p(nd.perm.size());
  if (side == Side::Left) {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = g[nd.perm[i]];
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = nd.perm[g[i]];
  }
  const Element r = impl_->intern(std::move(p));
  slot.store(static_cast<std::int32_t>(r.id), std::memory_order_release);
  return r;
}

Element CoxeterSystem::from_word(std::span<const int> word) const {
  Element w = identity();
  for (int s : word) w = mult_gen(w, s, Side::Right);
  return w;
}

Element CoxeterSystem::multiply(Element a, Element b) const {
  for (int s : word(b)) a = mult_gen(a, s, Side::Right);
  return a;
}

Element CoxeterSystem::inverse(Element w) const {
  const Node& nd = impl_->node(w);
  const std::int32_t cached = nd.inverse.load(std::memory_order_acquire);
  if (cached >= 0) return Element{static_cast<std::uint32_t>(cached)};
  Element r = identity();
  for (int s : nd.word) r = mult_gen(r, s, Side::Left);
  nd.inverse.store(static_cast<std::int32_t>(r.id), std::memory_order_release);
  return r;
}

Element CoxeterSystem::apply_delta(Element w) const {
  if (!impl_->twisted) return w;
  const Node& nd = impl_->node(w);
  const std::int32_t cached = nd.delta_image.load(std::memory_order_acquire);
  if (cached >= 0) return Element{static_cast<std::uint32_t>(cached)};
  Element r = identity();
  for (int s : nd.word) r = mult_gen(r, impl_->delta[static_cast<std::size_t>(s)], Side::Right);
  nd.delta_image.store(static_cast<std::int32_t>(r.id), std::memory_order_release);
  return r;
}

int CoxeterSystem::length(Element w) const { return impl_->node(w).length; }
const Word& CoxeterSystem::word(Element w) const { return impl_->node(w).word; }

DescentSet CoxeterSystem::descents(Element w, Side side) const {
  const Node& nd = impl_->node(w);
  return side == Side::Left ? nd.left : nd.right;
}

int CoxeterSystem::first_descent(Element w, Side side) const {
  const DescentSet d = descents(w, side);
  return d == 0 ? -1 : std::countr_zero(d);
}

bool CoxeterSystem::bruhat_leq(Element y, Element w) const {
  // Descent recursion: with sw < w, y <= w iff (sy < y ? sy <= sw : y <= sw).
  const bool complete = impl_->complete.load(std::memory_order_acquire);
  auto* memo = complete ? impl_->bruhat_memo.get() : nullptr;
  const std::size_t n = complete ? impl_->memo_n : 0;
  const Element y0 = y;
  const Element w0 = w;
  bool result = false;
  while (true) {
    if (memo) {
      const std::uint8_t m = memo[static_cast<std::size_t>(y.id) * n + w.id].load(std::memory_order_relaxed);
      if (m != 0) {
        result = m == 2;
        break;
      }
    }
    if (y == w) {
      result = true;
      break;
    }
    const int ly = length(y);
    const int lw = length(w);
    if (ly >= lw) {
      result = false;
      break;
    }
    if (ly == 0) {
      result = true;
      break;
    }
    const int s = first_descent(w, Side::Left);
    if (is_descent(y, s, Side::Left)) y = mult_gen(y, s, Side::Left);
    w = mult_gen(w, s, Side::Left);
  }
  if (memo) memo[static_cast<std::size_t>(y0.id) * n + w0.id].store(result ? 2 : 1, std::memory_order_relaxed);
  return result;
}

std::vector<Element> CoxeterSystem::enumerate_up_to_length(int max_length) const {
  std::vector<Element> out{identity()};
  std::vector<Element> level{identity()};
  for (int len = 0; len < max_length && !level.empty(); ++len) {
    std::vector<Element> next;
    for (Element w : level) {
      for (int s = 0; s < rank(); ++s) {
        if (is_descent(w, s, Side::Left)) continue;
        next.push_back(mult_gen(w, s, Side::Left));
      }
    }
    std::sort(next.begin(), next.end(), [&](Element a, Element b) { return word(a) < word(b); });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    if (out.size() > impl_->cap)
      throw CoxeterError("enumeration exceeded the element cap of " + std::to_string(impl_->cap));
    level = std::move(next);
  }
  return out;
}

const std::vector<Element>& CoxeterSystem::enumerate_all() const {
  if (impl_->complete.load(std::memory_order_acquire)) return impl_->all_sorted;
  std::lock_guard lock(impl_->enum_mu);
  if (impl_->complete.load(std::memory_order_acquire)) return impl_->all_sorted;
  auto all = enumerate_up_to_length(static_cast<int>(impl_->positive_count));
  {
    std::shared_lock read(impl_->mu);
    if (impl_->nodes.size() != all.size())
      throw CoxeterError("internal error: intern table disagrees with enumeration");
  }
  // Fill the multiplication caches so that later queries never intern.
  for (Element w : all)
    for (int s = 0; s < rank(); ++s) {
      mult_gen(w, s, Side::Left);
      mult_gen(w, s, Side::Right);
    }
  for (Element w : all) {
    inverse(w);
    apply_delta(w);
  }
  impl_->all_sorted = std::move(all);
  const std::size_t n = impl_->all_sorted.size();
  if (n <= kBruhatMemoCap) {
    impl_->memo_n = n;
    impl_->bruhat_memo = std::make_unique<std::atomic<std::uint8_t>[]>(n * n);
    for (std::size_t i = 0; i < n * n; ++i) impl_->bruhat_memo[i].store(0, std::memory_order_relaxed);
  }
  impl_->complete.store(true, std::memory_order_release);
  return impl_->all_sorted;
}

bool CoxeterSystem::fully_enumerated() const { return impl_->complete.load(std::memory_order_acquire); }

std::size_t CoxeterSystem::interned_count() const {
  std::shared_lock lock(impl_->mu);
  return impl_->nodes.size();
}

bool CoxeterSystem::is_twisted_involution(Element w) const { return apply_delta(w) == inverse(w); }

std::vector<Element> CoxeterSystem::twisted_involutions() const {
  std::vector<Element> out;
  for (Element w : enumerate_all())
    if (is_twisted_involution(w)) out.push_back(w);
  return out;
}

RationalMatrix identity_matrix(int n) {
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t p = k ? b[0].size() : 0;
  RationalMatrix c(n, std::vector<Rational>(p, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

int matrix_rank(RationalMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

ReflectionRep CoxeterSystem::reflection_rep() const {
  const auto& a = cartan_matrix();
  ReflectionRep rep;
  const int n = rank();
  for (int s = 0; s < n; ++s) {
    // s(alpha_j) = alpha_j - a[s][j] alpha_s
    RationalMatrix m = identity_matrix(n);
    for (int j = 0; j < n; ++j) m[s][j] -= a[s][j];
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

RationalMatrix CoxeterSystem::twisted_action_matrix(Element w) const {
  const auto rep = reflection_rep();
  const int n = rank();
  RationalMatrix m = identity_matrix(n);
  for (int s : word(w)) m = matrix_product(m, rep.matrices[static_cast<std::size_t>(s)]);
  if (twisted()) {
    const auto& a = cartan_matrix();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[delta(i)][delta(j)] != a[i][j])
          throw NotCrystallographic("diagram automorphism does not preserve the Cartan matrix");
    RationalMatrix p(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int j = 0; j < n; ++j) p[delta(j)][j] = 1;
    m = matrix_product(m, p);
  }
  return m;
}

int CoxeterSystem::h_value(Element w) const {
  RationalMatrix m = twisted_action_matrix(w);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] += 1;
  return rank() - matrix_rank(std::move(m));
}

}  // namespace sigmakl
