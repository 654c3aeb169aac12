#include "hcomm/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>

#include "hcomm/error.hpp"
#include "hcomm/exact.hpp"

namespace hcomm {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Abelian: return "abelian";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::Symmetric: return "symmetric";
    case GroupKind::Quaternion: return "quaternion";
    case GroupKind::Heisenberg: return "heisenberg";
    case GroupKind::Product: return "product";
    case GroupKind::Semidirect: return "semidirect";
    case GroupKind::Quotient: return "quotient";
  }
  return "?";
}

struct FiniteGroup::CentralizerCache {
  std::once_flag once;
  std::vector<ElementSet> sets;
};

FiniteGroup::FiniteGroup(GroupKind kind, std::string name, std::size_t order, std::vector<std::uint16_t> table,
                         std::vector<std::string> labels, std::shared_ptr<const SemidirectLayout> layout)
    : kind_(kind),
      name_(std::move(name)),
      order_(order),
      table_(std::move(table)),
      labels_(std::move(labels)),
      layout_(std::move(layout)),
      cache_(std::make_shared<CentralizerCache>()) {
  if (order_ == 0 || table_.size() != order_ * order_ || labels_.size() != order_) {
    fail(ErrorCode::InternalInconsistency, "malformed multiplication table for " + name_);
  }
  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    bool is_identity = true;
    for (std::size_t x = 0; x < order_ && is_identity; ++x) {
      is_identity = table_[e * order_ + x] == x && table_[x * order_ + e] == x;
    }
    if (is_identity) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) fail(ErrorCode::InternalInconsistency, name_ + " has no identity element");
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == identity_) {
        inverse_[a] = static_cast<Element>(b);
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) fail(ErrorCode::InternalInconsistency, name_ + ": element " + std::to_string(a) + " has no inverse");
  }
}

Element FiniteGroup::power(Element a, std::uint64_t k) const noexcept {
  Element result = identity_;
  Element base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Element a) const noexcept {
  std::uint64_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

const ElementSet& FiniteGroup::centralizer_set(Element g) const {
  std::call_once(cache_->once, [this] {
    auto& sets = cache_->sets;
    sets.assign(order_, ElementSet(order_));
    for (Element a = 0; a < order_; ++a) {
      for (Element b = a; b < order_; ++b) {
        if (commute(a, b)) {
          sets[a].insert(b);
          sets[b].insert(a);
        }
      }
    }
  });
  return cache_->sets.at(g);
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    if (centralizer_set(a).count() != order_) return false;
  }
  return true;
}

// --- axioms -----------------------------------------------------------------

void check_group_axioms(const FiniteGroup& g, std::uint64_t seed) {
  const std::size_t n = g.order();
  const auto bad = [&](const std::string& what) { fail(ErrorCode::InternalInconsistency, g.name() + ": " + what); };
  for (Element a = 0; a < n; ++a) {
    ElementSet row(n), col(n);
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      const Element ba = g.mul(b, a);
      if (ab >= n || ba >= n) bad("table entry out of range");
      row.insert(ab);
      col.insert(ba);
    }
    if (row.count() != n || col.count() != n) bad("table is not a Latin square");
    if (g.mul(g.identity(), a) != a || g.mul(a, g.identity()) != a) bad("identity law fails");
    if (g.mul(a, g.inv(a)) != g.identity() || g.mul(g.inv(a), a) != g.identity()) bad("inverse law fails");
  }
  if (n <= 128) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        const Element ab = g.mul(a, b);
        for (Element c = 0; c < n; ++c) {
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) bad("associativity fails");
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int t = 0; t < 100000; ++t) {
      const Element a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) bad("associativity fails");
    }
  }
}

// --- constructors -----------------------------------------------------------

namespace {

std::vector<std::uint64_t> decode(std::uint64_t index, const std::vector<std::uint64_t>& radix) {
  std::vector<std::uint64_t> digits(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    digits[i] = index % radix[i];
    index /= radix[i];
  }
  return digits;
}

std::uint64_t encode(const std::vector<std::uint64_t>& digits, const std::vector<std::uint64_t>& radix) {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) index = index * radix[i] + digits[i];
  return index;
}

std::uint64_t product_of(const std::vector<std::uint64_t>& factors) {
  return std::accumulate(factors.begin(), factors.end(), std::uint64_t{1}, std::multiplies<>());
}

std::string tuple_label(const std::vector<std::uint64_t>& digits) {
  if (digits.size() == 1) return std::to_string(digits.front());
  std::string s = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(digits[i]);
  }
  return s + ")";
}

// Mixed-radix addition table for Z_{d1} x ... x Z_{dk}.
FiniteGroup build_abelian(GroupKind kind, std::string name, const std::vector<std::uint64_t>& factors) {
  const std::size_t n = product_of(factors);
  std::vector<std::uint16_t> table(n * n);
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::uint64_t>> digits(n);
  for (std::size_t i = 0; i < n; ++i) {
    digits[i] = decode(i, factors);
    labels[i] = tuple_label(digits[i]);
  }
  std::vector<std::uint64_t> sum(factors.size());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t f = 0; f < factors.size(); ++f) sum[f] = (digits[a][f] + digits[b][f]) % factors[f];
      table[a * n + b] = static_cast<std::uint16_t>(encode(sum, factors));
    }
  }
  return FiniteGroup(kind, std::move(name), n, std::move(table), std::move(labels));
}

std::vector<std::uint64_t> cyclic_factors(const GroupSpec& spec, const char* role) {
  if (spec.kind == GroupSpec::Kind::Cyclic || spec.kind == GroupSpec::Kind::Abelian) return spec.params;
  fail(ErrorCode::InvalidSpec, std::string("semidirect ") + role + " must be cyclic(...) or abelian(...), got " +
                                   to_string(spec));
}

using Permutation = std::vector<Element>;

Permutation matrix_action(const IntMatrix& m, const std::vector<std::uint64_t>& a_factors) {
  const std::size_t k = a_factors.size();
  if (m.size() != k) fail(ErrorCode::BadAction, "action matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  for (const auto& row : m) {
    if (row.size() != k) fail(ErrorCode::BadAction, "action matrix must be square of size " + std::to_string(k));
  }
  // Column j is the image of the j-th cyclic generator; its order must divide d_j.
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto di = static_cast<std::int64_t>(a_factors[i]);
      const auto dj = static_cast<std::int64_t>(a_factors[j]);
      if (((m[i][j] % di) * (dj % di)) % di != 0) {
        fail(ErrorCode::BadAction, "action matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") does not define a homomorphism of the declared abelian group");
      }
    }
  }
  const std::size_t n = product_of(a_factors);
  Permutation image(n);
  ElementSet seen(n);
  std::vector<std::uint64_t> out(k);
  for (std::size_t a = 0; a < n; ++a) {
    const auto v = decode(a, a_factors);
    for (std::size_t i = 0; i < k; ++i) {
      const auto d = static_cast<std::int64_t>(a_factors[i]);
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc = (acc + (m[i][j] % d) * static_cast<std::int64_t>(v[j])) % d;
      out[i] = static_cast<std::uint64_t>((acc + d) % d);
    }
    image[a] = static_cast<Element>(encode(out, a_factors));
    seen.insert(image[a]);
  }
  if (seen.count() != n) fail(ErrorCode::BadAction, "action matrix is not invertible on A");
  return image;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Permutation identity_perm(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Element{0});
  return p;
}

std::shared_ptr<SemidirectLayout> semidirect_layout(const std::vector<std::uint64_t>& a_factors,
                                                    const std::vector<std::uint64_t>& k_factors,
                                                    const ActionSpec& action) {
  auto layout = std::make_shared<SemidirectLayout>();
  layout->a_factors = a_factors;
  layout->k_factors = k_factors;
  const std::size_t a_order = product_of(a_factors);
  const std::size_t k_order = product_of(k_factors);
  if (action.inversion) {
    IntMatrix minus_identity(a_factors.size(), std::vector<std::int64_t>(a_factors.size(), 0));
    for (std::size_t i = 0; i < a_factors.size(); ++i) minus_identity[i][i] = -1;
    layout->generator_matrices.assign(k_factors.size(), minus_identity);
  } else {
    layout->generator_matrices = action.matrices;
  }
  if (layout->generator_matrices.size() != k_factors.size()) {
    fail(ErrorCode::BadAction, "expected " + std::to_string(k_factors.size()) + " action matrices (one per K generator), got " +
                                   std::to_string(layout->generator_matrices.size()));
  }
  std::vector<Permutation> gens;
  for (const auto& m : layout->generator_matrices) gens.push_back(matrix_action(m, a_factors));
  const Permutation id = identity_perm(a_order);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    Permutation p = id;
    for (std::uint64_t e = 0; e < k_factors[j]; ++e) p = compose(gens[j], p);
    if (p != id) {
      fail(ErrorCode::BadAction, "action of K generator " + std::to_string(j) + " does not have order dividing " +
                                     std::to_string(k_factors[j]));
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) {
        fail(ErrorCode::BadAction, "actions of K generators " + std::to_string(i) + " and " + std::to_string(j) +
                                       " do not commute");
      }
    }
  }
  layout->action.assign(k_order, id);
  for (std::size_t k = 1; k < k_order; ++k) {
    auto digits = decode(k, k_factors);
    std::size_t j = digits.size();
    while (digits[j - 1] == 0) --j;
    --digits[j - 1];
    layout->action[k] = compose(gens[j - 1], layout->action[encode(digits, k_factors)]);
  }
  return layout;
}

FiniteGroup build_semidirect(GroupKind kind, std::string name, std::shared_ptr<SemidirectLayout> layout,
                             bool dihedral_labels) {
  const auto& af = layout->a_factors;
  const auto& kf = layout->k_factors;
  const std::size_t a_order = layout->a_order();
  const std::size_t k_order = layout->k_order();
  const std::size_t n = a_order * k_order;
  std::vector<std::vector<std::uint64_t>> a_digits(a_order), k_digits(k_order);
  for (std::size_t a = 0; a < a_order; ++a) a_digits[a] = decode(a, af);
  for (std::size_t k = 0; k < k_order; ++k) k_digits[k] = decode(k, kf);
  const auto add = [](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
                      const std::vector<std::uint64_t>& radix) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) index = index * radix[i] + (x[i] + y[i]) % radix[i];
    return index;
  };
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a1 = 0; a1 < a_order; ++a1) {
    for (std::size_t k1 = 0; k1 < k_order; ++k1) {
      const std::size_t x = a1 * k_order + k1;
      for (std::size_t a2 = 0; a2 < a_order; ++a2) {
        const auto acted = layout->action[k1][a2];
        const auto a = add(a_digits[a1], a_digits[acted], af);
        for (std::size_t k2 = 0; k2 < k_order; ++k2) {
          const auto k = add(k_digits[k1], k_digits[k2], kf);
          table[x * n + a2 * k_order + k2] = static_cast<std::uint16_t>(a * k_order + k);
        }
      }
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < a_order; ++a) {
    for (std::size_t k = 0; k < k_order; ++k) {
      if (dihedral_labels) {
        std::string s = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
        if (k == 1) s += "s";
        labels[a * k_order + k] = s.empty() ? "e" : s;
      } else {
        labels[a * k_order + k] = "(" + tuple_label(a_digits[a]) + "|" + tuple_label(k_digits[k]) + ")";
      }
    }
  }
  return FiniteGroup(kind, std::move(name), n, std::move(table), std::move(labels), std::move(layout));
}

FiniteGroup build_symmetric(std::uint64_t degree, std::string name) {
  const auto d = static_cast<std::size_t>(degree);
  std::vector<std::uint32_t> codes;
  Permutation p = identity_perm(d);
  const auto code_of = [d](const Permutation& perm) {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < d; ++i) c |= perm[i] << (3 * i);
    return c;
  };
  std::vector<Permutation> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::uint16_t> index_of(std::size_t{1} << (3 * d), 0);
  for (std::size_t i = 0; i < n; ++i) index_of[code_of(perms[i])] = static_cast<std::uint16_t>(i);
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // (a b)(x) = a(b(x))
      std::uint32_t c = 0;
      for (std::size_t x = 0; x < d; ++x) c |= perms[a][perms[b][x]] << (3 * x);
      table[a * n + b] = index_of[c];
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    std::vector<bool> done(d, false);
    for (std::size_t start = 0; start < d; ++start) {
      if (done[start] || perms[i][start] == start) continue;
      s += "(";
      std::size_t x = start;
      bool first = true;
      while (!done[x]) {
        done[x] = true;
        s += (first ? "" : " ") + std::to_string(x + 1);
        first = false;
        x = perms[i][x];
      }
      s += ")";
    }
    labels[i] = s.empty() ? "()" : s;
  }
  return FiniteGroup(GroupKind::Symmetric, std::move(name), n, std::move(table), std::move(labels));
}

FiniteGroup build_quaternion8() {
  // Index 2u + s encodes (-1)^s * unit[u], unit = 1, i, j, k.
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::uint16_t> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2 + y % 2 + unit_sign[u][v]) % 2;
      table[x * 8 + y] = static_cast<std::uint16_t>(2 * unit_prod[u][v] + sign);
    }
  }
  return FiniteGroup(GroupKind::Quaternion, "quaternion8", 8, std::move(table),
                     {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup build_heisenberg(std::uint64_t p, std::string name) {
  const std::size_t n = p * p * p;
  std::vector<std::uint16_t> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint64_t a = x / (p * p), b = (x / p) % p, c = x % p;
    labels[x] = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint64_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const std::uint64_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      table[x * n + y] = static_cast<std::uint16_t>(ra * p * p + rb * p + rc);
    }
  }
  return FiniteGroup(GroupKind::Heisenberg, std::move(name), n, std::move(table), std::move(labels));
}

FiniteGroup product_group(const FiniteGroup& g, const FiniteGroup& h, GroupKind kind, const std::string& name,
                          std::size_t order_cap) {
  const std::size_t ng = g.order(), nh = h.order();
  const std::size_t n = ng * nh;
  if (n > order_cap) fail(ErrorCode::OrderCap, name + " has order " + std::to_string(n) + " > cap " + std::to_string(order_cap));
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto gx = static_cast<Element>(x / nh), hx = static_cast<Element>(x % nh);
    for (std::size_t y = 0; y < n; ++y) {
      const auto gy = static_cast<Element>(y / nh), hy = static_cast<Element>(y % nh);
      table[x * n + y] = static_cast<std::uint16_t>(std::size_t{g.mul(gx, gy)} * nh + h.mul(hx, hy));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = "(" + g.label(static_cast<Element>(x / nh)) + "," + h.label(static_cast<Element>(x % nh)) + ")";
  }
  return FiniteGroup(kind, name, n, std::move(table), std::move(labels));
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidSpec, what);
}

FiniteGroup build(const GroupSpec& spec, const GroupOptions& options) {
  using K = GroupSpec::Kind;
  const std::string name = to_string(spec);
  const auto order = spec_order(spec);
  switch (spec.kind) {
    case K::Cyclic:
    case K::Dihedral:
    case K::Symmetric:
    case K::Heisenberg:
      require(spec.params.size() == 1, name + ": expected one parameter");
      break;
    default:
      break;
  }
  switch (spec.kind) {
    case K::Cyclic:
      require(spec.params[0] >= 1, "cyclic(n) needs n >= 1");
      break;
    case K::Abelian:
      require(!spec.params.empty(), "abelian needs at least one factor");
      for (auto d : spec.params) require(d >= 1, "abelian factors must be >= 1");
      break;
    case K::Dihedral:
      require(spec.params[0] >= 3, "dihedral(n) needs n >= 3 (order 2n), got " + name);
      break;
    case K::Symmetric:
      require(spec.params[0] >= 1 && spec.params[0] <= 7, "symmetric(n) needs 1 <= n <= 7, got " + name);
      break;
    case K::Heisenberg:
      require(spec.params[0] > 2 && is_prime(spec.params[0]), "heisenberg(p) needs an odd prime p, got " + name);
      break;
    case K::Product:
    case K::Semidirect:
      require(spec.children.size() == 2, name + ": expected two factors");
      break;
    case K::Quaternion8:
      break;
  }
  if (order > options.order_cap) {
    fail(ErrorCode::OrderCap, name + " has order " + std::to_string(order) + " > cap " + std::to_string(options.order_cap));
  }
  switch (spec.kind) {
    case K::Cyclic: return build_abelian(GroupKind::Cyclic, name, spec.params);
    case K::Abelian: return build_abelian(GroupKind::Abelian, name, spec.params);
    case K::Dihedral: {
      const auto n = spec.params[0];
      auto layout = semidirect_layout({n}, {2}, ActionSpec{true, {}});
      return build_semidirect(GroupKind::Dihedral, name, std::move(layout), true);
    }
    case K::Symmetric: return build_symmetric(spec.params[0], name);
    case K::Quaternion8: return build_quaternion8();
    case K::Heisenberg: return build_heisenberg(spec.params[0], name);
    case K::Product: {
      const FiniteGroup g = build(spec.children[0], options);
      const FiniteGroup h = build(spec.children[1], options);
      return product_group(g, h, GroupKind::Product, name, options.order_cap);
    }
    case K::Semidirect: {
      const auto a_factors = cyclic_factors(spec.children[0], "normal factor A");
      const auto k_factors = cyclic_factors(spec.children[1], "complement K");
      for (auto d : a_factors) require(d >= 1, "factor orders must be >= 1");
      for (auto d : k_factors) require(d >= 1, "factor orders must be >= 1");
      auto layout = semidirect_layout(a_factors, k_factors, spec.action);
      return build_semidirect(GroupKind::Semidirect, name, std::move(layout), false);
    }
  }
  fail(ErrorCode::InvalidSpec, "unknown group kind");
}

}  // namespace

FiniteGroup make_group(const GroupSpec& spec, const GroupOptions& options) {
  FiniteGroup g = build(spec, options);
  check_group_axioms(g, options.seed);
  return g;
}

FiniteGroup make_group(std::string_view spec_text, const GroupOptions& options) {
  return make_group(parse_spec(spec_text), options);
}

FiniteGroup make_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap) {
  return product_group(g, h, GroupKind::Product, "product(" + g.name() + ", " + h.name() + ")", order_cap);
}

// --- queries ----------------------------------------------------------------

SubgroupSet whole_group(const FiniteGroup& g) { return {ElementSet::full(g.order())}; }

SubgroupSet trivial_subgroup(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(g.identity());
  return {s};
}

SubgroupSet centralizer(const FiniteGroup& g, Element x) {
  if (x >= g.order()) {
    fail(ErrorCode::IndexOutOfRange, "element " + std::to_string(x) + " not in group of order " + std::to_string(g.order()));
  }
  return {g.centralizer_set(x)};
}

ElementSet centralizer_of_set(const FiniteGroup& g, const ElementSet& h) {
  ElementSet c = ElementSet::full(g.order());
  h.for_each([&](Element x) { c &= g.centralizer_set(x); });
  return c;
}

SubgroupSet center(const FiniteGroup& g) { return {centralizer_of_set(g, ElementSet::full(g.order()))}; }

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ElementSet assigned(n);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    if (assigned.contains(x)) continue;
    ElementSet orbit(n);
    for (Element h = 0; h < n; ++h) orbit.insert(g.conj(h, x));
    assigned |= orbit;
    classes.push_back(orbit.elements());
  }
  return classes;
}

SubgroupSet subgroup_closure(const FiniteGroup& g, std::span<const Element> generators) {
  ElementSet members(g.order());
  members.insert(g.identity());
  std::vector<Element> queue{g.identity()};
  for (auto x : generators) {
    if (x >= g.order()) fail(ErrorCode::IndexOutOfRange, "generator " + std::to_string(x) + " out of range");
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto s : generators) {
      const Element y = g.mul(queue[head], s);
      if (!members.contains(y)) {
        members.insert(y);
        queue.push_back(y);
      }
    }
  }
  return {members};
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(g.identity())) return false;
  const auto elems = s.elements();
  for (auto a : elems) {
    for (auto b : elems) {
      if (!s.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

bool is_abelian(const FiniteGroup& g, const SubgroupSet& s) {
  bool ok = true;
  s.members.for_each([&](Element x) { ok = ok && s.members.is_subset_of(g.centralizer_set(x)); });
  return ok;
}

bool is_normal(const FiniteGroup& g, const SubgroupSet& s) {
  const auto elems = s.members.elements();
  for (Element h = 0; h < g.order(); ++h) {
    for (auto x : elems) {
      if (!s.contains(g.conj(h, x))) return false;
    }
  }
  return true;
}

SubgroupSet derived_subgroup(const FiniteGroup& g) {
  ElementSet commutators(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) commutators.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  }
  const auto gens = commutators.elements();
  return subgroup_closure(g, gens);
}

FiniteGroup make_quotient(const FiniteGroup& g, const SubgroupSet& normal) {
  if (normal.members.universe() != g.order() || !is_subgroup(g, normal.members)) {
    fail(ErrorCode::InvalidArgument, "quotient by a set that is not a subgroup");
  }
  if (!is_normal(g, normal)) fail(ErrorCode::NotNormal, "subgroup of order " + std::to_string(normal.order()) + " is not normal in " + g.name());
  const std::size_t n = g.order();
  const auto members = normal.members.elements();
  std::vector<std::int64_t> coset(n, -1);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    for (auto m : members) coset[g.mul(x, m)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }
  const std::size_t q = reps.size();
  std::vector<std::uint16_t> table(q * q);
  std::vector<std::string> labels(q);
  for (std::size_t i = 0; i < q; ++i) {
    labels[i] = g.label(reps[i]) + "N";
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = static_cast<std::uint16_t>(coset[g.mul(reps[i], reps[j])]);
  }
  return FiniteGroup(GroupKind::Quotient, g.name() + "/N" + std::to_string(normal.order()), q, std::move(table),
                     std::move(labels));
}

}  // namespace hcomm
