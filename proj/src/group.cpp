#include "waring/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "waring/kernels.hpp"
#include "waring/linalg.hpp"

namespace waring {
namespace {

constexpr unsigned kMaxWidth = 256;

void prime_power(uint64_t q, uint32_t& p, uint32_t& f) {
  if (q < 2) throw std::invalid_argument("field size must be a prime power >= 2");
  auto fac = factorize(q);
  if (fac.size() != 1) throw std::invalid_argument("field size must be a prime power");
  p = static_cast<uint32_t>(fac[0].first);
  f = fac[0].second;
}

BigInt ipow(const BigInt& b, unsigned e) { return boost::multiprecision::pow(b, e); }

std::string kind_prefix(GroupKind k) {
  switch (k) {
    case GroupKind::Cyclic: return "Cyclic";
    case GroupKind::Sym: return "Sym";
    case GroupKind::Alt: return "Alt";
    case GroupKind::SL: return "SL";
    case GroupKind::PSL: return "PSL";
    case GroupKind::SU: return "SU";
    case GroupKind::PSU: return "PSU";
    case GroupKind::Sp: return "Sp";
    case GroupKind::PSp: return "PSp";
    case GroupKind::OmegaPlusSampler: return "OmegaPlus";
    case GroupKind::Quotient: return "Quotient";
  }
  return "?";
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  std::smatch m;
  GroupSpec s;
  static const std::regex perm_re(R"(^(A|Alt|S|Sym|C|Cyclic)\(?(\d+)\)?$)");
  static const std::regex mat_re(R"(^(PSL|SL|PSU|SU|PSp|Sp|OmegaPlus|O\+)(\d*)\((\d+)(?:,(\d+))?\)$)");
  if (std::regex_match(text, m, perm_re)) {
    std::string k = m[1];
    s.kind = (k == "A" || k == "Alt") ? GroupKind::Alt
             : (k == "S" || k == "Sym") ? GroupKind::Sym
                                        : GroupKind::Cyclic;
    s.n = static_cast<unsigned>(std::stoul(m[2]));
    s.q = 0;
  } else if (std::regex_match(text, m, mat_re)) {
    std::string k = m[1];
    static const std::pair<const char*, GroupKind> names[] = {
        {"PSL", GroupKind::PSL}, {"SL", GroupKind::SL},   {"PSU", GroupKind::PSU},
        {"SU", GroupKind::SU},   {"PSp", GroupKind::PSp}, {"Sp", GroupKind::Sp},
        {"OmegaPlus", GroupKind::OmegaPlusSampler}, {"O+", GroupKind::OmegaPlusSampler}};
    for (auto& [nm, kind] : names)
      if (k == nm) s.kind = kind;
    if (m[2].length() > 0) {
      if (m[4].matched) throw std::invalid_argument("bad group spec: " + raw);
      s.n = static_cast<unsigned>(std::stoul(m[2]));
      s.q = std::stoull(m[3]);
    } else {
      if (!m[4].matched) throw std::invalid_argument("bad group spec: " + raw);
      s.n = static_cast<unsigned>(std::stoul(m[3]));
      s.q = std::stoull(m[4]);
    }
  } else {
    throw std::invalid_argument("unrecognized group spec: " + raw);
  }
  return s;
}

std::string GroupSpec::name() const {
  if (!is_matrix()) return kind_prefix(kind) + "(" + std::to_string(n) + ")";
  return kind_prefix(kind) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

bool GroupSpec::is_matrix() const {
  switch (kind) {
    case GroupKind::Cyclic:
    case GroupKind::Sym:
    case GroupKind::Alt:
      return false;
    case GroupKind::Quotient:
      return q != 0;
    default:
      return true;
  }
}

bool GroupSpec::is_projective() const {
  return kind == GroupKind::PSL || kind == GroupKind::PSU || kind == GroupKind::PSp ||
         kind == GroupKind::Quotient;
}

OrderSplit dn_order(unsigned n, const BigInt& q) {
  OrderSplit o;
  o.q_part = ipow(q, n * (n - 1));
  BigInt qp = ipow(q, n) - 1;
  for (unsigned i = 1; i < n; ++i) qp *= ipow(q, 2 * i) - 1;
  o.q_prime_part = qp;
  o.order = o.q_part * qp;
  return o;
}

OrderSplit closed_form_order(const GroupSpec& s) {
  OrderSplit o;
  switch (s.kind) {
    case GroupKind::Cyclic:
      if (s.n < 1) throw std::invalid_argument("cyclic order must be positive");
      o.order = s.n;
      o.q_part = 1;
      o.q_prime_part = o.order;
      return o;
    case GroupKind::Sym:
    case GroupKind::Alt: {
      if (s.n < 1) throw std::invalid_argument("degree must be positive");
      BigInt f = 1;
      for (unsigned i = 2; i <= s.n; ++i) f *= i;
      if (s.kind == GroupKind::Alt && s.n >= 2) f /= 2;
      o.order = f;
      o.q_part = 1;
      o.q_prime_part = f;
      return o;
    }
    default:
      break;
  }
  uint32_t p, f;
  prime_power(s.q, p, f);
  const BigInt q = s.q;
  const unsigned n = s.n;
  if (n < 2) throw std::invalid_argument("matrix dimension must be at least 2");
  BigInt qpart, qprime = 1;
  uint64_t divisor = 1;
  switch (s.kind) {
    case GroupKind::SL:
    case GroupKind::PSL:
      qpart = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) qprime *= ipow(q, i) - 1;
      if (s.kind == GroupKind::PSL) divisor = std::gcd<uint64_t>(n, s.q - 1);
      break;
    case GroupKind::SU:
    case GroupKind::PSU:
      qpart = ipow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) qprime *= (i % 2 == 0) ? ipow(q, i) - 1 : ipow(q, i) + 1;
      if (s.kind == GroupKind::PSU) divisor = std::gcd<uint64_t>(n, s.q + 1);
      break;
    case GroupKind::Sp:
    case GroupKind::PSp: {
      if (n % 2) throw std::invalid_argument("symplectic dimension must be even");
      unsigned m = n / 2;
      qpart = ipow(q, m * m);
      for (unsigned i = 1; i <= m; ++i) qprime *= ipow(q, 2 * i) - 1;
      if (s.kind == GroupKind::PSp) divisor = std::gcd<uint64_t>(2, s.q - 1);
      break;
    }
    case GroupKind::OmegaPlusSampler: {
      if (n % 2) throw std::invalid_argument("orthogonal dimension must be even");
      if (p != 2) throw std::invalid_argument("OmegaPlus sampler requires even q");
      return dn_order(n / 2, q);
    }
    case GroupKind::Quotient:
      throw std::invalid_argument("closed_form_order: quotient has no closed form");
    default:
      throw std::invalid_argument("closed_form_order: unsupported kind");
  }
  o.q_part = qpart;
  o.q_prime_part = qprime / divisor;
  o.order = o.q_part * o.q_prime_part;
  return o;
}

std::string Realization::format(const uint32_t* a) const {
  std::string s = "[";
  for (unsigned i = 0; i < width(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

PermRealization::PermRealization(unsigned degree) : n_(degree) {
  if (degree < 1 || degree > kMaxWidth) throw std::invalid_argument("permutation degree out of range");
  bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(degree - 1)));
  if (degree > 1 && bits_ * degree > 64)
    throw std::invalid_argument("permutation degree too large for 64-bit keys");
}

void PermRealization::identity(uint32_t* out) const { std::iota(out, out + n_, 0u); }

void PermRealization::multiply(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
  kernels::compose_u32(a, b, out, n_);
}

void PermRealization::inverse(const uint32_t* a, uint32_t* out) const {
  for (unsigned i = 0; i < n_; ++i) out[a[i]] = i;
}

uint64_t PermRealization::key(const uint32_t* a) const {
  uint64_t k = 0;
  for (unsigned i = 0; i < n_; ++i) k |= uint64_t(a[i]) << (bits_ * i);
  return k;
}

std::string PermRealization::format(const uint32_t* a) const {
  std::vector<bool> seen(n_, false);
  std::string s;
  for (unsigned i = 0; i < n_; ++i) {
    if (seen[i] || a[i] == i) continue;
    s += "(";
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      s += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
      j = a[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

MatrixRealization::MatrixRealization(FieldPtr field, unsigned dim) : F_(std::move(field)), n_(dim) {
  if (dim * dim > kMaxWidth) throw std::invalid_argument("matrix dimension too large");
  bits_ = static_cast<unsigned>(std::bit_width(F_->order() - 1));
  if (bits_ * n_ * n_ > 64) throw std::invalid_argument("matrix group too large for 64-bit keys");
  const uint64_t q = F_->order();
  if (q <= 256) {
    mul_table_.resize(q * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) mul_table_[a * q + b] = F_->mul(a, b);
  }
}

void MatrixRealization::identity(uint32_t* out) const {
  std::fill(out, out + n_ * n_, 0u);
  for (unsigned i = 0; i < n_; ++i) out[i * n_ + i] = 1;
}

void MatrixRealization::multiply(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
  const FieldSpec& F = *F_;
  const uint64_t q = F.order();
  const bool table = !mul_table_.empty();
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      Elem acc = 0;
      for (unsigned k = 0; k < n_; ++k) {
        Elem x = a[i * n_ + k], y = b[k * n_ + j];
        if (x == 0 || y == 0) continue;
        acc = F.add(acc, table ? mul_table_[x * q + y] : F.mul(x, y));
      }
      out[i * n_ + j] = acc;
    }
  }
}

void MatrixRealization::inverse(const uint32_t* a, uint32_t* out) const {
  linalg::Matrix<Elem> m(n_, n_);
  std::copy(a, a + n_ * n_, m.a.begin());
  auto r = linalg::inverse(*F_, m);
  std::copy(r.a.begin(), r.a.end(), out);
}

uint64_t MatrixRealization::key(const uint32_t* a) const {
  uint64_t k = 0;
  for (unsigned i = 0; i < n_ * n_; ++i) k |= uint64_t(a[i]) << (bits_ * i);
  return k;
}

std::string MatrixRealization::format(const uint32_t* a) const {
  std::string s = "[";
  for (unsigned i = 0; i < n_; ++i) {
    s += i ? ",[" : "[";
    for (unsigned j = 0; j < n_; ++j) s += (j ? "," : "") + std::to_string(a[i * n_ + j]);
    s += "]";
  }
  return s + "]";
}

QuotientRealization::QuotientRealization(std::shared_ptr<const Realization> parent,
                                         std::vector<std::vector<uint32_t>> central)
    : parent_(std::move(parent)), central_(std::move(central)) {}

void QuotientRealization::identity(uint32_t* out) const {
  parent_->identity(out);
  canonicalize(out);
}

void QuotientRealization::canonicalize(uint32_t* a) const {
  const unsigned w = parent_->width();
  uint32_t best[kMaxWidth], tmp[kMaxWidth];
  std::copy(a, a + w, best);
  for (const auto& z : central_) {
    parent_->multiply(z.data(), a, tmp);
    if (std::lexicographical_compare(tmp, tmp + w, best, best + w)) std::copy(tmp, tmp + w, best);
  }
  std::copy(best, best + w, a);
}

void QuotientRealization::multiply(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
  parent_->multiply(a, b, out);
  canonicalize(out);
}

void QuotientRealization::inverse(const uint32_t* a, uint32_t* out) const {
  parent_->inverse(a, out);
  canonicalize(out);
}

uint32_t Group::mul(uint32_t a, uint32_t b) const {
  uint32_t buf[kMaxWidth];
  real_->multiply(data_.data() + size_t(a) * w_, data_.data() + size_t(b) * w_, buf);
  auto it = index_.find(real_->key(buf));
  if (it == index_.end()) throw std::logic_error("group not closed under multiplication");
  return it->second;
}

uint32_t Group::pow(uint32_t g, uint64_t e) const {
  e %= orders_[g];
  uint32_t r = identity(), b = g;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::optional<uint32_t> Group::index_of(std::span<const uint32_t> data) const {
  if (data.size() != w_) return std::nullopt;
  uint32_t buf[kMaxWidth];
  std::copy(data.begin(), data.end(), buf);
  real_->canonicalize(buf);
  return index_of_key(real_->key(buf));
}

std::optional<uint32_t> Group::index_of_key(uint64_t key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t Group::characteristic() const {
  auto F = real_->field();
  return F ? F->characteristic() : 0;
}

GroupPtr Group::from_generators(const GroupSpec& spec, std::shared_ptr<const Realization> real,
                                const std::vector<std::vector<uint32_t>>& gens, uint64_t cap) {
  std::shared_ptr<Group> G(new Group());
  G->spec_ = spec;
  G->real_ = std::move(real);
  const unsigned w = G->w_ = G->real_->width();
  if (w > kMaxWidth) throw std::invalid_argument("element width too large");
  std::vector<std::vector<uint32_t>> gdata;
  for (auto g : gens) {
    if (g.size() != w) throw std::invalid_argument("generator has wrong width");
    G->real_->canonicalize(g.data());
    gdata.push_back(std::move(g));
  }
  uint32_t buf[kMaxWidth];
  G->real_->identity(buf);
  G->data_.assign(buf, buf + w);
  G->keys_.push_back(G->real_->key(buf));
  G->index_.emplace(G->keys_[0], 0);
  for (size_t i = 0; i < G->keys_.size(); ++i) {
    for (const auto& s : gdata) {
      G->real_->multiply(G->data_.data() + i * w, s.data(), buf);
      uint64_t k = G->real_->key(buf);
      if (G->index_.count(k)) continue;
      if (G->keys_.size() >= cap)
        throw std::length_error("group order exceeds enumeration cap " + std::to_string(cap));
      G->index_.emplace(k, static_cast<uint32_t>(G->keys_.size()));
      G->keys_.push_back(k);
      G->data_.insert(G->data_.end(), buf, buf + w);
    }
  }
  for (const auto& s : gdata) G->gens_.push_back(*G->index_of_key(G->real_->key(s.data())));
  G->finish();
  return G;
}

void Group::finish() {
  const uint32_t N = static_cast<uint32_t>(keys_.size());
  inv_.assign(N, 0);
  uint32_t buf[kMaxWidth];
  for (uint32_t i = 0; i < N; ++i) {
    real_->inverse(data_.data() + size_t(i) * w_, buf);
    auto j = index_of_key(real_->key(buf));
    if (!j) throw std::logic_error("group not closed under inverses");
    inv_[i] = *j;
  }
  orders_.assign(N, 1);
  exponent_ = 1;
  for (uint32_t i = 0; i < N; ++i) {
    uint32_t o = 1, x = i;
    while (x != 0) {
      x = mul(x, i);
      ++o;
    }
    orders_[i] = o;
    exponent_ = std::lcm(exponent_, uint64_t(o));
  }
  central_flag_.assign(N, false);
  center_.clear();
  for (uint32_t i = 0; i < N; ++i) {
    bool c = true;
    for (uint32_t s : gens_) {
      if (mul(i, s) != mul(s, i)) {
        c = false;
        break;
      }
    }
    if (c) {
      central_flag_[i] = true;
      center_.push_back(i);
    }
  }
}

namespace {

std::vector<std::vector<uint32_t>> perm_generators(const GroupSpec& s) {
  const unsigned n = s.n;
  auto cycle = [&](unsigned from, unsigned to) {
    std::vector<uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    for (unsigned i = from; i < to; ++i) p[i] = i + 1;
    p[to] = from;
    return p;
  };
  std::vector<std::vector<uint32_t>> g;
  if (n == 1) return g;
  switch (s.kind) {
    case GroupKind::Cyclic:
      g.push_back(cycle(0, n - 1));
      break;
    case GroupKind::Sym:
      g.push_back(cycle(0, 1));
      g.push_back(cycle(0, n - 1));
      break;
    case GroupKind::Alt:
      if (n < 3) break;
      g.push_back(cycle(0, 2));
      g.push_back(n % 2 ? cycle(0, n - 1) : cycle(1, n - 1));
      break;
    default:
      break;
  }
  return g;
}

std::vector<uint32_t> identity_matrix(unsigned n) {
  std::vector<uint32_t> m(n * n, 0);
  for (unsigned i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

// Field basis elements x^b, encoded as p^b.
std::vector<Elem> basis_elements(const FieldSpec& F) {
  std::vector<Elem> out;
  Elem v = 1;
  for (uint32_t b = 0; b < F.degree(); ++b) {
    out.push_back(v);
    v *= F.characteristic();
  }
  return out;
}

std::vector<std::vector<uint32_t>> sl_candidates(const FieldSpec& F, unsigned n) {
  std::vector<std::vector<uint32_t>> c;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Elem b : basis_elements(F)) {
        auto m = identity_matrix(n);
        m[i * n + j] = b;
        c.push_back(std::move(m));
      }
    }
  return c;
}

std::vector<Elem> symplectic_form(const FieldSpec& F, unsigned n) {
  std::vector<Elem> J(n * n, 0);
  for (unsigned i = 0; i < n; ++i) J[i * n + (n - 1 - i)] = i < n / 2 ? 1 : F.neg(1);
  return J;
}

std::vector<std::vector<uint32_t>> sp_candidates(const FieldSpec& F, unsigned n) {
  auto J = symplectic_form(F, n);
  std::vector<std::vector<Elem>> vs;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Elem> v(n, 0);
    v[i] = 1;
    vs.push_back(v);
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      std::vector<Elem> v(n, 0);
      v[i] = v[j] = 1;
      vs.push_back(v);
    }
  std::vector<std::vector<uint32_t>> c;
  for (const auto& v : vs) {
    std::vector<Elem> Jv(n, 0);
    for (unsigned k = 0; k < n; ++k)
      for (unsigned l = 0; l < n; ++l) Jv[k] = F.add(Jv[k], F.mul(J[k * n + l], v[l]));
    for (Elem b : basis_elements(F)) {
      auto m = identity_matrix(n);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k)
          m[i * n + k] = F.add(m[i * n + k], F.mul(b, F.mul(v[i], Jv[k])));
      c.push_back(std::move(m));
    }
  }
  return c;
}

// Unitary transvections I + a v v* with v isotropic and a + a^q = 0, over
// GF(q^2) with the identity Hermitian form.
std::vector<std::vector<uint32_t>> su_candidates(const FieldSpec& F, unsigned n, uint64_t q) {
  std::vector<Elem> as;
  for (Elem a = 1; a < F.order(); ++a)
    if (F.add(a, F.pow(a, q)) == 0) as.push_back(a);
  std::vector<std::vector<uint32_t>> c;
  const uint64_t total = [&] {
    uint64_t t = 1;
    for (unsigned i = 0; i < n; ++i) t *= F.order();
    return t;
  }();
  for (uint64_t code = 1; code < total && c.size() < 4096; ++code) {
    std::vector<Elem> v(n);
    uint64_t x = code;
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<Elem>(x % F.order());
      x /= F.order();
    }
    Elem h = 0;
    for (Elem e : v) h = F.add(h, F.pow(e, q + 1));
    if (h != 0) continue;
    for (Elem a : as) {
      auto m = identity_matrix(n);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k)
          m[i * n + k] = F.add(m[i * n + k], F.mul(a, F.mul(v[i], F.pow(v[k], q))));
      c.push_back(std::move(m));
    }
  }
  return c;
}

GroupPtr greedy_closure(const GroupSpec& spec, std::shared_ptr<const Realization> real,
                        const std::vector<std::vector<uint32_t>>& candidates, uint64_t target) {
  std::vector<std::vector<uint32_t>> chosen;
  GroupPtr current;
  for (const auto& c : candidates) {
    if (current && current->index_of(c)) continue;
    chosen.push_back(c);
    current = Group::from_generators(spec, real, chosen, target);
    if (current->order() == target) return current;
  }
  throw std::logic_error("generator candidates do not reach the closed-form order of " + spec.name());
}

}  // namespace

GroupPtr Group::build(const GroupSpec& spec, uint64_t cap) {
  if (spec.kind == GroupKind::OmegaPlusSampler)
    throw std::invalid_argument("OmegaPlus sampler is never enumerated");
  if (spec.kind == GroupKind::Quotient) throw std::invalid_argument("quotients are built via central_quotient");
  OrderSplit o = closed_form_order(spec);
  if (o.order > cap)
    throw std::length_error(spec.name() + " has order " + o.order.str() + " above the enumeration cap " +
                            std::to_string(cap));
  const uint64_t target = static_cast<uint64_t>(o.order);
  if (!spec.is_matrix()) {
    auto real = std::make_shared<PermRealization>(spec.n);
    auto G = from_generators(spec, real, perm_generators(spec), cap);
    if (G->order() != target) throw std::logic_error("closure order mismatch for " + spec.name());
    return G;
  }
  uint32_t p, f;
  prime_power(spec.q, p, f);
  GroupSpec base = spec;
  switch (spec.kind) {
    case GroupKind::PSL: base.kind = GroupKind::SL; break;
    case GroupKind::PSU: base.kind = GroupKind::SU; break;
    case GroupKind::PSp: base.kind = GroupKind::Sp; break;
    default: break;
  }
  if (base.kind != spec.kind) {
    auto G = build(base, std::max<uint64_t>(cap, static_cast<uint64_t>(closed_form_order(base).order)));
    auto S = G->central_quotient();
    if (S->order() != target) throw std::logic_error("quotient order mismatch for " + spec.name());
    return S;
  }
  FieldPtr F;
  std::vector<std::vector<uint32_t>> cand;
  switch (spec.kind) {
    case GroupKind::SL:
      F = make_field(p, f);
      cand = sl_candidates(*F, spec.n);
      break;
    case GroupKind::Sp:
      if (spec.n % 2) throw std::invalid_argument("symplectic dimension must be even");
      F = make_field(p, f);
      cand = sp_candidates(*F, spec.n);
      break;
    case GroupKind::SU:
      F = make_field(p, 2 * f);
      cand = su_candidates(*F, spec.n, spec.q);
      break;
    default:
      throw std::invalid_argument("unsupported group kind");
  }
  auto real = std::make_shared<MatrixRealization>(F, spec.n);
  return greedy_closure(spec, real, cand, target);
}

GroupPtr Group::central_quotient() const {
  GroupSpec s = spec_;
  switch (spec_.kind) {
    case GroupKind::SL: s.kind = GroupKind::PSL; break;
    case GroupKind::SU: s.kind = GroupKind::PSU; break;
    case GroupKind::Sp: s.kind = GroupKind::PSp; break;
    case GroupKind::PSL:
    case GroupKind::PSU:
    case GroupKind::PSp:
      break;
    default:
      if (center_.size() > 1) s.kind = GroupKind::Quotient;
      break;
  }
  if (center_.size() == 1) {
    std::shared_ptr<Group> copy(new Group(*this));
    copy->spec_ = s;
    return copy;
  }
  std::vector<std::vector<uint32_t>> central;
  for (uint32_t z : center_) central.emplace_back(element(z).begin(), element(z).end());
  auto real = std::make_shared<QuotientRealization>(real_, std::move(central));
  std::vector<std::vector<uint32_t>> gens;
  for (uint32_t g : gens_) gens.emplace_back(element(g).begin(), element(g).end());
  return from_generators(s, real, gens, order());
}

std::vector<uint32_t> Group::quotient_map(const Group& quotient) const {
  std::vector<uint32_t> out(order());
  for (uint32_t i = 0; i < order(); ++i) {
    auto j = quotient.index_of(element(i));
    if (!j) throw std::invalid_argument("quotient_map: not a quotient of this group");
    out[i] = *j;
  }
  return out;
}

bool satisfies_relations(const GroupSpec& spec, const Realization& real, std::span<const uint32_t> g) {
  if (!real.is_matrix()) return true;
  const FieldSpec& F = *real.field();
  const unsigned n = real.dim();
  linalg::Matrix<Elem> m(n, n);
  std::copy(g.begin(), g.end(), m.a.begin());
  switch (spec.kind) {
    case GroupKind::SL:
    case GroupKind::PSL:
      return linalg::det(F, m) == 1;
    case GroupKind::Sp:
    case GroupKind::PSp: {
      linalg::Matrix<Elem> J(n, n);
      J.a = symplectic_form(F, n);
      return linalg::mul(F, linalg::mul(F, linalg::transpose(m), J), m) == J;
    }
    case GroupKind::SU:
    case GroupKind::PSU: {
      const uint64_t q = spec.q;
      linalg::Matrix<Elem> star(n, n);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) star(i, j) = F.pow(m(j, i), q);
      return linalg::det(F, m) == 1 && linalg::mul(F, star, m) == linalg::Matrix<Elem>::identity(n);
    }
    default:
      return true;
  }
}

}  // namespace waring
