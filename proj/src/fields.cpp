#include <goppa/fields.hpp>

#include <algorithm>
#include <cstdlib>

namespace goppa {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // coefficients low-to-high, trailing zeros trimmed

[[noreturn]] void fail(errc c, const std::string& msg) { throw error(c, msg); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (u64 d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

u64 mod_inverse(u64 a, u64 p) {
  // extended Euclid; p prime, 0 < a < p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<u64>(t);
}

// ---- polynomial arithmetic over F_p (coefficients are plain residues) ----

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly padd(const Poly& a, const Poly& b, u64 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    u64 v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    c[i] = v % p;
  }
  ptrim(c);
  return c;
}

Poly psub(const Poly& a, const Poly& b, u64 p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    u64 av = i < a.size() ? a[i] : 0, bv = i < b.size() ? b[i] : 0;
    c[i] = (av + p - bv) % p;
  }
  ptrim(c);
  return c;
}

Poly pmul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(a[i]) * b[j];
  }
  Poly c(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<u64>(acc[i] % p);
  ptrim(c);
  return c;
}

// division with remainder; divisor need not be monic
void pdivmod(const Poly& a, const Poly& b, u64 p, Poly& quo, Poly& rem) {
  rem = a;
  quo.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  u64 lead_inv = mod_inverse(b.back(), p);
  while (rem.size() >= b.size() && !rem.empty()) {
    u64 c = static_cast<u64>(static_cast<u128>(rem.back()) * lead_inv % p);
    size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) {
      u64 sub = static_cast<u64>(static_cast<u128>(b[i]) * c % p);
      rem[shift + i] = (rem[shift + i] + p - sub) % p;
    }
    ptrim(rem);
    if (rem.size() < b.size()) break;
  }
  ptrim(quo);
}

Poly pmod(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  pdivmod(a, b, p, q, r);
  return r;
}

Poly pgcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    u64 s = mod_inverse(a.back(), p);
    for (auto& c : a) c = static_cast<u64>(static_cast<u128>(c) * s % p);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  return pmod(pmul(a, b, p), m, p);
}

Poly ppowmod(Poly a, u64 e, const Poly& m, u64 p) {
  Poly result = {1};
  a = pmod(a, m, p);
  while (e > 0) {
    if (e & 1) result = pmulmod(result, a, m, p);
    a = pmulmod(a, a, m, p);
    e >>= 1;
  }
  return result;
}

// x^(p^k) mod m by iterated Frobenius
Poly frobenius_power(unsigned k, const Poly& m, u64 p) {
  Poly h = {0, 1};
  for (unsigned i = 0; i < k; ++i) h = ppowmod(h, p, m, p);
  return h;
}

// Rabin's test: m (monic, degree r) is irreducible over F_p iff x^(p^r) = x
// mod m and gcd(x^(p^(r/t)) - x, m) = 1 for every prime t | r.
bool poly_irreducible(const Poly& m, u64 p) {
  unsigned r = static_cast<unsigned>(m.size() - 1);
  Poly x = {0, 1};
  if (frobenius_power(r, m, p) != pmod(x, m, p)) return false;
  unsigned rest = r;
  for (unsigned t = 2; t <= rest; ++t) {
    if (rest % t != 0) continue;
    while (rest % t == 0) rest /= t;
    Poly diff = psub(frobenius_power(r / t, m, p), x, p);
    Poly g = pgcd(m, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// ---- polynomials over an arbitrary finite base field, coefficients as ranks ----

struct RankOps {
  const Field& base;

  FieldElement dec(u64 r) const { return element_from_rank(base, r); }
  u64 enc(const FieldElement& e) const { return element_rank(e); }
  u64 radd(u64 a, u64 b) const { return enc(add(dec(a), dec(b))); }
  u64 rsub(u64 a, u64 b) const { return enc(sub(dec(a), dec(b))); }
  u64 rmul(u64 a, u64 b) const { return enc(mul(dec(a), dec(b))); }
  u64 rinv(u64 a) const { return enc(inv(dec(a))); }

  void trim(Poly& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  Poly add_(const Poly& a, const Poly& b) const {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
      c[i] = radd(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
  }
  Poly sub_(const Poly& a, const Poly& b) const {
    Poly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
      c[i] = rsub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
  }
  Poly mul_(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) c[i + j] = radd(c[i + j], rmul(a[i], b[j]));
    }
    trim(c);
    return c;
  }
  void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) const {
    rem = a;
    quo.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    u64 lead_inv = rinv(b.back());
    while (rem.size() >= b.size() && !rem.empty()) {
      u64 c = rmul(rem.back(), lead_inv);
      size_t shift = rem.size() - b.size();
      quo[shift] = c;
      for (size_t i = 0; i < b.size(); ++i) rem[shift + i] = rsub(rem[shift + i], rmul(b[i], c));
      trim(rem);
      if (rem.size() < b.size()) break;
    }
    trim(quo);
  }
  Poly mod_(const Poly& a, const Poly& b) const {
    Poly q, r;
    divmod(a, b, q, r);
    return r;
  }
  Poly gcd_(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = mod_(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
      u64 s = rinv(a.back());
      for (auto& c : a) c = rmul(c, s);
    }
    return a;
  }
};

void check_same(const Field& a, const Field& b) {
  if (!same_field(a, b)) fail(errc::field_mismatch, "elements from different fields");
}

const FieldDescriptor& need(const FieldElement& e) {
  if (!e.valid()) fail(errc::bad_argument, "uninitialized field element");
  return *e.field();
}

}  // namespace

// ---- descriptors ----

Field make_prime_field(std::uint64_t p) {
  if (p >= (1ull << 31)) fail(errc::bad_argument, "characteristic too large");
  if (!is_prime_u64(p)) fail(errc::not_prime, "characteristic must be prime: " + std::to_string(p));
  auto d = std::make_shared<FieldDescriptor>();
  d->kind = field_kind::prime;
  d->p = p;
  d->r = 1;
  d->q = p;
  return d;
}

Field make_extension_field(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus) {
  if (p >= (1ull << 31)) fail(errc::bad_argument, "characteristic too large");
  if (!is_prime_u64(p)) fail(errc::not_prime, "characteristic must be prime: " + std::to_string(p));
  if (r < 2) fail(errc::bad_argument, "extension degree must be at least 2 (use a prime field)");
  if (modulus.size() != r + 1)
    fail(errc::bad_length, "modulus needs r+1 coefficients, low-to-high");
  u64 q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q > (1ull << 62) / p) fail(errc::bad_argument, "field too large to enumerate");
    q *= p;
  }
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) fail(errc::bad_argument, "modulus must be monic");
  if (!poly_irreducible(modulus, p))
    fail(errc::reducible_modulus, "modulus is reducible over F_" + std::to_string(p));
  auto d = std::make_shared<FieldDescriptor>();
  d->kind = field_kind::extension;
  d->p = p;
  d->r = r;
  d->modulus = std::move(modulus);
  d->q = q;
  return d;
}

Field make_rational_function_field(const Field& base) {
  if (!base) fail(errc::bad_argument, "missing base field");
  if (!base->finite())
    fail(errc::unsupported_field, "rational functions need a finite coefficient field");
  auto d = std::make_shared<FieldDescriptor>();
  d->kind = field_kind::rational_function;
  d->p = base->p;
  d->r = base->r;
  d->base = base;
  d->q = 0;
  return d;
}

bool same_field(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->p != b->p || a->r != b->r) return false;
  if (a->kind == field_kind::extension && a->modulus != b->modulus) return false;
  if (a->kind == field_kind::rational_function) return same_field(a->base, b->base);
  return true;
}

Field parse_field(const std::string& spec) {
  if (spec.empty()) fail(errc::parse_error, "empty field spec");
  if (spec.rfind("ratfun(", 0) == 0) {
    if (spec.back() != ')') fail(errc::parse_error, "unterminated ratfun(...)");
    std::string inner = spec.substr(7, spec.size() - 8);
    if (inner.rfind("ratfun", 0) == 0)
      fail(errc::unsupported_field, "rational functions need a finite coefficient field");
    return make_rational_function_field(parse_field(inner));
  }
  auto parse_u64 = [](const std::string& s) -> u64 {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::parse_error, "expected a number, got '" + s + "'");
    return std::strtoull(s.c_str(), nullptr, 10);
  };
  auto caret = spec.find('^');
  if (caret == std::string::npos) return make_prime_field(parse_u64(spec));
  auto slash = spec.find('/', caret);
  if (slash == std::string::npos)
    fail(errc::parse_error, "extension spec needs p^r/c0,c1,...,cr");
  u64 p = parse_u64(spec.substr(0, caret));
  u64 r = parse_u64(spec.substr(caret + 1, slash - caret - 1));
  std::vector<u64> mod;
  std::string rest = spec.substr(slash + 1);
  size_t pos = 0;
  while (pos <= rest.size()) {
    size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    mod.push_back(parse_u64(rest.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == rest.size()) break;
  }
  return make_extension_field(p, static_cast<unsigned>(r), std::move(mod));
}

std::string field_to_string(const Field& f) {
  if (!f) return "<null>";
  switch (f->kind) {
    case field_kind::prime:
      return std::to_string(f->p);
    case field_kind::extension: {
      std::string s = std::to_string(f->p) + "^" + std::to_string(f->r) + "/";
      for (size_t i = 0; i < f->modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f->modulus[i]);
      }
      return s;
    }
    case field_kind::rational_function:
      return "ratfun(" + field_to_string(f->base) + ")";
  }
  return "<bad>";
}

// ---- elements ----

FieldElement FieldElement::make(Field f, std::vector<std::uint64_t> num,
                                std::vector<std::uint64_t> den) {
  if (!f) fail(errc::bad_argument, "missing field");
  FieldElement e;
  e.field_ = std::move(f);
  const FieldDescriptor& d = *e.field_;
  switch (d.kind) {
    case field_kind::prime: {
      u64 v = num.empty() ? 0 : num[0] % d.p;
      if (num.size() > 1) fail(errc::bad_length, "prime field element has one coefficient");
      if (v) e.num_ = {v};
      break;
    }
    case field_kind::extension: {
      if (num.size() > d.r) fail(errc::bad_length, "too many coefficients for the extension degree");
      for (auto& c : num) c %= d.p;
      ptrim(num);
      e.num_ = std::move(num);
      break;
    }
    case field_kind::rational_function: {
      RankOps ops{d.base};
      for (auto c : num)
        if (c >= d.base->q) fail(errc::bad_argument, "coefficient rank out of range");
      for (auto c : den)
        if (c >= d.base->q) fail(errc::bad_argument, "coefficient rank out of range");
      ops.trim(num);
      if (den.empty()) den = {1};
      ops.trim(den);
      if (den.empty()) fail(errc::division_by_zero, "zero denominator");
      if (num.empty()) {
        e.num_ = {};
        e.den_ = {1};
        break;
      }
      Poly g = ops.gcd_(num, den);
      if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
        Poly q, r;
        ops.divmod(num, g, q, r);
        num = q;
        ops.divmod(den, g, q, r);
        den = q;
      }
      if (den.back() != 1) {
        u64 s = ops.rinv(den.back());
        for (auto& c : num) c = ops.rmul(c, s);
        for (auto& c : den) c = ops.rmul(c, s);
      }
      e.num_ = std::move(num);
      e.den_ = std::move(den);
      break;
    }
  }
  return e;
}

bool FieldElement::is_one() const {
  if (!field_) return false;
  if (num_.size() != 1 || num_[0] != 1) return false;
  return field_->kind != field_kind::rational_function || den_ == std::vector<u64>{1};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.field_ || !b.field_) return a.field_ == b.field_;
  if (!same_field(a.field_, b.field_)) return false;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

FieldElement zero(const Field& f) { return FieldElement::make(f, {}); }

FieldElement one(const Field& f) { return FieldElement::make(f, {1}); }

FieldElement from_integer(const Field& f, std::int64_t v) {
  if (!f) fail(errc::bad_argument, "missing field");
  u64 p = f->p;
  std::int64_t m = v % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  if (f->kind == field_kind::rational_function)
    return FieldElement::make(f, {element_rank(from_integer(f->base, m))});
  return FieldElement::make(f, {static_cast<u64>(m)});
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  const FieldDescriptor& d = need(a);
  need(b);
  check_same(a.field(), b.field());
  switch (d.kind) {
    case field_kind::prime:
    case field_kind::extension:
      return FieldElement::make(a.field(), padd(a.num(), b.num(), d.p));
    case field_kind::rational_function: {
      RankOps ops{d.base};
      Poly n = ops.add_(ops.mul_(a.num(), b.den()), ops.mul_(b.num(), a.den()));
      return FieldElement::make(a.field(), std::move(n), ops.mul_(a.den(), b.den()));
    }
  }
  fail(errc::bad_argument, "unreachable");
}

FieldElement sub(const FieldElement& a, const FieldElement& b) { return add(a, neg(b)); }

FieldElement neg(const FieldElement& a) {
  const FieldDescriptor& d = need(a);
  switch (d.kind) {
    case field_kind::prime:
    case field_kind::extension: {
      Poly n = a.num();
      for (auto& c : n) c = (d.p - c) % d.p;
      return FieldElement::make(a.field(), std::move(n));
    }
    case field_kind::rational_function: {
      RankOps ops{d.base};
      Poly n = ops.sub_({}, a.num());
      return FieldElement::make(a.field(), std::move(n), a.den());
    }
  }
  fail(errc::bad_argument, "unreachable");
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  const FieldDescriptor& d = need(a);
  need(b);
  check_same(a.field(), b.field());
  switch (d.kind) {
    case field_kind::prime: {
      if (a.is_zero() || b.is_zero()) return zero(a.field());
      u64 v = static_cast<u64>(static_cast<u128>(a.num()[0]) * b.num()[0] % d.p);
      return FieldElement::make(a.field(), {v});
    }
    case field_kind::extension: {
      Poly prod = pmul(a.num(), b.num(), d.p);
      return FieldElement::make(a.field(), pmod(prod, d.modulus, d.p));
    }
    case field_kind::rational_function: {
      RankOps ops{d.base};
      return FieldElement::make(a.field(), ops.mul_(a.num(), b.num()),
                                ops.mul_(a.den(), b.den()));
    }
  }
  fail(errc::bad_argument, "unreachable");
}

FieldElement inv(const FieldElement& a) {
  const FieldDescriptor& d = need(a);
  if (a.is_zero()) fail(errc::division_by_zero, "inverse of zero");
  switch (d.kind) {
    case field_kind::prime:
      return FieldElement::make(a.field(), {mod_inverse(a.num()[0], d.p)});
    case field_kind::extension: {
      // extended Euclid in F_p[x]: t*a = 1 mod m
      Poly r0 = d.modulus, r1 = a.num();
      Poly t0 = {}, t1 = {1};
      while (!r1.empty()) {
        Poly q, r2;
        pdivmod(r0, r1, d.p, q, r2);
        Poly t2 = psub(t0, pmul(q, t1, d.p), d.p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
      }
      // r0 = gcd (a constant, modulus irreducible); scale t0 by its inverse
      u64 s = mod_inverse(r0[0], d.p);
      for (auto& c : t0) c = static_cast<u64>(static_cast<u128>(c) * s % d.p);
      return FieldElement::make(a.field(), std::move(t0));
    }
    case field_kind::rational_function:
      return FieldElement::make(a.field(), a.den(), a.num());
  }
  fail(errc::bad_argument, "unreachable");
}

FieldElement div(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "division by zero");
  return mul(a, inv(b));
}

FieldElement pow(const FieldElement& a, std::int64_t e) {
  need(a);
  if (e < 0) return pow(inv(a), -e);
  FieldElement result = one(a.field());
  FieldElement base = a;
  u64 k = static_cast<u64>(e);
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement trace_to_prime(const FieldElement& a) {
  const FieldDescriptor& d = need(a);
  if (d.kind == field_kind::rational_function)
    fail(errc::unsupported_field, "trace needs a finite field");
  if (d.kind == field_kind::prime) return a;
  FieldElement acc = a, frob = a;
  for (unsigned i = 1; i < d.r; ++i) {
    frob = pow(frob, static_cast<std::int64_t>(d.p));
    acc = add(acc, frob);
  }
  if (acc.num().size() > 1) fail(errc::bad_argument, "trace did not land in the prime subfield");
  return FieldElement::make(make_prime_field(d.p), acc.num());
}

std::uint64_t element_rank(const FieldElement& a) {
  const FieldDescriptor& d = need(a);
  if (!d.finite()) fail(errc::infinite_field, "ranks need a finite field");
  u64 rank = 0, scale = 1;
  for (unsigned i = 0; i < d.r; ++i) {
    u64 c = i < a.num().size() ? a.num()[i] : 0;
    rank += c * scale;
    scale *= d.p;
  }
  return rank;
}

FieldElement element_from_rank(const Field& f, std::uint64_t rank) {
  if (!f) fail(errc::bad_argument, "missing field");
  if (!f->finite()) fail(errc::infinite_field, "ranks need a finite field");
  if (rank >= f->q) fail(errc::bad_argument, "rank out of range");
  Poly coeffs;
  u64 t = rank;
  for (unsigned i = 0; i < f->r && t; ++i) {
    coeffs.push_back(t % f->p);
    t /= f->p;
  }
  return FieldElement::make(f, std::move(coeffs));
}

std::vector<FieldElement> enumerate_elements(const Field& f) {
  if (!f) fail(errc::bad_argument, "missing field");
  if (!f->finite()) fail(errc::infinite_field, "cannot enumerate an infinite field");
  std::vector<FieldElement> out;
  out.reserve(f->q);
  for (u64 k = 0; k < f->q; ++k) out.push_back(element_from_rank(f, k));
  return out;
}

FieldElement indeterminate(const Field& f) {
  if (!f || f->kind != field_kind::rational_function)
    fail(errc::unsupported_field, "the indeterminate lives in a rational function field");
  return FieldElement::make(f, {0, 1}, {1});
}

FieldElement rational_function(const Field& f, const std::vector<FieldElement>& num,
                               const std::vector<FieldElement>& den) {
  if (!f || f->kind != field_kind::rational_function)
    fail(errc::unsupported_field, "not a rational function field");
  Poly n, d;
  for (const auto& c : num) {
    check_same(c.field(), f->base);
    n.push_back(element_rank(c));
  }
  for (const auto& c : den) {
    check_same(c.field(), f->base);
    d.push_back(element_rank(c));
  }
  return FieldElement::make(f, std::move(n), std::move(d));
}

std::string element_to_string(const FieldElement& a) {
  if (!a.valid()) return "<null>";
  const FieldDescriptor& d = *a.field();
  auto poly_str = [](const Poly& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "]";
  };
  switch (d.kind) {
    case field_kind::prime:
      return std::to_string(a.is_zero() ? 0 : a.num()[0]);
    case field_kind::extension:
      return poly_str(a.num());
    case field_kind::rational_function:
      return poly_str(a.num()) + "/" + poly_str(a.den());
  }
  return "<bad>";
}

}  // namespace goppa
