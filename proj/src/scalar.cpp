#include "skewpbw/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace skewpbw {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      while (m % d == 0) m /= d;
      result -= result / d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

using IntPoly = std::vector<long>;  // low degree first

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return quot;
}

IntPoly cyclotomic_poly(std::uint64_t m) {
  static std::map<std::uint64_t, IntPoly> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  IntPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d)
    if (m % d == 0) num = divide_monic(num, cyclotomic_poly(d));
  cache.emplace(m, num);
  return num;
}

std::int64_t mod_positive(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::parse(std::string_view text) {
  auto number_after = [&](std::string_view prefix) -> std::uint64_t {
    std::string_view rest = text.substr(prefix.size());
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty())
      throw InvalidArgument("malformed field '" + std::string(text) + "'");
    return value;
  };
  if (text == "Q") return rationals();
  if (text == "Q(i)") return gaussian();
  if (text.starts_with("cyclotomic:")) return cyclotomic(number_after("cyclotomic:"));
  if (text.starts_with("gf:")) return prime(number_after("gf:"));
  throw InvalidArgument("unknown field '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::GaussianRationals: return "Q(i)";
    case FieldKind::Cyclotomic: return "cyclotomic:" + std::to_string(parameter);
    case FieldKind::PrimeField: return "gf:" + std::to_string(parameter);
  }
  return "?";
}

// -------------------------------------------------------------------- Field

Field::Field(const FieldSpec& spec) : spec_(spec) {
  switch (spec.kind) {
    case FieldKind::Rationals: root_order_ = 1; break;
    case FieldKind::GaussianRationals: root_order_ = 4; break;
    case FieldKind::Cyclotomic: root_order_ = spec.parameter; break;
    case FieldKind::PrimeField: root_order_ = 0; return;
  }
  phi_ = cyclotomic_poly(root_order_);
  degree_ = euler_phi(root_order_);
  // Successive powers of zeta, reduced modulo the monic polynomial phi_.
  std::vector<mpq_class> current(degree_, mpq_class(0));
  current[0] = 1;
  for (std::uint64_t e = 0; e < root_order_; ++e) {
    power_table_.push_back(current);
    std::vector<mpq_class> next(degree_, mpq_class(0));
    const mpq_class top = current[degree_ - 1];
    for (std::size_t j = degree_ - 1; j > 0; --j) next[j] = current[j - 1];
    for (std::size_t j = 0; j < degree_; ++j) next[j] -= top * phi_[j];
    current = std::move(next);
  }
}

const Field& make_field(const FieldSpec& spec) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::uint64_t>, std::unique_ptr<Field>> registry;
  switch (spec.kind) {
    case FieldKind::Cyclotomic:
      if (spec.parameter < 1) throw InvalidArgument("cyclotomic order must be >= 1");
      if (spec.parameter > 4096) throw InvalidArgument("cyclotomic order too large");
      break;
    case FieldKind::PrimeField:
      if (!is_prime(spec.parameter)) throw InvalidArgument(std::to_string(spec.parameter) + " is not prime");
      if (spec.parameter >= (1ULL << 32)) throw InvalidArgument("prime modulus must be below 2^32");
      break;
    default: break;
  }
  const std::uint64_t param =
      (spec.kind == FieldKind::Cyclotomic || spec.kind == FieldKind::PrimeField) ? spec.parameter : 0;
  std::lock_guard lock(mutex);
  auto& slot = registry[{static_cast<int>(spec.kind), param}];
  if (!slot) slot.reset(new Field(FieldSpec{spec.kind, param}));
  return *slot;
}

const Field& Field::prime_subfield() const {
  return spec_.kind == FieldKind::PrimeField ? *this : make_field(FieldSpec::rationals());
}

Scalar Field::zero() const { return Scalar(this); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  Scalar s(this);
  if (spec_.kind == FieldKind::PrimeField) {
    s.residue_ = static_cast<std::uint64_t>(mod_positive(value, static_cast<std::int64_t>(spec_.parameter)));
  } else {
    s.coords_[0] = value;
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (spec_.kind == FieldKind::PrimeField) {
    const mpz_class p(static_cast<unsigned long>(spec_.parameter));
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw DivisionByZero();
    Scalar n = from_int(static_cast<long>(num.get_ui()));
    Scalar d = from_int(static_cast<long>(den.get_ui()));
    return n / d;
  }
  Scalar s(this);
  s.coords_[0] = value;
  return s;
}

Scalar Field::zeta() const { return zeta_power(1); }

Scalar Field::zeta_power(std::int64_t k) const {
  if (spec_.kind == FieldKind::PrimeField)
    throw InvalidArgument("prime fields have no designated root of unity");
  Scalar s(this);
  const auto& row = power_table_[mod_positive(k, static_cast<std::int64_t>(root_order_))];
  std::copy(row.begin(), row.end(), s.coords_.begin());
  return s;
}

bool Field::has_imaginary_unit() const noexcept {
  return spec_.kind != FieldKind::PrimeField && root_order_ % 4 == 0;
}

Scalar Field::imaginary_unit() const {
  if (!has_imaginary_unit()) throw InvalidArgument("field " + spec_.to_string() + " has no designated i");
  return zeta_power(static_cast<std::int64_t>(root_order_ / 4));
}

Scalar Field::basis_element(std::size_t i) const {
  if (i >= degree_) throw InvalidArgument("basis index out of range");
  if (spec_.kind == FieldKind::PrimeField) return one();
  Scalar s(this);
  s.coords_[i] = 1;
  return s;
}

std::vector<Scalar> Field::coordinates(const Scalar& a) const {
  if (&a.field() != this) throw FieldMismatch();
  if (spec_.kind == FieldKind::PrimeField) return {a};
  const Field& q = prime_subfield();
  std::vector<Scalar> out;
  out.reserve(degree_);
  for (const auto& c : a.coords_) out.push_back(q.from_rational(c));
  return out;
}

Scalar Field::random(std::mt19937_64& rng, int bound) const {
  if (spec_.kind == FieldKind::PrimeField) {
    std::uniform_int_distribution<std::uint64_t> dist(0, spec_.parameter - 1);
    return from_int(static_cast<long>(dist(rng)));
  }
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, std::max(1, bound / 2));
  Scalar s(this);
  for (auto& c : s.coords_) {
    c = mpq_class(num(rng), den(rng));
    c.canonicalize();
  }
  return s;
}

// ------------------------------------------------------------------- Scalar

Scalar::Scalar() : Scalar(&make_field(FieldSpec::rationals())) {}

Scalar::Scalar(const Field* field) : field_(field) {
  if (field->spec_.kind != FieldKind::PrimeField) coords_.assign(field->degree_, mpq_class(0));
}

void Scalar::check_same_field(const Scalar& b) const {
  if (field_ != b.field_) throw FieldMismatch();
}

bool Scalar::is_zero() const noexcept {
  if (field_->spec_.kind == FieldKind::PrimeField) return residue_ == 0;
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

bool Scalar::is_one() const noexcept {
  if (field_->spec_.kind == FieldKind::PrimeField) return residue_ == 1;
  if (coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

bool Scalar::is_rational() const noexcept {
  if (field_->spec_.kind == FieldKind::PrimeField) return true;
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return sgn(c) == 0; });
}

mpq_class Scalar::rational_value() const {
  if (field_->spec_.kind == FieldKind::PrimeField || !is_rational())
    throw InvalidArgument("scalar " + to_string() + " is not a rational number");
  return coords_[0];
}

std::uint64_t Scalar::residue() const {
  if (field_->spec_.kind != FieldKind::PrimeField) throw InvalidArgument("not a prime-field element");
  return residue_;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_->spec_.kind == FieldKind::PrimeField) {
    r.residue_ = residue_ == 0 ? 0 : field_->spec_.parameter - residue_;
  } else {
    for (auto& c : r.coords_) c = -c;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  check_same_field(b);
  if (field_->spec_.kind == FieldKind::PrimeField) {
    residue_ = (residue_ + b.residue_) % field_->spec_.parameter;
  } else {
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += b.coords_[j];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
  check_same_field(b);
  if (field_->spec_.kind == FieldKind::PrimeField) {
    const auto p = field_->spec_.parameter;
    residue_ = (residue_ + p - b.residue_) % p;
  } else {
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= b.coords_[j];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
  check_same_field(b);
  const Field& f = *field_;
  if (f.spec_.kind == FieldKind::PrimeField) {
    residue_ = mul_mod(residue_, b.residue_, f.spec_.parameter);
    return *this;
  }
  if (f.degree_ == 1) {
    // Q and the degenerate cyclotomic fields m = 1, 2.
    coords_[0] *= b.coords_[0];
    return *this;
  }
  std::vector<mpq_class> out(f.degree_, mpq_class(0));
  mpq_class prod;
  for (std::size_t a = 0; a < f.degree_; ++a) {
    if (sgn(coords_[a]) == 0) continue;
    for (std::size_t c = 0; c < f.degree_; ++c) {
      if (sgn(b.coords_[c]) == 0) continue;
      prod = coords_[a] * b.coords_[c];
      const std::size_t e = a + c;
      if (e < f.degree_) {
        out[e] += prod;
      } else {
        const auto& row = f.power_table_[e % f.root_order_];
        for (std::size_t j = 0; j < f.degree_; ++j)
          if (sgn(row[j]) != 0) out[j] += prod * row[j];
      }
    }
  }
  std::move(out.begin(), out.end(), coords_.begin());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& b) { return *this *= b.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Field& f = *field_;
  Scalar r(field_);
  if (f.spec_.kind == FieldKind::PrimeField) {
    r.residue_ = pow_mod(residue_, f.spec_.parameter - 2, f.spec_.parameter);
    return r;
  }
  if (f.degree_ == 1) {
    r.coords_[0] = 1 / coords_[0];
    return r;
  }
  // Solve M y = e_0 where column j of M holds the coordinates of a * zeta^j.
  const std::size_t d = f.degree_;
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
  for (std::size_t j = 0; j < d; ++j) {
    Scalar col = *this * f.basis_element(j);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords_[i];
  }
  m[0][d] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (sgn(m[piv][col]) == 0) ++piv;  // M is invertible since a != 0
    std::swap(m[piv], m[col]);
    const mpq_class inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || sgn(m[i][col]) == 0) continue;
      const mpq_class factor = m[i][col];
      for (std::size_t j = col; j <= d; ++j) m[i][j] -= factor * m[col][j];
    }
  }
  for (std::size_t i = 0; i < d; ++i) r.coords_[i] = m[i][d];
  return r;
}

Scalar Scalar::pow(std::int64_t exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  Scalar result = field_->one();
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_->spec().kind == FieldKind::PrimeField) return a.residue_ == b.residue_;
  return std::equal(a.coords_.begin(), a.coords_.end(), b.coords_.begin());
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_->spec().kind == FieldKind::PrimeField) return a.residue_ < b.residue_;
  for (std::size_t j = 0; j < a.coords_.size(); ++j) {
    const int c = cmp(a.coords_[j], b.coords_[j]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::size_t Scalar::hash() const noexcept {
  if (field_->spec_.kind == FieldKind::PrimeField) return std::hash<std::uint64_t>{}(residue_);
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& c : coords_) {
    const std::size_t v = mpz_get_ui(c.get_num_mpz_t()) * 31 + mpz_get_ui(c.get_den_mpz_t()) +
                          static_cast<std::size_t>(sgn(c) + 1);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Scalar::to_string() const {
  const Field& f = *field_;
  if (f.spec_.kind == FieldKind::PrimeField) return std::to_string(residue_);
  if (f.degree_ == 1) return rational_string(coords_[0]);
  const std::string symbol = f.spec_.kind == FieldKind::GaussianRationals ? "i" : "zeta";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < f.degree_; ++j) {
    const mpq_class& c = coords_[j];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << rational_string(mag);
      continue;
    }
    if (mag != 1) out << rational_string(mag) << "*";
    out << symbol;
    if (j > 1) out << "^" << j;
  }
  if (first) return "0";
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << a.to_string(); }

// --------------------------------------------------------------- automorphisms

AutomorphismSpec AutomorphismSpec::parse(std::string_view text) {
  auto number_after = [&](std::string_view prefix) -> std::int64_t {
    std::string_view rest = text.substr(prefix.size());
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty())
      throw InvalidArgument("malformed automorphism '" + std::string(text) + "'");
    return value;
  };
  if (text == "id" || text == "identity") return identity();
  if (text == "conj" || text == "conjugation") return conjugation();
  if (text.starts_with("galois:")) return galois(number_after("galois:"));
  if (text.starts_with("frob:")) return frobenius(number_after("frob:"));
  throw InvalidArgument("unknown automorphism '" + std::string(text) + "'");
}

std::string AutomorphismSpec::to_string() const {
  switch (kind) {
    case AutomorphismKind::Identity: return "id";
    case AutomorphismKind::ComplexConjugation: return "conj";
    case AutomorphismKind::GaloisPower: return "galois:" + std::to_string(parameter);
    case AutomorphismKind::FrobeniusPower: return "frob:" + std::to_string(parameter);
  }
  return "?";
}

void validate_automorphism(const AutomorphismSpec& sigma, const Field& field) {
  const bool prime = field.spec().kind == FieldKind::PrimeField;
  switch (sigma.kind) {
    case AutomorphismKind::Identity: return;
    case AutomorphismKind::ComplexConjugation:
      if (prime) throw InvalidArgument("complex conjugation is not defined on " + field.spec().to_string());
      return;
    case AutomorphismKind::GaloisPower: {
      if (prime) throw InvalidArgument("Galois powers are not defined on " + field.spec().to_string());
      const auto m = static_cast<std::int64_t>(field.root_order());
      if (std::gcd(mod_positive(sigma.parameter, m), m) != 1)
        throw InvalidArgument("galois:" + std::to_string(sigma.parameter) + " is not coprime to " + std::to_string(m));
      return;
    }
    case AutomorphismKind::FrobeniusPower:
      if (!prime) throw InvalidArgument("Frobenius powers are only defined on prime fields");
      return;
  }
}

bool acts_trivially(const AutomorphismSpec& sigma, const Field& field) {
  validate_automorphism(sigma, field);
  const auto m = static_cast<std::int64_t>(field.root_order());
  switch (sigma.kind) {
    case AutomorphismKind::Identity:
    case AutomorphismKind::FrobeniusPower: return true;
    case AutomorphismKind::ComplexConjugation: return m <= 2;
    case AutomorphismKind::GaloisPower: return mod_positive(sigma.parameter, m) == mod_positive(1, m);
  }
  return false;
}

AutomorphismSpec inverse_automorphism(const AutomorphismSpec& sigma, const Field& field) {
  validate_automorphism(sigma, field);
  switch (sigma.kind) {
    case AutomorphismKind::Identity:
    case AutomorphismKind::ComplexConjugation: return sigma;
    case AutomorphismKind::FrobeniusPower: return AutomorphismSpec::frobenius(-sigma.parameter);
    case AutomorphismKind::GaloisPower: {
      const auto m = static_cast<std::int64_t>(field.root_order());
      const std::int64_t k = mod_positive(sigma.parameter, m);
      for (std::int64_t inv = 1; inv <= m; ++inv)
        if (mod_positive(k * inv, m) == mod_positive(1, m)) return AutomorphismSpec::galois(inv);
      return AutomorphismSpec::galois(1);
    }
  }
  return sigma;
}

Scalar apply_automorphism(const AutomorphismSpec& sigma, const Scalar& a) {
  const Field& field = a.field();
  validate_automorphism(sigma, field);
  switch (sigma.kind) {
    case AutomorphismKind::Identity: return a;
    case AutomorphismKind::FrobeniusPower: {
      // x -> x^(p^e); the identity on GF(p) but computed honestly.
      Scalar r = a;
      const auto p = static_cast<std::int64_t>(field.characteristic());
      for (std::int64_t k = 0; k < std::abs(sigma.parameter); ++k) r = r.pow(p);
      return r;
    }
    case AutomorphismKind::ComplexConjugation:
    case AutomorphismKind::GaloisPower: {
      const std::int64_t k = sigma.kind == AutomorphismKind::GaloisPower ? sigma.parameter : -1;
      if (field.degree() == 1) return a;
      Scalar r = field.zero();
      const auto coords = field.coordinates(a);
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j].is_zero()) continue;
        r += field.from_rational(coords[j].rational_value()) * field.zeta_power(k * static_cast<std::int64_t>(j));
      }
      return r;
    }
  }
  return a;
}

}  // namespace skewpbw
