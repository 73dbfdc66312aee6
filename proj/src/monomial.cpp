#include "skewpbw/monomial.hpp"

#include <algorithm>

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

void check_lengths(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw InvalidArgument("exponent length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

std::strong_ordering deglex(const Exponent& a, const Exponent& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace

Exponent& Exponent::operator+=(const Exponent& b) {
  check_lengths(*this, b);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += b.e_[i];
  return *this;
}

Exponent Exponent::lcm(const Exponent& a, const Exponent& b) {
  check_lengths(a, b);
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

std::size_t Exponent::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : e_) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

std::optional<Exponent> monomial_divides(const Exponent& alpha, const Exponent& beta) {
  check_lengths(alpha, beta);
  Exponent theta(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (beta[i] < alpha[i]) return std::nullopt;
    theta[i] = beta[i] - alpha[i];
  }
  return theta;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> front) {
  std::sort(front.begin(), front.end());
  front.erase(std::unique(front.begin(), front.end()), front.end());
  return MonomialOrder(OrderKind::Block, std::move(front));
}

std::strong_ordering MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  check_lengths(a, b);
  switch (kind_) {
    case OrderKind::Deglex: return skewpbw::deglex(a, b);
    case OrderKind::Degrevlex: {
      const auto da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case OrderKind::Block: {
      std::uint32_t fa = 0, fb = 0;
      for (auto i : front_) {
        if (i >= a.size()) throw InvalidArgument("block order index out of range");
        fa += a[i];
        fb += b[i];
      }
      if (fa != fb) return fa <=> fb;
      for (auto i : front_)
        if (a[i] != b[i]) return a[i] <=> b[i];
      const std::uint32_t ra = a.degree() - fa, rb = b.degree() - fb;
      if (ra != rb) return ra <=> rb;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::binary_search(front_.begin(), front_.end(), i)) continue;
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::shifted(std::size_t count) const {
  if (kind_ != OrderKind::Block) return *this;
  std::vector<std::size_t> f;
  for (auto i : front_) f.push_back(i + count);
  return MonomialOrder(OrderKind::Block, std::move(f));
}

std::strong_ordering compare_monomials(const MonomialOrder& order, const Exponent& a, const Exponent& b) {
  return order.compare(a, b);
}

}  // namespace skewpbw
