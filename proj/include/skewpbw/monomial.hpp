#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace skewpbw {

/// Exponent vector alpha of a standard monomial x^alpha = x_1^a_1 ... x_n^a_n.
class Exponent {
 public:
  using Storage = boost::container::small_vector<std::uint32_t, 6>;

  Exponent() = default;
  explicit Exponent(std::size_t n) : e_(n, 0) {}
  Exponent(std::initializer_list<std::uint32_t> values) : e_(values) {}
  explicit Exponent(const std::vector<std::uint32_t>& values) : e_(values.begin(), values.end()) {}

  static Exponent unit(std::size_t n, std::size_t i) {
    Exponent e(n);
    e.e_[i] = 1;
    return e;
  }

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  /// |alpha|
  std::uint32_t degree() const noexcept {
    std::uint32_t d = 0;
    for (auto v : e_) d += v;
    return d;
  }
  bool is_zero() const noexcept { return degree() == 0; }

  Exponent& operator+=(const Exponent& b);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }

  /// Component-wise maximum.
  static Exponent lcm(const Exponent& a, const Exponent& b);

  bool operator==(const Exponent&) const = default;
  /// Plain lexicographic comparison, used only for container ordering.
  friend bool operator<(const Exponent& a, const Exponent& b) { return a.e_ < b.e_; }

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  Storage e_;
};

/// theta = beta - alpha when alpha divides beta component-wise, else nullopt.
/// Throws InvalidArgument on length mismatch.
std::optional<Exponent> monomial_divides(const Exponent& alpha, const Exponent& beta);

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept { return e.hash(); }
};

enum class OrderKind { Deglex, Degrevlex, Block };

/// A monomial order on exponents of a fixed length. Variable 0 is the most
/// significant (x_1 > x_2 > ...). Block orders compare the front variables by
/// deglex first, then the remaining variables by deglex.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder deglex() { return MonomialOrder(OrderKind::Deglex, {}); }
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::Degrevlex, {}); }
  static MonomialOrder block(std::vector<std::size_t> front);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& front() const noexcept { return front_; }

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }

  /// The same order on exponents with `count` extra leading variables
  /// prepended; block indices are shifted.
  MonomialOrder shifted(std::size_t count) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> front) : kind_(kind), front_(std::move(front)) {}

  OrderKind kind_ = OrderKind::Deglex;
  std::vector<std::size_t> front_;  // sorted, block orders only
};

std::strong_ordering compare_monomials(const MonomialOrder& order, const Exponent& a, const Exponent& b);

}  // namespace skewpbw

template <>
struct std::hash<skewpbw::Exponent> {
  std::size_t operator()(const skewpbw::Exponent& e) const noexcept { return e.hash(); }
};
