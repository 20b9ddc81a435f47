#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fsind/cyclotomic.hpp"
#include "fsind/group.hpp"

namespace fsind {

/// One value per conjugacy class, in the group's canonical class order.
using ClassFunction = std::vector<CyclotomicNumber>;

/// Ordinary character table with exact values.
///
/// The value of a character on class K is stored in Q(zeta_o) for o the
/// element order of K. Characters are ordered trivial first, then by
/// degree, then lexicographically by value vector.
class CharacterTable {
 public:
  /// Dixon-Schneider over F_p, lifted to exact values and verified by
  /// row orthogonality before returning.
  static CharacterTable compute(const Group& g);
  /// Restores a table from its JSON form; class data must agree with g.
  static CharacterTable from_json(const Group& g, const nlohmann::json& doc);
  nlohmann::json to_json(const std::string& groupspec) const;

  const Group& group() const { return group_; }
  std::size_t num_classes() const { return chars_.size(); }
  std::size_t num_chars() const { return chars_.size(); }
  const ClassFunction& character(std::size_t i) const { return chars_[i]; }
  const std::vector<ClassFunction>& characters() const { return chars_; }
  long long degree(std::size_t i) const { return degrees_[i]; }
  std::size_t exponent() const { return exponent_; }
  /// Prime used by the modular part of the computation.
  long long prime() const { return prime_; }

  int fs_indicator(std::size_t i) const { return eps_[i]; }
  const std::vector<int>& fs_indicators() const { return eps_; }
  bool is_real(std::size_t i) const { return real_[i]; }
  bool is_2rational(std::size_t i) const { return two_rational_[i]; }
  /// Orbits of Gal(Q(zeta_e)/Q(zeta_{e'})) on Irr(G), e' the odd part of e.
  const std::vector<std::vector<std::size_t>>& two_conjugate_families() const { return families_; }
  /// Index of the complex conjugate character.
  std::size_t conjugate_char(std::size_t i) const { return conj_[i]; }
  /// Character chi^(sigma_k) = chi o (power map k), k coprime to exponent.
  std::vector<std::size_t> galois_perm(long long k) const;

  /// theta(g) = #{y : y^2 = g} = sum eps(chi) chi(g).
  ClassFunction sqrt_count() const;

  /// Classes whose elements have odd order.
  std::vector<std::size_t> odd_classes() const;
  std::size_t find_character(const ClassFunction& f) const;  // npos if absent

 private:
  explicit CharacterTable(Group g) : group_(std::move(g)) {}
  void finish();  // orders, verifies and derives indicators/flags

  Group group_;
  std::vector<ClassFunction> chars_;
  std::vector<long long> degrees_;
  std::vector<int> eps_;
  std::vector<bool> real_, two_rational_;
  std::vector<std::size_t> conj_;
  std::vector<std::vector<std::size_t>> families_;
  std::size_t exponent_ = 1;
  long long prime_ = 0;
};

/// Class function from a function on elements (evaluated on class reps).
ClassFunction class_function(const Group& g, const std::function<CyclotomicNumber(const Perm&)>& f);
ClassFunction trivial_character(const Group& g);
/// Number of fixed points of the natural action.
ClassFunction natural_perm_character(const Group& g);

/// (1/|G|) sum_g a(g) conj(b(g)).
CyclotomicNumber inner_product(const Group& g, const ClassFunction& a, const ClassFunction& b);
/// Same sum restricted to elements of odd order.
CyclotomicNumber inner_product_odd(const Group& g, const ClassFunction& a, const ClassFunction& b);

ClassFunction restrict_to(const Group& g, const ClassFunction& f, const Group& h);
ClassFunction induce(const Group& h, const ClassFunction& f, const Group& g);

ClassFunction add(const ClassFunction& a, const ClassFunction& b);
ClassFunction scale(const ClassFunction& a, const CyclotomicNumber& c);
ClassFunction conjugate(const ClassFunction& a);

/// {y in g : y^2 = x} counted by direct enumeration, per class of g.
std::vector<std::size_t> enumerate_sqrt_counts(const Group& g);

nlohmann::json cyclotomic_to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const nlohmann::json& j);

}  // namespace fsind
