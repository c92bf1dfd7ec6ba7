#pragma once

// Rational elliptic fibrations given as pencils of plane cubics: the
// E(a:b:c) family and the six Beauville surfaces, with singular fibre data
// and base-parameter twists.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cymod/modp.hpp"
#include "cymod/poly.hpp"
#include "cymod/projective.hpp"
#include "cymod/ternary.hpp"

namespace cymod {

enum class BeauvilleLabel { Gamma3, Gamma1_4_Gamma2, Gamma1_5, Gamma1_6, Gamma0_8_Gamma1_4, Gamma0_9_Gamma1_3 };

std::string_view label_name(BeauvilleLabel l);
std::optional<BeauvilleLabel> parse_label(std::string_view name);
const std::vector<BeauvilleLabel>& all_beauville_labels();

// The untwisted pencil: either E(a:b:c) or a Beauville row.
class Family {
 public:
  static Family abg(Rational a, Rational b, Rational c);
  static Family beauville(BeauvilleLabel l) { return Family(l); }

  bool is_abg() const { return !label_; }
  const std::array<Rational, 3>& params() const { return params_; }
  BeauvilleLabel label() const { return *label_; }

  // Members are v*F0 - u*F1 = 0 over t = (u:v); t = oo gives F1.
  const RatForm& f0() const { return f0_; }
  const RatForm& f1() const { return f1_; }

  std::string to_string() const;
  friend bool operator==(const Family& a, const Family& b) { return a.to_string() == b.to_string(); }

 private:
  explicit Family(BeauvilleLabel l);
  Family(Rational a, Rational b, Rational c);
  std::optional<BeauvilleLabel> label_;
  std::array<Rational, 3> params_;
  RatForm f0_ = rat_form(3), f1_ = rat_form(3);
};

struct SingularFibre {
  BasePoint location;
  int m = 0;  // Kodaira type I_m
  // Square classes; unset at locations that are not Q-rational.
  std::optional<Integer> split_disc;
  std::optional<bool> comps_rational;
  std::optional<Integer> comp_disc;
};

class FibrationSpec {
 public:
  FibrationSpec(Family family, Moebius twist = Moebius());
  // "abg(1,9/4,9/4)", "beauville(gamma1_5)", optional "@[[a,b],[c,d]]".
  static FibrationSpec parse(std::string_view text);

  const Family& family() const { return family_; }
  const Moebius& twist() const { return twist_; }
  // (E^{Mt})^{Nt} = E^{(MN)t}
  FibrationSpec twisted(const Moebius& n) const { return FibrationSpec(family_, twist_ * n); }
  FibrationSpec untwisted() const { return FibrationSpec(family_); }

  std::string to_string() const;
  friend bool operator==(const FibrationSpec& a, const FibrationSpec& b) {
    return a.family_ == b.family_ && a.twist_ == b.twist_;
  }

 private:
  Family family_;
  Moebius twist_;
};

// Adds named aliases from lines "name = <fibration spec>"; '#' starts a comment.
void load_catalog_overrides(const std::string& path);
std::optional<FibrationSpec> lookup_alias(std::string_view name);

// Member of the untwisted pencil at a base point, over the point's field.
RatForm member_form(const Family& f, const ProjPoint<Rational>& t);
TernaryForm<QuadElem> member_form(const Family& f, const ProjPoint<QuadElem>& t);

// Discriminant of the member F0 - t*F1 as a polynomial in t (up to a constant).
Poly discriminant_poly(const Family& f);

std::vector<std::pair<BasePoint, int>> discriminant_profile(const FibrationSpec& spec);
std::vector<SingularFibre> singular_locus(const FibrationSpec& spec);

// Sum of m over the locus; 12 for a rational elliptic surface.
int euler_total(const std::vector<SingularFibre>& locus);

// Square classes (split_disc, comp_disc) of a Q-rational singular fibre.
std::pair<Integer, Integer> splitting_data(const FibrationSpec& spec, const SingularFibre& fibre);

// Branch-field square class of a singular member over Q.
Integer member_split_disc(const RatForm& member);

// Member of the untwisted family at M(t) over F_p.
CubicModP fibre_cubic(const FibrationSpec& spec, const ProjPoint<Rational>& t, i64 p);
CubicModP fibre_cubic(const FibrationSpec& spec, i64 t_index, i64 p);

// Reductions mod p of the pencil (untwisted).
std::pair<CubicModP, CubicModP> pencil_mod_p(const Family& f, i64 p);

// Image of a point of P^1(F_p) under a Moebius map reduced mod p.
i64 apply_mod_p(const Moebius& m, i64 t_index, i64 p);

// Indices in P^1(F_p) of the reductions of a location (0, 1 or 2 of them).
std::vector<i64> reduce_location(const BasePoint& t, i64 p);

}  // namespace cymod
