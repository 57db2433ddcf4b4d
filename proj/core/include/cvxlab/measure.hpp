#pragma once

#include <cvxlab/function.hpp>
#include <cvxlab/transforms.hpp>

#include <optional>

namespace cvxlab {

struct MassResult {
  MassKind kind = MassKind::kZero;
  double value = 0.0;  // meaningful only when kind == kFinite
  Vec moment;          // integral of x * e^{-phi}, same caveat
};

struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  // false only for evaluated, violated checks; informational entries with
  // unknown universal constants report evaluated = false.
  bool evaluated = false;
  bool satisfied = true;
};

struct ProductReport {
  TransformTag transform = TransformTag::kLegendre;
  MassResult mass_primal;
  MassResult mass_dual;
  std::optional<double> product;  // for the gauge transform: the quotient
  ClassTags tags;
  std::vector<BoundCheck> bounds_check;
};

// Optional numeric values for the universal constants appearing in the
// two-sided product bounds; unset constants leave those checks informational.
struct BoundConstants {
  std::optional<double> legendre_lower_c;
  std::optional<double> polarity_lower_c;
  std::optional<double> polarity_upper_C;
  std::optional<double> gauge_c_n;
};

// Exact integral of e^{-phi}. Between consecutive epigraph vertex heights the
// level-set volume is a polynomial of degree <= n, recovered from exact
// volume evaluations at interior nodes and integrated against e^{-t} in
// closed form; one fixed-combinatorics tail interval completes the range.
MassResult exp_integral(const Fn& f);

// Barycenter of e^{-phi} dx; NotIntegrable unless the mass is finite.
Vec centroid(const Fn& f);

// Product functional of phi and its transform (quotient for the gauge).
// Preconditions: 0 interior to dom(phi); polarity/gauge additionally need a
// geometric phi. IllPositioned on violation.
ProductReport product(const Fn& f, TransformTag tag,
                      const BoundConstants& constants = {});

// sup e^{-phi} <= e^n * e^{-phi(0)} for centered integrable inputs
// (NotCentered / NotIntegrable on precondition failure).
bool fradelizi_check(const Fn& f);

// vol(B_2^n), used by the product bound records.
double unit_ball_volume(int n);

}  // namespace cvxlab
