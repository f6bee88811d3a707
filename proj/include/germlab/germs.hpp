#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "germlab/jets.hpp"

namespace germlab {

/// (R,0) <-f- (R^2,0) -gamma-> (R^2,0)
template <class S>
struct SingleDiagram {
  Jet2<S> f;
  Map2<S> gamma;

  int degree() const { return std::min({f.degree(), gamma[0].degree(), gamma[1].degree()}); }
};

/// Two single diagrams sharing the target plane (u, v).
template <class S>
struct PairDiagram {
  SingleDiagram<S> first;
  SingleDiagram<S> second;
};

enum class MapClass { regular, fold, cusp, degenerate };
enum class FunctionClass { submersion, morse, degenerate };
enum class SingleTag { I, II, III, IV, V, VI, nongeneric };
enum class PairTag { I_I_0, I_I_1, I_I_2, II_I, III_I_0, III_I_1, IV_I, V_I, VI_I, III_III, nongeneric };

std::string to_string(MapClass c);
std::string to_string(FunctionClass c);
std::string to_string(SingleTag t);
std::string to_string(PairTag t);  // "(I,I)^0", ..., "NONGENERIC"
PairTag parse_pair_tag(std::string_view text);

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct SingleType {
  SingleTag tag = SingleTag::nongeneric;
  std::string reason;  // first failed condition when nongeneric
  std::vector<Check> checks;
};

struct PairType {
  PairTag tag = PairTag::nongeneric;
  std::string reason;
  std::vector<Check> checks;
};

struct MapSingularity {
  MapClass kind = MapClass::degenerate;
  std::string reason;
};

template <class S>
MapSingularity map_singularity_class(const Map2<S>& gamma, double tol = default_tol_zero);

template <class S>
FunctionClass function_class(const Jet2<S>& f, double tol = default_tol_zero);

/// Source and target changes with target ∘ gamma ∘ source = (x, y^2).
template <class S>
struct FoldNormalization {
  Map2<S> source;
  Map2<S> target;
};

template <class S>
FoldNormalization<S> normalize_fold(const Map2<S>& gamma, double tol = default_tol_zero);

/// Regular parametrization of {det d gamma = 0} in the source.
template <class S>
Curve2<S> singular_curve(const Map2<S>& gamma, double tol = default_tol_zero);

/// Regular parametrization of {F = 0}.
template <class S>
Curve2<S> zero_set_curve(const Jet2<S>& F, double tol = default_tol_zero);

/// Source curve s -> p(s) with (f, gamma)(p(s)) = (f, gamma)(p(-s)), gamma a fold.
template <class S>
Curve2<S> double_point_curve(const Jet2<S>& f, const Map2<S>& gamma, double tol = default_tol_zero);

/// Vanishing order of F along the parametrized curve.
template <class S>
int contact_order(const Curve2<S>& curve, const Jet2<S>& F, double tol = default_tol_zero);

/// Plane curve where the two image families gamma(f^{-1}(t)) of a fold are tangent.
template <class S>
Curve2<S> criminant_curve(const Jet2<S>& f, const Map2<S>& gamma, double tol = default_tol_zero);

/// Unit direction of the lowest nonvanishing order of a curve.
template <class S>
std::array<double, 2> tangent_cone(const Curve2<S>& curve, double tol = default_tol_zero);

template <class S>
SingleType classify_single(const SingleDiagram<S>& d, double tol = default_tol_zero);

template <class S>
PairType classify_pair(const PairDiagram<S>& p, double tol = default_tol_zero);

#define GERMLAB_GERMS_EXTERN(S)                                                                  \
  extern template MapSingularity map_singularity_class(const Map2<S>&, double);                  \
  extern template FunctionClass function_class(const Jet2<S>&, double);                          \
  extern template FoldNormalization<S> normalize_fold(const Map2<S>&, double);                   \
  extern template Curve2<S> singular_curve(const Map2<S>&, double);                              \
  extern template Curve2<S> zero_set_curve(const Jet2<S>&, double);                              \
  extern template Curve2<S> double_point_curve(const Jet2<S>&, const Map2<S>&, double);          \
  extern template int contact_order(const Curve2<S>&, const Jet2<S>&, double);                   \
  extern template Curve2<S> criminant_curve(const Jet2<S>&, const Map2<S>&, double);             \
  extern template std::array<double, 2> tangent_cone(const Curve2<S>&, double);                  \
  extern template SingleType classify_single(const SingleDiagram<S>&, double);                   \
  extern template PairType classify_pair(const PairDiagram<S>&, double);

GERMLAB_GERMS_EXTERN(Rational)
GERMLAB_GERMS_EXTERN(double)
#undef GERMLAB_GERMS_EXTERN

}  // namespace germlab
