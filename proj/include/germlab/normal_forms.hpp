#pragma once

#include <optional>
#include <string>

#include "germlab/diagrams.hpp"
#include "germlab/germs.hpp"

namespace germlab {

/// Coordinate changes (h, H1, K, H2, k) with h∘f1 = f1'∘H1, K∘gamma1 = gamma1'∘H1,
/// K∘gamma2 = gamma2'∘H2 and k∘f2 = f2'∘H2.
template <class S>
struct CoordinateChangeChain {
  Jet1<S> h;
  Map2<S> H1;
  Map2<S> K;
  Map2<S> H2;
  Jet1<S> k;

  static CoordinateChangeChain identity(int degree) {
    return {Jet1<S>::identity(degree), identity_map<S>(degree), identity_map<S>(degree), identity_map<S>(degree),
            Jet1<S>::identity(degree)};
  }
};

/// `second` after `first`.
template <class S>
CoordinateChangeChain<S> then(const CoordinateChangeChain<S>& first, const CoordinateChangeChain<S>& second);

/// The diagram the chain carries `input` to.
template <class S>
PairDiagram<S> apply_chain(const PairDiagram<S>& input, const CoordinateChangeChain<S>& chain);

/// Largest coefficient among the six commutation residuals.
template <class S>
S verify_chain(const PairDiagram<S>& input, const CoordinateChangeChain<S>& chain, const PairDiagram<S>& output);

// ---- catalog -------------------------------------------------------------------

struct CatalogModuli {
  Expr theta = Expr::constant(0);  // over {x, y}, the second source
  Expr alpha = Expr::constant(0);  // over {u, v}; (VI,I) only
  int morse_sign = 1;              // (II,I): x^2 + sign y^2
};

/// Template diagram of a generic pair type with the moduli substituted.
PairExpr catalog(PairTag type, const CatalogModuli& moduli = {});

// ---- (III,III) reduction -------------------------------------------------------

/// H1 = (x A^2∘gamma1, y B∘gamma1), K = (u A^2, v B^2), H2 = (x A∘gamma2, y B^2∘gamma2); h = k = id.
template <class S>
CoordinateChangeChain<S> compatible_diffeo(const Jet2<S>& A, const Jet2<S>& B, int degree);

/// Chain with K∘gamma1∘H1^-1 = (x, y^2) and K∘gamma2∘H2^-1 = (x^2, y).
template <class S>
CoordinateChangeChain<S> reduce_fold_bigerm(const Map2<S>& gamma1, const Map2<S>& gamma2,
                                            double tol = default_tol_zero);

template <class S>
struct StageOneResult {
  Jet2<S> f;  // second function, linear part x + y
  CoordinateChangeChain<S> chain;
  PairDiagram<S> diagram;
};

template <class S>
StageOneResult<S> reduce_III_III_stage1(const PairDiagram<S>& p, double tol = default_tol_zero);

/// b with f(0, .)^-1 ∘ f(., 0) = t b(t), one degree below f.
template <class S>
Jet1<S> b_invariant(const Jet2<S>& f, double tol = default_tol_zero);

/// Formal a with a(t^4) = b(t)^2 a(t b(t))^4 and a(0) = 1, to degree N.
template <class S>
Jet1<S> solve_moduli_formal(const Jet1<S>& b, int N);

/// a(t^4) - b(t)^2 a(t b(t))^4.
template <class S>
Jet1<S> moduli_residual(const Jet1<S>& b, const Jet1<S>& a);

/// Chain from (x+y, gamma1; f, gamma2) to (x+y, gamma1; f', gamma2) with f'(x,0) = f'(0,x) = x.
template <class S>
CoordinateChangeChain<S> build_equivalence(const Jet2<S>& f, const Jet1<S>& a, double tol = default_tol_zero);

template <class S>
struct NormalFormResult {
  PairTag pair_type = PairTag::nongeneric;
  Jet2<S> theta;
  std::optional<Jet2<S>> alpha;
  CoordinateChangeChain<S> chain;
  PairDiagram<S> output;
};

template <class S>
NormalFormResult<S> reduce_III_III(const PairDiagram<S>& p, double tol = default_tol_zero);

#define GERMLAB_NF_EXTERN(S)                                                                                  \
  extern template CoordinateChangeChain<S> then(const CoordinateChangeChain<S>&, const CoordinateChangeChain<S>&); \
  extern template PairDiagram<S> apply_chain(const PairDiagram<S>&, const CoordinateChangeChain<S>&);            \
  extern template S verify_chain(const PairDiagram<S>&, const CoordinateChangeChain<S>&, const PairDiagram<S>&); \
  extern template CoordinateChangeChain<S> compatible_diffeo(const Jet2<S>&, const Jet2<S>&, int);               \
  extern template CoordinateChangeChain<S> reduce_fold_bigerm(const Map2<S>&, const Map2<S>&, double);           \
  extern template StageOneResult<S> reduce_III_III_stage1(const PairDiagram<S>&, double);                        \
  extern template Jet1<S> b_invariant(const Jet2<S>&, double);                                                   \
  extern template Jet1<S> solve_moduli_formal(const Jet1<S>&, int);                                              \
  extern template Jet1<S> moduli_residual(const Jet1<S>&, const Jet1<S>&);                                       \
  extern template CoordinateChangeChain<S> build_equivalence(const Jet2<S>&, const Jet1<S>&, double);            \
  extern template NormalFormResult<S> reduce_III_III(const PairDiagram<S>&, double);

GERMLAB_NF_EXTERN(Rational)
GERMLAB_NF_EXTERN(double)
#undef GERMLAB_NF_EXTERN

}  // namespace germlab
