#pragma once

#include <string_view>

#include "germlab/expr.hpp"
#include "germlab/germs.hpp"

namespace germlab {

/// Closed-form single diagram over the source variables {x, y}.
struct SingleExpr {
  Expr f;
  Expr gamma_u;
  Expr gamma_v;
};

struct PairExpr {
  SingleExpr first;
  SingleExpr second;
};

inline SingleExpr parse_single(std::string_view f, std::string_view gu, std::string_view gv) {
  const VariableSet& xy = VariableSet::source();
  return {parse(f, xy), parse(gu, xy), parse(gv, xy)};
}

template <class S>
SingleDiagram<S> to_jets(const SingleExpr& d, int degree) {
  return {taylor2<S>(d.f, degree), {taylor2<S>(d.gamma_u, degree), taylor2<S>(d.gamma_v, degree)}};
}

template <class S>
PairDiagram<S> to_jets(const PairExpr& p, int degree) {
  return {to_jets<S>(p.first, degree), to_jets<S>(p.second, degree)};
}

}  // namespace germlab
