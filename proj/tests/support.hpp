#pragma once

#include <random>

#include "germlab/germs.hpp"
#include "germlab/jets.hpp"

namespace testing_support {

using germlab::Jet1;
using germlab::Jet2;
using germlab::Rational;

// Small rationals p/q with |p| <= range, q in {1, 2}.
inline Rational small_rational(std::mt19937_64& rng, int range = 3, int max_den = 2) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational nonzero_rational(std::mt19937_64& rng, int range = 3, int max_den = 2) {
  Rational q;
  do q = small_rational(rng, range, max_den);
  while (q == 0);
  return q;
}

template <class S>
S draw(std::mt19937_64& rng, int range = 3) {
  if constexpr (std::is_same_v<S, Rational>) {
    return small_rational(rng, range);
  } else {
    return std::uniform_real_distribution<double>(-0.5, 0.5)(rng) * range / 3.0;
  }
}

template <class S>
Jet1<S> random_jet1(std::mt19937_64& rng, int degree, int from = 0) {
  Jet1<S> a(degree);
  for (int k = from; k <= degree; ++k) a[k] = draw<S>(rng);
  return a;
}

template <class S>
Jet2<S> random_jet2(std::mt19937_64& rng, int degree, int from = 0) {
  Jet2<S> a(degree);
  for (int n = from; n <= degree; ++n)
    for (int j = 0; j <= n; ++j) a(n - j, j) = draw<S>(rng);
  return a;
}

// Diffeomorphism germ with a random invertible linear part and random higher terms.
template <class S>
germlab::Map2<S> random_diffeo(std::mt19937_64& rng, int degree) {
  for (;;) {
    germlab::Map2<S> m{random_jet2<S>(rng, degree, 2), random_jet2<S>(rng, degree, 2)};
    const S a = draw<S>(rng), b = draw<S>(rng), c = draw<S>(rng), d = draw<S>(rng);
    const S det = S(S(1) + a) * S(S(1) + d) - b * c;
    if (germlab::is_zero(det, 1e-2)) continue;
    m[0](1, 0) = S(1) + a;
    m[0](0, 1) = b;
    m[1](1, 0) = c;
    m[1](0, 1) = S(1) + d;
    return m;
  }
}

template <class S>
Jet1<S> random_line_change(std::mt19937_64& rng, int degree) {
  Jet1<S> h = random_jet1<S>(rng, degree, 2);
  S slope;
  do slope = draw<S>(rng);
  while (germlab::is_zero(slope, 0.05));
  h[1] = slope;
  return h;
}

// h_i ∘ f_i ∘ H_i and K ∘ gamma_i ∘ H_i with one shared plane change K.
template <class S>
germlab::PairDiagram<S> perturb_pair(std::mt19937_64& rng, const germlab::PairDiagram<S>& p) {
  const int d = std::min(p.first.degree(), p.second.degree());
  const auto K = random_diffeo<S>(rng, d);
  auto move = [&](const germlab::SingleDiagram<S>& s) {
    const auto H = random_diffeo<S>(rng, d);
    const auto h = random_line_change<S>(rng, d);
    return germlab::SingleDiagram<S>{germlab::compose(h, germlab::compose(s.f, H)),
                                     germlab::compose(K, germlab::compose(s.gamma, H))};
  };
  germlab::PairDiagram<S> out;
  out.first = move(p.first);
  out.second = move(p.second);
  return out;
}

}  // namespace testing_support
