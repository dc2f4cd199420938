#pragma once

// Literal transcription of the coordinate formulas. Everything here is
// generic in the scalar type so that the same code path can be evaluated on
// exact rationals and on the Lipschitz-bound type used by the tests. A
// scalar type T must provide T(long), +, -, unary -, T * T, comparisons, and
// the free functions abs, pl_max, pl_min and sign_or found by ADL.
//
// Conventions: `pl_max` is the binary supremum (written with a vee in the
// source formulas) and `pl_min` the binary infimum. Pants-local indices are
// 1, 2, 3 in the pants' cyclic order.

namespace dtc::formulas {

/// Arc weights of one pair of pants: lambda_ii are loops, lambda_ij arcs
/// between boundary i and boundary j.
template <class T>
struct ArcWeights {
  T l11{0}, l22{0}, l33{0}, l12{0}, l13{0}, l23{0};

  friend bool operator==(const ArcWeights&, const ArcWeights&) = default;
};

namespace detail {

/// Loop weight 2 lambda_ii = (m_i - m_j - m_k) v 0.
template <class T>
T loop_weight(const T& mi, const T& mj, const T& mk) {
  return pl_max(mi - mj - mk, T(0)) * T(1, 2);
}

/// Arc weight between i and j. Outside the triangle region the half-sum
/// (m_i + m_j - m_k)/2 overshoots, so it is capped by m_i and m_j; this keeps
/// m_i = 2 lambda_ii + lambda_ij + lambda_ik exact in every regime.
template <class T>
T arc_weight(const T& mi, const T& mj, const T& mk) {
  return pl_max(pl_min(pl_min((mi + mj - mk) * T(1, 2), mi), mj), T(0));
}

}  // namespace detail

template <class T>
ArcWeights<T> arc_weights(const T& m1, const T& m2, const T& m3) {
  using detail::arc_weight;
  using detail::loop_weight;
  return ArcWeights<T>{loop_weight(m1, m2, m3), loop_weight(m2, m1, m3), loop_weight(m3, m1, m2),
                       arc_weight(m1, m2, m3),  arc_weight(m1, m3, m2),  arc_weight(m2, m3, m1)};
}

/// m_i = 2 lambda_ii + lambda_ij + lambda_ik.
template <class T>
struct Intersections {
  T m1, m2, m3;
};

template <class T>
Intersections<T> intersections(const ArcWeights<T>& w) {
  return {T(2) * w.l11 + w.l12 + w.l13, T(2) * w.l22 + w.l12 + w.l23, T(2) * w.l33 + w.l13 + w.l23};
}

/// Dehn twist on a pants curve: m fixed, t shifted by sign * m.
template <class T>
T twisted(const T& m, const T& t, int sign) {
  return t + T(sign) * m;
}

// ---------------------------------------------------------------------------
// First elementary transformation (one-holed torus).
//
// Pants-local index 1 is the outer boundary of the one-holed torus; 2 and 3
// are the two sides of the moved curve, so r = lambda_12 = lambda_13. t1 is
// the twist of the moved curve and t2 the twist of the outer curve.

template <class T>
struct FirstMoveInput {
  T lambda11, lambda23, r, t1, t2;
};

template <class T>
struct FirstMoveOutput {
  T lambda11, lambda12, lambda13, lambda23, t1, t2;
};

template <class T>
FirstMoveOutput<T> first_elementary(const FirstMoveInput<T>& in) {
  const T& lambda11 = in.lambda11;
  const T& lambda23 = in.lambda23;
  const T& r = in.r;
  const T& t1 = in.t1;
  const T& t2 = in.t2;

  FirstMoveOutput<T> out;
  out.lambda11 = pl_max(r - abs(t1), T(0));
  const T L = r - out.lambda11;
  out.lambda12 = L + lambda11;
  out.lambda13 = out.lambda12;
  out.lambda23 = abs(t1) - L;
  out.t2 = t2 + lambda11 + pl_max(pl_min(L, t1), T(0));
  out.t1 = T(-sign_or(t1, -1)) * (lambda23 + L);
  return out;
}

// ---------------------------------------------------------------------------
// Second elementary transformation (four-holed sphere).
//
// lambda: bottom pants, read from the moved curve (local 1) with local 2 on
// role-3 and local 3 on role-2. kappa: top pants, local 2 on role 4 and
// local 3 on role 5. Primed weights: lambda' for the left pants (moved
// curve, role 2, role 4) and kappa' for the right pants (moved curve,
// role 5, role 3). t[k] is the twist on the curve of role k (t[1] is the
// moved curve, t[0] unused).

template <class T>
struct SecondMoveInput {
  ArcWeights<T> lambda, kappa;
  T t[6];
};

template <class T>
struct SecondMoveOutput {
  ArcWeights<T> lambda, kappa;
  T t[6];
};

template <class T>
SecondMoveOutput<T> second_elementary(const SecondMoveInput<T>& in) {
  const ArcWeights<T>& l = in.lambda;
  const ArcWeights<T>& k = in.kappa;
  const T& t1 = in.t[1];
  const T& t2 = in.t[2];
  const T& t3 = in.t[3];
  const T& t4 = in.t[4];
  const T& t5 = in.t[5];
  const T zero(0);
  const T two(2);

  const T L = l.l11 + t1;
  const T K = k.l11 + t1;

  SecondMoveOutput<T> out;
  ArcWeights<T>& kp = out.kappa;
  ArcWeights<T>& lp = out.lambda;

  kp.l11 = k.l22 + l.l33 + pl_max(L - k.l13, zero) + pl_max(-L - l.l12, zero);
  kp.l22 = pl_max(pl_min(pl_min(L, l.l11), k.l13 - l.l12 - L), zero);
  kp.l33 = pl_max(pl_min(pl_min(-L, k.l11), l.l12 - k.l13 + L), zero);
  kp.l23 = pl_max(pl_min(pl_min(pl_min(k.l13, l.l12), k.l13 - L), l.l12 + L), zero);
  kp.l12 = -two * kp.l22 - kp.l23 + k.l13 + k.l23 + two * k.l33;
  kp.l13 = -two * kp.l33 - kp.l23 + l.l12 + l.l23 + two * l.l22;

  lp.l11 = l.l22 + k.l33 + pl_max(K - l.l13, zero) + pl_max(-K - k.l12, zero);
  lp.l22 = pl_max(pl_min(pl_min(K, k.l11), l.l13 - k.l12 - K), zero);
  lp.l33 = pl_max(pl_min(pl_min(-K, l.l11), k.l12 - l.l13 + K), zero);
  lp.l23 = pl_max(pl_min(pl_min(pl_min(l.l13, k.l12), l.l13 - K), k.l12 + K), zero);
  lp.l12 = -two * lp.l22 - lp.l23 + l.l13 + l.l23 + two * l.l33;
  lp.l13 = -two * lp.l33 - lp.l23 + k.l12 + k.l23 + two * k.l22;

  out.t[0] = zero;
  out.t[2] = t2 + l.l33 + pl_max(pl_min(l.l13 - lp.l23 - two * lp.l22, K + lp.l33 - lp.l22), zero);
  out.t[3] = t3 - kp.l33 + pl_min(pl_max(L + kp.l33 - kp.l22, kp.l23 + two * kp.l33 - l.l12), zero);
  out.t[4] = t4 - lp.l33 + pl_min(pl_max(K + lp.l33 - lp.l22, lp.l23 + two * lp.l33 - k.l12), zero);
  out.t[5] = t5 + k.l33 + pl_max(pl_min(k.l13 - kp.l23 - two * kp.l22, L + kp.l33 - kp.l22), zero);

  // sgn(0) is +1 unless lambda_12 - 2 kappa'_33 - kappa'_23 vanishes.
  const int zero_sign = (l.l12 - two * kp.l33 - kp.l23) != zero ? 1 : -1;
  const int s = sign_or(L + K + lp.l33 - lp.l22 + kp.l33 - kp.l22, zero_sign);
  out.t[1] = k.l22 + l.l22 + k.l33 + l.l33 - (lp.l11 + kp.l11 + (out.t[2] - t2) + (out.t[5] - t5)) +
             T(s) * (t1 + lp.l33 + kp.l33);
  return out;
}

}  // namespace dtc::formulas
