// Adaptive-exact 2D orientation predicate.
//
// Follows the classic filtered-expansion technique: evaluate the 2x2
// determinant in doubles, accept the sign when it clears a forward error
// bound, and otherwise recompute the determinant exactly as a sum of
// nonoverlapping floating-point expansions.  This translation unit must be
// compiled with floating-point contraction disabled (see CMakeLists.txt):
// fused multiply-adds would break the two_product error terms.

#include <cmath>
#include <limits>

namespace visguard::detail {

namespace {

// epsilon = 2^-53, half the distance from 1.0 to the next double.
constexpr double kMachEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kSplitter = 134217729.0;  // 2^27 + 1
constexpr double kCcwErrBound = (3.0 + 16.0 * kMachEps) * kMachEps;

inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  y = (a - av) + (b - bv);
}

inline void split(double a, double& hi, double& lo) {
  const double c = kSplitter * a;
  hi = c - (c - a);
  lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
  x = a * b;
  double ahi, alo, bhi, blo;
  split(a, ahi, alo);
  split(b, bhi, blo);
  y = ((ahi * bhi - x) + ahi * blo + alo * bhi) + alo * blo;
}

// h = e + f where e, f, h are nonoverlapping expansions sorted by increasing
// magnitude.  Returns the length of h with zero components stripped.
int fast_expansion_sum_zeroelim(int elen, const double* e, int flen,
                                const double* f, double* h) {
  double q, qnew, hh;
  int eindex = 0, findex = 0, hindex = 0;

  double enow = e[0];
  double fnow = f[0];
  if ((fnow > enow) == (fnow > -enow)) {
    q = enow;
    ++eindex;
    enow = eindex < elen ? e[eindex] : 0.0;
  } else {
    q = fnow;
    ++findex;
    fnow = findex < flen ? f[findex] : 0.0;
  }
  if (eindex < elen && findex < flen) {
    if ((fnow > enow) == (fnow > -enow)) {
      two_sum(enow, q, qnew, hh);
      ++eindex;
      enow = eindex < elen ? e[eindex] : 0.0;
    } else {
      two_sum(fnow, q, qnew, hh);
      ++findex;
      fnow = findex < flen ? f[findex] : 0.0;
    }
    q = qnew;
    if (hh != 0.0) h[hindex++] = hh;
    while (eindex < elen && findex < flen) {
      if ((fnow > enow) == (fnow > -enow)) {
        two_sum(q, enow, qnew, hh);
        ++eindex;
        enow = eindex < elen ? e[eindex] : 0.0;
      } else {
        two_sum(q, fnow, qnew, hh);
        ++findex;
        fnow = findex < flen ? f[findex] : 0.0;
      }
      q = qnew;
      if (hh != 0.0) h[hindex++] = hh;
    }
  }
  while (eindex < elen) {
    two_sum(q, enow, qnew, hh);
    ++eindex;
    enow = eindex < elen ? e[eindex] : 0.0;
    q = qnew;
    if (hh != 0.0) h[hindex++] = hh;
  }
  while (findex < flen) {
    two_sum(q, fnow, qnew, hh);
    ++findex;
    fnow = findex < flen ? f[findex] : 0.0;
    q = qnew;
    if (hh != 0.0) h[hindex++] = hh;
  }
  if (q != 0.0 || hindex == 0) h[hindex++] = q;
  return hindex;
}

// Exact sign of ax*by - ax*cy - ay*bx + ay*cx + bx*cy - by*cx.
double orient2d_exact(double ax, double ay, double bx, double by, double cx,
                      double cy) {
  double t1[2], t2[2], t3[2], t4[2], t5[2], t6[2];
  two_product(ax, by, t1[1], t1[0]);
  two_product(ay, cx, t2[1], t2[0]);
  two_product(bx, cy, t3[1], t3[0]);
  two_product(ax, cy, t4[1], t4[0]);
  two_product(ay, bx, t5[1], t5[0]);
  two_product(by, cx, t6[1], t6[0]);

  double p12[4], p123[8], n12[4], n123[8];
  const int p12len = fast_expansion_sum_zeroelim(2, t1, 2, t2, p12);
  const int p123len = fast_expansion_sum_zeroelim(p12len, p12, 2, t3, p123);
  const int n12len = fast_expansion_sum_zeroelim(2, t4, 2, t5, n12);
  const int n123len = fast_expansion_sum_zeroelim(n12len, n12, 2, t6, n123);

  double neg[8];
  for (int i = 0; i < n123len; ++i) neg[i] = -n123[i];

  double det[16];
  const int detlen = fast_expansion_sum_zeroelim(p123len, p123, n123len, neg, det);
  return det[detlen - 1];
}

}  // namespace

double orient2d(double ax, double ay, double bx, double by, double cx,
                double cy) {
  const double detleft = (ax - cx) * (by - cy);
  const double detright = (ay - cy) * (bx - cx);
  const double det = detleft - detright;
  double detsum;

  if (detleft > 0.0) {
    if (detright <= 0.0) return det;
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return det;
    detsum = -detleft - detright;
  } else {
    return det;
  }

  const double errbound = kCcwErrBound * detsum;
  if (det >= errbound || -det >= errbound) return det;

  // The leading expansion component carries the exact sign and a faithful
  // approximation of the true determinant.
  return orient2d_exact(ax, ay, bx, by, cx, cy);
}

}  // namespace visguard::detail
