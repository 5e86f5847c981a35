#include "poncelet/closed_forms.hpp"

#include <cmath>

namespace poncelet::closed_form {

namespace {

double sq(double v) { return v * v; }
double p4(double v) { return v * v * v * v; }

}  // namespace

double boundary_quartic(double a, double b, double fx, double fy, double gx, double gy, double x, double y) {
  const double r2 = x * x + y * y;
  const double a2 = a * a, a3 = a2 * a, a4 = a2 * a2, a5 = a4 * a, a6 = a4 * a2;
  const double b2 = b * b, b3 = b2 * b, b4 = b2 * b2, b6 = b4 * b2;
  return -b6 * ((-1 + fy * fy) * gx * gx + sq(-1 + fy * gy) + fx * fx * (-1 + gx * gx + gy * gy)) * x * x +
         2 * a5 * b * x *
             (b * (gx * (2 + fy * (fy + gy)) + fx * (2 + gy * (fy + gy))) - (gx * (3 * fy + gy) + fx * (fy + 3 * gy)) * y) +
         a6 * (b2 * (1 - fy * fy - gx * gx + fx * fx * (-1 + gx * gx) + (-1 + fy * fy) * gy * gy - 2 * fx * gx * (2 + fy * gy)) +
               2 * b * (fx + gx) * (fy * gx + fx * gy) * y -
               (sq(-1 + fx * gx) + (-1 + fx * fx) * gy * gy + fy * fy * (-1 + gx * gx + gy * gy)) * y * y) -
         4 * a3 * b2 * x *
             (b2 * (fx + gx + fy * gx * (fy + gy) + fx * gy * (fy + gy)) - b * (gx * (3 * fy + gy) + fx * (fy + 3 * gy)) * y +
              (fx + gx) * r2) +
         2 * a * b4 * x *
             (b2 * (fy + gy) * (fy * gx + fx * gy) - b * (gx * (3 * fy + gy) + fx * (fy + 3 * gy)) * y + 2 * (fx + gx) * r2) +
         a4 * b *
             (2 * b3 *
                  (1 + gx * gx - fx * fx * (-1 + gx * gx) + 2 * fy * gy + gy * gy + 2 * fx * (gx + fy * gx * gy) -
                   fy * fy * (-1 + gy * gy)) -
              b * (5 - 4 * fx * gx + (-1 + fy * fy) * gx * gx + fy * gy * (2 + fy * gy) + fx * fx * (-1 + gx * gx + gy * gy)) * x * x -
              4 * b2 * (fy + fy * gx * (fx + gx) + gy + fx * (fx + gx) * gy) * y +
              2 * b * (-1 - 2 * fy * gy - gy * gy + fy * fy * (-1 + gx * gx + gy * gy) + fx * fx * (gx * gx + gy * gy)) * y * y +
              4 * (fy + gy) * y * r2) +
         a2 * b2 *
             (b4 * (1 - gx * gx + fx * fx * (-1 + gx * gx) - 2 * fx * fy * gx * gy + (-1 + fy * fy) * gy * gy - fy * (fy + 4 * gy)) +
              2 * b3 * (fy * (2 + gx * (fx + gx)) + (2 + fx * (fx + gx)) * gy) * y - 4 * b * (fy + gy) * y * r2 + 4 * r2 * r2 +
              b2 * (2 * (-1 - 2 * fx * gx + (-1 + fy * fy) * gx * gx + fy * fy * gy * gy + fx * fx * (-1 + gx * gx + gy * gy)) * x * x -
                    (5 + fx * gx * (2 + fx * gx) - 4 * fy * gy + (-1 + fx * fx) * gy * gy + fy * fy * (-1 + gx * gx + gy * gy)) * y * y));
}

double line_locus(double a, double b, double fx, double fy, double gx, double gy, double t, double x, double y) {
  const double T = t * t + 1, tt = t * t;
  const double a2 = a * a, a3 = a2 * a, a5 = a3 * a2;
  const double b2 = b * b, b3 = b2 * b, b5 = b3 * b2;
  const double G = gx * gx + gy * gy - 1;
  return a5 * b *
             (T * fx * fx * G + T * fy * fy * G - 2 * fx * (3 * T * gx + tt - 1) + 2 * fy * (tt * gy + gy + 2 * t) +
              tt * (-(gx * (gx + 2) + gy * gy - 3)) + 4 * t * gy - gx * gx + 2 * gx - gy * gy + 3) -
         2 * a3 * b3 *
             (T * fx * fx * G + T * fy * fy * G - 2 * fx * (tt * (gx + 1) + gx - 1) - 2 * fy * (tt * gy + gy - 2 * t) +
              tt * (-(gx * (gx + 2) + gy * gy + 5)) + 4 * t * gy - (gx - 2) * gx - gy * gy - 5) +
         2 * a * y * (a - b) * (a + b) *
             (2 * t * (a2 * (-fx * gx + fy * gy + 1) + b2 * (fx * gx - fy * gy + 3)) +
              tt * (a - b) * (a + b) * (fy * gx + fx * gy + fy + gy) - (a - b) * (a + b) * (fy * (gx - 1) + (fx - 1) * gy)) -
         2 * b * x * (a - b) * (a + b) *
             (a2 * (tt * (-(fy * gy + gx + 3)) + fx * (tt * (gx - 1) + 2 * t * gy - gx - 1) + 2 * t * fy * gx + fy * gy - gx + 3) +
              b2 * (tt * (fx * (-gx) + fy * gy + fx + gx - 1) - 2 * t * (fy * gx + fx * gy) + fx * gx - fy * gy + fx + gx + 1)) +
         a * b5 *
             (T * fx * fx * G + T * fy * fy * G + 2 * fx * (tt * (gx - 1) + gx + 1) + fy * (4 * t - 6 * T * gy) +
              tt * (-(gx * (gx + 2) + gy * gy - 3)) + 4 * t * gy - gx * gx + 2 * gx - gy * gy + 3);
}

ExcludedPoint excluded_point(double a, double b, double fx, double fy, double gx, double gy, double t) {
  const double T = t * t + 1, tt = t * t, t3 = tt * t, t4 = tt * tt;
  const double G = gx * gx + gy * gy - 1;
  ExcludedPoint q;
  q.delta = (a - b) * (a + b) *
            (-2 * t3 * (fx + gx + 2) + T * fy * (tt * (gx + 1) + gx - 1) + T * gy * (tt * (fx + 1) + fx - 1) -
             2 * t * (fx + gx - 2));
  q.qx = a * a * a *
             (t * T * fy * fy * G - (tt - 1) * fy * (tt * (gx + 1) + gx - 1) + t * T * (fx * fx - 1) * gy * gy -
              (tt - 1) * gy * (tt * (fx + 1) + fx - 1) +
              t * (-2 * fx * (2 * T * gx + tt - 1) + T * fx * fx * (gx * gx - 1) - gx * (tt * (gx + 2) + gx - 2) + tt + 1)) -
         a * b * b *
             (t * T * fy * fy * G +
              t * (t * gy * (tt * (fx + 1) + 6) + T * (fx * fx - 1) * gy * gy + T * (fx * fx - 1) * gx * gx +
                   tt * (-(fx * (fx + 2) + 3)) - 2 * (tt - 1) * gx) +
              fy * ((t4 - 1) * gx - 4 * (t3 + t) * gy + t4 + 6 * tt + 1) - fx * gy - t * ((fx - 2) * fx + 3) + gy);
  q.qy = b * b * b *
             ((t4 - 1) * fx * fx * G + (t4 - 1) * fy * fy * G - 4 * t * fx * (tt * gy + gy - 2 * t) -
              4 * fy * ((t4 - 1) * gy + t3 * (gx - 1) + t * gx + t) + t4 * (-G) + 4 * t3 * gy + 8 * tt * gx - 4 * t * gy +
              gx * gx + gy * gy - 1) -
         a * a * b *
             ((t4 - 1) * fx * fx * G + (t4 - 1) * fy * fy * G + 4 * t * fy * (tt * (gx + 1) + gx - 1) -
              4 * fx * ((t4 - 1) * gx - (t3 + t) * gy + t4 + 1) + t4 * (-(gx * (gx + 4) + gy * gy + 3)) + 4 * t3 * gy -
              4 * t * gy + (gx - 4) * gx + gy * gy + 3);
  return q;
}

double line_envelope(double a, double b, double fx, double fy, double gx, double gy, double x, double y,
                     bool restored) {
  const double G = gx * gx + gy * gy - 1;
  const double Fq = fx * fx + fy * fy - 1;
  const double S = gx * gx + gy * gy;
  const double a2 = a * a, a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
  const double b2 = b * b, b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4;
  const double amb2 = sq(a - b), apb2 = sq(a + b);

  const double term1 = 8 * a * b * x * y * (fx - gx) * (fy - gy) * p4(a2 - b2);
  const double term2 =
      4 * a2 * amb2 * b * apb2 * y *
      ((Fq * gy * gy * gy + fy * Fq * gy * gy + ((gx * gx + 1) * fx * fx - 2 * gx * fx + (fy * fy - 1) * (gx * gx - 1)) * gy +
        fy * (fx * fx + fy * fy + 1) * gx * gx - fy * Fq - 2 * fx * fy * gx) *
           a4 +
       2 * b2 *
           (-Fq * gy * gy * gy - fy * (fx * fx + fy * fy - 5) * gy * gy -
            (fx * fx + 2 * gx * fx - 5 * fy * fy + Fq * gx * gx - 3) * gy +
            fy * (fx * fx - 2 * gx * fx + fy * fy - (fx * fx + fy * fy + 1) * gx * gx + 3)) *
           a2 +
       b4 * (Fq * gy * gy * gy + fy * (fx * fx + fy * fy - 9) * gy * gy +
             (fx * fx + 6 * gx * fx - 9 * fy * fy + Fq * gx * gx + 9) * gy + fy * (fx * fx + fy * fy + 1) * gx * gx -
             fy * (fx * fx + fy * fy - 9) + 6 * fx * fy * gx));
  const double term3 =
      -4 * amb2 * b2 * apb2 * x * x *
      ((G * fx * fx - 8 * gx * fx + (fy * fy - 1) * gx * gx + sq(fy * gy + 3)) * a4 -
       2 * b2 * (G * fx * fx - 4 * gx * fx + (fy * fy - 1) * gx * gx + fy * gy * (fy * gy + 2) - 3) * a2 +
       b4 * (G * fx * fx + (fy * fy - 1) * gx * gx + sq(fy * gy - 1)));
  const double term4 =
      -4 * a2 * amb2 * apb2 * y * y *
      ((G * fy * fy + sq(fx * gx - 1) + (fx * fx - 1) * gy * gy) * a4 -
       2 * b2 * (G * fy * fy - 4 * gy * fy + (fx * fx - 1) * gy * gy + (fx * gx - 1) * (fx * gx + 3)) * a2 +
       b4 * (G * fy * fy - 8 * gy * fy + sq(fx * gx + 3) + (fx * fx - 1) * gy * gy));
  const double term5 =
      4 * a * amb2 * b2 * apb2 * x *
      ((G * fx * fx * fx + gx * (gx * gx + gy * gy - 9) * fx * fx +
        ((fy * fy + 1) * gy * gy + 6 * fy * gy + (fy * fy - 9) * (gx * gx - 1)) * fx +
        gx * ((gx * gx + gy * gy + 1) * fy * fy + 6 * gy * fy - gx * gx - gy * gy + 9)) *
           a4 -
       2 * b2 *
           (G * fx * fx * fx + gx * (gx * gx + gy * gy - 5) * fx * fx +
            (G * fy * fy + 2 * gy * fy - 5 * gx * gx + gy * gy - 3) * fx +
            gx * ((gx * gx + gy * gy + 1) * fy * fy + 2 * gy * fy - gx * gx - gy * gy - 3)) *
           a2 +
       b4 * (G * fx * fx * fx + gx * G * fx * fx + ((fy * fy + 1) * gy * gy - 2 * fy * gy + (fy * fy - 1) * (gx * gx - 1)) * fx +
             gx * ((gx * gx + gy * gy + 1) * fy * fy - 2 * gy * fy - gx * gx - gy * gy + 1)));
  const double mid_constant = restored ? 3 * S * S + 59 : 59;
  const double term6 =
      a2 * b2 *
      ((G * G * p4(fx) - 12 * gx * G * fx * fx * fx +
        2 * (22 * gx * gx + fy * fy * G * G + 2 * fy * gy * G - (gx * gx + (gy - 2) * gy) * (gx * gx + gy * (gy + 2)) - 5) * fx * fx -
        4 * gx * (3 * G * fy * fy + 6 * gy * fy - 3 * gx * gx - 3 * gy * gy + 11) * fx + p4(fy) * G * G +
        4 * fy * fy * fy * gy * G - 4 * fy * gy * G + (S - 9) * G -
        2 * fy * fy * (p4(gx) - 4 * gx * gx + p4(gy) + 2 * (gx * gx - 3) * gy * gy + 5)) *
           a8 -
       4 * b2 *
           (G * G * p4(fx) - 8 * gx * G * fx * fx * fx + 2 * (6 * gx * gx + fy * fy * G * G - S * S - 1) * fx * fx +
            8 * gx * (-G * fy * fy + gy * fy + gx * gx + gy * gy + 2) * fx + p4(fy) * G * G - 24 * fy * gy +
            (S - 5) * (S + 3) - 2 * fy * fy * (2 * gy * gy + S * S + 1)) *
           a6 +
       2 * b4 *
           (3 * G * G * p4(fx) - 12 * gx * G * fx * fx * fx +
            2 * (-6 * gx * gx - 4 * gy * gy + 3 * fy * fy * G * G - 3 * S * S - 6 * fy * gy * G + 1) * fx * fx +
            4 * gx * (-3 * G * fy * fy + 14 * gy * fy + 3 * gx * gx + 3 * gy * gy + 1) * fx + 2 * gx * gx + 2 * gy * gy +
            3 * p4(fy) * G * G - 12 * fy * fy * fy * gy * G + 4 * fy * (3 * gy * gy * gy + 3 * gx * gx * gy + gy) -
            2 * fy * fy * (3 * p4(gx) + 4 * gx * gx + 3 * p4(gy) + 6 * (gx * gx + 1) * gy * gy - 1) + mid_constant) *
           a4 -
       4 * b6 *
           (G * G * p4(fx) + 2 * (-2 * gx * gx + fy * fy * G * G - S * S - 4 * fy * gy * G - 1) * fx * fx +
            8 * gx * (fy * gy - 3) * fx + p4(fy) * G * G - 8 * fy * fy * fy * gy * G + 8 * fy * gy * (S + 2) +
            (S - 5) * (S + 3) - 2 * fy * fy * (-6 * gy * gy + S * S + 1)) *
           a2 +
       b8 * (G * G * p4(fx) + 4 * gx * G * fx * fx * fx +
             2 * (6 * gx * gx + fy * fy * G * G - 6 * fy * gy * G - (gx * gx + (gy - 2) * gy) * (gx * gx + gy * (gy + 2)) - 5) * fx * fx +
             4 * gx * ((fy * fy - 1) * gy * gy - 6 * fy * gy + (fy * fy - 1) * (gx * gx - 1)) * fx + p4(fy) * G * G -
             12 * fy * fy * fy * gy * G + (S - 9) * G + 4 * fy * gy * (3 * gx * gx + 3 * gy * gy - 11) -
             2 * fy * fy * (p4(gx) - 4 * gx * gx + p4(gy) + 2 * (gx * gx - 11) * gy * gy + 5)));
  return 4 * (term1 + term2 + term3 + term4 + term5 + term6);
}

}  // namespace poncelet::closed_form
