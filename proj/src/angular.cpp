#include "rydsim/angular.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace rydsim {

namespace {

constexpr int kMaxFact = 170; // largest n with n! finite in double

const std::array<double, kMaxFact + 1>& factorial_table() {
    static const auto table = [] {
        std::array<double, kMaxFact + 1> t{};
        t[0] = 1.0;
        for (int i = 1; i <= kMaxFact; ++i)
            t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    return table;
}

double fact(int n) {
    if (n < 0 || n > kMaxFact)
        throw std::invalid_argument("factorial argument out of range");
    return factorial_table()[n];
}

// Doubled representation: all angular momenta handled as integers 2j.
int doubled(double j, const char* name) {
    const double two = 2.0 * j;
    const int r = static_cast<int>(std::lround(two));
    if (std::abs(two - r) > 1e-9)
        throw std::invalid_argument(std::string(name) + " must be integer or half-integer");
    return r;
}

bool triangle_ok(int ta, int tb, int tc) {
    // doubled args; parity of the triad must also match
    return tc >= std::abs(ta - tb) && tc <= ta + tb && (ta + tb + tc) % 2 == 0;
}

// sqrt of the triangle coefficient, doubled args
double sqrt_delta(int ta, int tb, int tc) {
    return std::sqrt(fact((ta + tb - tc) / 2) * fact((ta - tb + tc) / 2) *
                     fact((-ta + tb + tc) / 2) / fact((ta + tb + tc) / 2 + 1));
}

} // namespace

double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3) {
    const int tj1 = doubled(j1, "j1"), tj2 = doubled(j2, "j2"), tj3 = doubled(j3, "j3");
    const int tm1 = doubled(m1, "m1"), tm2 = doubled(m2, "m2"), tm3 = doubled(m3, "m3");
    if (tj1 < 0 || tj2 < 0 || tj3 < 0)
        throw std::invalid_argument("negative angular momentum");

    if (tm1 + tm2 + tm3 != 0) return 0.0;
    if (!triangle_ok(tj1, tj2, tj3)) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3) return 0.0;
    if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj3 + tm3) % 2 != 0) return 0.0;

    // Racah sum; all indices below are plain integers
    const int a1 = (tj1 + tj2 - tj3) / 2;
    const int a2 = (tj1 - tm1) / 2;
    const int a3 = (tj2 + tm2) / 2;
    const int b1 = (tj2 - tj3 - tm1) / 2;
    const int b2 = (tj1 - tj3 + tm2) / 2;

    const int tmin = std::max({0, b1, b2});
    const int tmax = std::min({a1, a2, a3});
    if (tmin > tmax) return 0.0;

    double sum = 0.0;
    for (int t = tmin; t <= tmax; ++t) {
        const double term = fact(t) * fact(t - b1) * fact(t - b2) * fact(a1 - t) *
                            fact(a2 - t) * fact(a3 - t);
        sum += ((t % 2 == 0) ? 1.0 : -1.0) / term;
    }

    const double pref =
        sqrt_delta(tj1, tj2, tj3) *
        std::sqrt(fact((tj1 + tm1) / 2) * fact((tj1 - tm1) / 2) * fact((tj2 + tm2) / 2) *
                  fact((tj2 - tm2) / 2) * fact((tj3 + tm3) / 2) * fact((tj3 - tm3) / 2));

    const int phase = (tj1 - tj2 - tm3) / 2;
    return (phase % 2 == 0 ? 1.0 : -1.0) * pref * sum;
}

double wigner6j(double j1, double j2, double j3, double j4, double j5, double j6) {
    const int t1 = doubled(j1, "j1"), t2 = doubled(j2, "j2"), t3 = doubled(j3, "j3");
    const int t4 = doubled(j4, "j4"), t5 = doubled(j5, "j5"), t6 = doubled(j6, "j6");
    if (t1 < 0 || t2 < 0 || t3 < 0 || t4 < 0 || t5 < 0 || t6 < 0)
        throw std::invalid_argument("negative angular momentum");

    if (!triangle_ok(t1, t2, t3) || !triangle_ok(t1, t5, t6) || !triangle_ok(t4, t2, t6) ||
        !triangle_ok(t4, t5, t3))
        return 0.0;

    // the four triads and three quads, as plain integers
    const int s1 = (t1 + t2 + t3) / 2;
    const int s2 = (t1 + t5 + t6) / 2;
    const int s3 = (t4 + t2 + t6) / 2;
    const int s4 = (t4 + t5 + t3) / 2;
    const int q1 = (t1 + t2 + t4 + t5) / 2;
    const int q2 = (t2 + t3 + t5 + t6) / 2;
    const int q3 = (t3 + t1 + t6 + t4) / 2;

    const int tmin = std::max({s1, s2, s3, s4});
    const int tmax = std::min({q1, q2, q3});
    if (tmin > tmax) return 0.0;

    double sum = 0.0;
    for (int t = tmin; t <= tmax; ++t) {
        const double num = fact(t + 1);
        const double den = fact(t - s1) * fact(t - s2) * fact(t - s3) * fact(t - s4) *
                           fact(q1 - t) * fact(q2 - t) * fact(q3 - t);
        sum += ((t % 2 == 0) ? 1.0 : -1.0) * num / den;
    }

    const double pref = sqrt_delta(t1, t2, t3) * sqrt_delta(t1, t5, t6) *
                        sqrt_delta(t4, t2, t6) * sqrt_delta(t4, t5, t3);
    return pref * sum;
}

double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M) {
    const int phase2 = doubled(j1, "j1") - doubled(j2, "j2") + doubled(M, "M");
    if (phase2 % 2 != 0) return 0.0; // j1+j2+J and M compatibility handled by the 3j
    const double sign = (phase2 / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::sqrt(2.0 * J + 1.0) * wigner3j(j1, j2, J, m1, m2, -M);
}

} // namespace rydsim
