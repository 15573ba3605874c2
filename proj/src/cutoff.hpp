#pragma once

#include <cmath>

namespace yamabe {

// Smooth bump: 1 on |s| <= 1/2, exp(1 - 1/(1-q^2)) with q = 2|s|-1 on the
// transition, 0 beyond |s| >= 1.
struct CutoffProfile {
    static double value(double s) {
        double a = std::fabs(s);
        if (a <= 0.5) return 1.0;
        if (a >= 1.0) return 0.0;
        double q = 2.0 * a - 1.0;
        return std::exp(1.0 - 1.0 / (1.0 - q * q));
    }

    static double d1(double s) {
        double a = std::fabs(s);
        if (a <= 0.5 || a >= 1.0) return 0.0;
        double q = 2.0 * a - 1.0;
        double om = 1.0 - q * q;
        double v = std::exp(1.0 - 1.0 / om);
        // d/dq of -1/(1-q^2) is -2q/(1-q^2)^2; dq/ds = 2 sign(s)
        double d = v * (-2.0 * q / (om * om)) * 2.0;
        return s < 0 ? -d : d;
    }

    static double d2(double s) {
        double a = std::fabs(s);
        if (a <= 0.5 || a >= 1.0) return 0.0;
        double q = 2.0 * a - 1.0;
        double om = 1.0 - q * q;
        double v = std::exp(1.0 - 1.0 / om);
        double g = -2.0 * q / (om * om);             // (log v)' in q
        double gp = (-2.0 * om - 8.0 * q * q) / (om * om * om);  // g' in q
        return 4.0 * v * (g * g + gp);               // (d/ds)^2, even in s
    }
};

}  // namespace yamabe
