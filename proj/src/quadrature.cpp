#include "qwalk/quadrature.hpp"

#include <cmath>
#include <stack>
#include <stdexcept>

namespace qwalk {

namespace {

// QUADPACK dqk15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double kronrod;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double gauss = fc * kWg[3];
    double kron = fc * kWgk[7];
    for (int i = 0; i < 7; ++i) {
        const double fl = f(c - h * kXgk[i]);
        const double fr = f(c + h * kXgk[i]);
        kron += kWgk[i] * (fl + fr);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fl + fr);
    }
    kron *= h;
    gauss *= h;
    // |K15 - G7| is a conservative local error proxy for smooth integrands.
    return {kron, std::abs(kron - gauss)};
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    struct Panel {
        double a, b, value, error;
    };
    PanelResult whole = gk15(f, a, b);
    std::stack<Panel> work;
    work.push({a, b, whole.kronrod, whole.error});
    double total = 0.0;
    double budget = abs_tol;
    int panels = 1;
    const int max_panels = 1 << 16;
    while (!work.empty()) {
        Panel p = work.top();
        work.pop();
        if (p.error <= budget * (p.b - p.a) / (b - a) || panels >= max_panels ||
            p.b - p.a < 1e-15 * std::abs(b - a)) {
            total += p.value;
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        PanelResult left = gk15(f, p.a, mid);
        PanelResult right = gk15(f, mid, p.b);
        work.push({p.a, mid, left.kronrod, left.error});
        work.push({mid, p.b, right.kronrod, right.error});
        panels += 2;
    }
    return total;
}

} // namespace qwalk
