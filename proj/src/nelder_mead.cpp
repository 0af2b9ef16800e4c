#include "krzyz/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace krzyz {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double scale, int budget,
                             double ftol) {
    const int d = static_cast<int>(x0.size());
    int evals = 0;
    auto ev = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };

    std::vector<double> best_x = x0;
    double best_f = ev(x0);
    double cur_scale = scale;
    bool converged = false;

    std::vector<std::vector<double>> xs(d + 1);
    std::vector<double> fs(d + 1);
    std::vector<int> idx(d + 1);
    std::vector<double> cen(d), cand(d);

    while (evals < budget) {
        xs[0] = best_x;
        fs[0] = best_f;
        for (int i = 0; i < d; ++i) {
            xs[i + 1] = best_x;
            double& xi = xs[i + 1][i];
            xi += cur_scale * (xi == 0.0 ? 1.0 : std::max(0.1, std::abs(xi)));
            fs[i + 1] = ev(xs[i + 1]);
        }
        converged = false;
        while (evals < budget) {
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(),
                             [&](int a, int b) { return fs[a] < fs[b]; });
            {
                std::vector<std::vector<double>> tx(d + 1);
                std::vector<double> tf(d + 1);
                for (int i = 0; i <= d; ++i) { tx[i] = xs[idx[i]]; tf[i] = fs[idx[i]]; }
                xs.swap(tx);
                fs.swap(tf);
            }
            if (fs[d] - fs[0] < ftol) {
                converged = true;
                break;
            }
            std::fill(cen.begin(), cen.end(), 0.0);
            for (int i = 0; i < d; ++i)
                for (int k = 0; k < d; ++k) cen[k] += xs[i][k] / d;
            for (int k = 0; k < d; ++k) cand[k] = cen[k] + (cen[k] - xs[d][k]);
            const double fr = ev(cand);
            if (fr < fs[0]) {
                std::vector<double> xe(d);
                for (int k = 0; k < d; ++k) xe[k] = cen[k] + 2.0 * (cen[k] - xs[d][k]);
                const double fe = ev(xe);
                if (fe < fr) { xs[d] = xe; fs[d] = fe; }
                else         { xs[d] = cand; fs[d] = fr; }
            } else if (fr < fs[d - 1]) {
                xs[d] = cand;
                fs[d] = fr;
            } else {
                std::vector<double> xc(d);
                for (int k = 0; k < d; ++k) xc[k] = cen[k] + 0.5 * (xs[d][k] - cen[k]);
                const double fc = ev(xc);
                if (fc < fs[d]) { xs[d] = xc; fs[d] = fc; }
                else {
                    for (int i = 1; i <= d; ++i) {
                        for (int k = 0; k < d; ++k)
                            xs[i][k] = xs[0][k] + 0.5 * (xs[i][k] - xs[0][k]);
                        fs[i] = ev(xs[i]);
                    }
                }
            }
        }
        int i0 = 0;
        for (int i = 1; i <= d; ++i)
            if (fs[i] < fs[i0]) i0 = i;
        if (fs[i0] < best_f) {
            best_f = fs[i0];
            best_x = xs[i0];
        }
        cur_scale *= 0.3;
        if (cur_scale < 1e-14) cur_scale = 1e-6;
    }
    return NelderMeadResult{best_x, best_f, evals, converged};
}

}  // namespace krzyz
