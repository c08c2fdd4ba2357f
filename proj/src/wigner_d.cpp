#include "w15j/wigner_d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace w15j {

namespace {

double fact(int n) {
    double f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

double wigner_d(HalfInt s, HalfInt nu, HalfInt mu, double theta) {
    const int ts = s.twice(), tn = nu.twice(), tm = mu.twice();
    if (std::abs(tn) > ts || std::abs(tm) > ts)
        throw std::invalid_argument("wigner_d: index out of range");
    if ((ts - tn) % 2 || (ts - tm) % 2)
        throw std::invalid_argument("wigner_d: s - index not integral");

    // d^s_{nu mu} = sqrt((s+nu)!(s-nu)!(s+mu)!(s-mu)!) *
    //   sum_k (-1)^k cos(t/2)^{2s-2k+mu-nu} sin(t/2)^{2k-mu+nu} /
    //         [(s+mu-k)! k! (s-nu-k)! (k-mu+nu)!]
    const int spn = (ts + tn) / 2, smn = (ts - tn) / 2;
    const int spm = (ts + tm) / 2, smm = (ts - tm) / 2;
    const int mu_minus_nu = (tm - tn) / 2;
    const int kmin = std::max(0, mu_minus_nu);
    const int kmax = std::min(spm, smn);
    const double c = std::cos(theta / 2), sn = std::sin(theta / 2);
    double sum = 0;
    for (int k = kmin; k <= kmax; ++k) {
        const int cpow = ts - 2 * k + mu_minus_nu;
        const int spow = 2 * k - mu_minus_nu;
        const double denom = fact(spm - k) * fact(k) * fact(smn - k) * fact(k - mu_minus_nu);
        sum += ((k % 2) ? -1.0 : 1.0) * std::pow(c, cpow) * std::pow(sn, spow) / denom;
    }
    return std::sqrt(fact(spn) * fact(smn) * fact(spm) * fact(smm)) * sum;
}

} // namespace w15j
