// Reference constants from single convergent series, computed at start-up
// and independent of the nested-sum evaluator under test.
#ifndef IMZV_TESTS_REFERENCE_CONSTANTS_HPP
#define IMZV_TESTS_REFERENCE_CONSTANTS_HPP

namespace reference {

// arctan(1/q) = sum_{k>=0} (-1)^k / ((2k+1) q^{2k+1})
inline long double arctan_inverse(long double q) {
    long double term = 1.0L / q, sum = 0.0L;
    const long double q2 = q * q;
    for (int k = 0; k < 60; ++k) {
        sum += (k % 2 == 0 ? 1.0L : -1.0L) * term / static_cast<long double>(2 * k + 1);
        term /= q2;
    }
    return sum;
}

// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
inline long double pi() { return 16.0L * arctan_inverse(5.0L) - 4.0L * arctan_inverse(239.0L); }

inline long double zeta2() {
    const long double p = pi();
    return p * p / 6.0L;
}

inline long double zeta4() {
    const long double p = pi();
    return p * p * p * p / 90.0L;
}

// zeta(3) = (5/2) sum_{n>=1} (-1)^{n+1} / (n^3 C(2n, n)).
inline long double zeta3() {
    long double sum = 0.0L, central = 1.0L;  // C(2n, n)
    for (int n = 1; n < 60; ++n) {
        central = central * static_cast<long double>(2 * n) * static_cast<long double>(2 * n - 1) /
                  (static_cast<long double>(n) * static_cast<long double>(n));
        const long double nn = static_cast<long double>(n);
        sum += (n % 2 == 1 ? 1.0L : -1.0L) / (nn * nn * nn * central);
    }
    return 2.5L * sum;
}

inline long double zeta6() {
    const long double p = pi();
    return p * p * p * p * p * p / 945.0L;
}

// zeta(s), s >= 2, by Euler-Maclaurin: the first N terms plus the integral
// tail and four Bernoulli corrections (error far below 1e-15 at N = 50).
inline long double zeta_em(int s) {
    const int N = 50;
    long double sum = 0.0L;
    for (int n = 1; n < N; ++n) {
        long double p = 1.0L;
        for (int e = 0; e < s; ++e) p /= static_cast<long double>(n);
        sum += p;
    }
    const long double Nl = N;
    const long double ss = s;
    long double Ns = 1.0L;  // N^{-s}
    for (int e = 0; e < s; ++e) Ns /= Nl;
    sum += Nl * Ns / (ss - 1.0L) + Ns / 2.0L;
    // B2/2! s N^{-s-1}, B4/4! s(s+1)(s+2) N^{-s-3}, ...
    sum += ss * Ns / Nl / 12.0L;
    sum -= ss * (ss + 1) * (ss + 2) * Ns / (Nl * Nl * Nl) / 720.0L;
    sum += ss * (ss + 1) * (ss + 2) * (ss + 3) * (ss + 4) * Ns / (Nl * Nl * Nl * Nl * Nl) / 30240.0L;
    sum -= ss * (ss + 1) * (ss + 2) * (ss + 3) * (ss + 4) * (ss + 5) * (ss + 6) * Ns / (Nl * Nl * Nl * Nl * Nl * Nl * Nl) / 1209600.0L;
    return sum;
}

}  // namespace reference

#endif  // IMZV_TESTS_REFERENCE_CONSTANTS_HPP
