#pragma once

// Independent brute-force references for the numeric kernels. Each is coded
// straight from the documented definition, favouring clarity and literalism
// over speed, so agreement with the production implementations is meaningful.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <vector>

#include "finsphere/indicators/indicators.hpp"
#include "finsphere/market/types.hpp"

namespace testsupport {

/// |a-b| within `tol` relative to the larger magnitude, floored at 1.
inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::vector<double> brute_sma(const std::vector<double>& v, int window) {
    std::vector<double> out;
    const std::size_t w = static_cast<std::size_t>(window);
    for (std::size_t end = w; end <= v.size(); ++end) {
        double sum = 0.0;
        for (std::size_t i = end - w; i < end; ++i) sum += v[i];
        out.push_back(sum / static_cast<double>(window));
    }
    return out;
}

inline std::vector<double> brute_ema(const std::vector<double>& v, int window) {
    std::vector<double> out;
    const double k = 2.0 / (window + 1.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(i == 0 ? v[0] : k * v[i] + (1.0 - k) * out.back());
    return out;
}

/// Wilder RSI at one output position, re-run from the beginning every call
/// (no incremental state to get wrong). Stated as 100*gain/(gain+loss).
inline double brute_rsi_at(const std::vector<double>& v, int period, std::size_t t) {
    const std::size_t p = static_cast<std::size_t>(period);
    double gain = 0.0, loss = 0.0;
    for (std::size_t i = 1; i <= p; ++i) {
        const double d = v[i] - v[i - 1];
        gain += std::max(d, 0.0);
        loss += std::max(-d, 0.0);
    }
    gain /= static_cast<double>(p);
    loss /= static_cast<double>(p);
    for (std::size_t i = p + 1; i <= t; ++i) {
        const double d = v[i] - v[i - 1];
        gain = (gain * (p - 1) + std::max(d, 0.0)) / static_cast<double>(p);
        loss = (loss * (p - 1) + std::max(-d, 0.0)) / static_cast<double>(p);
    }
    if (gain == 0.0 && loss == 0.0) return 50.0;
    if (loss == 0.0) return 100.0;
    if (gain == 0.0) return 0.0;
    return 100.0 * gain / (gain + loss);
}

inline std::vector<double> brute_rsi(const std::vector<double>& v, int period) {
    std::vector<double> out;
    for (std::size_t t = static_cast<std::size_t>(period); t < v.size(); ++t)
        out.push_back(brute_rsi_at(v, period, t));
    return out;
}

struct BruteCross {
    std::size_t index = 0;
    finsphere::indicators::CrossDirection direction =
        finsphere::indicators::CrossDirection::golden;

    friend bool operator==(const BruteCross&, const BruteCross&) = default;
};

/// Literal definition scan: golden at i iff fast was at-or-below at i-1 and
/// strictly above at i; death mirrored.
inline std::vector<BruteCross> brute_crosses(const std::vector<double>& fast,
                                             const std::vector<double>& slow) {
    std::vector<BruteCross> out;
    for (std::size_t i = 1; i < fast.size(); ++i) {
        if (fast[i - 1] <= slow[i - 1] && fast[i] > slow[i])
            out.push_back({i, finsphere::indicators::CrossDirection::golden});
        else if (fast[i - 1] >= slow[i - 1] && fast[i] < slow[i])
            out.push_back({i, finsphere::indicators::CrossDirection::death});
    }
    return out;
}

struct BruteEngulfing {
    std::size_t index = 0;
    double key_level = 0.0;

    friend bool operator==(const BruteEngulfing&, const BruteEngulfing&) = default;
};

/// Exhaustive two-bar predicate scan: down body, then an up body strictly
/// containing it; the up bar's low is the key level.
inline std::vector<BruteEngulfing> brute_engulfing(
    const std::vector<finsphere::market::DailyBar>& bars) {
    std::vector<BruteEngulfing> out;
    for (std::size_t i = 1; i < bars.size(); ++i) {
        const bool down_then_up =
            bars[i - 1].close < bars[i - 1].open && bars[i].close > bars[i].open;
        const bool contains =
            bars[i].open < bars[i - 1].close && bars[i].close > bars[i - 1].open;
        if (down_then_up && contains) out.push_back({i, bars[i].low});
    }
    return out;
}

inline double brute_trailing_sum(const std::vector<double>& dailies, int window) {
    double sum = 0.0;
    for (std::size_t i = dailies.size() - static_cast<std::size_t>(window);
         i < dailies.size(); ++i)
        sum += dailies[i];
    return sum;
}

struct BruteTau {
    double tau = 0.0;
    bool defined = true;   // false when one side is fully tied
    bool has_ties = false;
};

/// Tau-b by exhaustive pair classification: concordant, discordant, tied on
/// a only, b only, or both. Denominator uses the textbook n0/n1/n2 grouping.
inline BruteTau brute_kendall_tau(const std::vector<double>& a,
                                  const std::vector<double>& b) {
    const std::size_t n = a.size();
    long long c = 0, d = 0, tied_a = 0, tied_b = 0, tied_both = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double da = a[i] - a[j];
            const double db = b[i] - b[j];
            if (da == 0 && db == 0) ++tied_both;
            else if (da == 0) ++tied_a;
            else if (db == 0) ++tied_b;
            else if ((da < 0) == (db < 0)) ++c;
            else ++d;
        }
    }
    const long long n0 = static_cast<long long>(n) * (n - 1) / 2;
    const long long n1 = tied_a + tied_both;  // pairs tied on a
    const long long n2 = tied_b + tied_both;  // pairs tied on b
    BruteTau result;
    result.has_ties = n1 > 0 || n2 > 0;
    if (n0 == n1 || n0 == n2) {
        result.defined = false;
        return result;
    }
    result.tau = static_cast<double>(c - d) /
                 std::sqrt(static_cast<double>((n0 - n1) * (n0 - n2)));
    return result;
}

/// Competition ranking (best = 1, ties share the smaller rank), recomputed
/// the slow way for agreement oracles.
inline std::vector<double> brute_competition_ranks(const std::vector<double>& scores) {
    std::vector<double> ranks(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        int ahead = 0;
        for (std::size_t j = 0; j < scores.size(); ++j)
            if (scores[j] > scores[i]) ++ahead;
        ranks[i] = ahead + 1;
    }
    return ranks;
}

}  // namespace testsupport
