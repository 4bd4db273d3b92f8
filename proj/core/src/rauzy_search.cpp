#include "betarith/rauzy_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace betarith {

namespace {

constexpr mpfr_prec_t kPrec = 192;

void require_supported(const CubicPisotUnit& unit) {
    if (unit.family() != Family::TwoNegative || !unit.z()) {
        throw FamilyUnsupported("norm search needs the two-negative family with b <= a");
    }
}

// Prefix of d*(beta) long enough that every comparison against a zero-padded string of length l settles.
std::vector<int> dstar_prefix(const CubicPisotUnit& unit, std::size_t length) {
    const DigitString d = dstar(unit);
    std::vector<int> t = d.frac_digits;
    while (t.size() < length) {
        if (d.period.empty()) {
            t.push_back(0);
        } else {
            t.insert(t.end(), d.period.begin(), d.period.end());
        }
    }
    return t;
}

DigitString to_digit_string(const std::vector<int>& a) {
    DigitString s;
    s.frac_digits.assign(a.begin() + 1, a.end());
    return s;
}

DyadicInterval norm_of(const CubicPisotUnit& unit, const ZBeta& x) {
    const DyadicInterval u = unit.embed(x, 1, kPrec);
    const DyadicInterval v = unit.embed(x, 2, kPrec);
    return (u.sqr() + v.sqr()).sqrt();
}

// Exact minimum among candidates; ties go to the lexicographically smallest digit string.
std::vector<int> exact_argmin(const CubicPisotUnit& unit, std::vector<std::vector<int>> cands) {
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::size_t best = 0;
    ZBeta best_value = value_of(to_digit_string(cands[0]), unit);
    for (std::size_t i = 1; i < cands.size(); ++i) {
        ZBeta v = value_of(to_digit_string(cands[i]), unit);
        if (compare_conjugate_norms(unit, v, best_value) < 0) {
            best = i;
            best_value = std::move(v);
        }
    }
    return cands[best];
}

class BranchAndBound {
public:
    BranchAndBound(const CubicPisotUnit& unit, int l) : l_(l), D_(static_cast<int>(unit.floor_beta())) {
        t_ = dstar_prefix(unit, static_cast<std::size_t>(2 * l + 8));
        w1_.assign(l + 1, 0.0);
        w2_.assign(l + 1, 0.0);
        const DyadicInterval i1 = unit.root(1, 120).with_precision(kPrec).inverse();
        const DyadicInterval i2 = unit.root(2, 120).with_precision(kPrec).inverse();
        double mass = 0;
        for (int i = 1; i <= l; ++i) {
            w1_[i] = i1.pow(i).mid();
            w2_[i] = i2.pow(i).mid();
            mass += D_ * std::max(std::abs(w1_[i]), std::abs(w2_[i]));
        }
        // Bound on the accumulated floating error of any partial sum, per coordinate.
        eps_ = (l + 4) * std::ldexp(1.0, -52) * mass + 1e-300;
        free_lo1_.assign(l + 2, 0.0);
        free_hi1_.assign(l + 2, 0.0);
        free_lo2_.assign(l + 2, 0.0);
        free_hi2_.assign(l + 2, 0.0);
        for (int j = 2; j <= l + 1; ++j) {
            free_lo1_[j] = free_lo1_[j - 1] + std::min(0.0, D_ * w1_[j - 1]);
            free_hi1_[j] = free_hi1_[j - 1] + std::max(0.0, D_ * w1_[j - 1]);
            free_lo2_[j] = free_lo2_[j - 1] + std::min(0.0, D_ * w2_[j - 1]);
            free_hi2_[j] = free_hi2_[j - 1] + std::max(0.0, D_ * w2_[j - 1]);
        }
        best_.store(std::hypot(w1_[l], w2_[l]) + 2 * eps_);
    }

    struct Worker {
        std::vector<int> a;
        std::vector<std::vector<int>> cands;
        std::vector<double> cand_norms;
        std::uint64_t nodes = 0;
    };

    void run(Worker& w, int top_digit) {
        w.a.assign(l_ + 1, 0);
        w.a[l_] = top_digit;
        if (!suffix_ok(w.a, l_)) return;
        descend(w, l_ - 1, top_digit * w1_[l_], top_digit * w2_[l_]);
    }

    int digit_max() const { return D_; }
    double margin() const { return 2 * eps_; }
    double best() const { return best_.load(); }

private:
    // a_j a_{j+1} ... a_l 0^w < d*
    bool suffix_ok(const std::vector<int>& a, int j) const {
        for (std::size_t i = 0; i < t_.size(); ++i) {
            const int c = j + static_cast<int>(i) <= l_ ? a[j + i] : 0;
            if (c != t_[i]) return c < t_[i];
        }
        return false;
    }

    double box_distance(int j, double s1, double s2) const {
        auto gap = [&](double lo, double hi) {
            lo -= eps_;
            hi += eps_;
            return lo > 0 ? lo : (hi < 0 ? -hi : 0.0);
        };
        return std::hypot(gap(s1 + free_lo1_[j], s1 + free_hi1_[j]), gap(s2 + free_lo2_[j], s2 + free_hi2_[j]));
    }

    void lower_best(double v) {
        double cur = best_.load();
        while (v < cur && !best_.compare_exchange_weak(cur, v)) {
        }
    }

    void record(Worker& w, double s1, double s2) {
        const double n = std::hypot(s1, s2);
        if (n > best_.load() + 2 * eps_) return;
        lower_best(n);
        w.cands.push_back(w.a);
        w.cand_norms.push_back(n);
        if (w.cands.size() > 4096) {
            const double cut = best_.load() + 2 * eps_;
            std::size_t k = 0;
            for (std::size_t i = 0; i < w.cands.size(); ++i) {
                if (w.cand_norms[i] <= cut) {
                    w.cands[k] = std::move(w.cands[i]);
                    w.cand_norms[k++] = w.cand_norms[i];
                }
            }
            w.cands.resize(k);
            w.cand_norms.resize(k);
        }
    }

    // Positions j+1 .. l are assigned; assign position j.
    void descend(Worker& w, int j, double s1, double s2) {
        ++w.nodes;
        if (j == 0) {
            record(w, s1, s2);
            return;
        }
        std::array<std::pair<double, int>, 64> order;
        std::vector<std::pair<double, int>> big;
        int n = 0;
        for (int d = 0; d <= D_; ++d) {
            w.a[j] = d;
            if (!suffix_ok(w.a, j)) continue;
            const double dist = box_distance(j, s1 + d * w1_[j], s2 + d * w2_[j]);
            if (dist > best_.load() + 2 * eps_) continue;
            if (n < 64) {
                order[n++] = {dist, d};
            } else {
                big.emplace_back(dist, d);
            }
        }
        std::sort(order.begin(), order.begin() + n);
        for (int i = 0; i < n; ++i) {
            const auto [dist, d] = order[i];
            if (dist > best_.load() + 2 * eps_) break;
            w.a[j] = d;
            descend(w, j - 1, s1 + d * w1_[j], s2 + d * w2_[j]);
        }
        for (const auto& [dist, d] : big) {
            if (dist > best_.load() + 2 * eps_) continue;
            w.a[j] = d;
            descend(w, j - 1, s1 + d * w1_[j], s2 + d * w2_[j]);
        }
        w.a[j] = 0;
    }

    int l_;
    int D_;
    std::vector<int> t_;
    std::vector<double> w1_, w2_;
    std::vector<double> free_lo1_, free_hi1_, free_lo2_, free_hi2_;
    double eps_ = 0;
    std::atomic<double> best_{0};
};

NormSearchResult finish(const CubicPisotUnit& unit, int l, std::vector<int> argmin, std::uint64_t nodes) {
    NormSearchResult r;
    r.l = l;
    r.argmin = to_digit_string(argmin);
    r.min_norm = norm_of(unit, value_of(r.argmin, unit));
    r.nodes_explored = nodes;
    return r;
}

}  // namespace

DyadicInterval h_ab(const CubicPisotUnit& unit) {
    require_supported(unit);
    const DyadicInterval a(unit.a(), kPrec);
    const DyadicInterval one(1, kPrec);
    const DyadicInterval u = a / (one - unit.root(1, 120).with_precision(kPrec).sqr());
    const DyadicInterval v = a / (one - unit.root(2, 120).with_precision(kPrec).sqr());
    return (u.sqr() + v.sqr()).sqrt();
}

int compare_conjugate_norms(const CubicPisotUnit& unit, const ZBeta& x, const ZBeta& y) {
    // x'^2 + x''^2 = Tr(x^2) - x^2
    const ZBeta u = unit.mul(x, x) - unit.mul(y, y);
    return unit.sign_at(ZBeta(zb_trace(unit.poly(), u)) - u);
}

NormSearchResult min_norm_at_level(const CubicPisotUnit& unit, int l, unsigned threads) {
    require_supported(unit);
    if (l < 1) throw OutOfRange("level must be at least 1");
    BranchAndBound bb(unit, l);
    const int D = bb.digit_max();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(D)));
    std::vector<BranchAndBound::Worker> workers(threads);
    auto task = [&](unsigned t) {
        for (int d = 1 + static_cast<int>(t); d <= D; d += static_cast<int>(threads)) bb.run(workers[t], d);
    };
    if (threads == 1) {
        task(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(task, t);
        for (auto& th : pool) th.join();
    }
    const double cut = bb.best() + bb.margin();
    std::vector<std::vector<int>> cands;
    std::uint64_t nodes = 0;
    for (auto& w : workers) {
        nodes += w.nodes;
        for (std::size_t i = 0; i < w.cands.size(); ++i) {
            if (w.cand_norms[i] <= cut) cands.push_back(std::move(w.cands[i]));
        }
    }
    if (cands.empty()) throw Error("norm search lost every candidate");
    return finish(unit, l, exact_argmin(unit, std::move(cands)), nodes);
}

NormSearchResult min_norm_exhaustive(const CubicPisotUnit& unit, int l) {
    require_supported(unit);
    if (l < 1) throw OutOfRange("level must be at least 1");
    const DigitString ds = dstar(unit);
    const int D = static_cast<int>(unit.floor_beta());
    std::vector<int> a(l + 1, 0);
    std::optional<std::vector<int>> best;
    std::optional<ZBeta> best_value;
    std::uint64_t nodes = 0;
    // Odometer over all strings a_1 .. a_l with a_l != 0.
    a[l] = 1;
    while (true) {
        ++nodes;
        const DigitString s = to_digit_string(a);
        if (is_admissible(s, ds)) {
            ZBeta v = value_of(s, unit);
            if (!best || compare_conjugate_norms(unit, v, *best_value) < 0) {
                best = a;
                best_value = std::move(v);
            }
        }
        int i = l;
        while (i >= 1) {
            if (a[i] < D) {
                ++a[i];
                break;
            }
            a[i] = i == l ? 1 : 0;
            --i;
        }
        if (i == 0) break;
    }
    return finish(unit, l, *best, nodes);
}

RauzyBound rauzy_upper_add(const CubicPisotUnit& unit, int l_max, unsigned threads) {
    RauzyBound r;
    r.three_h = DyadicInterval(3, kPrec) * h_ab(unit);
    for (int l = 1; l <= l_max; ++l) {
        r.levels.push_back(min_norm_at_level(unit, l, threads));
        if (mpfr_greater_p(r.levels.back().min_norm.lo(), r.three_h.hi())) {
            r.upper = l - 1;
            return r;
        }
    }
    throw Inconclusive("no level up to " + std::to_string(l_max) + " exceeds 3H(a,b)", l_max);
}

}  // namespace betarith
