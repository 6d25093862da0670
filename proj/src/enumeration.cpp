#include "chern4/enumeration.hpp"

#include "chern4/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace chern4 {

namespace {

const Int kI64Lo = Int(std::numeric_limits<std::int64_t>::min() / 2);
const Int kI64Hi = Int(std::numeric_limits<std::int64_t>::max() / 2);

bool to_i64(const Int& x, std::int64_t& out) {
    if (x < kI64Lo || x > kI64Hi) return false;
    out = static_cast<std::int64_t>(x);
    return true;
}

// Lexicographic sort. Large solution sets on small coordinates are the common
// case, so sort index keys in machine words when everything fits.
void sort_classes(std::vector<CohClass>& v) {
    if (v.size() < 4096) {
        std::sort(v.begin(), v.end());
        return;
    }
    const std::size_t m = v[0].size();
    std::vector<std::int64_t> keys;
    keys.reserve(v.size() * m);
    for (const CohClass& c : v)
        for (std::size_t i = 0; i < m; ++i) {
            std::int64_t k;
            if (!to_i64(c[i], k)) {
                std::sort(v.begin(), v.end());
                return;
            }
            keys.push_back(k);
        }
    std::vector<std::uint32_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        const std::int64_t* pa = &keys[std::size_t(a) * m];
        const std::int64_t* pb = &keys[std::size_t(b) * m];
        for (std::size_t i = 0; i < m; ++i)
            if (pa[i] != pb[i]) return pa[i] < pb[i];
        return false;
    });
    std::vector<CohClass> sorted;
    sorted.reserve(v.size());
    for (std::uint32_t i : idx) sorted.push_back(std::move(v[i]));
    v = std::move(sorted);
}

// Integer range of t with (t + s)^2 <= b, exact. sqrt(p/q) is bracketed by
// [r/q, (r+1)/q] with r = isqrt(p*q); the final adjustment loops run at most
// a couple of steps and use exact comparisons only.
bool square_range(const Rat& s, const Rat& b, Int& lo, Int& hi) {
    if (b < 0) return false;
    const Int r = boost::multiprecision::sqrt(rat_num(b) * rat_den(b));
    const Rat root_hi = Rat(r + 1) / Rat(rat_den(b));  // sqrt(b) <= root_hi < sqrt(b) + 1
    // t <= -s + sqrt(b)  iff  t + s <= 0 or (t + s)^2 <= b, and dually for the
    // lower root; each estimate is off by less than one so the loops are short.
    const auto below_upper = [&](const Int& t) {
        const Rat v = Rat(t) + s;
        return v <= 0 || v * v <= b;
    };
    const auto above_lower = [&](const Int& t) {
        const Rat v = Rat(t) + s;
        return v >= 0 || v * v <= b;
    };

    hi = rat_floor(root_hi - s);
    while (!below_upper(hi)) --hi;
    while (below_upper(hi + 1)) ++hi;

    lo = rat_ceil(-root_hi - s);
    while (!above_lower(lo)) ++lo;
    while (above_lower(lo - 1)) --lo;
    return lo <= hi;
}

// Smallest t >= lo with t = par (mod 2).
Int first_with_parity(const Int& lo, const Int& par) {
    return ((lo - par) % 2 == 0) ? lo : lo + 1;
}

// ---------------------------------------------------------------------------
// Definite forms: branch and bound on the rational LDL^T factorization.
// Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2 with all d_i > 0; levels are
// processed from the last coordinate down so each level sees a fixed center.
// Stepping x_i by 2 inside its residue class realizes the substitution
// c = parity + 2y without materializing y.
// ---------------------------------------------------------------------------

class DefiniteEnumerator {
public:
    DefiniteEnumerator(const IntersectionLattice& lattice, bool negate, const Int& target,
                       const CohClass& parity)
        : m_(lattice.rank()), target_(target) {
        d_.assign(m_, Rat(0));
        u_.assign(m_, std::vector<Rat>(m_, Rat(0)));
        parity01_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i)
            parity01_[i] = ((parity[i] % 2) + 2) % 2;

        std::vector<std::vector<Rat>> q(m_, std::vector<Rat>(m_));
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                q[i][j] = Rat(negate ? -lattice.at(i, j) : lattice.at(i, j));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = i + 1; j < m_; ++j) {
                const Rat tmp = q[i][j];
                q[i][j] = tmp / q[i][i];
                q[j][i] = tmp;
            }
            for (std::size_t k = i + 1; k < m_; ++k)
                for (std::size_t l = k; l < m_; ++l)
                    q[k][l] -= q[k][i] * q[i][l];
        }
        for (std::size_t i = 0; i < m_; ++i) {
            d_[i] = q[i][i];
            for (std::size_t j = i + 1; j < m_; ++j) u_[i][j] = q[i][j];
        }
    }

    std::vector<CohClass> run() {
        coords_.assign(m_, Int(0));
        out_.clear();
        descend(static_cast<long>(m_) - 1, Rat(target_));
        return std::move(out_);
    }

private:
    void descend(long level, const Rat& budget) {
        if (level < 0) {
            if (budget == 0) out_.emplace_back(coords_);
            return;
        }
        const auto i = static_cast<std::size_t>(level);
        Rat center(0);
        for (std::size_t j = i + 1; j < m_; ++j)
            if (u_[i][j] != 0) center += u_[i][j] * Rat(coords_[j]);

        Int lo, hi;
        if (!square_range(center, budget / d_[i], lo, hi)) return;
        for (Int t = first_with_parity(lo, parity01_[i]); t <= hi; t += 2) {
            coords_[i] = t;
            const Rat term = d_[i] * (Rat(t) + center) * (Rat(t) + center);
            descend(level - 1, budget - term);
        }
        coords_[i] = 0;
    }

    std::size_t m_;
    Int target_;
    std::vector<Rat> d_;
    std::vector<std::vector<Rat>> u_;
    IntVec parity01_;
    IntVec coords_;
    std::vector<CohClass> out_;
};

// ---------------------------------------------------------------------------
// Indefinite forms: exhaustive over the window box.
//
// The generic engine is a depth-first scan with exact interval pruning. When
// the Gram matrix splits into orthogonal blocks (every preset does), each
// block's box is tabulated by value and the blocks are joined with exact
// achievable-sum sets, which makes the traversal output-sensitive.
// ---------------------------------------------------------------------------

// Per-coordinate admissible values: [-window, window] intersected with the
// parity class, ascending.
std::vector<IntVec> coordinate_values(const Int& window, const IntVec& parity01,
                                      std::size_t m) {
    std::vector<IntVec> vals(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (Int t = first_with_parity(-window, parity01[i]); t <= window; t += 2)
            vals[i].push_back(t);
    }
    return vals;
}

class WindowedEnumerator {
public:
    WindowedEnumerator(const IntersectionLattice& lattice, const Int& target,
                       const CohClass& parity, const Int& window)
        : l_(lattice), m_(lattice.rank()), target_(target) {
        parity01_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i)
            parity01_[i] = ((parity[i] % 2) + 2) % 2;
        vals_ = coordinate_values(window, parity01_, m_);
    }

    std::vector<CohClass> run() {
        for (const IntVec& v : vals_)
            if (v.empty()) return {};
        const auto comps = components();
        if (comps.size() > 1 && tables_feasible(comps)) return run_block_join(comps);
        return run_pruned_scan();
    }

private:
    // Connected components of the Gram matrix support graph, each listed in
    // increasing coordinate order.
    std::vector<std::vector<std::size_t>> components() const {
        std::vector<int> comp(m_, -1);
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t s = 0; s < m_; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<std::size_t> stack{s}, members;
            comp[s] = static_cast<int>(out.size());
            while (!stack.empty()) {
                const std::size_t i = stack.back();
                stack.pop_back();
                members.push_back(i);
                for (std::size_t j = 0; j < m_; ++j)
                    if (j != i && l_.at(i, j) != 0 && comp[j] < 0) {
                        comp[j] = comp[i];
                        stack.push_back(j);
                    }
            }
            std::sort(members.begin(), members.end());
            out.push_back(std::move(members));
        }
        return out;
    }

    bool tables_feasible(const std::vector<std::vector<std::size_t>>& comps) const {
        constexpr std::uint64_t kCap = 1u << 22;
        for (const auto& c : comps) {
            std::uint64_t points = 1;
            for (std::size_t i : c) {
                points *= vals_[i].size();
                if (points > kCap) return false;
            }
        }
        return true;
    }

    Int block_value(const std::vector<std::size_t>& comp, const IntVec& point) const {
        Int acc = 0;
        for (std::size_t a = 0; a < comp.size(); ++a) {
            acc += l_.at(comp[a], comp[a]) * point[a] * point[a];
            for (std::size_t b = a + 1; b < comp.size(); ++b)
                acc += 2 * l_.at(comp[a], comp[b]) * point[a] * point[b];
        }
        return acc;
    }

    std::vector<CohClass> run_block_join(const std::vector<std::vector<std::size_t>>& comps) {
        const std::size_t k = comps.size();
        std::vector<std::map<Int, std::vector<IntVec>>> tables(k);
        for (std::size_t c = 0; c < k; ++c) {
            const auto& idx = comps[c];
            IntVec point(idx.size());
            std::vector<std::size_t> pos(idx.size(), 0);
            for (;;) {
                for (std::size_t a = 0; a < idx.size(); ++a) point[a] = vals_[idx[a]][pos[a]];
                tables[c][block_value(idx, point)].push_back(point);
                std::size_t a = 0;
                while (a < idx.size() && ++pos[a] == vals_[idx[a]].size()) pos[a++] = 0;
                if (a == idx.size()) break;
            }
        }

        // suffix[c] = set of sums achievable by blocks c..k-1.
        std::vector<std::set<Int>> suffix(k + 1);
        suffix[k].insert(Int(0));
        for (std::size_t c = k; c-- > 0;) {
            for (const auto& [v, pts] : tables[c])
                for (const Int& s : suffix[c + 1]) suffix[c].insert(v + s);
        }

        std::vector<CohClass> out;
        IntVec full(m_, 0);
        join(comps, tables, suffix, 0, target_, full, out);
        return out;
    }

    void join(const std::vector<std::vector<std::size_t>>& comps,
              const std::vector<std::map<Int, std::vector<IntVec>>>& tables,
              const std::vector<std::set<Int>>& suffix, std::size_t c, const Int& remaining,
              IntVec& full, std::vector<CohClass>& out) {
        if (c == comps.size()) {
            if (remaining == 0) out.emplace_back(full);
            return;
        }
        for (const auto& [v, pts] : tables[c]) {
            if (!suffix[c + 1].count(remaining - v)) continue;
            for (const IntVec& pt : pts) {
                for (std::size_t a = 0; a < comps[c].size(); ++a) full[comps[c][a]] = pt[a];
                join(comps, tables, suffix, c + 1, remaining - v, full, out);
            }
        }
        for (std::size_t a = 0; a < comps[c].size(); ++a) full[comps[c][a]] = 0;
    }

    // Fallback: depth-first over coordinates with exact interval pruning of
    // the reachable quadratic value.
    std::vector<CohClass> run_pruned_scan() {
        maxabs_.assign(m_, Int(0));
        minsq_.assign(m_, Int(0));
        maxsq_.assign(m_, Int(0));
        for (std::size_t i = 0; i < m_; ++i) {
            Int mn = -1, mx = 0;
            for (const Int& t : vals_[i]) {
                const Int t2 = t * t;
                if (mn < 0 || t2 < mn) mn = t2;
                if (t2 > mx) mx = t2;
                if (abs(t) > maxabs_[i]) maxabs_[i] = abs(t);
            }
            minsq_[i] = mn;
            maxsq_[i] = mx;
        }
        // Interval of sum_{i,j >= k} g_ij c_i c_j over the box.
        qmin_.assign(m_ + 1, Int(0));
        qmax_.assign(m_ + 1, Int(0));
        for (std::size_t kk = m_; kk-- > 0;) {
            Int lo = qmin_[kk + 1], hi = qmax_[kk + 1];
            const Int& g = l_.at(kk, kk);
            if (g > 0) {
                lo += g * minsq_[kk];
                hi += g * maxsq_[kk];
            } else {
                lo += g * maxsq_[kk];
                hi += g * minsq_[kk];
            }
            for (std::size_t j = kk + 1; j < m_; ++j) {
                const Int cross = 2 * abs(l_.at(kk, j)) * maxabs_[kk] * maxabs_[j];
                lo -= cross;
                hi += cross;
            }
            qmin_[kk] = lo;
            qmax_[kk] = hi;
        }

        coords_.assign(m_, Int(0));
        linear_.assign(m_, Int(0));
        out_.clear();
        scan(0, Int(0));
        return std::move(out_);
    }

    void scan(std::size_t k, const Int& partial) {
        if (k == m_) {
            if (partial == target_) out_.emplace_back(coords_);
            return;
        }
        Int linlo = 0, linhi = 0;
        for (std::size_t j = k; j < m_; ++j) {
            const Int b = abs(linear_[j]) * maxabs_[j];
            linlo -= b;
            linhi += b;
        }
        const Int need = target_ - partial;
        if (need < linlo + qmin_[k] || need > linhi + qmax_[k]) return;

        for (const Int& t : vals_[k]) {
            coords_[k] = t;
            const Int next = partial + linear_[k] * t + l_.at(k, k) * t * t;
            for (std::size_t j = k + 1; j < m_; ++j) linear_[j] += 2 * l_.at(k, j) * t;
            scan(k + 1, next);
            for (std::size_t j = k + 1; j < m_; ++j) linear_[j] -= 2 * l_.at(k, j) * t;
        }
        coords_[k] = 0;
    }

    const IntersectionLattice& l_;
    std::size_t m_;
    Int target_;
    IntVec parity01_;
    std::vector<IntVec> vals_;
    IntVec maxabs_, minsq_, maxsq_, qmin_, qmax_;
    IntVec coords_, linear_;
    std::vector<CohClass> out_;
};

} // namespace

EnumerationProblem::EnumerationProblem(IntersectionLattice l, Int n, CohClass p, Int w)
    : lattice(std::move(l)), target(std::move(n)), parity(std::move(p)), window(std::move(w)) {
    if (parity.size() != lattice.rank())
        throw DimensionError("parity vector has length " + std::to_string(parity.size()) +
                             " but the lattice has rank " + std::to_string(lattice.rank()));
    if (window < 0) throw Error("window must be non-negative");
}

EnumerationResult::EnumerationResult(const EnumerationProblem& p,
                                     std::vector<CohClass> solutions,
                                     Completeness completeness)
    : solutions_(std::move(solutions)), completeness_(completeness) {
    verify_against(p);
    if (p.target == 0) {
        for (const CohClass& c : solutions_)
            if (!c.is_zero()) { hint_ = c; break; }
    }
}

void EnumerationResult::verify_against(const EnumerationProblem& p) const {
    const auto reject = [](const CohClass& c, const char* why) {
        throw std::logic_error(std::string("enumeration produced a vector of wrong ") +
                               why + ": " + c.to_string());
    };

    // Machine-word path when the Gram matrix, target, and every coordinate
    // fit with room for the quadratic form's worst case.
    const std::size_t m = p.lattice.rank();
    struct Entry { std::uint32_t i, j; std::int64_t g; };
    std::vector<Entry> entries;
    Int lin_norm = 0;
    bool fits = true;
    for (std::size_t i = 0; i < m && fits; ++i)
        for (std::size_t j = 0; j < m && fits; ++j) {
            const Int& g = p.lattice.at(i, j);
            if (g == 0) continue;
            std::int64_t gv;
            fits = to_i64(g, gv);
            entries.push_back({static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j), gv});
            lin_norm += abs(g);
        }
    Int max_coord = 0;
    for (const CohClass& c : solutions_)
        for (std::size_t i = 0; i < m; ++i)
            if (abs(c[i]) > max_coord) max_coord = abs(c[i]);
    std::int64_t target64 = 0;
    fits = fits && to_i64(p.target, target64) &&
           lin_norm * max_coord * max_coord < kI64Hi;

    if (fits) {
        std::vector<std::int64_t> c64(m), par64(m);
        for (std::size_t i = 0; i < m; ++i)
            par64[i] = static_cast<std::int64_t>(((p.parity[i] % 2) + 2) % 2);
        for (const CohClass& c : solutions_) {
            std::int64_t q = 0;
            for (std::size_t i = 0; i < m; ++i) {
                c64[i] = static_cast<std::int64_t>(c[i]);
                if (((c64[i] - par64[i]) % 2) != 0) reject(c, "parity");
            }
            for (const Entry& e : entries) q += e.g * c64[e.i] * c64[e.j];
            if (q != target64) reject(c, "square");
        }
        return;
    }

    for (const CohClass& c : solutions_) {
        if (p.lattice.pair(c, c) != p.target) reject(c, "square");
        if (!c.congruent_mod2(p.parity)) reject(c, "parity");
    }
}

EnumerationResult enumerate_solutions(const EnumerationProblem& p) {
    const std::size_t m = p.lattice.rank();
    if (m == 0) {
        std::vector<CohClass> sols;
        if (p.target == 0) sols.emplace_back(IntVec{});
        return EnumerationResult(p, std::move(sols), Completeness::Complete);
    }

    const SignatureData sig = p.lattice.signature();  // throws on degenerate forms
    const bool pos = sig.positive == m;
    const bool neg = sig.negative == m;

    if (pos || neg) {
        const Int normalized = neg ? -p.target : p.target;
        std::vector<CohClass> sols;
        if (normalized > 0) {
            sols = DefiniteEnumerator(p.lattice, neg, normalized, p.parity).run();
        } else if (normalized == 0) {
            // A definite form vanishes only at the origin.
            const CohClass zero = CohClass::zero(m);
            if (zero.congruent_mod2(p.parity)) sols.push_back(zero);
        }
        // normalized < 0: the sign of the target conflicts with definiteness.
        sort_classes(sols);
        return EnumerationResult(p, std::move(sols), Completeness::Complete);
    }

    std::vector<CohClass> sols =
        WindowedEnumerator(p.lattice, p.target, p.parity, p.window).run();
    sort_classes(sols);
    return EnumerationResult(p, std::move(sols), Completeness::WindowTruncated);
}

Int ball_bound(const EnumerationProblem& p) {
    if (p.lattice.rank() == 0) return 0;
    if (!p.lattice.is_definite())
        throw UnsupportedFormError("ball_bound requires a definite form");
    const Int abs_target = abs(p.target);
    Int best = 0;
    for (const Rat& dii : p.lattice.inverse_diagonal()) {
        const Rat scaled = (dii < 0 ? -dii : dii) * Rat(abs_target);
        const Int b = rat_isqrt(scaled);
        if (b > best) best = b;
    }
    return best;
}

std::vector<CohClass> brute_force_oracle(const EnumerationProblem& p) {
    const std::size_t m = p.lattice.rank();
    if (m > 6)
        throw OracleGuardError("brute_force_oracle refuses rank " + std::to_string(m) +
                               " > 6");
    if (p.window > 10)
        throw OracleGuardError("brute_force_oracle refuses window > 10");

    std::vector<CohClass> out;
    if (m == 0) {
        if (p.target == 0) out.emplace_back(IntVec{});
        return out;
    }

    IntVec parity01(m);
    for (std::size_t i = 0; i < m; ++i) parity01[i] = ((p.parity[i] % 2) + 2) % 2;

    // With the guard caps every |x^T G x| over the box fits in int64 unless
    // the Gram entries are enormous; fall back to big integers in that case.
    Int worst = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) worst += abs(p.lattice.at(i, j));
    worst *= p.window * p.window;
    const bool fits64 = worst < Int(std::int64_t(1) << 60) &&
                        abs(p.target) < Int(std::int64_t(1) << 60);

    if (fits64) {
        std::vector<std::vector<std::int64_t>> g(m, std::vector<std::int64_t>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                g[i][j] = static_cast<std::int64_t>(p.lattice.at(i, j));
        const auto w = static_cast<std::int64_t>(p.window);
        const auto tgt = static_cast<std::int64_t>(p.target);
        std::vector<std::int64_t> c(m, -w), par(m);
        for (std::size_t i = 0; i < m; ++i) par[i] = static_cast<std::int64_t>(parity01[i]);
        for (;;) {
            bool parity_ok = true;
            for (std::size_t i = 0; i < m && parity_ok; ++i)
                parity_ok = (((c[i] - par[i]) % 2) == 0);
            if (parity_ok) {
                std::int64_t q = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    std::int64_t row = 0;
                    for (std::size_t j = 0; j < m; ++j) row += g[i][j] * c[j];
                    q += c[i] * row;
                }
                if (q == tgt) {
                    IntVec v(m);
                    for (std::size_t i = 0; i < m; ++i) v[i] = c[i];
                    out.emplace_back(std::move(v));
                }
            }
            std::size_t i = 0;
            while (i < m && ++c[i] > w) c[i++] = -w;
            if (i == m) break;
        }
    } else {
        IntVec c(m, -p.window);
        for (;;) {
            CohClass cand((IntVec(c)));
            if (cand.congruent_mod2(p.parity) && p.lattice.pair(cand, cand) == p.target)
                out.push_back(cand);
            std::size_t i = 0;
            while (i < m && ++c[i] > p.window) c[i++] = -p.window;
            if (i == m) break;
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

} // namespace chern4
