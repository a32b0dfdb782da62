#pragma once
// Exact linear algebra of power matrices at roots of unity.
//
// For roots of unity x_1,...,x_p and integer exponents b_1,...,b_q, the
// matrix (x_i^{b_j}) degenerates only for structured reasons: proportional
// rows, proportional columns, or - conjecturally - a splitting of the
// exponent set into classes on which all roots collapse.  This header
// provides the combinatorial rank, degeneracy classifiers, exhaustive sweep
// verifiers for the three-row cases, a counterexample search for the
// splitting conjecture, and symbolic power determinants with their exact
// quotients by smaller power determinants.

#include <algorithm>
#include <array>
#include <atomic>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tropsing/cyclotomic.hpp"
#include "tropsing/errors.hpp"
#include "tropsing/lattice.hpp"
#include "tropsing/poly.hpp"
#include "tropsing/rational.hpp"

namespace tropsing {

// ---------------------------------------------------------------------------
// Combinatorial rank
// ---------------------------------------------------------------------------

namespace vdmdetail {

inline bool entry_is_zero(const Rat& x) { return x == 0; }
inline bool entry_is_zero(const CyclotomicElement& x) { return x.is_zero(); }

// Partition indices 0..n-1 into classes under an equivalence predicate.
template <class Eq>
inline std::vector<std::vector<int>> classes_under(int n, Eq&& eq) {
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (auto& cls : classes)
            if (eq(cls.front(), i)) {
                cls.push_back(i);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

} // namespace vdmdetail

// Minimum of the number of proportional-row classes and proportional-column
// classes.  Defined only for matrices with every entry nonzero, where
// proportionality of rows (and of columns) is an equivalence relation.
template <class F>
inline int comb_rank(const std::vector<std::vector<F>>& mat) {
    if (mat.empty() || mat.front().empty()) throw SchemaError("matrix must be nonempty");
    const int rows = static_cast<int>(mat.size());
    const int cols = static_cast<int>(mat.front().size());
    for (const auto& row : mat) {
        if (static_cast<int>(row.size()) != cols)
            throw SchemaError("matrix rows must have equal length");
        for (const F& x : row)
            if (vdmdetail::entry_is_zero(x))
                throw ZeroEntry("combinatorial rank needs every entry nonzero");
    }
    // u and v are proportional iff u_j * v_0 == v_j * u_0 for all j
    auto rows_prop = [&](int p, int q) {
        for (int j = 1; j < cols; ++j)
            if (!(mat[p][j] * mat[q][0] == mat[q][j] * mat[p][0])) return false;
        return true;
    };
    auto cols_prop = [&](int p, int q) {
        for (int i = 1; i < rows; ++i)
            if (!(mat[i][p] * mat[0][q] == mat[i][q] * mat[0][p])) return false;
        return true;
    };
    int rc = static_cast<int>(vdmdetail::classes_under(rows, rows_prop).size());
    int cc = static_cast<int>(vdmdetail::classes_under(cols, cols_prop).size());
    return rc < cc ? rc : cc;
}

// ---------------------------------------------------------------------------
// Root tuples and span orders
// ---------------------------------------------------------------------------

// A tuple of distinct roots of unity of a common order N, stored as the
// residues e_i with x_i = zeta_N^{e_i}.
struct RootTuple {
    Int order = 1;
    std::vector<Int> exponents;

    RootTuple(Int n, std::vector<Int> es) : order(std::move(n)), exponents(std::move(es)) {
        if (order < 1) throw SchemaError("root order must be positive");
        for (Int& e : exponents) e = ((e % order) + order) % order;
        for (size_t i = 0; i < exponents.size(); ++i)
            for (size_t j = i + 1; j < exponents.size(); ++j)
                if (exponents[i] == exponents[j])
                    throw DuplicatePoint("root residues must be distinct modulo the order");
    }
};

// Multiplicative order of zeta_N^{diff}: the order of the ratio of two roots.
inline Int ratio_order(const Int& n, const Int& diff) {
    Int d = ((diff % n) + n) % n;
    return n / gcd(n, d);
}

// Span order of a set of roots: the lcm of the orders of all pairwise
// ratios (1 for a singleton).
inline Int root_span_order(const Int& n, const std::vector<Int>& residues) {
    Int l = 1;
    for (size_t i = 0; i < residues.size(); ++i)
        for (size_t j = i + 1; j < residues.size(); ++j)
            l = lcm(l, ratio_order(n, residues[i] - residues[j]));
    return l;
}

// Span order of a partitioned root set: pairwise ratios are only taken
// within each part.
inline Int root_span_order(const Int& n, const std::vector<std::vector<Int>>& parts) {
    Int l = 1;
    for (const auto& part : parts) l = lcm(l, root_span_order(n, part));
    return l;
}

// The power matrix (x_i^{b_j}) as exact cyclotomic field elements.
inline std::vector<std::vector<CyclotomicElement>> vdm_matrix(const RootTuple& x, const BSet& b) {
    std::vector<std::vector<CyclotomicElement>> mat;
    for (const Int& e : x.exponents) {
        std::vector<CyclotomicElement> row;
        for (const Int& bj : b) {
            Int p = ((e * bj) % x.order + x.order) % x.order;
            row.push_back(CyclotomicElement::zeta_power(to_int64(x.order), p));
        }
        mat.push_back(std::move(row));
    }
    return mat;
}

// ---------------------------------------------------------------------------
// Degeneracy classification
// ---------------------------------------------------------------------------

// Explanation of why a power matrix degenerates: a partition of the rows or
// of the columns into proportional classes, or a counterexample marker when
// neither exists.
struct DegeneracyWitness {
    Int order = 1;
    std::vector<Int> residues;  // row parameters e_i
    BSet exponents;             // column exponents b_j
    std::string classification; // "proportional_rows" | "proportional_columns" | "counterexample"
    std::vector<std::vector<int>> classes;
    std::string note;
};

namespace vdmdetail {

// Rows p and q of (zeta^{e_i b_j}) are proportional iff
// (e_p - e_q) * (b_j - b_0) == 0 mod N for every j.
inline bool rows_proportional(const Int& n, const Int& ep, const Int& eq, const BSet& bs) {
    for (const Int& b : bs)
        if ((ep - eq) * (b - bs.front()) % n != 0) return false;
    return true;
}

// Columns j and l are proportional iff (e_i - e_0) * (b_j - b_l) == 0 mod N
// for every i.
inline bool cols_proportional(const Int& n, const std::vector<Int>& es, const Int& bj,
                              const Int& bl) {
    for (const Int& e : es)
        if ((e - es.front()) * (bj - bl) % n != 0) return false;
    return true;
}

} // namespace vdmdetail

// Classifies a degenerate power matrix by exhibiting proportional rows or
// columns; the returned partition is re-verified pairwise.
inline DegeneracyWitness classify_degeneracy(const Int& n, const std::vector<Int>& residues,
                                             const BSet& bs) {
    DegeneracyWitness w;
    w.order = n;
    w.residues = residues;
    w.exponents = bs;
    auto row_classes = vdmdetail::classes_under(
        static_cast<int>(residues.size()), [&](int p, int q) {
            return vdmdetail::rows_proportional(n, residues[p], residues[q], bs);
        });
    if (row_classes.size() < residues.size()) {
        for (const auto& cls : row_classes)
            for (size_t i = 0; i < cls.size(); ++i)
                for (size_t j = i + 1; j < cls.size(); ++j)
                    internal_check(vdmdetail::rows_proportional(n, residues[cls[i]],
                                                               residues[cls[j]], bs),
                                   "row class members must be pairwise proportional");
        w.classification = "proportional_rows";
        w.classes = std::move(row_classes);
        return w;
    }
    auto col_classes = vdmdetail::classes_under(
        static_cast<int>(bs.size()), [&](int p, int q) {
            return vdmdetail::cols_proportional(n, residues, bs[p], bs[q]);
        });
    if (col_classes.size() < bs.size()) {
        for (const auto& cls : col_classes)
            for (size_t i = 0; i < cls.size(); ++i)
                for (size_t j = i + 1; j < cls.size(); ++j)
                    internal_check(vdmdetail::cols_proportional(n, residues, bs[cls[i]],
                                                               bs[cls[j]]),
                                   "column class members must be pairwise proportional");
        w.classification = "proportional_columns";
        w.classes = std::move(col_classes);
        return w;
    }
    w.classification = "counterexample";
    return w;
}

// ---------------------------------------------------------------------------
// Fast vanishing tests for power minors
// ---------------------------------------------------------------------------

namespace vdmdetail {

// Whether the determinant of (zeta_N^{e_i b_j}) vanishes, for a square index
// selection.  The determinant is accumulated as an integer polynomial in
// zeta_N and reduced modulo the N-th cyclotomic polynomial; it vanishes in
// the cyclotomic field iff the remainder is identically zero.
inline bool power_minor_vanishes(const Int& n, const std::vector<Int>& es,
                                 const std::vector<Int>& bs) {
    internal_check(es.size() == bs.size(), "minor must be square");
    const size_t k = es.size();
    const size_t nn = static_cast<size_t>(to_int64(n));
    std::vector<Int> coeff(nn, Int(0));
    std::vector<int> perm(k);
    for (size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
    do {
        int inversions = 0;
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Int e = 0;
        for (size_t i = 0; i < k; ++i) e += es[i] * bs[static_cast<size_t>(perm[i])];
        size_t idx = static_cast<size_t>(to_int64(((e % n) + n) % n));
        coeff[idx] += (inversions % 2 == 0) ? 1 : -1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // reduce modulo the (monic, integral) cyclotomic polynomial
    const std::vector<Int>& phi = cyclotomic_polynomial(to_int64(n));
    const size_t deg = phi.size() - 1;
    for (size_t top = coeff.size(); top-- > deg;) {
        Int q = coeff[top];
        if (q == 0) continue;
        for (size_t i = 0; i < phi.size(); ++i) coeff[top - deg + i] -= q * phi[i];
    }
    for (const Int& c : coeff)
        if (c != 0) return false;
    return true;
}

// Rank at most 1: every pair of rows proportional.
inline bool power_rank_at_most_one(const Int& n, const std::vector<Int>& es, const BSet& bs) {
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            if (!rows_proportional(n, es[i], es[j], bs)) return false;
    return true;
}

// Rank at most k: every (k+1)-column minor of the full-row selection
// vanishes (rows count must be k+1).
inline bool power_rows_dependent(const Int& n, const std::vector<Int>& es, const BSet& bs) {
    const size_t k = es.size();
    if (bs.size() < k) return true;
    std::vector<size_t> pick(k);
    for (size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<Int> cols;
        for (size_t i : pick) cols.push_back(bs[i]);
        if (!power_minor_vanishes(n, es, cols)) return false;
        size_t i = k;
        while (i-- > 0) {
            if (pick[i] + (k - i) < bs.size()) {
                ++pick[i];
                for (size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

// Fills the cyclotomic polynomial cache up to the given order, so that
// worker threads only ever read it.
inline void warm_cyclotomic_cache(int order_bound) {
    for (long long n = 1; n <= order_bound; ++n) cyclotomic_polynomial(n);
}

// Deterministic parallel map over an index range: each worker claims items
// through a shared counter and writes into its own slot, so the merged
// result is independent of scheduling.
template <class Fn>
inline void parallel_for_items(size_t count, int jobs, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = jobs > 0 ? jobs : (hw > 0 ? static_cast<int>(hw) : 1);
    if (workers > static_cast<int>(count)) workers = static_cast<int>(count == 0 ? 1 : count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace vdmdetail

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

// Outcome of an exhaustive sweep: how many matrices were examined, how many
// degenerated, how many degenerate ones matched the predicted structure, and
// the witnesses for those that did not.
struct SweepReport {
    long long checked = 0;
    long long degenerate = 0;
    long long confirmed = 0;
    std::vector<DegeneracyWitness> counterexamples;
};

// Verifies that every degenerate 3x3 power matrix has two proportional rows
// or two proportional columns, over all orders N <= order_bound, all residue
// triples mod N, and all exponent triples 0 <= a < b < c <= exponent_bound.
inline SweepReport check_3x3_lemma(int order_bound, int exponent_bound, int jobs = 0) {
    if (order_bound < 1 || exponent_bound < 1) throw SchemaError("sweep bounds must be >= 1");
    vdmdetail::warm_cyclotomic_cache(order_bound);
    // work items: one per (N, residue triple)
    struct Item {
        Int n;
        std::vector<Int> es;
    };
    std::vector<Item> items;
    for (int n = 1; n <= order_bound; ++n)
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = r1 + 1; r2 < n; ++r2)
                for (int r3 = r2 + 1; r3 < n; ++r3)
                    items.push_back({Int(n), {Int(r1), Int(r2), Int(r3)}});

    std::vector<SweepReport> slots(items.size());
    vdmdetail::parallel_for_items(items.size(), jobs, [&](size_t idx) {
        const Item& it = items[idx];
        SweepReport& local = slots[idx];
        for (int a = 0; a <= exponent_bound; ++a)
            for (int b = a + 1; b <= exponent_bound; ++b)
                for (int c = b + 1; c <= exponent_bound; ++c) {
                    ++local.checked;
                    std::vector<Int> bs{Int(a), Int(b), Int(c)};
                    if (!vdmdetail::power_minor_vanishes(it.n, it.es, bs)) continue;
                    ++local.degenerate;
                    DegeneracyWitness w = classify_degeneracy(it.n, it.es, bs);
                    if (w.classification == "counterexample")
                        local.counterexamples.push_back(std::move(w));
                    else
                        ++local.confirmed;
                }
    });

    SweepReport out;
    for (SweepReport& s : slots) {
        out.checked += s.checked;
        out.degenerate += s.degenerate;
        out.confirmed += s.confirmed;
        for (DegeneracyWitness& w : s.counterexamples)
            out.counterexamples.push_back(std::move(w));
    }
    return out;
}

// Verifies the rank-2 splitting: every three-row power matrix of rank
// exactly 2 admits a two-part splitting of its roots whose span order
// divides the exponent-set span gcd (the parts collapse to proportional
// rows), or a two-part splitting of its exponents whose span gcd is a
// multiple of the root span order (the parts collapse to proportional
// columns).
inline SweepReport check_rank2_splitting(int order_bound, int width_bound, int exponent_bound,
                                         int jobs = 0) {
    if (order_bound < 1 || width_bound < 1 || exponent_bound < 1)
        throw SchemaError("sweep bounds must be >= 1");
    vdmdetail::warm_cyclotomic_cache(order_bound);
    struct Item {
        Int n;
        std::vector<Int> es;
    };
    std::vector<Item> items;
    for (int n = 1; n <= order_bound; ++n)
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = r1 + 1; r2 < n; ++r2)
                for (int r3 = r2 + 1; r3 < n; ++r3)
                    items.push_back({Int(n), {Int(r1), Int(r2), Int(r3)}});

    // all exponent subsets of {0..exponent_bound} with 2..width_bound elements
    std::vector<BSet> exponent_sets;
    {
        std::vector<Int> universe;
        for (int b = 0; b <= exponent_bound; ++b) universe.push_back(Int(b));
        const size_t u = universe.size();
        for (size_t mask = 1; mask < (size_t(1) << u); ++mask) {
            BSet bs;
            for (size_t i = 0; i < u; ++i)
                if (mask & (size_t(1) << i)) bs.push_back(universe[i]);
            if (bs.size() >= 2 && bs.size() <= static_cast<size_t>(width_bound))
                exponent_sets.push_back(std::move(bs));
        }
        std::sort(exponent_sets.begin(), exponent_sets.end());
    }

    std::vector<SweepReport> slots(items.size());
    vdmdetail::parallel_for_items(items.size(), jobs, [&](size_t idx) {
        const Item& it = items[idx];
        SweepReport& local = slots[idx];
        for (const BSet& bs : exponent_sets) {
            ++local.checked;
            if (vdmdetail::power_rank_at_most_one(it.n, it.es, bs)) continue;
            if (bs.size() >= 3 && !vdmdetail::power_rows_dependent(it.n, it.es, bs)) continue;
            // rank is exactly 2
            ++local.degenerate;
            bool ok = false;
            Int b_span = span_gcd(bs);
            // two-part splittings of the three roots
            for (int lone = 0; lone < 3 && !ok; ++lone) {
                std::vector<std::vector<Int>> parts(2);
                for (int i = 0; i < 3; ++i)
                    parts[i == lone ? 0 : 1].push_back(it.es[static_cast<size_t>(i)]);
                Int span = root_span_order(it.n, parts);
                if (b_span % span == 0) ok = true;
            }
            // two-part splittings of the exponent set
            Int x_span = root_span_order(it.n, it.es);
            for (size_t mask = 1; !ok && mask + 1 < (size_t(1) << bs.size()); ++mask) {
                if (!(mask & 1)) continue;  // fix the first exponent in part 1
                BSet p1, p2;
                for (size_t i = 0; i < bs.size(); ++i)
                    ((mask >> i) & 1 ? p1 : p2).push_back(bs[i]);
                Int g = tuple_span_gcd({p1, p2});
                if (g % x_span == 0) ok = true;
            }
            if (ok) {
                ++local.confirmed;
            } else {
                DegeneracyWitness w;
                w.order = it.n;
                w.residues = it.es;
                w.exponents = bs;
                w.classification = "counterexample";
                w.note = "rank-2 matrix with no admissible splitting";
                local.counterexamples.push_back(std::move(w));
            }
        }
    });

    SweepReport out;
    for (SweepReport& s : slots) {
        out.checked += s.checked;
        out.degenerate += s.degenerate;
        out.confirmed += s.confirmed;
        for (DegeneracyWitness& w : s.counterexamples)
            out.counterexamples.push_back(std::move(w));
    }
    return out;
}

// Searches for counterexamples to the splitting conjecture: whenever the
// (k+1)-row power matrix of X = {1, x_1, ..., x_k} against a coprime
// exponent set B (0 = b_0, gcd of the rest 1, at least k+2 exponents... at
// least k+1 columns) is degenerate, B should split into at most k parts such
// that every x_i is a root of unity of degree dividing the parts' span gcd.
inline SweepReport conjecture_search(int k, int order_bound, int exponent_bound, int jobs = 0) {
    if (k < 1) throw SchemaError("the conjecture needs k >= 1");
    if (order_bound < 1 || exponent_bound < 1) throw SchemaError("sweep bounds must be >= 1");
    vdmdetail::warm_cyclotomic_cache(order_bound);

    struct Item {
        Int n;
        std::vector<Int> es;  // residues including the leading 0
    };
    std::vector<Item> items;
    for (int n = 1; n <= order_bound; ++n) {
        // all k-subsets of nonzero residues, preceded by residue 0 (= root 1)
        std::vector<int> pick(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i + 1;
        if (pick.back() >= n) continue;
        while (true) {
            std::vector<Int> es{Int(0)};
            for (int r : pick) es.push_back(Int(r));
            items.push_back({Int(n), std::move(es)});
            int i = k;
            bool done = false;
            while (i-- > 0) {
                if (pick[static_cast<size_t>(i)] + (k - i) < n) {
                    ++pick[static_cast<size_t>(i)];
                    for (int j = i + 1; j < k; ++j)
                        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
                    break;
                }
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }

    // coprime exponent sets: 0 together with b's from [1..exponent_bound],
    // gcd 1, and at least k+1 exponents so that row dependence is meaningful
    std::vector<BSet> exponent_sets;
    {
        const size_t u = static_cast<size_t>(exponent_bound);
        for (size_t mask = 1; mask < (size_t(1) << u); ++mask) {
            BSet bs{Int(0)};
            Int g = 0;
            for (size_t i = 0; i < u; ++i)
                if (mask & (size_t(1) << i)) {
                    bs.push_back(Int(i + 1));
                    g = gcd(g, Int(i + 1));
                }
            if (g != 1) continue;
            if (bs.size() < static_cast<size_t>(k) + 1) continue;
            exponent_sets.push_back(std::move(bs));
        }
        std::sort(exponent_sets.begin(), exponent_sets.end());
    }

    std::vector<SweepReport> slots(items.size());
    vdmdetail::parallel_for_items(items.size(), jobs, [&](size_t idx) {
        const Item& it = items[idx];
        SweepReport& local = slots[idx];
        for (const BSet& bs : exponent_sets) {
            ++local.checked;
            if (!vdmdetail::power_rows_dependent(it.n, it.es, bs)) continue;
            ++local.degenerate;
            // brute-force set partitions of the exponents into <= k parts
            const size_t m = bs.size();
            std::vector<int> assign(m, 0);
            bool ok = false;
            while (!ok) {
                int used = 0;
                for (size_t i = 0; i < m; ++i) used = std::max(used, assign[i] + 1);
                std::vector<BSet> parts(static_cast<size_t>(used));
                for (size_t i = 0; i < m; ++i)
                    parts[static_cast<size_t>(assign[i])].push_back(bs[i]);
                Int g = tuple_span_gcd(parts);
                bool all_collapse = true;
                for (const Int& e : it.es)
                    if ((e * g) % it.n != 0) {
                        all_collapse = false;
                        break;
                    }
                if (all_collapse) {
                    ok = true;
                    break;
                }
                // next restricted-growth string with at most k classes
                size_t i = m;
                bool done = false;
                while (i-- > 0) {
                    if (i == 0) {
                        done = true;
                        break;
                    }
                    int cap = 0;
                    for (size_t j = 0; j < i; ++j) cap = std::max(cap, assign[j]);
                    int limit = std::min(cap + 1, k - 1);
                    if (assign[i] < limit) {
                        ++assign[i];
                        for (size_t j = i + 1; j < m; ++j) assign[j] = 0;
                        break;
                    }
                }
                if (done) break;
            }
            if (ok) {
                ++local.confirmed;
            } else {
                DegeneracyWitness w;
                w.order = it.n;
                w.residues = it.es;
                w.exponents = bs;
                w.classification = "counterexample";
                w.note = k <= 2 ? "contradicts the proven two-part case; suspect the "
                                  "implementation before the statement"
                                : "open-territory counterexample candidate";
                local.counterexamples.push_back(std::move(w));
            }
        }
    });

    SweepReport out;
    for (SweepReport& s : slots) {
        out.checked += s.checked;
        out.degenerate += s.degenerate;
        out.confirmed += s.confirmed;
        for (DegeneracyWitness& w : s.counterexamples)
            out.counterexamples.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Symbolic power determinants
// ---------------------------------------------------------------------------

// The 3x3 power determinant det(v_i^{p_j}) in variables x, y, z for the
// exponent triple p = (a, b, c).
inline MPoly power_det3(int a, int b, int c) {
    MPoly d(3);
    const int p[3] = {a, b, c};
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    do {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (perm[i] > perm[j]) ++inversions;
        // variable i carries exponent p[perm[i]]
        std::vector<int> e{p[perm[0]], p[perm[1]], p[perm[2]]};
        d.add_term(std::move(e), Rat(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm, perm + 3));
    return d;
}

// Power determinant with its exact quotients: by the classical alternating
// determinant det_{0,1,2} = (x-y)(y-z)(z-x) always, and additionally by
// det_{0,n,2n} with n = gcd(b,c) when a = 0.
struct SchurDetResult {
    MPoly det;
    MPoly quotient;              // det / det_{0,1,2}
    std::vector<int> leading;    // lexicographic leading exponent of the quotient
    bool has_reduced = false;    // set when a == 0
    MPoly reduced_quotient;      // det / det_{0,n,2n}
    std::vector<int> reduced_leading;
};

inline SchurDetResult schur_det(int a, int b, int c) {
    if (!(0 <= a && a < b && b < c)) throw SchemaError("exponents must satisfy 0 <= a < b < c");
    SchurDetResult r;
    r.det = power_det3(a, b, c);
    r.quotient = mpoly_divide_exact(r.det, power_det3(0, 1, 2));
    internal_check(!r.quotient.is_zero(), "power determinant quotient cannot vanish");
    r.leading = r.quotient.terms.rbegin()->first;
    if (a == 0) {
        long long n = to_int64(gcd(Int(b), Int(c)));
        r.has_reduced = true;
        r.reduced_quotient =
            mpoly_divide_exact(r.det, power_det3(0, static_cast<int>(n), static_cast<int>(2 * n)));
        internal_check(!r.reduced_quotient.is_zero(), "reduced quotient cannot vanish");
        r.reduced_leading = r.reduced_quotient.terms.rbegin()->first;
    }
    return r;
}

} // namespace tropsing
