#include "enpg/split.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace enpg {

namespace {

int side_of(SClass c) {
    switch (c) {
        case SClass::LH: case SClass::LV: case SClass::LHH: case SClass::LHV: return 0;
        default: return 1;
    }
}

enum Kind { KH = 0, KV = 1, KHH = 2, KHV = 3 };

int kind_of(SClass c) {
    switch (c) {
        case SClass::LH: case SClass::RH: return KH;
        case SClass::LV: case SClass::RV: return KV;
        case SClass::LHH: case SClass::RHH: return KHH;
        default: return KHV;
    }
}

SClass make_class(int side, int kind) {
    static const SClass table[2][4] = {
        {SClass::LH, SClass::LV, SClass::LHH, SClass::LHV},
        {SClass::RH, SClass::RV, SClass::RHH, SClass::RHV}};
    return table[side][kind];
}

LabelSet range_set(const std::vector<Label>& sigma, int lo, int hi) {
    LabelSet out;
    for (int r = lo; r <= hi; ++r) out.insert(sigma[r - 1]);
    return out;
}

}  // namespace

const char* to_string(SClass c) {
    switch (c) {
        case SClass::LH: return "LH";
        case SClass::LV: return "LV";
        case SClass::LHH: return "LHH";
        case SClass::LHV: return "LHV";
        case SClass::RH: return "RH";
        case SClass::RV: return "RV";
        case SClass::RHH: return "RHH";
        case SClass::RHV: return "RHV";
    }
    return "?";
}

std::optional<SClass> sclass_from_string(const std::string& s) {
    static const std::pair<const char*, SClass> table[] = {
        {"LH", SClass::LH},   {"LV", SClass::LV},   {"LHH", SClass::LHH},
        {"LHV", SClass::LHV}, {"RH", SClass::RH},   {"RV", SClass::RV},
        {"RHH", SClass::RHH}, {"RHV", SClass::RHV}};
    for (const auto& [name, cls] : table)
        if (s == name) return cls;
    return std::nullopt;
}

WitnessCheck check_split_witness(const Graph& g, const SplitPartition& part,
                                 const SplitWitness& w) {
    // --- structural validation (throws) ---
    for (int x = 0; x < 2; ++x) {
        LabelSet both;
        for (int y = 0; y < 2; ++y) {
            for (const auto& v : w.k_parts[x][y]) {
                if (!part.K.count(v))
                    throw std::invalid_argument("K part contains non-clique vertex '" + v + "'");
                if (!both.insert(v).second)
                    throw std::invalid_argument("K parts overlap at '" + v + "'");
            }
            if (w.sigmas[x][y].size() != w.k_parts[x][y].size() ||
                LabelSet(w.sigmas[x][y].begin(), w.sigmas[x][y].end()) != w.k_parts[x][y])
                throw std::invalid_argument("sigma is not a permutation of its part");
        }
        if (both != part.K) throw std::invalid_argument("K parts do not cover K");
    }
    for (const auto& v : w.k_parts[0][KV])
        if (w.k_parts[1][KV].count(v))
            throw std::invalid_argument("K_{L,V} and K_{R,V} intersect at '" + v + "'");
    {
        LabelSet classed;
        for (const auto& [s, a] : w.s_classes) {
            if (!part.S.count(s))
                throw std::invalid_argument("class assignment for non-stable vertex '" + s + "'");
            classed.insert(s);
            int x = side_of(a.cls), kind = kind_of(a.cls);
            int len = static_cast<int>(w.sigmas[x][kind == KV ? KV : KH].size());
            switch (kind) {
                case KH: case KV:
                    if (a.lo < 1 || a.hi > len || a.lo > a.hi + 1)
                        throw std::invalid_argument("interval range out of bounds for '" + s + "'");
                    break;
                case KHH:
                    if (a.lo != 1 || a.hi < 0 || a.hi > len)
                        throw std::invalid_argument("prefix range out of bounds for '" + s + "'");
                    break;
                case KHV:
                    if (a.hi != len || a.lo < 1 || a.lo > len + 1)
                        throw std::invalid_argument("suffix range out of bounds for '" + s + "'");
                    break;
            }
        }
        if (classed != part.S)
            throw std::invalid_argument("class assignment does not cover the stable set");
    }

    // --- conditions (i)-(iii), per vertex ---
    WitnessCheck res;
    for (const auto& [s, a] : w.s_classes) {
        int x = side_of(a.cls), kind = kind_of(a.cls);
        const LabelSet& nb = g.neighbors(s);
        LabelSet expect;
        const char* cond = "i";
        switch (kind) {
            case KH:
                expect = range_set(w.sigmas[x][KH], a.lo, a.hi);
                break;
            case KV:
                expect = range_set(w.sigmas[x][KV], a.lo, a.hi);
                break;
            case KHH: {
                cond = "ii";
                LabelSet prefix = range_set(w.sigmas[x][KH], 1, a.hi);
                for (const auto& v : prefix)
                    if (w.k_parts[1 - x][KH].count(v)) expect.insert(v);
                break;
            }
            case KHV: {
                cond = "iii";
                expect = range_set(w.sigmas[x][KH], a.lo,
                                   static_cast<int>(w.sigmas[x][KH].size()));
                for (const auto& v : w.k_parts[x][KV]) expect.insert(v);
                break;
            }
        }
        if (nb != expect) {
            res.violated = cond;
            res.offenders = {s};
            res.detail = "neighborhood of '" + s + "' does not match its class range";
            return res;
        }
    }

    // --- condition (iv): each interval/prefix overlaps at most one suffix ---
    for (const auto& [s, a] : w.s_classes) {
        int x = side_of(a.cls), kind = kind_of(a.cls);
        if (kind != KH && kind != KHH) continue;
        int len = static_cast<int>(w.sigmas[x][KH].size());
        int lo = kind == KHH ? 1 : a.lo, hi = a.hi;
        std::vector<Label> overlapping;
        for (const auto& [s2, a2] : w.s_classes) {
            if (kind_of(a2.cls) != KHV || side_of(a2.cls) != x) continue;
            if (std::max(lo, a2.lo) <= std::min(hi, len)) overlapping.push_back(s2);
        }
        if (overlapping.size() > 1) {
            res.violated = "iv";
            res.offenders = {s, overlapping[0], overlapping[1]};
            return res;
        }
    }

    // --- condition (v) ---
    for (int x = 0; x < 2; ++x) {
        bool has_hh = false;
        std::vector<Label> other_hv;
        for (const auto& [s, a] : w.s_classes) {
            if (side_of(a.cls) == x && kind_of(a.cls) == KHH) has_hh = true;
            if (side_of(a.cls) == 1 - x && kind_of(a.cls) == KHV) other_hv.push_back(s);
        }
        if (has_hh && other_hv.size() > 1) {
            res.violated = "v";
            res.offenders = {other_hv[0], other_hv[1]};
            return res;
        }
    }

    // --- condition (vi) ---
    for (int x = 0; x < 2; ++x)
        for (const auto& v : w.k_parts[x][KV])
            if (!w.k_parts[1 - x][KH].count(v)) {
                res.violated = "vi";
                res.offenders = {v};
                return res;
            }

    res.ok = true;
    return res;
}

namespace {

// Slot bookkeeping: S endpoints live strictly between consecutive anchor
// points; every gap is 2|S| wide so demand never exceeds supply.
struct SlotAllocator {
    std::int64_t gap_width;
    std::map<std::tuple<int, int, int>, std::int64_t> used;

    std::int64_t take(int x, int y, int gap) {
        std::int64_t& c = used[{x, y, gap}];
        ++c;
        if (c >= gap_width) throw std::logic_error("slot gap overflow");
        return gap_width * gap + c;  // distance from the near anchor
    }
};

}  // namespace

Representation build_split_rep(const Graph& g, const SplitPartition& part,
                               const SplitWitness& input) {
    {
        WitnessCheck chk = check_split_witness(g, part, input);
        if (!chk.ok)
            throw std::invalid_argument("witness fails condition (" + chk.violated + ")");
    }

    // normalize HV entries that have an equivalent plain-interval reading
    SplitWitness w = input;
    for (auto& [s, a] : w.s_classes) {
        if (kind_of(a.cls) != KHV) continue;
        int x = side_of(a.cls);
        int len_h = static_cast<int>(w.sigmas[x][KH].size());
        int len_v = static_cast<int>(w.sigmas[x][KV].size());
        if (len_v == 0) {
            a.cls = make_class(x, KH);  // suffix alone is an interval
            a.hi = len_h;
        } else if (a.lo == len_h + 1) {
            a.cls = make_class(x, KV);  // neighborhood is exactly K_{X,V}
            a.lo = 1;
            a.hi = len_v;
        }
    }
    for (int x = 0; x < 2; ++x) {
        int hv = 0;
        for (const auto& [s, a] : w.s_classes)
            if (side_of(a.cls) == x && kind_of(a.cls) == KHV) ++hv;
        if (hv > 1)
            throw std::invalid_argument(
                "witness not realizable by this layout: two S_{X,HV} vertices with non-empty "
                "suffixes share one vertical part");
    }

    const std::int64_t n_s = static_cast<std::int64_t>(part.S.size());
    const std::int64_t gap_w = std::max<std::int64_t>(2 * n_s, 2);
    const std::int64_t len_h[2] = {static_cast<std::int64_t>(w.sigmas[0][KH].size()),
                                   static_cast<std::int64_t>(w.sigmas[1][KH].size())};
    const std::int64_t len_v[2] = {static_cast<std::int64_t>(w.sigmas[0][KV].size()),
                                   static_cast<std::int64_t>(w.sigmas[1][KV].size())};
    const std::int64_t xb[2] = {-1 - gap_w * (len_h[0] + 1), 1 + gap_w * (len_h[1] + 1)};
    const std::int64_t sign[2] = {-1, +1};

    std::map<Label, int> rank[2][2];
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (std::size_t i = 0; i < w.sigmas[x][y].size(); ++i)
                rank[x][y][w.sigmas[x][y][i]] = static_cast<int>(i) + 1;

    auto h_point = [&](int x, std::int64_t dist) {
        return GridPoint{sign[x] * (1 + dist), 0};
    };
    auto v_point = [&](int x, std::int64_t dist) { return GridPoint{xb[x], dist}; };

    Representation rep;

    // clique paths between their two anchor endpoints, through e_K
    for (const auto& v : part.K) {
        std::vector<GridPoint> way;
        if (w.k_parts[0][KH].count(v)) {
            way.push_back(h_point(0, gap_w * rank[0][KH][v]));
        } else {
            way.push_back(v_point(0, gap_w * rank[0][KV][v]));
            way.push_back(GridPoint{xb[0], 0});
        }
        if (w.k_parts[1][KH].count(v)) {
            way.push_back(h_point(1, gap_w * rank[1][KH][v]));
        } else {
            way.push_back(GridPoint{xb[1], 0});
            way.push_back(v_point(1, gap_w * rank[1][KV][v]));
        }
        rep.set_path(v, path_through(way));
    }

    SlotAllocator slots{gap_w, {}};
    int top_multiplicity[2] = {0, 0};

    for (const auto& [s, a] : w.s_classes) {
        int x = side_of(a.cls);
        switch (kind_of(a.cls)) {
            case KH: {
                std::int64_t c = slots.take(x, KH, a.lo - 1);
                std::int64_t f = slots.take(x, KH, a.hi);
                GridPoint pc = h_point(x, c), pf = h_point(x, f);
                rep.set_path(s, path_through({pc, pf, GridPoint{pf.x, 1}}));
                break;
            }
            case KV: {
                std::int64_t c = slots.take(x, KV, a.lo - 1);
                if (a.hi < len_v[x]) {
                    std::int64_t f = slots.take(x, KV, a.hi);
                    GridPoint pf = v_point(x, f);
                    rep.set_path(s, path_through({v_point(x, c), pf,
                                                  GridPoint{pf.x - sign[x], pf.y}}));
                } else {
                    // interval reaching the top anchor: up to three mutually
                    // splitting shapes around the line end
                    std::int64_t ytop = gap_w * len_v[x];
                    int m = top_multiplicity[x]++;
                    GridPoint top = v_point(x, ytop);
                    if (m == 0) {
                        rep.set_path(s, path_through({v_point(x, c), GridPoint{top.x, ytop + 1}}));
                    } else if (m == 1) {
                        rep.set_path(s, path_through({v_point(x, c), top,
                                                      GridPoint{top.x - sign[x], ytop}}));
                    } else if (m == 2) {
                        rep.set_path(s, path_through({v_point(x, c), top,
                                                      GridPoint{top.x + sign[x], ytop}}));
                    } else {
                        throw std::invalid_argument(
                            "witness not realizable by this layout: four intervals reaching the "
                            "top of one vertical part");
                    }
                }
                break;
            }
            case KHH: {
                std::int64_t l = slots.take(x, KH, a.hi);
                GridPoint pl = h_point(x, l);
                GridPoint far{xb[1 - x] + sign[1 - x], 0};  // one step past the other bend
                rep.set_path(s, path_through({GridPoint{pl.x, 1}, pl, far}));
                break;
            }
            case KHV: {
                std::int64_t c = slots.take(x, KH, a.lo - 1);
                rep.set_path(s, path_through({h_point(x, c), GridPoint{xb[x], 0},
                                              GridPoint{xb[x], 1}}));
                break;
            }
        }
    }
    return rep;
}

SizeFilterResult split_size_filter(const Graph& g, const SplitPartition& part) {
    std::map<std::size_t, std::size_t> degree_class;
    for (const auto& s : part.S) degree_class[g.degree(s)]++;
    for (const auto& [d, count] : degree_class) {
        long long bound = 2 * (static_cast<long long>(part.K.size()) + 2 -
                               static_cast<long long>(d));
        if (static_cast<long long>(count) > bound)
            return SizeFilterResult{false, d, count, bound};
    }
    return SizeFilterResult{};
}

InequalityReport check_witness_inequalities(const Graph& g, const SplitPartition& part,
                                            const SplitWitness& w) {
    // counts per (side, kind, degree)
    std::map<std::tuple<int, int, std::size_t>, std::size_t> cnt;
    std::map<std::size_t, std::size_t> total;
    for (const auto& [s, a] : w.s_classes) {
        std::size_t d = g.degree(s);
        cnt[{side_of(a.cls), kind_of(a.cls), d}]++;
        total[d]++;
    }
    auto k_sz = [&](int x, int y) { return static_cast<long long>(w.k_parts[x][y].size()); };
    long long hh_common = 0;
    for (const auto& v : w.k_parts[0][KH])
        if (w.k_parts[1][KH].count(v)) ++hh_common;

    for (const auto& [d, count] : total) {
        long long dd = static_cast<long long>(d);
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                long long lim = std::max(k_sz(x, y) + 1 - dd, 0ll);
                if (static_cast<long long>(cnt[{x, y, d}]) > lim)
                    return {false, "1", d};
            }
            long long hv = static_cast<long long>(cnt[{x, KHV, d}]);
            long long hv_lim = dd > k_sz(x, KV) ? 1 : 0;
            if (hv > hv_lim) return {false, "2", d};
            long long v_and_hv = static_cast<long long>(cnt[{x, KV, d}]) + hv;
            long long v_lim = dd > k_sz(x, KV) ? 1 : k_sz(x, KV) + 1 - dd;
            if (v_and_hv > v_lim) return {false, "3", d};
            long long hh = static_cast<long long>(cnt[{x, KHH, d}]);
            if (hh > (dd <= hh_common ? 1 : 0)) return {false, "4", d};
        }
        long long s_lim = 2 * (static_cast<long long>(part.K.size()) + 2 - dd);
        if (static_cast<long long>(count) > s_lim) return {false, "5", d};
    }
    return {};
}

// ---------------------------------------------------------------------------
// exhaustive witness search

namespace {

using Mask = std::uint32_t;

struct SearchSide {
    std::vector<int> k_members;  // indices into K, this side's horizontal part
    // constraints referencing K indices
    std::vector<Mask> intervals;       // S_{X,H}: set must be consecutive
    std::vector<Mask> suffixes;        // S_{X,HV}: set must be a suffix
    std::vector<Mask> prefix_targets;  // S_{X,HH}: set = prefix & other_h
    Mask other_h = 0;
};

// Fill a permutation position by position. Interval sets must stay contiguous
// against the growing prefix, suffix sets may only start once the tail is
// reached, and prefix targets force their members before the rest of other_h.
struct SigmaSolver {
    const SearchSide& side;
    std::vector<int> perm;
    Mask placed = 0;

    bool feasible_position(int v) {
        Mask vbit = Mask(1) << v;
        std::size_t pos = perm.size();  // 0-based index being filled
        std::size_t len = side.k_members.size();
        for (Mask m : side.intervals) {
            Mask done = m & placed;
            if (m & vbit) {
                // continuing a started run requires the run to end at the top
                if (done && !(Mask(1) << perm.back() & m)) return false;
            } else {
                // a non-member may not interrupt a partially placed interval
                if (done && done != m) return false;
            }
        }
        for (Mask m : side.suffixes) {
            std::size_t sz = static_cast<std::size_t>(__builtin_popcount(m));
            bool in_tail = pos >= len - sz;
            if (((m & vbit) != 0) != in_tail) return false;
        }
        for (Mask m : side.prefix_targets) {
            // members of m precede every other vertex of other_h
            if ((side.other_h & vbit) && !(m & vbit) && (m & ~placed)) return false;
        }
        return true;
    }

    bool solve() {
        std::size_t len = side.k_members.size();
        if (perm.size() == len) return true;
        for (std::size_t i = 0; i < len; ++i) {
            int v = static_cast<int>(i);
            Mask vbit = Mask(1) << v;
            if (placed & vbit) continue;
            if (!feasible_position(v)) continue;
            perm.push_back(v);
            placed |= vbit;
            if (solve()) return true;
            placed &= ~vbit;
            perm.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<SplitWitness> brute_force_split_recognize(const Graph& g,
                                                        const SplitPartition& part,
                                                        const BruteForceOptions& opts) {
    if (!opts.force && (part.K.size() > opts.max_k || part.S.size() > opts.max_s))
        throw std::length_error("instance exceeds the brute-force guard");
    if (part.K.size() > 20) throw std::length_error("clique too large for mask search");

    std::vector<Label> K(part.K.begin(), part.K.end());
    std::vector<Label> S(part.S.begin(), part.S.end());
    const std::size_t nk = K.size();
    std::map<Label, int> k_index;
    for (std::size_t i = 0; i < nk; ++i) k_index[K[i]] = static_cast<int>(i);

    std::vector<Mask> s_mask(S.size(), 0);
    for (std::size_t i = 0; i < S.size(); ++i)
        for (const auto& v : g.neighbors(S[i])) {
            auto it = k_index.find(v);
            if (it == k_index.end())
                throw std::invalid_argument("stable vertex adjacent outside K");
            s_mask[i] |= Mask(1) << it->second;
        }

    const Mask all = nk == 0 ? 0 : (Mask(1) << nk) - 1;
    auto subset = [](Mask a, Mask b) { return (a & ~b) == 0; };

    std::vector<std::size_t> group(S.size());  // equal-neighborhood groups
    {
        std::map<Mask, std::size_t> seen;
        for (std::size_t i = 0; i < S.size(); ++i)
            group[i] = seen.try_emplace(s_mask[i], seen.size()).first->second;
    }

    // enumerate vertical parts: per clique vertex 0 = horizontal on both
    // sides, 1 = left-vertical, 2 = right-vertical
    std::vector<int> vpart(nk, 0);
    while (true) {
        Mask lv = 0, rv = 0;
        for (std::size_t i = 0; i < nk; ++i) {
            if (vpart[i] == 1) lv |= Mask(1) << i;
            if (vpart[i] == 2) rv |= Mask(1) << i;
        }
        const Mask h_mask[2] = {all & ~lv, all & ~rv};
        const Mask v_mask[2] = {lv, rv};

        // class candidates per stable vertex
        std::vector<std::vector<SClass>> cands(S.size());
        bool dead = false;
        for (std::size_t i = 0; i < S.size() && !dead; ++i) {
            auto& c = cands[i];
            for (int x = 0; x < 2; ++x) {
                if (subset(s_mask[i], h_mask[x])) c.push_back(make_class(x, KH));
                if (v_mask[x] && subset(s_mask[i], v_mask[x])) c.push_back(make_class(x, KV));
                if (subset(s_mask[i], h_mask[0] & h_mask[1])) c.push_back(make_class(x, KHH));
                if (v_mask[x] && subset(v_mask[x], s_mask[i])) c.push_back(make_class(x, KHV));
            }
            if (c.empty()) dead = true;
        }

        if (!dead) {
            std::vector<std::size_t> order(S.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (cands[a].size() != cands[b].size()) return cands[a].size() < cands[b].size();
                return group[a] < group[b];
            });

            std::vector<SClass> chosen(S.size());
            std::optional<SplitWitness> found;

            auto solve_sides_and_emit = [&]() -> bool {
                SplitWitness w;
                for (std::size_t i = 0; i < nk; ++i) {
                    for (int x = 0; x < 2; ++x) {
                        if ((v_mask[x] >> i) & 1) w.k_parts[x][KV].insert(K[i]);
                        else w.k_parts[x][KH].insert(K[i]);
                    }
                }
                for (int x = 0; x < 2; ++x) {
                    // vertical permutation: interval constraints only
                    SearchSide vside;
                    for (std::size_t i = 0; i < nk; ++i)
                        if ((v_mask[x] >> i) & 1) vside.k_members.push_back(static_cast<int>(i));
                    auto compress = [&](Mask m, const std::vector<int>& members) {
                        Mask out = 0;
                        for (std::size_t j = 0; j < members.size(); ++j)
                            if ((m >> members[j]) & 1) out |= Mask(1) << j;
                        return out;
                    };
                    for (std::size_t i = 0; i < S.size(); ++i)
                        if (side_of(chosen[i]) == x && kind_of(chosen[i]) == KV)
                            vside.intervals.push_back(compress(s_mask[i], vside.k_members));
                    SigmaSolver vsolve{vside, {}, 0};
                    if (!vsolve.solve()) return false;
                    for (int p : vsolve.perm) w.sigmas[x][KV].push_back(K[vside.k_members[p]]);

                    SearchSide hside;
                    for (std::size_t i = 0; i < nk; ++i)
                        if ((h_mask[x] >> i) & 1) hside.k_members.push_back(static_cast<int>(i));
                    hside.other_h = compress(h_mask[1 - x], hside.k_members);
                    for (std::size_t i = 0; i < S.size(); ++i) {
                        if (side_of(chosen[i]) != x) continue;
                        switch (kind_of(chosen[i])) {
                            case KH:
                                hside.intervals.push_back(compress(s_mask[i], hside.k_members));
                                break;
                            case KHV:
                                hside.suffixes.push_back(
                                    compress(s_mask[i] & ~v_mask[x], hside.k_members));
                                break;
                            case KHH:
                                hside.prefix_targets.push_back(
                                    compress(s_mask[i], hside.k_members));
                                break;
                            default: break;
                        }
                    }
                    SigmaSolver hsolve{hside, {}, 0};
                    if (!hsolve.solve()) return false;
                    for (int p : hsolve.perm) w.sigmas[x][KH].push_back(K[hside.k_members[p]]);
                }

                // ranges from the permutations
                for (std::size_t i = 0; i < S.size(); ++i) {
                    SAssignment a;
                    a.cls = chosen[i];
                    int x = side_of(a.cls);
                    const auto& sigma = w.sigmas[x][kind_of(a.cls) == KV ? KV : KH];
                    int len = static_cast<int>(sigma.size());
                    switch (kind_of(a.cls)) {
                        case KH: case KV: {
                            int lo = len + 1, hi = 0;
                            for (int r = 1; r <= len; ++r)
                                if (g.has_edge(S[i], sigma[r - 1])) {
                                    lo = std::min(lo, r);
                                    hi = std::max(hi, r);
                                }
                            a.lo = lo;
                            a.hi = hi;
                            break;
                        }
                        case KHH: {
                            int hi = 0;
                            for (int r = 1; r <= len; ++r)
                                if (g.has_edge(S[i], sigma[r - 1])) hi = r;
                            a.lo = 1;
                            a.hi = hi;
                            break;
                        }
                        case KHV: {
                            int lo = len + 1;
                            for (int r = len; r >= 1; --r)
                                if (g.has_edge(S[i], sigma[r - 1])) lo = r;
                            a.lo = lo;
                            a.hi = len;
                            break;
                        }
                    }
                    w.s_classes[S[i]] = a;
                }

                if (!check_split_witness(g, part, w).ok) return false;
                Representation rep;
                try {
                    rep = build_split_rep(g, part, w);
                } catch (const std::invalid_argument&) {
                    return false;
                }
                if (!verify_rep(rep, g, 1).ok) return false;
                found = std::move(w);
                return true;
            };

            auto assign = [&](auto&& self, std::size_t depth) -> bool {
                if (depth == order.size()) return solve_sides_and_emit();
                std::size_t si = order[depth];
                for (SClass c : cands[si]) {
                    // identical neighborhoods take classes in non-decreasing order
                    bool skip = false;
                    for (std::size_t d2 = 0; d2 < depth; ++d2) {
                        std::size_t sj = order[d2];
                        if (group[sj] == group[si] &&
                            static_cast<int>(chosen[sj]) > static_cast<int>(c)) {
                            skip = true;
                            break;
                        }
                    }
                    if (skip) continue;
                    chosen[si] = c;
                    // partial counting prunes for conditions (iv)/(v) and the layout
                    int hv[2] = {0, 0}, hh[2] = {0, 0};
                    for (std::size_t d2 = 0; d2 <= depth; ++d2) {
                        std::size_t sj = order[d2];
                        int xx = side_of(chosen[sj]);
                        if (kind_of(chosen[sj]) == KHV && (s_mask[sj] & ~v_mask[xx])) ++hv[xx];
                        if (kind_of(chosen[sj]) == KHH) ++hh[xx];
                    }
                    if (hv[0] > 1 || hv[1] > 1) continue;
                    if ((hh[0] && hv[1] > 1) || (hh[1] && hv[0] > 1)) continue;
                    if (self(self, depth + 1)) return true;
                }
                return false;
            };

            if (assign(assign, 0)) return found;
        }

        // next vertical assignment
        std::size_t pos = 0;
        while (pos < nk && vpart[pos] == 2) vpart[pos++] = 0;
        if (pos == nk) break;
        ++vpart[pos];
    }
    return std::nullopt;
}

Graph reduce_ham_decomp_to_split(const Graph& g4) {
    RegularityCheck chk = check_regular_diamond_free(g4, 4);
    if (!chk.ok) throw std::invalid_argument("input is not 4-regular and diamond-free");
    std::vector<Label> verts = g4.vertices();
    if (verts.size() < 5) throw std::invalid_argument("graph too small");
    const Label v = verts.front();  // lexicographically smallest

    LabelSet keep(verts.begin(), verts.end());
    keep.erase(v);
    Graph gp = g4.induced(keep);

    Graph out;
    LabelSet K = keep, S;
    for (const auto& u : keep) out.add_vertex(u);
    for (const auto& u : keep)  // K is a clique of G''
        for (const auto& w : keep)
            if (u < w) out.add_edge(u, w);
    for (const auto& [u, w] : gp.edges()) {
        Label s = "e:" + u + "-" + w;
        out.add_edge(s, u);
        out.add_edge(s, w);
        S.insert(s);
    }
    std::vector<Label> nbrs(g4.neighbors(v).begin(), g4.neighbors(v).end());
    for (std::size_t i = 0; i < 4; ++i) {
        Label s = "s" + std::to_string(i + 1);
        for (const auto& u : keep)
            if (u != nbrs[i]) out.add_edge(s, u);
        S.insert(s);
    }
    out.set_annotation("K", K);
    out.set_annotation("S", S);
    return out;
}

SplitWitness ham_decomp_to_witness(const Graph& g4, const HamDecomposition& d) {
    std::vector<Label> verts = g4.vertices();
    const std::size_t n = verts.size();
    auto validate_cycle = [&](const std::vector<Label>& cyc) {
        if (cyc.size() != n) throw std::invalid_argument("cycle does not span the vertex set");
        LabelSet seen(cyc.begin(), cyc.end());
        if (seen.size() != n || seen != LabelSet(verts.begin(), verts.end()))
            throw std::invalid_argument("cycle is not a permutation of the vertices");
        for (std::size_t i = 0; i < n; ++i)
            if (!g4.has_edge(cyc[i], cyc[(i + 1) % n]))
                throw std::invalid_argument("cycle uses a non-edge");
    };
    validate_cycle(d.cycle_a);
    validate_cycle(d.cycle_b);
    std::set<std::pair<Label, Label>> ea, eb;
    for (std::size_t i = 0; i < n; ++i) {
        auto norm = [](const Label& a, const Label& b) {
            return std::make_pair(std::min(a, b), std::max(a, b));
        };
        ea.insert(norm(d.cycle_a[i], d.cycle_a[(i + 1) % n]));
        eb.insert(norm(d.cycle_b[i], d.cycle_b[(i + 1) % n]));
    }
    for (const auto& e : ea)
        if (eb.count(e)) throw std::invalid_argument("cycles share an edge");
    if (ea.size() + eb.size() != g4.edge_count())
        throw std::invalid_argument("cycles do not cover the edge set");

    const Label v = verts.front();
    auto open_path = [&](const std::vector<Label>& cyc) {
        std::size_t pos = 0;
        while (cyc[pos] != v) ++pos;
        std::vector<Label> path;
        for (std::size_t i = 1; i < n; ++i) path.push_back(cyc[(pos + i) % n]);
        if (path.back() < path.front()) std::reverse(path.begin(), path.end());
        return path;
    };
    std::vector<Label> sigma_l = open_path(d.cycle_a);
    std::vector<Label> sigma_r = open_path(d.cycle_b);
    const int len = static_cast<int>(n) - 1;

    SplitWitness w;
    for (const auto& u : verts)
        if (u != v) {
            w.k_parts[0][KH].insert(u);
            w.k_parts[1][KH].insert(u);
        }
    w.sigmas[0][KH] = sigma_l;
    w.sigmas[1][KH] = sigma_r;

    std::map<Label, int> pos_l, pos_r;
    for (int i = 0; i < len; ++i) {
        pos_l[sigma_l[i]] = i + 1;
        pos_r[sigma_r[i]] = i + 1;
    }

    // edge vertices: consecutive in the permutation whose cycle held the edge
    Graph reduced = reduce_ham_decomp_to_split(g4);
    const LabelSet& S = *reduced.annotation("S");
    for (const auto& s : S) {
        if (s.rfind("e:", 0) == 0) {
            std::vector<Label> ends(reduced.neighbors(s).begin(), reduced.neighbors(s).end());
            int la = pos_l[ends[0]], lb = pos_l[ends[1]];
            SAssignment a;
            if (std::abs(la - lb) == 1) {
                a.cls = SClass::LH;
                a.lo = std::min(la, lb);
            } else {
                int ra = pos_r[ends[0]], rb = pos_r[ends[1]];
                if (std::abs(ra - rb) != 1)
                    throw std::invalid_argument("edge is consecutive in neither path");
                a.cls = SClass::RH;
                a.lo = std::min(ra, rb);
            }
            a.hi = a.lo + 1;
            w.s_classes[s] = a;
        } else {
            // special vertex si: neighborhood K - v_i, an end-anchored interval
            LabelSet miss;
            for (const auto& u : verts)
                if (u != v && !reduced.has_edge(s, u)) miss.insert(u);
            if (miss.size() != 1) throw std::invalid_argument("special vertex neighborhood broken");
            const Label& vi = *miss.begin();
            SAssignment a;
            if (pos_l[vi] == 1) { a.cls = SClass::LH; a.lo = 2; a.hi = len; }
            else if (pos_l[vi] == len) { a.cls = SClass::LH; a.lo = 1; a.hi = len - 1; }
            else if (pos_r[vi] == 1) { a.cls = SClass::RH; a.lo = 2; a.hi = len; }
            else if (pos_r[vi] == len) { a.cls = SClass::RH; a.lo = 1; a.hi = len - 1; }
            else throw std::invalid_argument("degree-3 vertex is not a path endpoint");
            w.s_classes[s] = a;
        }
    }
    return w;
}

Graph fixture_non_b1_split() {
    Graph g;
    std::vector<Label> K;
    for (int i = 0; i <= 10; ++i) K.push_back(std::to_string(i));
    for (std::size_t i = 0; i < K.size(); ++i)
        for (std::size_t j = i + 1; j < K.size(); ++j) g.add_edge(K[i], K[j]);

    const int sigma_r[11] = {0, 5, 10, 4, 9, 3, 8, 2, 7, 1, 6};
    LabelSet S;
    auto add_pair = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        Label s = "s:" + std::to_string(a) + "-" + std::to_string(b);
        g.add_edge(s, std::to_string(a));
        g.add_edge(s, std::to_string(b));
        S.insert(s);
    };
    for (int i = 0; i < 10; ++i) add_pair(i, i + 1);                  // sigma_L consecutive
    for (int i = 0; i < 10; ++i) add_pair(sigma_r[i], sigma_r[i + 1]);  // sigma_R consecutive
    add_pair(0, 2);
    add_pair(0, 3);
    add_pair(0, 4);

    g.set_annotation("K", LabelSet(K.begin(), K.end()));
    g.set_annotation("S", S);
    return g;
}

}  // namespace enpg
