#include "domino/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "domino/families.hpp"
#include "json.hpp"

namespace domino {

std::size_t Term::size() const {
    std::size_t n = 0;
    for (const auto& c : components) n += c.size();
    return n;
}

BigCount term_count(const Term& t, const CountOptions& opts) {
    BigCount n = 1;
    for (const auto& c : t.components) {
        n *= count_tilings(c, opts);
        if (n == 0) break;
    }
    return n;
}

Residue evaluate(const WeightedSubregions& w, const CountOptions& opts) {
    BigCount sum = 0;
    for (const auto& t : w.terms) sum += t.multiplicity * term_count(t, opts);
    return reduce(sum, w.modulus);
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::HypothesisFailed, what); }

using Tiling = std::vector<Domino>;

Tiling mirror(const Tiling& t, const Axis& axis) {
    Tiling out;
    out.reserve(t.size());
    for (const auto& d : t) out.push_back(canonical({axis.reflect(d.first), axis.reflect(d.second)}));
    return out;
}

// Cells covered by the given dominoes, or nullopt when two dominoes share a
// cell without being the same domino, or a cell lies outside r.
std::optional<CellSet> covered(const Region& r, std::initializer_list<const Tiling*> parts) {
    std::map<Cell, Domino> owner;
    for (const Tiling* t : parts)
        for (const auto& d : *t)
            for (Cell c : {d.first, d.second}) {
                if (!r.contains(c)) return std::nullopt;
                auto [it, fresh] = owner.emplace(c, d);
                if (!fresh && !(it->second == d)) return std::nullopt;
            }
    std::vector<Cell> cells;
    cells.reserve(owner.size());
    for (const auto& [c, d] : owner) cells.push_back(c);
    return CellSet(std::move(cells));
}

void add_term(WeightedSubregions& w, const Region& r, const std::optional<CellSet>& removed,
              std::string label, int multiplicity, int required_modulus) {
    if (!removed) {
        w.impossible.push_back(std::move(label));
        return;
    }
    Term t;
    t.label = std::move(label);
    t.components = remove_cells(r, *removed);
    t.multiplicity = multiplicity;
    t.required_modulus = required_modulus;
    t.removed = removed->size();
    w.terms.push_back(std::move(t));
}

bool open_k_allowed(const Region& r, const CornerDescriptor& c, int k) {
    if (k < 1 || k > std::min(c.s, c.t)) return false;
    if (k == 1) return c.p == 1;
    return is_complete_up_to(r, c, k);
}

void check_pair(const Region& r, const ReflectivePair& pair, int k) {
    if (!is_symmetric(r, pair.axis)) fail(to_string(pair.axis) + " does not fix the region");
    if (!(reflect_corner(pair.corner_a, pair.axis) == pair.corner_b))
        fail("corners are not images of each other");
    if (pair.corner_a == pair.corner_b) fail("corner is its own image");
    if (!certified_at(r, pair, k))
        fail("pair " + to_string(pair) + " is not complete and clear of the axis at k = " + std::to_string(k));
}

std::vector<Cell> leg(const CornerDescriptor& c, char which) {
    std::vector<Cell> out;
    if (which == 's')
        for (int q = 0; q < c.s; ++q) out.push_back(c.cell(0, c.p - 1 + q));
    else
        for (int q = 0; q < c.t; ++q) out.push_back(c.cell(c.p - 1 + q, 0));
    return out;
}

// The leg of corner a lying on a straight edge the axis maps onto itself.
std::optional<char> shared_leg(const ReflectivePair& pair) {
    if (pair.axis.kind != AxisKind::Vertical && pair.axis.kind != AxisKind::Horizontal) return std::nullopt;
    for (char which : {'s', 't'}) {
        const CellSet cells(leg(pair.corner_a, which));
        if (reflect_cells(cells, pair.axis) == cells) return which;
    }
    return std::nullopt;
}

// Strip with `along` cells on leg X and `other` cells on the remaining leg.
CellSet strip_on(const CornerDescriptor& c, char x, int along, int other) {
    return x == 's' ? strip_cells(c, along, other) : strip_cells(c, other, along);
}

std::optional<CellSet> inside(const Region& r, const CellSet& cells) {
    if (!r.cells().includes(cells)) return std::nullopt;
    return cells;
}

struct SharedEdge {
    char leg;
    int length;
    int other;
};

SharedEdge shared_edge(const ReflectivePair& pair) {
    const auto x = shared_leg(pair);
    if (!x) fail("no leg of " + to_string(pair.corner_a) + " lies on an edge fixed by the axis");
    const auto& a = pair.corner_a;
    return {*x, *x == 's' ? a.s : a.t, *x == 's' ? a.t : a.s};
}

} // namespace

std::optional<int> wall_depth(const CornerDescriptor& c) {
    if (c.walled_s && c.s <= c.t) return c.s;
    if (c.walled_t && c.t <= c.s) return c.t;
    return std::nullopt;
}

bool certified_at(const Region& r, const ReflectivePair& pair, int k) {
    const auto& a = pair.corner_a;
    if (!open_k_allowed(r, a, k)) return false;
    return layout_clear_of_axis(r, a, pair.axis, k);
}

std::vector<ReflectivePair> certified_pairs(const Region& r, int p_max) {
    std::vector<ReflectivePair> out;
    const auto axes = find_symmetry_axes(r);
    if (axes.empty()) return out;
    const auto corners = find_corners(r, p_max);
    for (const auto& a : corners)
        for (const auto& axis : axes) {
            const auto b = reflect_corner(a, axis);
            if (!(a < b)) continue;
            const int k = max_certifiable_k(r, axis, a);
            if (k >= 1) out.push_back({axis, a, b, k});
        }
    return out;
}

WeightedSubregions apply_2open(const Region& r, const CornerDescriptor& c, int k) {
    if (!open_k_allowed(r, c, k))
        fail("corner " + to_string(c) + " is not complete up to k = " + std::to_string(k));
    WeightedSubregions w;
    w.modulus = 2;
    const Tiling s = tiled_strip(c, k + 1, k);
    const Tiling t = tiled_strip(c, k, k + 1);
    add_term(w, r, covered(r, {&s}), "S", 1, 2);
    add_term(w, r, covered(r, {&t}), "T", 1, 2);
    return w;
}

WeightedSubregions apply_2wall(const Region& r, const CornerDescriptor& c) {
    const auto k = wall_depth(c);
    if (!k) fail("corner " + to_string(c) + " is not walled along its shorter leg");
    return apply_2open(r, c, *k);
}

WeightedSubregions apply_4open(const Region& r, const ReflectivePair& pair, int k) {
    check_pair(r, pair, k);
    const auto& a = pair.corner_a;
    const Tiling hs = tiled_strip(a, k + 1, k);
    const Tiling vs = tiled_strip(a, k, k + 1);
    const Tiling hm = mirror(hs, pair.axis);
    const Tiling vm = mirror(vs, pair.axis);
    WeightedSubregions w;
    w.modulus = 4;
    add_term(w, r, covered(r, {&hs, &hm}), "HH", 1, 4);
    add_term(w, r, covered(r, {&vs, &vm}), "VV", 1, 4);
    add_term(w, r, covered(r, {&hs, &vm}), "HV", 2, 2);
    return w;
}

WeightedSubregions apply_4wall(const Region& r, const ReflectivePair& pair) {
    const auto k = wall_depth(pair.corner_a);
    if (!k) fail("corner " + to_string(pair.corner_a) + " is not walled along its shorter leg");
    return apply_4open(r, pair, *k);
}

Residue apply_double_wall(const Region& r, const ReflectivePair& pair) {
    const auto& a = pair.corner_a;
    if (a.s != a.t || !a.walled_s || !a.walled_t)
        fail("corner " + to_string(a) + " does not have equal legs walled on both sides");
    const auto w = apply_4open(r, pair, a.s);
    if (!w.terms.empty()) fail("double-wall configuration still admits strips");
    return Residue(0, 4);
}

WeightedSubregions apply_k2kk(const Region& r, const ReflectivePair& pair) {
    const auto e = shared_edge(pair);
    if (e.length % 2 != 0) fail("shared edge has odd length " + std::to_string(e.length));
    const int sigma = e.length / 2;
    if (sigma < 2) fail("shared edge shorter than 4");
    if (e.other < sigma) fail("remaining leg shorter than half the shared edge");
    check_pair(r, pair, sigma);
    const auto& a = pair.corner_a;
    WeightedSubregions w;
    w.modulus = 4;
    for (auto [label, other] : {std::pair{"short", sigma}, std::pair{"long", sigma + 1}}) {
        const CellSet strip = strip_on(a, e.leg, sigma, other);
        add_term(w, r, inside(r, strip.united(reflect_cells(strip, pair.axis))), label, 1, 4);
    }
    return w;
}

WeightedSubregions apply_k2k1k(const Region& r, const ReflectivePair& pair) {
    const auto e = shared_edge(pair);
    if (e.length % 2 != 1) fail("shared edge has even length " + std::to_string(e.length));
    const int sigma = e.length / 2;
    const auto& a = pair.corner_a;
    if (sigma < 1 || (a.p > 1 && sigma < 2)) fail("shared edge too short");
    if (e.other < sigma) fail("remaining leg shorter than half the shared edge");
    check_pair(r, pair, sigma);

    const auto cells = leg(a, e.leg);
    const auto mid = std::find_if(cells.begin(), cells.end(), [&](Cell c) { return pair.axis.cuts(c); });
    if (mid == cells.end()) fail("axis does not cross the shared edge");
    const int q = int(mid - cells.begin());
    const Cell inward = e.leg == 's' ? a.cell(1, a.p - 1 + q) : a.cell(a.p - 1 + q, 1);

    const CellSet along = strip_on(a, e.leg, sigma, sigma + 1);
    const CellSet across = strip_on(a, e.leg, sigma + 1, sigma);
    WeightedSubregions w;
    w.modulus = 4;
    add_term(w, r,
             inside(r, along.united(reflect_cells(along, pair.axis)).united(CellSet{*mid, inward})),
             "cap", 1, 4);
    const CellSet across_m = reflect_cells(across, pair.axis);
    add_term(w, r, along.intersects(across_m) ? std::nullopt : inside(r, along.united(across_m)), "cross",
             2, 2);
    return w;
}

// ---------------------------------------------------------------------------

int Trace::count(const std::string& rule) const {
    return int(std::count_if(steps.begin(), steps.end(), [&](const TraceStep& s) { return s.rule == rule; }));
}

std::string Trace::to_json(int indent) const {
    nlohmann::ordered_json steps_json = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < steps.size(); ++n) {
        const auto& s = steps[n];
        nlohmann::ordered_json j;
        j["index"] = n;
        j["rule"] = s.rule;
        j["modulus"] = s.modulus;
        j["cells"] = s.cells;
        j["region"] = s.region;
        if (!s.axis.empty()) j["axis"] = s.axis;
        if (!s.corner.empty()) j["corner"] = s.corner;
        if (s.k) j["k"] = s.k;
        j["value"] = s.value;
        auto terms = nlohmann::ordered_json::array();
        for (const auto& t : s.terms)
            terms.push_back({{"label", t.label},
                             {"multiplicity", t.multiplicity},
                             {"modulus", t.modulus},
                             {"value", t.value},
                             {"children", t.children}});
        j["terms"] = terms;
        steps_json.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["steps"] = std::move(steps_json);
    return out.dump(indent);
}

namespace {

class Engine {
public:
    Engine(const ReduceOptions& opts, Trace* trace) : opts_(opts), trace_(trace) {}

    // Returns (value, step index or -1 when not tracing).
    std::pair<int, int> mod4(const Region& r) {
        if (auto it = memo4_.find(r); it != memo4_.end()) return it->second;
        const int at = open_step(r, 4);
        const int v = solve4(r, at);
        return memo4_[r] = close_step(at, v);
    }

    std::pair<int, int> mod2(const Region& r) {
        if (auto it = memo2_.find(r); it != memo2_.end()) return it->second;
        const int at = open_step(r, 2);
        const int v = solve2(r, at);
        return memo2_[r] = close_step(at, v);
    }

private:
    int open_step(const Region& r, int modulus) {
        if (!trace_) return -1;
        TraceStep s;
        s.modulus = modulus;
        s.cells = r.size();
        s.region = content_hash(r);
        trace_->steps.push_back(std::move(s));
        return int(trace_->steps.size()) - 1;
    }

    std::pair<int, int> close_step(int at, int value) {
        if (at >= 0) trace_->steps[std::size_t(at)].value = value;
        return {value, at};
    }

    void label(int at, const std::string& rule, const ReflectivePair* pair, const CornerDescriptor* c, int k) {
        if (at < 0) return;
        auto& s = trace_->steps[std::size_t(at)];
        s.rule = rule;
        if (pair) {
            s.axis = to_string(pair->axis);
            s.corner = to_string(pair->corner_a);
        } else if (c) {
            s.corner = to_string(*c);
        }
        s.k = k;
    }

    int combine(int at, const WeightedSubregions& w) {
        int total = 0;
        for (const auto& t : w.terms) {
            TraceTerm tt;
            tt.label = t.label;
            tt.multiplicity = t.multiplicity;
            const bool as_mod2 = w.modulus == 2 || (t.required_modulus == 2 && !opts_.mixed_mod4);
            tt.modulus = as_mod2 ? 2 : 4;
            int v = 1;
            for (const auto& comp : t.components) {
                auto [cv, idx] = as_mod2 ? mod2(comp) : mod4(comp);
                v = v * cv % tt.modulus;
                tt.children.push_back(idx);
            }
            tt.value = v;
            total += t.multiplicity * v;
            if (at >= 0) trace_->steps[std::size_t(at)].terms.push_back(std::move(tt));
        }
        return total % w.modulus;
    }

    int solve4(const Region& r, int at) {
        if (r.size() % 2 != 0) {
            label(at, "odd-area", nullptr, nullptr, 0);
            return 0;
        }
        const auto pairs = certified_pairs(r, opts_.p_max);

        for (const auto& pair : pairs) {
            const auto& a = pair.corner_a;
            if (a.s != a.t || !a.walled_s || !a.walled_t || pair.max_certified_k < a.s) continue;
            try {
                apply_double_wall(r, pair);
                label(at, "double-wall", &pair, nullptr, a.s);
                return 0;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::HypothesisFailed) throw;
            }
        }

        for (const auto& pair : pairs) {
            const auto k = wall_depth(pair.corner_a);
            if (!k || !certified_at(r, pair, *k)) continue;
            const auto w = apply_4wall(r, pair);
            const std::size_t per_corner = std::size_t(2 * *k + 2 * pair.corner_a.p - 2);
            // Strips that meet their mirror images are left to the corollaries.
            const bool clear = !w.terms.empty() &&
                               std::all_of(w.terms.begin(), w.terms.end(),
                                           [&](const Term& t) { return t.removed == 2 * per_corner; });
            if (!clear) continue;
            label(at, "4-wall", &pair, nullptr, *k);
            return combine(at, w);
        }

        for (const auto& [rule, apply] :
             {std::pair{"k2kk", &apply_k2kk}, std::pair{"k2k1k", &apply_k2k1k}}) {
            for (const auto& pair : pairs) {
                try {
                    const auto w = apply(r, pair);
                    label(at, rule, &pair, nullptr, 0);
                    if (at >= 0) trace_->steps[std::size_t(at)].k = shared_sigma(pair);
                    return combine(at, w);
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::HypothesisFailed) throw;
                }
            }
        }

        const ReflectivePair* best = nullptr;
        for (const auto& pair : pairs)
            if (!best || pair.max_certified_k > best->max_certified_k) best = &pair;
        if (best) {
            const auto w = apply_4open(r, *best, best->max_certified_k);
            label(at, "4-open", best, nullptr, best->max_certified_k);
            return combine(at, w);
        }

        label(at, "dp", nullptr, nullptr, 0);
        return residue(r, 4, opts_.count).value;
    }

    static int shared_sigma(const ReflectivePair& pair) {
        const auto x = shared_leg(pair);
        return x ? (*x == 's' ? pair.corner_a.s : pair.corner_a.t) / 2 : 0;
    }

    int solve2(const Region& r, int at) {
        if (r.size() % 2 != 0) {
            label(at, "odd-area", nullptr, nullptr, 0);
            return 0;
        }
        if (opts_.parity_recursion) {
            const auto corners = find_corners(r, opts_.p_max);
            for (const auto& c : corners) {
                const auto k = wall_depth(c);
                if (!k || !open_k_allowed(r, c, *k)) continue;
                label(at, "2-wall", nullptr, &c, *k);
                return combine(at, apply_2wall(r, c));
            }
            const CornerDescriptor* best = nullptr;
            int best_k = 0;
            for (const auto& c : corners)
                for (int k = std::min(c.s, c.t); k > best_k; --k)
                    if (open_k_allowed(r, c, k)) {
                        best = &c;
                        best_k = k;
                        break;
                    }
            if (best) {
                label(at, "2-open", nullptr, best, best_k);
                return combine(at, apply_2open(r, *best, best_k));
            }
        }
        label(at, "dp", nullptr, nullptr, 0);
        return residue(r, 2, opts_.count).value;
    }

    const ReduceOptions& opts_;
    Trace* trace_;
    std::unordered_map<Region, std::pair<int, int>, RegionHash> memo4_, memo2_;
};

} // namespace

Residue residue_mod4(const Region& r, const ReduceOptions& opts, Trace* trace) {
    if (trace) trace->steps.clear();
    Engine engine(opts, trace);
    return Residue(engine.mod4(r).first, 4);
}

Residue residue_mod2(const Region& r, const ReduceOptions& opts, Trace* trace) {
    if (trace) trace->steps.clear();
    Engine engine(opts, trace);
    return Residue(engine.mod2(r).first, 2);
}

// ---------------------------------------------------------------------------

namespace {

void check_kp(int k, int p) {
    if (k < 1 || p < 1) throw std::invalid_argument("k and p must be positive");
}

} // namespace

Region t_variant_region(char variant, int k, int p) {
    check_kp(k, p);
    switch (variant) {
    case 'a': return make_T(k, 2 * k - 1, p);
    case 'b': return make_T(k, 2 * k, p);
    case 'c': return make_T(k, 2 * k + 1, p);
    case 'd': return make_T(k, 2 * k + 2, p);
    }
    throw std::invalid_argument(std::string("unknown T variant '") + variant + "'");
}

Region d_variant_region(char variant, int k, int p) {
    check_kp(k, p);
    switch (variant) {
    case 'a': return make_D(k, k, p);
    case 'b': return make_D(k, k + 1, p);
    case 'c': return make_D(k, k + 2, p);
    }
    throw std::invalid_argument(std::string("unknown D variant '") + variant + "'");
}

Residue t_residue(char variant, int k, int p) {
    check_kp(k, p);
    switch (variant) {
    case 'a':
        if (p == 1 && k % 4 == 0) return {1, 4};
        if (p == 1 && k % 4 == 2) return {3, 4};
        return {0, 4};
    case 'b': return {1, 4};
    case 'c': return {0, 4};
    case 'd': return {1, 4};
    }
    throw std::invalid_argument(std::string("unknown T variant '") + variant + "'");
}

Residue d_residue(char variant, int k, int p) {
    check_kp(k, p);
    switch (variant) {
    case 'a': return {k == 2 && p == 1 ? 2 : 0, 4};
    case 'b': {
        const int block = p % 2 ? (k + 2) / 4 : k / 4;
        return {block % 2 == 0 ? 1 : 3, 4};
    }
    case 'c':
        if (k % 2 != 0) return {0, 4};
        if (p == 2) return {2, 4};
        if (p == 1) return {((k + 3) / 4) % 2 == 1 ? 1 : 3, 4};
        return {0, 4};
    }
    throw std::invalid_argument(std::string("unknown D variant '") + variant + "'");
}

} // namespace domino
