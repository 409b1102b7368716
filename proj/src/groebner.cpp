#include "framecert/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>

#include "framecert/gauss_int.hpp"

namespace framecert {

namespace {

constexpr size_t kNone = static_cast<size_t>(-1);

struct OrderGreater {
    const TermOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using WorkPoly = std::map<Monomial, GaussRational, OrderGreater>;

struct TranscriptOp {
    enum Kind : uint8_t { Scale, Axpy } kind;
    GaussRational scale;  // Scale: v <- scale * v
    Term t;               // Axpy: v <- v - t * value(node)
    size_t node = kNone;
};

struct TranscriptNode {
    enum Kind : uint8_t { Input, SPair, Rework } kind = Input;
    size_t input_index = kNone;  // Input
    size_t a = kNone, b = kNone;
    Term ta, tb;  // SPair: v0 = ta * value(a) - tb * value(b); Rework: v0 = value(a)
    std::vector<TranscriptOp> ops;
    GaussRational post_divide = GaussRational(1L);  // stored = replayed / post_divide
};

struct Element {
    std::vector<Term> terms;  // primitive Z[i] coefficients, sorted desc by active order
    Monomial lead_mono;
    GaussRational lead_coeff;
    uint32_t sugar = 0;
    size_t node = kNone;
    bool redundant = false;
};

struct Pair {
    uint32_t sugar;
    Monomial lcm;
    size_t i, j;  // i < j
};

class Engine {
public:
    Engine(std::span<const Polynomial> gens, const TermOrder& order, const GroebnerOptions& opts)
        : order_(order), opts_(opts), input_(gens.begin(), gens.end()) {
        for (const Polynomial& g : gens) {
            if (!g.table()) throw TableMismatchError("generator without a variable table");
            if (!table_) table_ = g.table();
            if (!same_table(table_, g.table()))
                throw TableMismatchError("generators use different variable tables");
        }
        if (table_ && order_.kind() == TermOrder::Kind::Block &&
            order_.elim_mask().size() != table_->size())
            throw TableMismatchError("block order mask does not match the variable table");
    }

    void run() {
        for (size_t k = 0; k < input_.size(); ++k) {
            if (input_[k].is_zero()) continue;
            TranscriptNode node;
            node.kind = TranscriptNode::Input;
            node.input_index = k;
            uint32_t sugar = static_cast<uint32_t>(std::max(0, input_[k].total_degree()));
            add_element(to_work(input_[k]), sugar, std::move(node));
        }
        const bool debug = std::getenv("FRAMECERT_GB_DEBUG") != nullptr;
        size_t processed = 0;
        while (!pairs_.empty()) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (debug && ++processed % 50 == 0)
                std::cerr << "[gb] pairs done " << processed << " queued " << pairs_.size()
                          << " basis " << live_.size() << " sugar " << p.sugar << " terms "
                          << live_terms_ << "\n";
            process_pair(p);
        }
        finalize();
    }

    // --- results ---
    std::vector<size_t> final_elements;  // indices, sorted by leading monomial
    std::vector<GaussRational> final_lc;

    Polynomial monic_polynomial(size_t idx) const {
        const Element& e = elements_[idx];
        std::vector<Term> ts = e.terms;
        GaussRational inv = GaussRational(1L) / e.lead_coeff;
        for (Term& t : ts) t.coeff *= inv;
        return Polynomial::from_terms(table_, std::move(ts));
    }

    Polynomial raw_polynomial(size_t idx) const {
        return Polynomial::from_terms(table_, elements_[idx].terms);
    }

    /// Materializes value(node) = sum rep_k * input_k, memoized.
    const std::vector<Polynomial>& representation(size_t node_id) {
        auto it = rep_cache_.find(node_id);
        if (it != rep_cache_.end()) return it->second;
        const TranscriptNode& node = nodes_[node_id];
        std::vector<Polynomial> rep(input_.size(), Polynomial::zero(table_));
        switch (node.kind) {
            case TranscriptNode::Input:
                rep[node.input_index] = Polynomial::constant(table_, GaussRational(1L));
                break;
            case TranscriptNode::SPair: {
                const auto& ra = representation(elements_[node.a].node);
                const auto& rb = representation(elements_[node.b].node);
                for (size_t k = 0; k < rep.size(); ++k)
                    rep[k] = ra[k].times_term(node.ta) - rb[k].times_term(node.tb);
                break;
            }
            case TranscriptNode::Rework:
                rep = representation(elements_[node.a].node);
                break;
        }
        for (const TranscriptOp& op : node.ops) {
            if (op.kind == TranscriptOp::Scale) {
                for (Polynomial& r : rep) r = r.scaled(op.scale);
            } else {
                const auto& rg = representation(elements_[op.node].node);
                for (size_t k = 0; k < rep.size(); ++k) rep[k] -= rg[k].times_term(op.t);
            }
        }
        GaussRational inv = GaussRational(1L) / node.post_divide;
        for (Polynomial& r : rep) r = r.scaled(inv);
        return rep_cache_.emplace(node_id, std::move(rep)).first->second;
    }

    const VariableTablePtr& table() const { return table_; }
    const TermOrder& order() const { return order_; }

private:
    WorkPoly to_work(const Polynomial& p) const {
        WorkPoly w{OrderGreater{&order_}};
        for (const Term& t : p.terms()) w.emplace(t.mono, t.coeff);
        return w;
    }

    void check_limits(size_t extra) const {
        if (live_terms_ + extra > opts_.max_basis_terms)
            throw ResourceLimitError(
                "term ceiling exceeded during basis computation (elements: " +
                std::to_string(elements_.size()) + ", terms: " + std::to_string(live_terms_) +
                ")");
    }

    // Rational content of the working coefficients (they stay Gaussian
    // integers between strips, but the code tolerates rationals).
    static GaussRational work_content(const WorkPoly& w) {
        mpz_class den_lcm = 1;
        for (const auto& [m, c] : w) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re().denominator().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.im().denominator().get_mpz_t());
        }
        GaussInt g{0, 0};
        for (const auto& [m, c] : w) {
            GaussInt ci{c.re().numerator() * (den_lcm / c.re().denominator()),
                        c.im().numerator() * (den_lcm / c.im().denominator())};
            g = gauss_gcd(g, ci);
            if (g.norm() == 1 && sgn(g.im) == 0) break;
        }
        return GaussRational(BigRational(g.re, den_lcm), BigRational(g.im, den_lcm));
    }

    // Full fraction-free reduction of w modulo the live basis; appends the
    // replayable steps to `node`. Returns the primitive remainder terms.
    std::vector<Term> reduce_full(WorkPoly w, uint32_t& sugar, TranscriptNode& node) {
        struct RemTerm {
            Term t;
            size_t epoch;
        };
        std::vector<RemTerm> rem;
        std::vector<GaussRational> scalings;
        size_t scalings_since_strip = 0;
        size_t steps = 0;
        const bool debug = std::getenv("FRAMECERT_GB_DEBUG") != nullptr;
        while (!w.empty()) {
            if (debug && ++steps % 2000 == 0) {
                size_t bits = 0;
                for (const auto& [mono, coeff] : w)
                    bits = std::max(bits, mpz_sizeinbase(coeff.re().numerator().get_mpz_t(), 2));
                std::cerr << "[red] steps " << steps << " |w| " << w.size() << " rem "
                          << rem.size() << " maxbits " << bits << "\n";
            }
            // The fraction-free scalings compound; periodic content strips
            // keep the integer coefficients from growing quadratically.
            if (scalings_since_strip >= 16) {
                scalings_since_strip = 0;
                GaussRational content = work_content(w);
                if (!content.is_one() && !content.is_zero()) {
                    GaussRational inv = GaussRational(1L) / content;
                    for (auto& [mono, coeff] : w) coeff *= inv;
                    scalings.push_back(inv);
                    node.ops.push_back({TranscriptOp::Scale, inv, {}, kNone});
                }
            }
            check_limits(w.size());
            auto lead_it = w.begin();
            const Monomial& m = lead_it->first;
            if (m.total_degree() > opts_.max_degree)
                throw ResourceLimitError("degree ceiling exceeded during reduction");
            size_t g = find_divisor(m);
            if (g == kNone) {
                rem.push_back({{m, lead_it->second}, scalings.size()});
                w.erase(lead_it);
                continue;
            }
            const Element& ge = elements_[g];
            GaussRational c = lead_it->second;  // lead coefficient before scaling
            const GaussRational& lam = ge.lead_coeff;
            if (!lam.is_one()) {
                for (auto& [mono, coeff] : w) coeff *= lam;
                scalings.push_back(lam);
                node.ops.push_back({TranscriptOp::Scale, lam, {}, kNone});
                ++scalings_since_strip;
            }
            // lam*w has lead coefficient lam*c; subtracting c*(m/LM(g))*g
            // cancels it exactly and keeps everything in Z[i].
            Monomial shift = m.divide_exact(ge.lead_mono);
            Term step{shift, c};
            for (const Term& gt : ge.terms) {
                Monomial key = gt.mono * shift;
                GaussRational delta = gt.coeff * c;
                auto [it, fresh] = w.try_emplace(key, -delta);
                if (!fresh) {
                    it->second -= delta;
                    if (it->second.is_zero()) w.erase(it);
                }
            }
            node.ops.push_back({TranscriptOp::Axpy, {}, step, g});
            sugar = std::max(sugar, ge.sugar + shift.total_degree());
        }
        // Suffix scale products re-align the popped terms with the replay.
        std::vector<Term> out;
        out.reserve(rem.size());
        std::vector<GaussRational> suffix(scalings.size() + 1, GaussRational(1L));
        for (size_t k = scalings.size(); k-- > 0;) suffix[k] = suffix[k + 1] * scalings[k];
        for (RemTerm& rt : rem) {
            rt.t.coeff *= suffix[rt.epoch];
            out.push_back(std::move(rt.t));
        }
        return out;
    }

    size_t find_divisor(const Monomial& m) const {
        for (size_t g : live_)
            if (elements_[g].lead_mono.divides(m)) return g;
        return kNone;
    }

    void add_element(WorkPoly w, uint32_t sugar, TranscriptNode node) {
        std::vector<Term> terms = reduce_full(std::move(w), sugar, node);
        if (terms.empty()) return;  // reduced to zero
        commit_element(std::move(terms), sugar, std::move(node));
    }

    void commit_element(std::vector<Term> terms, uint32_t sugar, TranscriptNode node) {
        GaussRational content;
        Polynomial prim = Polynomial::from_terms(table_, std::move(terms));
        prim = prim.gaussian_primitive_part(&content);
        node.post_divide = content;

        Element e;
        e.terms = prim.terms();
        std::sort(e.terms.begin(), e.terms.end(),
                  [&](const Term& x, const Term& y) { return order_.greater(x.mono, y.mono); });
        e.lead_mono = e.terms.front().mono;
        e.lead_coeff = e.terms.front().coeff;
        e.sugar = sugar;
        nodes_.push_back(std::move(node));
        e.node = nodes_.size() - 1;
        elements_.push_back(std::move(e));
        live_terms_ += elements_.back().terms.size();
        size_t h = elements_.size() - 1;
        update_pairs(h);
        // A nonzero constant settles the whole computation: the reduced
        // basis is {1}, so the remaining pairs are moot.
        if (elements_[h].lead_mono.is_unit()) pairs_.clear();
    }

    // Gebauer-Moeller update for the new element h (M, F, and B criteria).
    void update_pairs(size_t h) {
        const Monomial& lm_h = elements_[h].lead_mono;
        struct Cand {
            size_t g;
            Monomial lcm;
            bool alive = true;
        };
        std::vector<Cand> cands;
        cands.reserve(live_.size());
        for (size_t g : live_) cands.push_back({g, lcm(lm_h, elements_[g].lead_mono)});

        // M: drop (h,g) when some lcm(h,g') strictly divides lcm(h,g).
        for (Cand& x : cands)
            for (const Cand& y : cands) {
                if (&x == &y) continue;
                if (y.lcm != x.lcm && y.lcm.divides(x.lcm)) {
                    x.alive = false;
                    break;
                }
            }
        // F: per equal-lcm group, drop everything if any member has coprime
        // leading monomials; otherwise keep only the first member.
        for (size_t x = 0; x < cands.size(); ++x) {
            if (!cands[x].alive) continue;
            bool group_coprime = coprime(lm_h, elements_[cands[x].g].lead_mono);
            for (size_t y = 0; y < cands.size(); ++y) {
                if (y == x || cands[y].lcm != cands[x].lcm) continue;
                if (!cands[y].alive) continue;
                if (coprime(lm_h, elements_[cands[y].g].lead_mono)) group_coprime = true;
                if (y > x) cands[y].alive = false;
            }
            if (group_coprime) cands[x].alive = false;
        }

        // B: prune old pairs strictly superseded by h.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const Pair& p = *it;
            if (lm_h.divides(p.lcm) && lcm(lm_h, elements_[p.i].lead_mono) != p.lcm &&
                lcm(lm_h, elements_[p.j].lead_mono) != p.lcm)
                it = pairs_.erase(it);
            else
                ++it;
        }

        for (Cand& c : cands) {
            if (!c.alive) continue;
            uint32_t s = std::max(
                elements_[h].sugar + c.lcm.total_degree() - lm_h.total_degree(),
                elements_[c.g].sugar + c.lcm.total_degree() - elements_[c.g].lead_mono.total_degree());
            size_t i = std::min(h, c.g), j = std::max(h, c.g);
            pairs_.insert({s, std::move(c.lcm), i, j});
        }

        // Retire live elements whose leading monomial h's strictly divides.
        for (auto it = live_.begin(); it != live_.end();) {
            if (*it != h && lm_h.divides(elements_[*it].lead_mono) &&
                elements_[*it].lead_mono != lm_h) {
                elements_[*it].redundant = true;
                live_terms_ -= elements_[*it].terms.size();
                it = live_.erase(it);
            } else {
                ++it;
            }
        }
        live_.push_back(h);
    }

    void process_pair(const Pair& p) {
        const Element& f = elements_[p.i];
        const Element& g = elements_[p.j];
        // S(f, g) = (lcm/LM_f) * lc_g * f - (lcm/LM_g) * lc_f * g.
        Term ta{p.lcm.divide_exact(f.lead_mono), g.lead_coeff};
        Term tb{p.lcm.divide_exact(g.lead_mono), f.lead_coeff};
        WorkPoly w{OrderGreater{&order_}};
        for (const Term& t : f.terms) {
            Monomial m = t.mono * ta.mono;
            auto [it, fresh] = w.try_emplace(std::move(m), t.coeff * ta.coeff);
            if (!fresh) it->second += t.coeff * ta.coeff;
        }
        for (const Term& t : g.terms) {
            Monomial m = t.mono * tb.mono;
            GaussRational delta = t.coeff * tb.coeff;
            auto [it, fresh] = w.try_emplace(std::move(m), GaussRational(0L) - delta);
            if (!fresh) {
                it->second -= delta;
                if (it->second.is_zero()) w.erase(it);
            } else if (it->second.is_zero()) {
                w.erase(it);
            }
        }
        TranscriptNode node;
        node.kind = TranscriptNode::SPair;
        node.a = p.i;
        node.b = p.j;
        node.ta = ta;
        node.tb = tb;
        add_element(std::move(w), p.sugar, std::move(node));
    }

    void finalize() {
        // Minimal generating set among live leading monomials.
        std::vector<size_t> kept(live_.begin(), live_.end());
        std::sort(kept.begin(), kept.end(), [&](size_t x, size_t y) {
            int c = order_.compare(elements_[x].lead_mono, elements_[y].lead_mono);
            if (c != 0) return c < 0;
            return x < y;
        });
        std::vector<size_t> minimal;
        for (size_t idx : kept) {
            bool divisible = false;
            for (size_t m : minimal)
                if (elements_[m].lead_mono.divides(elements_[idx].lead_mono)) {
                    divisible = true;
                    break;
                }
            if (!divisible) minimal.push_back(idx);
        }
        // Tail reduction of each kept element modulo the others (leading
        // monomials are pairwise indivisible, so only tails change).
        live_.assign(minimal.begin(), minimal.end());
        for (size_t pos = 0; pos < minimal.size(); ++pos) {
            size_t idx = minimal[pos];
            live_.erase(std::find(live_.begin(), live_.end(), idx));
            TranscriptNode node;
            node.kind = TranscriptNode::Rework;
            node.a = elements_[idx].node;
            WorkPoly w{OrderGreater{&order_}};
            for (const Term& t : elements_[idx].terms) w.emplace(t.mono, t.coeff);
            uint32_t sugar = elements_[idx].sugar;
            std::vector<Term> terms = reduce_full(std::move(w), sugar, node);

            GaussRational content;
            Polynomial prim =
                Polynomial::from_terms(table_, std::move(terms)).gaussian_primitive_part(&content);
            node.post_divide = content;
            nodes_.push_back(std::move(node));

            Element e;
            e.terms = prim.terms();
            std::sort(e.terms.begin(), e.terms.end(), [&](const Term& x, const Term& y) {
                return order_.greater(x.mono, y.mono);
            });
            e.lead_mono = e.terms.front().mono;
            e.lead_coeff = e.terms.front().coeff;
            e.sugar = sugar;
            e.node = nodes_.size() - 1;
            elements_.push_back(std::move(e));
            size_t fresh = elements_.size() - 1;
            minimal[pos] = fresh;
            live_.insert(live_.begin() + pos, fresh);
        }
        final_elements = minimal;
        for (size_t idx : final_elements) final_lc.push_back(elements_[idx].lead_coeff);
    }

    // Node id of an element (for representation queries).
public:
    size_t element_node(size_t idx) const { return elements_[idx].node; }

private:
    TermOrder order_;
    GroebnerOptions opts_;
    std::vector<Polynomial> input_;
    VariableTablePtr table_;

    std::vector<Element> elements_;
    std::vector<size_t> live_;  // non-redundant element indices, ascending insert order
    size_t live_terms_ = 0;

    struct PairLess {
        const Engine* e;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            int c = e->order_.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };
    std::set<Pair, PairLess> pairs_{PairLess{this}};

    std::vector<TranscriptNode> nodes_;
    std::map<size_t, std::vector<Polynomial>> rep_cache_;
};

}  // namespace

bool cofactors_expand_to_target(const CofactorRepresentation& rep,
                                std::span<const Polynomial> generators) {
    if (rep.multipliers.size() != generators.size()) return false;
    if (generators.empty()) return rep.target.is_zero();
    Polynomial sum = Polynomial::zero(rep.target.table());
    for (size_t k = 0; k < generators.size(); ++k) {
        if (rep.multipliers[k].is_zero()) continue;
        sum += rep.multipliers[k] * generators[k];
    }
    return sum == rep.target;
}

std::pair<Polynomial, std::optional<CofactorRepresentation>> normal_form(
    const Polynomial& p, std::span<const Polynomial> basis, const TermOrder& order, bool track) {
    for (const Polynomial& g : basis)
        if (!same_table(p.table(), g.table()))
            throw TableMismatchError("normal_form operands use different variable tables");

    OrderGreater greater{&order};
    std::map<Monomial, GaussRational, OrderGreater> work(greater);
    for (const Term& t : p.terms()) work.emplace(t.mono, t.coeff);

    std::vector<Term> rem;
    std::vector<Polynomial> cof;
    if (track) cof.assign(basis.size(), Polynomial::zero(p.table()));

    while (!work.empty()) {
        auto lead = work.begin();
        size_t chosen = basis.size();
        for (size_t g = 0; g < basis.size(); ++g) {
            if (basis[g].is_zero()) continue;
            if (basis[g].leading_term(order).mono.divides(lead->first)) {
                chosen = g;
                break;
            }
        }
        if (chosen == basis.size()) {
            rem.push_back({lead->first, lead->second});
            work.erase(lead);
            continue;
        }
        const Polynomial& g = basis[chosen];
        const Term& glt = g.leading_term(order);
        Term step{lead->first.divide_exact(glt.mono), lead->second / glt.coeff};
        for (const Term& gt : g.terms()) {
            Monomial key = gt.mono * step.mono;
            GaussRational delta = gt.coeff * step.coeff;
            auto [it, fresh] = work.try_emplace(key, GaussRational(0L) - delta);
            if (!fresh) {
                it->second -= delta;
                if (it->second.is_zero()) work.erase(it);
            } else if (it->second.is_zero()) {
                work.erase(it);
            }
        }
        if (track)
            cof[chosen] += Polynomial::from_terms(p.table(), {step});
    }

    Polynomial remainder = Polynomial::from_terms(p.table(), std::move(rem));
    if (!track) return {remainder, std::nullopt};
    return {remainder, CofactorRepresentation{p - remainder, std::move(cof)}};
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                         const GroebnerOptions& opts) {
    Engine engine(gens, order, opts);
    engine.run();

    GroebnerBasis out{{}, order, true, {}};
    for (size_t idx : engine.final_elements) out.generators.push_back(engine.monic_polynomial(idx));
    if (opts.track) {
        for (size_t k = 0; k < engine.final_elements.size(); ++k) {
            size_t idx = engine.final_elements[k];
            const auto& rep = engine.representation(engine.element_node(idx));
            GaussRational inv = GaussRational(1L) / engine.final_lc[k];
            CofactorRepresentation cr;
            cr.target = out.generators[k];
            for (const Polynomial& r : rep) cr.multipliers.push_back(r.scaled(inv));
            out.cofactors.push_back(std::move(cr));
        }
    }
    return out;
}

EliminationResult elimination_ideal(std::span<const Polynomial> gens,
                                    const std::vector<uint8_t>& keep_mask,
                                    const GroebnerOptions& opts) {
    std::vector<uint8_t> elim_mask(keep_mask.size());
    for (size_t v = 0; v < keep_mask.size(); ++v) elim_mask[v] = keep_mask[v] ? 0 : 1;
    TermOrder order = TermOrder::block(elim_mask);

    GroebnerBasis basis = buchberger(gens, order, opts);
    EliminationResult result{{}, {}, std::move(basis)};
    for (size_t k = 0; k < result.basis.generators.size(); ++k) {
        const Polynomial& g = result.basis.generators[k];
        bool free_of_elim = true;
        for (size_t v = 0; v < elim_mask.size() && free_of_elim; ++v)
            if (elim_mask[v] && g.uses_variable(v)) free_of_elim = false;
        if (!free_of_elim) continue;
        result.generators.push_back(g);
        if (opts.track) result.cofactors.push_back(result.basis.cofactors[k]);
    }
    return result;
}

std::pair<bool, std::optional<CofactorRepresentation>> ideal_contains_one(
    std::span<const Polynomial> gens, const GroebnerOptions& opts) {
    GroebnerBasis basis = buchberger(gens, TermOrder::grevlex(), opts);
    bool one = basis.generators.size() == 1 && basis.generators[0].is_constant() &&
               !basis.generators[0].is_zero();
    if (!one) return {false, std::nullopt};
    if (!opts.track) return {true, std::nullopt};
    return {true, basis.cofactors[0]};
}

bool spolynomials_reduce_to_zero(const GroebnerBasis& basis) {
    const auto& gens = basis.generators;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            const Term& ti = gens[i].leading_term(basis.order);
            const Term& tj = gens[j].leading_term(basis.order);
            Monomial l = lcm(ti.mono, tj.mono);
            Polynomial s = gens[i].times_term({l.divide_exact(ti.mono), tj.coeff}) -
                           gens[j].times_term({l.divide_exact(tj.mono), ti.coeff});
            if (!normal_form(s, gens, basis.order, false).first.is_zero()) return false;
        }
    return true;
}

}  // namespace framecert
