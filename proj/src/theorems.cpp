#include "aprime/theorems.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <sstream>

#include "aprime/error.hpp"

namespace aprime {

PredicateSet PredicateSet::standard() {
    return PredicateSet{
        [](const IdealHandle& p, const IdealUniverse& u) { return is_prime(p, u); },
        [](const IdealHandle& p, const IdealUniverse& u) { return is_weakly_prime(p, u); },
        [](const IdealHandle& p, const IdealUniverse& u) { return is_almost_prime(p, u); },
    };
}

namespace {

struct TheoremInfo {
    std::string_view id;
    std::string_view statement;
};

constexpr TheoremInfo kTheorems[] = {
    {"def-chain", "prime => weakly prime => almost prime, and idempotent => almost prime, for right ideals"},
    {"prop-right-vs-ideal", "identity rings, two-sided P: almost prime over right ideals <=> almost prime over ideals"},
    {"prop-union", "right ideals: P in A u B implies P in A or P in B"},
    {"thm-equiv-5", "identity rings, two-sided P: ideal, principal, aRb, colon-union and colon-alternative forms agree"},
    {"thm-colon-collapse", "identity rings, right P with (P^2:P) in P: almost prime <=> prime"},
    {"thm-p2zero", "right P with P^2 = 0: weakly prime <=> almost prime; likewise every P when R^2 = 0"},
    {"lem-brauer", "identity rings: a minimal right ideal squares to 0 or is generated by an idempotent"},
    {"cor-minimal", "identity rings: minimal, almost prime and not idempotent => weakly prime"},
    {"thm-quotient-weakly", "two-sided P: P almost prime in R <=> P/P^2 weakly prime in R/P^2"},
    {"thm-epi-image", "epi f, ker f in P, P almost prime => f(P) almost prime; f^-1(B) almost prime => B almost prime"},
    {"thm-epi-preimage", "epi f, ker f in P^2, f(P) almost prime => P almost prime"},
    {"thm-quotient-transfer", "I in P, P almost prime => P/I almost prime in R/I (converse fails)"},
    {"fully-ring-thms", "fully almost prime right rings pass to epimorphic images and quotients, and back when ker f in I^2"},
    {"comm-thm-1-1", "commutative identity rings: almost prime <=> singleton colon conditions"},
    {"comm-thm-1-2", "R x S commutative with identity: almost prime ideals are I x S, R x J, or I x J with I, J idempotent"},
    {"as-weakly-square-zero", "commutative identity rings: weakly prime and not prime => P^2 = 0"},
    {"as-product-weakly", "R x S commutative with identity: weakly prime => P = 0 or P prime"},
    {"hirano-weakly-equiv", "identity rings, two-sided P: weakly prime via ideals <=> via right ideals <=> via aRb"},
    {"groenewald-colon", "two-sided P: weakly prime <=> P:<a) = P u (0:<a)) <=> P:<a) in {P, 0:<a)} for a not in P"},
};

// --- per-ring precomputation ----------------------------------------------

struct QuotientCtx {
    QuotientDescriptor q;
    std::shared_ptr<const IdealUniverse> right;
};

struct Epi {
    RingHom hom;
    std::string description;
    IdealHandle ker;
    std::shared_ptr<const IdealUniverse> codomain_right;
};

struct RingContext {
    const CorpusEntry* entry = nullptr;
    RingPtr ring;
    std::unique_ptr<IdealUniverse> right;
    std::unique_ptr<IdealUniverse> two_sided;
    std::vector<Bitset> principal_right;
    std::vector<Bitset> principal_left;
    std::vector<Bitset> principal_two;
    std::vector<QuotientCtx> quotients; ///< one per proper two-sided ideal, universe order
    std::vector<Epi> epis;

    const FiniteRing& R() const { return *ring; }
    const std::string& name() const { return entry->name; }

    const QuotientCtx& quotient_by(const Bitset& ideal) const {
        for (const auto& qc : quotients)
            if (qc.q.modulus.bits() == ideal) return qc;
        throw Error(ErrorCode::NotTwoSided, "no quotient prepared for " + ElementSubset(*ring, ideal).to_string());
    }
};

RingContext build_context(const CorpusEntry& entry, std::span<const CorpusEntry> corpus) {
    RingContext ctx;
    ctx.entry = &entry;
    ctx.ring = entry.ring;
    const FiniteRing& R = *ctx.ring;
    ctx.right = std::make_unique<IdealUniverse>(R, IdealKind::Right);
    ctx.two_sided = std::make_unique<IdealUniverse>(R, IdealKind::TwoSided);
    for (Index a = 0; a < R.order(); ++a) {
        ctx.principal_right.push_back(principal(R, a, IdealKind::Right).bits());
        ctx.principal_left.push_back(principal(R, a, IdealKind::Left).bits());
        ctx.principal_two.push_back(principal(R, a, IdealKind::TwoSided).bits());
    }

    std::map<const FiniteRing*, std::shared_ptr<const IdealUniverse>> universes;
    const auto universe_of = [&](const RingPtr& s) {
        auto& slot = universes[s.get()];
        if (!slot) slot = std::make_shared<const IdealUniverse>(*s, IdealKind::Right);
        return slot;
    };

    for (const auto& i : ctx.two_sided->ideals()) {
        if (!i.proper) continue;
        QuotientDescriptor q = quotient(ctx.ring, i);
        auto u = universe_of(q.ring);
        ctx.quotients.push_back(QuotientCtx{q, u});
        ctx.epis.push_back(Epi{q.projection, "projection onto " + q.ring->name(), kernel(q.projection), u});
    }

    if (R.order() <= kMaxEpiScanOrder) {
        std::vector<RingPtr> targets;
        for (const auto& qc : ctx.quotients) targets.push_back(qc.q.ring);
        for (const auto& c : corpus)
            if (c.ring->order() <= R.order()) targets.push_back(c.ring);
        for (const auto& s : targets) {
            const auto homs = enumerate_epimorphisms(ctx.ring, s);
            for (std::size_t k = 0; k < homs.size(); ++k) {
                std::ostringstream os;
                os << "enumerated epimorphism #" << k << " onto " << s->name();
                ctx.epis.push_back(Epi{homs[k], os.str(), kernel(homs[k]), universe_of(s)});
            }
        }
    }
    return ctx;
}

// --- checker plumbing -------------------------------------------------------

struct Run {
    const CheckOptions& opts;
    TheoremReport& report;
    std::optional<std::string> found_note; ///< existence searches

    bool prime(const IdealHandle& p, const IdealUniverse& u) const { return opts.predicates.prime(p, u).holds; }
    bool weakly(const IdealHandle& p, const IdealUniverse& u) const { return opts.predicates.weakly_prime(p, u).holds; }
    bool almost(const IdealHandle& p, const IdealUniverse& u) const { return opts.predicates.almost_prime(p, u).holds; }

    bool fully(const IdealUniverse& right) const {
        for (const auto& p : right.ideals())
            if (p.proper && !almost(p, right)) return false;
        return true;
    }
};

std::string set_str(const FiniteRing& r, const Bitset& b) { return ElementSubset(r, b).to_string(); }
std::string yn(bool b) { return b ? "true" : "false"; }

IdealHandle with_kind(const IdealHandle& p, IdealKind kind) { return IdealHandle{p.subset, kind, p.proper}; }

IdealHandle handle(const FiniteRing& r, Bitset b, IdealKind kind) {
    ElementSubset s(r, std::move(b));
    const bool proper = !s.is_whole();
    return IdealHandle{std::move(s), kind, proper};
}

Violation violation(const RingContext& ctx, std::string condition) {
    Violation v;
    v.ring = ctx.name();
    v.condition = std::move(condition);
    v.ring_ptr = ctx.ring;
    return v;
}

void add_pair(Violation& v, const std::string& tag, const std::optional<PairWitness>& w) {
    if (!w) return;
    const FiniteRing& r = w->a.ring();
    v.witness.emplace_back(tag + ".A", w->a.subset.to_string());
    v.witness.emplace_back(tag + ".B", w->b.subset.to_string());
    v.witness.emplace_back(tag + ".AB", ElementSubset(r, product_bits(r, w->a.bits(), w->b.bits())).to_string());
}

// --- the checkers -------------------------------------------------------------

void check_def_chain(const RingContext& ctx, Run& run) {
    const auto& U = *ctx.right;
    for (const auto& p : U.ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const auto pr = run.opts.predicates.prime(p, U);
        const auto wp = run.opts.predicates.weakly_prime(p, U);
        const auto ap = run.opts.predicates.almost_prime(p, U);
        const bool id = is_idempotent(p);
        const auto fail = [&](std::string cond) {
            auto v = violation(ctx, std::move(cond));
            v.witness.emplace_back("P", p.subset.to_string());
            v.witness.emplace_back("prime", yn(pr.holds));
            v.witness.emplace_back("weakly_prime", yn(wp.holds));
            v.witness.emplace_back("almost_prime", yn(ap.holds));
            v.witness.emplace_back("idempotent", yn(id));
            add_pair(v, "weakly_failure", wp.witness);
            add_pair(v, "almost_failure", ap.witness);
            run.report.violations.push_back(std::move(v));
        };
        if (pr.holds && !wp.holds) fail("prime => weakly prime");
        if (wp.holds && !ap.holds) fail("weakly prime => almost prime");
        if (id && !ap.holds) fail("idempotent => almost prime");
    }
}

void check_prop_right_vs_ideal(const RingContext& ctx, Run& run) {
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const auto r = run.opts.predicates.almost_prime(p, *ctx.right);
        const auto t = run.opts.predicates.almost_prime(p, *ctx.two_sided);
        if (r.holds != t.holds) {
            auto v = violation(ctx, "almost prime right ideal <=> almost prime ideal");
            v.witness.emplace_back("P", p.subset.to_string());
            v.witness.emplace_back("almost_prime_over_right_ideals", yn(r.holds));
            v.witness.emplace_back("almost_prime_over_ideals", yn(t.holds));
            add_pair(v, "right_failure", r.witness);
            add_pair(v, "ideal_failure", t.witness);
            run.report.violations.push_back(std::move(v));
        }
    }
}

void check_prop_union(const RingContext& ctx, Run& run) {
    const auto& ideals = ctx.right->ideals();
    for (const auto& p : ideals)
        for (const auto& a : ideals)
            for (const auto& b : ideals) {
                ++run.report.instances_checked;
                if (!p.bits().is_subset_of(a.bits() | b.bits())) continue;
                if (p.bits().is_subset_of(a.bits()) || p.bits().is_subset_of(b.bits())) continue;
                auto v = violation(ctx, "P in A u B => P in A or P in B");
                v.witness.emplace_back("P", p.subset.to_string());
                v.witness.emplace_back("A", a.subset.to_string());
                v.witness.emplace_back("B", b.subset.to_string());
                run.report.violations.push_back(std::move(v));
            }
}

/// Colon of `target` by a subset given as bits.
Bitset colon_bits(const FiniteRing& r, const Bitset& target, const Bitset& by, ColonSide side) {
    return colon(ElementSubset(r, target), ElementSubset(r, by), side).bits();
}

void check_equiv_5(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    const auto n = static_cast<Index>(R.order());
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const Bitset& P = p.bits();
        const Bitset P2 = product_bits(R, P, P);

        const auto c1 = run.opts.predicates.almost_prime(p, *ctx.two_sided);

        std::optional<ElementPair> w2;
        for (Index a = 0; a < n && !w2; ++a) {
            if (P.test(a)) continue;
            for (Index b = 0; b < n; ++b) {
                if (P.test(b)) continue;
                const Bitset ab = product_bits(R, ctx.principal_right[a], ctx.principal_right[b]);
                if (ab.is_subset_of(P) && !ab.is_subset_of(P2)) {
                    w2 = ElementPair{a, b};
                    break;
                }
            }
        }

        const ElementCriteria c3 = element_criteria(R, p);

        std::optional<Index> w4, w5;
        for (Index a = 0; a < n; ++a) {
            if (P.test(a)) continue;
            const Bitset& gen = ctx.principal_two[a];
            const Bitset right = colon_bits(R, P, gen, ColonSide::Right);
            const Bitset right2 = colon_bits(R, P2, gen, ColonSide::Right);
            const Bitset star = colon_bits(R, P, gen, ColonSide::Star);
            const Bitset star2 = colon_bits(R, P2, gen, ColonSide::Star);
            if (!w4 && !(right == (P | right2) && star == (P | star2))) w4 = a;
            if (!w5 && !((right == P || right == right2) && (star == P || star == star2))) w5 = a;
        }

        const bool flags[5] = {c1.holds, !w2, c3.almost_prime, !w4, !w5};
        if (std::all_of(std::begin(flags), std::end(flags), [&](bool f) { return f == flags[0]; })) continue;

        auto v = violation(ctx, "conditions (1)-(5) must agree");
        v.witness.emplace_back("P", p.subset.to_string());
        v.witness.emplace_back("P^2", set_str(R, P2));
        v.witness.emplace_back("(1) ideal pairs", yn(flags[0]));
        v.witness.emplace_back("(2) principal right ideals", yn(flags[1]));
        v.witness.emplace_back("(3) aRb", yn(flags[2]));
        v.witness.emplace_back("(4) colon = P u colon of P^2", yn(flags[3]));
        v.witness.emplace_back("(5) colon in {P, colon of P^2}", yn(flags[4]));
        add_pair(v, "(1)", c1.witness);
        if (w2) v.witness.emplace_back("(2) a,b", R.label(w2->a) + "," + R.label(w2->b));
        if (c3.almost_witness) v.witness.emplace_back("(3) a,b", R.label(c3.almost_witness->a) + "," + R.label(c3.almost_witness->b));
        if (w4) v.witness.emplace_back("(4) a", R.label(*w4));
        if (w5) v.witness.emplace_back("(5) a", R.label(*w5));
        run.report.violations.push_back(std::move(v));
    }
}

void check_colon_collapse(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    for (const auto& p : ctx.right->ideals()) {
        if (!p.proper) continue;
        const Bitset P2 = product_bits(R, p.bits(), p.bits());
        // (P²:P) = {x : Px ⊆ P²}
        const Bitset c = colon_bits(R, P2, p.bits(), ColonSide::Right);
        if (!c.is_subset_of(p.bits())) continue;
        ++run.report.instances_checked;
        const auto ap = run.opts.predicates.almost_prime(p, *ctx.right);
        const auto pr = run.opts.predicates.prime(p, *ctx.right);
        if (ap.holds != pr.holds) {
            auto v = violation(ctx, "(P^2:P) in P => (almost prime <=> prime)");
            v.witness.emplace_back("P", p.subset.to_string());
            v.witness.emplace_back("(P^2:P)", set_str(R, c));
            v.witness.emplace_back("almost_prime", yn(ap.holds));
            v.witness.emplace_back("prime", yn(pr.holds));
            add_pair(v, "almost_failure", ap.witness);
            add_pair(v, "prime_failure", pr.witness);
            run.report.violations.push_back(std::move(v));
        }
    }
}

void check_p2zero(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    const Bitset whole = ElementSubset::whole(R).bits();
    const bool square_zero_ring = product_bits(R, whole, whole).count() == 1;
    for (const auto& p : ctx.right->ideals()) {
        if (!p.proper) continue;
        const bool p2_zero = product_bits(R, p.bits(), p.bits()).count() == 1;
        if (!p2_zero && !square_zero_ring) continue;
        ++run.report.instances_checked;
        const auto wp = run.opts.predicates.weakly_prime(p, *ctx.right);
        const auto ap = run.opts.predicates.almost_prime(p, *ctx.right);
        if (wp.holds != ap.holds) {
            auto v = violation(ctx, square_zero_ring ? "R^2 = 0 => (weakly prime <=> almost prime)"
                                                     : "P^2 = 0 => (weakly prime <=> almost prime)");
            v.witness.emplace_back("P", p.subset.to_string());
            v.witness.emplace_back("weakly_prime", yn(wp.holds));
            v.witness.emplace_back("almost_prime", yn(ap.holds));
            add_pair(v, "weakly_failure", wp.witness);
            add_pair(v, "almost_failure", ap.witness);
            run.report.violations.push_back(std::move(v));
        }
    }
}

void check_brauer(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    for (const auto& p : ctx.right->ideals()) {
        if (!p.proper || p.is_zero() || !is_minimal(p, *ctx.right)) continue;
        ++run.report.instances_checked;
        if (product_bits(R, p.bits(), p.bits()).count() == 1) continue;
        bool generated = false;
        p.bits().for_each([&](std::size_t e) {
            const auto ei = static_cast<Index>(e);
            if (!generated && ei != R.zero() && R.mul(ei, ei) == ei && ctx.principal_right[ei] == p.bits())
                generated = true;
        });
        if (!generated) {
            auto v = violation(ctx, "minimal right ideal => P^2 = 0 or P = (e> with e idempotent");
            v.witness.emplace_back("P", p.subset.to_string());
            v.witness.emplace_back("P^2", set_str(R, product_bits(R, p.bits(), p.bits())));
            run.report.violations.push_back(std::move(v));
        }
    }
}

void check_cor_minimal(const RingContext& ctx, Run& run) {
    for (const auto& p : ctx.right->ideals()) {
        if (!p.proper || p.is_zero() || !is_minimal(p, *ctx.right)) continue;
        ++run.report.instances_checked;
        const bool ap = run.almost(p, *ctx.right);
        const bool id = is_idempotent(p);
        if (!ap || id) continue;
        const auto wp = run.opts.predicates.weakly_prime(p, *ctx.right);
        if (!wp.holds) {
            auto v = violation(ctx, "minimal, almost prime, not idempotent => weakly prime");
            v.witness.emplace_back("P", p.subset.to_string());
            add_pair(v, "weakly_failure", wp.witness);
            run.report.violations.push_back(std::move(v));
        }
    }
}

void check_quotient_weakly(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const Bitset P2 = product_bits(R, p.bits(), p.bits());
        const QuotientCtx& qc = ctx.quotient_by(P2);
        const IdealHandle pbar = qc.q.image_of_ideal(with_kind(p, IdealKind::Right));
        const auto ap = run.opts.predicates.almost_prime(with_kind(p, IdealKind::Right), *ctx.right);
        const auto wp = run.opts.predicates.weakly_prime(pbar, *qc.right);
        if (ap.holds == wp.holds) continue;
        auto v = violation(ctx, ap.holds ? "P almost prime => P/P^2 weakly prime in R/P^2"
                                         : "P/P^2 weakly prime in R/P^2 => P almost prime");
        v.witness.emplace_back("P", p.subset.to_string());
        v.witness.emplace_back("P^2", set_str(R, P2));
        v.witness.emplace_back("R/P^2", qc.q.ring->name());
        v.witness.emplace_back("P/P^2", pbar.subset.to_string());
        v.witness.emplace_back("almost_prime(P)", yn(ap.holds));
        v.witness.emplace_back("weakly_prime(P/P^2)", yn(wp.holds));
        add_pair(v, "almost_failure", ap.witness);
        add_pair(v, "quotient_weakly_failure", wp.witness);
        v.related.push_back(qc.q.ring);
        run.report.violations.push_back(std::move(v));
    }
}

void check_epi_image(const RingContext& ctx, Run& run) {
    for (const auto& e : ctx.epis) {
        const FiniteRing& S = *e.hom.codomain;
        for (const auto& p : ctx.right->ideals()) {
            if (!p.proper || !e.ker.bits().is_subset_of(p.bits())) continue;
            ++run.report.instances_checked;
            if (!run.almost(p, *ctx.right)) continue;
            const IdealHandle fp = handle(S, image_of_ideal(e.hom, p).bits(), IdealKind::Right);
            const auto ap = run.opts.predicates.almost_prime(fp, *e.codomain_right);
            if (!ap.holds) {
                auto v = violation(ctx, "ker f in P, P almost prime => f(P) almost prime");
                v.witness.emplace_back("f", e.description);
                v.witness.emplace_back("ker f", e.ker.subset.to_string());
                v.witness.emplace_back("P", p.subset.to_string());
                v.witness.emplace_back("f(P)", fp.subset.to_string());
                add_pair(v, "image_failure", ap.witness);
                v.related.push_back(e.hom.codomain);
                run.report.violations.push_back(std::move(v));
            }
        }
        for (const auto& b : e.codomain_right->ideals()) {
            if (!b.proper) continue;
            ++run.report.instances_checked;
            const IdealHandle pre = preimage_of_ideal(e.hom, b);
            if (!run.almost(pre, *ctx.right)) continue;
            const auto ap = run.opts.predicates.almost_prime(b, *e.codomain_right);
            if (!ap.holds) {
                auto v = violation(ctx, "f^-1(B) almost prime => B almost prime");
                v.witness.emplace_back("f", e.description);
                v.witness.emplace_back("B", b.subset.to_string());
                v.witness.emplace_back("f^-1(B)", pre.subset.to_string());
                add_pair(v, "image_failure", ap.witness);
                v.related.push_back(e.hom.codomain);
                run.report.violations.push_back(std::move(v));
            }
        }
    }
}

void check_epi_preimage(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    for (const auto& e : ctx.epis) {
        const FiniteRing& S = *e.hom.codomain;
        for (const auto& p : ctx.right->ideals()) {
            if (!p.proper) continue;
            const Bitset P2 = product_bits(R, p.bits(), p.bits());
            if (!e.ker.bits().is_subset_of(P2)) continue;
            ++run.report.instances_checked;
            const IdealHandle fp = handle(S, image_of_ideal(e.hom, p).bits(), IdealKind::Right);
            if (!fp.proper || !run.almost(fp, *e.codomain_right)) continue;
            const auto ap = run.opts.predicates.almost_prime(p, *ctx.right);
            if (!ap.holds) {
                auto v = violation(ctx, "ker f in P^2, f(P) almost prime => P almost prime");
                v.witness.emplace_back("f", e.description);
                v.witness.emplace_back("ker f", e.ker.subset.to_string());
                v.witness.emplace_back("P", p.subset.to_string());
                v.witness.emplace_back("P^2", set_str(R, P2));
                v.witness.emplace_back("f(P)", fp.subset.to_string());
                add_pair(v, "almost_failure", ap.witness);
                v.related.push_back(e.hom.codomain);
                run.report.violations.push_back(std::move(v));
            }
        }
    }
}

void check_quotient_transfer(const RingContext& ctx, Run& run) {
    for (const auto& qc : ctx.quotients) {
        const IdealHandle& i = qc.q.modulus;
        for (const auto& p : ctx.right->ideals()) {
            if (!p.proper || !i.bits().is_subset_of(p.bits())) continue;
            ++run.report.instances_checked;
            const bool ap = run.almost(p, *ctx.right);
            const IdealHandle pbar = qc.q.image_of_ideal(p);
            const auto apbar = run.opts.predicates.almost_prime(pbar, *qc.right);
            if (ap && !apbar.holds) {
                auto v = violation(ctx, "I in P, P almost prime => P/I almost prime in R/I");
                v.witness.emplace_back("I", i.subset.to_string());
                v.witness.emplace_back("P", p.subset.to_string());
                v.witness.emplace_back("R/I", qc.q.ring->name());
                v.witness.emplace_back("P/I", pbar.subset.to_string());
                add_pair(v, "quotient_failure", apbar.witness);
                v.related.push_back(qc.q.ring);
                run.report.violations.push_back(std::move(v));
            }
            // The converse fails; remember the first instance, preferring P = I.
            if (!ap && apbar.holds) {
                const bool p_is_i = p.bits() == i.bits();
                if (!run.found_note || (p_is_i && run.found_note->find("P = I") == std::string::npos)) {
                    run.found_note = "converse counterexample: ring " + ctx.name() + ", I = " + i.subset.to_string() +
                                     ", P = " + p.subset.to_string() + (p_is_i ? " (P = I)" : "") +
                                     ", P not almost prime, P/I = " + pbar.subset.to_string() + " almost prime";
                }
            }
        }
    }
}

void check_fully(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    const bool fully_r = run.fully(*ctx.right);

    for (const auto& e : ctx.epis) {
        const bool fully_s = run.fully(*e.codomain_right);
        ++run.report.instances_checked;
        if (fully_r && !fully_s) {
            auto v = violation(ctx, "R fully almost prime => epimorphic image fully almost prime");
            v.witness.emplace_back("f", e.description);
            v.related.push_back(e.hom.codomain);
            run.report.violations.push_back(std::move(v));
        }

        // ker f ⊆ I² for every nonzero proper right ideal I. The zero ideal is
        // almost prime in every ring, so it places no constraint.
        bool small_kernel = true;
        for (const auto& i : ctx.right->ideals()) {
            if (!i.proper || i.is_zero()) continue;
            if (!e.ker.bits().is_subset_of(product_bits(R, i.bits(), i.bits()))) {
                small_kernel = false;
                break;
            }
        }
        if (!small_kernel) continue;
        ++run.report.instances_checked;
        if (fully_s && !fully_r) {
            auto v = violation(ctx, "ker f in I^2 for all I, S fully almost prime => R fully almost prime");
            v.witness.emplace_back("f", e.description);
            v.witness.emplace_back("ker f", e.ker.subset.to_string());
            v.related.push_back(e.hom.codomain);
            run.report.violations.push_back(std::move(v));
        }
    }

    for (const auto& qc : ctx.quotients) {
        ++run.report.instances_checked;
        if (fully_r && !run.fully(*qc.right)) {
            auto v = violation(ctx, "R fully almost prime => R/I fully almost prime");
            v.witness.emplace_back("I", qc.q.modulus.subset.to_string());
            v.related.push_back(qc.q.ring);
            run.report.violations.push_back(std::move(v));
        }
    }
}

void check_comm_1_1(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    const auto n = static_cast<Index>(R.order());
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const Bitset& P = p.bits();
        const Bitset P2 = product_bits(R, P, P);

        // (1) elementwise: ab in P \ P² forces a or b into P.
        std::optional<ElementPair> w1;
        for (Index a = 0; a < n && !w1; ++a)
            for (Index b = 0; b < n; ++b) {
                const Index ab = R.mul(a, b);
                if (P.test(ab) && !P2.test(ab) && !P.test(a) && !P.test(b)) {
                    w1 = ElementPair{a, b};
                    break;
                }
            }

        std::optional<Index> w2, w3;
        for (Index a = 0; a < n; ++a) {
            if (P.test(a)) continue;
            Bitset single(n);
            single.set(a);
            const Bitset c = colon_bits(R, P, single, ColonSide::Right);
            const Bitset c2 = colon_bits(R, P2, single, ColonSide::Right);
            if (!w2 && c != (P | c2)) w2 = a;
            if (!w3 && c != P && c != c2) w3 = a;
        }
        const auto c4 = run.opts.predicates.almost_prime(p, *ctx.two_sided);

        const bool flags[4] = {!w1, !w2, !w3, c4.holds};
        if (std::all_of(std::begin(flags), std::end(flags), [&](bool f) { return f == flags[0]; })) continue;
        auto v = violation(ctx, "conditions (1)-(4) must agree");
        v.witness.emplace_back("P", p.subset.to_string());
        v.witness.emplace_back("P^2", set_str(R, P2));
        v.witness.emplace_back("(1) ab in P\\P^2", yn(flags[0]));
        v.witness.emplace_back("(2) P:{a} = P u (P^2:{a})", yn(flags[1]));
        v.witness.emplace_back("(3) P:{a} in {P, P^2:{a}}", yn(flags[2]));
        v.witness.emplace_back("(4) ideal pairs", yn(flags[3]));
        if (w1) v.witness.emplace_back("(1) a,b", R.label(w1->a) + "," + R.label(w1->b));
        if (w2) v.witness.emplace_back("(2) a", R.label(*w2));
        if (w3) v.witness.emplace_back("(3) a", R.label(*w3));
        add_pair(v, "(4)", c4.witness);
        run.report.violations.push_back(std::move(v));
    }
}

void check_comm_1_2(const RingContext& ctx, Run& run) {
    const ProductRing& pr = *ctx.entry->product;
    const FiniteRing& R = ctx.R();
    const IdealUniverse ur(*pr.left, IdealKind::TwoSided);
    const IdealUniverse us(*pr.right, IdealKind::TwoSided);
    const IdealHandle whole_r = handle(*pr.left, ElementSubset::whole(*pr.left).bits(), IdealKind::TwoSided);
    const IdealHandle whole_s = handle(*pr.right, ElementSubset::whole(*pr.right).bits(), IdealKind::TwoSided);

    std::vector<Bitset> forms;
    const auto add_form = [&](Bitset b) {
        if (!b.all() && std::find(forms.begin(), forms.end(), b) == forms.end()) forms.push_back(std::move(b));
    };
    for (const auto& i : ur.ideals())
        if (i.proper && run.almost(i, ur)) add_form(pr.ideal_embed(i, whole_s).bits());
    for (const auto& j : us.ideals())
        if (j.proper && run.almost(j, us)) add_form(pr.ideal_embed(whole_r, j).bits());
    for (const auto& i : ur.ideals())
        for (const auto& j : us.ideals())
            if (is_idempotent(i) && is_idempotent(j)) add_form(pr.ideal_embed(i, j).bits());

    std::vector<Bitset> almost_prime_ideals;
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const bool ap = run.almost(p, *ctx.two_sided);
        const bool in_forms = std::find(forms.begin(), forms.end(), p.bits()) != forms.end();
        if (ap) almost_prime_ideals.push_back(p.bits());
        if (ap != in_forms) {
            auto v = violation(ctx, ap ? "almost prime ideal of R x S has one of the three forms"
                                       : "ideal of one of the three forms is almost prime");
            v.witness.emplace_back("P", p.subset.to_string());
            v.witness.emplace_back("almost_prime", yn(ap));
            v.witness.emplace_back("of_listed_form", yn(in_forms));
            run.report.violations.push_back(std::move(v));
        }
    }
    // Every form must actually be an ideal of the product.
    for (const auto& f : forms) {
        if (ctx.two_sided->find(f)) continue;
        auto v = violation(ctx, "listed form is an ideal of R x S");
        v.witness.emplace_back("form", set_str(R, f));
        run.report.violations.push_back(std::move(v));
    }
    std::ostringstream note;
    note << ctx.name() << ": " << almost_prime_ideals.size() << " almost prime ideals, " << forms.size()
         << " ideals of the listed forms";
    run.report.notes.push_back(note.str());
}

void check_as_square_zero(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const bool wp = run.weakly(p, *ctx.two_sided);
        if (!wp) continue;
        const auto pr = run.opts.predicates.prime(p, *ctx.two_sided);
        const Bitset P2 = product_bits(R, p.bits(), p.bits());
        if (!pr.holds && P2.count() != 1) {
            auto v = violation(ctx, "weakly prime, not prime => P^2 = 0");
            v.witness.emplace_back("P", p.subset.to_string());
            v.witness.emplace_back("P^2", set_str(R, P2));
            add_pair(v, "prime_failure", pr.witness);
            run.report.violations.push_back(std::move(v));
        }
    }
}

void check_as_product_weakly(const RingContext& ctx, Run& run) {
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        if (!run.weakly(p, *ctx.two_sided) || p.is_zero()) continue;
        const auto pr = run.opts.predicates.prime(p, *ctx.two_sided);
        if (!pr.holds) {
            auto v = violation(ctx, "weakly prime in R x S => P = 0 or P prime");
            v.witness.emplace_back("P", p.subset.to_string());
            add_pair(v, "prime_failure", pr.witness);
            run.report.violations.push_back(std::move(v));
        }
    }
}

void check_hirano(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const auto c1 = run.opts.predicates.weakly_prime(p, *ctx.two_sided);
        const auto c2 = run.opts.predicates.weakly_prime(p, *ctx.right);
        const ElementCriteria c3 = element_criteria(R, p);
        if (c1.holds == c2.holds && c2.holds == c3.weakly_prime) continue;
        auto v = violation(ctx, "weakly prime via ideals <=> via right ideals <=> via aRb");
        v.witness.emplace_back("P", p.subset.to_string());
        v.witness.emplace_back("(1) ideals", yn(c1.holds));
        v.witness.emplace_back("(2) right ideals", yn(c2.holds));
        v.witness.emplace_back("(3) aRb", yn(c3.weakly_prime));
        add_pair(v, "(1)", c1.witness);
        add_pair(v, "(2)", c2.witness);
        if (c3.weakly_witness)
            v.witness.emplace_back("(3) a,b", R.label(c3.weakly_witness->a) + "," + R.label(c3.weakly_witness->b));
        run.report.violations.push_back(std::move(v));
    }
}

void check_groenewald(const RingContext& ctx, Run& run) {
    const FiniteRing& R = ctx.R();
    const auto n = static_cast<Index>(R.order());
    Bitset zero(n);
    zero.set(R.zero());
    for (const auto& p : ctx.two_sided->ideals()) {
        if (!p.proper) continue;
        ++run.report.instances_checked;
        const Bitset& P = p.bits();
        const auto c1 = run.opts.predicates.weakly_prime(p, *ctx.two_sided);
        std::optional<Index> w2, w3;
        for (Index a = 0; a < n; ++a) {
            if (P.test(a)) continue;
            const Bitset& left = ctx.principal_left[a];
            const Bitset c = colon_bits(R, P, left, ColonSide::Right);
            const Bitset ann = colon_bits(R, zero, left, ColonSide::Right);
            if (!w2 && c != (P | ann)) w2 = a;
            if (!w3 && c != P && c != ann) w3 = a;
        }
        if (c1.holds == !w2 && !w2 == !w3) continue;
        auto v = violation(ctx, "weakly prime <=> colon by <a) conditions");
        v.witness.emplace_back("P", p.subset.to_string());
        v.witness.emplace_back("(1) weakly prime", yn(c1.holds));
        v.witness.emplace_back("(2) P:<a) = P u (0:<a))", yn(!w2));
        v.witness.emplace_back("(3) P:<a) in {P, 0:<a)}", yn(!w3));
        add_pair(v, "(1)", c1.witness);
        if (w2) v.witness.emplace_back("(2) a", R.label(*w2));
        if (w3) v.witness.emplace_back("(3) a", R.label(*w3));
        run.report.violations.push_back(std::move(v));
    }
}

// --- registry -----------------------------------------------------------------

struct TheoremDef {
    std::string_view id;
    bool (*applies)(const RingContext&);
    void (*check)(const RingContext&, Run&);
};

bool any_ring(const RingContext&) { return true; }
bool identity_ring(const RingContext& c) { return c.R().has_identity(); }
bool commutative_identity_ring(const RingContext& c) { return c.R().has_identity() && c.R().commutative(); }
bool commutative_identity_product(const RingContext& c) {
    const auto& p = c.entry->product;
    return p && p->left->has_identity() && p->left->commutative() && p->right->has_identity() &&
           p->right->commutative();
}

constexpr TheoremDef kDefs[] = {
    {"def-chain", any_ring, check_def_chain},
    {"prop-right-vs-ideal", identity_ring, check_prop_right_vs_ideal},
    {"prop-union", any_ring, check_prop_union},
    {"thm-equiv-5", identity_ring, check_equiv_5},
    {"thm-colon-collapse", identity_ring, check_colon_collapse},
    {"thm-p2zero", any_ring, check_p2zero},
    {"lem-brauer", identity_ring, check_brauer},
    {"cor-minimal", identity_ring, check_cor_minimal},
    {"thm-quotient-weakly", any_ring, check_quotient_weakly},
    {"thm-epi-image", any_ring, check_epi_image},
    {"thm-epi-preimage", any_ring, check_epi_preimage},
    {"thm-quotient-transfer", any_ring, check_quotient_transfer},
    {"fully-ring-thms", any_ring, check_fully},
    {"comm-thm-1-1", commutative_identity_ring, check_comm_1_1},
    {"comm-thm-1-2", commutative_identity_product, check_comm_1_2},
    {"as-weakly-square-zero", commutative_identity_ring, check_as_square_zero},
    {"as-product-weakly", commutative_identity_product, check_as_product_weakly},
    {"hirano-weakly-equiv", identity_ring, check_hirano},
    {"groenewald-colon", any_ring, check_groenewald},
};

const TheoremDef& def_of(std::string_view id) {
    for (const auto& d : kDefs)
        if (d.id == id) return d;
    throw Error(ErrorCode::UnknownTheoremId, "unknown theorem id '" + std::string(id) + "'");
}

TheoremReport run_one(const TheoremDef& def, std::span<const RingContext> contexts, const CheckOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    TheoremReport report;
    report.theorem_id = std::string(def.id);
    report.statement = std::string(theorem_statement(def.id));
    Run run{opts, report, std::nullopt};
    for (const auto& ctx : contexts) {
        if (!def.applies(ctx)) {
            ++report.rings_filtered;
            continue;
        }
        ++report.rings_checked;
        def.check(ctx, run);
    }
    if (def.id == "thm-quotient-transfer")
        report.notes.push_back(run.found_note ? *run.found_note : "converse counterexample: not found in corpus");
    if (report.vacuous()) report.notes.push_back("vacuous: no corpus instance satisfies the hypotheses");
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& t : kTheorems) out.emplace_back(t.id);
        return out;
    }();
    return ids;
}

std::string_view theorem_statement(std::string_view id) {
    for (const auto& t : kTheorems)
        if (t.id == id) return t.statement;
    throw Error(ErrorCode::UnknownTheoremId, "unknown theorem id '" + std::string(id) + "'");
}

std::vector<std::string> resolve_selection(std::span<const std::string> requested) {
    std::vector<bool> wanted(std::size(kTheorems), false);
    for (const auto& r : requested) {
        if (r == "all") {
            std::fill(wanted.begin(), wanted.end(), true);
            continue;
        }
        bool found = false;
        for (std::size_t i = 0; i < std::size(kTheorems); ++i)
            if (kTheorems[i].id == r) {
                wanted[i] = true;
                found = true;
            }
        if (!found) throw Error(ErrorCode::UnknownTheoremId, "unknown theorem id '" + r + "'");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < wanted.size(); ++i)
        if (wanted[i]) out.emplace_back(kTheorems[i].id);
    return out;
}

std::vector<TheoremReport> run_checks(std::span<const CorpusEntry> corpus, std::span<const std::string> selection,
                                      const CheckOptions& options) {
    const auto ids = resolve_selection(selection);

    std::vector<RingContext> contexts(corpus.size());
    if (options.parallel) {
        std::vector<std::future<RingContext>> futures;
        for (const auto& entry : corpus)
            futures.push_back(std::async(std::launch::async, [&entry, corpus] { return build_context(entry, corpus); }));
        for (std::size_t i = 0; i < futures.size(); ++i) contexts[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < corpus.size(); ++i) contexts[i] = build_context(corpus[i], corpus);
    }

    std::vector<TheoremReport> reports(ids.size());
    if (options.parallel) {
        std::vector<std::future<TheoremReport>> futures;
        for (const auto& id : ids)
            futures.push_back(std::async(std::launch::async, [&, id] { return run_one(def_of(id), contexts, options); }));
        for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < ids.size(); ++i) reports[i] = run_one(def_of(ids[i]), contexts, options);
    }
    return reports;
}

namespace {

void print_tables(std::ostream& os, const FiniteRing& r) {
    std::size_t width = 1;
    for (const auto& l : r.labels()) width = std::max(width, l.size());
    const auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
    for (const auto* op : {"+", "*"}) {
        os << "  " << pad(op) << " |";
        for (Index c = 0; c < r.order(); ++c) os << ' ' << pad(r.label(c));
        os << '\n';
        for (Index a = 0; a < r.order(); ++a) {
            os << "  " << pad(r.label(a)) << " |";
            for (Index b = 0; b < r.order(); ++b) os << ' ' << pad(r.label(*op == '+' ? r.add(a, b) : r.mul(a, b)));
            os << '\n';
        }
        os << '\n';
    }
}

} // namespace

std::string explain_violation(const TheoremReport& report, const Violation& violation) {
    std::ostringstream os;
    os << "theorem " << report.theorem_id << ": " << report.statement << '\n';
    os << "ring " << violation.ring << '\n';
    os << "failed: " << violation.condition << '\n';
    for (const auto& [k, v] : violation.witness) os << "  " << k << " = " << v << '\n';
    if (violation.ring_ptr && violation.ring_ptr->order() <= 16) {
        os << "tables of " << violation.ring_ptr->name() << ":\n";
        print_tables(os, *violation.ring_ptr);
    }
    for (const auto& r : violation.related)
        if (r && r->order() <= 16) {
            os << "tables of " << r->name() << ":\n";
            print_tables(os, *r);
        }
    return os.str();
}

std::string explain_report(const TheoremReport& report) {
    std::string out;
    for (const auto& v : report.violations) out += explain_violation(report, v) + "\n";
    return out;
}

} // namespace aprime
