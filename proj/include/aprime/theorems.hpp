#pragma once

/**
 * @file theorems.hpp
 * @brief Exhaustive statement checkers over a corpus of finite rings.
 *
 * Each checker evaluates one statement about prime-like ideals as a material
 * implication on every instance in the corpus that meets its hypotheses
 * (identity, commutativity, two-sidedness, product structure). Rings that
 * fail the hypotheses are counted as filtered. A violation is a concrete
 * counterexample with labelled witnesses; since the statements are theorems,
 * any violation points at a bug in the engine.
 *
 * Checker ids, in canonical order:
 *
 *   def-chain              prime => weakly prime => almost prime, idempotent => almost prime
 *   prop-right-vs-ideal    two-sided P: almost prime over right ideals <=> over ideals
 *   prop-union             P ⊆ A ∪ B forces P ⊆ A or P ⊆ B
 *   thm-equiv-5            five equivalent forms of almost primeness
 *   thm-colon-collapse     (P²:P) ⊆ P: almost prime <=> prime
 *   thm-p2zero             P² = 0: weakly prime <=> almost prime (and R² = 0 rings)
 *   lem-brauer             minimal right ideals: P² = 0 or P = eR, e idempotent
 *   cor-minimal            minimal, almost prime, not idempotent => weakly prime
 *   thm-quotient-weakly    P almost prime <=> P/P² weakly prime in R/P²
 *   thm-epi-image          ker f ⊆ P almost prime => f(P) almost prime
 *   thm-epi-preimage       ker f ⊆ P², f(P) almost prime => P almost prime
 *   thm-quotient-transfer  I ⊆ P almost prime => P/I almost prime in R/I
 *   fully-ring-thms        fully almost prime right rings under epimorphisms
 *   comm-thm-1-1           commutative colon characterisation by singletons
 *   comm-thm-1-2           almost prime ideals of a product of commutative rings
 *   as-weakly-square-zero  commutative: weakly prime, not prime => P² = 0
 *   as-product-weakly      products: weakly prime => P = 0 or prime
 *   hirano-weakly-equiv    weakly prime via ideals, right ideals and aRb
 *   groenewald-colon       weakly prime via colons by left principal ideals
 */

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aprime/constructions.hpp"
#include "aprime/predicates.hpp"

namespace aprime {

struct CorpusEntry {
    std::string name; ///< generator spec or file name; reported verbatim
    RingPtr ring;
    std::optional<ProductRing> product; ///< set when the ring was built as R×S
};

struct Violation {
    std::string ring;
    std::string condition; ///< the implication that failed
    std::vector<std::pair<std::string, std::string>> witness;
    RingPtr ring_ptr;
    std::vector<RingPtr> related; ///< quotients or codomains involved
};

struct TheoremReport {
    std::string theorem_id;
    std::string statement;
    std::size_t rings_checked = 0;
    std::size_t rings_filtered = 0;
    std::size_t instances_checked = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    std::chrono::nanoseconds elapsed{0};

    bool vacuous() const noexcept { return instances_checked == 0; }
    bool passed() const noexcept { return violations.empty(); }
};

using IdealPredicate = std::function<PredicateResult(const IdealHandle&, const IdealUniverse&)>;

/// The predicates the checkers consult. Swapping one out (for example a
/// deliberately broken almost-prime test) shows which checkers notice.
struct PredicateSet {
    IdealPredicate prime;
    IdealPredicate weakly_prime;
    IdealPredicate almost_prime;

    static PredicateSet standard();
};

struct CheckOptions {
    PredicateSet predicates = PredicateSet::standard();
    bool parallel = true;
};

const std::vector<std::string>& theorem_ids();
std::string_view theorem_statement(std::string_view id);

/// Expands "all", keeps canonical order, removes duplicates. Throws
/// UnknownTheoremId.
std::vector<std::string> resolve_selection(std::span<const std::string> requested);

std::vector<TheoremReport> run_checks(std::span<const CorpusEntry> corpus, std::span<const std::string> selection,
                                      const CheckOptions& options = {});

/// Ring tables, ideals, witnesses and the failed implication, as text.
std::string explain_violation(const TheoremReport& report, const Violation& violation);

/// explain_violation for every entry; empty when nothing failed.
std::string explain_report(const TheoremReport& report);

} // namespace aprime
