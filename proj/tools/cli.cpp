#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aprime/constructions.hpp"
#include "aprime/error.hpp"
#include "aprime/report.hpp"
#include "aprime/ring_io.hpp"

namespace aprime::cli {

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::UnknownName:
    case ErrorCode::UnknownTheoremId:
        return UsageOrIo;
    default:
        return ValidationFailure;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

/// Elements by label first, then by index.
ElementSubset parse_elements(const FiniteRing& ring, const std::string& list) {
    ElementSubset s(ring);
    for (const auto& tok : split(list, ',')) {
        const auto& labels = ring.labels();
        const auto it = std::find(labels.begin(), labels.end(), tok);
        if (it != labels.end()) {
            s.insert(static_cast<Index>(it - labels.begin()));
            continue;
        }
        std::size_t idx = 0;
        std::size_t used = 0;
        try {
            idx = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || idx >= ring.order())
            throw Error(ErrorCode::UnknownName, "no element '" + tok + "' in " + ring.name());
        s.insert(static_cast<Index>(idx));
    }
    return s;
}

std::string describe_ring(const FiniteRing& r) {
    std::ostringstream os;
    os << r.name() << ": order " << r.order() << ", " << (r.commutative() ? "commutative" : "noncommutative") << ", ";
    if (r.identity())
        os << "identity " << r.label(*r.identity());
    else
        os << "no identity";
    return os.str();
}

IdealKind parse_kind(const std::string& k) {
    if (k == "right") return IdealKind::Right;
    if (k == "left") return IdealKind::Left;
    return IdealKind::TwoSided;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void print_classification(std::ostream& out, const std::vector<ClassificationRecord>& recs) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"right ideal", "square", "idempotent", "prime", "weakly", "almost", "minimal"});
    for (const auto& r : recs) {
        rows.push_back({r.ideal.subset.to_string(), ideal_product(r.ideal, r.ideal).to_string(), yes(r.is_idempotent),
                        yes(r.is_prime), yes(r.is_weakly_prime), yes(r.is_almost_prime), yes(r.is_minimal)});
    }
    std::vector<std::size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c + 1 < row.size(); ++c)
            out << std::left << std::setw(static_cast<int>(width[c] + 2)) << row[c];
        out << row.back() << '\n';
    }
}

bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) {
        err << "error: cannot write " << path << '\n';
        return false;
    }
    return true;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite ring ideal classifier and statement checker", "aprime"};
    app.require_subcommand(1);
    std::size_t max_order = kDefaultMaxOrder;
    app.add_option("--max-order", max_order, "Largest ring order any construction may produce")
        ->capture_default_str();

    std::string ring_arg, ring_arg2, kind = "right", ideal_list, spec, out_path;
    std::string corpus = "default", theorems = "all", report_path, markdown_path;
    bool json_out = false;

    auto* validate = app.add_subcommand("validate", "Check a ring file or spec against the ring axioms");
    validate->add_option("ring", ring_arg, "Ring file or generator spec")->required();

    auto* ideals = app.add_subcommand("ideals", "List the ideals of a ring");
    ideals->add_option("ring", ring_arg, "Ring file or generator spec")->required();
    ideals->add_option("--kind", kind, "right, left or two-sided")
        ->check(CLI::IsMember({"right", "left", "two-sided"}))
        ->capture_default_str();
    ideals->add_flag("--json", json_out, "Machine-readable output");

    auto* classify = app.add_subcommand("classify", "Classify proper right ideals");
    classify->add_option("ring", ring_arg, "Ring file or generator spec")->required();
    classify->add_option("--ideal", ideal_list, "Only this right ideal (comma-separated labels or indices)");
    classify->add_flag("--json", json_out, "Machine-readable output");

    auto* product = app.add_subcommand("product", "Print the direct product of two rings as a ring file");
    product->add_option("left", ring_arg, "Ring file or generator spec")->required();
    product->add_option("right", ring_arg2, "Ring file or generator spec")->required();
    product->add_option("-o,--output", out_path, "Write to a file instead of stdout");

    auto* quot = app.add_subcommand("quotient", "Print R/I as a ring file");
    quot->add_option("ring", ring_arg, "Ring file or generator spec")->required();
    quot->add_option("--ideal", ideal_list, "Two-sided ideal (comma-separated labels or indices)")->required();
    quot->add_option("-o,--output", out_path, "Write to a file instead of stdout");

    auto* gen = app.add_subcommand("generate", "Write a generated ring to a file");
    gen->add_option("spec", spec, "Generator spec")->required();
    gen->add_option("-o,--output", out_path, "Output path")->required();

    auto* verify = app.add_subcommand("verify", "Run the statement checkers over a corpus");
    verify->add_option("--corpus", corpus, "Directory of ring files, or 'default'")->capture_default_str();
    verify->add_option("--theorems", theorems, "Comma-separated ids, or 'all'")->capture_default_str();
    verify->add_option("--report", report_path, "Write the JSON report here");
    verify->add_option("--markdown", markdown_path, "Write the markdown summary here");
    verify->add_flag("--sequential", "Run checkers on one thread");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : UsageOrIo;
    }

    try {
        if (*validate) {
            const auto entry = load_ring_argument(ring_arg, max_order);
            out << "valid: " << describe_ring(*entry.ring) << '\n';
            return Ok;
        }
        if (*ideals) {
            const auto entry = load_ring_argument(ring_arg, max_order);
            const auto list = enumerate_ideals(*entry.ring, parse_kind(kind));
            if (json_out) {
                nlohmann::ordered_json doc;
                doc["ring"] = entry.name;
                doc["kind"] = kind;
                doc["ideals"] = nlohmann::ordered_json::array();
                for (const auto& i : list) {
                    std::vector<std::string> labels;
                    for (auto m : i.subset.members()) labels.push_back(entry.ring->label(m));
                    doc["ideals"].push_back(labels);
                }
                out << doc.dump(2) << '\n';
                return Ok;
            }
            out << list.size() << ' ' << kind << " ideals of " << entry.ring->name() << '\n';
            for (std::size_t i = 0; i < list.size(); ++i)
                out << "  " << i << ": " << list[i].subset.to_string() << (list[i].proper ? "" : " (improper)") << '\n';
            return Ok;
        }
        if (*classify) {
            const auto entry = load_ring_argument(ring_arg, max_order);
            const FiniteRing& R = *entry.ring;
            const IdealUniverse universe(R, IdealKind::Right);
            std::vector<ClassificationRecord> recs;
            if (ideal_list.empty()) {
                recs = classify_ring(universe);
            } else {
                recs.push_back(classify_ideal(as_ideal(parse_elements(R, ideal_list), IdealKind::Right), universe));
            }
            const auto fully = is_fully_almost_prime(universe);
            if (json_out) {
                nlohmann::ordered_json doc;
                doc["ring"] = entry.name;
                doc["fully_almost_prime_right"] = fully.holds;
                doc["ideals"] = nlohmann::ordered_json::array();
                for (const auto& r : recs)
                    doc["ideals"].push_back(nlohmann::ordered_json{{"ideal", r.ideal.subset.to_string()},
                                                                   {"idempotent", r.is_idempotent},
                                                                   {"prime", r.is_prime},
                                                                   {"weakly_prime", r.is_weakly_prime},
                                                                   {"almost_prime", r.is_almost_prime},
                                                                   {"minimal", r.is_minimal}});
                out << doc.dump(2) << '\n';
                return Ok;
            }
            out << describe_ring(R) << '\n';
            print_classification(out, recs);
            out << "fully almost prime right ring: " << yes(fully.holds);
            if (fully.first_failure) out << " (fails at " << fully.first_failure->subset.to_string() << ")";
            out << '\n';
            return Ok;
        }
        if (*product) {
            const auto left = load_ring_argument(ring_arg, max_order);
            const auto right = load_ring_argument(ring_arg2, max_order);
            const auto p = direct_product(left.ring, right.ring, max_order);
            const auto text = ring_to_text(*p.ring);
            if (out_path.empty()) {
                out << text;
                return Ok;
            }
            return write_text(out_path, text, err) ? Ok : UsageOrIo;
        }
        if (*quot) {
            const auto entry = load_ring_argument(ring_arg, max_order);
            const auto i = as_ideal(parse_elements(*entry.ring, ideal_list), IdealKind::TwoSided);
            const auto q = quotient(entry.ring, i);
            const auto text = ring_to_text(*q.ring);
            if (out_path.empty()) {
                out << text;
                return Ok;
            }
            return write_text(out_path, text, err) ? Ok : UsageOrIo;
        }
        if (*gen) {
            const auto entry = generate(spec, max_order);
            write_ring_file(*entry.ring, out_path);
            out << "wrote " << out_path << '\n';
            return Ok;
        }
        if (*verify) {
            const auto entries = load_corpus(corpus, max_order);
            const auto selection = split(theorems, ',');
            CheckOptions opts;
            opts.parallel = verify->count("--sequential") == 0;
            const auto reports = run_checks(entries, selection, opts);
            std::vector<std::string> names;
            for (const auto& e : entries) names.push_back(e.name);

            const std::string md = report_to_markdown(names, reports);
            out << md;
            if (!report_path.empty() && !write_text(report_path, report_to_json(names, reports).dump(2) + "\n", err))
                return UsageOrIo;
            if (!markdown_path.empty() && !write_text(markdown_path, md, err)) return UsageOrIo;

            bool failed = false;
            for (const auto& r : reports)
                if (!r.passed()) {
                    failed = true;
                    err << explain_report(r);
                }
            return failed ? ViolationFound : Ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return UsageOrIo;
    }
    return UsageOrIo;
}

} // namespace aprime::cli
