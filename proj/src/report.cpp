#include "aprime/report.hpp"

#include <sstream>

namespace aprime {

nlohmann::ordered_json report_to_json(std::span<const std::string> corpus_names,
                                      std::span<const TheoremReport> reports) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["corpus"] = ordered_json::array();
    for (const auto& n : corpus_names) doc["corpus"].push_back(n);

    std::size_t failing = 0;
    ordered_json theorems = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json t;
        t["theorem_id"] = r.theorem_id;
        t["statement"] = r.statement;
        t["rings_checked"] = r.rings_checked;
        t["rings_filtered"] = r.rings_filtered;
        t["instances_checked"] = r.instances_checked;
        t["vacuous"] = r.vacuous();
        t["passed"] = r.passed();
        ordered_json vs = ordered_json::array();
        for (const auto& v : r.violations) {
            ordered_json w = ordered_json::object();
            for (const auto& [k, val] : v.witness) w[k] = val;
            vs.push_back(ordered_json{{"ring", v.ring}, {"condition", v.condition}, {"witness", std::move(w)}});
        }
        t["violations"] = std::move(vs);
        t["notes"] = r.notes;
        t["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
        theorems.push_back(std::move(t));
        if (!r.passed()) ++failing;
    }
    doc["theorems"] = std::move(theorems);
    doc["summary"] = ordered_json{{"theorems", reports.size()}, {"failing", failing}};
    return doc;
}

nlohmann::ordered_json strip_timing(nlohmann::ordered_json doc) {
    if (doc.is_object()) {
        doc.erase("elapsed_ms");
        for (auto& [k, v] : doc.items()) v = strip_timing(std::move(v));
    } else if (doc.is_array()) {
        for (auto& v : doc) v = strip_timing(std::move(v));
    }
    return doc;
}

std::string report_to_markdown(std::span<const std::string> corpus_names, std::span<const TheoremReport> reports) {
    std::ostringstream os;
    os << "Corpus: " << corpus_names.size() << " rings\n\n";
    os << "| theorem | rings checked | rings filtered | instances | violations | status |\n";
    os << "|---|---:|---:|---:|---:|---|\n";
    for (const auto& r : reports) {
        const char* status = !r.passed() ? "FAIL" : r.vacuous() ? "vacuous" : "ok";
        os << "| " << r.theorem_id << " | " << r.rings_checked << " | " << r.rings_filtered << " | "
           << r.instances_checked << " | " << r.violations.size() << " | " << status << " |\n";
    }
    bool any_notes = false;
    for (const auto& r : reports)
        for (const auto& n : r.notes) {
            if (!any_notes) os << "\nNotes:\n\n";
            any_notes = true;
            os << "- " << r.theorem_id << ": " << n << '\n';
        }
    return os.str();
}

} // namespace aprime
