#include "aprime/ring_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aprime/constructions.hpp"
#include "aprime/error.hpp"

namespace aprime {

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::vector<std::vector<std::int64_t>> read_table(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
    if (!it->is_array()) throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be an array of rows");
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t r = 0; r < it->size(); ++r) {
        const json& row = (*it)[r];
        if (!row.is_array())
            throw Error(ErrorCode::ParseError, std::string("'") + key + "' row " + std::to_string(r) + " is not an array");
        std::vector<std::int64_t> vals;
        for (const json& v : row) {
            if (!v.is_number_integer())
                throw Error(ErrorCode::ParseError,
                            std::string("'") + key + "' row " + std::to_string(r) + " holds a non-integer entry");
            vals.push_back(v.get<std::int64_t>());
        }
        out.push_back(std::move(vals));
    }
    return out;
}

bool default_labels(const FiniteRing& ring) {
    for (Index a = 0; a < ring.order(); ++a)
        if (ring.label(a) != std::to_string(a)) return false;
    return true;
}

void write_table(std::ostream& os, const FiniteRing& ring, const std::vector<Index>& table) {
    const std::size_t n = ring.order();
    os << "[\n";
    for (std::size_t r = 0; r < n; ++r) {
        os << "    [";
        for (std::size_t c = 0; c < n; ++c) os << (c ? ", " : "") << table[r * n + c];
        os << (r + 1 < n ? "],\n" : "]\n");
    }
    os << "  ]";
}

std::size_t parse_count(std::string_view s, std::string_view spec) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorCode::UnknownName, "bad number '" + std::string(s) + "' in generator spec '" +
                                                std::string(spec) + "'");
    return v;
}

std::pair<std::size_t, std::size_t> two_counts(std::string_view rest, std::string_view spec) {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos)
        throw Error(ErrorCode::UnknownName, "expected B:K in generator spec '" + std::string(spec) + "'");
    return {parse_count(rest.substr(0, colon), spec), parse_count(rest.substr(colon + 1), spec)};
}

} // namespace

RingPtr parse_ring_text(std::string_view text, std::size_t max_order) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, line_col(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "ring file must hold a JSON object");

    RawRing raw;
    const auto name = doc.find("name");
    if (name == doc.end() || !name->is_string()) throw Error(ErrorCode::ParseError, "missing string key 'name'");
    raw.name = name->get<std::string>();
    const auto order = doc.find("order");
    if (order == doc.end() || !order->is_number_integer() || order->get<std::int64_t>() < 0)
        throw Error(ErrorCode::ParseError, "missing non-negative integer key 'order'");
    raw.order = order->get<std::size_t>();
    raw.add = read_table(doc, "add");
    raw.mul = read_table(doc, "mul");
    if (const auto labels = doc.find("labels"); labels != doc.end()) {
        if (!labels->is_array()) throw Error(ErrorCode::ParseError, "'labels' must be an array of strings");
        std::vector<std::string> ls;
        for (const json& l : *labels) {
            if (!l.is_string()) throw Error(ErrorCode::ParseError, "'labels' must be an array of strings");
            ls.push_back(l.get<std::string>());
        }
        raw.labels = std::move(ls);
    }
    return validate_ring(raw, max_order);
}

RingPtr parse_ring_file(const std::filesystem::path& path, std::size_t max_order) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_ring_text(buf.str(), max_order);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        // Drop the code prefix before re-wrapping with the file name.
        std::string msg = e.what();
        msg.erase(0, msg.find(": ") + 2);
        throw Error(ErrorCode::ParseError, path.string() + ": " + msg);
    }
}

std::string ring_to_text(const FiniteRing& ring) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": " << json(ring.name()).dump() << ",\n";
    os << "  \"order\": " << ring.order() << ",\n";
    os << "  \"add\": ";
    write_table(os, ring, ring.add_table());
    os << ",\n  \"mul\": ";
    write_table(os, ring, ring.mul_table());
    if (!default_labels(ring)) os << ",\n  \"labels\": " << json(ring.labels()).dump(-1, ' ', false);
    os << "\n}\n";
    return os.str();
}

void write_ring_file(const FiniteRing& ring, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << ring_to_text(ring);
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

CorpusEntry generate(std::string_view spec, std::size_t max_order) {
    const std::string name(spec);
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::UnknownName, "unknown generator spec '" + name + "'");
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view rest = spec.substr(colon + 1);

    if (kind == "zmod") return CorpusEntry{name, zmod(parse_count(rest, spec), max_order), std::nullopt};
    if (kind == "matrix") {
        const auto [b, k] = two_counts(rest, spec);
        return CorpusEntry{name, matrix_ring(b, k, max_order), std::nullopt};
    }
    if (kind == "tri") {
        const auto [b, k] = two_counts(rest, spec);
        return CorpusEntry{name, upper_triangular(b, k, max_order), std::nullopt};
    }
    if (kind == "paper") return CorpusEntry{name, builtin_example(rest, max_order), std::nullopt};
    if (kind == "product") {
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw Error(ErrorCode::UnknownName, "expected product:A,B, got '" + name + "'");
        const auto left = generate(rest.substr(0, comma), max_order);
        const auto right = generate(rest.substr(comma + 1), max_order);
        ProductRing p = direct_product(left.ring, right.ring, max_order);
        RingPtr ring = p.ring;
        return CorpusEntry{name, std::move(ring), std::move(p)};
    }
    throw Error(ErrorCode::UnknownName, "unknown generator spec '" + name + "'");
}

CorpusEntry load_ring_argument(std::string_view arg, std::size_t max_order) {
    const std::filesystem::path path{std::string(arg)};
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec))
        return CorpusEntry{path.filename().string(), parse_ring_file(path, max_order), std::nullopt};
    return generate(arg, max_order);
}

RingHom parse_hom_text(std::string_view text, const std::filesystem::path& base_dir, std::size_t max_order) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, line_col(text, e.byte) + ": " + e.what());
    }
    const auto ring_ref = [&](const char* key) {
        const auto it = doc.find(key);
        if (it == doc.end() || !it->is_string())
            throw Error(ErrorCode::ParseError, std::string("missing string key '") + key + "'");
        const std::string ref = it->get<std::string>();
        std::error_code ec;
        const auto local = base_dir / ref;
        if (!base_dir.empty() && std::filesystem::is_regular_file(local, ec))
            return parse_ring_file(local, max_order);
        return load_ring_argument(ref, max_order).ring;
    };
    RingPtr domain = ring_ref("domain");
    RingPtr codomain = ring_ref("codomain");
    const auto map = doc.find("map");
    if (map == doc.end() || !map->is_array()) throw Error(ErrorCode::ParseError, "missing array key 'map'");
    std::vector<Index> values;
    for (const json& v : *map) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            throw Error(ErrorCode::ParseError, "'map' must hold non-negative integers");
        values.push_back(v.get<Index>());
    }
    return validate_hom(std::move(values), std::move(domain), std::move(codomain));
}

RingHom parse_hom_file(const std::filesystem::path& path, std::size_t max_order) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hom_text(buf.str(), path.parent_path(), max_order);
}

const std::vector<std::string>& default_corpus_specs() {
    static const std::vector<std::string> specs = [] {
        std::vector<std::string> s;
        for (int n = 2; n <= 16; ++n) s.push_back("zmod:" + std::to_string(n));
        for (const char* extra : {"matrix:2:2", "tri:2:2", "tri:3:2", "paper:ex-2-1-ii", "paper:ex-2-1-iii",
                                  "paper:ex-2-1-iv-zp(3)", "product:zmod:2,zmod:4", "product:zmod:4,zmod:9"})
            s.emplace_back(extra);
        return s;
    }();
    return specs;
}

std::vector<CorpusEntry> default_corpus(std::size_t max_order) {
    std::vector<CorpusEntry> out;
    for (const auto& spec : default_corpus_specs()) out.push_back(generate(spec, max_order));
    return out;
}

std::vector<CorpusEntry> load_corpus(std::string_view where, std::size_t max_order) {
    if (where == "default") return default_corpus(max_order);
    const std::filesystem::path dir{std::string(where)};
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) throw Error(ErrorCode::IoError, "not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
    std::vector<CorpusEntry> out;
    for (const auto& f : files) out.push_back(CorpusEntry{f.filename().string(), parse_ring_file(f, max_order), std::nullopt});
    return out;
}

} // namespace aprime
