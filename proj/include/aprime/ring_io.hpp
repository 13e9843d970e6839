#pragma once

/**
 * @file ring_io.hpp
 * @brief Ring files, generator specs and corpora.
 *
 * A ring file is a JSON object with keys name, order, add, mul and an
 * optional labels array. Tables are 0-based index matrices; the zero element
 * is discovered during validation rather than fixed at index 0.
 *
 * Generator specs: zmod:N, matrix:B:K, tri:B:K, product:A,B (split at the
 * first comma), paper:ex-2-1-ii, paper:ex-2-1-iii, paper:ex-2-1-iv-zp(P).
 */

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aprime/theorems.hpp"

namespace aprime {

/// Parses and validates. Syntax errors raise ParseError with line and
/// column; schema problems raise ParseError naming the key; table problems
/// come from validate_ring.
RingPtr parse_ring_text(std::string_view text, std::size_t max_order = kDefaultMaxOrder);
RingPtr parse_ring_file(const std::filesystem::path& path, std::size_t max_order = kDefaultMaxOrder);

/// Canonical key order, one table row per line. Labels are written only when
/// they differ from the decimal indices.
std::string ring_to_text(const FiniteRing& ring);
void write_ring_file(const FiniteRing& ring, const std::filesystem::path& path);

/// Builds a ring from a generator spec; product specs keep their factors.
/// Throws UnknownName for anything unrecognised.
CorpusEntry generate(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

/// A path to an existing file, otherwise a generator spec.
CorpusEntry load_ring_argument(std::string_view arg, std::size_t max_order = kDefaultMaxOrder);

/// {"domain": <ring>, "codomain": <ring>, "map": [int]} where each <ring> is
/// a file path (relative to the hom file) or a generator spec. The map is
/// checked with validate_hom.
RingHom parse_hom_text(std::string_view text, const std::filesystem::path& base_dir = {},
                       std::size_t max_order = kDefaultMaxOrder);
RingHom parse_hom_file(const std::filesystem::path& path, std::size_t max_order = kDefaultMaxOrder);

const std::vector<std::string>& default_corpus_specs();
std::vector<CorpusEntry> default_corpus(std::size_t max_order = kDefaultMaxOrder);

/// Every *.json file in the directory, sorted by file name; "default" gives
/// the built-in corpus.
std::vector<CorpusEntry> load_corpus(std::string_view where, std::size_t max_order = kDefaultMaxOrder);

} // namespace aprime
