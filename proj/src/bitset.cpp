#include "aprime/bitset.hpp"

#include "aprime/error.hpp"

namespace aprime {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::BadTableShape: return "BadTableShape";
    case ErrorCode::NotAbelianGroup: return "NotAbelianGroup";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::ImproperIdeal: return "ImproperIdeal";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotTwoSided: return "NotTwoSided";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotAdditive: return "NotAdditive";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::UnknownTheoremId: return "UnknownTheoremId";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

void Bitset::set_all() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (const auto tail = n_ & 63; tail != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << tail) - 1;
}

std::strong_ordering canonical_order(const Bitset& a, const Bitset& b) noexcept {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
        if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<std::size_t> Bitset::members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::size_t Bitset::hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ n_;
    for (auto w : words_) {
        h ^= w;
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

} // namespace aprime
