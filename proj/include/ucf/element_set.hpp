#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucf {

/// A subset of a ground set of at most 64 labeled elements, stored as one
/// machine word. Labels are 1-indexed: label x lives in bit x-1.
class ElementSet {
public:
    static constexpr int max_label = 64;

    constexpr ElementSet() noexcept = default;

    ElementSet(std::initializer_list<int> labels) {
        for (int x : labels) add(x);
    }

    static constexpr ElementSet from_bits(std::uint64_t bits) noexcept {
        ElementSet s;
        s.bits_ = bits;
        return s;
    }

    static ElementSet from_labels(const std::vector<int>& labels) {
        ElementSet s;
        for (int x : labels) s.add(x);
        return s;
    }

    /// The initial segment {1,...,t}.
    static ElementSet full(int t) {
        check_label_range(t, 0);
        return from_bits(t == 0 ? 0 : (~std::uint64_t{0} >> (64 - t)));
    }

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }

    void add(int label) {
        check_label(label);
        bits_ |= bit(label);
    }

    void remove(int label) {
        check_label(label);
        bits_ &= ~bit(label);
    }

    [[nodiscard]] bool contains(int label) const {
        check_label(label);
        return (bits_ & bit(label)) != 0;
    }

    [[nodiscard]] constexpr int cardinality() const noexcept { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }

    /// Smallest label present; throws on the empty set.
    [[nodiscard]] int min_element() const {
        if (empty()) throw std::domain_error("min_element of empty set");
        return std::countr_zero(bits_) + 1;
    }

    /// Largest label present; throws on the empty set.
    [[nodiscard]] int max_element() const {
        if (empty()) throw std::domain_error("max_element of empty set");
        return 64 - std::countl_zero(bits_);
    }

    [[nodiscard]] constexpr bool subset_of(ElementSet other) const noexcept {
        return (bits_ & ~other.bits_) == 0;
    }

    [[nodiscard]] constexpr bool intersects(ElementSet other) const noexcept {
        return (bits_ & other.bits_) != 0;
    }

    [[nodiscard]] constexpr ElementSet operator|(ElementSet o) const noexcept { return from_bits(bits_ | o.bits_); }
    [[nodiscard]] constexpr ElementSet operator&(ElementSet o) const noexcept { return from_bits(bits_ & o.bits_); }
    [[nodiscard]] constexpr ElementSet operator-(ElementSet o) const noexcept { return from_bits(bits_ & ~o.bits_); }
    [[nodiscard]] constexpr ElementSet operator^(ElementSet o) const noexcept { return from_bits(bits_ ^ o.bits_); }

    ElementSet& operator|=(ElementSet o) noexcept { bits_ |= o.bits_; return *this; }
    ElementSet& operator&=(ElementSet o) noexcept { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const ElementSet&) const noexcept = default;

    /// Labels in ascending order.
    [[nodiscard]] std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(cardinality()));
        for (std::uint64_t w = bits_; w != 0; w &= w - 1)
            out.push_back(std::countr_zero(w) + 1);
        return out;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int x : elements()) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
        return s + "}";
    }

private:
    static constexpr std::uint64_t bit(int label) noexcept {
        return std::uint64_t{1} << (label - 1);
    }
    static void check_label(int label) {
        check_label_range(label, 1);
    }
    static void check_label_range(int label, int lo) {
        if (label < lo || label > max_label)
            throw std::out_of_range("element label " + std::to_string(label) +
                                    " outside [" + std::to_string(lo) + ",64]");
    }

    std::uint64_t bits_ = 0;
};

}  // namespace ucf

template <>
struct std::hash<ucf::ElementSet> {
    std::size_t operator()(const ucf::ElementSet& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};
