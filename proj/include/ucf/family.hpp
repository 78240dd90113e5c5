#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucf/element_set.hpp"

namespace ucf {

/// Error raised while reading the family text format; carries the 1-based
/// line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

/// An ordered collection of distinct k-element sets together with its ground
/// set (the union of all members).
class Family {
public:
    /// Empty family of k-sets (k >= 1).
    explicit Family(int k) : k_(k) {
        if (k < 1 || k > ElementSet::max_label)
            throw std::domain_error("family set size k must be in [1,64]");
    }

    Family(int k, std::vector<ElementSet> sets) : Family(k) {
        for (const ElementSet& s : sets) push_back_checked(s);
    }

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
    [[nodiscard]] bool empty() const noexcept { return sets_.empty(); }
    [[nodiscard]] const std::vector<ElementSet>& sets() const noexcept { return sets_; }
    [[nodiscard]] const ElementSet& operator[](std::size_t i) const { return sets_.at(i); }
    [[nodiscard]] ElementSet ground() const noexcept { return ground_; }

    /// Appends a member, enforcing cardinality and distinctness.
    void push_back_checked(ElementSet s) {
        if (s.cardinality() != k_)
            throw std::domain_error("family member " + s.to_string() + " does not have cardinality " +
                                    std::to_string(k_));
        for (const ElementSet& t : sets_)
            if (t == s) throw std::domain_error("duplicate family member " + s.to_string());
        sets_.push_back(s);
        ground_ |= s;
    }

    [[nodiscard]] bool contains_member(ElementSet s) const noexcept {
        for (const ElementSet& t : sets_)
            if (t == s) return true;
        return false;
    }

    /// Number of members containing label x; x must lie in the ground set.
    [[nodiscard]] std::uint64_t degree(int x) const {
        if (!ground_.contains(x))
            throw std::domain_error("element " + std::to_string(x) + " outside ground set " +
                                    ground_.to_string());
        std::uint64_t d = 0;
        for (const ElementSet& s : sets_)
            if (s.contains(x)) ++d;
        return d;
    }

    bool operator==(const Family&) const = default;

    /// Family text format: one set per line, space-separated decimal labels;
    /// lines beginning '#' and blank lines ignored; duplicate sets rejected.
    static Family parse(std::istream& in);
    static Family parse_string(const std::string& text);

    /// Inverse of parse: one line per member, ascending labels.
    [[nodiscard]] std::string format() const;

private:
    int k_;
    std::vector<ElementSet> sets_;
    ElementSet ground_;
};

std::ostream& operator<<(std::ostream& os, const Family& f);

}  // namespace ucf
