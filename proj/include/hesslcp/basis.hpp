#ifndef HESSLCP_BASIS_HPP
#define HESSLCP_BASIS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hesslcp/error.hpp"

namespace hesslcp {

/// A subset of [n]: the indices whose columns are taken from -M in the
/// basis matrix. Stored as sorted, duplicate-free 0-based indices; all
/// human-facing text is 1-based.
class Basis {
public:
    Basis() = default;

    /// From 0-based indices in any order; duplicates are merged.
    explicit Basis(std::vector<std::size_t> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    /// From 1-based indices, as written in reports and data files.
    static Basis one_based(std::initializer_list<std::size_t> idx) { return one_based(std::vector<std::size_t>(idx)); }

    static Basis one_based(const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> m;
        m.reserve(idx.size());
        for (std::size_t i : idx) {
            if (i == 0) throw IndexOutOfRange("1-based index 0");
            m.push_back(i - 1);
        }
        return Basis(std::move(m));
    }

    static Basis from_mask(std::uint64_t mask) {
        std::vector<std::size_t> m;
        for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
            if (mask & 1U) m.push_back(i);
        return Basis(std::move(m));
    }

    /// {first, ..., last - 1} (0-based, half open).
    static Basis range(std::size_t first, std::size_t last) {
        std::vector<std::size_t> m;
        for (std::size_t i = first; i < last; ++i) m.push_back(i);
        return Basis(std::move(m));
    }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (std::size_t i : members_) {
            if (i >= 64) throw IndexOutOfRange("basis index too large for a 64-bit mask");
            m |= std::uint64_t{1} << i;
        }
        return m;
    }

    bool contains(std::size_t i) const { return std::binary_search(members_.begin(), members_.end(), i); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::span<const std::size_t> members() const noexcept { return members_; }

    /// Largest member + 1, or 0 for the empty set.
    std::size_t bound() const noexcept { return members_.empty() ? 0 : members_.back() + 1; }

    /// B xor {i}
    Basis toggled(std::size_t i) const {
        std::vector<std::size_t> m = members_;
        auto it = std::lower_bound(m.begin(), m.end(), i);
        if (it != m.end() && *it == i) m.erase(it);
        else m.insert(it, i);
        Basis b;
        b.members_ = std::move(m);
        return b;
    }

    Basis united(const Basis& other) const {
        std::vector<std::size_t> m;
        std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(), std::back_inserter(m));
        Basis b;
        b.members_ = std::move(m);
        return b;
    }

    /// Members i with i < k.
    Basis prefix(std::size_t k) const {
        Basis b;
        for (std::size_t i : members_)
            if (i < k) b.members_.push_back(i);
        return b;
    }

    /// Symmetric difference as a list of 0-based indices.
    std::vector<std::size_t> difference(const Basis& other) const {
        std::vector<std::size_t> d;
        std::set_symmetric_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(), std::back_inserter(d));
        return d;
    }

    /// 1-based indices.
    std::vector<std::size_t> one_based_members() const {
        std::vector<std::size_t> v;
        v.reserve(members_.size());
        for (std::size_t i : members_) v.push_back(i + 1);
        return v;
    }

    /// "{1,3,4}" with 1-based indices; "{}" for the empty basis.
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t k = 0; k < members_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(members_[k] + 1);
        }
        return s + '}';
    }

    friend bool operator==(const Basis&, const Basis&) = default;
    friend auto operator<=>(const Basis&, const Basis&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Basis& b) { return os << b.to_string(); }

private:
    std::vector<std::size_t> members_;
};

} // namespace hesslcp

#endif // HESSLCP_BASIS_HPP
