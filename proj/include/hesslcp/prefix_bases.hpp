#ifndef HESSLCP_PREFIX_BASES_HPP
#define HESSLCP_PREFIX_BASES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hesslcp/basis.hpp"
#include "hesslcp/error.hpp"

namespace hesslcp {

/// Optimal bases B(-1), B(0), B(1), ..., B(k) of the leading subproblems
/// LCP(M_[k][k], q_[k]). B(-1) = B(0) = {} always.
class PrefixBases {
public:
    PrefixBases() : bases_(2) {}

    /// Largest k for which B(k) is known.
    std::size_t filled() const noexcept { return bases_.size() - 2; }

    const Basis& at(std::ptrdiff_t k) const {
        if (k < -1 || k > static_cast<std::ptrdiff_t>(filled()))
            throw PrefixIncomplete("B(" + std::to_string(k) + ") requested, known up to B(" + std::to_string(filled()) + ")");
        return bases_[static_cast<std::size_t>(k + 1)];
    }

    /// Records B(filled() + 1).
    void push(Basis b) {
        const std::size_t k = filled() + 1;
        if (b.bound() > k) throw InvalidArgument("B(" + std::to_string(k) + ") = " + b.to_string() + " is not a subset of [" + std::to_string(k) + "]");
        bases_.push_back(std::move(b));
    }

    friend bool operator==(const PrefixBases&, const PrefixBases&) = default;

private:
    std::vector<Basis> bases_;
};

} // namespace hesslcp

#endif // HESSLCP_PREFIX_BASES_HPP
