#include "egh/ring.hpp"

#include <unordered_set>

#include "egh/errors.hpp"

namespace egh {

RingContext::RingContext(int n, std::uint32_t p, std::vector<std::string> var_names)
    : n_(n), field_(p), var_names_(std::move(var_names)) {
    if (n < 1 || n > kMaxVars)
        throw input_error("number of variables must be in [1, 16]");
    if (var_names_.empty()) {
        var_names_.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) var_names_.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(var_names_.size()) != n)
        throw input_error("variable name list length does not match n");
    std::unordered_set<std::string> seen;
    for (const auto& name : var_names_) {
        if (name.empty()) throw input_error("empty variable name");
        if (!seen.insert(name).second)
            throw input_error("duplicate variable name: " + name);
    }
}

int RingContext::var_index(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (var_names_[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

}  // namespace egh
