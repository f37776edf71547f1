#ifndef EGH_RING_HPP
#define EGH_RING_HPP

#include <string>
#include <vector>

#include "egh/prime_field.hpp"

namespace egh {

// Ambient data of the polynomial ring GF(p)[x_1..x_n]: the number of
// variables, the prime modulus and the variable names. Values are immutable
// after construction and cheap enough to copy around.
class RingContext {
  public:
    static constexpr int kMaxVars = 16;

    RingContext(int n, std::uint32_t p, std::vector<std::string> var_names = {});

    int nvars() const { return n_; }
    std::uint32_t modulus() const { return field_.modulus(); }
    const PrimeField& field() const { return field_; }
    const std::string& var_name(int i) const { return var_names_[i]; }
    const std::vector<std::string>& var_names() const { return var_names_; }

    // Index of a variable name, or -1 when unknown.
    int var_index(const std::string& name) const;

    // Same n and same p; variable names do not affect compatibility.
    bool compatible(const RingContext& other) const {
        return n_ == other.n_ && modulus() == other.modulus();
    }

  private:
    int n_;
    PrimeField field_;
    std::vector<std::string> var_names_;
};

}  // namespace egh

#endif
