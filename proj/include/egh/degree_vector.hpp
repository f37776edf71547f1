#ifndef EGH_DEGREE_VECTOR_HPP
#define EGH_DEGREE_VECTOR_HPP

#include <numeric>
#include <span>
#include <vector>

#include "egh/errors.hpp"

namespace egh {

// Prescribed degrees a = (a_1 <= ... <= a_n) of a regular sequence, with
// every a_i >= 2, plus the cached socle degree s = sum(a_i - 1) of the
// corresponding Artinian complete intersection.
class DegreeVector {
  public:
    explicit DegreeVector(std::vector<int> a) : a_(std::move(a)) {
        if (a_.empty()) throw input_error("empty degree vector");
        int prev = 2;
        for (int d : a_) {
            if (d < prev) throw input_error("degrees must satisfy 2 <= a_1 <= ... <= a_n");
            prev = d;
        }
        socle_ = std::accumulate(a_.begin(), a_.end(), 0) - static_cast<int>(a_.size());
    }

    static DegreeVector quadrics(int n) { return DegreeVector(std::vector<int>(static_cast<std::size_t>(n), 2)); }

    int size() const { return static_cast<int>(a_.size()); }
    int operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return a_; }
    int socle_degree() const { return socle_; }
    bool all_quadrics() const {
        for (int d : a_)
            if (d != 2) return false;
        return true;
    }

    bool operator==(const DegreeVector& o) const { return a_ == o.a_; }

  private:
    std::vector<int> a_;
    int socle_ = 0;
};

}  // namespace egh

#endif
