#ifndef EGH_OSEQUENCE_HPP
#define EGH_OSEQUENCE_HPP

#include <string>
#include <vector>

namespace egh {

// The sequence of Hilbert-function values of a graded module with no
// negative-degree components, indexed from degree 0. Reads beyond the stored
// support return 0.
class OSequence {
  public:
    OSequence() = default;
    explicit OSequence(std::vector<int> values) : values_(std::move(values)) {}

    int operator[](int d) const {
        if (d < 0 || d >= static_cast<int>(values_.size())) return 0;
        return values_[static_cast<std::size_t>(d)];
    }
    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const { return values_; }

    // Largest degree with a nonzero value, or -1 for the zero sequence.
    int last_nonzero() const {
        for (int d = size() - 1; d >= 0; --d)
            if (values_[static_cast<std::size_t>(d)] != 0) return d;
        return -1;
    }

    bool operator==(const OSequence& o) const;

    std::string to_string() const;

  private:
    std::vector<int> values_;
};

}  // namespace egh

#endif
