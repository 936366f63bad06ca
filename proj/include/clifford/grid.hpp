#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clifford {

/// Uniform discretization of [0, T] into `slots` intervals of width `width`.
/// Slot k (1-based) covers [(k-1)*width, k*width); the orthonormal basis
/// vector e_k is width^{-1/2} * (indicator of slot k).  Integrals over the
/// time axis become width * (sum over slots).
class TimeGrid {
public:
    TimeGrid(int slots, double width) : slots_(slots), width_(width) {
        if (slots < 1) throw std::invalid_argument("TimeGrid: slots must be >= 1");
        if (slots > 62) throw std::invalid_argument("TimeGrid: slots must be <= 62");
        if (!(width > 0.0)) throw std::invalid_argument("TimeGrid: width must be > 0");
    }

    [[nodiscard]] int slots() const { return slots_; }
    [[nodiscard]] double width() const { return width_; }
    [[nodiscard]] double horizon() const { return slots_ * width_; }

    friend bool operator==(const TimeGrid& a, const TimeGrid& b) {
        return a.slots_ == b.slots_ && a.width_ == b.width_;
    }
    friend bool operator!=(const TimeGrid& a, const TimeGrid& b) { return !(a == b); }

private:
    int slots_;
    double width_;
};

inline void require_same_grid(const TimeGrid& a, const TimeGrid& b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

/// A union of whole slots, standing in for a Borel subset of [0, T].
/// Stored as a bitmask: bit (k-1) set means slot k belongs to the set.
class SlotSet {
public:
    SlotSet() = default;
    explicit SlotSet(std::uint64_t bits) : bits_(bits) {}

    static SlotSet of(std::initializer_list<int> slots) {
        SlotSet s;
        for (int k : slots) s.insert(k);
        return s;
    }
    static SlotSet of(const std::vector<int>& slots) {
        SlotSet s;
        for (int k : slots) s.insert(k);
        return s;
    }
    /// Slots 1..k (the past up to and including slot k); k = 0 gives the empty set.
    static SlotSet prefix(int k) {
        if (k < 0) throw std::invalid_argument("SlotSet::prefix: negative k");
        return k == 0 ? SlotSet() : SlotSet((~std::uint64_t(0)) >> (64 - k));
    }
    static SlotSet full(const TimeGrid& grid) { return prefix(grid.slots()); }

    void insert(int k) {
        if (k < 1 || k > 62) throw std::invalid_argument("SlotSet: slot out of range");
        bits_ |= std::uint64_t(1) << (k - 1);
    }
    [[nodiscard]] bool contains(int k) const {
        return k >= 1 && k <= 62 && (bits_ >> (k - 1)) & 1;
    }
    [[nodiscard]] int count() const { return __builtin_popcountll(bits_); }
    [[nodiscard]] std::uint64_t bits() const { return bits_; }
    [[nodiscard]] bool empty() const { return bits_ == 0; }

    [[nodiscard]] SlotSet complement(const TimeGrid& grid) const {
        return SlotSet(~bits_ & SlotSet::full(grid).bits());
    }
    [[nodiscard]] bool subset_of(const SlotSet& other) const {
        return (bits_ & ~other.bits_) == 0;
    }
    [[nodiscard]] bool valid_for(const TimeGrid& grid) const {
        return (bits_ & ~SlotSet::full(grid).bits()) == 0;
    }

    [[nodiscard]] std::vector<int> to_list() const {
        std::vector<int> out;
        for (int k = 1; k <= 62; ++k)
            if (contains(k)) out.push_back(k);
        return out;
    }

    friend SlotSet operator|(SlotSet a, SlotSet b) { return SlotSet(a.bits_ | b.bits_); }
    friend SlotSet operator&(SlotSet a, SlotSet b) { return SlotSet(a.bits_ & b.bits_); }
    friend bool operator==(SlotSet a, SlotSet b) { return a.bits_ == b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Lebesgue measure of a slot union: width * |A|.
inline double measure(const TimeGrid& grid, const SlotSet& set) {
    if (!set.valid_for(grid)) throw std::invalid_argument("measure: set exceeds grid");
    return grid.width() * set.count();
}

}  // namespace clifford
