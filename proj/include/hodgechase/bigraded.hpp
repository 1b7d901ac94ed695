#pragma once

#include <map>
#include <string>
#include <utility>

#include "hodgechase/errors.hpp"

namespace hodgechase {

/// A (p,q) slot of a Deligne splitting.
struct PQ {
    int p = 0;
    int q = 0;
    friend bool operator==(const PQ&, const PQ&) = default;
    friend auto operator<=>(const PQ&, const PQ&) = default;
};

std::string to_string(const PQ& pq);

/// Dimensions of the Deligne splitting of one cohomology group, stored as a
/// sparse map (p,q) -> dim. Absent slots mean dimension zero. Indices live in
/// 0..4 so the same container serves H^0 and H^1 of curves as well as H^2 of
/// surfaces; surface-specific range checks happen at the point of use.
///
/// Everything downstream assumes conjugation symmetry dim(p,q) == dim(q,p);
/// violations are caught by validate().
class BigradedDims {
  public:
    static constexpr int kMaxIndex = 4;

    BigradedDims() = default;
    BigradedDims(std::initializer_list<std::pair<PQ, long>> init) {
        for (const auto& [pq, d] : init)
            set(pq.p, pq.q, d);
    }

    long at(int p, int q) const {
        auto it = entries_.find(PQ{p, q});
        return it == entries_.end() ? 0 : it->second;
    }

    void set(int p, int q, long dim) {
        check_slot(p, q);
        if (dim < 0)
            throw Error("negative dimension at " + to_string(PQ{p, q}));
        if (dim == 0)
            entries_.erase(PQ{p, q});
        else
            entries_[PQ{p, q}] = dim;
    }

    void add(int p, int q, long dim) { set(p, q, at(p, q) + dim); }

    BigradedDims& operator+=(const BigradedDims& other) {
        for (const auto& [pq, d] : other.entries_)
            add(pq.p, pq.q, d);
        return *this;
    }
    friend BigradedDims operator+(BigradedDims a, const BigradedDims& b) { return a += b; }

    bool symmetric() const {
        for (const auto& [pq, d] : entries_)
            if (at(pq.q, pq.p) != d)
                return false;
        return true;
    }

    /// Throws unless all stored dimensions are symmetric. Nonnegativity and
    /// index range are enforced at insertion time.
    void validate() const {
        if (!symmetric())
            throw Error("bigraded dimensions are not (p,q)-symmetric: " + str());
    }

    bool empty() const { return entries_.empty(); }
    long total() const {
        long t = 0;
        for (const auto& [pq, d] : entries_)
            t += d;
        return t;
    }

    const std::map<PQ, long>& entries() const { return entries_; }

    friend bool operator==(const BigradedDims&, const BigradedDims&) = default;

    std::string str() const;

    /// {(1,0):g, (0,1):g} -- pure weight-one part of genus g.
    static BigradedDims weight_one(long genus) {
        BigradedDims b;
        b.set(1, 0, genus);
        b.set(0, 1, genus);
        return b;
    }
    /// {(0,0):d} -- weight-zero part.
    static BigradedDims weight_zero(long dim) {
        BigradedDims b;
        b.set(0, 0, dim);
        return b;
    }

  private:
    static void check_slot(int p, int q) {
        if (p < 0 || q < 0 || p > kMaxIndex || q > kMaxIndex)
            throw Error("bigraded index (" + std::to_string(p) + "," + std::to_string(q) +
                        ") out of range 0.." + std::to_string(kMaxIndex));
    }

    std::map<PQ, long> entries_;
};

}  // namespace hodgechase
