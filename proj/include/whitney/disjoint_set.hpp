#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace whitney {

// Union-find with path halving and union by size.
class DisjointSet {
public:
    explicit DisjointSet(int size) : parent_(size), size_(size, 1), sets_(size) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // false if a and b were already in the same set
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --sets_;
        return true;
    }

    int set_count() const { return sets_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int sets_;
};

} // namespace whitney
