#pragma once

#include <vector>
#include <string>
#include <sstream>
#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qfock/laurent2.hpp"

namespace qfock {

// Partitions are weakly decreasing vectors of positive ints; rows and columns
// are 1-based throughout to match the coordinate conventions of the formulas.
using Partition = std::vector<int>;

inline int part_get(const Partition& lam, int i) {
    return (i >= 1 && i <= (int)lam.size()) ? lam[i - 1] : 0;
}

inline int part_size(const Partition& lam) {
    return std::accumulate(lam.begin(), lam.end(), 0);
}

inline int part_len(const Partition& lam) { return (int)lam.size(); }

// All partitions of n in the reverse-lexicographic order ((n), (n-1,1), ..., (1^n)).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rem, maxp); k >= 1; --k) {
            cur.push_back(k);
            self(self, rem - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m) {
        auto pm = partitions_of(m);
        out.insert(out.end(), pm.begin(), pm.end());
    }
    return out;
}

// Rows where a box can be added keeping a valid diagram.
inline std::vector<int> addable_rows(const Partition& lam) {
    std::vector<int> rows;
    for (int k = 1; k <= (int)lam.size() + 1; ++k)
        if (k == 1 || part_get(lam, k) + 1 <= part_get(lam, k - 1)) rows.push_back(k);
    return rows;
}

inline std::vector<int> removable_rows(const Partition& lam) {
    std::vector<int> rows;
    for (int k = 1; k <= (int)lam.size(); ++k)
        if (part_get(lam, k) > part_get(lam, k + 1)) rows.push_back(k);
    return rows;
}

inline Partition add_row(const Partition& lam, int k) {
    Partition l = lam;
    if (k > (int)l.size()) l.resize(k, 0);
    l[k - 1] += 1;
    while (!l.empty() && l.back() == 0) l.pop_back();
    for (std::size_t i = 1; i < l.size(); ++i)
        if (l[i] > l[i - 1]) throw std::invalid_argument("add_row: invalid row");
    return l;
}

inline Partition remove_row(const Partition& lam, int k) {
    if (k < 1 || k > (int)lam.size() || lam[k - 1] == 0)
        throw std::invalid_argument("remove_row: invalid row");
    Partition l = lam;
    l[k - 1] -= 1;
    while (!l.empty() && l.back() == 0) l.pop_back();
    for (std::size_t i = 1; i < l.size(); ++i)
        if (l[i] > l[i - 1]) throw std::invalid_argument("remove_row: invalid row");
    return l;
}

// Column-length convention: arm of box (i,j) counts boxes below in column j,
// leg counts boxes to the right in row i. (This is the convention the operator
// formulas use; note it is transposed relative to the common symmetric-function
// one.)
inline int arm(const Partition& lam, int i, int j) {
    int m = 0;
    for (int k = 1; k <= (int)lam.size(); ++k)
        if (part_get(lam, k) >= j) m = k;
    return m - i;
}

inline int leg(const Partition& lam, int i, int j) { return part_get(lam, i) - j; }

// Monomial character of box (i,j): t1^{j-1} t2^{i-1}.
inline Laurent2 box_char(int i, int j) { return Laurent2::monomial(j - 1, i - 1); }

struct Box {
    int i, j;
};

inline std::vector<Box> boxes_of(const Partition& lam) {
    std::vector<Box> bs;
    for (int i = 1; i <= (int)lam.size(); ++i)
        for (int j = 1; j <= lam[i - 1]; ++j) bs.push_back({i, j});
    return bs;
}

// Boxes of lam strictly left of (i,j) in row i.
inline std::vector<Box> row_boxes_before(const Partition& lam, int i, int j) {
    std::vector<Box> bs;
    for (int k = 1; k < j && k <= part_get(lam, i); ++k) bs.push_back({i, k});
    return bs;
}

// Boxes of lam strictly above (i,j) in column j.
inline std::vector<Box> col_boxes_above(const Partition& lam, int i, int j) {
    std::vector<Box> bs;
    for (int k = 1; k < i; ++k)
        if (j <= part_get(lam, k)) bs.push_back({k, j});
    return bs;
}

inline Partition conjugate(const Partition& lam) {
    Partition c;
    if (lam.empty()) return c;
    c.resize(lam[0], 0);
    for (int j = 1; j <= lam[0]; ++j)
        for (int i = 1; i <= (int)lam.size(); ++i)
            if (part_get(lam, i) >= j) c[j - 1] = i;
    return c;
}

// mu <= lam in dominance (both of the same size).
inline bool dominated_by(const Partition& mu, const Partition& lam) {
    int pm = 0, pl = 0;
    std::size_t n = std::max(mu.size(), lam.size());
    for (std::size_t i = 1; i <= n; ++i) {
        pm += part_get(mu, (int)i);
        pl += part_get(lam, (int)i);
        if (pm > pl) return false;
    }
    return pm == pl;
}

// Total order refining dominance: compare partial sums lexicographically
// (larger partial sums first => triangular Gram-Schmidt works top-down).
inline bool dominance_refining_less(const Partition& a, const Partition& b) {
    std::size_t n = std::max(a.size(), b.size());
    int pa = 0, pb = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        pa += part_get(a, (int)i);
        pb += part_get(b, (int)i);
        if (pa != pb) return pa > pb;
    }
    return false;
}

inline std::string part_str(const Partition& lam) {
    std::string s = "[";
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lam[i]);
    }
    return s + "]";
}

inline Partition part_parse(const std::string& s) {
    Partition lam;
    std::string body = s;
    if (!body.empty() && body.front() == '[') body = body.substr(1);
    if (!body.empty() && body.back() == ']') body.pop_back();
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        lam.push_back(std::stoi(tok));
    }
    for (std::size_t i = 1; i < lam.size(); ++i)
        if (lam[i] > lam[i - 1] || lam[i] <= 0)
            throw std::invalid_argument("not a partition: " + s);
    return lam;
}

}  // namespace qfock
