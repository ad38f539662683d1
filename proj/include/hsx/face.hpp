#pragma once

#include <string>
#include <vector>

namespace hsx {

using Vertex = int;

/// A face is a sorted, duplicate-free list of vertex ids.
/// Its level equals its cardinality.
using Face = std::vector<Vertex>;

/// True if sorted ascending with no repeats.
bool is_canonical(const Face& f);

/// Sorts a vertex list into canonical face form. Throws InputError on
/// repeated vertices.
Face canonical_face(Face f);

/// Subset test for canonical faces.
bool face_contains(const Face& big, const Face& small);

bool faces_disjoint(const Face& a, const Face& b);

Face face_union(const Face& a, const Face& b);

/// a minus b, assuming both canonical.
Face face_difference(const Face& a, const Face& b);

/// "{1,4,7}" — used in diagnostics and report ids.
std::string face_to_string(const Face& f);

/// Exact binomial coefficient as a double (0 outside 0 <= k <= n).
double binomial(int n, int k);

/// Calls fn(sub) for every size-m subset of a canonical face,
/// in lexicographic order.
template <typename F>
void for_each_subset(const Face& face, int m, F&& fn) {
    const int n = static_cast<int>(face.size());
    if (m < 0 || m > n) return;
    if (m == 0) {
        fn(Face{});
        return;
    }
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    Face sub(m);
    while (true) {
        for (int i = 0; i < m; ++i) sub[i] = face[idx[i]];
        fn(sub);
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace hsx
