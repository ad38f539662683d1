#include "hsx/face.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hsx/errors.hpp"

namespace hsx {

bool is_canonical(const Face& f) {
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (f[i - 1] >= f[i]) return false;
    }
    return true;
}

Face canonical_face(Face f) {
    std::sort(f.begin(), f.end());
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (f[i - 1] == f[i]) {
            throw InputError("face has repeated vertex " + std::to_string(f[i]));
        }
    }
    return f;
}

bool face_contains(const Face& big, const Face& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool faces_disjoint(const Face& a, const Face& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return false;
        }
    }
    return true;
}

Face face_union(const Face& a, const Face& b) {
    Face out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Face face_difference(const Face& a, const Face& b) {
    Face out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string face_to_string(const Face& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << ',';
        os << f[i];
    }
    os << '}';
    return os.str();
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double result = 1.0;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    // values used here are small enough to be exact; round away drift
    return std::round(result);
}

} // namespace hsx
